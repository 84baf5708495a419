//! Subspaces of a fixed coordinate space, held as canonical echelonized
//! bases. Two subspaces are equal as values exactly when they are equal as
//! sets of vectors, so `==` is the membership-level comparison.

use crate::field::{Field, Scalar};
use crate::linalg::{vec_is_zero, vec_scale, vec_sub, Matrix};

/// A subspace of `field^n`, stored as a reduced-row-echelon basis with no
/// zero rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Span of the rows of `m` (rows need not be independent).
    pub fn from_rows(m: &Matrix) -> Subspace {
        Subspace { basis: m.echelonize().matrix.trim_zero_rows() }
    }

    /// Span of a list of row vectors.
    pub fn from_vecs(field: &Field, vecs: Vec<Vec<Scalar>>, ambient: usize) -> Subspace {
        let m = Matrix::from_rows(field.clone(), vecs, ambient)
            .expect("span generators must match the ambient dimension");
        Subspace::from_rows(&m)
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field.clone(), 0, ambient) }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field.clone(), ambient) }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// The canonical echelonized basis (rows).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.rows_iter()
    }

    /// Pivot columns of the canonical basis, strictly increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis.echelonize().pivots
    }

    /// Residual of `v` after reduction against the basis; zero iff `v` lies
    /// in the subspace. Reduction is linear in `v`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field().clone();
        let mut r = v.to_vec();
        for (row, &pc) in self.basis.rows_iter().zip(self.pivots().iter()) {
            if !f.is_zero(&r[pc]) {
                let factor = r[pc].clone();
                r = vec_sub(&f, &r, &vec_scale(&f, &factor, row));
            }
        }
        r
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        vec_is_zero(self.field(), &self.reduce(v))
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|v| self.contains_vec(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    /// For an echelonized basis these are just the entries of `v` at the
    /// pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&pc| v[pc].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert!(self.field() == other.field(), "field mismatch in subspace sum");
        assert!(self.ambient_dim() == other.ambient_dim(), "ambient mismatch in sum");
        Subspace::from_rows(&self.basis.stack(&other.basis))
    }

    /// Intersection via the left kernel of the stacked bases: a combination
    /// `x·A = y·B` is recovered from relations among the rows of `[A; B]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert!(self.field() == other.field(), "field mismatch in intersection");
        assert!(self.ambient_dim() == other.ambient_dim(), "ambient mismatch in intersection");
        let f = self.field().clone();
        let a = self.dim();
        let stacked = self.basis.stack(&other.basis);
        let relations = stacked.transpose().kernel();
        let mut rows = Vec::new();
        for rel in relations.rows_iter() {
            // x = rel[0..a] combines rows of A into an intersection vector.
            let mut v = vec![f.zero(); self.ambient_dim()];
            for (i, coeff) in rel.iter().take(a).enumerate() {
                if f.is_zero(coeff) {
                    continue;
                }
                let scaled = vec_scale(&f, coeff, self.basis.row(i));
                v = crate::linalg::vec_add(&f, &v, &scaled);
            }
            rows.push(v);
        }
        Subspace::from_vecs(&f, rows, self.ambient_dim())
    }

    /// The matrix `R` with `R·v^T = reduce(v)^T`: identity minus projection
    /// onto the basis through the pivot coordinates. `v` lies in the
    /// subspace iff `R·v^T = 0`.
    pub fn residual_matrix(&self) -> Matrix {
        let f = self.field().clone();
        let n = self.ambient_dim();
        let mut r = Matrix::identity(f.clone(), n);
        // Column pc of R becomes e_{pc} minus the transposed basis row; the
        // RREF property (pivot columns are elementary) makes the sequential
        // reduction equal to this single linear map.
        for (row, &pc) in self.basis.rows_iter().zip(self.pivots().iter()) {
            for j in 0..n {
                let v = f.sub(r.get(j, pc), &row[j]);
                r.set(j, pc, v);
            }
        }
        r
    }

    /// Ambient coordinate positions *not* used as pivots, ascending: the
    /// canonical complement positions for quotient constructions.
    pub fn complement_positions(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient_dim()).filter(|c| !pivots.contains(c)).collect()
    }

    /// Canonical complement: the span of the standard basis vectors at the
    /// non-pivot positions.
    pub fn complement_witness(&self) -> Subspace {
        let f = self.field().clone();
        let n = self.ambient_dim();
        let rows: Vec<Vec<Scalar>> = self
            .complement_positions()
            .into_iter()
            .map(|c| crate::linalg::unit_vec(&f, n, c))
            .collect();
        Subspace::from_vecs(&f, rows, n)
    }
}

/// Incrementally maintained reduced echelon basis; the workhorse behind
/// ideal spinning, where rows arrive one bracket at a time.
#[derive(Clone, Debug)]
pub(crate) struct EchelonAccumulator {
    field: Field,
    ambient: usize,
    /// Rows in reduced form, ordered by pivot column.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonAccumulator {
    pub fn new(field: Field, ambient: usize) -> EchelonAccumulator {
        EchelonAccumulator { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Residual of `v` against the current rows.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&r[pc]) {
                let factor = r[pc].clone();
                r = vec_sub(f, &r, &vec_scale(f, &factor, row));
            }
        }
        r
    }

    /// Inserts `v` if independent; returns the normalized new row, or `None`
    /// if `v` was already in the span. Keeps the basis fully reduced.
    pub fn insert(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field.clone();
        let r = self.reduce(v);
        let lead = r.iter().position(|c| !f.is_zero(c))?;
        let inv = f.inv(&r[lead]).expect("leading entry is nonzero");
        let new_row = vec_scale(&f, &inv, &r);
        // Back-eliminate the new pivot column from the existing rows.
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[lead]) {
                let factor = row[lead].clone();
                *row = vec_sub(&f, row, &vec_scale(&f, &factor, &new_row));
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, new_row.clone());
        Some(new_row)
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_vecs(&self.field, self.rows.clone(), self.ambient)
    }
}
