//! Lie rings presented by structure constants.
//!
//! A ring of dimension `d` stores one coefficient vector `c_{ij}` per basis
//! pair `i < j`; brackets extend bilinearly and antisymmetrically, with
//! `[b_i, b_i] = 0`. Nothing here assumes the Jacobi identity — call
//! [`LieRing::verify_jacobi`] to check it, which is how the census filters
//! candidate tables.

use crate::field::{Field, Scalar};
use crate::linalg::{vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec, Matrix};
use crate::{Error, Result};

/// A finite-dimensional algebra with an antisymmetric bracket, given by its
/// structure constants on a fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieRing {
    field: Field,
    dim: usize,
    /// `table[pair_index(i, j)]` is `[b_i, b_j]` for `i < j`, an ambient
    /// coordinate vector of length `dim`.
    table: Vec<Vec<Scalar>>,
}

/// Outcome of a Jacobi check: all failing basis triples `(i, j, k)` with
/// `i < j < k`, each with the nonzero cyclic sum it produced.
#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub holds: bool,
    pub failures: Vec<(usize, usize, usize, Vec<Scalar>)>,
}

pub(crate) fn pair_index(i: usize, j: usize, dim: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

impl LieRing {
    /// The abelian ring of the given dimension: every bracket is zero.
    pub fn abelian(field: Field, dim: usize) -> LieRing {
        let table = vec![zero_vec(&field, dim); dim * dim.saturating_sub(1) / 2];
        LieRing { field, dim, table }
    }

    /// Builds a ring from the brackets of basis pairs. Pairs may be listed in
    /// any order; omitted pairs are zero; indices are 0-based with `i < j`.
    pub fn from_pairs(
        field: Field,
        dim: usize,
        pairs: impl IntoIterator<Item = ((usize, usize), Vec<Scalar>)>,
    ) -> Result<LieRing> {
        let mut ring = LieRing::abelian(field, dim);
        for ((i, j), v) in pairs {
            if i >= j || j >= dim {
                return Err(Error::InvalidTable(format!(
                    "bracket pair ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::InvalidTable(format!(
                    "bracket coefficient vector of length {} in dimension {dim}",
                    v.len()
                )));
            }
            for s in &v {
                if !ring.field.validate(s) {
                    return Err(Error::InvalidTable(format!(
                        "non-canonical scalar {s} in bracket ({i}, {j})"
                    )));
                }
            }
            ring.table[pair_index(i, j, dim)] = v;
        }
        Ok(ring)
    }

    /// Builds a ring from integer structure constants (mapped through the
    /// canonical `Z -> field` homomorphism).
    pub fn from_int_pairs(
        field: Field,
        dim: usize,
        pairs: &[((usize, usize), &[i64])],
    ) -> LieRing {
        let mapped = pairs.iter().map(|((i, j), v)| {
            ((*i, *j), v.iter().map(|&c| field.from_int(c)).collect::<Vec<_>>())
        });
        LieRing::from_pairs(field.clone(), dim, mapped).expect("integer table is well-formed")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The bracket `[b_i, b_j]` of two basis vectors, with antisymmetry
    /// applied for `i > j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => zero_vec(&self.field, self.dim),
            Ordering::Less => self.table[pair_index(i, j, self.dim)].clone(),
            Ordering::Greater => {
                crate::linalg::vec_neg(&self.field, &self.table[pair_index(j, i, self.dim)])
            }
        }
    }

    /// Raw table entry for `i < j` (no clone).
    pub(crate) fn table_entry(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[pair_index(i, j, self.dim)]
    }

    /// All `(i, j, c_{ij})` with `i < j` and `c_{ij} != 0`.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize, &[Scalar])> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let c = self.table_entry(i, j);
                if !vec_is_zero(&self.field, c) {
                    out.push((i, j, c));
                }
            }
        }
        out
    }

    /// `[b_i, y]` for a basis vector against an arbitrary coordinate vector:
    /// the linear expansion over the table row of `i`.
    pub fn bracket_basis_vec(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        assert!(y.len() == self.dim, "element length mismatch");
        let f = &self.field;
        let mut acc = zero_vec(f, self.dim);
        for (m, ym) in y.iter().enumerate() {
            if m == i || f.is_zero(ym) {
                continue;
            }
            let c = self.basis_bracket(i, m);
            acc = vec_add(f, &acc, &vec_scale(f, ym, &c));
        }
        acc
    }

    /// The bilinear bracket `[x, y]` of two coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert!(x.len() == self.dim && y.len() == self.dim, "element length mismatch");
        let f = &self.field;
        let mut acc = zero_vec(f, self.dim);
        for i in 0..self.dim {
            if f.is_zero(&x[i]) && f.is_zero(&y[i]) {
                continue;
            }
            for j in (i + 1)..self.dim {
                // coefficient of c_ij is x_i y_j - x_j y_i
                let a = f.mul(&x[i], &y[j]);
                let b = f.mul(&x[j], &y[i]);
                let coeff = f.sub(&a, &b);
                if f.is_zero(&coeff) {
                    continue;
                }
                let c = self.table_entry(i, j);
                acc = vec_add(f, &acc, &vec_scale(f, &coeff, c));
            }
        }
        acc
    }

    /// The matrix of `ad_x = [x, ·]` acting on column vectors: column `j`
    /// holds the coordinates of `[x, b_j]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Matrix {
        assert!(x.len() == self.dim, "element length mismatch");
        let f = self.field.clone();
        let mut m = Matrix::zeros(f.clone(), self.dim, self.dim);
        for j in 0..self.dim {
            // [x, b_j] = -[b_j, x]
            let col = crate::linalg::vec_neg(&f, &self.bracket_basis_vec(j, x));
            for i in 0..self.dim {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    /// Bilinearity makes these triples sufficient.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let f = &self.field;
        let mut failures = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let t1 = self.bracket_basis_vec(i, self.table_entry(j, k));
                    let t3 = self.bracket_basis_vec(k, self.table_entry(i, j));
                    // [b_j, [b_k, b_i]] = -[b_j, [b_i, b_k]]
                    let t2 = self.bracket_basis_vec(j, self.table_entry(i, k));
                    let sum = vec_sub(f, &vec_add(f, &t1, &t3), &t2);
                    if !vec_is_zero(f, &sum) {
                        failures.push((i, j, k, sum));
                    }
                }
            }
        }
        JacobiReport { holds: failures.is_empty(), failures }
    }

    /// True when every bracket vanishes.
    pub fn is_abelian_ring(&self) -> bool {
        self.table.iter().all(|c| vec_is_zero(&self.field, c))
    }

    /// The standard basis row `e_i` as an element.
    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        crate::linalg::unit_vec(&self.field, self.dim, i)
    }

    /// Validates that `x` is a well-formed element of this ring.
    pub fn validate_element(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in dimension {}",
                x.len(),
                self.dim
            )));
        }
        if !x.iter().all(|s| self.field.validate(s)) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }
}
