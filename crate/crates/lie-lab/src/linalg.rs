//! Dense exact matrices and reduced row echelon form.
//!
//! Conventions used throughout the crate:
//!
//! * Vectors are rows when they describe (spans of) elements and columns when
//!   a matrix acts on them; [`Matrix::kernel`] returns the right null space
//!   with its vectors laid out as rows.
//! * Echelonization always means the *reduced* row echelon form with leading
//!   ones, so equal row spaces produce byte-identical matrices.

use crate::field::{Field, Scalar};
use crate::{Error, Result};

/// Dense matrix over a single ground field, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::echelonize`]: the reduced form together with its rank
/// and pivot columns (strictly increasing).
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have the same length
    /// and every entry must be canonical for `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {}-column matrix",
                    row.len(),
                    cols
                )));
            }
            for s in row {
                if !field.validate(s) {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(Matrix { field, rows: n, cols, data })
    }

    /// Builds a matrix of integer entries under the canonical map `Z -> field`.
    pub fn from_ints(field: Field, entries: &[&[i64]]) -> Matrix {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            assert!(row.len() == cols, "ragged integer matrix");
            for &v in *row {
                data.push(field.from_int(v));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| self.field.is_zero(s))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "field mismatch in matrix add");
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in add");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "field mismatch in matrix sub");
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in sub");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(c, a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "field mismatch in matrix mul");
        assert!(self.cols == other.rows, "shape mismatch in mul");
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    let cur = out.get(i, j);
                    let sum = f.add(cur, &prod);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    /// Matrix power; `pow(0)` is the identity (square matrices only).
    pub fn pow(&self, n: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity(self.field.clone(), self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies the matrix to a column vector, returning a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert!(v.len() == self.cols, "vector length mismatch in apply");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if f.is_zero(a) || f.is_zero(&v[j]) {
                        continue;
                    }
                    acc = f.add(&acc, &f.mul(a, &v[j]));
                }
                acc
            })
            .collect()
    }

    /// Stacks `self` on top of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "field mismatch in stack");
        assert!(self.cols == other.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form with leading ones. Deterministic: pivots are
    /// chosen as the first row with a nonzero entry in the scan column.
    pub fn echelonize(&self) -> Echelon {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let leadrec = f.inv(m.get(pivot_row, col)).expect("nonzero pivot");
            m.scale_row(pivot_row, &leadrec);
            for r in 0..m.rows {
                if r != pivot_row && !f.is_zero(m.get(r, col)) {
                    let factor = m.get(r, col).clone();
                    m.subtract_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        Echelon { rank: pivots.len(), pivots, matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.echelonize().rank
    }

    /// Echelonized basis of the right null space: every returned row `v`
    /// satisfies `self * v^T = 0`.
    pub fn kernel(&self) -> Matrix {
        let f = self.field.clone();
        let ech = self.echelonize();
        let pivots = &ech.pivots;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(ech.matrix.get(r, fc));
            }
            rows.push(v);
        }
        let raw = Matrix::from_rows(f, rows, self.cols).expect("kernel rows are well-formed");
        // Canonicalize: the standard free-variable basis is not reduced.
        raw.echelonize().matrix.trim_zero_rows()
    }

    /// Echelonized basis of the eigenspace `ker(self - lambda I)`.
    pub fn eigenspace(&self, lambda: &Scalar) -> Matrix {
        assert!(self.is_square(), "eigenspace of a non-square matrix");
        let shift = Matrix::identity(self.field.clone(), self.rows).scale(lambda);
        self.sub(&shift).kernel()
    }

    /// Inverse of a square matrix via the augmented echelon form.
    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let f = self.field.clone();
        let mut aug = Matrix::zeros(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let ech = aug.echelonize();
        if ech.pivots.iter().take_while(|&&c| c < n).count() < n {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, ech.matrix.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// One solution `x` (columns of free variables set to zero) of
    /// `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert!(b.len() == self.rows, "right-hand side length mismatch");
        let f = self.field.clone();
        let mut aug = Matrix::zeros(f.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let ech = aug.echelonize();
        if ech.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.matrix.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Drops all-zero rows (used after echelonizing spanning sets).
    pub fn trim_zero_rows(&self) -> Matrix {
        let f = self.field.clone();
        let rows: Vec<Vec<Scalar>> = self
            .rows_iter()
            .filter(|r| !r.iter().all(|s| f.is_zero(s)))
            .map(|r| r.to_vec())
            .collect();
        Matrix::from_rows(f, rows, self.cols).expect("trim preserves shape")
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.field.mul(self.get(r, j), c);
            self.set(r, j, v);
        }
    }

    /// row_r -= factor * row_src
    fn subtract_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let delta = self.field.mul(factor, self.get(src, j));
            let v = self.field.sub(self.get(r, j), &delta);
            self.set(r, j, v);
        }
    }
}

/// Row-vector helpers shared by the Lie-ring layer.
pub fn vec_add(f: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert!(a.len() == b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert!(a.len() == b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

pub fn vec_neg(f: &Field, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| f.neg(x)).collect()
}

pub fn vec_is_zero(f: &Field, a: &[Scalar]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

pub fn zero_vec(f: &Field, n: usize) -> Vec<Scalar> {
    vec![f.zero(); n]
}

/// Standard basis row `e_i` of length `n`.
pub fn unit_vec(f: &Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(f, n);
    v[i] = f.one();
    v
}

/// Row vector times matrix: `(v M)_j = Σ_i v_i M_{ij}`.
pub fn row_times_matrix(f: &Field, v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    assert!(v.len() == m.rows(), "row length mismatch in row_times_matrix");
    (0..m.cols())
        .map(|j| {
            let mut acc = f.zero();
            for (i, vi) in v.iter().enumerate() {
                if f.is_zero(vi) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(vi, m.get(i, j)));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn echelonize_identity_and_zero_are_fixed_points() {
        let id = Matrix::identity(f5(), 3);
        let e = id.echelonize();
        assert_eq!(e.matrix, id);
        assert_eq!(e.rank, 3);
        let z = Matrix::zeros(f5(), 2, 4);
        let e = z.echelonize();
        assert_eq!(e.matrix, z);
        assert_eq!(e.rank, 0);
    }

    #[test]
    fn echelonize_collapses_dependent_rows() {
        // [[2,4],[1,2]] over F_5 -> [[1,2],[0,0]], rank 1.
        let m = Matrix::from_ints(f5(), &[&[2, 4], &[1, 2]]);
        let e = m.echelonize();
        assert_eq!(e.rank, 1);
        assert_eq!(e.pivots, vec![0]);
        assert_eq!(e.matrix, Matrix::from_ints(f5(), &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn echelonize_is_idempotent() {
        let m = Matrix::from_ints(f5(), &[&[1, 2, 3], &[4, 0, 1], &[0, 2, 4]]);
        let once = m.echelonize().matrix;
        let twice = once.echelonize().matrix;
        assert_eq!(once, twice);
    }

    #[test]
    fn kernel_of_identity_is_empty_and_of_zero_is_full() {
        let id = Matrix::identity(f5(), 3);
        assert_eq!(id.kernel().rows(), 0);
        let z = Matrix::zeros(f5(), 3, 3);
        let k = z.kernel();
        assert_eq!(k, Matrix::identity(f5(), 3));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = Matrix::from_ints(f5(), &[&[1, 2, 3], &[2, 4, 1]]);
        let k = m.kernel();
        assert_eq!(m.rank() + k.rows(), m.cols());
        for v in k.rows_iter() {
            let out = m.apply(v);
            assert!(vec_is_zero(&f5(), &out));
        }
    }

    #[test]
    fn kernel_is_canonical_row_reduced() {
        // ker of [1 1] over F_5 is spanned by (1, -1) = (1, 4) after reduction.
        let m = Matrix::from_ints(f5(), &[&[1, 1]]);
        assert_eq!(m.kernel(), Matrix::from_ints(f5(), &[&[1, 4]]));
    }

    #[test]
    fn eigenspace_examples() {
        // Zero map: eigenvalue 0 has the full space.
        let z = Matrix::zeros(f5(), 3, 3);
        assert_eq!(z.eigenspace(&f5().zero()).rows(), 3);
        // Identity: eigenvalue 2 is empty over F_5.
        let id = Matrix::identity(f5(), 3);
        assert_eq!(id.eigenspace(&f5().from_int(2)).rows(), 0);
        // diag(0, 2, -2): eigenvalue 2 is the second axis.
        let d = Matrix::from_ints(f5(), &[&[0, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(d.eigenspace(&f5().from_int(2)), Matrix::from_ints(f5(), &[&[0, 1, 0]]));
    }

    #[test]
    fn inverse_round_trips_and_rejects_singular() {
        let m = Matrix::from_ints(f5(), &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f5(), 2));
        assert_eq!(inv.mul(&m), Matrix::identity(f5(), 2));
        let s = Matrix::from_ints(f5(), &[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn solve_finds_particular_solution() {
        let m = Matrix::from_ints(f5(), &[&[1, 1, 0], &[0, 1, 1]]);
        let b = vec![f5().from_int(3), f5().from_int(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        // Inconsistent system.
        let m = Matrix::from_ints(f5(), &[&[1, 0], &[1, 0]]);
        let b = vec![f5().from_int(1), f5().from_int(2)];
        assert!(m.solve(&b).is_none());
    }

    #[test]
    fn rational_echelon_is_exact() {
        let q = Field::rationals();
        let m = Matrix::from_ints(q.clone(), &[&[2, 4, 6], &[1, 3, 5]]);
        let e = m.echelonize();
        assert_eq!(e.rank, 2);
        // First row must be (1, 0, -1): exact cancellation, no drift.
        assert_eq!(e.matrix.row(0)[2], q.from_int(-1));
    }
}
