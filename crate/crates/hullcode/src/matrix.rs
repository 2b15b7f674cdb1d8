//! Dense exact matrices over a [`Field`]: reduced row echelon form, rank,
//! kernels, products, conjugate transpose, Toeplitz and monomial matrices,
//! and matrix polynomials. Matrices are immutable values; every operation
//! returns a fresh matrix, which keeps provenance trees and concurrent
//! enumeration safe.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldError, FieldRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("toeplitz sequences must have length n-1")]
    LengthMismatch,
    #[error("matrices belong to different fields")]
    FieldMismatch,
    #[error("column map is not a permutation")]
    NotAPermutation,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Row-major dense matrix of element codes over a shared field.
#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

/// Result of reduced row echelon elimination.
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Anti-diagonal permutation J with J^2 = I.
    pub fn exchange(field: &FieldRef, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, n - 1 - i, 1);
        }
        m
    }

    pub fn from_rows(field: &FieldRef, rows: &[Vec<u16>]) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let q = field.order();
        let data: Vec<u16> = rows.iter().flatten().copied().collect();
        assert!(data.iter().all(|&c| (c as u32) < q), "entry out of field");
        Matrix {
            field: Arc::clone(field),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: &FieldRef,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u16,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: u16) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u16>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0)
    }

    fn same_field(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(MatrixError::FieldMismatch)
        }
    }

    /// The unique reduced row echelon form, with rank and pivot columns.
    /// First-nonzero pivot selection; arithmetic is exact so no pivoting
    /// heuristics are involved.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(sel) = (r..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            if sel != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(sel, j));
                    m.set(r, j, b);
                    m.set(sel, j, a);
                }
            }
            let inv = f.inv(m.get(r, col)).expect("pivot is nonzero");
            for j in col..m.cols {
                m.set(r, j, f.mul(inv, m.get(r, j)));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, col);
                if factor == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space {x : M x^T = 0}, one vector per row.
    /// Returns a 0-row matrix when M has full column rank.
    pub fn kernel(&self) -> Matrix {
        let f = &self.field;
        let red = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in red.pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&j| pivot_set[j].is_none()).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.set(row, fc, 1);
            for (i, &p) in red.pivots.iter().enumerate() {
                out.set(row, p, f.neg(red.matrix.get(i, fc)));
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Entrywise a^(p^e).
    pub fn frobenius_map(&self, e: u32) -> Matrix {
        let f = &self.field;
        Matrix::from_fn(f, self.rows, self.cols, |i, j| f.frobenius(self.get(i, j), e))
    }

    /// Entrywise conjugation (no transpose). Needs Hermitian structure.
    pub fn conjugate_entries(&self) -> Result<Matrix, MatrixError> {
        if !self.field.has_hermitian() {
            return Err(FieldError::NoHermitianStructure.into());
        }
        Ok(self.frobenius_map(self.field.degree() / 2))
    }

    /// Conjugate transpose A^dagger = [a_ji^sqrt(q)].
    pub fn conj_transpose(&self) -> Result<Matrix, MatrixError> {
        Ok(self.conjugate_entries()?.transpose())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(t, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: u16) -> Matrix {
        let f = &self.field;
        Matrix::from_fn(f, self.rows, self.cols, |i, j| f.mul(c, self.get(i, j)))
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::DimensionMismatch("add".into()));
        }
        let f = &self.field;
        Ok(Matrix::from_fn(f, self.rows, self.cols, |i, j| {
            f.add(self.get(i, j), rhs.get(i, j))
        }))
    }

    /// [A | B]
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(MatrixError::DimensionMismatch("hstack".into()));
        }
        Ok(Matrix::from_fn(
            &self.field,
            self.rows,
            self.cols + rhs.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j)
                } else {
                    rhs.get(i, j - self.cols)
                }
            },
        ))
    }

    /// [A ; B]
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_field(rhs)?;
        if self.cols != rhs.cols {
            return Err(MatrixError::DimensionMismatch("vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block diagonal of the given matrices.
    pub fn block_diag(blocks: &[&Matrix]) -> Result<Matrix, MatrixError> {
        assert!(!blocks.is_empty());
        let field = &blocks[0].field;
        for b in blocks {
            if b.field != *field {
                return Err(MatrixError::FieldMismatch);
            }
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    /// Result column j = self column perm[j].
    pub fn permute_cols(&self, perm: &[usize]) -> Result<Matrix, MatrixError> {
        if perm.len() != self.cols {
            return Err(MatrixError::NotAPermutation);
        }
        let mut seen = vec![false; self.cols];
        for &p in perm {
            if p >= self.cols || seen[p] {
                return Err(MatrixError::NotAPermutation);
            }
            seen[p] = true;
        }
        Ok(Matrix::from_fn(&self.field, self.rows, self.cols, |i, j| {
            self.get(i, perm[j])
        }))
    }

    /// Exactly one nonzero entry in each row and each column.
    pub fn is_monomial(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut col_hit = vec![false; self.cols];
        for i in 0..self.rows {
            let mut row_hits = 0;
            for j in 0..self.cols {
                if self.get(i, j) != 0 {
                    row_hits += 1;
                    if col_hit[j] {
                        return false;
                    }
                    col_hit[j] = true;
                }
            }
            if row_hits != 1 {
                return false;
            }
        }
        col_hit.iter().all(|&h| h)
    }

    /// f(A) = sum f_i A^i with A^0 = I; coefficients little-endian.
    pub fn poly_eval(&self, coeffs: &[u16]) -> Result<Matrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare);
        }
        let f = &self.field;
        // Horner from the top coefficient down
        let mut acc = Matrix::zeros(f, self.rows, self.cols);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self)?;
            if c != 0 {
                for i in 0..self.rows {
                    let v = f.add(acc.get(i, i), c);
                    acc.set(i, i, v);
                }
            }
        }
        Ok(acc)
    }

    /// True when every row of `self` lies in the row space of `other`.
    pub fn row_space_contained_in(&self, other: &Matrix) -> Result<bool, MatrixError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch("row space".into()));
        }
        let red = other.rref();
        let f = &self.field;
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            for (r, &p) in red.pivots.iter().enumerate() {
                let c = row[p];
                if c == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    row[j] = f.sub(row[j], f.mul(c, red.matrix.get(r, j)));
                }
            }
            if row.iter().any(|&v| v != 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Compact description of an n x n Toeplitz matrix: main diagonal value `t`,
/// upper diagonals `a_1..a_{n-1}`, lower diagonals `b_1..b_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToeplitzSpec {
    pub t: u16,
    pub a: Vec<u16>,
    pub b: Vec<u16>,
}

impl ToeplitzSpec {
    pub fn materialize(&self, field: &FieldRef, n: usize) -> Result<Matrix, MatrixError> {
        if self.a.len() != n - 1 || self.b.len() != n - 1 {
            return Err(MatrixError::LengthMismatch);
        }
        Ok(Matrix::from_fn(field, n, n, |i, j| {
            if i == j {
                self.t
            } else if j > i {
                self.a[j - i - 1]
            } else {
                self.b[i - j - 1]
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::rng::SplitMix64;

    fn gf(q: u32) -> FieldRef {
        Field::of_order(q, None).unwrap()
    }

    fn random_matrix(f: &FieldRef, rows: usize, cols: usize, rng: &mut SplitMix64) -> Matrix {
        Matrix::from_fn(f, rows, cols, |_, _| rng.elt(f.order()))
    }

    #[test]
    fn rref_of_identity_and_zero() {
        let f = gf(4);
        let i4 = Matrix::identity(&f, 4);
        let r = i4.rref();
        assert_eq!(r.matrix, i4);
        assert_eq!(r.rank, 4);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);

        let z = Matrix::zeros(&f, 2, 3);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_is_idempotent_and_rank_transpose_invariant() {
        let mut rng = SplitMix64::new(7);
        for q in [2u32, 3, 4, 8] {
            let f = gf(q);
            for _ in 0..30 {
                let m = random_matrix(&f, 4, 6, &mut rng);
                let r = m.rref();
                let rr = r.matrix.rref();
                assert_eq!(rr.matrix, r.matrix);
                assert_eq!(m.rank(), m.transpose().rank());
                if f.has_hermitian() {
                    assert_eq!(m.rank(), m.conj_transpose().unwrap().rank());
                }
            }
        }
    }

    #[test]
    fn kernel_dimensions() {
        let f = gf(2);
        assert_eq!(Matrix::identity(&f, 5).kernel().rows(), 0);
        let z = Matrix::zeros(&f, 1, 6);
        let k = z.kernel();
        assert_eq!(k.rows(), 6);
        assert_eq!(k.rank(), 6);
        let mut rng = SplitMix64::new(3);
        for q in [2u32, 3, 4, 9] {
            let f = gf(q);
            for _ in 0..25 {
                let m = random_matrix(&f, 3, 7, &mut rng);
                let k = m.kernel();
                assert_eq!(m.rank() + k.rows(), m.cols());
                // M K^T = 0
                assert!(m.mul(&k.transpose()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn mul_identity_and_conj_involution() {
        let mut rng = SplitMix64::new(11);
        let f = gf(4);
        let m = random_matrix(&f, 3, 5, &mut rng);
        let i5 = Matrix::identity(&f, 5);
        assert_eq!(m.mul(&i5).unwrap(), m);
        let d = m.conj_transpose().unwrap();
        assert_eq!(d.conj_transpose().unwrap(), m);
        assert!(m.mul(&random_matrix(&f, 3, 3, &mut rng)).is_err());
    }

    #[test]
    fn toeplitz_shapes() {
        let f = gf(2);
        let id_spec = ToeplitzSpec {
            t: 1,
            a: vec![0, 0],
            b: vec![0, 0],
        };
        assert_eq!(id_spec.materialize(&f, 3).unwrap(), Matrix::identity(&f, 3));
        let shift = ToeplitzSpec {
            t: 0,
            a: vec![1, 0],
            b: vec![0, 0],
        };
        let s = shift.materialize(&f, 3).unwrap();
        assert_eq!(s.row(0), &[0, 1, 0]);
        assert_eq!(s.row(1), &[0, 0, 1]);
        assert_eq!(s.row(2), &[0, 0, 0]);
        assert_eq!(
            ToeplitzSpec {
                t: 0,
                a: vec![1],
                b: vec![]
            }
            .materialize(&f, 3)
            .unwrap_err(),
            MatrixError::LengthMismatch
        );
    }

    #[test]
    fn toeplitz_transpose_is_exchange_conjugation() {
        let mut rng = SplitMix64::new(2024);
        for q in [2u32, 3, 4] {
            let f = gf(q);
            for n in 2..=12usize {
                let spec = ToeplitzSpec {
                    t: rng.elt(q),
                    a: (0..n - 1).map(|_| rng.elt(q)).collect(),
                    b: (0..n - 1).map(|_| rng.elt(q)).collect(),
                };
                let m = spec.materialize(&f, n).unwrap();
                let j = Matrix::exchange(&f, n);
                let jmj = j.mul(&m).unwrap().mul(&j).unwrap();
                assert_eq!(m.transpose(), jmj);
            }
        }
    }

    #[test]
    fn poly_eval_cases() {
        let f = gf(2);
        let j = Matrix::exchange(&f, 2);
        assert_eq!(j.poly_eval(&[0, 1]).unwrap(), j);
        assert_eq!(j.poly_eval(&[1]).unwrap(), Matrix::identity(&f, 2));
        // x^2 + 1 at J: J^2 + I = I + I = 0 over GF(2)
        assert!(j.poly_eval(&[1, 0, 1]).unwrap().is_zero());
        let rect = Matrix::zeros(&f, 2, 3);
        assert_eq!(rect.poly_eval(&[1]).unwrap_err(), MatrixError::NotSquare);
    }

    #[test]
    fn monomial_and_exchange() {
        let f = gf(4);
        assert!(Matrix::identity(&f, 3).is_monomial());
        assert!(!Matrix::zeros(&f, 3, 3).is_monomial());
        let j = Matrix::exchange(&f, 3);
        assert!(j.is_monomial());
        assert_eq!(j.mul(&j).unwrap(), Matrix::identity(&f, 3));
        let mut two_in_row = Matrix::zeros(&f, 2, 2);
        two_in_row.set(0, 0, 1);
        two_in_row.set(0, 1, 2);
        two_in_row.set(1, 0, 0);
        assert!(!two_in_row.is_monomial());
    }

    #[test]
    fn permutation_validation() {
        let f = gf(2);
        let m = Matrix::identity(&f, 3);
        assert!(m.permute_cols(&[2, 0, 1]).is_ok());
        assert_eq!(
            m.permute_cols(&[0, 0, 1]).unwrap_err(),
            MatrixError::NotAPermutation
        );
        assert_eq!(
            m.permute_cols(&[0, 1]).unwrap_err(),
            MatrixError::NotAPermutation
        );
    }

    #[test]
    fn row_space_containment() {
        let f = gf(4);
        let big = Matrix::from_rows(&f, &[vec![1, 0, 2], vec![0, 1, 3]]);
        let small = Matrix::from_rows(&f, &[vec![1, 1, f.add(2, 3)]]);
        assert!(small.row_space_contained_in(&big).unwrap());
        let outside = Matrix::from_rows(&f, &[vec![0, 0, 1]]);
        assert!(!outside.row_space_contained_in(&big).unwrap());
    }
}
