//! Dense exact linear algebra over the rationals.
//!
//! Sizes here stay small (tens to a few hundreds of rows) and the inputs are
//! 0/±1, so a plain `BigRational` Gauss-Jordan is enough. Multiplication skips
//! zero entries because the action matrices are very sparse.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn scalar(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols);
        Self {
            rows,
            cols,
            data: values.iter().map(|&v| scalar(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&Matrix], cols: usize) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { rows, cols, data }
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(blocks: &[&Matrix], rows: usize) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                for c in 0..b.cols {
                    out[(r, offset + c)] = b[(r, c)].clone();
                }
            }
            offset += b.cols;
        }
        out
    }

    /// Reduces in place to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self[(row, col)].recip();
            if !inv.is_one() {
                for c in col..self.cols {
                    let v = &self[(row, c)] * &inv;
                    self[(row, c)] = v;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (col..self.cols)
                .filter(|&c| !self[(row, c)].is_zero())
                .map(|c| (c, self[(row, c)].clone()))
                .collect();
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self[(r, col)].clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, v) in &pivot_row {
                    let delta = &factor * v;
                    self[(r, *c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{x : A x = 0}` together with the free column that each basis
    /// vector is normalized on (value 1 there, 0 on every other free column).
    pub fn nullspace(&self) -> NullSpace {
        let mut reduced = self.clone();
        let pivots = reduced.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    let entry = &reduced[(r, f)];
                    if !entry.is_zero() {
                        v[p] = -entry.clone();
                    }
                }
                v
            })
            .collect();
        NullSpace { basis, free }
    }

    pub fn max_abs_entry(&self) -> Scalar {
        self.data
            .iter()
            .map(|v| v.abs())
            .fold(Scalar::zero(), |a, b| if b > a { b } else { a })
    }
}

pub struct NullSpace {
    pub basis: Vec<Vec<Scalar>>,
    pub free: Vec<usize>,
}

/// Echelon basis of the span of some vectors, used to reduce vectors modulo
/// a subspace.
#[derive(Debug, Clone)]
pub struct Subspace {
    dim: usize,
    rows: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn spanned_by(vectors: &[Vec<Scalar>], dim: usize) -> Self {
        let mut m = if vectors.is_empty() {
            Matrix::zeros(0, dim)
        } else {
            Matrix::from_rows(vectors)
        };
        assert_eq!(m.cols, dim);
        let pivots = m.rref_in_place();
        let rows = Matrix::from_rows(
            &(0..pivots.len()).map(|r| m.row(r).to_vec()).collect::<Vec<_>>(),
        );
        let rows = if pivots.is_empty() { Matrix::zeros(0, dim) } else { rows };
        Self { dim, rows, pivots }
    }

    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that stay meaningful after reducing modulo this subspace.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus the combination of echelon rows clearing every pivot entry.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (c, entry) in self.rows.row(r).iter().enumerate() {
                if !entry.is_zero() {
                    out[c] -= &factor * entry;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let m = Matrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let m = Matrix::from_i64(2, 4, &[1, 1, 0, 0, 0, 1, -1, 1]);
        let ns = m.nullspace();
        assert_eq!(ns.basis.len(), 2);
        for (v, &f) in ns.basis.iter().zip(&ns.free) {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            assert!(v[f].is_one());
            for &g in &ns.free {
                if g != f {
                    assert!(v[g].is_zero());
                }
            }
        }
    }

    #[test]
    fn subspace_reduction() {
        let s = Subspace::spanned_by(&[vec![scalar(1), scalar(1), scalar(0)]], 3);
        assert!(s.contains(&[scalar(2), scalar(2), scalar(0)]));
        assert!(!s.contains(&[scalar(1), scalar(0), scalar(0)]));
        assert_eq!(s.complement_columns(), vec![1, 2]);
        assert_eq!(
            s.reduce(&[scalar(1), scalar(0), scalar(0)]),
            vec![scalar(0), scalar(-1), scalar(0)]
        );
    }

    #[test]
    fn product_matches_hand_computation() {
        let a = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        assert!(a.mul(&a).is_zero());
        let b = Matrix::from_i64(2, 2, &[1, 2, 3, 4]);
        assert_eq!(b.mul(&b), Matrix::from_i64(2, 2, &[7, 10, 15, 22]));
    }
}
