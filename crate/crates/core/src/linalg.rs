//! Dense matrices over [`Gf`]. Row-vector convention throughout: a vector
//! `v` is mapped to `v * M`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, Gf};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<FieldElement>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [FieldElement] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c).index() == (r == c) as u32))
    }

    /// `v * self`.
    pub fn apply(&self, f: &Gf, v: &[FieldElement]) -> Vec<FieldElement> {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (r, &x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(x, m));
            }
        }
        out
    }

    pub fn mul(&self, f: &Gf, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let prod = other.apply(f, self.row(r));
            out.row_mut(r).copy_from_slice(&prod);
        }
        Ok(out)
    }

    pub fn sub(&self, f: &Gf, other: &Matrix) -> Matrix {
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: &Gf, s: FieldElement) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(s, a)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Reduced row-echelon form in place; returns pivot columns in order.
    pub fn rref(&mut self, f: &Gf) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, lead);
            let inv = f.inv(self.get(lead, c)).expect("pivot is non-zero");
            for x in self.row_mut(lead) {
                *x = f.mul(*x, inv);
            }
            for r in 0..self.rows {
                let factor = self.get(r, c);
                if r == lead || factor.is_zero() {
                    continue;
                }
                for cc in c..self.cols {
                    let v = f.sub(self.get(r, cc), f.mul(factor, self.get(lead, cc)));
                    self.set(r, cc, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self, f: &Gf) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{v : v * self = 0}` in reduced row-echelon form.
    pub fn left_kernel(&self, f: &Gf) -> Vec<Vec<FieldElement>> {
        self.transpose().right_kernel(f)
    }

    /// Basis of `{v : self * v^T = 0}` in reduced row-echelon form.
    pub fn right_kernel(&self, f: &Gf) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        canonical_basis(f, basis)
    }

    pub fn inverse(&self, f: &Gf) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.set(r, n + r, f.one());
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            inv.row_mut(r).copy_from_slice(&aug.row(r)[n..]);
        }
        Ok(inv)
    }
}

/// Row-reduces a spanning set to its canonical (RREF) basis.
pub fn canonical_basis(f: &Gf, vectors: Vec<Vec<FieldElement>>) -> Vec<Vec<FieldElement>> {
    if vectors.is_empty() {
        return vectors;
    }
    let mut m = Matrix::from_rows(&vectors).expect("equal lengths");
    let rank = m.rref(f).len();
    (0..rank).map(|r| m.row(r).to_vec()).collect()
}

/// Dimension of the span of `vectors`.
pub fn span_dim(f: &Gf, vectors: &[Vec<FieldElement>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors).expect("equal lengths").rank(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Gf, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<FieldElement>> = rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect();
        Matrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let f = Gf::from_order(5).unwrap();
        let a = m(&f, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 2]]);
        let inv = a.inverse(&f).unwrap();
        assert!(a.mul(&f, &inv).unwrap().is_identity());
        assert!(inv.mul(&f, &a).unwrap().is_identity());
    }

    #[test]
    fn singular_detected() {
        let f = Gf::from_order(3).unwrap();
        let a = m(&f, &[&[1, 2], &[2, 1]]);
        assert_eq!(a.inverse(&f), Err(Error::Singular));
        assert_eq!(a.rank(&f), 1);
    }

    #[test]
    fn kernels() {
        let f = Gf::from_order(2).unwrap();
        let a = m(&f, &[&[1, 1, 0], &[0, 1, 1]]);
        let k = a.right_kernel(&f);
        assert_eq!(k, vec![vec![f.one(), f.one(), f.one()]]);
        let lk = a.transpose().left_kernel(&f);
        assert_eq!(lk, k);
    }
}
