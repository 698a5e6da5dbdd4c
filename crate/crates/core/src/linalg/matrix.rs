use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Rational, SparseVec};
use crate::error::{Error, Result};

/// Sparse row-major matrix over `ℚ` with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: alloc::vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: n, data: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Result<Self> {
        for row in &data {
            if let Some(j) = row.max_index() {
                if j >= cols {
                    return Err(Error::OutOfRange { index: j, limit: cols });
                }
            }
        }
        Ok(Self { rows: data.len(), cols, data })
    }

    /// One sparse vector per column.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, Rational)>> = alloc::vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter() {
                if *i >= rows {
                    return Err(Error::OutOfRange { index: *i, limit: rows });
                }
                buckets[*i].push((j, v.clone()));
            }
        }
        let data = buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect();
        Ok(Self { rows, cols: columns.len(), data })
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged dense matrix".into()));
        }
        Ok(Self { rows: rows.len(), cols, data: rows.iter().map(|r| SparseVec::from_dense(r)).collect() })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::from_dense(&dense).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_columns(self.cols, &self.data).expect("indices in range")
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn column(&self, j: usize) -> SparseVec {
        let entries = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(j).map(|v| (i, v.clone())))
            .collect();
        SparseVec::from_sorted_unchecked(entries)
    }

    pub fn trace(&self) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.rows.min(self.cols) {
            if let Some(v) = self.data[i].get(i) {
                acc += v;
            }
        }
        acc
    }

    /// `v·A` for a sparse row vector.
    pub fn left_mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in v.iter() {
            for (j, a) in self.data[*i].iter() {
                *acc.entry(*j).or_insert_with(Rational::zero) += c * a;
            }
        }
        SparseVec::from_sorted_unchecked(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    /// `v·A` for a dense row vector of length `rows`.
    pub fn left_mul(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, a) in self.data[i].iter() {
                out[*j] += c * a;
            }
        }
        out
    }

    /// `A·v` for a sparse column vector of length `cols`.
    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let dense = v.to_dense(self.cols);
        let entries = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let x = r.dot_dense(&dense);
                (!x.is_zero()).then_some((i, x))
            })
            .collect();
        SparseVec::from_sorted_unchecked(entries)
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().map(|r| other.left_mul_sparse(r)).collect();
        Ok(RationalMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.add_scaled(&-Rational::one(), other)
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &Rational, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add_scaled(c, b)).collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scaled(&self, c: &Rational) -> RationalMatrix {
        let mut out = self.clone();
        for r in &mut out.data {
            r.scale(c);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(i, r)| r.nnz() == 1 && r.entries()[0].0 == i && r.entries()[0].1.is_one())
    }

    /// Gauss–Jordan inverse; `None` when singular or non-square.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<Rational>> = (0..n).map(|i| SparseVec::unit(i).to_dense(n)).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for x in &mut a[col] {
                *x /= &p;
            }
            for x in &mut inv[col] {
                *x /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                let (pivot_row, pivot_inv) = (a[col].clone(), inv[col].clone());
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
                for (x, y) in inv[r].iter_mut().zip(&pivot_inv) {
                    *x -= &f * y;
                }
            }
        }
        RationalMatrix::from_dense(&inv).ok()
    }

    /// Permutation matrix of a column map `j ↦ image[j]`: column `j` is `e_{image[j]}`.
    pub fn from_column_map(rows: usize, image: &[usize]) -> Result<RationalMatrix> {
        let cols: Vec<SparseVec> = image.iter().map(|&i| SparseVec::unit(i)).collect();
        Self::from_columns(rows, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    #[test]
    fn multiply_and_transpose() {
        let a = RationalMatrix::from_integers(&[&[1, 2], &[0, 1], &[3, 0]]);
        let b = RationalMatrix::from_integers(&[&[1, 0, 1], &[2, 1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, RationalMatrix::from_integers(&[&[5, 2, 1], &[2, 1, 0], &[3, 0, 3]]));
        assert_eq!(ab.transpose().transpose(), ab);
        assert_eq!(a.transpose().rows(), 2);
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = RationalMatrix::from_integers(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(RationalMatrix::from_integers(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn vector_products() {
        let a = RationalMatrix::from_integers(&[&[1, 2], &[0, 1]]);
        let v = [rational(1, 2), rational(1, 1)];
        assert_eq!(a.left_mul(&v), alloc::vec![rational(1, 2), rational(2, 1)]);
        let col = SparseVec::from_dense(&v);
        assert_eq!(a.mul_sparse(&col).to_dense(2), alloc::vec![rational(5, 2), rational(1, 1)]);
        assert_eq!(a.trace(), rational(2, 1));
    }
}
