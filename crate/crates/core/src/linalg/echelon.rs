use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, RationalMatrix, SparseVec};
use crate::error::{Error, Result};

/// Reduced row echelon basis of a subspace of `ℚ^len`.
///
/// Every stored row has entry 1 at its pivot, zeros before it and zeros in
/// every other row's pivot column. Rows are kept in insertion order.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    len: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: BTreeMap<usize, usize>,
}

impl RowEchelon {
    pub fn new(len: usize) -> Self {
        Self { len, ..Default::default() }
    }

    pub fn from_vectors(len: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Self::new(len);
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v − Σ v[pᵢ]·Rᵢ`; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter_map(|(i, x)| self.pivot_row.get(i).map(|&r| (r, x.clone())))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut acc: BTreeMap<usize, Rational> = v.iter().cloned().collect();
        for (r, c) in hits {
            for (j, y) in self.rows[r].iter() {
                let e = acc.entry(*j).or_insert_with(Rational::zero);
                *e -= &c * y;
            }
        }
        SparseVec::from_sorted_unchecked(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `false` when `v` was already in it.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(&v);
        let Some((pivot, lead)) = r.leading().cloned() else {
            return false;
        };
        r.scale(&lead.recip());
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(pivot).cloned() {
                *row = row.add_scaled(&-c, &r);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(r);
        true
    }

    /// Coordinates of `v` with respect to [`Self::rows`], or `None` if `v`
    /// is not in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(self.coordinates_unchecked(v))
    }

    /// Reads coordinates off the pivot columns without a membership check.
    pub fn coordinates_unchecked(&self, v: &SparseVec) -> SparseVec {
        let entries = v.iter().filter_map(|(i, x)| self.pivot_row.get(i).map(|&r| (r, x.clone()))).collect();
        SparseVec::from_entries(entries)
    }
}

/// Scales to an integer vector with content 1 and positive first non-zero entry.
pub fn normalize_primitive(v: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Basis of `{v : A·v = 0}`, one vector per free column, normalized.
pub fn kernel_basis(a: &RationalMatrix) -> Vec<Vec<Rational>> {
    let e = RowEchelon::from_vectors(a.cols(), a.row_vectors().iter().cloned());
    let mut out = Vec::new();
    for free in 0..a.cols() {
        if e.pivot_row.contains_key(&free) {
            continue;
        }
        let mut v = alloc::vec![Rational::zero(); a.cols()];
        v[free] = Rational::one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if let Some(x) = row.get(free) {
                v[p] = -x;
            }
        }
        out.push(normalize_primitive(&v));
    }
    out
}

/// Basis of the column space: the columns of `A` at the pivot columns of
/// its reduced row echelon form, normalized.
pub fn image_basis(a: &RationalMatrix) -> Vec<Vec<Rational>> {
    let e = RowEchelon::from_vectors(a.cols(), a.row_vectors().iter().cloned());
    let mut pivots = e.pivots.clone();
    pivots.sort_unstable();
    pivots.into_iter().map(|j| normalize_primitive(&a.column(j).to_dense(a.rows()))).collect()
}

/// Solves `Σ cᵢ·basisᵢ = v` for a fixed linearly independent basis.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    echelon: RowEchelon,
    /// Row `k` of the echelon form as a combination of the input basis.
    transform: Vec<SparseVec>,
    basis_len: usize,
}

impl SpanSolver {
    pub fn new(len: usize, basis: &[SparseVec]) -> Result<Self> {
        let mut echelon = RowEchelon::new(len);
        let mut transform: Vec<SparseVec> = Vec::new();
        for (k, b) in basis.iter().enumerate() {
            // Track r = b − Σ cᵢ Rᵢ as a combination of inputs.
            let hits: Vec<(usize, Rational)> = b
                .iter()
                .filter_map(|(i, x)| echelon.pivot_row.get(i).map(|&r| (r, x.clone())))
                .collect();
            let mut combo = SparseVec::unit(k);
            for (r, c) in &hits {
                combo = combo.add_scaled(&-c, &transform[*r]);
            }
            let mut r = echelon.reduce(b);
            let Some((pivot, lead)) = r.leading().cloned() else {
                return Err(Error::Dependent);
            };
            let inv = lead.recip();
            r.scale(&inv);
            combo.scale(&inv);
            for (row, t) in echelon.rows.iter_mut().zip(transform.iter_mut()) {
                if let Some(c) = row.get(pivot).cloned() {
                    *row = row.add_scaled(&-&c, &r);
                    *t = t.add_scaled(&-c, &combo);
                }
            }
            echelon.pivot_row.insert(pivot, echelon.rows.len());
            echelon.pivots.push(pivot);
            echelon.rows.push(r);
            transform.push(combo);
        }
        Ok(Self { echelon, transform, basis_len: basis.len() })
    }

    pub fn dim(&self) -> usize {
        self.basis_len
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    /// Coordinates in the input basis, `None` if `v` is outside the span.
    pub fn solve(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        let rows = self.echelon.coordinates(v)?;
        let mut out = alloc::vec![Rational::zero(); self.basis_len];
        for (r, c) in rows.iter() {
            for (k, t) in self.transform[*r].iter() {
                out[*k] += c * t;
            }
        }
        Some(out)
    }
}

/// Coordinates of `v` in a linearly independent `basis` (dense vectors).
pub fn solve_in_span(basis: &[Vec<Rational>], v: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let len = v.len();
    if basis.iter().any(|b| b.len() != len) {
        return Err(Error::Shape("basis vectors and target differ in length".into()));
    }
    let sparse: Vec<SparseVec> = basis.iter().map(|b| SparseVec::from_dense(b)).collect();
    let solver = SpanSolver::new(len, &sparse)?;
    Ok(solver.solve(&SparseVec::from_dense(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank, rational};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational(x, 1)).collect()
    }

    #[test]
    fn kernel_examples() {
        let z = RationalMatrix::zeros(2, 3);
        assert_eq!(kernel_basis(&z), alloc::vec![q(&[1, 0, 0]), q(&[0, 1, 0]), q(&[0, 0, 1])]);
        assert!(kernel_basis(&RationalMatrix::identity(4)).is_empty());
        let a = RationalMatrix::from_integers(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_sparse(&SparseVec::from_dense(v)).is_zero());
        }
        assert_eq!(k[0], q(&[2, -1, 0]));
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&RationalMatrix::identity(2)), alloc::vec![q(&[1, 0]), q(&[0, 1])]);
        assert_eq!(image_basis(&RationalMatrix::from_integers(&[&[1], &[-1]])), alloc::vec![q(&[1, -1])]);
        let half = rational(1, 2);
        let avg = RationalMatrix::from_dense(&[
            alloc::vec![half.clone(), half.clone()],
            alloc::vec![half.clone(), half],
        ])
        .unwrap();
        assert_eq!(image_basis(&avg), alloc::vec![q(&[1, 1])]);
    }

    #[test]
    fn solve_examples() {
        let basis = alloc::vec![q(&[1, 1, 0]), q(&[0, 1, 1])];
        assert_eq!(solve_in_span(&basis, &q(&[1, 1, 0])).unwrap(), Some(q(&[1, 0])));
        assert_eq!(solve_in_span(&basis, &q(&[0, 0, 0])).unwrap(), Some(q(&[0, 0])));
        assert_eq!(solve_in_span(&basis, &q(&[1, 2, 1])).unwrap(), Some(q(&[1, 1])));
        assert_eq!(solve_in_span(&basis, &q(&[1, 0, 0])).unwrap(), None);
        let dependent = alloc::vec![q(&[1, 1]), q(&[2, 2])];
        assert_eq!(solve_in_span(&dependent, &q(&[1, 1])), Err(Error::Dependent));
    }

    #[test]
    fn echelon_is_reduced() {
        let vs = [q(&[0, 2, 4, 1]), q(&[1, 1, 0, 0]), q(&[1, 3, 4, 1]), q(&[0, 0, 1, 5])];
        let e = RowEchelon::from_vectors(4, vs.iter().map(|v| SparseVec::from_dense(v)));
        assert_eq!(e.rank(), 3);
        for (r, &p) in e.rows().iter().zip(e.pivots()) {
            assert_eq!(r.leading().unwrap().0, p);
            assert!(r.get(p).unwrap().is_one());
            for &p2 in e.pivots() {
                if p2 != p {
                    assert!(r.get(p2).is_none());
                }
            }
        }
        let m = RationalMatrix::from_dense(&vs).unwrap();
        assert_eq!(rank(&m), 3);
    }
}
