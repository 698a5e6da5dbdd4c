use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{rank, RationalMatrix};

/// A bounded cochain complex `C¹ → C² → … → C^{m_max+1}`.
///
/// `differentials[m-1]` is the matrix of `d_m : C^m → C^{m+1}` acting on row
/// vectors, so `d_{m+1} ∘ d_m = 0` reads `D_m · D_{m+1} = 0`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    label: String,
    n: usize,
    labels: Vec<Vec<String>>,
    differentials: Vec<RationalMatrix>,
}

impl CochainComplex {
    /// Checks shapes and `d² = 0`.
    pub fn new(
        label: impl Into<String>,
        n: usize,
        labels: Vec<Vec<String>>,
        differentials: Vec<RationalMatrix>,
    ) -> Result<Self> {
        let label = label.into();
        if labels.len() != differentials.len() + 1 {
            return Err(Error::Shape(format!(
                "{} degrees but {} differentials",
                labels.len(),
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.rows() != labels[k].len() || d.cols() != labels[k + 1].len() {
                return Err(Error::Shape(format!(
                    "d_{} is {}x{}, degrees have dimensions {} and {}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    labels[k].len(),
                    labels[k + 1].len()
                )));
            }
        }
        for (k, pair) in differentials.windows(2).enumerate() {
            if !pair[0].mul(&pair[1])?.is_zero() {
                return Err(Error::NotAComplex(format!("{label}: d_{} ∘ d_{} ≠ 0", k + 2, k + 1)));
            }
        }
        Ok(Self { label, n, labels, differentials })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Highest degree with a differential out of it.
    pub fn m_max(&self) -> usize {
        self.differentials.len()
    }

    pub fn dim(&self, m: usize) -> usize {
        if m == 0 {
            return 0;
        }
        self.labels.get(m - 1).map_or(0, |l| l.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    pub fn basis_labels(&self, m: usize) -> &[String] {
        &self.labels[m - 1]
    }

    /// `d_m`, for `1 ≤ m ≤ m_max`.
    pub fn differential(&self, m: usize) -> &RationalMatrix {
        &self.differentials[m - 1]
    }

    pub fn differentials(&self) -> &[RationalMatrix] {
        &self.differentials
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiRow {
    pub m: usize,
    pub dim: usize,
    pub rank_d: usize,
    pub betti: usize,
}

/// Betti numbers `b^m = dim C^m − rank d_m − rank d_{m−1}` for `1 ≤ m ≤ m_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub family: String,
    pub n: usize,
    pub rows: Vec<BettiRow>,
}

impl BettiTable {
    /// `ranks[m-1] = rank d_m`.
    pub fn from_ranks(complex: &CochainComplex, ranks: &[usize]) -> Result<Self> {
        if ranks.len() != complex.m_max() {
            return Err(Error::Shape(format!("{} ranks for {} differentials", ranks.len(), complex.m_max())));
        }
        let mut rows = Vec::with_capacity(ranks.len());
        let mut prev = 0;
        for (k, &r) in ranks.iter().enumerate() {
            let m = k + 1;
            let dim = complex.dim(m);
            let betti = dim.checked_sub(r + prev).ok_or_else(|| {
                Error::NotAComplex(format!("ranks {prev} + {r} exceed dim C^{m} = {dim}"))
            })?;
            rows.push(BettiRow { m, dim, rank_d: r, betti });
            prev = r;
        }
        Ok(Self { family: complex.label.clone(), n: complex.n, rows })
    }

    pub fn betti(&self, m: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.m == m).map(|r| r.betti)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.betti).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.dim).collect()
    }

    pub fn symbol(&self) -> GradedSymbol {
        GradedSymbol { parts: self.rows.iter().filter(|r| r.betti > 0).map(|r| (r.m, r.betti)).collect() }
    }

    /// `b^degree = value` and every other Betti number in the window is 0.
    pub fn is_concentrated(&self, degree: usize, value: usize) -> bool {
        self.rows.iter().all(|r| r.betti == if r.m == degree { value } else { 0 })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.betti == 0)
    }
}

pub fn betti(complex: &CochainComplex) -> BettiTable {
    let ranks: Vec<usize> = complex.differentials.iter().map(rank).collect();
    BettiTable::from_ranks(complex, &ranks).expect("ranks of a valid complex")
}

/// A finite direct sum `⊕ k^{c}[-m]` of shifted lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSymbol {
    /// `(degree, multiplicity)`, degrees increasing, multiplicities positive.
    parts: Vec<(usize, usize)>,
}

impl GradedSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `k[-n]`.
    pub fn shift(n: usize) -> Self {
        Self { parts: alloc::vec![(n, 1)] }
    }

    /// `k^c[-m]`, or `0` when `c = 0`.
    pub fn concentrated(m: usize, c: usize) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self { parts: alloc::vec![(m, c)] }
        }
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for GradedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, &(m, c)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            if c == 1 {
                write!(f, "k[-{m}]")?;
            } else {
                write!(f, "k^{c}[-{m}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn symbol_display() {
        assert_eq!(GradedSymbol::zero().to_string(), "0");
        assert_eq!(GradedSymbol::shift(2).to_string(), "k[-2]");
        let s = GradedSymbol { parts: alloc::vec![(1, 1), (2, 3)] };
        assert_eq!(s.to_string(), "k[-1] ⊕ k^3[-2]");
    }

    #[test]
    fn rejects_non_complex() {
        let one = RationalMatrix::identity(1);
        let labels = alloc::vec![alloc::vec!["a".into()], alloc::vec!["b".into()], alloc::vec!["c".into()]];
        let err = CochainComplex::new("bad", 1, labels, alloc::vec![one.clone(), one]).unwrap_err();
        assert!(matches!(err, Error::NotAComplex(_)));
    }
}
