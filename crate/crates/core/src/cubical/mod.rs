//! Word spaces `(k^m)^{⊗n}`, their cosimplicial differential and the
//! coinvariant complexes `Cub(G, M) = M ⊗_G C(A)^{(1,…,1)}`.
//!
//! Degree `m` of the full complex has the words `w : [n] → [m]` as basis,
//! `C⁰ = 0`. Cofaces (1-based letters):
//!
//! * `d⁰` raises every letter by one;
//! * `dⁱ`, `1 ≤ i ≤ m`, keeps letters `< i`, raises letters `> i` and sends
//!   each occurrence of `i` to `i + (i+1)`;
//! * `d^{m+1}` is the inclusion `[m] ⊂ [m+1]`.
//!
//! `d = Σ (−1)ⁱ dⁱ`. Matrices act on row vectors: row `r` of the matrix of
//! `d_m` is the image of basis element `r` of degree `m`.

mod complex;
mod model;

pub use complex::{betti, BettiRow, BettiTable, CochainComplex, GradedSymbol};
pub use model::{
    build_model, complex_from_model, cubical_complex, orbit_decomposition, verify_cor2, CoinvariantModel, Cor2Report, Mode, NaiveModel,
    OrbitModel, WordOperator, DEFAULT_NAIVE_CAP,
};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{rank, Rational, RationalMatrix, SparseVec};
use crate::perm::Permutation;

/// A word `w : [n] → [m]`, i.e. the basis tensor `e_{w(1)} ⊗ … ⊗ e_{w(n)}`.
/// Letters are stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    slots: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(slots: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&l) = letters.iter().find(|&&l| l >= slots) {
            return Err(Error::OutOfRange { index: l, limit: slots });
        }
        Ok(Self { slots, letters })
    }

    /// 1-based letters, as in `(1,1,2)`.
    pub fn from_one_based(slots: usize, letters: &[usize]) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::OutOfRange { index: 0, limit: slots });
        }
        Self::new(slots, letters.iter().map(|l| l - 1).collect())
    }

    pub(crate) fn from_letters_unchecked(slots: usize, letters: Vec<usize>) -> Self {
        Self { slots, letters }
    }

    /// The word with lexicographic rank `index` among all `slots^n` words.
    pub fn from_index(n: usize, slots: usize, mut index: usize) -> Self {
        let mut letters = alloc::vec![0; n];
        for p in (0..n).rev() {
            letters[p] = index % slots;
            index /= slots;
        }
        Self { slots, letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Lexicographic rank, i.e. the base-`slots` number spelled by the letters.
    pub fn index(&self) -> usize {
        self.letters.iter().fold(0, |acc, &l| acc * self.slots + l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", l + 1)?;
        }
        f.write_str(")")
    }
}

/// Number of words of length `n` over `m` letters.
pub fn word_count(n: usize, m: usize) -> usize {
    m.pow(n as u32)
}

/// `(g·w)(p) = w(g⁻¹(p))`: the letter at position `q` moves to `g(q)`.
pub fn position_action(g: &Permutation, w: &Word) -> Result<Word> {
    if g.arity() != w.len() {
        return Err(Error::Arity { expected: w.len(), found: g.arity() });
    }
    Ok(position_action_unchecked(g, w))
}

pub(crate) fn position_action_unchecked(g: &Permutation, w: &Word) -> Word {
    let mut letters = alloc::vec![0; w.len()];
    for (q, &l) in w.letters.iter().enumerate() {
        letters[g.apply(q)] = l;
    }
    Word { slots: w.slots, letters }
}

/// The coface `dⁱ(w)` as a list of words in `m + 1` slots, all with
/// coefficient `+1`.
pub fn coface(i: usize, w: &Word) -> Result<Vec<Word>> {
    let m = w.slots;
    if i > m + 1 {
        return Err(Error::OutOfRange { index: i, limit: m + 2 });
    }
    let slots = m + 1;
    if i == 0 {
        return Ok(alloc::vec![Word { slots, letters: w.letters.iter().map(|l| l + 1).collect() }]);
    }
    if i == m + 1 {
        return Ok(alloc::vec![Word { slots, letters: w.letters.clone() }]);
    }
    let split = i - 1;
    let base: Vec<usize> = w.letters.iter().map(|&l| if l > split { l + 1 } else { l }).collect();
    let hits: Vec<usize> = (0..base.len()).filter(|&p| base[p] == split).collect();
    let mut out = Vec::with_capacity(1 << hits.len());
    for mask in 0..(1usize << hits.len()) {
        let mut letters = base.clone();
        for (bit, &p) in hits.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                letters[p] = split + 1;
            }
        }
        out.push(Word { slots, letters });
    }
    Ok(out)
}

/// `d(w) = Σᵢ (−1)ⁱ dⁱ(w)` with cancellations carried out.
pub fn differential_terms(w: &Word) -> Vec<(Word, i64)> {
    let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for i in 0..=w.slots + 1 {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for t in coface(i, w).expect("coface index in range") {
            *acc.entry(t.letters).or_default() += sign;
        }
    }
    let slots = w.slots + 1;
    acc.into_iter().filter(|&(_, c)| c != 0).map(|(letters, c)| (Word { slots, letters }, c)).collect()
}

pub(crate) fn differential_terms_rational(w: &Word) -> Vec<(Word, Rational)> {
    differential_terms(w).into_iter().map(|(t, c)| (t, Rational::from_integer(BigInt::from(c)))).collect()
}

/// Matrix of `d : (k^m)^{⊗n} → (k^{m+1})^{⊗n}`, rows indexed by source words.
pub fn differential(n: usize, m: usize) -> RationalMatrix {
    let target = word_count(n, m + 1);
    let rows = (0..word_count(n, m))
        .map(|idx| {
            let w = Word::from_index(n, m, idx);
            let entries = differential_terms_rational(&w).into_iter().map(|(t, c)| (t.index(), c)).collect();
            SparseVec::from_entries(entries)
        })
        .collect();
    RationalMatrix::from_rows(target, rows).expect("target words in range")
}

/// Permutation matrix of `w ↦ g·w` on `(k^m)^{⊗n}`.
pub fn position_matrix(g: &Permutation, m: usize) -> RationalMatrix {
    let n = g.arity();
    let rows = (0..word_count(n, m))
        .map(|idx| SparseVec::unit(position_action_unchecked(g, &Word::from_index(n, m, idx)).index()))
        .collect();
    RationalMatrix::from_rows(word_count(n, m), rows).expect("square")
}

/// `d ∘ g = g ∘ d` on `(k^m)^{⊗n}` for every adjacent transposition `g`.
pub fn is_equivariant(n: usize, m: usize) -> bool {
    let d = differential(n, m);
    (0..n.saturating_sub(1)).all(|i| {
        let g = Permutation::adjacent(n, i).unwrap();
        position_matrix(&g, m).mul(&d).unwrap() == d.mul(&position_matrix(&g, m + 1)).unwrap()
    })
}

/// The full complex `⊕_m (k^m)^{⊗n}` in degrees `1..=m_max+1`.
pub fn full_complex(n: usize, m_max: usize) -> Result<CochainComplex> {
    if n == 0 || m_max == 0 {
        return Err(Error::Unsupported(format!("full complex with n = {n}, m_max = {m_max}")));
    }
    let labels = (1..=m_max + 1)
        .map(|m| (0..word_count(n, m)).map(|idx| format!("{}", Word::from_index(n, m, idx))).collect())
        .collect();
    let differentials = (1..=m_max).map(|m| differential(n, m)).collect();
    CochainComplex::new(format!("full({n})"), n, labels, differentials)
}

/// `Σ_σ sign(σ)·(σ(1),…,σ(n))` in degree `n` of the full complex.
pub fn antisymmetrizer(n: usize) -> SparseVec {
    let entries = Permutation::all(n)
        .into_iter()
        .map(|s| {
            let w = Word { slots: n, letters: s.images().to_vec() };
            (w.index(), Rational::from_integer(BigInt::from(s.sign())))
        })
        .collect();
    SparseVec::from_entries(entries)
}

/// The antisymmetrizer is a cocycle and not a coboundary.
pub fn antisymmetrizer_is_top_class(n: usize) -> bool {
    let a = antisymmetrizer(n);
    if !differential(n, n).left_mul_sparse(&a).is_zero() {
        return false;
    }
    if n == 1 {
        return !a.is_zero();
    }
    let prev = differential(n, n - 1);
    let mut rows = prev.row_vectors().to_vec();
    rows.push(a);
    let with = RationalMatrix::from_rows(prev.cols(), rows).expect("same width");
    rank(&with) == rank(&prev) + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn w(slots: usize, letters: &[usize]) -> Word {
        Word::from_one_based(slots, letters).unwrap()
    }

    #[test]
    fn position_action_examples() {
        let x = w(2, &[1, 2]);
        assert_eq!(position_action(&Permutation::identity(2), &x).unwrap(), x);
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(position_action(&swap, &x).unwrap(), w(2, &[2, 1]));
        let c = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(position_action(&c, &w(2, &[1, 1, 2])).unwrap(), w(2, &[2, 1, 1]));
        assert!(position_action(&c, &x).is_err());
    }

    #[test]
    fn coface_examples() {
        let x = w(2, &[1]);
        assert_eq!(coface(0, &x).unwrap(), alloc::vec![w(3, &[2])]);
        assert_eq!(coface(1, &x).unwrap(), alloc::vec![w(3, &[1]), w(3, &[2])]);
        assert_eq!(coface(2, &x).unwrap(), alloc::vec![w(3, &[1])]);
        assert_eq!(coface(3, &x).unwrap(), alloc::vec![w(3, &[1])]);
        assert!(coface(4, &x).is_err());
        let y = w(1, &[1, 1]);
        let mut split = coface(1, &y).unwrap();
        split.sort();
        assert_eq!(split, alloc::vec![w(2, &[1, 1]), w(2, &[1, 2]), w(2, &[2, 1]), w(2, &[2, 2])]);
    }

    #[test]
    fn differential_examples() {
        assert!(differential(1, 1).is_zero());
        let d = differential(1, 2);
        assert_eq!(d.rows(), 2);
        assert_eq!(d.to_dense(), alloc::vec![
            alloc::vec![rational(-1, 1), rational(0, 1), rational(0, 1)],
            alloc::vec![rational(0, 1), rational(0, 1), rational(1, 1)],
        ]);
        let anti = SparseVec::from_entries(alloc::vec![
            (w(2, &[1, 2]).index(), rational(1, 1)),
            (w(2, &[2, 1]).index(), rational(-1, 1)),
        ]);
        assert!(differential(2, 2).left_mul_sparse(&anti).is_zero());
    }

    #[test]
    fn d_squared_and_equivariance() {
        for n in 1..=4 {
            for m in 1..=4 {
                assert!(differential(n, m).mul(&differential(n, m + 1)).unwrap().is_zero());
                assert!(is_equivariant(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn full_complex_is_concentrated() {
        for n in 1..=3 {
            let c = full_complex(n, n + 2).unwrap();
            let b = betti(&c);
            assert_eq!(b.symbol(), GradedSymbol::shift(n), "n={n}");
            assert_eq!(c.dim(1), 1);
            assert_eq!(c.dim(2), 1 << n);
        }
        assert_eq!(betti(&full_complex(1, 2).unwrap()).betti_numbers(), alloc::vec![1, 0]);
    }

    #[test]
    fn top_class_witness() {
        for n in 1..=4 {
            assert!(antisymmetrizer_is_top_class(n));
        }
    }

    #[test]
    fn word_index_round_trip() {
        for idx in 0..27 {
            assert_eq!(Word::from_index(3, 3, idx).index(), idx);
        }
    }
}
