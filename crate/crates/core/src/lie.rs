//! Free Lie algebra combinatorics inside the free associative algebra.
//!
//! Lie elements are always carried as [`WordVector`]s, i.e. through their
//! expansion `[a,b] ↦ ab − ba`. Membership and equality of Lie elements thus
//! reduce to linear algebra on words. Letters are 0-based (`0` prints as
//! `x1`).

use alloc::boxed::Box;
use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix, RowEchelon, SparseVec};
use crate::perm::{lex_rank, Permutation};

/// A bracketing tree with letters at the leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieWord {
    Letter(usize),
    Bracket(Box<LieWord>, Box<LieWord>),
}

impl LieWord {
    pub fn letter(i: usize) -> Self {
        LieWord::Letter(i)
    }

    pub fn bracket(a: LieWord, b: LieWord) -> Self {
        LieWord::Bracket(Box::new(a), Box::new(b))
    }

    /// `[[…[l₁, l₂], …], l_k]`.
    pub fn left_normed(letters: &[usize]) -> Self {
        let mut iter = letters.iter();
        let first = *iter.next().expect("left-normed bracket needs a letter");
        iter.fold(LieWord::Letter(first), |acc, &l| LieWord::bracket(acc, LieWord::Letter(l)))
    }

    pub fn degree(&self) -> usize {
        match self {
            LieWord::Letter(_) => 1,
            LieWord::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    /// Leaves from left to right.
    pub fn letters(&self) -> Vec<usize> {
        match self {
            LieWord::Letter(i) => alloc::vec![*i],
            LieWord::Bracket(a, b) => {
                let mut v = a.letters();
                v.extend(b.letters());
                v
            }
        }
    }

    pub fn expand(&self) -> WordVector {
        expand(self)
    }
}

impl fmt::Display for LieWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieWord::Letter(i) => write!(f, "x{}", i + 1),
            LieWord::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Associative polynomial: words (letter sequences) with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordVector {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl WordVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(letters: Vec<usize>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(letters, Rational::one());
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> Self {
        let mut v = Self::zero();
        for (w, c) in terms {
            v.add_term(w, &c);
        }
        v
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[usize]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self + c·other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &WordVector) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(c * x));
        }
    }

    pub fn sub(&self, other: &WordVector) -> WordVector {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &WordVector) -> WordVector {
        let mut out = WordVector::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, &(a * b));
            }
        }
        out
    }

    /// Applies `f` to every letter.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> WordVector {
        WordVector::from_terms(
            self.terms.iter().map(|(w, c)| (w.iter().map(|&l| f(l)).collect::<Vec<_>>(), c.clone())),
        )
    }

    /// Sparse coordinates using `index` to number words.
    pub fn to_sparse(&self, index: impl Fn(&[usize]) -> usize) -> SparseVec {
        SparseVec::from_entries(self.terms.iter().map(|(w, c)| (index(w), c.clone())).collect())
    }

    /// Common length of the words, if homogeneous and non-zero.
    pub fn degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(|w| w.len());
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }
}

impl fmt::Display for WordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·", crate::linalg::format_rational(c))?;
            for l in w {
                write!(f, "x{}", l + 1)?;
            }
        }
        Ok(())
    }
}

pub fn expand(w: &LieWord) -> WordVector {
    match w {
        LieWord::Letter(i) => WordVector::word(alloc::vec![*i]),
        LieWord::Bracket(a, b) => {
            let (ea, eb) = (expand(a), expand(b));
            ea.mul(&eb).sub(&eb.mul(&ea))
        }
    }
}

/// Expansion of `[[x₁,x₂],x₃] + [[x₂,x₃],x₁] + [[x₃,x₁],x₂]`; zero by Jacobi.
pub fn jacobi_sum() -> WordVector {
    let t = |a, b, c| expand(&LieWord::bracket(LieWord::left_normed(&[a, b]), LieWord::letter(c)));
    let mut sum = t(0, 1, 2);
    sum.add_scaled(&Rational::one(), &t(1, 2, 0));
    sum.add_scaled(&Rational::one(), &t(2, 0, 1));
    sum
}

/// Base-`m` index of a word over `m` letters, first letter most significant.
pub fn word_index(w: &[usize], m: usize) -> usize {
    w.iter().fold(0, |acc, &l| acc * m + l)
}

/// The left-normed multilinear basis of `Lie(n)`.
#[derive(Clone, Debug)]
pub struct MultilinearLieBasis {
    pub n: usize,
    pub brackets: Vec<LieWord>,
    pub expansions: Vec<WordVector>,
    /// Row `k` is the expansion of bracket `k` over the `n!` multilinear
    /// words in lexicographic order.
    pub matrix: RationalMatrix,
}

impl MultilinearLieBasis {
    /// Index of a multilinear word among the `n!` permutations.
    pub fn word_position(w: &[usize]) -> usize {
        lex_rank(w)
    }

    pub fn labels(&self) -> Vec<String> {
        self.brackets.iter().map(|b| format!("{b}")).collect()
    }
}

/// `[[…[x₁, x_{σ(2)}], …], x_{σ(n)}]` for `σ` over permutations of `{2,…,n}`,
/// rank-checked inside `ℚ[Sₙ]`.
pub fn lie_basis_multilinear(n: usize) -> Result<MultilinearLieBasis> {
    if n == 0 {
        return Err(Error::Unsupported("Lie(0)".into()));
    }
    let mut brackets = Vec::new();
    for tail in Permutation::all(n - 1) {
        let mut letters = alloc::vec![0];
        letters.extend(tail.images().iter().map(|&i| i + 1));
        brackets.push(LieWord::left_normed(&letters));
    }
    let expansions: Vec<WordVector> = brackets.iter().map(expand).collect();
    let rows: Vec<SparseVec> = expansions.iter().map(|e| e.to_sparse(lex_rank)).collect();
    let cols = crate::perm::factorial(n);
    let echelon = RowEchelon::from_vectors(cols, rows.iter().cloned());
    if echelon.rank() != brackets.len() {
        return Err(Error::Representation(format!(
            "left-normed brackets of degree {n} have rank {} < {}",
            echelon.rank(),
            brackets.len()
        )));
    }
    let matrix = RationalMatrix::from_rows(cols, rows)?;
    Ok(MultilinearLieBasis { n, brackets, expansions, matrix })
}

pub fn is_lyndon(w: &[usize]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|k| {
        let rotated = w[k..].iter().chain(&w[..k]);
        w.iter().lt(rotated)
    })
}

/// Lyndon words of length exactly `n` over `{0,…,m-1}`, lexicographic (Duval).
pub fn lyndon_words(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<usize> = alloc::vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let k = w.len();
        while w.len() < n {
            w.push(w[w.len() - k]);
        }
        while w.last() == Some(&(m - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(l) => *l += 1,
            None => break,
        }
    }
    out
}

/// Bracketing `[std(u), std(v)]` where `v` is the longest proper Lyndon suffix.
pub fn standard_bracketing(w: &[usize]) -> LieWord {
    if w.len() == 1 {
        return LieWord::Letter(w[0]);
    }
    let split = (1..w.len()).find(|&k| is_lyndon(&w[k..])).expect("a single letter is Lyndon");
    LieWord::bracket(standard_bracketing(&w[..split]), standard_bracketing(&w[split..]))
}

pub fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// `(1/n) Σ_{d|n} μ(d) m^{n/d}`.
pub fn witt_dim(m: usize, n: usize) -> usize {
    let total: i128 = divisors(n).map(|d| mobius(d) as i128 * (m as i128).pow((n / d) as u32)).sum();
    (total / n as i128) as usize
}

/// Number of rotation classes of words of length `n` over `m` letters:
/// `(1/n) Σ_{d|n} φ(d) m^{n/d}`.
pub fn necklace_count(m: usize, n: usize) -> usize {
    let total: u128 = divisors(n).map(|d| euler_phi(d) as u128 * (m as u128).pow((n / d) as u32)).sum();
    (total / n as u128) as usize
}

/// Expansions of the standard bracketings of the Lyndon words of length `n`
/// over `m` letters: a basis of the degree-`n` part of `FreeLie(kᵐ)`.
pub fn lie_projector_basis(m: usize, n: usize) -> Result<Vec<WordVector>> {
    let basis: Vec<WordVector> = lyndon_words(m, n).iter().map(|w| expand(&standard_bracketing(w))).collect();
    let rank = RowEchelon::from_vectors(
        m.pow(n as u32),
        basis.iter().map(|v| v.to_sparse(|w| word_index(w, m))),
    )
    .rank();
    if rank != basis.len() {
        return Err(Error::Representation(format!(
            "Lyndon bracketings of length {n} over {m} letters have rank {rank} < {}",
            basis.len()
        )));
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn wv(terms: &[(&[usize], i64)]) -> WordVector {
        WordVector::from_terms(terms.iter().map(|(w, c)| (w.to_vec(), rational(*c, 1))))
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(&LieWord::letter(0)), wv(&[(&[0], 1)]));
        let b = LieWord::left_normed(&[0, 1]);
        assert_eq!(expand(&b), wv(&[(&[0, 1], 1), (&[1, 0], -1)]));
        let c = LieWord::left_normed(&[0, 1, 2]);
        assert_eq!(
            expand(&c),
            wv(&[(&[0, 1, 2], 1), (&[1, 0, 2], -1), (&[2, 0, 1], -1), (&[2, 1, 0], 1)])
        );
        assert_eq!(format!("{c}"), "[[x1,x2],x3]");
    }

    #[test]
    fn jacobi_vanishes() {
        assert!(jacobi_sum().is_zero());
        let t = expand(&LieWord::bracket(LieWord::left_normed(&[0, 1]), LieWord::letter(2)));
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn multilinear_basis_sizes() {
        assert_eq!(lie_basis_multilinear(1).unwrap().brackets.len(), 1);
        assert_eq!(lie_basis_multilinear(2).unwrap().brackets.len(), 1);
        let b3 = lie_basis_multilinear(3).unwrap();
        assert_eq!(b3.labels(), alloc::vec!["[[x1,x2],x3]", "[[x1,x3],x2]"]);
        for n in 1..=6 {
            let b = lie_basis_multilinear(n).unwrap();
            assert_eq!(b.brackets.len(), crate::perm::factorial(n - 1));
            assert_eq!(crate::linalg::rank(&b.matrix), b.brackets.len());
        }
    }

    #[test]
    fn lyndon_examples() {
        assert_eq!(lyndon_words(2, 1), alloc::vec![alloc::vec![0], alloc::vec![1]]);
        assert_eq!(lyndon_words(2, 2), alloc::vec![alloc::vec![0, 1]]);
        assert_eq!(lyndon_words(2, 3), alloc::vec![alloc::vec![0, 0, 1], alloc::vec![0, 1, 1]]);
        for w in lyndon_words(3, 5) {
            assert!(is_lyndon(&w));
        }
    }

    #[test]
    fn lyndon_counts_match_witt() {
        for m in 1..=4 {
            for n in 1..=6 {
                assert_eq!(lyndon_words(m, n).len(), witt_dim(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_dim(5, 1), 5);
        assert_eq!(witt_dim(2, 3), 2);
        assert_eq!(witt_dim(3, 3), 8);
        assert_eq!(witt_dim(1, 2), 0);
        assert_eq!(necklace_count(2, 3), 4);
        assert_eq!(necklace_count(2, 4), 6);
    }

    #[test]
    fn projector_basis_examples() {
        assert_eq!(lie_projector_basis(1, 1).unwrap(), alloc::vec![wv(&[(&[0], 1)])]);
        assert_eq!(lie_projector_basis(2, 2).unwrap(), alloc::vec![wv(&[(&[0, 1], 1), (&[1, 0], -1)])]);
        let b = lie_projector_basis(2, 3).unwrap();
        assert_eq!(b.len(), 2);
        // [x1,[x1,x2]] = x1x1x2 − 2·x1x2x1 + x2x1x1
        assert!(b.iter().all(|v| v.len() == 3));
        assert_eq!(format!("{}", standard_bracketing(&[0, 0, 1])), "[x1,[x1,x2]]");
        assert_eq!(format!("{}", standard_bracketing(&[0, 1, 1])), "[[x1,x2],x2]");
    }

    #[test]
    fn relabeling_preserves_lie_subspace() {
        for m in 1..=3 {
            for n in 1..=4 {
                let basis = lie_projector_basis(m, n).unwrap();
                let sparse: Vec<_> = basis.iter().map(|v| v.to_sparse(|w| word_index(w, m))).collect();
                let e = RowEchelon::from_vectors(m.pow(n as u32), sparse);
                for sigma in Permutation::all(m) {
                    for v in &basis {
                        let moved = v.relabel(|l| sigma.apply(l));
                        assert!(e.contains(&moved.to_sparse(|w| word_index(w, m))));
                    }
                }
            }
        }
    }

    #[test]
    fn mobius_and_phi() {
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, alloc::vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        assert_eq!(euler_phi(12), 4);
    }
}
