//! Direct free-algebra versions of the complexes for `Ass(n)`, `Lie(n)` and
//! `k[Sₙ]_{Cₙ}`, built without any group action.
//!
//! Degree `m` is the degree-`n` part of `FreeAss(k^m)`, of `FreeLie(k^m)`
//! (Lyndon basis), or of `FreeAss(k^m)/[FreeAss, FreeAss]` (necklaces). The
//! differential substitutes variables:
//! `f ↦ Σᵢ (−1)ⁱ f∘φᵢ` with `φ₀ : xⱼ ↦ xⱼ₊₁`, `φᵢ : xᵢ ↦ xᵢ + xᵢ₊₁` (letters
//! above `i` shifted up) and `φ_{m+1}` the inclusion. Substitutions are
//! algebra maps, so they preserve Lie elements and commute with rotation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::cubical::{betti, cubical_complex, BettiTable, CochainComplex, Mode, DEFAULT_NAIVE_CAP};
use crate::error::{Error, Result};
use crate::lie::{lie_projector_basis, lyndon_words, standard_bracketing, word_index, WordVector};
use crate::linalg::{Rational, RationalMatrix, SpanSolver, SparseVec};
use crate::modules::{BuiltinKind, ModuleSpec};
use crate::perm::GroupSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Lie,
    Ass,
    Tr,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Lie, Family::Ass, Family::Tr];

    pub fn name(self) -> &'static str {
        match self {
            Family::Lie => "lie",
            Family::Ass => "ass",
            Family::Tr => "tr",
        }
    }

    /// The module whose cubical complex this family realizes.
    pub fn module_kind(self) -> BuiltinKind {
        match self {
            Family::Lie => BuiltinKind::Lie,
            Family::Ass => BuiltinKind::Regular,
            Family::Tr => BuiltinKind::TrCyclic,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lie" => Ok(Family::Lie),
            "ass" => Ok(Family::Ass),
            "tr" => Ok(Family::Tr),
            other => Err(Error::Unsupported(format!("family `{other}`"))),
        }
    }
}

/// The substitution `φᵢ` on a single letter of `[m]` (0-based letters,
/// `i` as in the module docs).
fn substitute_letter(i: usize, m: usize, letter: usize) -> WordVector {
    let one = Rational::one();
    let single = |l: usize| WordVector::word(alloc::vec![l]);
    if i == 0 {
        return single(letter + 1);
    }
    if i == m + 1 {
        return single(letter);
    }
    let split = i - 1;
    match letter.cmp(&split) {
        core::cmp::Ordering::Less => single(letter),
        core::cmp::Ordering::Greater => single(letter + 1),
        core::cmp::Ordering::Equal => {
            let mut v = single(split);
            v.add_term(alloc::vec![split + 1], &one);
            v
        }
    }
}

/// `f ↦ Σᵢ (−1)ⁱ f∘φᵢ` on a homogeneous polynomial in `m` variables.
pub fn substitute(f: &WordVector, m: usize) -> WordVector {
    let mut out = WordVector::zero();
    let images: Vec<Vec<WordVector>> =
        (0..=m + 1).map(|i| (0..m).map(|l| substitute_letter(i, m, l)).collect()).collect();
    for (w, c) in f.terms() {
        for (i, image) in images.iter().enumerate() {
            let mut product = WordVector::word(Vec::new());
            for &l in w {
                product = product.mul(&image[l]);
            }
            let sign = if i % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_scaled(&sign, &product);
        }
    }
    out
}

/// Lexicographically least rotation.
pub fn necklace_rep(w: &[usize]) -> Vec<usize> {
    (0..w.len()).map(|k| [&w[k..], &w[..k]].concat()).min().unwrap_or_default()
}

fn all_words(n: usize, m: usize) -> Vec<Vec<usize>> {
    let total = m.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut w = alloc::vec![0; n];
            for p in (0..n).rev() {
                w[p] = idx % m;
                idx /= m;
            }
            w
        })
        .collect()
}

fn necklaces(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut reps: Vec<Vec<usize>> = all_words(n, m).into_iter().filter(|w| necklace_rep(w) == *w).collect();
    reps.sort();
    reps
}

fn format_word(w: &[usize]) -> String {
    w.iter().map(|l| format!("x{}", l + 1)).collect()
}

/// Basis of degree `m` as word vectors (Lie) or words (Ass, Tr), with labels.
fn degree_basis(family: Family, n: usize, m: usize) -> Result<(Vec<WordVector>, Vec<String>)> {
    Ok(match family {
        Family::Ass => {
            let words = all_words(n, m);
            let labels = words.iter().map(|w| format_word(w)).collect();
            (words.into_iter().map(WordVector::word).collect(), labels)
        }
        Family::Tr => {
            let reps = necklaces(n, m);
            let labels = reps.iter().map(|w| format!("tr({})", format_word(w))).collect();
            (reps.into_iter().map(WordVector::word).collect(), labels)
        }
        Family::Lie => {
            let labels = lyndon_words(m, n).iter().map(|w| format!("{}", standard_bracketing(w))).collect();
            (lie_projector_basis(m, n)?, labels)
        }
    })
}

/// Matrix of the substitution differential from degree `m` to `m + 1`.
pub fn substitution_differential(family: Family, n: usize, m: usize) -> Result<RationalMatrix> {
    if n == 0 || m == 0 {
        return Err(Error::Unsupported(format!("substitution differential with n = {n}, m = {m}")));
    }
    let (source, _) = degree_basis(family, n, m)?;
    let (target, _) = degree_basis(family, n, m + 1)?;
    let images = source.iter().map(|f| substitute(f, m));
    let rows: Vec<SparseVec> = match family {
        Family::Ass => images.map(|v| v.to_sparse(|w| word_index(w, m + 1))).collect(),
        Family::Tr => {
            let index: BTreeMap<Vec<usize>, usize> = target
                .iter()
                .enumerate()
                .map(|(k, v)| (v.terms().keys().next().expect("single word").clone(), k))
                .collect();
            images
                .map(|v| {
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (w, c) in v.terms() {
                        *acc.entry(index[&necklace_rep(w)]).or_insert_with(Rational::zero) += c;
                    }
                    SparseVec::from_entries(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                })
                .collect()
        }
        Family::Lie => {
            let len = (m + 1).pow(n as u32);
            let basis: Vec<SparseVec> = target.iter().map(|v| v.to_sparse(|w| word_index(w, m + 1))).collect();
            let solver = SpanSolver::new(len, &basis)?;
            images
                .map(|v| {
                    solver
                        .solve(&v.to_sparse(|w| word_index(w, m + 1)))
                        .map(|c| SparseVec::from_dense(&c))
                        .ok_or_else(|| Error::NotInSpan(format!("substitution leaves FreeLie in degree {}", m + 1)))
                })
                .collect::<Result<_>>()?
        }
    };
    RationalMatrix::from_rows(target.len(), rows)
}

#[derive(Clone, Debug)]
pub struct DirectComplex {
    pub family: Family,
    pub n: usize,
    pub complex: CochainComplex,
}

impl DirectComplex {
    pub fn new(family: Family, n: usize, m_max: usize) -> Result<Self> {
        let labels = (1..=m_max + 1).map(|m| degree_basis(family, n, m).map(|(_, l)| l)).collect::<Result<_>>()?;
        let differentials =
            (1..=m_max).map(|m| substitution_differential(family, n, m)).collect::<Result<Vec<_>>>()?;
        let complex = CochainComplex::new(format!("{family}({n})"), n, labels, differentials)?;
        Ok(Self { family, n, complex })
    }
}

#[derive(Clone, Debug)]
pub struct CompareReport {
    pub family: Family,
    pub direct: BettiTable,
    pub engine: BettiTable,
    pub pass: bool,
}

/// Dimensions and Betti numbers of the direct complex against
/// `Cub(Sₙ, M)` for the matching built-in module.
pub fn compare_with_engine(family: Family, n: usize, m_max: usize, mode: Mode) -> Result<CompareReport> {
    let direct = betti(&DirectComplex::new(family, n, m_max)?.complex);
    let module = ModuleSpec::builtin(family.module_kind(), n)?;
    let engine = betti(&cubical_complex(&module, &GroupSpec::symmetric(n), m_max, mode, DEFAULT_NAIVE_CAP)?);
    let pass = direct.rows == engine.rows;
    Ok(CompareReport { family, direct, engine, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::differential;
    use crate::lie::{necklace_count, witt_dim};

    #[test]
    fn ass_n1_matches_word_differential() {
        for m in 1..=5 {
            assert_eq!(substitution_differential(Family::Ass, 1, m).unwrap(), differential(1, m));
        }
    }

    #[test]
    fn ass_matches_word_differential_in_general() {
        for n in 2..=3 {
            for m in 1..=3 {
                assert_eq!(substitution_differential(Family::Ass, n, m).unwrap(), differential(n, m));
            }
        }
    }

    #[test]
    fn domain_dimensions() {
        assert_eq!(substitution_differential(Family::Lie, 2, 1).unwrap().rows(), 0);
        assert_eq!(substitution_differential(Family::Lie, 2, 2).unwrap().rows(), 1);
        assert_eq!(necklaces(3, 2).len(), 4);
        for n in 1..=4 {
            for m in 1..=4 {
                let c = DirectComplex::new(Family::Lie, n, 3).unwrap().complex;
                let t = DirectComplex::new(Family::Tr, n, 3).unwrap().complex;
                assert_eq!(c.dim(m), witt_dim(m, n));
                assert_eq!(t.dim(m), necklace_count(m, n));
            }
        }
    }

    #[test]
    fn necklace_reps() {
        assert_eq!(necklace_rep(&[1, 0, 0]), alloc::vec![0, 0, 1]);
        assert_eq!(necklace_rep(&[1, 0, 1, 0]), alloc::vec![0, 1, 0, 1]);
    }

    #[test]
    fn compare_examples() {
        let r = compare_with_engine(Family::Lie, 2, 4, Mode::Orbit).unwrap();
        assert!(r.pass && r.direct.is_concentrated(2, 1));
        let r = compare_with_engine(Family::Ass, 3, 4, Mode::Orbit).unwrap();
        assert!(r.pass && r.direct.is_concentrated(3, 1));
        let r = compare_with_engine(Family::Tr, 3, 4, Mode::Orbit).unwrap();
        assert!(r.pass && r.direct.is_concentrated(3, 1));
    }
}
