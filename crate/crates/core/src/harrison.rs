//! The Harrison subcomplex `Harr(G, M) ⊂ Cub(G, M)`: the image of the first
//! Eulerian idempotent acting on the slots `[m]` of each degree.
//!
//! Slot convention (the only place it is fixed): a group algebra element
//! `Σ c_σ σ` acts on a word `w` by `Σ c_σ·sign(σ)·(σ⁻¹ ∘ w)`. With this
//! choice `e⁽¹⁾` is idempotent and commutes with the cubical differential;
//! both facts are re-checked whenever a complex is built.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cubical::{
    betti, build_model, differential_terms, BettiTable, CochainComplex, Mode, Word,
};
use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix, RowEchelon, SparseVec};
use crate::modules::RightAction;
use crate::perm::{GroupSpec, Permutation};

/// An element of `ℚ[S_m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    arity: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn identity(arity: usize) -> Self {
        Self::from_terms(arity, [(Permutation::identity(arity), Rational::one())]).unwrap()
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (p, c) in terms {
            if p.arity() != arity {
                return Err(Error::Arity { expected: arity, found: p.arity() });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Permutation, c: Rational) {
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// `(Σ aσ σ)(Σ bτ τ) = Σ aσ bτ (σ∘τ)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::Arity { expected: self.arity, found: other.arity });
        }
        let mut out = Self::zero(self.arity);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(s.compose(t)?, a * b);
            }
        }
        Ok(out)
    }

    /// The operator on words described in the module docs, as a list of
    /// `(τ, c)` meaning `w ↦ Σ c·(τ ∘ w)`.
    pub fn slot_operator(&self) -> Vec<(Permutation, Rational)> {
        self.terms
            .iter()
            .map(|(s, c)| (s.inverse(), if s.sign() > 0 { c.clone() } else { -c.clone() }))
            .collect()
    }

    /// Applies [`Self::slot_operator`] to a word with `arity` slots.
    pub fn apply_to_word(&self, w: &Word) -> Result<Vec<(Word, Rational)>> {
        let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
        for (t, c) in self.slot_operator() {
            *acc.entry(slot_action(&t, w)?).or_insert_with(Rational::zero) += c;
        }
        Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// `e⁽¹⁾ = Σ_σ (−1)^{des σ} / (m·C(m−1, des σ)) · σ`.
pub fn eulerian_idempotent(m: usize) -> Result<GroupAlgebraElement> {
    if m == 0 {
        return Err(Error::Unsupported("Eulerian idempotent of S_0".into()));
    }
    let terms = Permutation::all(m).into_iter().map(|s| {
        let des = s.descents();
        let sign = if des % 2 == 0 { 1 } else { -1 };
        let c = Rational::new(BigInt::from(sign), BigInt::from(m) * binomial(m - 1, des));
        (s, c)
    });
    GroupAlgebraElement::from_terms(m, terms)
}

/// `(σ·w)(p) = σ(w(p))`.
pub fn slot_action(sigma: &Permutation, w: &Word) -> Result<Word> {
    if sigma.arity() != w.slots() {
        return Err(Error::Arity { expected: w.slots(), found: sigma.arity() });
    }
    Word::new(w.slots(), w.letters().iter().map(|&l| sigma.apply(l)).collect())
}

/// Matrix of the `e⁽¹⁾` slot operator on the full word space `(k^m)^{⊗n}`.
pub fn idempotent_matrix(n: usize, m: usize) -> Result<RationalMatrix> {
    let e = eulerian_idempotent(m)?;
    let words = crate::cubical::word_count(n, m);
    let rows = (0..words)
        .map(|idx| {
            let w = Word::from_index(n, m, idx);
            Ok(SparseVec::from_entries(e.apply_to_word(&w)?.into_iter().map(|(t, c)| (t.index(), c)).collect()))
        })
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_rows(words, rows)
}

/// `Harr(G, M)` through degree `m_max + 1`.
pub fn harrison_complex(
    action: &dyn RightAction,
    group: &GroupSpec,
    m_max: usize,
    mode: Mode,
    cap: usize,
) -> Result<CochainComplex> {
    let top = m_max + 1;
    let model = build_model(action, group, top, mode, cap)?;
    let mut projectors = Vec::with_capacity(top);
    for m in 1..=top {
        let e = eulerian_idempotent(m)?;
        let op = |w: &Word| e.apply_to_word(w).expect("slot arity matches degree");
        let p = model.operator(m, m, &op)?;
        if p.mul(&p)? != p {
            return Err(Error::Representation(format!("e1 is not idempotent in degree {m}")));
        }
        projectors.push(p);
    }
    let diff = |w: &Word| {
        differential_terms(w).into_iter().map(|(t, c)| (t, Rational::from_integer(BigInt::from(c)))).collect()
    };
    let mut cubical = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let d = model.operator(m, m + 1, &diff)?;
        if projectors[m - 1].mul(&d)? != d.mul(&projectors[m])? {
            return Err(Error::Commutation(format!("e1 and d_{m} in {}", action.name())));
        }
        cubical.push(d);
    }
    let bases: Vec<RowEchelon> = projectors
        .iter()
        .zip(1..)
        .map(|(p, m)| RowEchelon::from_vectors(model.dim(m), p.row_vectors().iter().cloned()))
        .collect();
    let labels: Vec<Vec<String>> = bases
        .iter()
        .zip(1..)
        .map(|(b, m)| {
            let all = model.basis_labels(m);
            b.pivots().iter().map(|&p| format!("e1·{}", all[p])).collect()
        })
        .collect();
    let mut differentials = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let (src, dst) = (&bases[m - 1], &bases[m]);
        let rows = src
            .rows()
            .iter()
            .map(|u| {
                dst.coordinates(&cubical[m - 1].left_mul_sparse(u))
                    .ok_or_else(|| Error::NotInSpan(format!("d_{m} leaves the Harrison subcomplex")))
            })
            .collect::<Result<Vec<_>>>()?;
        differentials.push(RationalMatrix::from_rows(dst.rank(), rows)?);
    }
    CochainComplex::new(format!("Harr({})", action.name()), action.arity(), labels, differentials)
}

#[derive(Clone, Debug)]
pub struct HarrisonReport {
    /// Expected `b¹` (`dim M` for `n = 1`, otherwise 0); all other degrees vanish.
    pub expected_h1: usize,
    pub table: BettiTable,
    pub pass: bool,
}

/// Checks `H(Harr(G, M)) = M[-1]` for `n = 1` and `0` for `n > 1`.
pub fn verify_harrison(
    action: &dyn RightAction,
    group: &GroupSpec,
    m_max: usize,
    mode: Mode,
    cap: usize,
) -> Result<HarrisonReport> {
    if m_max < 3 {
        return Err(Error::Unsupported(format!("Harrison window m_max = {m_max} < 3")));
    }
    let table = betti(&harrison_complex(action, group, m_max, mode, cap)?);
    let expected_h1 = if action.arity() == 1 { action.dim() } else { 0 };
    let pass = table.is_concentrated(1, expected_h1);
    Ok(HarrisonReport { expected_h1, table, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::{cubical_complex, differential, DEFAULT_NAIVE_CAP};
    use crate::linalg::rational;
    use crate::modules::{BuiltinKind, ModuleSpec};

    #[test]
    fn idempotent_examples() {
        assert_eq!(eulerian_idempotent(1).unwrap(), GroupAlgebraElement::identity(1));
        let e2 = eulerian_idempotent(2).unwrap();
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(e2.coefficient(&Permutation::identity(2)), rational(1, 2));
        assert_eq!(e2.coefficient(&swap), rational(-1, 2));
        for m in 1..=5 {
            let e = eulerian_idempotent(m).unwrap();
            assert_eq!(e.mul(&e).unwrap(), e, "m={m}");
        }
    }

    #[test]
    fn idempotent_on_words_and_commutes() {
        for n in 1..=4 {
            for m in 1..=4 {
                let p = idempotent_matrix(n, m).unwrap();
                assert_eq!(p.mul(&p).unwrap(), p, "n={n} m={m}");
                if n <= 3 {
                    let d = differential(n, m);
                    assert_eq!(p.mul(&d).unwrap(), d.mul(&idempotent_matrix(n, m + 1).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn slot_action_examples() {
        let w = Word::from_one_based(2, &[1, 2, 1]).unwrap();
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(slot_action(&Permutation::identity(2), &w).unwrap(), w);
        assert_eq!(slot_action(&swap, &w).unwrap(), Word::from_one_based(2, &[2, 1, 2]).unwrap());
        assert!(slot_action(&Permutation::identity(3), &w).is_err());
    }

    #[test]
    fn harrison_cohomology_cases() {
        let r = verify_harrison(&ModuleSpec::trivial(1), &GroupSpec::trivial(1), 3, Mode::Orbit, DEFAULT_NAIVE_CAP)
            .unwrap();
        assert!(r.pass && r.table.betti(1) == Some(1));
        let r = verify_harrison(&ModuleSpec::trivial(2), &GroupSpec::symmetric(2), 4, Mode::Orbit, DEFAULT_NAIVE_CAP)
            .unwrap();
        assert!(r.pass && r.table.is_zero());
        let reg = ModuleSpec::builtin(BuiltinKind::Regular, 3).unwrap();
        let r = verify_harrison(&reg, &GroupSpec::symmetric(3), 5, Mode::Orbit, DEFAULT_NAIVE_CAP).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn harrison_bounded_by_cubical() {
        let lie = ModuleSpec::builtin(BuiltinKind::Lie, 2).unwrap();
        let g = GroupSpec::symmetric(2);
        for mode in [Mode::Orbit, Mode::Naive] {
            let h = betti(&harrison_complex(&lie, &g, 4, mode, DEFAULT_NAIVE_CAP).unwrap());
            let c = betti(&cubical_complex(&lie, &g, 4, mode, DEFAULT_NAIVE_CAP).unwrap());
            for (a, b) in h.rows.iter().zip(&c.rows) {
                assert!(a.betti <= b.betti && a.dim <= b.dim);
            }
        }
    }
}
