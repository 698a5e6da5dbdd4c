//! Permutations of `{0,…,N-1}` and explicitly enumerated subgroups of `S_N`.
//!
//! Internally everything is 0-based. One-line notation in the usual 1-based
//! form is accepted by [`Permutation::from_one_line`] and produced by
//! [`Permutation::one_line`] and `Display`.
//!
//! Composition is `(p∘q)(i) = p(q(i))` everywhere in the crate.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(arity: usize) -> Self {
        Self { images: (0..arity).collect() }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n || seen[p] {
                return Err(Error::NotAPermutation(images));
            }
            seen[p] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let images = one_line
            .iter()
            .map(|&p| p.checked_sub(1).ok_or_else(|| Error::NotAPermutation(one_line.to_vec())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }

    /// The adjacent transposition swapping `i` and `i + 1` (0-based), i.e. `s_{i+1}`.
    pub fn adjacent(arity: usize, i: usize) -> Result<Self> {
        if i + 1 >= arity {
            return Err(Error::OutOfRange { index: i, limit: arity.saturating_sub(1) });
        }
        let mut images: Vec<usize> = (0..arity).collect();
        images.swap(i, i + 1);
        Ok(Self { images })
    }

    /// The cycle `0 ↦ 1 ↦ … ↦ N-1 ↦ 0`, one-line `(2,3,…,N,1)`.
    pub fn long_cycle(arity: usize) -> Self {
        Self { images: (0..arity).map(|i| (i + 1) % arity.max(1)).collect() }
    }

    /// One-line `(N,…,1)`.
    pub fn reversal(arity: usize) -> Self {
        Self { images: (0..arity).rev().collect() }
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|p| p + 1).collect()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.arity() != other.arity() {
            return Err(Error::Arity { expected: self.arity(), found: other.arity() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&q| self.images[q]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.arity()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let n = self.arity();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of positions `i` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> usize {
        self.images.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Indices `i₁,…,i_k` (0-based, `i` meaning the transposition of `i` and
    /// `i+1`) with `self = s_{i₁} ∘ … ∘ s_{i_k}`. The length equals the
    /// number of inversions.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // Bubble sort the one-line notation by right multiplications
        // p ∘ s_j (which swap positions j, j+1) until the identity is reached;
        // then p = s_{j_k} ∘ … ∘ s_{j_1}.
        let mut work = self.images.clone();
        let mut swaps = Vec::new();
        let n = work.len();
        for end in (1..n).rev() {
            for j in 0..end {
                if work[j] > work[j + 1] {
                    work.swap(j, j + 1);
                    swaps.push(j);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Inverse of [`Self::adjacent_factorization`].
    pub fn from_adjacent_word(arity: usize, word: &[usize]) -> Result<Permutation> {
        let mut p = Permutation::identity(arity);
        for &i in word {
            p = p.compose_unchecked(&Permutation::adjacent(arity, i)?);
        }
        Ok(p)
    }

    /// Lexicographic rank among all permutations of the same arity.
    pub fn lex_rank(&self) -> usize {
        lex_rank(&self.images)
    }

    /// All permutations of `{0,…,n-1}` in lexicographic one-line order.
    pub fn all(arity: usize) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(factorial(arity));
        let mut current: Vec<usize> = (0..arity).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, ")")
    }
}

/// Lexicographic rank of a sequence that is a permutation of `0..len`.
pub(crate) fn lex_rank(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&q| q < images[i]).count();
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A finitely generated subgroup of `S_N`, enumerated eagerly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    arity: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl GroupSpec {
    /// Closure of `generators` under composition; elements sorted by one-line notation.
    pub fn new(arity: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.arity() != arity {
                return Err(Error::Arity { expected: arity, found: g.arity() });
            }
        }
        let elements = enumerate(arity, &generators);
        Ok(Self { arity, generators, elements })
    }

    pub fn trivial(arity: usize) -> Self {
        Self { arity, generators: Vec::new(), elements: vec![Permutation::identity(arity)] }
    }

    pub fn symmetric(arity: usize) -> Self {
        let generators =
            (0..arity.saturating_sub(1)).map(|i| Permutation::adjacent(arity, i).unwrap()).collect();
        Self { arity, generators, elements: Permutation::all(arity) }
    }

    /// `C_N` generated by the long cycle.
    pub fn cyclic(arity: usize) -> Self {
        Self::new(arity, vec![Permutation::long_cycle(arity)]).unwrap()
    }

    /// Permutations preserving the consecutive blocks of sizes `c₁,…,c_m`.
    pub fn young(content: &Content) -> Self {
        let n = content.total();
        let mut generators = Vec::new();
        let mut start = 0;
        for &c in content.counts() {
            for i in start..(start + c).saturating_sub(1) {
                generators.push(Permutation::adjacent(n, i).unwrap());
            }
            start += c;
        }
        Self::new(n, generators).unwrap()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_full_symmetric(&self) -> bool {
        self.order() == factorial(self.arity)
    }

    /// `true` when every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &GroupSpec) -> bool {
        self.arity == other.arity && self.elements.iter().all(|g| other.contains(g))
    }
}

/// Breadth-first closure of the generators, returned sorted.
pub fn enumerate(arity: usize, generators: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(arity);
    let mut seen = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = p.compose_unchecked(g);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// Letter multiplicities `c₁,…,c_m` of a word of length `n = Σ cⱼ` over `m` letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn slots(&self) -> usize {
        self.counts.len()
    }

    /// Non-zero parts; these determine the Young subgroup.
    pub fn blocks(&self) -> Vec<usize> {
        self.counts.iter().copied().filter(|&c| c > 0).collect()
    }

    /// The sorted word `0^{c₁} 1^{c₂} …`.
    pub fn sorted_letters(&self) -> Vec<usize> {
        let mut letters = Vec::with_capacity(self.total());
        for (j, &c) in self.counts.iter().enumerate() {
            letters.extend(core::iter::repeat_n(j, c));
        }
        letters
    }

    pub fn of_letters(letters: &[usize], slots: usize) -> Self {
        let mut counts = vec![0; slots];
        for &l in letters {
            counts[l] += 1;
        }
        Self { counts }
    }

    /// All weak compositions of `n` into `m` parts, ordered so that the sorted
    /// words come out in lexicographic order.
    pub fn weak_compositions(n: usize, m: usize) -> Vec<Content> {
        let mut out = Vec::new();
        let mut counts = vec![0; m];
        fn rec(pos: usize, remaining: usize, counts: &mut Vec<usize>, out: &mut Vec<Content>) {
            let m = counts.len();
            if pos + 1 == m {
                counts[pos] = remaining;
                out.push(Content { counts: counts.clone() });
                return;
            }
            for c in (0..=remaining).rev() {
                counts[pos] = c;
                rec(pos + 1, remaining - c, counts, out);
            }
        }
        if m == 0 {
            if n == 0 {
                out.push(Content { counts: Vec::new() });
            }
            return out;
        }
        rec(0, n, &mut counts, &mut out);
        out
    }
}

pub fn young_subgroup(content: &Content) -> GroupSpec {
    GroupSpec::young(content)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn compose_examples() {
        let s = p(&[2, 1, 3]);
        assert!(s.compose(&s).unwrap().is_identity());
        let c = p(&[2, 3, 1]);
        assert_eq!(c.compose(&Permutation::identity(3)).unwrap(), c);
        assert_eq!(c.compose(&c).unwrap(), p(&[3, 1, 2]));
        assert!(matches!(c.compose(&Permutation::identity(2)), Err(Error::Arity { .. })));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::adjacent(4, 2).unwrap().sign(), -1);
        for n in 1..8 {
            let expected = if (n - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(Permutation::long_cycle(n).sign(), expected, "n = {n}");
        }
    }

    #[test]
    fn enumerate_examples() {
        let s3 = GroupSpec::new(3, vec![p(&[2, 1, 3]), p(&[1, 3, 2])]).unwrap();
        assert_eq!(s3.order(), 6);
        let c4 = GroupSpec::new(4, vec![p(&[2, 3, 4, 1])]).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(GroupSpec::new(5, vec![]).unwrap().order(), 1);
        assert!(s3.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn young_examples() {
        assert_eq!(young_subgroup(&Content::new(vec![3])).order(), 6);
        assert_eq!(young_subgroup(&Content::new(vec![2, 1])).order(), 2);
        assert_eq!(young_subgroup(&Content::new(vec![1, 1, 1])).order(), 1);
    }

    #[test]
    fn descent_examples() {
        assert_eq!(Permutation::identity(5).descents(), 0);
        assert_eq!(Permutation::reversal(5).descents(), 4);
        assert_eq!(p(&[2, 1, 3]).descents(), 1);
    }

    #[test]
    fn factorization_examples() {
        assert!(Permutation::identity(4).adjacent_factorization().is_empty());
        assert_eq!(Permutation::adjacent(3, 0).unwrap().adjacent_factorization(), vec![0]);
        let target = p(&[3, 1, 2]);
        let word = target.adjacent_factorization();
        assert_eq!(word.len(), 2);
        assert_eq!(Permutation::from_adjacent_word(3, &word).unwrap(), target);
    }

    #[test]
    fn factorization_recomposes_on_s5() {
        for g in Permutation::all(5) {
            let word = g.adjacent_factorization();
            assert_eq!(word.len(), g.inversions());
            assert_eq!(Permutation::from_adjacent_word(5, &word).unwrap(), g);
        }
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for (i, g) in Permutation::all(5).iter().enumerate() {
            assert_eq!(g.lex_rank(), i);
        }
    }

    #[test]
    fn group_axioms_for_standard_groups() {
        let groups = [
            GroupSpec::symmetric(4),
            GroupSpec::cyclic(5),
            GroupSpec::young(&Content::new(vec![2, 2])),
            GroupSpec::symmetric(7),
            GroupSpec::new(4, vec![p(&[2, 1, 4, 3]), p(&[3, 4, 1, 2])]).unwrap(),
        ];
        for g in &groups {
            assert!(g.contains(&Permutation::identity(g.arity())));
            assert_eq!(factorial(g.arity()) % g.order(), 0);
            for a in g.elements() {
                assert!(g.contains(&a.inverse()));
            }
            if g.order() <= 120 {
                for a in g.elements() {
                    for b in g.elements() {
                        assert!(g.contains(&a.compose(b).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn young_orders_up_to_seven() {
        for n in 0..=7 {
            for m in 1..=n.max(1) {
                for c in Content::weak_compositions(n, m) {
                    let expected: usize = c.counts().iter().map(|&k| factorial(k)).product();
                    assert_eq!(young_subgroup(&c).order(), expected, "{:?}", c);
                }
            }
        }
    }

    #[test]
    fn compositions_are_ordered_by_sorted_word() {
        let cs = Content::weak_compositions(3, 2);
        let counts: Vec<_> = cs.iter().map(|c| c.counts().to_vec()).collect();
        assert_eq!(counts, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        assert_eq!(Content::weak_compositions(4, 3).len(), 15);
    }
}
