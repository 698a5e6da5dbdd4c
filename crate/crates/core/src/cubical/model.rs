//! Concrete bases for `M ⊗_G (k^m)^{⊗n}` and the maps induced on them by
//! position-equivariant word operators.
//!
//! [`OrbitModel`] splits the word space into `G`-orbits. An orbit with
//! representative `r` and stabilizer `H` contributes `M ⊗_H k ≅ M_H`, written
//! as the image of the averaging projector `π_H`. A word `w = g·r` is moved
//! across the tensor by `x ⊗ g·r = x·g ⊗ r`.
//!
//! [`NaiveModel`] works in the full space `M ⊗ (k^m)^{⊗n}` and takes the image
//! of the diagonal projector `(1/|G|) Σ_g A(g⁻¹) ⊗ g`. It shares no code with
//! the orbit path beyond the word differential and serves as its oracle.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use super::{differential_terms_rational, position_action_unchecked, word_count, BettiTable, CochainComplex, Word};
use crate::cubical::betti;
use crate::error::{Error, Result};
use crate::linalg::{dense_add_scaled, Rational, RationalMatrix, RowEchelon, SparseVec};
use crate::modules::{average, sgn_multiplicity, young_average, RightAction};
use crate::perm::{Content, GroupSpec, Permutation};

/// Default bound on `dim M · m^n` for [`Mode::Naive`].
pub const DEFAULT_NAIVE_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Orbit,
    Naive,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Orbit => "orbit",
            Mode::Naive => "naive",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orbit" => Ok(Mode::Orbit),
            "naive" => Ok(Mode::Naive),
            other => Err(Error::Unsupported(format!("mode `{other}`"))),
        }
    }
}

/// A word operator: `w ↦ Σ c·w'`. Operators handed to
/// [`CoinvariantModel::operator`] must commute with the position action.
pub type WordOperator<'f> = dyn Fn(&Word) -> Vec<(Word, Rational)> + 'f;

/// Bases of `M ⊗_G (k^m)^{⊗n}` for `1 ≤ m ≤ top_degree`.
pub trait CoinvariantModel {
    fn n(&self) -> usize;
    fn top_degree(&self) -> usize;
    fn dim(&self, m: usize) -> usize;
    fn basis_labels(&self, m: usize) -> Vec<String>;
    /// Matrix (rows: source basis) of the map induced by `op` from degree
    /// `source` to degree `target`.
    fn operator(&self, source: usize, target: usize, op: &WordOperator<'_>) -> Result<RationalMatrix>;
}

fn validate(action: &dyn RightAction, group: &GroupSpec) -> Result<()> {
    if group.arity() != action.arity() {
        return Err(Error::Arity { expected: action.arity(), found: group.arity() });
    }
    if action.arity() == 0 {
        return Err(Error::Unsupported("complex with n = 0".into()));
    }
    if let Some(g) = group.generators().iter().find(|g| !action.acts_by(g)) {
        return Err(Error::Representation(format!("{g} does not act on {}", action.name())));
    }
    Ok(())
}

fn check_degree(top: usize, m: usize) -> Result<()> {
    if m == 0 || m > top {
        return Err(Error::OutOfRange { index: m, limit: top + 1 });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum StabilizerKey {
    Young(Vec<usize>),
    Elements(Vec<Permutation>),
}

/// `M_H` as the row space of `π_H`, in reduced echelon form.
#[derive(Clone, Debug)]
struct Coinvariant {
    rows: Vec<Vec<Rational>>,
    /// `x ↦ x·q` gives the coordinates of `[x]` in `rows`.
    q: RationalMatrix,
    pivots: Vec<usize>,
}

impl Coinvariant {
    fn from_projector(dim: usize, projector: Vec<Vec<Rational>>) -> Self {
        let echelon = RowEchelon::from_vectors(dim, projector.iter().map(|r| SparseVec::from_dense(r)));
        let pivots = echelon.pivots().to_vec();
        let q_rows = projector
            .iter()
            .map(|r| SparseVec::from_dense(&pivots.iter().map(|&p| r[p].clone()).collect::<Vec<_>>()))
            .collect();
        Self {
            rows: echelon.rows().iter().map(|r| r.to_dense(dim)).collect(),
            q: RationalMatrix::from_rows(pivots.len(), q_rows).expect("pivot columns in range"),
            pivots,
        }
    }
}

#[derive(Clone, Debug)]
struct Orbit {
    rep: Word,
    coinvariant: usize,
}

#[derive(Clone, Debug)]
enum Lookup {
    /// `G = Sₙ`: orbits are contents.
    Content(BTreeMap<Vec<usize>, usize>),
    /// Word index ↦ (orbit, `g` with `g·rep = w`).
    Table(Vec<(usize, Permutation)>),
}

#[derive(Clone, Debug)]
struct OrbitDegree {
    orbits: Vec<Orbit>,
    offsets: Vec<usize>,
    dim: usize,
    lookup: Lookup,
}

impl OrbitDegree {
    fn locate(&self, w: &Word) -> (usize, Permutation) {
        match &self.lookup {
            Lookup::Content(index) => {
                let content = Content::of_letters(w.letters(), w.slots());
                let mut positions: Vec<usize> = (0..w.len()).collect();
                positions.sort_by_key(|&p| w.letters()[p]);
                let g = Permutation::from_images(positions).expect("sorting permutation");
                (index[content.counts()], g)
            }
            Lookup::Table(table) => table[w.index()].clone(),
        }
    }
}

/// One coinvariant space per distinct stabilizer (Young subgroups are keyed
/// by their block sizes).
struct CoinvariantCache<'a> {
    action: &'a dyn RightAction,
    n: usize,
    keys: BTreeMap<StabilizerKey, usize>,
    list: Vec<Coinvariant>,
}

impl CoinvariantCache<'_> {
    fn get(&mut self, key: StabilizerKey) -> usize {
        if let Some(&i) = self.keys.get(&key) {
            return i;
        }
        let d = self.action.dim();
        let subgroup = match &key {
            StabilizerKey::Elements(elements) => Some(GroupSpec::new(self.n, elements.clone()).expect("same arity")),
            StabilizerKey::Young(_) => None,
        };
        let projector: Vec<Vec<Rational>> = (0..d)
            .map(|a| {
                let e = SparseVec::unit(a).to_dense(d);
                match (&key, &subgroup) {
                    (StabilizerKey::Young(blocks), _) => young_average(self.action, &e, blocks),
                    (_, Some(h)) => average(self.action, &e, h),
                    (StabilizerKey::Elements(_), None) => unreachable!(),
                }
            })
            .collect();
        self.list.push(Coinvariant::from_projector(d, projector));
        self.keys.insert(key, self.list.len() - 1);
        self.list.len() - 1
    }
}

/// Orbit-decomposed model; see the module docs.
pub struct OrbitModel<'a> {
    action: &'a dyn RightAction,
    n: usize,
    degrees: Vec<OrbitDegree>,
    coinvariants: Vec<Coinvariant>,
}

/// Orbits of `G` on words of length `n` over `m` letters, with representatives
/// and stabilizers. For `G = Sₙ` the orbits are the contents and the
/// representatives are sorted; otherwise representatives are lexicographically
/// least.
pub fn orbit_decomposition(n: usize, m: usize, group: &GroupSpec) -> Vec<(Word, GroupSpec)> {
    if group.is_full_symmetric() {
        return Content::weak_compositions(n, m)
            .into_iter()
            .map(|c| (Word::from_letters_unchecked(m, c.sorted_letters()), GroupSpec::young(&c)))
            .collect();
    }
    let (reps, _) = closure_orbits(n, m, group);
    reps.into_iter()
        .map(|rep| {
            let stab = GroupSpec::new(n, stabilizer(group, &rep)).expect("same arity");
            (rep, stab)
        })
        .collect()
}

fn stabilizer(group: &GroupSpec, rep: &Word) -> Vec<Permutation> {
    group.elements().iter().filter(|g| position_action_unchecked(g, rep) == *rep).cloned().collect()
}

fn closure_orbits(n: usize, m: usize, group: &GroupSpec) -> (Vec<Word>, Vec<(usize, Permutation)>) {
    let total = word_count(n, m);
    let mut table: Vec<Option<(usize, Permutation)>> = alloc::vec![None; total];
    let mut reps = Vec::new();
    for idx in 0..total {
        if table[idx].is_some() {
            continue;
        }
        let rep = Word::from_index(n, m, idx);
        let orbit = reps.len();
        for g in group.elements() {
            let target = position_action_unchecked(g, &rep).index();
            if table[target].is_none() {
                table[target] = Some((orbit, g.clone()));
            }
        }
        reps.push(rep);
    }
    (reps, table.into_iter().map(|e| e.expect("every word lies in an orbit")).collect())
}

impl<'a> OrbitModel<'a> {
    pub fn new(action: &'a dyn RightAction, group: &GroupSpec, top: usize) -> Result<Self> {
        validate(action, group)?;
        let n = action.arity();
        let symmetric = group.is_full_symmetric() && action.symmetric();
        let mut cache = CoinvariantCache { action, n, keys: BTreeMap::new(), list: Vec::new() };
        let mut degrees = Vec::with_capacity(top);
        for m in 1..=top {
            let (orbits, lookup): (Vec<Orbit>, Lookup) = if symmetric {
                let contents = Content::weak_compositions(n, m);
                let index = contents.iter().enumerate().map(|(i, c)| (c.counts().to_vec(), i)).collect();
                let orbits = contents
                    .iter()
                    .map(|c| Orbit {
                        rep: Word::from_letters_unchecked(m, c.sorted_letters()),
                        coinvariant: cache.get(StabilizerKey::Young(c.blocks())),
                    })
                    .collect();
                (orbits, Lookup::Content(index))
            } else {
                let (reps, table) = closure_orbits(n, m, group);
                let orbits = reps
                    .into_iter()
                    .map(|rep| {
                        let key = StabilizerKey::Elements(stabilizer(group, &rep));
                        Orbit { rep, coinvariant: cache.get(key) }
                    })
                    .collect();
                (orbits, Lookup::Table(table))
            };
            let mut offsets = Vec::new();
            let mut dim = 0;
            for o in &orbits {
                offsets.push(dim);
                dim += cache.list[o.coinvariant].rows.len();
            }
            degrees.push(OrbitDegree { orbits, offsets, dim, lookup });
        }
        Ok(Self { action, n, degrees, coinvariants: cache.list })
    }
}

impl CoinvariantModel for OrbitModel<'_> {
    fn n(&self) -> usize {
        self.n
    }

    fn top_degree(&self) -> usize {
        self.degrees.len()
    }

    fn dim(&self, m: usize) -> usize {
        self.degrees[m - 1].dim
    }

    fn basis_labels(&self, m: usize) -> Vec<String> {
        let degree = &self.degrees[m - 1];
        let mut out = Vec::with_capacity(degree.dim);
        for o in &degree.orbits {
            for &p in &self.coinvariants[o.coinvariant].pivots {
                out.push(format!("[e{}]⊗{}", p + 1, o.rep));
            }
        }
        out
    }

    fn operator(&self, source: usize, target: usize, op: &WordOperator<'_>) -> Result<RationalMatrix> {
        check_degree(self.top_degree(), source)?;
        check_degree(self.top_degree(), target)?;
        let (src, dst) = (&self.degrees[source - 1], &self.degrees[target - 1]);
        let d = self.action.dim();
        let mut rows = Vec::with_capacity(src.dim);
        for orbit in &src.orbits {
            let mut grouped: BTreeMap<usize, BTreeMap<Permutation, Rational>> = BTreeMap::new();
            for (w, c) in op(&orbit.rep) {
                if w.slots() != target || w.len() != self.n {
                    return Err(Error::Shape(format!("operator produced {w} outside degree {target}")));
                }
                let (o, g) = dst.locate(&w);
                *grouped.entry(o).or_default().entry(g).or_insert_with(Rational::zero) += c;
            }
            for b in &self.coinvariants[orbit.coinvariant].rows {
                let mut entries = Vec::new();
                for (&o, terms) in &grouped {
                    let mut v = alloc::vec![Rational::zero(); d];
                    for (g, c) in terms {
                        if !c.is_zero() {
                            dense_add_scaled(&mut v, c, &self.action.apply(b, g));
                        }
                    }
                    let q = &self.coinvariants[dst.orbits[o].coinvariant].q;
                    for (k, x) in q.left_mul(&v).into_iter().enumerate() {
                        if !x.is_zero() {
                            entries.push((dst.offsets[o] + k, x));
                        }
                    }
                }
                rows.push(SparseVec::from_entries(entries));
            }
        }
        RationalMatrix::from_rows(dst.dim, rows)
    }
}

/// Full-space model; see the module docs.
pub struct NaiveModel<'a> {
    action: &'a dyn RightAction,
    n: usize,
    degrees: Vec<RowEchelon>,
}

impl<'a> NaiveModel<'a> {
    /// Fails with [`Error::CapExceeded`] when `dim M · m^n > cap` for some degree.
    pub fn new(action: &'a dyn RightAction, group: &GroupSpec, top: usize, cap: usize) -> Result<Self> {
        validate(action, group)?;
        let n = action.arity();
        let d = action.dim();
        for m in 1..=top {
            let dim = (m as u128).pow(n as u32) * d as u128;
            if dim > cap as u128 {
                return Err(Error::CapExceeded { dim: usize::try_from(dim).unwrap_or(usize::MAX), cap });
            }
        }
        let twisted: Vec<(Permutation, RationalMatrix)> =
            group.elements().iter().map(|g| (g.clone(), action.matrix(&g.inverse()))).collect();
        let mut degrees = Vec::with_capacity(top);
        for m in 1..=top {
            let words = word_count(n, m);
            let mut echelon = RowEchelon::new(d * words);
            for idx in 0..words {
                let w = Word::from_index(n, m, idx);
                let moved: Vec<usize> = twisted.iter().map(|(g, _)| position_action_unchecked(g, &w).index()).collect();
                for a in 0..d {
                    let mut entries = Vec::new();
                    for ((_, mat), &target) in twisted.iter().zip(&moved) {
                        entries.extend(mat.row(a).iter().map(|(b, x)| (target * d + b, x.clone())));
                    }
                    echelon.insert(SparseVec::from_entries(entries));
                }
            }
            degrees.push(echelon);
        }
        Ok(Self { action, n, degrees })
    }
}

impl CoinvariantModel for NaiveModel<'_> {
    fn n(&self) -> usize {
        self.n
    }

    fn top_degree(&self) -> usize {
        self.degrees.len()
    }

    fn dim(&self, m: usize) -> usize {
        self.degrees[m - 1].rank()
    }

    fn basis_labels(&self, m: usize) -> Vec<String> {
        let d = self.action.dim();
        self.degrees[m - 1]
            .pivots()
            .iter()
            .map(|&p| format!("e{}⊗{}", p % d + 1, Word::from_index(self.n, m, p / d)))
            .collect()
    }

    fn operator(&self, source: usize, target: usize, op: &WordOperator<'_>) -> Result<RationalMatrix> {
        check_degree(self.top_degree(), source)?;
        check_degree(self.top_degree(), target)?;
        let d = self.action.dim();
        let dst = &self.degrees[target - 1];
        let mut cache: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        let mut rows = Vec::new();
        for u in self.degrees[source - 1].rows() {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (idx, x) in u.iter() {
                let (widx, a) = (idx / d, idx % d);
                let terms = cache.entry(widx).or_insert_with(|| {
                    op(&Word::from_index(self.n, source, widx)).into_iter().map(|(w, c)| (w.index(), c)).collect()
                });
                for (t, c) in terms.iter() {
                    *acc.entry(t * d + a).or_insert_with(Rational::zero) += x * c;
                }
            }
            let image = SparseVec::from_entries(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
            let coords = dst
                .coordinates(&image)
                .ok_or_else(|| Error::NotInSpan(format!("operator leaves the invariants in degree {target}")))?;
            rows.push(coords);
        }
        RationalMatrix::from_rows(dst.rank(), rows)
    }
}

pub fn build_model<'a>(
    action: &'a dyn RightAction,
    group: &GroupSpec,
    top: usize,
    mode: Mode,
    cap: usize,
) -> Result<Box<dyn CoinvariantModel + 'a>> {
    Ok(match mode {
        Mode::Orbit => Box::new(OrbitModel::new(action, group, top)?),
        Mode::Naive => Box::new(NaiveModel::new(action, group, top, cap)?),
    })
}

/// The complex of `model` in degrees `1..=m_max+1` with the word differential.
pub fn complex_from_model(
    label: impl Into<String>,
    model: &dyn CoinvariantModel,
    m_max: usize,
) -> Result<CochainComplex> {
    if m_max == 0 || m_max + 1 > model.top_degree() {
        return Err(Error::OutOfRange { index: m_max, limit: model.top_degree() });
    }
    let labels = (1..=m_max + 1).map(|m| model.basis_labels(m)).collect();
    let differentials =
        (1..=m_max).map(|m| model.operator(m, m + 1, &differential_terms_rational)).collect::<Result<Vec<_>>>()?;
    CochainComplex::new(label, model.n(), labels, differentials)
}

/// `Cub(G, M) = M ⊗_G C(A)^{(1,…,1)}` through degree `m_max + 1`.
pub fn cubical_complex(
    action: &dyn RightAction,
    group: &GroupSpec,
    m_max: usize,
    mode: Mode,
    cap: usize,
) -> Result<CochainComplex> {
    let model = build_model(action, group, m_max + 1, mode, cap)?;
    complex_from_model(action.name(), model.as_ref(), m_max)
}

/// Outcome of checking that `H(Cub(G, M))` is `M ⊗_G sgn` in degree `n`.
#[derive(Clone, Debug)]
pub struct Cor2Report {
    pub expected: usize,
    pub table: BettiTable,
    pub pass: bool,
}

pub fn verify_cor2(
    action: &dyn RightAction,
    group: &GroupSpec,
    m_max: usize,
    mode: Mode,
    cap: usize,
) -> Result<Cor2Report> {
    let n = action.arity();
    if m_max < n + 1 {
        return Err(Error::Unsupported(format!("window m_max = {m_max} must reach n + 1 = {}", n + 1)));
    }
    let expected = sgn_multiplicity(action, group)?;
    let table = betti(&cubical_complex(action, group, m_max, mode, cap)?);
    let pass = table.is_concentrated(n, expected);
    Ok(Cor2Report { expected, table, pass })
}
