//! Right `S_N`-modules as explicit matrix representations.
//!
//! A [`ModuleSpec`] stores one matrix per adjacent transposition
//! `s₁,…,s_{N-1}`. Coordinate vectors are rows and the action is on the
//! right: `x·g = x·A(g)` with `A(p∘q) = A(p)·A(q)`, so a general permutation
//! acts through its adjacent factorization. Construction verifies the
//! Coxeter presentation, which makes that action well defined.
//!
//! Modules over a proper subgroup `G ⊆ S_N` (needed for induction) are
//! [`GroupModule`]s, which carry a matrix for every element of `G`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{lie_basis_multilinear, WordVector};
use crate::linalg::{image_basis, Rational, RationalMatrix, SpanSolver, SparseVec};
use crate::perm::{factorial, lex_rank, GroupSpec, Permutation};

/// Largest `n` accepted by [`ModuleSpec::builtin`].
pub const MAX_BUILTIN_ARITY: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BuiltinKind {
    Trivial,
    Sign,
    /// `Ass(n) = k[Sₙ]`.
    Regular,
    /// `Lie(n)` in the left-normed basis.
    Lie,
    /// `k[Sₙ]_{Cₙ}`.
    TrCyclic,
    /// `Lie(n)` as an `S_{n+1}`-module through the cyclic structure.
    LieCyclic,
}

impl BuiltinKind {
    pub const ALL: [BuiltinKind; 6] = [
        BuiltinKind::Trivial,
        BuiltinKind::Sign,
        BuiltinKind::Regular,
        BuiltinKind::Lie,
        BuiltinKind::TrCyclic,
        BuiltinKind::LieCyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinKind::Trivial => "trivial",
            BuiltinKind::Sign => "sign",
            BuiltinKind::Regular => "regular",
            BuiltinKind::Lie => "lie",
            BuiltinKind::TrCyclic => "tr_cyclic",
            BuiltinKind::LieCyclic => "lie_cyclic",
        }
    }

    /// Arity `N` of the acting symmetric group for parameter `n`.
    pub fn arity(self, n: usize) -> usize {
        match self {
            BuiltinKind::LieCyclic => n + 1,
            _ => n,
        }
    }
}

impl fmt::Display for BuiltinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "trivial" => BuiltinKind::Trivial,
            "sign" => BuiltinKind::Sign,
            "regular" | "ass" => BuiltinKind::Regular,
            "lie" => BuiltinKind::Lie,
            "tr_cyclic" | "tr" => BuiltinKind::TrCyclic,
            "lie_cyclic" | "sder" => BuiltinKind::LieCyclic,
            other => return Err(Error::Unsupported(format!("module kind `{other}`"))),
        })
    }
}

/// Something a permutation group acts on from the right.
pub trait RightAction {
    fn name(&self) -> &str;
    fn arity(&self) -> usize;
    fn dim(&self) -> usize;
    /// `true` when every permutation of `S_N` acts.
    fn symmetric(&self) -> bool;
    /// Whether `g` belongs to the acting group.
    fn acts_by(&self, g: &Permutation) -> bool {
        g.arity() == self.arity()
    }

    /// `v·g`.
    fn apply(&self, v: &[Rational], g: &Permutation) -> Vec<Rational>;

    /// `v·sᵢ` for the transposition of `i, i+1`.
    fn apply_adjacent(&self, v: &[Rational], i: usize) -> Vec<Rational> {
        self.apply(v, &Permutation::adjacent(self.arity(), i).expect("generator index in range"))
    }

    /// Matrix of `g`: row `a` is `e_a·g`.
    fn matrix(&self, g: &Permutation) -> RationalMatrix {
        let d = self.dim();
        let rows = (0..d).map(|a| SparseVec::from_dense(&self.apply(&SparseVec::unit(a).to_dense(d), g))).collect();
        RationalMatrix::from_rows(d, rows).expect("square action matrix")
    }
}

/// A right `S_N`-module given by generator matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    name: String,
    arity: usize,
    dim: usize,
    basis_labels: Vec<String>,
    generators: Vec<RationalMatrix>,
}

impl ModuleSpec {
    /// Validates shapes and the Coxeter presentation.
    pub fn new(
        name: impl Into<String>,
        arity: usize,
        dim: usize,
        basis_labels: Vec<String>,
        generators: Vec<RationalMatrix>,
    ) -> Result<Self> {
        let name = name.into();
        if arity == 0 {
            return Err(Error::InvalidModule("arity must be at least 1".into()));
        }
        if basis_labels.len() != dim {
            return Err(Error::InvalidModule(format!(
                "{} basis labels for dimension {dim}",
                basis_labels.len()
            )));
        }
        if generators.len() != arity - 1 {
            return Err(Error::InvalidModule(format!(
                "expected {} generator matrices for N = {arity}, found {}",
                arity - 1,
                generators.len()
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::InvalidModule(format!(
                    "generator s{} is {}x{}, expected {dim}x{dim}",
                    i + 1,
                    g.rows(),
                    g.cols()
                )));
            }
        }
        check_coxeter(&name, &generators)?;
        Ok(Self { name, arity, dim, basis_labels, generators })
    }

    pub fn builtin(kind: BuiltinKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Unsupported(format!("{kind}(0)")));
        }
        if n > MAX_BUILTIN_ARITY {
            return Err(Error::Unsupported(format!("{kind}({n}) exceeds n ≤ {MAX_BUILTIN_ARITY}")));
        }
        match kind {
            BuiltinKind::Trivial => Ok(scalar_module("trivial", n, 1)),
            BuiltinKind::Sign => Ok(scalar_module("sign", n, -1)),
            BuiltinKind::Regular => regular(n),
            BuiltinKind::Lie => lie(n),
            BuiltinKind::TrCyclic => tr_cyclic(n),
            BuiltinKind::LieCyclic => lie_cyclic(n),
        }
    }

    pub fn trivial(n: usize) -> Self {
        scalar_module("trivial", n, 1)
    }

    pub fn sign(n: usize) -> Self {
        scalar_module("sign", n, -1)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn generators(&self) -> &[RationalMatrix] {
        &self.generators
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    fn check_arity(&self, p: &Permutation) -> Result<()> {
        if p.arity() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: p.arity() });
        }
        Ok(())
    }

    /// `A(p) = A(s_{i₁})⋯A(s_{i_k})` along the adjacent factorization.
    pub fn act(&self, p: &Permutation) -> Result<RationalMatrix> {
        self.check_arity(p)?;
        let mut m = RationalMatrix::identity(self.dim);
        for i in p.adjacent_factorization() {
            m = m.mul(&self.generators[i])?;
        }
        Ok(m)
    }

    pub fn character(&self, p: &Permutation) -> Result<Rational> {
        Ok(self.act(p)?.trace())
    }

    /// Dimension of `M ⊗_G sgn`: `(1/|G|) Σ sign(g)·χ(g)`.
    pub fn sgn_coinvariants_dim(&self, group: &GroupSpec) -> Result<usize> {
        if group.arity() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: group.arity() });
        }
        let mut sum = Rational::zero();
        for g in group.elements() {
            let chi = self.character(g)?;
            if g.sign() > 0 {
                sum += chi;
            } else {
                sum -= chi;
            }
        }
        integral_dimension(sum / Rational::from_integer(BigInt::from(group.order())))
    }

    /// Averaging projector `π = (1/|H|) Σ_h A(h)` and a basis of its image
    /// `{x·π}` (row vectors), which is the coinvariant space `M_H`.
    pub fn coinvariants(&self, group: &GroupSpec) -> Result<Coinvariants> {
        if group.arity() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: group.arity() });
        }
        let mut projector = RationalMatrix::zeros(self.dim, self.dim);
        for h in group.elements() {
            projector = projector.add(&self.act(h)?)?;
        }
        let projector = projector.scaled(&Rational::from_integer(BigInt::from(group.order())).recip());
        let basis = image_basis(&projector.transpose());
        Ok(Coinvariants { projector, basis })
    }

    /// The same module viewed over a subgroup `G ⊆ S_N`.
    pub fn restrict(&self, group: &GroupSpec) -> Result<GroupModule> {
        if group.arity() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: group.arity() });
        }
        let generators = group.generators().iter().map(|g| self.act(g)).collect::<Result<Vec<_>>>()?;
        GroupModule::new(format!("{}|G", self.name), group.clone(), self.basis_labels.clone(), generators)
    }

    /// Conjugate every generator by `p`: `A'(s) = p·A(s)·p⁻¹`.
    pub fn change_basis(&self, p: &RationalMatrix) -> Result<ModuleSpec> {
        let inv = p.inverse().ok_or_else(|| Error::InvalidModule("change of basis is singular".into()))?;
        let generators =
            self.generators.iter().map(|a| p.mul(a)?.mul(&inv)).collect::<Result<Vec<_>>>()?;
        let labels = (0..self.dim).map(|i| format!("b{}", i + 1)).collect();
        ModuleSpec::new(format!("{}'", self.name), self.arity, self.dim, labels, generators)
    }
}

impl RightAction for ModuleSpec {
    fn name(&self) -> &str {
        &self.name
    }

    fn arity(&self) -> usize {
        self.arity
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn symmetric(&self) -> bool {
        true
    }

    fn apply(&self, v: &[Rational], g: &Permutation) -> Vec<Rational> {
        let mut v = v.to_vec();
        for i in g.adjacent_factorization() {
            v = self.generators[i].left_mul(&v);
        }
        v
    }

    fn apply_adjacent(&self, v: &[Rational], i: usize) -> Vec<Rational> {
        self.generators[i].left_mul(v)
    }

    fn matrix(&self, g: &Permutation) -> RationalMatrix {
        self.act(g).expect("arity checked by caller")
    }
}

#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub projector: RationalMatrix,
    pub basis: Vec<Vec<Rational>>,
}

fn integral_dimension(q: Rational) -> Result<usize> {
    if !q.is_integer() || q < Rational::zero() {
        return Err(Error::Representation(format!(
            "sign multiplicity {} is not a non-negative integer",
            crate::linalg::format_rational(&q)
        )));
    }
    q.to_integer().try_into().map_err(|_| Error::Representation("dimension overflow".into()))
}

/// Checks `sᵢ² = 1`, `sᵢsᵢ₊₁sᵢ = sᵢ₊₁sᵢsᵢ₊₁` and `sᵢsⱼ = sⱼsᵢ` (`|i−j| ≥ 2`),
/// reporting the first violated relation (1-based names).
pub fn check_coxeter(name: &str, generators: &[RationalMatrix]) -> Result<()> {
    let violated = |relation: String| Error::Relation { module: name.to_string(), relation };
    for (i, a) in generators.iter().enumerate() {
        if !a.mul(a)?.is_identity() {
            return Err(violated(format!("s{}^2 = 1", i + 1)));
        }
    }
    for i in 0..generators.len().saturating_sub(1) {
        let (a, b) = (&generators[i], &generators[i + 1]);
        if a.mul(b)?.mul(a)? != b.mul(a)?.mul(b)? {
            return Err(violated(format!("s{0} s{1} s{0} = s{1} s{0} s{1}", i + 1, i + 2)));
        }
    }
    for i in 0..generators.len() {
        for j in i + 2..generators.len() {
            let (a, b) = (&generators[i], &generators[j]);
            if a.mul(b)? != b.mul(a)? {
                return Err(violated(format!("s{0} s{1} = s{1} s{0}", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

fn scalar_module(name: &str, n: usize, value: i64) -> ModuleSpec {
    let g = RationalMatrix::from_integers(&[&[value]]);
    ModuleSpec {
        name: format!("{name}({n})"),
        arity: n,
        dim: 1,
        basis_labels: alloc::vec![String::from("1")],
        generators: alloc::vec![g; n - 1],
    }
}

/// Permutation-matrix module on a finite basis: row `b` maps to `image(b, i)`
/// under generator `i`.
fn permutation_module(
    name: String,
    arity: usize,
    labels: Vec<String>,
    image: impl Fn(usize, usize) -> usize,
) -> Result<ModuleSpec> {
    let dim = labels.len();
    let generators = (0..arity - 1)
        .map(|i| {
            let rows = (0..dim).map(|b| SparseVec::unit(image(b, i))).collect();
            RationalMatrix::from_rows(dim, rows)
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleSpec::new(name, arity, dim, labels, generators)
}

/// `k[Sₙ]` with basis `e_σ` (lexicographic) and `e_σ·g = e_{σ∘g}`.
fn regular(n: usize) -> Result<ModuleSpec> {
    let elements = Permutation::all(n);
    let labels = elements.iter().map(|p| p.to_string()).collect();
    let gens: Vec<Permutation> = (0..n - 1).map(|i| Permutation::adjacent(n, i).unwrap()).collect();
    permutation_module(format!("regular({n})"), n, labels, |b, i| elements[b].compose_unchecked(&gens[i]).lex_rank())
}

/// Lexicographically least element of the coset `Cₙσ`.
fn cyclic_coset_rep(sigma: &Permutation, cycle_powers: &[Permutation]) -> Permutation {
    cycle_powers.iter().map(|c| c.compose_unchecked(sigma)).min().expect("non-empty cyclic group")
}

/// `k[Sₙ]_{Cₙ}`: cosets `Cₙσ` with `[σ]·g = [σ∘g]`.
fn tr_cyclic(n: usize) -> Result<ModuleSpec> {
    let powers = GroupSpec::cyclic(n).elements().to_vec();
    let mut reps: Vec<Permutation> = Permutation::all(n).iter().map(|s| cyclic_coset_rep(s, &powers)).collect();
    reps.sort();
    reps.dedup();
    let index: BTreeMap<Permutation, usize> = reps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let labels = reps.iter().map(|p| format!("C{n}{p}")).collect();
    let gens: Vec<Permutation> = (0..n - 1).map(|i| Permutation::adjacent(n, i).unwrap()).collect();
    permutation_module(format!("tr_cyclic({n})"), n, labels, |b, i| {
        index[&cyclic_coset_rep(&reps[b].compose_unchecked(&gens[i]), &powers)]
    })
}

/// Relabels letters `i ↔ i+1` in a word vector.
fn swap_letters(v: &WordVector, i: usize) -> WordVector {
    v.relabel(|l| {
        if l == i {
            i + 1
        } else if l == i + 1 {
            i
        } else {
            l
        }
    })
}

/// `Lie(n)` in the left-normed basis; `sᵢ` relabels `xᵢ ↔ xᵢ₊₁`.
fn lie(n: usize) -> Result<ModuleSpec> {
    let basis = lie_basis_multilinear(n)?;
    let rows: Vec<SparseVec> = basis.expansions.iter().map(|e| e.to_sparse(lex_rank)).collect();
    let solver = SpanSolver::new(factorial(n), &rows)?;
    let generators = (0..n - 1)
        .map(|i| {
            let images = basis
                .expansions
                .iter()
                .map(|e| {
                    let moved = swap_letters(e, i).to_sparse(lex_rank);
                    solver
                        .solve(&moved)
                        .map(|c| SparseVec::from_dense(&c))
                        .ok_or_else(|| Error::NotInSpan(format!("s{} applied to a Lie({n}) basis element", i + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            RationalMatrix::from_rows(basis.brackets.len(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleSpec::new(format!("lie({n})"), n, basis.brackets.len(), basis.labels(), generators)
}

/// Generator `j` (swapping letters `j, j+1` of `{0,…,n}`) applied to the word
/// `x_{w(1)}…x_{w(n)}` read as the cyclic word `x₀x_{w(1)}…x_{w(n)}`:
/// relabel, rotate `x₀` to the front, read off the rest. Word letters are
/// `0..n` standing for `x₁…xₙ`.
fn cyclic_generator_on_word(w: &[usize], j: usize) -> Vec<usize> {
    let n = w.len();
    let swap = |l: usize| {
        if l == j {
            j + 1
        } else if l == j + 1 {
            j
        } else {
            l
        }
    };
    let cyclic: Vec<usize> = core::iter::once(0).chain(w.iter().map(|&l| l + 1)).map(swap).collect();
    let zero = cyclic.iter().position(|&l| l == 0).expect("letter 0 present");
    (1..=n).map(|k| cyclic[(zero + k) % (n + 1)] - 1).collect()
}

/// Matrices of `s₁,…,sₙ ∈ S_{n+1}` on `Ass(n)` (basis: the `n!` words
/// `x_{w(1)}…x_{w(n)}` in lexicographic order) acting on cyclic words. No
/// signs. Fixing the first letter recovers the relabeling action on `Ass(n)`.
pub fn cyclic_action(n: usize) -> Result<Vec<RationalMatrix>> {
    if n == 0 {
        return Err(Error::Unsupported("cyclic action on Ass(0)".into()));
    }
    let words = Permutation::all(n);
    (0..n)
        .map(|j| {
            let rows = words
                .iter()
                .map(|w| SparseVec::unit(lex_rank(&cyclic_generator_on_word(w.images(), j))))
                .collect();
            RationalMatrix::from_rows(words.len(), rows)
        })
        .collect()
}

/// `Lie(n) ⊂ Ass(n)` with the restricted `S_{n+1}` cyclic action, written in
/// the left-normed basis. Leaving the Lie subspace is a hard error.
fn lie_cyclic(n: usize) -> Result<ModuleSpec> {
    let basis = lie_basis_multilinear(n)?;
    let rows: Vec<SparseVec> = basis.expansions.iter().map(|e| e.to_sparse(lex_rank)).collect();
    let solver = SpanSolver::new(factorial(n), &rows)?;
    let generators = (0..n)
        .map(|j| {
            let images = basis
                .expansions
                .iter()
                .map(|e| {
                    let mut moved = WordVector::zero();
                    for (w, c) in e.terms() {
                        moved.add_term(cyclic_generator_on_word(w, j), c);
                    }
                    solver
                        .solve(&moved.to_sparse(lex_rank))
                        .map(|c| SparseVec::from_dense(&c))
                        .ok_or_else(|| {
                            Error::NotInSpan(format!("cyclic generator s{} moves Lie({n}) out of itself", j + 1))
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            RationalMatrix::from_rows(basis.brackets.len(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleSpec::new(format!("lie_cyclic({n})"), n + 1, basis.brackets.len(), basis.labels(), generators)
}

/// A right module over an explicitly enumerated subgroup `G ⊆ S_N`.
#[derive(Clone, Debug)]
pub struct GroupModule {
    name: String,
    group: GroupSpec,
    dim: usize,
    basis_labels: Vec<String>,
    generators: Vec<RationalMatrix>,
    table: BTreeMap<Permutation, RationalMatrix>,
}

impl GroupModule {
    /// `generators[k]` is the matrix of `group.generators()[k]`. The full
    /// element table is built and checked to be a homomorphism.
    pub fn new(
        name: impl Into<String>,
        group: GroupSpec,
        basis_labels: Vec<String>,
        generators: Vec<RationalMatrix>,
    ) -> Result<Self> {
        let name = name.into();
        let dim = basis_labels.len();
        if generators.len() != group.generators().len() {
            return Err(Error::InvalidModule(format!(
                "{} matrices for {} group generators",
                generators.len(),
                group.generators().len()
            )));
        }
        if generators.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::InvalidModule(format!("generator matrices must be {dim}x{dim}")));
        }
        let mut table = BTreeMap::new();
        table.insert(Permutation::identity(group.arity()), RationalMatrix::identity(dim));
        let mut frontier = alloc::vec![Permutation::identity(group.arity())];
        while let Some(p) = frontier.pop() {
            let base = table[&p].clone();
            for (g, a) in group.generators().iter().zip(&generators) {
                let q = p.compose_unchecked(g);
                let m = base.mul(a)?;
                match table.get(&q) {
                    Some(existing) if *existing != m => {
                        return Err(Error::Relation {
                            module: name,
                            relation: format!("{q} reached with two different matrices"),
                        })
                    }
                    Some(_) => {}
                    None => {
                        table.insert(q.clone(), m);
                        frontier.push(q);
                    }
                }
            }
        }
        Ok(Self { name, group, dim, basis_labels, generators, table })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn generators(&self) -> &[RationalMatrix] {
        &self.generators
    }

    pub fn act(&self, g: &Permutation) -> Result<&RationalMatrix> {
        self.table.get(g).ok_or_else(|| Error::Representation(format!("{g} is not in the acting group")))
    }

    pub fn character(&self, g: &Permutation) -> Result<Rational> {
        Ok(self.act(g)?.trace())
    }

    /// `(1/|G|) Σ_{g∈G} sign(g)·χ(g)`.
    pub fn sgn_coinvariants_dim(&self) -> Result<usize> {
        let mut sum = Rational::zero();
        for g in self.group.elements() {
            let chi = self.character(g)?;
            if g.sign() > 0 {
                sum += chi;
            } else {
                sum -= chi;
            }
        }
        integral_dimension(sum / Rational::from_integer(BigInt::from(self.group.order())))
    }
}

impl RightAction for GroupModule {
    fn name(&self) -> &str {
        &self.name
    }

    fn arity(&self) -> usize {
        self.group.arity()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn symmetric(&self) -> bool {
        self.group.is_full_symmetric()
    }

    fn acts_by(&self, g: &Permutation) -> bool {
        self.table.contains_key(g)
    }

    fn apply(&self, v: &[Rational], g: &Permutation) -> Vec<Rational> {
        self.table[g].left_mul(v)
    }

    fn matrix(&self, g: &Permutation) -> RationalMatrix {
        self.table[g].clone()
    }
}

/// `Ind_G^{S_N} M = M ⊗_G k[S_N]`. Basis: pairs (right coset representative
/// `r`, basis vector of `M`), representatives lexicographically least in `Gr`.
/// `(x ⊗ r)·s = x·g ⊗ r'` where `r∘s = g∘r'`.
pub fn induce(module: &GroupModule) -> Result<ModuleSpec> {
    let group = &module.group;
    let n = group.arity();
    let coset_rep = |t: &Permutation| group.elements().iter().map(|g| g.compose_unchecked(t)).min().unwrap();
    let mut reps: Vec<Permutation> = Permutation::all(n).iter().map(coset_rep).collect();
    reps.sort();
    reps.dedup();
    let index: BTreeMap<Permutation, usize> = reps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let d = module.dim;
    let dim = d * reps.len();
    let mut generators = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let s = Permutation::adjacent(n, i)?;
        let mut rows = alloc::vec![SparseVec::new(); dim];
        for (j, r) in reps.iter().enumerate() {
            let t = r.compose_unchecked(&s);
            let target = coset_rep(&t);
            let jj = index[&target];
            let g = t.compose_unchecked(&target.inverse());
            let a = module.act(&g)?;
            for row in 0..d {
                let entries = a.row(row).iter().map(|(b, x)| (jj * d + b, x.clone())).collect();
                rows[j * d + row] = SparseVec::from_entries(entries);
            }
        }
        generators.push(RationalMatrix::from_rows(dim, rows)?);
    }
    let labels = reps
        .iter()
        .flat_map(|r| module.basis_labels.iter().map(move |l| format!("{l}⊗{r}")))
        .collect();
    ModuleSpec::new(format!("Ind({})", module.name), n, dim, labels, generators)
}

/// `(1/|G|) Σ_g sign(g)·tr(g)`, the dimension of `M ⊗_G sgn`.
pub fn sgn_multiplicity(action: &dyn RightAction, group: &GroupSpec) -> Result<usize> {
    let mut sum = Rational::zero();
    for g in group.elements() {
        if !action.acts_by(g) {
            return Err(Error::Representation(format!("{g} does not act on {}", action.name())));
        }
        let chi = action.matrix(g).trace();
        if g.sign() > 0 {
            sum += chi;
        } else {
            sum -= chi;
        }
    }
    integral_dimension(sum / Rational::from_integer(BigInt::from(group.order())))
}

/// `(1/|H|) Σ_{h∈H} v·h` by brute force.
pub fn average(action: &dyn RightAction, v: &[Rational], group: &GroupSpec) -> Vec<Rational> {
    let mut acc = alloc::vec![Rational::zero(); v.len()];
    for h in group.elements() {
        for (a, x) in acc.iter_mut().zip(action.apply(v, h)) {
            *a += x;
        }
    }
    let inv = Rational::from_integer(BigInt::from(group.order())).recip();
    for a in &mut acc {
        *a *= &inv;
    }
    acc
}

/// Average over the Young subgroup with consecutive blocks of the given
/// sizes, using `S_k = S_{k-1}·{1, s_{k-1}, s_{k-1}s_{k-2}, …}` so that only
/// `O(k²)` generator applications are needed per block.
pub fn young_average(action: &dyn RightAction, v: &[Rational], blocks: &[usize]) -> Vec<Rational> {
    let mut v = v.to_vec();
    let mut start = 0;
    for &k in blocks {
        for j in 2..=k {
            // Cosets of S_{j-1} in S_j on positions start..start+j.
            let mut term = v.clone();
            let mut sum = v.clone();
            for i in 1..j {
                term = action.apply_adjacent(&term, start + j - 1 - i);
                for (a, x) in sum.iter_mut().zip(&term) {
                    *a += x;
                }
            }
            let inv = Rational::from_integer(BigInt::from(j)).recip();
            for a in &mut sum {
                *a *= &inv;
            }
            v = sum;
        }
        start += k;
    }
    v
}

/// Conjugacy-class representatives of `S_N`: one permutation per cycle type
/// (partitions in decreasing lexicographic order), cycles on consecutive points.
pub fn cycle_type_representatives(n: usize) -> Vec<(Vec<usize>, Permutation)> {
    fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            partitions(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|lambda| {
            let mut images: Vec<usize> = (0..n).collect();
            let mut start = 0;
            for &len in &lambda {
                for k in 0..len {
                    images[start + k] = start + (k + 1) % len;
                }
                start += len;
            }
            (lambda, Permutation::from_images(images).unwrap())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;
    use crate::perm::Content;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn builtin_dimensions() {
        assert_eq!(ModuleSpec::builtin(BuiltinKind::Regular, 3).unwrap().dim(), 6);
        assert_eq!(ModuleSpec::builtin(BuiltinKind::Lie, 3).unwrap().dim(), 2);
        assert_eq!(ModuleSpec::builtin(BuiltinKind::TrCyclic, 3).unwrap().dim(), 2);
        let lc = ModuleSpec::builtin(BuiltinKind::LieCyclic, 3).unwrap();
        assert_eq!((lc.arity(), lc.dim()), (4, 2));
        for n in 1..=5 {
            assert_eq!(ModuleSpec::builtin(BuiltinKind::Lie, n).unwrap().dim(), factorial(n - 1));
            assert_eq!(ModuleSpec::builtin(BuiltinKind::TrCyclic, n).unwrap().dim(), factorial(n - 1));
        }
        assert!(ModuleSpec::builtin(BuiltinKind::Lie, 0).is_err());
        assert!(ModuleSpec::builtin(BuiltinKind::Regular, 9).is_err());
    }

    #[test]
    fn act_examples() {
        let triv = ModuleSpec::trivial(3);
        assert_eq!(triv.act(&p(&[3, 1, 2])).unwrap(), RationalMatrix::identity(1));
        let sign = ModuleSpec::sign(2);
        assert_eq!(sign.act(&p(&[2, 1])).unwrap(), RationalMatrix::from_integers(&[&[-1]]));
        let lie2 = ModuleSpec::builtin(BuiltinKind::Lie, 2).unwrap();
        assert_eq!(lie2.act(&p(&[2, 1])).unwrap(), RationalMatrix::from_integers(&[&[-1]]));
        assert!(lie2.act(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn character_examples() {
        for n in 1..=4 {
            let reg = ModuleSpec::builtin(BuiltinKind::Regular, n).unwrap();
            for g in Permutation::all(n) {
                let expected = if g.is_identity() { factorial(n) as i64 } else { 0 };
                assert_eq!(reg.character(&g).unwrap(), rational(expected, 1));
            }
        }
        let lie3 = ModuleSpec::builtin(BuiltinKind::Lie, 3).unwrap();
        assert_eq!(lie3.character(&p(&[2, 3, 1])).unwrap(), rational(-1, 1));
    }

    #[test]
    fn sgn_coinvariants_of_builtins() {
        let dim = |k, n| {
            let m = ModuleSpec::builtin(k, n).unwrap();
            m.sgn_coinvariants_dim(&GroupSpec::symmetric(m.arity())).unwrap()
        };
        for n in 1..=5 {
            assert_eq!(dim(BuiltinKind::Regular, n), 1);
            assert_eq!(dim(BuiltinKind::Lie, n), usize::from(n <= 2));
            assert_eq!(dim(BuiltinKind::TrCyclic, n), n % 2);
        }
        assert_eq!(dim(BuiltinKind::LieCyclic, 2), 1);
        assert_eq!(dim(BuiltinKind::LieCyclic, 3), 0);
        assert_eq!(dim(BuiltinKind::LieCyclic, 4), 0);
    }

    #[test]
    fn action_is_independent_of_factorization() {
        // Compare A(p) against a second factorization p = (p∘s)∘s.
        for kind in BuiltinKind::ALL {
            let m = ModuleSpec::builtin(kind, 3).unwrap();
            let n = m.arity();
            for g in Permutation::all(n) {
                for i in 0..n - 1 {
                    let s = Permutation::adjacent(n, i).unwrap();
                    let lhs = m.act(&g).unwrap();
                    let rhs = m.act(&g.compose(&s).unwrap()).unwrap().mul(&m.generators()[i]).unwrap();
                    assert_eq!(lhs, rhs, "{kind} {g}");
                }
            }
        }
    }

    #[test]
    fn induce_examples() {
        let triv = ModuleSpec::trivial(2).restrict(&GroupSpec::trivial(2)).unwrap();
        let reg = induce(&triv).unwrap();
        assert_eq!(reg.dim(), 2);
        let c3 = GroupSpec::cyclic(3);
        let ind = induce(&ModuleSpec::trivial(3).restrict(&c3).unwrap()).unwrap();
        assert_eq!(ind.dim(), 2);
        let tr = ModuleSpec::builtin(BuiltinKind::TrCyclic, 3).unwrap();
        for g in Permutation::all(3) {
            assert_eq!(ind.character(&g).unwrap(), tr.character(&g).unwrap());
        }
    }

    #[test]
    fn coinvariants_examples() {
        let reg = ModuleSpec::builtin(BuiltinKind::Regular, 3).unwrap();
        let c = reg.coinvariants(&GroupSpec::trivial(3)).unwrap();
        assert!(c.projector.is_identity());
        assert_eq!(c.basis.len(), 6);
        let s = ModuleSpec::sign(2).coinvariants(&GroupSpec::symmetric(2)).unwrap();
        assert!(s.projector.is_zero());
        assert!(s.basis.is_empty());
        let y = reg.coinvariants(&GroupSpec::young(&Content::new(alloc::vec![2, 1]))).unwrap();
        assert_eq!(y.basis.len(), 3);
        assert_eq!(y.projector.mul(&y.projector).unwrap(), y.projector);
    }

    #[test]
    fn cyclic_action_examples() {
        // Fixing letter 0: generator j ≥ 1 is plain relabeling of x_j ↔ x_{j+1}.
        assert_eq!(cyclic_generator_on_word(&[0, 1, 2], 1), alloc::vec![1, 0, 2]);
        // (0 1) on x0 x1 x2 gives x1 x0 x2 ~ x0 x2 x1.
        assert_eq!(cyclic_generator_on_word(&[0, 1], 0), alloc::vec![1, 0]);
        let lc = ModuleSpec::builtin(BuiltinKind::LieCyclic, 2).unwrap();
        assert_eq!(lc.generators()[0], RationalMatrix::from_integers(&[&[-1]]));
        for n in 1..=5 {
            let gens = cyclic_action(n).unwrap();
            check_coxeter("ass-cyclic", &gens).unwrap();
        }
    }

    #[test]
    fn lie_cyclic_restricts_to_lie() {
        for n in 2..=5 {
            let lc = ModuleSpec::builtin(BuiltinKind::LieCyclic, n).unwrap();
            let l = ModuleSpec::builtin(BuiltinKind::Lie, n).unwrap();
            assert_eq!(&lc.generators()[1..], l.generators());
        }
    }

    #[test]
    fn coxeter_violation_is_named() {
        let bad = RationalMatrix::from_integers(&[&[2]]);
        let err = ModuleSpec::new("bad", 2, 1, alloc::vec!["1".into()], alloc::vec![bad]).unwrap_err();
        assert_eq!(err, Error::Relation { module: "bad".into(), relation: "s1^2 = 1".into() });
        let s = RationalMatrix::from_integers(&[&[0, 1], &[1, 0]]);
        let t = RationalMatrix::from_integers(&[&[1, 0], &[0, -1]]);
        let err = ModuleSpec::new("braid", 3, 2, alloc::vec!["a".into(), "b".into()], alloc::vec![s, t])
            .unwrap_err();
        assert!(matches!(err, Error::Relation { relation, .. } if relation == "s1 s2 s1 = s2 s1 s2"));
    }

    #[test]
    fn young_average_matches_brute_force() {
        let lie = ModuleSpec::builtin(BuiltinKind::Lie, 4).unwrap();
        for blocks in [alloc::vec![4], alloc::vec![2, 2], alloc::vec![1, 3], alloc::vec![3, 1]] {
            let g = GroupSpec::young(&Content::new(blocks.clone()));
            for a in 0..lie.dim() {
                let v = SparseVec::unit(a).to_dense(lie.dim());
                assert_eq!(young_average(&lie, &v, &blocks), average(&lie, &v, &g), "{blocks:?}");
            }
        }
    }

    #[test]
    fn cycle_types_of_s4() {
        let reps = cycle_type_representatives(4);
        assert_eq!(reps.len(), 5);
        assert_eq!(reps[0].0, alloc::vec![4]);
        assert_eq!(reps[0].1, Permutation::long_cycle(4));
        assert!(reps.last().unwrap().1.is_identity());
    }
}
