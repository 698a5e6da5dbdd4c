//! Resolving a `--family` choice into a complex and its Betti table.

use cubix_core::cubical::{cubical_complex, full_complex, BettiTable, CochainComplex, Mode};
use cubix_core::harrison::harrison_complex;
use cubix_core::linalg::rank;
use cubix_core::modules::{BuiltinKind, ModuleSpec};
use cubix_core::GroupSpec;
use rayon::prelude::*;

use crate::error::{CliError, Result};

/// Largest `n` for the orbit engine and the naive oracle.
pub const MAX_ORBIT_N: usize = 6;
pub const MAX_NAIVE_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Full,
    Ass,
    Lie,
    Tr,
    Sder,
    Harrison,
    Custom,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Full => "full",
            Family::Ass => "ass",
            Family::Lie => "lie",
            Family::Tr => "tr",
            Family::Sder => "sder",
            Family::Harrison => "harrison",
            Family::Custom => "custom",
        }
    }

    /// Built-in module behind a module-based family.
    pub fn builtin(self) -> Option<BuiltinKind> {
        match self {
            Family::Ass => Some(BuiltinKind::Regular),
            Family::Lie => Some(BuiltinKind::Lie),
            Family::Tr => Some(BuiltinKind::TrCyclic),
            Family::Sder => Some(BuiltinKind::LieCyclic),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum ModeArg {
    #[default]
    Orbit,
    Naive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Orbit => Mode::Orbit,
            ModeArg::Naive => Mode::Naive,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum GroupArg {
    #[default]
    Symmetric,
    Cyclic,
    Trivial,
}

impl GroupArg {
    pub fn group(self, arity: usize) -> GroupSpec {
        match self {
            GroupArg::Symmetric => GroupSpec::symmetric(arity),
            GroupArg::Cyclic => GroupSpec::cyclic(arity),
            GroupArg::Trivial => GroupSpec::trivial(arity),
        }
    }
}

/// Module choice for `--family harrison`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum ModuleArg {
    #[default]
    Trivial,
    Sign,
    Regular,
    Lie,
    TrCyclic,
    LieCyclic,
}

impl From<ModuleArg> for BuiltinKind {
    fn from(m: ModuleArg) -> BuiltinKind {
        match m {
            ModuleArg::Trivial => BuiltinKind::Trivial,
            ModuleArg::Sign => BuiltinKind::Sign,
            ModuleArg::Regular => BuiltinKind::Regular,
            ModuleArg::Lie => BuiltinKind::Lie,
            ModuleArg::TrCyclic => BuiltinKind::TrCyclic,
            ModuleArg::LieCyclic => BuiltinKind::LieCyclic,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Request {
    pub family: Family,
    pub n: usize,
    pub custom: Option<ModuleSpec>,
    pub module: ModuleArg,
    pub group: GroupArg,
    pub m_max: Option<usize>,
    pub mode: Mode,
    pub cap: usize,
}

impl Request {
    pub fn new(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            custom: None,
            module: ModuleArg::default(),
            group: GroupArg::default(),
            m_max: None,
            mode: Mode::Orbit,
            cap: cubix_core::cubical::DEFAULT_NAIVE_CAP,
        }
    }

    fn module(&self) -> Result<Option<ModuleSpec>> {
        Ok(match self.family {
            Family::Full => None,
            Family::Custom => Some(
                self.custom.clone().ok_or_else(|| CliError::Input("--family custom requires --custom <path>".into()))?,
            ),
            Family::Harrison => Some(match &self.custom {
                Some(m) => m.clone(),
                None => ModuleSpec::builtin(self.module.into(), self.n)?,
            }),
            f => Some(ModuleSpec::builtin(f.builtin().expect("module family"), self.n)?),
        })
    }
}

/// Ranks of all differentials, one rayon task per degree.
pub fn betti_parallel(complex: &CochainComplex) -> BettiTable {
    let ranks: Vec<usize> = complex.differentials().par_iter().map(rank).collect();
    BettiTable::from_ranks(complex, &ranks).expect("ranks of a valid complex")
}

pub fn compute(req: &Request) -> Result<BettiTable> {
    if req.n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    if req.cap == 0 {
        return Err(CliError::Input("cap must be at least 1".into()));
    }
    let module = req.module()?;
    let arity = module.as_ref().map_or(req.n, |m| m.arity());
    let m_max = req.m_max.unwrap_or(arity + 2);
    if m_max < 2 {
        return Err(CliError::Input("m_max must be at least 2".into()));
    }
    let limit = match req.mode {
        Mode::Orbit => MAX_ORBIT_N + usize::from(req.family == Family::Sder),
        Mode::Naive => MAX_NAIVE_N,
    };
    if arity > limit {
        return Err(CliError::Cap(format!("N = {arity} exceeds the {} limit {limit}", req.mode)));
    }
    let complex = match (&module, req.family) {
        (None, _) => full_complex(req.n, m_max)?,
        (Some(m), Family::Harrison) => harrison_complex(m, &req.group.group(arity), m_max, req.mode, req.cap)?,
        (Some(m), _) => cubical_complex(m, &req.group.group(arity), m_max, req.mode, req.cap)?,
    };
    let mut table = betti_parallel(&complex);
    table.family = req.family.name().to_string();
    table.n = req.n;
    Ok(table)
}
