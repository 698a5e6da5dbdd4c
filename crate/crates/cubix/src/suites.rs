//! Verification suites. Each suite is a list of independent checks; `all`
//! runs every suite. Checks run in parallel and are reported in a fixed
//! order.
//!
//! Suites clamp `nmax` to the range they are meant for: `prop1`, `cor2`,
//! `ass` and `structure` stop at 4, `cor3` and `cor4` at 5, `cor5` covers
//! `2..=4`, `harrison` stops at 3, `oracles` at 3 (orbit against naive) and
//! 4 (direct realizations).

use cubix_core::cubical::{
    antisymmetrizer_is_top_class, betti, cubical_complex, differential, full_complex, is_equivariant, verify_cor2,
    BettiTable, GradedSymbol, Mode, DEFAULT_NAIVE_CAP,
};
use cubix_core::harrison::{eulerian_idempotent, idempotent_matrix, verify_harrison};
use cubix_core::lie::jacobi_sum;
use cubix_core::modules::{check_coxeter, cyclic_action, induce, sgn_multiplicity, BuiltinKind, ModuleSpec};
use cubix_core::realizations::{compare_with_engine, Family};
use cubix_core::{Content, GroupSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::custom::random_custom;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Prop1,
    Cor2,
    Cor3,
    Cor4,
    Cor5,
    Ass,
    Harrison,
    Induction,
    Oracles,
    Structure,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Prop1,
        Suite::Cor2,
        Suite::Cor3,
        Suite::Cor4,
        Suite::Cor5,
        Suite::Ass,
        Suite::Harrison,
        Suite::Induction,
        Suite::Oracles,
        Suite::Structure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Cor2 => "cor2",
            Suite::Cor3 => "cor3",
            Suite::Cor4 => "cor4",
            Suite::Cor5 => "cor5",
            Suite::Ass => "ass",
            Suite::Harrison => "harrison",
            Suite::Induction => "induction",
            Suite::Oracles => "oracles",
            Suite::Structure => "structure",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn line(&self) -> String {
        format!("{} {} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.suite, self.name, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub suite: &'static str,
    pub nmax: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Summary {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

type Outcome = cubix_core::Result<(bool, String)>;
type Job = (String, Box<dyn Fn() -> Outcome + Send + Sync>);

fn job(name: impl Into<String>, f: impl Fn() -> Outcome + Send + Sync + 'static) -> Job {
    (name.into(), Box::new(f))
}

fn builtin(kind: BuiltinKind, n: usize) -> cubix_core::Result<ModuleSpec> {
    ModuleSpec::builtin(kind, n)
}

fn symbol_outcome(table: &BettiTable, expected: &GradedSymbol) -> (bool, String) {
    let got = table.symbol();
    let pass = got == *expected;
    let detail = if pass {
        format!("H = {got} through m = {}", table.rows.len())
    } else {
        format!("H = {got}, expected {expected}; betti {:?}", table.betti_numbers())
    };
    (pass, detail)
}

/// `H(Cub(Sₙ, M))` through `m_max = N + 2` compared with `expected`.
fn cubical_job(name: String, kind: BuiltinKind, n: usize, expected: GradedSymbol) -> Job {
    job(name, move || {
        let m = builtin(kind, n)?;
        let arity = m.arity();
        let c = cubical_complex(&m, &GroupSpec::symmetric(arity), arity + 2, Mode::Orbit, DEFAULT_NAIVE_CAP)?;
        Ok(symbol_outcome(&betti(&c), &expected))
    })
}

fn prop1(nmax: usize) -> Vec<Job> {
    (1..=nmax.min(4))
        .map(|n| {
            job(format!("full n={n}"), move || {
                let table = betti(&full_complex(n, n + 2)?);
                let (pass, detail) = symbol_outcome(&table, &GradedSymbol::shift(n));
                let witness = antisymmetrizer_is_top_class(n);
                Ok((pass && witness, format!("{detail}; antisymmetrizer is a nonzero class: {witness}")))
            })
        })
        .collect()
}

fn cor2_job(name: String, module: impl Fn() -> cubix_core::Result<ModuleSpec> + Send + Sync + 'static, known: usize) -> Job {
    job(name, move || {
        let m = module()?;
        let n = m.arity();
        let r = verify_cor2(&m, &GroupSpec::symmetric(n), n + 2, Mode::Orbit, DEFAULT_NAIVE_CAP)?;
        let pass = r.pass && r.expected == known;
        Ok((pass, format!("dim M ⊗ sgn = {} (known {known}), H = {}", r.expected, r.table.symbol())))
    })
}

fn cor2(nmax: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 1..=nmax.min(4) {
        jobs.push(cor2_job(format!("trivial n={n}"), move || Ok(ModuleSpec::trivial(n)), usize::from(n == 1)));
        jobs.push(cor2_job(format!("sign n={n}"), move || Ok(ModuleSpec::sign(n)), 1));
        jobs.push(cor2_job(format!("regular n={n}"), move || builtin(BuiltinKind::Regular, n), 1));
    }
    if nmax >= 3 {
        for (seed, kind, known) in [(1u64, BuiltinKind::Regular, 1), (2, BuiltinKind::Lie, 0), (3, BuiltinKind::TrCyclic, 1)] {
            let module = move || {
                let base = builtin(kind, 3)?;
                random_custom(&base, &mut ChaCha8Rng::seed_from_u64(seed))
                    .map_err(|e| cubix_core::Error::InvalidModule(e.to_string()))
            };
            jobs.push(cor2_job(format!("random {kind} basis n=3 seed={seed}"), module, known));
        }
    }
    jobs
}

fn cor3(nmax: usize) -> Vec<Job> {
    (1..=nmax.min(5))
        .map(|n| {
            let expected = if n <= 2 { GradedSymbol::shift(n) } else { GradedSymbol::zero() };
            cubical_job(format!("lie n={n}"), BuiltinKind::Lie, n, expected)
        })
        .collect()
}

fn cor4(nmax: usize) -> Vec<Job> {
    (1..=nmax.min(5))
        .map(|n| {
            let expected = if n % 2 == 1 { GradedSymbol::shift(n) } else { GradedSymbol::zero() };
            cubical_job(format!("tr n={n}"), BuiltinKind::TrCyclic, n, expected)
        })
        .collect()
}

fn cor5(nmax: usize) -> Vec<Job> {
    (2..=nmax.min(4))
        .map(|n| {
            let expected = if n == 2 { GradedSymbol::shift(3) } else { GradedSymbol::zero() };
            cubical_job(format!("lie_cyclic n={n} on {} slots", n + 1), BuiltinKind::LieCyclic, n, expected)
        })
        .collect()
}

fn ass(nmax: usize) -> Vec<Job> {
    (1..=nmax.min(4))
        .map(|n| cubical_job(format!("ass n={n}"), BuiltinKind::Regular, n, GradedSymbol::shift(n)))
        .collect()
}

fn harrison_job(name: String, module: impl Fn() -> cubix_core::Result<ModuleSpec> + Send + Sync + 'static) -> Job {
    job(name, move || {
        let m = module()?;
        let n = m.arity();
        let r = verify_harrison(&m, &GroupSpec::symmetric(n), (n + 2).max(3), Mode::Orbit, DEFAULT_NAIVE_CAP)?;
        let expected = GradedSymbol::concentrated(1, r.expected_h1);
        let (pass, detail) = symbol_outcome(&r.table, &expected);
        Ok((pass && r.pass, detail))
    })
}

fn harrison(nmax: usize) -> Vec<Job> {
    let mut jobs = vec![
        harrison_job("trivial n=1".into(), || Ok(ModuleSpec::trivial(1))),
        harrison_job("custom k^3 n=1".into(), || {
            ModuleSpec::new("k^3", 1, 3, vec!["u".into(), "v".into(), "w".into()], Vec::new())
        }),
    ];
    for n in 2..=nmax.min(3) {
        jobs.push(harrison_job(format!("trivial n={n}"), move || Ok(ModuleSpec::trivial(n))));
        jobs.push(harrison_job(format!("regular n={n}"), move || builtin(BuiltinKind::Regular, n)));
        jobs.push(harrison_job(format!("lie n={n}"), move || builtin(BuiltinKind::Lie, n)));
    }
    jobs
}

/// `Cub(G, M)` against `Cub(Sₙ, Ind M)` through `m_max = n + 2`.
fn induction_job(name: String, module: fn(usize) -> ModuleSpec, group: fn() -> GroupSpec) -> Job {
    job(name, move || {
        let g = group();
        let n = g.arity();
        let m = module(n);
        let sub = betti(&cubical_complex(&m, &g, n + 2, Mode::Orbit, DEFAULT_NAIVE_CAP)?);
        let ind = induce(&m.restrict(&g)?)?;
        let full = betti(&cubical_complex(&ind, &GroupSpec::symmetric(n), n + 2, Mode::Orbit, DEFAULT_NAIVE_CAP)?);
        let pass = sub.rows == full.rows;
        Ok((pass, format!("H = {} over G, H = {} over S{n}, dims {:?}", sub.symbol(), full.symbol(), sub.dims())))
    })
}

fn induction(nmax: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    if nmax >= 3 {
        jobs.push(induction_job("trivial C3 ⊂ S3".into(), ModuleSpec::trivial, || GroupSpec::cyclic(3)));
        jobs.push(induction_job("sign C3 ⊂ S3".into(), ModuleSpec::sign, || GroupSpec::cyclic(3)));
    }
    if nmax >= 4 {
        let s2s2 = || GroupSpec::young(&Content::new(vec![2, 2]));
        jobs.push(induction_job("trivial S2×S2 ⊂ S4".into(), ModuleSpec::trivial, s2s2));
        jobs.push(induction_job("sign S2×S2 ⊂ S4".into(), ModuleSpec::sign, s2s2));
        jobs.push(induction_job("trivial C4 ⊂ S4".into(), ModuleSpec::trivial, || GroupSpec::cyclic(4)));
        jobs.push(induction_job("sign C4 ⊂ S4".into(), ModuleSpec::sign, || GroupSpec::cyclic(4)));
    }
    jobs
}

fn oracles(nmax: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 1..=nmax.min(3) {
        for kind in BuiltinKind::ALL {
            jobs.push(job(format!("orbit = naive {kind} n={n}"), move || {
                let m = builtin(kind, n)?;
                let g = GroupSpec::symmetric(m.arity());
                let orbit = betti(&cubical_complex(&m, &g, 5, Mode::Orbit, DEFAULT_NAIVE_CAP)?);
                let naive = betti(&cubical_complex(&m, &g, 5, Mode::Naive, DEFAULT_NAIVE_CAP)?);
                Ok((orbit.rows == naive.rows, format!("dims {:?}, betti {:?}", orbit.dims(), orbit.betti_numbers())))
            }));
        }
    }
    for n in 1..=nmax.min(4) {
        for family in Family::ALL {
            jobs.push(job(format!("direct = engine {family} n={n}"), move || {
                let r = compare_with_engine(family, n, 6, Mode::Orbit)?;
                Ok((r.pass, format!("dims {:?}, betti {:?}", r.direct.dims(), r.direct.betti_numbers())))
            }));
        }
    }
    jobs
}

fn structure(nmax: usize) -> Vec<Job> {
    let top = nmax.min(4);
    let mut jobs = vec![
        job(format!("d² = 0 on words, n, m ≤ {top}"), move || {
            let mut bad = Vec::new();
            for n in 1..=top {
                for m in 1..=top {
                    if !differential(n, m).mul(&differential(n, m + 1))?.is_zero() {
                        bad.push((n, m));
                    }
                }
            }
            Ok((bad.is_empty(), format!("failures {bad:?}")))
        }),
        job(format!("d is Sₙ-equivariant, n, m ≤ {top}"), move || {
            let bad: Vec<(usize, usize)> =
                (1..=top).flat_map(|n| (1..=top).map(move |m| (n, m))).filter(|&(n, m)| !is_equivariant(n, m)).collect();
            Ok((bad.is_empty(), format!("failures {bad:?}")))
        }),
        job("Jacobi expansion vanishes", || {
            let s = jacobi_sum();
            Ok((s.is_zero(), format!("{} surviving terms", s.len())))
        }),
        job("Eulerian idempotent e1·e1 = e1, m ≤ 5", || {
            let mut bad = Vec::new();
            for m in 1..=5 {
                let e = eulerian_idempotent(m)?;
                if e.mul(&e)? != e {
                    bad.push(m);
                }
            }
            Ok((bad.is_empty(), format!("failures {bad:?}")))
        }),
        job(format!("e1 commutes with d, n ≤ {}, m ≤ 4", top.min(3)), move || {
            let mut bad = Vec::new();
            for n in 1..=top.min(3) {
                for m in 1..=4 {
                    let d = differential(n, m);
                    if idempotent_matrix(n, m)?.mul(&d)? != d.mul(&idempotent_matrix(n, m + 1)?)? {
                        bad.push((n, m));
                    }
                }
            }
            Ok((bad.is_empty(), format!("failures {bad:?}")))
        }),
    ];
    for kind in BuiltinKind::ALL {
        for n in 1..=top {
            jobs.push(job(format!("Coxeter {kind} n={n}"), move || {
                let m = builtin(kind, n)?;
                let ok = check_coxeter(m.name(), m.generators()).is_ok();
                Ok((ok, format!("dim {}, {} generators", m.dim(), m.generators().len())))
            }));
        }
    }
    for n in 1..=top {
        jobs.push(job(format!("Coxeter cyclic action n={n}"), move || {
            let gens = cyclic_action(n)?;
            let ok = check_coxeter("cyclic", &gens).is_ok();
            Ok((ok, format!("S{} on Ass({n})", n + 1)))
        }));
    }
    jobs.push(job("sgn multiplicity of lie n ≥ 3 is 0", move || {
        let dims = (3..=top.max(3))
            .map(|n| sgn_multiplicity(&builtin(BuiltinKind::Lie, n)?, &GroupSpec::symmetric(n)))
            .collect::<cubix_core::Result<Vec<_>>>()?;
        Ok((dims.iter().all(|&d| d == 0), format!("{dims:?}")))
    }));
    jobs
}

fn jobs(suite: Suite, nmax: usize) -> Vec<Job> {
    match suite {
        Suite::Prop1 => prop1(nmax),
        Suite::Cor2 => cor2(nmax),
        Suite::Cor3 => cor3(nmax),
        Suite::Cor4 => cor4(nmax),
        Suite::Cor5 => cor5(nmax),
        Suite::Ass => ass(nmax),
        Suite::Harrison => harrison(nmax),
        Suite::Induction => induction(nmax),
        Suite::Oracles => oracles(nmax),
        Suite::Structure => structure(nmax),
        Suite::All => Vec::new(),
    }
}

/// Runs `suite`; errors inside a check count as failures.
pub fn run(suite: Suite, nmax: usize) -> Summary {
    let parts: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let tagged: Vec<(&'static str, Job)> =
        parts.iter().flat_map(|&s| jobs(s, nmax).into_iter().map(move |j| (s.name(), j))).collect();
    let checks: Vec<Check> = tagged
        .par_iter()
        .map(|(suite, (name, f))| {
            let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
            Check { suite, name: name.clone(), pass, detail }
        })
        .collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    Summary { suite: suite.name(), nmax, passed, failed: checks.len() - passed, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Prop1, Suite::Cor3, Suite::Cor4, Suite::Ass, Suite::Harrison] {
            let s = run(suite, 2);
            assert!(s.all_pass(), "{:#?}", s.checks);
            assert!(!s.checks.is_empty());
        }
    }

    #[test]
    fn lines_name_the_suite() {
        let s = run(Suite::Prop1, 1);
        assert_eq!(s.checks[0].line().split(':').next().unwrap(), "PASS prop1 full n=1");
    }
}
