//! JSON file format for user-supplied modules:
//!
//! ```json
//! { "name": "m", "N": 2, "dim": 1, "basis_labels": ["v"], "generators": [[["-1"]]] }
//! ```
//!
//! One matrix per adjacent transposition `s₁,…,s_{N−1}`, acting on row
//! vectors from the right. Entries are strings `"p/q"` or integers.

use std::path::Path;

use cubix_core::linalg::{format_rational, parse_rational};
use cubix_core::modules::ModuleSpec;
use cubix_core::{Rational, RationalMatrix};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Integer(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomModuleFile {
    pub name: String,
    #[serde(rename = "N")]
    pub arity: usize,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub generators: Vec<Vec<Vec<Entry>>>,
}

impl CustomModuleFile {
    pub fn from_module(module: &ModuleSpec) -> Self {
        let generators = module
            .generators()
            .iter()
            .map(|g| g.to_dense().iter().map(|row| row.iter().map(|x| Entry::Text(format_rational(x))).collect()).collect())
            .collect();
        Self {
            name: module.name().to_string(),
            arity: module.arity(),
            dim: module.dim(),
            basis_labels: module.basis_labels().to_vec(),
            generators,
        }
    }

    pub fn into_module(self) -> Result<ModuleSpec> {
        let mut matrices = Vec::with_capacity(self.generators.len());
        for (k, g) in self.generators.iter().enumerate() {
            if g.len() != self.dim || g.iter().any(|row| row.len() != self.dim) {
                return Err(CliError::Input(format!(
                    "generator s{} of `{}` is not a {}x{} matrix",
                    k + 1,
                    self.name,
                    self.dim,
                    self.dim
                )));
            }
            let rows = g
                .iter()
                .map(|row| row.iter().map(parse_entry).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            matrices.push(RationalMatrix::from_dense(&rows)?);
        }
        Ok(ModuleSpec::new(self.name, self.arity, self.dim, self.basis_labels, matrices)?)
    }
}

fn parse_entry(e: &Entry) -> Result<Rational> {
    match e {
        Entry::Integer(i) => Ok(Rational::from_integer((*i).into())),
        Entry::Text(s) => parse_rational(s).ok_or_else(|| CliError::Input(format!("`{s}` is not a rational number"))),
    }
}

pub fn parse_custom(json: &str) -> Result<ModuleSpec> {
    serde_json::from_str::<CustomModuleFile>(json)?.into_module()
}

pub fn load_custom(path: &Path) -> Result<ModuleSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_custom(&text)
}

pub fn to_json(module: &ModuleSpec) -> String {
    serde_json::to_string_pretty(&CustomModuleFile::from_module(module)).expect("serializable")
}

/// A random unimodular integer matrix `L·U` with small off-diagonal entries.
pub fn random_unimodular(dim: usize, rng: &mut impl Rng) -> RationalMatrix {
    let mut lower = vec![vec![0i64; dim]; dim];
    let mut upper = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for j in 0..i {
            lower[i][j] = rng.gen_range(-2..=2);
            upper[j][i] = rng.gen_range(-2..=2);
        }
    }
    let to_matrix = |m: &Vec<Vec<i64>>| {
        let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        RationalMatrix::from_integers(&rows)
    };
    to_matrix(&lower).mul(&to_matrix(&upper)).expect("square factors")
}

/// `module` in a random basis, passed through the JSON format and back.
pub fn random_custom(module: &ModuleSpec, rng: &mut impl Rng) -> Result<ModuleSpec> {
    let p = random_unimodular(module.dim(), rng);
    let conjugated = module.change_basis(&p)?.with_name(format!("random {}", module.name()));
    parse_custom(&to_json(&conjugated))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubix_core::modules::BuiltinKind;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_sign_module() {
        let m = parse_custom(r#"{"name":"sgn","N":3,"dim":1,"basis_labels":["v"],"generators":[[["-1"]],[[-1]]]}"#)
            .unwrap();
        assert_eq!(m.generators(), ModuleSpec::sign(3).generators());
        assert_eq!((m.name(), m.arity(), m.dim()), ("sgn", 3, 1));
    }

    #[test]
    fn reports_violated_relation() {
        let err = parse_custom(r#"{"name":"bad","N":2,"dim":1,"basis_labels":["v"],"generators":[[["2"]]]}"#)
            .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("s1^2 = 1"), "{err}");
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "{",
            r#"{"name":"x","N":2,"dim":1,"basis_labels":["v"],"generators":[[["a"]]]}"#,
            r#"{"name":"x","N":2,"dim":2,"basis_labels":["v","w"],"generators":[[["1"]]]}"#,
            r#"{"name":"x","N":3,"dim":1,"basis_labels":["v"],"generators":[[["1"]]]}"#,
        ] {
            assert_eq!(parse_custom(bad).unwrap_err().exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn random_modules_keep_characters() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let lie = ModuleSpec::builtin(BuiltinKind::Lie, 4).unwrap();
        let r = random_custom(&lie, &mut rng).unwrap();
        for g in cubix_core::Permutation::all(4) {
            assert_eq!(r.character(&g).unwrap(), lie.character(&g).unwrap());
        }
        assert!(random_unimodular(5, &mut rng).inverse().is_some());
    }

    proptest::proptest! {
        #[test]
        fn json_round_trip(seed in proptest::prelude::any::<u64>(), kind in 0usize..6, n in 1usize..4) {
            let base = ModuleSpec::builtin(BuiltinKind::ALL[kind], n).unwrap();
            let p = random_unimodular(base.dim(), &mut ChaCha8Rng::seed_from_u64(seed));
            let m = base.change_basis(&p).unwrap();
            let back = parse_custom(&to_json(&m)).unwrap();
            proptest::prop_assert_eq!(back.generators(), m.generators());
            proptest::prop_assert_eq!(back.basis_labels(), m.basis_labels());
        }
    }
}
