//! `module-info`: dimension, basis, generators, characters and the sign
//! multiplicity of a module.

use std::fmt::Write as _;

use cubix_core::linalg::format_rational;
use cubix_core::modules::{cycle_type_representatives, ModuleSpec};
use cubix_core::GroupSpec;
use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct CharacterValue {
    pub cycle_type: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleInfo {
    pub name: String,
    #[serde(rename = "N")]
    pub arity: usize,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub generators: Vec<Vec<Vec<String>>>,
    pub characters: Vec<CharacterValue>,
    pub sgn_coinvariants_dim: usize,
}

impl ModuleInfo {
    pub fn new(m: &ModuleSpec) -> Result<Self> {
        let characters = cycle_type_representatives(m.arity())
            .into_iter()
            .map(|(cycle_type, g)| Ok(CharacterValue { cycle_type, value: format_rational(&m.character(&g)?) }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            name: m.name().to_string(),
            arity: m.arity(),
            dim: m.dim(),
            basis_labels: m.basis_labels().to_vec(),
            generators: m
                .generators()
                .iter()
                .map(|g| g.to_dense().iter().map(|r| r.iter().map(format_rational).collect()).collect())
                .collect(),
            characters,
            sgn_coinvariants_dim: m.sgn_coinvariants_dim(&GroupSpec::symmetric(m.arity()))?,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "module {} over S{}", self.name, self.arity).unwrap();
        writeln!(s, "dim {}", self.dim).unwrap();
        writeln!(s, "basis {}", self.basis_labels.join(" ")).unwrap();
        for (i, g) in self.generators.iter().enumerate() {
            writeln!(s, "s{}:", i + 1).unwrap();
            for row in g {
                writeln!(s, "  [{}]", row.join(" ")).unwrap();
            }
        }
        for c in &self.characters {
            let t: Vec<String> = c.cycle_type.iter().map(usize::to_string).collect();
            writeln!(s, "character ({}) = {}", t.join(","), c.value).unwrap();
        }
        writeln!(s, "sgn-coinvariants {}", self.sgn_coinvariants_dim).unwrap();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubix_core::modules::BuiltinKind;

    #[test]
    fn lie_and_tr_in_three_variables() {
        let lie = ModuleInfo::new(&ModuleSpec::builtin(BuiltinKind::Lie, 3).unwrap()).unwrap();
        assert_eq!((lie.dim, lie.sgn_coinvariants_dim), (2, 0));
        let tr = ModuleInfo::new(&ModuleSpec::builtin(BuiltinKind::TrCyclic, 3).unwrap()).unwrap();
        assert_eq!((tr.dim, tr.sgn_coinvariants_dim), (2, 1));
        assert!(tr.to_text().contains("sgn-coinvariants 1"));
        let identity = lie.characters.iter().find(|c| c.cycle_type == vec![1, 1, 1]).unwrap();
        assert_eq!(identity.value, "2");
    }
}
