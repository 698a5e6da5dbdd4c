//! Output formats. JSON is canonical; CSV and the aligned table carry the
//! same fields.

use std::fmt::Write as _;
use std::str::FromStr;

use cubix_core::cubical::BettiTable;
use serde::Serialize;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Table,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        <Format as clap::ValueEnum>::from_str(s, true).map_err(|_| CliError::Input(format!("unknown format `{s}`")))
    }
}

#[derive(Serialize)]
struct RowJson {
    m: usize,
    dim: usize,
    rank_d: usize,
    betti: usize,
}

#[derive(Serialize)]
struct TableJson<'a> {
    family: &'a str,
    n: usize,
    rows: Vec<RowJson>,
}

fn table_json(t: &BettiTable) -> TableJson<'_> {
    TableJson {
        family: &t.family,
        n: t.n,
        rows: t.rows.iter().map(|r| RowJson { m: r.m, dim: r.dim, rank_d: r.rank_d, betti: r.betti }).collect(),
    }
}

/// One table renders as a JSON object, several as an array.
pub fn render(tables: &[BettiTable], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = if let [one] = tables {
                serde_json::to_string_pretty(&table_json(one))
            } else {
                serde_json::to_string_pretty(&tables.iter().map(table_json).collect::<Vec<_>>())
            }
            .expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("family,n,m,dim,rank_d,betti\n");
            for t in tables {
                for r in &t.rows {
                    writeln!(s, "{},{},{},{},{},{}", t.family, t.n, r.m, r.dim, r.rank_d, r.betti).unwrap();
                }
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                s.push_str(&aligned(t));
            }
            s
        }
    }
}

fn aligned(t: &BettiTable) -> String {
    let header = ["m", "dim", "rank_d", "betti"];
    let cells: Vec<[String; 4]> =
        t.rows.iter().map(|r| [r.m.to_string(), r.dim.to_string(), r.rank_d.to_string(), r.betti.to_string()]).collect();
    let widths: Vec<usize> =
        (0..4).map(|k| cells.iter().map(|c| c[k].len()).chain([header[k].len()]).max().unwrap()).collect();
    let mut s = String::new();
    writeln!(s, "# {} n={}  H = {}", t.family, t.n, t.symbol()).unwrap();
    let line = |s: &mut String, row: [&str; 4]| {
        let parts: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(s, "{}", parts.join("  ")).unwrap();
    };
    line(&mut s, header);
    for c in &cells {
        line(&mut s, [&c[0], &c[1], &c[2], &c[3]]);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubix_core::cubical::{betti, full_complex};

    #[test]
    fn formats_agree() {
        let mut t = betti(&full_complex(2, 3).unwrap());
        t.family = "full".into();
        let json: serde_json::Value = serde_json::from_str(&render(&[t.clone()], Format::Json)).unwrap();
        assert_eq!(json["family"], "full");
        assert_eq!(json["rows"][1]["betti"], 1);
        let csv = render(&[t.clone()], Format::Csv);
        assert_eq!(csv.lines().count(), 1 + t.rows.len());
        assert!(csv.contains("full,2,2,4,"));
        let table = render(&[t], Format::Table);
        assert!(table.contains("H = k[-2]"));
    }
}
