//! Tables rendered from computed values.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::json;

use crate::enumerate::{EnumError, Engine};
use crate::patterns::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    /// `t_n(σ)` for each `σ ∈ S_3`.
    Table1,
    /// `t_n^k(213)` for `k = 1..=4` and `k = 5` standing for `k >= 5`.
    Table2,
    /// `f_n²` over all of `S_n`.
    F2,
    /// `f_n^k(213)` and `f_n^k(132)` for `k = 1..=14`.
    Conj57,
}

impl TableId {
    pub const ALL: [TableId; 4] = [TableId::Table1, TableId::Table2, TableId::F2, TableId::Conj57];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Table1 => "table1",
            TableId::Table2 => "table2",
            TableId::F2 => "f2",
            TableId::Conj57 => "conj57",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f2_table" => Ok(TableId::F2),
            "conjecture57" => Ok(TableId::Conj57),
            _ => TableId::ALL
                .into_iter()
                .find(|t| t.name() == s)
                .ok_or_else(|| format!("unknown table {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let cells: serde_json::Map<String, serde_json::Value> =
                    self.header.iter().cloned().zip(row.iter().map(|c| json!(c))).collect();
                serde_json::Value::Object(cells)
            })
            .collect();
        json!({ "title": self.title, "rows": rows })
    }
}

/// Right-aligned columns under a title line.
impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.header.len();
        let width: Vec<usize> = (0..cols)
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r.get(c).map_or(0, String::len))
                    .chain([self.header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (c, cell) in cells.iter().enumerate() {
                if c > 0 {
                    s.push_str("  ");
                }
                let _ = write!(s, "{cell:>w$}", w = width[c]);
            }
            s
        };
        writeln!(f, "{}", self.title)?;
        writeln!(f, "{}", line(&self.header))?;
        for row in &self.rows {
            writeln!(f, "{}", line(row))?;
        }
        Ok(())
    }
}

fn numbered_header(first: &str, to: usize) -> Vec<String> {
    std::iter::once(first.to_string()).chain((1..=to).map(|n| n.to_string())).collect()
}

/// Renders the named table from fresh counts for `n = 1..=n_max`.
pub fn emit_table(engine: &Engine, which: TableId, n_max: usize) -> Result<Table, EnumError> {
    match which {
        TableId::Table1 => {
            let mut rows = Vec::new();
            for sigma in Pattern::s3() {
                let mut row = vec![sigma.to_string()];
                for n in 1..=n_max {
                    row.push(engine.count_t(n, &sigma, 1)?.to_string());
                }
                rows.push(row);
            }
            Ok(Table {
                title: "t_n(sigma): pi and theta(pi) both avoid sigma".into(),
                header: numbered_header("sigma", n_max),
                rows,
            })
        }
        TableId::Table2 => {
            let sigma: Pattern = "213".parse().expect("pattern");
            let mut rows = Vec::new();
            for k in 1..=5u32 {
                let mut row = vec![if k == 5 { ">=5".to_string() } else { k.to_string() }];
                for n in 1..=n_max {
                    row.push(engine.count_t(n, &sigma, k)?.to_string());
                }
                rows.push(row);
            }
            Ok(Table {
                title: "t_n^k(213): pi, theta(pi), ..., theta^k(pi) all avoid 213".into(),
                header: numbered_header("k", n_max),
                rows,
            })
        }
        TableId::F2 => {
            let mut row = vec!["f_n^2".to_string()];
            for n in 1..=n_max {
                row.push(engine.count_f_all(n, 2)?.to_string());
            }
            Ok(Table {
                title: "f_n^2: permutations of S_n with theta^2(pi) = pi".into(),
                header: numbered_header("n", n_max),
                rows: vec![row],
            })
        }
        TableId::Conj57 => {
            let k_max = 14u64;
            let mut rows = Vec::new();
            for sigma in ["213", "132"] {
                let p: Pattern = sigma.parse().expect("pattern");
                let profiles = (1..=n_max)
                    .map(|n| engine.f_sigma_profile(n, &p, k_max))
                    .collect::<Result<Vec<_>, _>>()?;
                let Some(last) = profiles.last() else { break };
                let mut values = vec![format!("f({sigma}) n={n_max}")];
                let mut from = vec![format!("from n ({sigma})")];
                for k in 0..k_max as usize {
                    values.push(last[k].to_string());
                    let n0 = profiles
                        .iter()
                        .rposition(|row| row[k] != last[k])
                        .map_or(1, |i| i + 2);
                    from.push(n0.to_string());
                }
                rows.push(values);
                rows.push(from);
            }
            Ok(Table {
                title: "f_n^k(sigma) at the largest n, and the n from which it holds constant".into(),
                header: numbered_header("k", k_max as usize),
                rows,
            })
        }
    }
}
