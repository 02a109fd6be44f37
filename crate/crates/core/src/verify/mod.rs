//! Cross-checks brute-force counts against closed forms, probes the
//! conjectures, and renders the tables.
//!
//! Every check compares only inside the range where its claim is made and
//! enumeration is affordable, and reports the `(n, k)` window it actually
//! covered. Checks are independent and run concurrently; reports come back
//! in inventory order.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::enumerate::{EnumError, Engine};

mod conjectures;
mod periodicity;
mod tables;
mod theorems;

pub use periodicity::{periodicity_classes, Agreement, PeriodicityClasses, SampleAgreement, PAPER_SAMPLE_CLASSES};
pub use tables::{emit_table, Table, TableId};

/// Identifiers of the theorem-suite checks, in report order.
pub const THEOREM_CHECK_IDS: [&str; 30] = [
    "theta_direct_sum",
    "theta_irreducible",
    "t123_zero",
    "t123_small_cross",
    "t132_convolution",
    "t132_position_of_n",
    "t132_cyclic",
    "t213_closed_form",
    "t213_cyclic",
    "t213_fixed_intervals",
    "t231_power_of_two",
    "t312_power_of_two",
    "t321_gf",
    "t321_assembly",
    "t321_irred_end",
    "a_n_minus_1",
    "a_ni_binomial",
    "a_n_minus_2",
    "a_irred_binomial",
    "t2_213",
    "tk_213",
    "theta_fixed_fib",
    "tk_fib",
    "f1_cases",
    "f2_2313_gf",
    "f2_321_fib",
    "order2_shape",
    "f2_constants",
    "f2_table",
    "f2_witnesses_and_bound",
];

/// Identifiers of the conjecture-suite checks, in report order.
pub const CONJECTURE_CHECK_IDS: [&str; 10] = [
    "conj_t2_132",
    "conj_tk_132",
    "conj_f3_gf",
    "conj_f4_gf",
    "conj_f5_gf",
    "conj_f_constants_213",
    "conj_f_constants_132",
    "conj_power_of_two",
    "conj_triple",
    "conj_periodicity_samples",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    SkippedInfeasible,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedInfeasible => "skipped_infeasible",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub k: Option<u64>,
    pub expected: i64,
    pub actual: i64,
}

/// A value computed below the claimed range, kept but not asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub n: usize,
    pub k: Option<u64>,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: &'static str,
    /// The claim being checked, in words.
    pub citation: String,
    pub n_range: Option<(usize, usize)>,
    pub k_range: Option<(u64, u64)>,
    pub status: CheckStatus,
    pub first_mismatch: Option<Mismatch>,
    pub points: u64,
    pub unasserted: Vec<Observation>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    fn range_text(&self) -> String {
        let mut s = match self.n_range {
            Some((a, b)) => format!("n={a}..{b}"),
            None => "n=-".to_string(),
        };
        if let Some((a, b)) = self.k_range {
            let _ = write!(s, " k={a}..{b}");
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "paper_ref": self.citation,
            "range": {
                "n": self.n_range.map(|(a, b)| [a as u64, b as u64]),
                "k": self.k_range.map(|(a, b)| [a, b]),
            },
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "points": self.points,
            "unasserted": self.unasserted,
            "notes": self.notes,
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<24} {:<18} {:<20} {}", self.id, self.status.to_string(), self.range_text(), self.citation)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, "\n    first mismatch at n={}", m.n)?;
            if let Some(k) = m.k {
                write!(f, " k={k}")?;
            }
            write!(f, ": expected {}, got {}", m.expected, m.actual)?;
        }
        for note in &self.notes {
            write!(f, "\n    note: {note}")?;
        }
        Ok(())
    }
}

/// Which enumeration strategy bounds a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cost {
    /// Avoider streams, Catalan-sized.
    Stream,
    /// Every permutation of `S_n`, including the orbit census.
    Sweep,
    /// Per-permutation structural predicates.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub k_max: u64,
    /// Largest `n` for full sweeps of `S_n` and the census.
    pub sweep_n_max: usize,
    /// Largest `n` for avoider streams.
    pub stream_n_max: usize,
    /// Largest `n` for per-permutation structural checks.
    pub exhaustive_n_max: usize,
    /// Last `n` of the window for the eventually-constant tables.
    pub constants_n_max: usize,
    /// Largest `k` for the periodicity sample classes.
    pub periodicity_k_max: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 12,
            k_max: 14,
            sweep_n_max: 11,
            stream_n_max: 12,
            exhaustive_n_max: 9,
            constants_n_max: 9,
            periodicity_k_max: 97,
        }
    }
}

impl SuiteConfig {
    pub fn new(n_max: usize, k_max: u64) -> Self {
        SuiteConfig {
            n_max,
            k_max,
            ..SuiteConfig::default()
        }
    }

    fn limit(&self, cost: Cost) -> usize {
        match cost {
            Cost::Stream => self.n_max.min(self.stream_n_max),
            Cost::Sweep => self.n_max.min(self.sweep_n_max),
            Cost::Exhaustive => self.n_max.min(self.exhaustive_n_max),
        }
    }
}

/// Shared state for one check.
pub(crate) struct Ctx<'a> {
    pub engine: &'a Engine,
    pub cfg: &'a SuiteConfig,
}

impl Ctx<'_> {
    /// `from..=to` where `to` is `n_max` capped by the cost class; notes the
    /// part of the requested window that was dropped.
    fn window(&self, tally: &mut Tally, from: usize, cost: Cost) -> std::ops::RangeInclusive<usize> {
        let to = self.cfg.limit(cost);
        if to < self.cfg.n_max {
            tally.note(format!("n > {to} not enumerated (budget)"));
        }
        from..=to
    }
}

/// Accumulates comparisons for one check.
pub(crate) struct Tally {
    id: &'static str,
    citation: String,
    n_range: Option<(usize, usize)>,
    k_range: Option<(u64, u64)>,
    first_mismatch: Option<Mismatch>,
    points: u64,
    unasserted: Vec<Observation>,
    notes: Vec<String>,
}

impl Tally {
    fn new(id: &'static str, citation: impl Into<String>) -> Self {
        Tally {
            id,
            citation: citation.into(),
            n_range: None,
            k_range: None,
            first_mismatch: None,
            points: 0,
            unasserted: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn cover(&mut self, n: usize, k: Option<u64>) {
        self.points += 1;
        self.n_range = Some(match self.n_range {
            Some((a, b)) => (a.min(n), b.max(n)),
            None => (n, n),
        });
        if let Some(k) = k {
            self.k_range = Some(match self.k_range {
                Some((a, b)) => (a.min(k), b.max(k)),
                None => (k, k),
            });
        }
    }

    /// Widens the reported `n` range when one comparison summarises many `n`.
    fn widen(&mut self, n: usize) {
        if let Some((a, b)) = self.n_range {
            self.n_range = Some((a.min(n), b.max(n)));
        }
    }

    /// Records one comparison; `ok` decides whether it is a mismatch.
    fn check(&mut self, n: usize, k: Option<u64>, expected: i64, actual: i64, ok: bool) {
        self.cover(n, k);
        if !ok && self.first_mismatch.is_none() {
            self.first_mismatch = Some(Mismatch { n, k, expected, actual });
        }
    }

    fn equal(&mut self, n: usize, k: Option<u64>, expected: i64, actual: i64) {
        self.check(n, k, expected, actual, expected == actual);
    }

    fn record(&mut self, n: usize, k: Option<u64>, value: i64) {
        self.unasserted.push(Observation { n, k, value });
    }

    fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    /// Unwraps an engine result; a refusal is noted and yields `None`.
    fn value<T>(&mut self, n: usize, r: Result<T, EnumError>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.note(format!("n = {n} skipped: {e}"));
                None
            }
        }
    }

    fn finish(self) -> CheckReport {
        let status = if self.first_mismatch.is_some() {
            CheckStatus::Fail
        } else if self.points == 0 {
            CheckStatus::SkippedInfeasible
        } else {
            CheckStatus::Pass
        };
        CheckReport {
            id: self.id,
            citation: self.citation,
            n_range: self.n_range,
            k_range: self.k_range,
            status,
            first_mismatch: self.first_mismatch,
            points: self.points,
            unasserted: self.unasserted,
            notes: self.notes,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    Theorems,
    Conjectures,
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteKind::Theorems => "theorems",
            SuiteKind::Conjectures => "conjectures",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: SuiteKind,
    pub n_max: usize,
    pub k_max: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite,
            "n_max": self.n_max,
            "k_max": self.k_max,
            "checks": self.checks.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,id,status,n_lo,n_hi,k_lo,k_hi,mismatch_n,mismatch_k,expected,actual\n");
        let opt = |v: Option<String>| v.unwrap_or_default();
        for c in &self.checks {
            let m = c.first_mismatch.as_ref();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                self.suite,
                c.id,
                c.status,
                opt(c.n_range.map(|r| r.0.to_string())),
                opt(c.n_range.map(|r| r.1.to_string())),
                opt(c.k_range.map(|r| r.0.to_string())),
                opt(c.k_range.map(|r| r.1.to_string())),
                opt(m.map(|m| m.n.to_string())),
                opt(m.and_then(|m| m.k).map(|k| k.to_string())),
                opt(m.map(|m| m.expected.to_string())),
                opt(m.map(|m| m.actual.to_string())),
            );
        }
        out
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n_max = {}, k_max = {})", self.suite, self.n_max, self.k_max)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let failed = self.failures().count();
        write!(
            f,
            "{passed} passed, {failed} failed, {} skipped",
            self.checks.len() - passed - failed
        )
    }
}

type CheckFn = fn(&Ctx) -> CheckReport;

fn run(kind: SuiteKind, engine: &Engine, cfg: &SuiteConfig, checks: &[(&'static str, CheckFn)]) -> SuiteReport {
    let ctx = Ctx { engine, cfg };
    let reports: Vec<CheckReport> = checks
        .par_iter()
        .map(|(id, check)| {
            let report = check(&ctx);
            debug_assert_eq!(report.id, *id);
            report
        })
        .collect();
    SuiteReport {
        suite: kind,
        n_max: cfg.n_max,
        k_max: cfg.k_max,
        checks: reports,
    }
}

/// Every theorem and lemma consequence, brute force against closed form.
pub fn run_theorem_suite(engine: &Engine, cfg: &SuiteConfig) -> SuiteReport {
    run(SuiteKind::Theorems, engine, cfg, &theorems::CHECKS)
}

/// Every conjecture over the feasible window. `pass` means "consistent so far".
pub fn run_conjecture_suite(engine: &Engine, cfg: &SuiteConfig) -> SuiteReport {
    run(SuiteKind::Conjectures, engine, cfg, &conjectures::CHECKS)
}
