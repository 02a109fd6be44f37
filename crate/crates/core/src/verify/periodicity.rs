//! Classes of iteration counts `k` that give the same `f_n^k` for every `n`
//! in a window.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::enumerate::{EnumError, Engine};
use crate::patterns::Pattern;

/// The apparently-equal classes of `k` listed with the fixed-order counts.
pub const PAPER_SAMPLE_CLASSES: [&[u64]; 4] = [
    &[1, 5, 11, 13, 19, 23, 29, 31, 37, 41, 43, 53, 55, 59, 65, 67, 71, 73, 79, 83, 89, 95, 97],
    &[2, 26, 46, 58, 62, 74, 82, 86],
    &[3, 15, 33, 39, 57, 69, 87, 93],
    &[4, 8, 16, 32, 52, 64, 92],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    /// The sample is exactly one computed class.
    Matched,
    /// The sample lies inside one computed class that has further members.
    Contained,
    /// The sample meets several computed classes.
    Split,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Matched => "matched",
            Agreement::Contained => "contained",
            Agreement::Split => "split",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleAgreement {
    /// The listed sample restricted to `k <= k_max`.
    pub sample: Vec<u64>,
    pub agreement: Agreement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicityClasses {
    /// `None` for the unrestricted counts over all of `S_n`.
    pub sigma: Option<String>,
    pub n_max: usize,
    pub k_max: u64,
    /// A partition of `1..=k_max`, each class sorted, classes by least member.
    pub classes: Vec<Vec<u64>>,
    pub samples: Vec<SampleAgreement>,
}

impl PeriodicityClasses {
    pub fn class_of(&self, k: u64) -> Option<&[u64]> {
        self.classes.iter().find(|c| c.contains(&k)).map(Vec::as_slice)
    }
}

impl fmt::Display for PeriodicityClasses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = self.sigma.as_deref().unwrap_or("all of S_n");
        writeln!(f, "classes of k for {label}, n <= {}, k <= {}", self.n_max, self.k_max)?;
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        for c in &self.classes {
            writeln!(f, "  {{{}}}", join(c))?;
        }
        for s in &self.samples {
            writeln!(f, "sample {{{}}}: {}", join(&s.sample), s.agreement)?;
        }
        Ok(())
    }
}

/// Groups `k = 1..=k_max` by the vector `(f_n^k(σ))_{n <= n_max}`; with no
/// pattern the orbit census gives `f_n^k` over all of `S_n`.
pub fn periodicity_classes(
    engine: &Engine,
    sigma: Option<&Pattern>,
    n_max: usize,
    k_max: u64,
) -> Result<PeriodicityClasses, EnumError> {
    let mut vectors: Vec<Vec<u64>> = vec![Vec::with_capacity(n_max); k_max as usize];
    for n in 1..=n_max {
        let row: Vec<u64> = match sigma {
            Some(s) => engine.f_sigma_profile(n, s, k_max)?,
            None => {
                let census = engine.orbit_census(n)?;
                (1..=k_max).map(|k| census.fixed_by(k)).collect()
            }
        };
        for (v, x) in vectors.iter_mut().zip(row) {
            v.push(x);
        }
    }
    let mut index: HashMap<&[u64], usize> = HashMap::new();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    let mut class_of = Vec::with_capacity(k_max as usize);
    for (i, v) in vectors.iter().enumerate() {
        let c = *index.entry(v.as_slice()).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(i as u64 + 1);
        class_of.push(c);
    }
    let samples = PAPER_SAMPLE_CLASSES
        .iter()
        .filter_map(|sample| {
            let sample: Vec<u64> = sample.iter().copied().filter(|&k| k <= k_max).collect();
            let first = *sample.first()?;
            let c = class_of[first as usize - 1];
            let agreement = if sample.iter().any(|&k| class_of[k as usize - 1] != c) {
                Agreement::Split
            } else if classes[c] == sample {
                Agreement::Matched
            } else {
                Agreement::Contained
            };
            Some(SampleAgreement { sample, agreement })
        })
        .collect();
    Ok(PeriodicityClasses {
        sigma: sigma.map(ToString::to_string),
        n_max,
        k_max,
        classes,
        samples,
    })
}
