//! Counting over `S_n`: iterated-`θ` avoidance classes, `θ^k`-fixed
//! permutations, and the `θ`-orbit census.
//!
//! Pattern-restricted counts stream avoiders (Catalan-bounded for patterns
//! of length three); unrestricted counts come from a full rank-indexed sweep.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::patterns::{contains, Pattern};
use crate::perm::{factorial, is_irreducible_slice, next_permutation, theta_slice, PermError};

mod avoiders;
mod cache;
mod census;
mod structure;

pub use avoiders::{count_avoiders_where, fold_avoiders, gen_avoiders, AvoiderWalk, Avoiders};
pub use cache::{CacheError, CountKind, CountQuery, ResultCache};
pub use census::OrbitCensus;
pub use structure::{structural_check, StructuralLemma};

/// Projected elementary steps a query may take before it is refused.
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000_000;

/// Largest census run without an explicit override (about 60 MB of bits).
pub const DEFAULT_CENSUS_CAP: usize = 12;

/// Hard ceiling for the census even with the override (about 780 MB).
pub const MAX_CENSUS_N: usize = 13;

/// Words handled by the sweeps fit in fixed stack buffers.
const SWEEP_BUF: usize = 20;

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("query needs about {projected} steps, over the budget of {budget}; pass --force to run it")]
    Infeasible { projected: u128, budget: u64 },
    #[error("orbit census for n = {n} exceeds the memory cap n <= {cap}")]
    CensusTooLarge { n: usize, cap: usize },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

pub type Result<T> = std::result::Result<T, EnumError>;

/// Step budget shared by all queries of an [`Engine`].
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_steps: u64,
    pub force: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: DEFAULT_STEP_BUDGET,
            force: false,
        }
    }
}

impl Budget {
    fn admit(&self, projected: u128) -> Result<()> {
        if self.force || projected <= self.max_steps as u128 {
            Ok(())
        } else {
            Err(EnumError::Infeasible {
                projected,
                budget: self.max_steps,
            })
        }
    }
}

/// Counting front end holding budgets and a per-`n` census memo.
pub struct Engine {
    pub budget: Budget,
    /// Largest census `n` accepted without `allow_large_census`.
    pub census_cap: usize,
    pub allow_large_census: bool,
    /// Run the census on the chunked multi-threaded path.
    pub parallel_census: bool,
    censuses: Mutex<HashMap<usize, Arc<OnceLock<Arc<OrbitCensus>>>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            budget: Budget::default(),
            census_cap: DEFAULT_CENSUS_CAP,
            allow_large_census: false,
            parallel_census: false,
            censuses: Mutex::new(HashMap::new()),
        }
    }
}

/// Rough size of the avoider stream for a pattern of length `m`.
fn stream_size(n: usize, m: usize) -> u128 {
    let full = if n <= 34 {
        (1..=n as u128).product::<u128>()
    } else {
        u128::MAX
    };
    let bound = match m {
        0 | 1 => 1,
        2 => 1,
        3 => crate::series::catalan_u128(n),
        // Growth rate of any class is at most (m - 1)^2.
        _ => ((m as u128 - 1).pow(2)).saturating_pow(n as u32),
    };
    full.min(bound)
}

/// True iff `θ^j(word)` avoids `pattern` for every `1 <= j <= k`.
fn iterates_avoid(word: &[u8], k: u32, pattern: &Pattern) -> bool {
    let n = word.len();
    let mut cur = [0u8; 64];
    let mut next = [0u8; 64];
    cur[..n].copy_from_slice(word);
    for _ in 0..k {
        theta_slice(&cur[..n], &mut next[..n]);
        if contains(&next[..n], pattern) {
            return false;
        }
        std::mem::swap(&mut cur, &mut next);
    }
    true
}

/// True iff `θ^k(word) = word`.
pub(crate) fn fixed_by(word: &[u8], k: u64) -> bool {
    let n = word.len();
    let mut cur = [0u8; 64];
    let mut next = [0u8; 64];
    cur[..n].copy_from_slice(word);
    for _ in 0..k {
        theta_slice(&cur[..n], &mut next[..n]);
        std::mem::swap(&mut cur, &mut next);
    }
    cur[..n] == *word
}

/// Least `d <= limit` with `θ^d(word) = word`, if any.
pub(crate) fn short_orbit(word: &[u8], limit: u64) -> Option<u64> {
    let n = word.len();
    let mut cur = [0u8; 64];
    let mut next = [0u8; 64];
    cur[..n].copy_from_slice(word);
    for d in 1..=limit {
        theta_slice(&cur[..n], &mut next[..n]);
        if next[..n] == *word {
            return Some(d);
        }
        std::mem::swap(&mut cur, &mut next);
    }
    None
}

/// Counts `π ∈ S_n` satisfying `keep` by a full lexicographic sweep,
/// split across threads by the first value.
pub fn count_permutations_where<F>(n: usize, keep: F) -> u64
where
    F: Fn(&[u8]) -> bool + Sync,
{
    assert!(n <= SWEEP_BUF);
    if n == 0 {
        return u64::from(keep(&[]));
    }
    (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut word = [0u8; SWEEP_BUF];
            word[0] = first;
            let rest: Vec<u8> = (1..=n as u8).filter(|&v| v != first).collect();
            word[1..n].copy_from_slice(&rest);
            let mut count = 0;
            loop {
                if keep(&word[..n]) {
                    count += 1;
                }
                if !next_permutation(&mut word[1..n]) {
                    break;
                }
            }
            count
        })
        .sum()
}

impl Engine {
    pub fn new(budget: Budget) -> Self {
        Engine {
            budget,
            ..Engine::default()
        }
    }

    fn admit_stream(&self, n: usize, pattern: &Pattern, k: u32) -> Result<()> {
        let projected = stream_size(n, pattern.len())
            .saturating_mul(n as u128 + 1)
            .saturating_mul(k as u128 + 1);
        self.budget.admit(projected)
    }

    fn admit_sweep(&self, n: usize, k: u64) -> Result<()> {
        if n > SWEEP_BUF {
            return Err(EnumError::InvalidQuery(format!("full sweep of S_{n} is out of reach")));
        }
        let projected = (factorial(n) as u128)
            .saturating_mul(n as u128 + 1)
            .saturating_mul(k as u128 + 1);
        self.budget.admit(projected)
    }

    /// `t_n^k(σ)`: permutations whose iterates `π, θ(π), ..., θ^k(π)` all avoid `σ`.
    pub fn count_t(&self, n: usize, pattern: &Pattern, k: u32) -> Result<u64> {
        if k == 0 {
            return Err(EnumError::InvalidQuery("k must be at least 1".into()));
        }
        self.admit_stream(n, pattern, k)?;
        Ok(count_avoiders_where(n, pattern, |w| iterates_avoid(w, k, pattern)))
    }

    /// `f_n^k(σ)`: `σ`-avoiders fixed by `θ^k`.
    pub fn count_f_sigma(&self, n: usize, pattern: &Pattern, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(EnumError::InvalidQuery("k must be at least 1".into()));
        }
        self.admit_stream(n, pattern, k.min(u32::MAX as u64) as u32)?;
        Ok(count_avoiders_where(n, pattern, |w| fixed_by(w, k)))
    }

    /// `f_n^k(σ)` for every `k` in `1..=k_max` from a single pass: each
    /// avoider contributes to every multiple of its orbit length.
    pub fn f_sigma_profile(&self, n: usize, pattern: &Pattern, k_max: u64) -> Result<Vec<u64>> {
        self.admit_stream(n, pattern, k_max.min(u32::MAX as u64) as u32)?;
        let k_max = k_max as usize;
        let lengths = fold_avoiders(
            n,
            pattern,
            vec![0u64; k_max + 1],
            |acc, w| {
                if let Some(d) = short_orbit(w, k_max as u64) {
                    acc[d as usize] += 1;
                }
            },
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
        Ok((1..=k_max)
            .map(|k| (1..=k).filter(|d| k % d == 0).map(|d| lengths[d]).sum())
            .collect())
    }

    /// The orbit census of `θ` on `S_n`, memoised per `n`.
    pub fn orbit_census(&self, n: usize) -> Result<Arc<OrbitCensus>> {
        let cap = if self.allow_large_census {
            MAX_CENSUS_N
        } else {
            self.census_cap.min(MAX_CENSUS_N)
        };
        if n > cap {
            return Err(EnumError::CensusTooLarge { n, cap });
        }
        self.admit_sweep(n, 1)?;
        // Concurrent callers for the same n share one computation.
        let slot = Arc::clone(self.censuses.lock().expect("census memo").entry(n).or_default());
        let census = slot.get_or_init(|| {
            Arc::new(if self.parallel_census {
                OrbitCensus::compute_parallel(n)
            } else {
                OrbitCensus::compute(n)
            })
        });
        Ok(Arc::clone(census))
    }

    /// `f_n^k`: all of `S_n` fixed by `θ^k`, read off the census.
    pub fn count_f_all(&self, n: usize, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(EnumError::InvalidQuery("k must be at least 1".into()));
        }
        Ok(self.orbit_census(n)?.fixed_by(k))
    }

    /// `f_n^k` by testing `θ^k(π) = π` on every permutation.
    pub fn count_f_all_direct(&self, n: usize, k: u64) -> Result<u64> {
        self.admit_sweep(n, k)?;
        Ok(count_permutations_where(n, |w| fixed_by(w, k)))
    }

    /// `a_n(321)`: irreducible members of `T_n(321)`.
    pub fn count_irreducible_t321(&self, n: usize) -> Result<u64> {
        let sigma: Pattern = "321".parse().expect("pattern");
        self.admit_stream(n, &sigma, 1)?;
        Ok(count_avoiders_where(n, &sigma, |w| {
            is_irreducible_slice(w) && iterates_avoid(w, 1, &sigma)
        }))
    }

    /// `a(n, i)`: irreducible members of `T_n(321)` with `π_i = n`.
    pub fn count_a_ni(&self, n: usize, i: usize) -> Result<u64> {
        if i == 0 || i > n {
            return Err(EnumError::InvalidQuery(format!("position {i} outside 1..={n}")));
        }
        let sigma: Pattern = "321".parse().expect("pattern");
        self.admit_stream(n, &sigma, 1)?;
        Ok(count_avoiders_where(n, &sigma, |w| {
            w[i - 1] as usize == n && is_irreducible_slice(w) && iterates_avoid(w, 1, &sigma)
        }))
    }

    /// Cyclic members of `T_n(σ)`.
    pub fn count_cyclic_t(&self, n: usize, pattern: &Pattern) -> Result<u64> {
        self.admit_stream(n, pattern, 1)?;
        Ok(count_avoiders_where(n, pattern, |w| {
            is_cyclic_slice(w) && iterates_avoid(w, 1, pattern)
        }))
    }

    /// Members of `T_n(σ)` whose image `θ(π)` is cyclic.
    pub fn count_cyclic_image_t(&self, n: usize, pattern: &Pattern) -> Result<u64> {
        self.admit_stream(n, pattern, 1)?;
        Ok(count_avoiders_where(n, pattern, |w| {
            let mut img = [0u8; 64];
            theta_slice(w, &mut img[..w.len()]);
            is_cyclic_slice(&img[..w.len()]) && !contains(&img[..w.len()], pattern)
        }))
    }

    /// Evaluates a [`CountQuery`], consulting and filling `cache` if given.
    pub fn evaluate(&self, query: &CountQuery, cache: Option<&mut ResultCache>) -> Result<u64> {
        query.validate()?;
        if let Some(hit) = cache.as_ref().and_then(|c| c.lookup(query)) {
            return Ok(hit);
        }
        let sigma = query.sigma.as_ref();
        let need = || sigma.expect("validated");
        let count = match query.kind {
            CountKind::T => self.count_t(query.n, need(), query.k)?,
            CountKind::F => self.count_f_sigma(query.n, need(), query.k as u64)?,
            CountKind::FAll => self.count_f_all(query.n, query.k as u64)?,
            CountKind::AIrred => self.count_irreducible_t321(query.n)?,
            CountKind::ANi => self.count_a_ni(query.n, query.i.expect("validated"))?,
            CountKind::CyclicT => self.count_cyclic_t(query.n, need())?,
        };
        if let Some(cache) = cache {
            cache
                .record(query, count)
                .map_err(|e| EnumError::InvalidQuery(format!("cache write failed: {e}")))?;
        }
        Ok(count)
    }
}

pub(crate) fn is_cyclic_slice(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let mut x = w[0];
    let mut len = 1;
    while x != 1 {
        x = w[x as usize - 1];
        len += 1;
    }
    len == w.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn iterated_avoidance_counts() {
        let e = Engine::default();
        assert_eq!(e.count_t(3, &pat("132"), 1).unwrap(), 5);
        assert_eq!(e.count_t(12, &pat("123"), 1).unwrap(), 0);
        assert_eq!(e.count_t(6, &pat("213"), 2).unwrap(), 21);
        assert!(e.count_t(3, &pat("132"), 0).is_err());
    }

    #[test]
    fn fixed_counts() {
        let e = Engine::default();
        assert_eq!(e.count_f_sigma(6, &pat("321"), 2).unwrap(), 13);
        assert_eq!(e.count_f_sigma(5, &pat("123"), 1).unwrap(), 0);
        assert_eq!(e.count_f_sigma(5, &pat("213"), 2).unwrap(), 4);
        let profile = e.f_sigma_profile(6, &pat("213"), 6).unwrap();
        for k in 1..=6u64 {
            assert_eq!(profile[k as usize - 1], e.count_f_sigma(6, &pat("213"), k).unwrap());
        }
    }

    #[test]
    fn census_derived_counts() {
        let e = Engine::default();
        assert_eq!(e.count_f_all(4, 2).unwrap(), 7);
        assert_eq!(e.count_f_all(3, 3).unwrap(), 6);
        assert_eq!(e.count_f_all_direct(6, 2).unwrap(), e.count_f_all(6, 2).unwrap());
        let small = Engine {
            census_cap: 5,
            ..Engine::default()
        };
        assert!(matches!(
            small.orbit_census(6),
            Err(EnumError::CensusTooLarge { n: 6, cap: 5 })
        ));
        assert!(matches!(
            Engine::default().orbit_census(14),
            Err(EnumError::CensusTooLarge { .. })
        ));
    }

    #[test]
    fn irreducible_321_counts() {
        let e = Engine::default();
        assert_eq!(e.count_irreducible_t321(1).unwrap(), 1);
        assert_eq!(e.count_irreducible_t321(2).unwrap(), 1);
        assert_eq!(e.count_irreducible_t321(6).unwrap(), 6);
        assert_eq!(e.count_a_ni(7, 6).unwrap(), 6);
        assert_eq!(e.count_a_ni(8, 5).unwrap(), 3);
        assert_eq!(e.count_a_ni(6, 1).unwrap(), 0);
        assert!(e.count_a_ni(6, 0).is_err());
    }

    #[test]
    fn cyclic_counts() {
        let e = Engine::default();
        assert_eq!(e.count_cyclic_t(4, &pat("132")).unwrap(), 3);
        assert_eq!(e.count_cyclic_t(4, &pat("213")).unwrap(), 4);
        assert_eq!(e.count_cyclic_t(3, &pat("231")).unwrap(), 1);
    }

    #[test]
    fn budget_refuses_large_work() {
        let tight = Engine::new(Budget {
            max_steps: 1000,
            force: false,
        });
        assert!(matches!(
            tight.count_t(10, &pat("123"), 1),
            Err(EnumError::Infeasible { .. })
        ));
        let forced = Engine::new(Budget {
            max_steps: 1000,
            force: true,
        });
        assert_eq!(
            forced.count_t(10, &pat("123"), 1).unwrap(),
            Engine::default().count_t(10, &pat("123"), 1).unwrap()
        );
    }

    #[test]
    fn cyclic_slice_agrees_with_cycle_count() {
        for w in ["1", "21", "312", "231", "321", "2341", "2143"] {
            let p: Permutation = w.parse().unwrap();
            assert_eq!(is_cyclic_slice(p.values()), p.is_cyclic(), "{w}");
        }
    }
}
