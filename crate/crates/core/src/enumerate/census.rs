//! Orbit census of `θ` acting on `S_n`.
//!
//! Every permutation is visited once: ranks are scanned in lexicographic
//! order alongside the word itself, and each rank not yet marked starts a
//! walk around its orbit that marks every member in a one-bit-per-rank map.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::perm::{factorial, next_permutation, rank_slice, theta_slice, unrank_into};

const BUF: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCensus {
    pub n: usize,
    /// Orbit length to number of orbits of that length.
    pub histogram: BTreeMap<u64, u64>,
}

impl OrbitCensus {
    /// Single-threaded census.
    pub fn compute(n: usize) -> Self {
        assert!(n <= BUF);
        let total = factorial(n);
        let mut visited = vec![0u64; total.div_ceil(64) as usize];
        let mut histogram = BTreeMap::new();
        let mut word = [0u8; BUF];
        for (i, slot) in word[..n].iter_mut().enumerate() {
            *slot = i as u8 + 1;
        }
        let (mut cur, mut next) = ([0u8; BUF], [0u8; BUF]);
        let mut rank = 0u64;
        loop {
            if visited[(rank / 64) as usize] & (1 << (rank % 64)) == 0 {
                cur[..n].copy_from_slice(&word[..n]);
                let mut len = 0u64;
                loop {
                    let r = rank_slice(&cur[..n]);
                    visited[(r / 64) as usize] |= 1 << (r % 64);
                    theta_slice(&cur[..n], &mut next[..n]);
                    len += 1;
                    if next[..n] == word[..n] {
                        break;
                    }
                    std::mem::swap(&mut cur, &mut next);
                }
                *histogram.entry(len).or_insert(0) += 1;
            }
            rank += 1;
            if !next_permutation(&mut word[..n]) {
                break;
            }
        }
        debug_assert_eq!(rank, total);
        OrbitCensus { n, histogram }
    }

    /// Chunked census over a shared atomic bitmap.
    ///
    /// Two workers may start the same orbit concurrently; each discovery is
    /// keyed by the orbit's smallest rank, so duplicates collapse on merge.
    pub fn compute_parallel(n: usize) -> Self {
        assert!(n <= BUF);
        let total = factorial(n);
        let visited: Vec<AtomicU64> = (0..total.div_ceil(64)).map(|_| AtomicU64::new(0)).collect();
        let chunks = (rayon::current_num_threads() as u64 * 16).clamp(1, total);
        let step = total.div_ceil(chunks);
        let mut found: Vec<(u64, u64)> = (0..chunks)
            .into_par_iter()
            .flat_map_iter(|c| {
                let lo = c * step;
                let hi = ((c + 1) * step).min(total);
                let mut local = Vec::new();
                if lo >= hi {
                    return local.into_iter();
                }
                let mut word = [0u8; BUF];
                unrank_into(lo, &mut word[..n]);
                let (mut cur, mut next) = ([0u8; BUF], [0u8; BUF]);
                for rank in lo..hi {
                    let seen = visited[(rank / 64) as usize].load(Ordering::Relaxed);
                    if seen & (1 << (rank % 64)) == 0 {
                        cur[..n].copy_from_slice(&word[..n]);
                        let mut len = 0u64;
                        let mut least = rank;
                        loop {
                            let r = rank_slice(&cur[..n]);
                            least = least.min(r);
                            visited[(r / 64) as usize].fetch_or(1 << (r % 64), Ordering::Relaxed);
                            theta_slice(&cur[..n], &mut next[..n]);
                            len += 1;
                            if next[..n] == word[..n] {
                                break;
                            }
                            std::mem::swap(&mut cur, &mut next);
                        }
                        local.push((least, len));
                    }
                    next_permutation(&mut word[..n]);
                }
                local.into_iter()
            })
            .collect();
        found.par_sort_unstable();
        found.dedup();
        let mut histogram = BTreeMap::new();
        for (_, len) in found {
            *histogram.entry(len).or_insert(0) += 1;
        }
        OrbitCensus { n, histogram }
    }

    /// Number of permutations covered, `Σ length · count`.
    pub fn total(&self) -> u64 {
        self.histogram.iter().map(|(len, count)| len * count).sum()
    }

    pub fn orbit_count(&self) -> u64 {
        self.histogram.values().sum()
    }

    /// `f_n^k = Σ_{d | k} d · (orbits of length d)`.
    pub fn fixed_by(&self, k: u64) -> u64 {
        self.histogram
            .iter()
            .filter(|(len, _)| k.is_multiple_of(**len))
            .map(|(len, count)| len * count)
            .sum()
    }

    pub fn longest_orbit(&self) -> u64 {
        self.histogram.keys().next_back().copied().unwrap_or(0)
    }
}
