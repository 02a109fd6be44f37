//! Classical pattern containment.
//!
//! A word contains a pattern when some subsequence is order-isomorphic to it.
//! All routines here accept any word of distinct positive values below 65,
//! not only permutations of `1..=n`, so they apply to prefixes under
//! construction as well.

use std::fmt;
use std::str::FromStr;

use crate::perm::{PermError, Permutation};

/// A permutation used as a containment target.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    word: Permutation,
    kind: Option<Small>,
}

/// The six patterns of length three, which get dedicated scans.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Small {
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
}

impl Pattern {
    pub fn new(word: Permutation) -> Result<Self, PermError> {
        if word.is_empty() {
            return Err(PermError::Parse {
                input: String::new(),
                reason: "a pattern must be nonempty".into(),
            });
        }
        let kind = match word.values() {
            [1, 2, 3] => Some(Small::P123),
            [1, 3, 2] => Some(Small::P132),
            [2, 1, 3] => Some(Small::P213),
            [2, 3, 1] => Some(Small::P231),
            [3, 1, 2] => Some(Small::P312),
            [3, 2, 1] => Some(Small::P321),
            _ => None,
        };
        Ok(Pattern { word, kind })
    }

    /// The six patterns of length three in lexicographic order.
    pub fn s3() -> Vec<Pattern> {
        ["123", "132", "213", "231", "312", "321"]
            .iter()
            .map(|s| s.parse().expect("valid pattern"))
            .collect()
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reverse_complement(&self) -> Pattern {
        Pattern::new(self.word.reverse_complement()).expect("nonempty")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.word)
    }
}

impl FromStr for Pattern {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::new(s.parse()?)
    }
}

/// True iff `word` contains `pattern`.
pub fn contains(word: &[u8], pattern: &Pattern) -> bool {
    match pattern.kind {
        Some(kind) => contains_small(word, kind),
        None => contains_generic(word, pattern.word.values()),
    }
}

pub fn avoids(word: &[u8], pattern: &Pattern) -> bool {
    !contains(word, pattern)
}

/// Backtracking containment for patterns of any length.
pub fn contains_generic(word: &[u8], pattern: &[u8]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > word.len() {
        return false;
    }
    let windows = Windows::new(pattern);
    let mut chosen = [0u8; 64];
    embed(word, &windows, 0, 0, None, &mut chosen)
}

/// True iff `prefix · next` contains `pattern`, given that `prefix` avoids it.
///
/// Only occurrences ending at `next` are searched. Length-three patterns use
/// a linear scan over a bitmask of earlier values.
pub fn contains_on_extension(prefix: &[u8], next: u8, pattern: &Pattern) -> bool {
    let m = pattern.len();
    if m == 1 {
        return true;
    }
    if prefix.len() + 1 < m {
        return false;
    }
    if m == 3 {
        return extension_small(prefix, next, pattern.word.values());
    }
    let windows = Windows::new(pattern.word.values());
    let mut chosen = [0u8; 64];
    embed(prefix, &windows, 0, 0, Some(next), &mut chosen)
}

/// For each pattern index, the earlier indices holding the nearest smaller
/// and nearest larger pattern values. Their images bound the next choice.
struct Windows {
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Windows {
    fn new(pattern: &[u8]) -> Self {
        let m = pattern.len();
        let mut below = vec![None; m];
        let mut above = vec![None; m];
        for j in 0..m {
            for t in 0..j {
                if pattern[t] < pattern[j] && below[j].is_none_or(|b: usize| pattern[b] < pattern[t]) {
                    below[j] = Some(t);
                }
                if pattern[t] > pattern[j] && above[j].is_none_or(|a: usize| pattern[a] > pattern[t]) {
                    above[j] = Some(t);
                }
            }
        }
        Windows { below, above }
    }

    fn len(&self) -> usize {
        self.below.len()
    }

    fn admits(&self, depth: usize, chosen: &[u8], v: u8) -> bool {
        self.below[depth].is_none_or(|t| chosen[t] < v) && self.above[depth].is_none_or(|t| chosen[t] > v)
    }
}

/// Depth-first search over increasing index choices. With `last` set, the
/// final pattern entry must be matched by that value.
fn embed(
    word: &[u8],
    windows: &Windows,
    depth: usize,
    start: usize,
    last: Option<u8>,
    chosen: &mut [u8; 64],
) -> bool {
    let m = windows.len();
    match last {
        Some(v) if depth == m - 1 => return windows.admits(depth, chosen, v),
        None if depth == m => return true,
        _ => {}
    }
    let remaining = m - depth - usize::from(last.is_some());
    if word.len() < start + remaining {
        return false;
    }
    for i in start..=word.len() - remaining {
        let v = word[i];
        if windows.admits(depth, chosen, v) {
            chosen[depth] = v;
            if embed(word, windows, depth + 1, i + 1, last, chosen) {
                return true;
            }
        }
    }
    false
}

fn contains_small(word: &[u8], kind: Small) -> bool {
    let n = word.len();
    match kind {
        Small::P123 => monotone_triple(word, |a, b| a < b),
        Small::P321 => monotone_triple(word, |a, b| a > b),
        Small::P132 => has_132((0..n).map(|i| word[i] as i16)),
        Small::P231 => has_132((0..n).rev().map(|i| word[i] as i16)),
        Small::P312 => has_132((0..n).map(|i| -(word[i] as i16))),
        Small::P213 => has_132((0..n).rev().map(|i| -(word[i] as i16))),
    }
}

/// Length-three chain `a ~ b ~ c` under `less`, using the running extreme
/// on the left and the opposite extreme on the right.
fn monotone_triple(word: &[u8], less: impl Fn(u8, u8) -> bool) -> bool {
    let n = word.len();
    if n < 3 {
        return false;
    }
    let mut right = [0u8; 64];
    right[n - 1] = word[n - 1];
    for j in (0..n - 1).rev() {
        right[j] = if less(right[j + 1], word[j]) { word[j] } else { right[j + 1] };
    }
    let mut left = word[0];
    for j in 1..n - 1 {
        if less(left, word[j]) && less(word[j], right[j + 1]) {
            return true;
        }
        if less(word[j], left) {
            left = word[j];
        }
    }
    false
}

/// Detects `i < j < k` with `a_i < a_k < a_j` in one right-to-left pass.
fn has_132(values: impl DoubleEndedIterator<Item = i16>) -> bool {
    let mut stack = [0i16; 64];
    let mut top = 0;
    let mut third = i16::MIN;
    for x in values.rev() {
        if x < third {
            return true;
        }
        while top > 0 && stack[top - 1] < x {
            top -= 1;
            third = stack[top];
        }
        stack[top] = x;
        top += 1;
    }
    false
}

/// Bits for values strictly between `lo` and `hi` (value `v` is bit `v - 1`).
fn open_interval(lo: u8, hi: u8) -> u64 {
    if hi <= lo + 1 {
        return 0;
    }
    let upto = if hi >= 65 { u64::MAX } else { (1u64 << (hi - 1)) - 1 };
    let from = (1u64 << lo) - 1;
    upto & !from
}

fn extension_small(prefix: &[u8], next: u8, pattern: &[u8]) -> bool {
    let (a, b, c) = (pattern[0], pattern[1], pattern[2]);
    let mut before = 0u64;
    for &w in prefix {
        if (w < next) == (b < c) {
            let (lo_mid, hi_mid) = if w < next { (w, next) } else { (next, w) };
            let window = if a < b.min(c) {
                open_interval(0, lo_mid)
            } else if a > b.max(c) {
                open_interval(hi_mid, 65)
            } else {
                open_interval(lo_mid, hi_mid)
            };
            if before & window != 0 {
                return true;
            }
        }
        before |= 1u64 << (w - 1);
    }
    false
}
