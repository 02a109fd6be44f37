//! Permutations in one-line notation and the structural operations used
//! throughout the crate.
//!
//! Values are 1-based: a permutation of length `n` is a word holding each of
//! `1..=n` exactly once. The empty permutation is a legal value and is the
//! identity for [`Permutation::direct_sum`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

mod rank;
mod theta;

pub use rank::{factorial, next_permutation, rank_slice, unrank_into};
pub use theta::{
    orbit_length_slice, theta_inverse_slice, theta_slice, CycleForm, DEFAULT_ORBIT_CAP,
};

/// Largest supported permutation length. Visited sets are kept in a `u64`.
pub const MAX_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("duplicate value {value}")]
    Duplicate { value: i64 },
    #[error("value {value} is outside 1..={len}")]
    OutOfRange { value: i64, len: usize },
    #[error("permutation length {len} exceeds the supported maximum {max}")]
    TooLong { len: usize, max: usize },
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("rank {rank} is out of range for S_{n} ({factorial} elements)")]
    RankOutOfRange { n: usize, rank: u64, factorial: u64 },
    #[error("length {n} is too large to rank in 64 bits")]
    RankTooLarge { n: usize },
    #[error("orbit walk exceeded the step cap of {cap}")]
    OrbitCapExceeded { cap: u64 },
}

/// A permutation in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u8>,
}

/// The three non-trivial symmetries of the square acting on one-line words
/// that the avoidance arguments rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Complement,
    Reverse,
    ReverseComplement,
}

impl Permutation {
    /// Validates `values` as a rearrangement of `1..=n`.
    pub fn new(values: impl IntoIterator<Item = i64>) -> Result<Self, PermError> {
        let raw: Vec<i64> = values.into_iter().collect();
        let len = raw.len();
        if len > MAX_LEN {
            return Err(PermError::TooLong { len, max: MAX_LEN });
        }
        let mut seen = 0u64;
        let mut out = Vec::with_capacity(len);
        for &v in &raw {
            if v < 1 || v > len as i64 {
                return Err(PermError::OutOfRange { value: v, len });
            }
            let bit = 1u64 << (v - 1);
            if seen & bit != 0 {
                return Err(PermError::Duplicate { value: v });
            }
            seen |= bit;
            out.push(v as u8);
        }
        Ok(Permutation { values: out })
    }

    /// Wraps a word already known to be a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(is_permutation_word(&values));
        Permutation { values }
    }

    pub(crate) fn from_slice_unchecked(values: &[u8]) -> Self {
        Self::from_vec_unchecked(values.to_vec())
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Permutation {
            values: (1..=n as u8).collect(),
        }
    }

    /// The decreasing word `n (n-1) ... 1`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Permutation {
            values: (1..=n as u8).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The one-line word, position `i` (0-based here) holding `π(i+1)`.
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// `π(pos)` for a 1-based position.
    pub fn at(&self, pos: usize) -> usize {
        self.values[pos - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn symmetry(&self, which: Symmetry) -> Permutation {
        let n = self.len() as u8;
        let values = match which {
            Symmetry::Complement => self.values.iter().map(|&v| n + 1 - v).collect(),
            Symmetry::Reverse => self.values.iter().rev().copied().collect(),
            Symmetry::ReverseComplement => self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        };
        Permutation { values }
    }

    pub fn complement(&self) -> Permutation {
        self.symmetry(Symmetry::Complement)
    }

    pub fn reverse(&self) -> Permutation {
        self.symmetry(Symmetry::Reverse)
    }

    pub fn reverse_complement(&self) -> Permutation {
        self.symmetry(Symmetry::ReverseComplement)
    }

    /// `self ⊕ other`: `other` shifted up by `self.len()` and placed after `self`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len() as u8;
        let len = self.len() + other.len();
        assert!(len <= MAX_LEN, "direct sum of length {len} exceeds {MAX_LEN}");
        let mut values = Vec::with_capacity(len);
        values.extend_from_slice(&self.values);
        values.extend(other.values.iter().map(|&v| v + shift));
        Permutation { values }
    }

    /// Folds a sequence of permutations with the direct sum.
    pub fn direct_sum_all<'a>(parts: impl IntoIterator<Item = &'a Permutation>) -> Permutation {
        parts
            .into_iter()
            .fold(Permutation::empty(), |acc, p| acc.direct_sum(p))
    }

    /// The finest decomposition `π = τ_1 ⊕ ... ⊕ τ_m` into irreducible blocks.
    pub fn decompose_irreducible(&self) -> Vec<Permutation> {
        block_ends(&self.values)
            .scan(0usize, |start, end| {
                let shift = *start as u8;
                let block = self.values[*start..end].iter().map(|&v| v - shift).collect();
                *start = end;
                Some(Permutation { values: block })
            })
            .collect()
    }

    /// True iff `π` is nonempty and not a direct sum of two nonempty parts.
    pub fn is_irreducible(&self) -> bool {
        is_irreducible_slice(&self.values)
    }

    /// True iff every cycle is a fixed point or a transposition `(i+1, i)`.
    pub fn is_theta_fixed_shape(&self) -> bool {
        let v = &self.values;
        let mut i = 0;
        while i < v.len() {
            let pos = i as u8 + 1;
            if v[i] == pos {
                i += 1;
            } else if v[i] == pos + 1 && i + 1 < v.len() && v[i + 1] == pos {
                i += 2;
            } else {
                return false;
            }
        }
        true
    }

    /// Left-to-right maxima in order of appearance.
    pub fn left_to_right_maxima(&self) -> Vec<u8> {
        let mut best = 0;
        self.values
            .iter()
            .filter(|&&v| {
                let record = v > best;
                best = best.max(v);
                record
            })
            .copied()
            .collect()
    }
}

/// Positions (exclusive ends) at which a prefix `π_1..π_e` is a permutation of `1..=e`.
fn block_ends(values: &[u8]) -> impl Iterator<Item = usize> + '_ {
    let mut max = 0u8;
    values.iter().enumerate().filter_map(move |(i, &v)| {
        max = max.max(v);
        (max as usize == i + 1).then_some(i + 1)
    })
}

pub(crate) fn is_irreducible_slice(values: &[u8]) -> bool {
    !values.is_empty() && block_ends(values).next() == Some(values.len())
}

pub(crate) fn is_permutation_word(values: &[u8]) -> bool {
    let n = values.len();
    if n > MAX_LEN {
        return false;
    }
    let mut seen = 0u64;
    for &v in values {
        if v == 0 || v as usize > n || seen & (1 << (v - 1)) != 0 {
            return false;
        }
        seen |= 1 << (v - 1);
    }
    true
}

/// Compact digits for `n <= 9`, comma separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let mut first = true;
            for v in &self.values {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Accepts `"413526987"` or `"10,3,1,2,..."`; a comma anywhere selects the
/// comma-separated form. The empty string is the empty permutation.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_err = |reason: String| PermError::Parse {
            input: s.to_string(),
            reason,
        };
        let values: Vec<i64> = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|e| parse_err(format!("{tok:?}: {e}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(i64::from)
                        .ok_or_else(|| parse_err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

impl TryFrom<&str> for Permutation {
    type Error = PermError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction() {
        let q = Permutation::new([4, 1, 2, 5, 3]).unwrap();
        assert_eq!(q.to_string(), "41253");
        assert!(Permutation::new([]).unwrap().is_empty());
        assert_eq!(
            Permutation::new([1, 1]),
            Err(PermError::Duplicate { value: 1 })
        );
        assert!(matches!(
            Permutation::new([0, 1]),
            Err(PermError::OutOfRange { value: 0, .. })
        ));
        assert!(matches!(
            Permutation::new([1, 3]),
            Err(PermError::OutOfRange { value: 3, .. })
        ));
        assert!(matches!(
            Permutation::new([-1, 1]),
            Err(PermError::OutOfRange { value: -1, .. })
        ));
    }

    #[test]
    fn text_formats() {
        let long = Permutation::new([10, 3, 1, 2, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(long.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!(p("10,3,1,2,4,5,6,7,8,9"), long);
        assert_eq!(p("2,1"), p("21"));
        assert!("4a1".parse::<Permutation>().is_err());
        assert!("1,,2".parse::<Permutation>().is_err());
        assert_eq!(p(""), Permutation::empty());
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("4132").complement(), p("1423"));
        assert_eq!(p("4132").reverse(), p("2314"));
        assert_eq!(p("4132").reverse_complement(), p("4132").complement().reverse());
        assert_eq!(Permutation::identity(5).complement(), Permutation::decreasing(5));
    }

    #[test]
    fn direct_sums() {
        assert_eq!(p("3412").direct_sum(&p("321")), p("3412765"));
        let parts = [p("21"), p("1"), p("312"), p("1")];
        assert_eq!(Permutation::direct_sum_all(&parts), p("2136457"));
        assert_eq!(Permutation::empty().direct_sum(&p("231")), p("231"));
        assert_eq!(p("231").direct_sum(&Permutation::empty()), p("231"));
    }

    #[test]
    fn irreducible_blocks() {
        assert_eq!(
            p("2136457").decompose_irreducible(),
            vec![p("21"), p("1"), p("312"), p("1")]
        );
        assert_eq!(p("4123").decompose_irreducible(), vec![p("4123")]);
        assert_eq!(p("1234").decompose_irreducible(), vec![p("1"); 4]);
        assert!(Permutation::empty().decompose_irreducible().is_empty());
        assert!(p("4123").is_irreducible());
        assert!(!p("132").is_irreducible());
        assert!(p("1").is_irreducible());
        assert!(!Permutation::empty().is_irreducible());
    }

    #[test]
    fn fixed_shape() {
        assert!(p("2143").is_theta_fixed_shape());
        assert!(p("1234").is_theta_fixed_shape());
        assert!(!p("321").is_theta_fixed_shape());
        assert!(!p("3412").is_theta_fixed_shape());
        assert!(Permutation::empty().is_theta_fixed_shape());
    }

    #[test]
    fn maxima() {
        assert_eq!(p("352146897").left_to_right_maxima(), vec![3, 5, 6, 8, 9]);
    }
}
