//! Lexicographic rank and unrank via the Lehmer code.

use super::{PermError, Permutation};

/// Largest `n` whose factorial fits in a `u64`.
pub const MAX_RANK_LEN: usize = 20;

pub fn factorial(n: usize) -> u64 {
    assert!(n <= MAX_RANK_LEN, "{n}! overflows u64");
    (1..=n as u64).product()
}

/// Lexicographic rank of a permutation word of length at most 20.
pub fn rank_slice(values: &[u8]) -> u64 {
    let n = values.len();
    let mut unused: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut rank = 0u64;
    for (i, &v) in values.iter().enumerate() {
        let bit = 1u64 << (v - 1);
        let smaller = (unused & (bit - 1)).count_ones() as u64;
        // Mixed radix: digit i has base n - i.
        rank = rank * (n - i) as u64 + smaller;
        unused &= !bit;
    }
    rank
}

/// Writes the permutation of rank `rank` in `S_{out.len()}` into `out`.
pub fn unrank_into(mut rank: u64, out: &mut [u8]) {
    let n = out.len();
    let mut digits = [0u8; MAX_RANK_LEN];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (rank % base) as u8;
        rank /= base;
    }
    let mut unused: u64 = (1u64 << n) - 1;
    for i in 0..n {
        let mut d = digits[i];
        let mut bits = unused;
        while d > 0 {
            bits &= bits - 1;
            d -= 1;
        }
        let v = bits.trailing_zeros() as u8;
        unused &= !(1 << v);
        out[i] = v + 1;
    }
}

/// Advances `values` to its lexicographic successor; false at the last word.
pub fn next_permutation(values: &mut [u8]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

impl Permutation {
    /// Lexicographic rank within `S_n`.
    pub fn rank(&self) -> Result<u64, PermError> {
        if self.len() > MAX_RANK_LEN {
            return Err(PermError::RankTooLarge { n: self.len() });
        }
        Ok(rank_slice(self.values()))
    }

    pub fn unrank(n: usize, rank: u64) -> Result<Permutation, PermError> {
        if n > MAX_RANK_LEN {
            return Err(PermError::RankTooLarge { n });
        }
        let total = factorial(n);
        if rank >= total {
            return Err(PermError::RankOutOfRange {
                n,
                rank,
                factorial: total,
            });
        }
        let mut out = vec![0u8; n];
        unrank_into(rank, &mut out);
        Ok(Permutation::from_vec_unchecked(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(p("123").rank(), Ok(0));
        assert_eq!(p("321").rank(), Ok(5));
        assert_eq!(Permutation::unrank(3, p("231").rank().unwrap()), Ok(p("231")));
        assert_eq!(Permutation::unrank(0, 0), Ok(Permutation::empty()));
        assert_eq!(Permutation::empty().rank(), Ok(0));
        assert!(matches!(
            Permutation::unrank(3, 6),
            Err(PermError::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn lexicographic_walk_matches_rank() {
        let mut word = vec![1, 2, 3, 4, 5, 6];
        let mut expected = 0;
        loop {
            assert_eq!(rank_slice(&word), expected);
            let mut back = vec![0; 6];
            unrank_into(expected, &mut back);
            assert_eq!(back, word);
            expected += 1;
            if !next_permutation(&mut word) {
                break;
            }
        }
        assert_eq!(expected, factorial(6));
    }

    #[test]
    fn largest_rank_fits() {
        let last = Permutation::decreasing(20);
        assert_eq!(last.rank(), Ok(factorial(20) - 1));
        assert_eq!(Permutation::unrank(20, factorial(20) - 1), Ok(last));
    }
}
