//! Left-to-right generation of pattern avoiders.
//!
//! Words are grown one value at a time, trying unused values in increasing
//! order, and a branch is cut as soon as the newest value completes an
//! occurrence of the pattern. Output is lexicographic and the work is
//! proportional to the number of avoiding prefixes.

use rayon::prelude::*;

use crate::patterns::{contains, contains_on_extension, Pattern};
use crate::perm::{Permutation, MAX_LEN};

/// Resumable depth-first walk over the avoiders that extend a fixed seed.
pub struct AvoiderWalk {
    n: usize,
    pattern: Pattern,
    word: Vec<u8>,
    used: u64,
    /// Smallest value still to try at each depth.
    cursor: Vec<u8>,
    base: usize,
    state: WalkState,
}

#[derive(PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl AvoiderWalk {
    pub fn new(n: usize, pattern: &Pattern) -> Self {
        Self::with_prefix(n, pattern, &[])
    }

    /// Walks only avoiders that begin with `seed`. A seed that is not a
    /// valid prefix, or already contains the pattern, yields nothing.
    pub fn with_prefix(n: usize, pattern: &Pattern, seed: &[u8]) -> Self {
        assert!(n <= MAX_LEN, "length {n} exceeds {MAX_LEN}");
        let mut used = 0u64;
        let mut valid = seed.len() <= n;
        for &v in seed {
            if v == 0 || v as usize > n || used & (1 << (v - 1)) != 0 {
                valid = false;
                break;
            }
            used |= 1 << (v - 1);
        }
        valid = valid && !contains(seed, pattern);
        let mut word = Vec::with_capacity(n);
        word.extend_from_slice(seed);
        AvoiderWalk {
            n,
            pattern: pattern.clone(),
            word,
            used,
            cursor: vec![1; n + 1],
            base: seed.len(),
            state: if valid { WalkState::Fresh } else { WalkState::Done },
        }
    }

    /// The next avoider as a borrowed word.
    pub fn next_word(&mut self) -> Option<&[u8]> {
        match self.state {
            WalkState::Done => return None,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                if self.word.len() == self.n {
                    return Some(&self.word);
                }
            }
            WalkState::Running => {
                // Leave the word yielded last time.
                if self.word.len() == self.base {
                    self.state = WalkState::Done;
                    return None;
                }
                self.pop();
            }
        }
        loop {
            let depth = self.word.len();
            match self.advance(depth) {
                Some(v) => {
                    self.word.push(v);
                    self.used |= 1 << (v - 1);
                    if self.word.len() == self.n {
                        return Some(&self.word);
                    }
                    self.cursor[depth + 1] = 1;
                }
                None => {
                    if depth == self.base {
                        self.state = WalkState::Done;
                        return None;
                    }
                    self.pop();
                }
            }
        }
    }

    fn pop(&mut self) {
        let v = self.word.pop().expect("nonempty below base");
        self.used &= !(1 << (v - 1));
    }

    /// Smallest admissible value at `depth`, consuming the cursor.
    fn advance(&mut self, depth: usize) -> Option<u8> {
        let mut v = self.cursor[depth];
        while v as usize <= self.n {
            let free = self.used & (1 << (v - 1)) == 0;
            if free && !contains_on_extension(&self.word, v, &self.pattern) {
                self.cursor[depth] = v + 1;
                return Some(v);
            }
            v += 1;
        }
        self.cursor[depth] = v;
        None
    }
}

/// Stream of the `σ`-avoiding members of `S_n` in lexicographic order.
pub struct Avoiders(AvoiderWalk);

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.0.next_word().map(Permutation::from_slice_unchecked)
    }
}

pub fn gen_avoiders(n: usize, pattern: &Pattern) -> Avoiders {
    Avoiders(AvoiderWalk::new(n, pattern))
}

/// Seeds that split the avoiders of `S_n` into independent chunks: all
/// ordered pairs of first values.
fn seeds(n: usize) -> Vec<Vec<u8>> {
    if n < 2 {
        return vec![(1..=n as u8).collect()];
    }
    let n = n as u8;
    (1..=n)
        .flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| vec![a, b]))
        .collect()
}

/// Counts avoiders satisfying `keep`, in parallel over prefix chunks.
pub fn count_avoiders_where<F>(n: usize, pattern: &Pattern, keep: F) -> u64
where
    F: Fn(&[u8]) -> bool + Sync,
{
    seeds(n)
        .par_iter()
        .map(|seed| {
            let mut walk = AvoiderWalk::with_prefix(n, pattern, seed);
            let mut count = 0u64;
            while let Some(word) = walk.next_word() {
                if keep(word) {
                    count += 1;
                }
            }
            count
        })
        .sum()
}

/// Runs `visit` on every avoider, in parallel, and folds the per-chunk
/// results with `merge`.
pub fn fold_avoiders<T, V, M>(n: usize, pattern: &Pattern, init: T, visit: V, merge: M) -> T
where
    T: Clone + Send + Sync,
    V: Fn(&mut T, &[u8]) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    seeds(n)
        .par_iter()
        .map(|seed| {
            let mut acc = init.clone();
            let mut walk = AvoiderWalk::with_prefix(n, pattern, seed);
            while let Some(word) = walk.next_word() {
                visit(&mut acc, word);
            }
            acc
        })
        .reduce(|| init.clone(), &merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn small_streams() {
        let got: Vec<String> = gen_avoiders(3, &pat("321")).map(|p| p.to_string()).collect();
        assert_eq!(got, ["123", "132", "213", "231", "312"]);
        assert_eq!(gen_avoiders(4, &pat("123")).count(), 14);
        let one: Vec<Permutation> = gen_avoiders(1, &pat("213")).collect();
        assert_eq!(one, vec![Permutation::identity(1)]);
        assert_eq!(gen_avoiders(0, &pat("213")).count(), 1);
    }

    #[test]
    fn seeded_walks_partition_the_stream() {
        let sigma = pat("132");
        let whole: Vec<Permutation> = gen_avoiders(7, &sigma).collect();
        let mut pieced = Vec::new();
        for seed in seeds(7) {
            let mut walk = AvoiderWalk::with_prefix(7, &sigma, &seed);
            while let Some(w) = walk.next_word() {
                pieced.push(Permutation::from_slice_unchecked(w));
            }
        }
        assert_eq!(whole, pieced);
        assert_eq!(count_avoiders_where(7, &sigma, |_| true), 429);
    }

    #[test]
    fn bad_seed_yields_nothing() {
        let sigma = pat("213");
        assert!(AvoiderWalk::with_prefix(4, &sigma, &[2, 1, 3]).next_word().is_none());
        assert!(AvoiderWalk::with_prefix(4, &sigma, &[5]).next_word().is_none());
        assert!(AvoiderWalk::with_prefix(3, &sigma, &[1, 1]).next_word().is_none());
    }

    #[test]
    fn full_seed_yields_itself() {
        let sigma = pat("321");
        let mut walk = AvoiderWalk::with_prefix(3, &sigma, &[2, 3, 1]);
        assert_eq!(walk.next_word(), Some(&[2u8, 3, 1][..]));
        assert_eq!(walk.next_word(), None);
    }
}
