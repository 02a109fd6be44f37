//! Brute-force oracles written independently of the library: cycle
//! following on plain vectors, cubic-time containment, and itertools
//! for the permutations themselves.

#![allow(dead_code)]

use itertools::Itertools;

pub type Word = Vec<u8>;

pub fn all_perms(n: usize) -> impl Iterator<Item = Word> {
    (1..=n as u8).permutations(n)
}

/// Standard cycle form read without parentheses.
pub fn theta(p: &[u8]) -> Word {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut cycles: Vec<Word> = Vec::new();
    for m in (1..=n as u8).rev() {
        if seen[m as usize] {
            continue;
        }
        let mut cycle = vec![m];
        seen[m as usize] = true;
        let mut x = p[m as usize - 1];
        while x != m {
            cycle.push(x);
            seen[x as usize] = true;
            x = p[x as usize - 1];
        }
        cycles.push(cycle);
    }
    cycles.sort_by_key(|c| c[0]);
    cycles.concat()
}

pub fn theta_pow(p: &[u8], k: u64) -> Word {
    let mut q = p.to_vec();
    for _ in 0..k {
        q = theta(&q);
    }
    q
}

/// Containment of a pattern of any length by checking every subsequence.
pub fn contains(w: &[u8], sigma: &[u8]) -> bool {
    let k = sigma.len();
    (0..w.len()).combinations(k).any(|idx| {
        (0..k).all(|a| (0..k).all(|b| (w[idx[a]] < w[idx[b]]) == (sigma[a] < sigma[b])))
    })
}

pub fn irreducible(w: &[u8]) -> bool {
    let mut max = 0;
    for (i, &v) in w.iter().enumerate() {
        max = max.max(v as usize);
        if max == i + 1 && i + 1 < w.len() {
            return false;
        }
    }
    !w.is_empty()
}

pub fn direct_sum(a: &[u8], b: &[u8]) -> Word {
    let shift = a.len() as u8;
    a.iter().copied().chain(b.iter().map(|v| v + shift)).collect()
}

pub fn word(s: &str) -> Word {
    s.bytes().map(|b| b - b'0').collect()
}

/// `F_0 = 0, F_1 = 1`.
pub fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Coefficients `c_0..=c_order` of `1 / den(x)` for `den(0) = 1`.
pub fn reciprocal(den: &[i64], order: usize) -> Vec<i64> {
    assert_eq!(den[0], 1);
    let mut c = vec![0i64; order + 1];
    c[0] = 1;
    for n in 1..=order {
        c[n] = -(1..den.len().min(n + 1)).map(|j| den[j] * c[n - j]).sum::<i64>();
    }
    c
}

/// `t_n^k(σ)` by brute force.
pub fn t_count(n: usize, sigma: &[u8], k: u64) -> u64 {
    all_perms(n)
        .filter(|p| {
            let mut q = p.clone();
            for j in 0..=k {
                if contains(&q, sigma) {
                    return false;
                }
                if j < k {
                    q = theta(&q);
                }
            }
            true
        })
        .count() as u64
}

/// `f_n^k(σ)` by brute force; `None` means all of `S_n`.
pub fn f_count(n: usize, sigma: Option<&[u8]>, k: u64) -> u64 {
    all_perms(n)
        .filter(|p| sigma.is_none_or(|s| !contains(p, s)))
        .filter(|p| theta_pow(p, k) == *p)
        .count() as u64
}
