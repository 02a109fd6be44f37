//! Fibonacci, binomial and Catalan numbers.
//!
//! Fibonacci indexing is `F_0 = 0, F_1 = F_2 = 1`.

pub fn fib(n: u32) -> u64 {
    assert!(n <= 93, "F_{n} overflows u64");
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a.wrapping_add(b));
    }
    a
}

/// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

pub fn catalan(n: usize) -> u64 {
    u64::try_from(catalan_u128(n)).expect("Catalan number overflows u64")
}

pub(crate) fn catalan_u128(n: usize) -> u128 {
    let mut c: u128 = 1;
    for j in 0..n as u128 {
        c = c * 2 * (2 * j + 1) / (j + 2);
    }
    c
}
