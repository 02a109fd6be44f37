//! Counting invariants across the enumerate module.

use thetalab::enumerate::{gen_avoiders, Engine};
use thetalab::series::catalan;
use thetalab::{Pattern, Permutation};

fn s3() -> Vec<Pattern> {
    Pattern::s3()
}

#[test]
fn avoider_streams_have_catalan_size() {
    for sigma in s3() {
        for n in 0..=10 {
            assert_eq!(gen_avoiders(n, &sigma).count() as u64, catalan(n as _), "{sigma}, n = {n}");
        }
    }
}

#[test]
fn iterate_chains_shrink() {
    let engine = Engine::default();
    for sigma in s3() {
        for n in 1..=9 {
            let counts: Vec<u64> = (1..=7).map(|k| engine.count_t(n, &sigma, k).unwrap()).collect();
            assert!(counts.windows(2).all(|w| w[1] <= w[0]), "{sigma}, n = {n}: {counts:?}");
        }
    }
}

#[test]
fn fixed_counts_grow_along_divisors() {
    let engine = Engine::default();
    for n in 1..=9 {
        for i in 1..=12u64 {
            for k in (i..=24).step_by(i as usize) {
                assert!(engine.count_f_all(n, i).unwrap() <= engine.count_f_all(n, k).unwrap(), "n = {n}, {i} | {k}");
            }
        }
    }
}

#[test]
fn census_agrees_with_direct_sweep() {
    let engine = Engine::default();
    for n in 1..=9 {
        for k in [1, 2, 3, 4, 6, 12] {
            assert_eq!(engine.count_f_all(n, k).unwrap(), engine.count_f_all_direct(n, k).unwrap(), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn mirror_patterns_agree() {
    let engine = Engine::default();
    let (a, b): (Pattern, Pattern) = ("231".parse().unwrap(), "312".parse().unwrap());
    for n in 1..=10 {
        assert_eq!(engine.count_t(n, &a, 1).unwrap(), engine.count_t(n, &b, 1).unwrap(), "n = {n}");
    }
}

#[test]
fn orbit_length_is_constant_on_orbits() {
    for n in 1..=7u64 {
        for r in (0..(1..=n).product()).step_by(37) {
            let pi = Permutation::unrank(n as usize, r).unwrap();
            assert_eq!(pi.theta().orbit_length().unwrap(), pi.orbit_length().unwrap());
        }
    }
}

/// `a(n, i) = Σ_{j = ⌈(n-2)/2⌉}^{i-1} a(n-2, j)` for `i <= n - 2`; the
/// position `i = n - 1` is the separate count `a_{n-1}`.
#[test]
fn position_counts_follow_their_recurrence() {
    let engine = Engine::default();
    for n in 8..=11usize {
        let lo = (n - 2).div_ceil(2);
        for i in 1..=n - 2 {
            let rhs: u64 = (lo..i).map(|j| engine.count_a_ni(n - 2, j).unwrap()).sum();
            assert_eq!(engine.count_a_ni(n, i).unwrap(), rhs, "n = {n}, i = {i}");
        }
        assert_eq!(engine.count_a_ni(n, n - 1).unwrap(), engine.count_irreducible_t321(n - 1).unwrap());
    }
}
