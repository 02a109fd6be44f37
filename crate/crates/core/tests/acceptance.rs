//! Acceptance run: ten criteria, one PASS/FAIL line each.
//!
//! Expected values are either restated closed forms and tables, or come from
//! the brute-force oracles in `common`. Criterion 10 concerns conjectures; a
//! failure there is a counterexample and is reported without failing the run
//! unless `THETALAB_STRICT_CONJECTURES` is set.

#![allow(clippy::needless_range_loop)]

mod common;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use common::*;
use thetalab::enumerate::{gen_avoiders, Engine, StructuralLemma};
use thetalab::series::{gf_coeffs, t321_via_irreducible, Gf};
use thetalab::{Pattern, Permutation};

type Criterion = (&'static str, fn(&Engine) -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

/// Counts compared points and keeps the first few mismatches.
#[derive(Default)]
struct Log {
    points: usize,
    mismatches: usize,
    shown: Vec<String>,
}

impl Log {
    fn eq(&mut self, what: impl FnOnce() -> String, expected: i128, actual: i128) {
        self.points += 1;
        if expected != actual {
            self.mismatches += 1;
            if self.shown.len() < 3 {
                self.shown.push(format!("{}: expected {expected}, got {actual}", what()));
            }
        }
    }

    fn truth(&mut self, what: impl FnOnce() -> String, ok: bool) {
        self.eq(what, 1, i128::from(ok));
    }

    fn outcome(self, summary: &str, elapsed: Duration, limit: Option<Duration>) -> Outcome {
        let mut detail = format!("{summary}; {} points", self.points);
        let slow = limit.is_some_and(|l| elapsed > l);
        if slow {
            let _ = write!(detail, "; over the {:?} limit", limit.unwrap());
        }
        if self.mismatches > 0 {
            let _ = write!(detail, "; {} mismatches, first: {}", self.mismatches, self.shown.join(" | "));
        }
        Outcome {
            pass: self.mismatches == 0 && !slow && self.points > 0,
            detail,
        }
    }
}

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

fn perm(w: &[u8]) -> Permutation {
    Permutation::new(w.iter().map(|&v| v as i64)).unwrap()
}

fn engine() -> Engine {
    let mut e = Engine::default();
    e.parallel_census = true;
    e
}

const S3: [&str; 6] = ["123", "132", "213", "231", "312", "321"];

/// `t_n(σ)` rerun outside the library's counting path: the avoider stream is
/// filtered with the oracle θ and containment test.
fn t_rerun(n: usize, sigma: &str) -> u64 {
    let s = word(sigma);
    gen_avoiders(n, &pat(sigma))
        .filter(|p| {
            let w = p.values();
            assert!(!contains(w, &s));
            !contains(&theta(w), &s)
        })
        .count() as u64
}

fn table1_closed_form(sigma: &str, n: usize) -> Option<i128> {
    let n_i = n as i128;
    Some(match sigma {
        "132" => (0..=n + 1).map(|k| (fib(n + 1 - k) * fib(k)) as i128).sum(),
        "213" => 2 * fib(n + 2) as i128 + n_i * n_i - 6 * n_i + 4,
        "231" | "312" => 1i128 << (n - 1),
        "321" => gf_coeffs(Gf::T321, n).unwrap().to_i64s().unwrap()[n] as i128,
        _ => return None,
    })
}

fn c1(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    for sigma in S3 {
        let p = pat(sigma);
        let s = word(sigma);
        for n in 1..=10 {
            let value = engine.count_t(n, &p, 1).unwrap() as i128;
            if n <= 8 {
                log.eq(|| format!("t_{n}({sigma}) vs exhaustive"), t_count(n, &s, 1) as i128, value);
            }
            log.eq(|| format!("t_{n}({sigma}) vs rerun"), t_rerun(n, sigma) as i128, value);
            if n >= 4 {
                if let Some(expected) = table1_closed_form(sigma, n) {
                    log.eq(|| format!("t_{n}({sigma}) vs closed form"), expected, value);
                }
            }
        }
    }
    log.outcome("t_n(sigma), 4 <= n <= 10, six patterns", start.elapsed(), Some(Duration::from_secs(60)))
}

fn c2(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    let p = pat("123");
    for n in [11, 12] {
        log.eq(|| format!("t_{n}(123)"), 0, engine.count_t(n, &p, 1).unwrap() as i128);
        let stream = gen_avoiders(n, &p).count() as u64;
        // The Catalan-bounded stream is what makes this cheap.
        log.eq(|| format!("avoiders of 123 in S_{n}"), (binom(2 * n as u64, n as u64) / (n as u64 + 1)) as i128, stream as i128);
    }
    log.outcome("t_11(123) = t_12(123) = 0", start.elapsed(), Some(Duration::from_secs(5)))
}

fn c3(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    let p = pat("213");
    for k in 1..=6u32 {
        for n in 5..=10usize {
            let n_i = n as i128;
            let expected = match k {
                1 => 2 * fib(n + 2) as i128 + n_i * n_i - 6 * n_i + 4,
                2 => binom(n as u64 + 1, 2) as i128,
                3 => 2 * n_i + 1,
                4 => n_i + 4,
                _ => 7,
            };
            log.eq(|| format!("t_{n}^{k}(213)"), expected, engine.count_t(n, &p, k).unwrap() as i128);
        }
    }
    for n in 1..=7 {
        for k in 1..=3 {
            log.eq(
                || format!("t_{n}^{k}(213) vs exhaustive"),
                t_count(n, &word("213"), k as u64) as i128,
                engine.count_t(n, &p, k).unwrap() as i128,
            );
        }
    }
    log.outcome("t_n^k(213), 5 <= n <= 10, 1 <= k <= 6", start.elapsed(), Some(Duration::from_secs(60)))
}

fn c4(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    for sigma in ["231", "312", "321"] {
        let p = pat(sigma);
        for k in [2u32, 3] {
            for n in 1..=10 {
                log.eq(|| format!("t_{n}^{k}({sigma})"), fib(n + 1) as i128, engine.count_t(n, &p, k).unwrap() as i128);
            }
        }
    }
    log.outcome("t_n^k(sigma) = F_(n+1), sigma in {231,312,321}, k in {2,3}, n <= 10", start.elapsed(), None)
}

fn c5(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    let f2_231 = reciprocal(&[1, -1, -1, 0, -1], 10);
    for n in 1..=10usize {
        for sigma in S3 {
            let p = pat(sigma);
            if n >= 5 {
                let expected = match sigma {
                    "231" | "312" | "321" => fib(n + 1) as i128,
                    "132" | "213" => 2,
                    _ => 0,
                };
                log.eq(|| format!("f_{n}^1({sigma})"), expected, engine.count_f_sigma(n, &p, 1).unwrap() as i128);
                let f2 = match sigma {
                    "213" => Some(4),
                    "132" => Some(3),
                    "123" => Some(0),
                    _ => None,
                };
                if let Some(expected) = f2 {
                    log.eq(|| format!("f_{n}^2({sigma})"), expected, engine.count_f_sigma(n, &p, 2).unwrap() as i128);
                }
            }
            if n <= 7 {
                for k in [1u64, 2] {
                    log.eq(
                        || format!("f_{n}^{k}({sigma}) vs exhaustive"),
                        f_count(n, Some(&word(sigma)), k) as i128,
                        engine.count_f_sigma(n, &p, k).unwrap() as i128,
                    );
                }
            }
        }
        log.eq(|| format!("f_{n}^2(321)"), fib(n + 1) as i128, engine.count_f_sigma(n, &pat("321"), 2).unwrap() as i128);
        for sigma in ["231", "312"] {
            log.eq(|| format!("f_{n}^2({sigma})"), f2_231[n] as i128, engine.count_f_sigma(n, &pat(sigma), 2).unwrap() as i128);
        }
    }
    log.outcome("f^1 cases, f^2(321), F^2 of 231/312, f^2 constants", start.elapsed(), None)
}

const F2_TABLE: [u64; 11] = [1, 2, 3, 7, 12, 23, 41, 78, 145, 271, 502];

fn c6(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    for n in 1..=11 {
        let census = engine.orbit_census(n).unwrap();
        log.eq(|| format!("f_{n}^2 from census"), F2_TABLE[n - 1] as i128, census.fixed_by(2) as i128);
        if n <= 8 {
            log.eq(|| format!("f_{n}^2 vs exhaustive"), f_count(n, None, 2) as i128, census.fixed_by(2) as i128);
        }
    }
    let limit = if rayon::current_num_threads() >= 4 { 180 } else { 600 };
    log.outcome("census f_n^2, 1 <= n <= 11", start.elapsed(), Some(Duration::from_secs(limit)))
}

fn c7(_engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    for w in ["1", "21", "3421", "4132", "637948521", "916823754"] {
        let pi: Permutation = w.parse().unwrap();
        let v = word(w);
        log.truth(|| format!("{w} irreducible"), irreducible(&v) && pi.is_irreducible());
        log.truth(|| format!("{w} theta^2-fixed"), theta_pow(&v, 2) == v && pi.theta_power(2) == pi);
    }
    let f = |n: usize| F2_TABLE[n - 1] as i128;
    for n in [10usize, 11] {
        let bound = f(n - 1) + f(n - 2) + 2 * f(n - 4) + 2 * f(n - 9);
        log.truth(|| format!("f_{n}^2 = {} >= {bound}", f(n)), f(n) >= bound);
    }
    log.outcome("six witnesses; bound at n = 10, 11", start.elapsed(), None)
}

fn c8(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    let closed = gf_coeffs(Gf::T321, 20).unwrap().to_i64s().unwrap();
    let assembled = t321_via_irreducible(20).unwrap().to_i64s().unwrap();
    for n in 0..=20 {
        log.eq(|| format!("T_321 coefficient {n}, closed vs assembled"), closed[n] as i128, assembled[n] as i128);
    }
    for n in 1..=11 {
        log.eq(|| format!("T_321 coefficient {n} vs count"), engine.count_t(n, &pat("321"), 1).unwrap() as i128, closed[n] as i128);
    }
    let t132 = gf_coeffs(Gf::T132, 10).unwrap().to_i64s().unwrap();
    for n in 1..=10 {
        log.eq(|| format!("T_132 coefficient {n} vs count"), engine.count_t(n, &pat("132"), 1).unwrap() as i128, t132[n] as i128);
    }
    let t213 = gf_coeffs(Gf::T213, 12).unwrap().to_i64s().unwrap();
    for n in 2..=12usize {
        let n_i = n as i128;
        log.eq(|| format!("T_213 coefficient {n}"), 2 * fib(n + 2) as i128 + n_i * n_i - 6 * n_i + 4, t213[n] as i128);
    }
    log.outcome("T_321 two ways, T_321/T_132 vs counts, T_213 vs formula", start.elapsed(), None)
}

fn c9(_engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut log = Log::default();
    for n in 0..=8 {
        for w in all_perms(n) {
            let pi = perm(&w);
            let image = pi.theta();
            if image.values() != theta(&w).as_slice() || image.theta_inverse() != pi || pi.theta_inverse().theta() != pi {
                log.truth(|| format!("round trip at {w:?}"), false);
            }
            if n >= 1 && pi.is_irreducible() != image.is_irreducible() {
                log.truth(|| format!("irreducibility at {w:?}"), false);
            }
        }
        log.points += 1;
    }
    for total in 2..=8 {
        for a in 1..total {
            let b = total - a;
            let right: Vec<Word> = all_perms(b).collect();
            for x in all_perms(a) {
                for y in &right {
                    let lhs = theta(&direct_sum(&x, y));
                    let sum = perm(&x).direct_sum(&perm(y));
                    if lhs != direct_sum(&theta(&x), &theta(y)) || sum.theta().values() != lhs.as_slice() {
                        log.truth(|| format!("direct sum {x:?} + {y:?}"), false);
                    }
                }
            }
            log.points += 1;
        }
    }
    for n in 1..=9 {
        let fixed = all_perms(n).filter(|w| perm(w).theta().values() == w.as_slice()).count();
        log.eq(|| format!("theta-fixed in S_{n}"), fib(n + 1) as i128, fixed as i128);
    }
    for lemma in StructuralLemma::ALL {
        let mut members = 0;
        for n in 1..=9 {
            for w in all_perms(n) {
                let pi = perm(&w);
                if lemma.in_class(&pi) {
                    members += 1;
                    if !lemma.holds(&pi) {
                        log.truth(|| format!("{lemma} at {w:?}"), false);
                    }
                }
            }
        }
        log.truth(|| format!("{lemma} class is non-empty"), members > 0);
    }
    log.outcome(
        "round trip and irreducibility n <= 8, direct sums a+b <= 8, fixed points n <= 9, structural filters n <= 9",
        start.elapsed(),
        Some(Duration::from_secs(120)),
    )
}

/// Conjectured values, restated.
fn t132(n: usize, k: u32) -> i128 {
    let n_i = n as i128;
    match k {
        2 => {
            let q = n_i / 3;
            match n % 3 {
                0 => q * q * q + 3 * q * q + 2 * q - 1,
                1 => q * q * q + 4 * q * q + 4 * q,
                _ => q * q * q + 5 * q * q + 7 * q + 2,
            }
        }
        3 => 3 * n_i - 4,
        4 => 2 * n_i - 1,
        5 => n_i + 2,
        _ => 5,
    }
}

const CONST_213: [i128; 14] = [2, 4, 7, 9, 2, 9, 8, 9, 8, 7, 2, 16, 2, 10];
const CONST_132: [i128; 14] = [2, 3, 6, 7, 2, 7, 8, 7, 7, 5, 2, 13, 2, 9];

fn c10(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();

    let mut log = Log::default();
    for k in 2..=8u32 {
        for n in 4..=10 {
            log.eq(|| format!("t_{n}^{k}(132)"), t132(n, k), engine.count_t(n, &pat("132"), k).unwrap() as i128);
        }
    }
    parts.push(("t_n^k(132), 4 <= n <= 10", log));

    let dens: [(u64, &[i64]); 3] = [
        (3, &[1, -1, -1, -2]),
        (4, &[1, -1, -1, 0, -2, -1, -1]),
        (5, &[1, -1, -1]),
    ];
    for (k, den) in dens {
        let mut log = Log::default();
        let c = reciprocal(den, 10);
        for sigma in ["231", "312"] {
            for n in 1..=10 {
                log.eq(|| format!("f_{n}^{k}({sigma})"), c[n] as i128, engine.count_f_sigma(n, &pat(sigma), k).unwrap() as i128);
            }
        }
        parts.push((["", "", "", "F^3 GF", "F^4 GF", "F^5 GF"][k as usize], log));
    }

    let mut log = Log::default();
    for (sigma, table) in [("213", CONST_213), ("132", CONST_132)] {
        for n in [8, 9] {
            let row = engine.f_sigma_profile(n, &pat(sigma), 14).unwrap();
            for k in 1..=14 {
                log.eq(|| format!("f_{n}^{k}({sigma})"), table[k - 1], row[k - 1] as i128);
            }
        }
    }
    parts.push(("constants n = 8, 9, k <= 14", log));

    let mut pass = true;
    let mut detail = Vec::new();
    let mut points = 0;
    for (name, log) in parts {
        points += log.points;
        if log.mismatches == 0 {
            detail.push(format!("{name}: consistent"));
        } else {
            pass = false;
            detail.push(format!("{name}: COUNTEREXAMPLE ({} mismatches, {})", log.mismatches, log.shown.join(" | ")));
        }
    }
    Outcome {
        pass,
        detail: format!("{}; {points} points; {:.1?}", detail.join("; "), start.elapsed()),
    }
}

fn main() {
    // `cargo test` passes harness flags; an explicit filter that is not ours skips.
    let args: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if args.iter().any(|a| !"acceptance".contains(a.as_str())) {
        return;
    }
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }

    let engine = engine();
    let criteria: [Criterion; 10] = [
        ("table 1", c1),
        ("t_n(123) at n = 11, 12", c2),
        ("table 2", c3),
        ("Fibonacci iterates", c4),
        ("fixed-order theorems", c5),
        ("f_n^2 table", c6),
        ("witnesses and bound", c7),
        ("generating functions", c8),
        ("property suites", c9),
        ("conjectures", c10),
    ];
    let mut hard_failures = 0;
    let strict = std::env::var_os("THETALAB_STRICT_CONJECTURES").is_some();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&engine);
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {name} ({:.1?}): {}", i + 1, start.elapsed(), outcome.detail);
        let conjecture = i == 9;
        if !outcome.pass && (!conjecture || strict) {
            hard_failures += 1;
        }
    }
    if hard_failures > 0 {
        eprintln!("{hard_failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
