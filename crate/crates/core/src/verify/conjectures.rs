//! Conjecture-suite checks. A pass means "consistent on the window", and a
//! failure is a counterexample.

use std::collections::BTreeMap;

use super::periodicity::{periodicity_classes, Agreement};
use super::theorems::{against_formula, pat};
use super::{CheckFn, CheckReport, Cost, Ctx, Tally};
use crate::patterns::Pattern;
use crate::series::{formula_eval, Family, CONSTANTS_FROM};

pub(super) const CHECKS: [(&str, CheckFn); 10] = [
    ("conj_t2_132", conj_t2_132),
    ("conj_tk_132", conj_tk_132),
    ("conj_f3_gf", conj_f3_gf),
    ("conj_f4_gf", conj_f4_gf),
    ("conj_f5_gf", conj_f5_gf),
    ("conj_f_constants_213", conj_f_constants_213),
    ("conj_f_constants_132", conj_f_constants_132),
    ("conj_power_of_two", conj_power_of_two),
    ("conj_triple", conj_triple),
    ("conj_periodicity_samples", conj_periodicity_samples),
];

/// Smallest `n` from which `matches` holds through the end of `points`.
fn holds_from(points: &[(usize, bool)]) -> Option<usize> {
    let mut from = None;
    for &(n, ok) in points.iter().rev() {
        if !ok {
            break;
        }
        from = Some(n);
    }
    from
}

fn conj_t2_132(ctx: &Ctx) -> CheckReport {
    let sigma = pat("132");
    let mut tally = Tally::new(
        "conj_t2_132",
        "t_n^2(132) = k^3+3k^2+2k-1 (n=3k), k^3+4k^2+4k (n=3k+1), k^3+5k^2+7k+2 (n=3k+2) for n >= 2",
    );
    for n in ctx.window(&mut tally, 1, Cost::Stream) {
        let Some(actual) = tally.value(n, ctx.engine.count_t(n, &sigma, 2)) else { break };
        against_formula(&mut tally, Family::TK, Some(&sigma), 2, n, None, actual, Some(2));
    }
    tally.finish()
}

fn conj_tk_132(ctx: &Ctx) -> CheckReport {
    let sigma = pat("132");
    let mut tally = Tally::new(
        "conj_tk_132",
        "t_n^3(132) = 3n-4, t_n^4(132) = 2n-1, t_n^5(132) = n+2, t_n^k(132) = 5 for k >= 6",
    );
    let window = ctx.window(&mut tally, 1, Cost::Stream);
    for k in 3..=ctx.cfg.k_max.max(3) as u32 {
        let mut seen = Vec::new();
        for n in window.clone() {
            let Some(actual) = tally.value(n, ctx.engine.count_t(n, &sigma, k)) else { break };
            let f = formula_eval(Family::TK, Some(&sigma), k, n, None).expect("formula");
            seen.push((n, f.value == actual as i64));
            against_formula(&mut tally, Family::TK, Some(&sigma), k, n, None, actual, Some(k as u64));
        }
        if let Some(from) = holds_from(&seen) {
            tally.note(format!("k = {k}: formula holds from n = {from}"));
        }
    }
    tally.finish()
}

fn f_gf(ctx: &Ctx, id: &'static str, claim: &str, k: u32) -> CheckReport {
    let mut tally = Tally::new(id, claim);
    let window = ctx.window(&mut tally, 1, Cost::Stream);
    for sigma in ["231", "312"].map(pat) {
        for n in window.clone() {
            let Some(actual) = tally.value(n, ctx.engine.count_f_sigma(n, &sigma, k as u64)) else { break };
            against_formula(&mut tally, Family::F, Some(&sigma), k, n, None, actual, Some(k as u64));
        }
    }
    tally.finish()
}

fn conj_f3_gf(ctx: &Ctx) -> CheckReport {
    f_gf(ctx, "conj_f3_gf", "F_sigma^3(x) = 1/(1 - x - x^2 - 2x^3) for sigma in {231, 312}", 3)
}

fn conj_f4_gf(ctx: &Ctx) -> CheckReport {
    f_gf(ctx, "conj_f4_gf", "F_sigma^4(x) = 1/(1 - x - x^2 - 2x^4 - x^5 - x^6) for sigma in {231, 312}", 4)
}

fn conj_f5_gf(ctx: &Ctx) -> CheckReport {
    f_gf(ctx, "conj_f5_gf", "F_sigma^5(x) = 1/(1 - x - x^2) for sigma in {231, 312}", 5)
}

/// `f_n^k(σ)` for `n` in `1..=n_top` and `k` in `1..=k_top`, indexed `[n-1][k-1]`.
fn profiles(ctx: &Ctx, tally: &mut Tally, sigma: &Pattern, n_top: usize, k_top: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for n in 1..=n_top {
        match tally.value(n, ctx.engine.f_sigma_profile(n, sigma, k_top)) {
            Some(p) => out.push(p),
            None => break,
        }
    }
    out
}

fn constants(ctx: &Ctx, id: &'static str, sigma: &str) -> CheckReport {
    let sigma = pat(sigma);
    let mut tally = Tally::new(
        id,
        format!("f_n^k({sigma}) is constant for n >= {CONSTANTS_FROM}, k = 1..14, with the tabulated values"),
    );
    let n_top = ctx.cfg.limit(Cost::Stream).min(ctx.cfg.constants_n_max);
    if n_top < ctx.cfg.n_max {
        tally.note(format!("window ends at n = {n_top}"));
    }
    let k_top = ctx.cfg.k_max.min(14);
    let table = profiles(ctx, &mut tally, &sigma, n_top, k_top);
    let mut from = Vec::new();
    for k in 1..=k_top {
        for (idx, row) in table.iter().enumerate() {
            against_formula(&mut tally, Family::F, Some(&sigma), k as u32, idx + 1, None, row[k as usize - 1], Some(k));
        }
        // Smallest n from which the value stays at its last observed level.
        let column: Vec<(usize, bool)> = match table.last() {
            Some(last) => table
                .iter()
                .enumerate()
                .map(|(idx, row)| (idx + 1, row[k as usize - 1] == last[k as usize - 1]))
                .collect(),
            None => Vec::new(),
        };
        if let Some(n0) = holds_from(&column) {
            from.push(format!("{k}:{n0}"));
        }
    }
    if !from.is_empty() {
        tally.note(format!("observed constant from n (k:n) {}", from.join(" ")));
    }
    tally.finish()
}

fn conj_f_constants_213(ctx: &Ctx) -> CheckReport {
    constants(ctx, "conj_f_constants_213", "213")
}

fn conj_f_constants_132(ctx: &Ctx) -> CheckReport {
    constants(ctx, "conj_f_constants_132", "132")
}

fn conj_power_of_two(ctx: &Ctx) -> CheckReport {
    let mut tally = Tally::new("conj_power_of_two", "f_n^{2^i}(sigma) = f_n^{2^j}(sigma) for i, j >= 2");
    let n_top = ctx.cfg.limit(Cost::Stream);
    for sigma in Pattern::s3() {
        for (idx, row) in profiles(ctx, &mut tally, &sigma, n_top, 64).iter().enumerate() {
            for k in [8u64, 16, 32, 64] {
                tally.equal(idx + 1, Some(k), row[3] as i64, row[k as usize - 1] as i64);
            }
        }
    }
    tally.note("each f^{2^i}, 2^i <= 64, compared with f^4");
    tally.finish()
}

/// Read as a statement about whole sequences: `f^i ≡ f^1` over the window iff
/// `f^{3i} ≡ f^3` over the window. Read pointwise in `n` it fails already at
/// `i = 3`, wherever an orbit of length 3 is present; that count is noted.
fn conj_triple(ctx: &Ctx) -> CheckReport {
    let mut tally = Tally::new(
        "conj_triple",
        "f_n^i(sigma) = f_n^1(sigma) for all n iff f_n^{3i}(sigma) = f_n^3(sigma) for all n",
    );
    let n_top = ctx.cfg.limit(Cost::Stream);
    let k_top = ctx.cfg.k_max.max(1);
    let mut pointwise = Vec::new();
    for sigma in Pattern::s3() {
        let table = profiles(ctx, &mut tally, &sigma, n_top, 3 * k_top);
        let n_seen = table.len();
        if n_seen == 0 {
            continue;
        }
        let all = |a: u64, b: u64| table.iter().all(|row| row[a as usize - 1] == row[b as usize - 1]);
        for i in 1..=k_top {
            let lhs = all(i, 1);
            let rhs = all(3 * i, 3);
            tally.check(n_seen, Some(i), i64::from(lhs), i64::from(rhs), lhs == rhs);
            for (idx, row) in table.iter().enumerate() {
                let l = row[i as usize - 1] == row[0];
                let r = row[3 * i as usize - 1] == row[2];
                if l != r {
                    pointwise.push(format!("{sigma}:n={},i={i}", idx + 1));
                }
            }
        }
    }
    tally.widen(1);
    tally.note("expected/actual are the truth values of the two sides over the whole window");
    if let Some(first) = pointwise.first() {
        tally.note(format!(
            "pointwise in n the equivalence fails at {} (n, i) points, first {first}",
            pointwise.len()
        ));
    }
    tally.finish()
}

fn conj_periodicity_samples(ctx: &Ctx) -> CheckReport {
    let k_top = ctx.cfg.periodicity_k_max;
    let mut tally = Tally::new(
        "conj_periodicity_samples",
        "f_n^k(sigma) agrees within each listed sample class of k (e.g. 1, 5, 11, 13, ...) for every n",
    );
    let n_top = ctx.cfg.limit(Cost::Stream);
    let mut verdicts: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for sigma in Pattern::s3() {
        let Some(classes) = tally.value(n_top, periodicity_classes(ctx.engine, Some(&sigma), n_top, k_top)) else {
            continue;
        };
        for s in &classes.samples {
            let together = s.agreement != Agreement::Split;
            tally.check(n_top, Some(s.sample[0]), 1, i64::from(together), together);
            verdicts.entry(sigma.to_string()).or_default().push(format!("{}:{}", s.sample[0], s.agreement));
        }
    }
    tally.widen(1);
    for (sigma, v) in verdicts {
        tally.note(format!("{sigma} (n <= {n_top}, k <= {k_top}): {}", v.join(" ")));
    }
    tally.note("k column holds the first member of the sample class");
    tally.finish()
}
