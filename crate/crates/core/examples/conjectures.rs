//! The conjecture suite on a small window, followed by the failing points
//! in detail.
//!
//! `cargo run --release --example conjectures -- [n_max] [k_max]`

use thetalab::enumerate::Engine;
use thetalab::series::{formula_eval, Family};
use thetalab::verify::{run_conjecture_suite, SuiteConfig};
use thetalab::Pattern;

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max = args.next().map_or(9, |a| a.parse().expect("n_max"));
    let k_max = args.next().map_or(8, |a| a.parse().expect("k_max"));
    let engine = Engine::default();

    let report = run_conjecture_suite(&engine, &SuiteConfig::new(n_max, k_max));
    println!("{report}");

    // The fourth-power conjecture side by side for both patterns.
    println!("n   f^4(231)  f^4(312)  conjectured");
    for n in 1..=n_max {
        let row: Vec<u64> = ["231", "312"]
            .iter()
            .map(|s| engine.count_f_sigma(n, &s.parse::<Pattern>().unwrap(), 4).expect("count"))
            .collect();
        let sigma: Pattern = "312".parse().unwrap();
        let claim = formula_eval(Family::F, Some(&sigma), 4, n, None).expect("formula");
        println!("{n:<3} {:>8}  {:>8}  {:>11}", row[0], row[1], claim.value);
    }
}
