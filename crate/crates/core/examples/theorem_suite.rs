//! Runs the theorem and conjecture suites and prints the reports.
//!
//! `cargo run --release --example theorem_suite -- [n_max] [k_max]`

use std::time::Instant;

use thetalab::enumerate::Engine;
use thetalab::verify::{run_conjecture_suite, run_theorem_suite, SuiteConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max = args.next().map_or(10, |a| a.parse().expect("n_max"));
    let k_max = args.next().map_or(14, |a| a.parse().expect("k_max"));
    let cfg = SuiteConfig::new(n_max, k_max);
    let mut engine = Engine::default();
    engine.parallel_census = true;

    let start = Instant::now();
    let theorems = run_theorem_suite(&engine, &cfg);
    println!("{theorems}\n({:.1?})\n", start.elapsed());

    let start = Instant::now();
    let conjectures = run_conjecture_suite(&engine, &cfg);
    println!("{conjectures}\n({:.1?})", start.elapsed());
}
