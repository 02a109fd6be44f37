//! Orbit structure of θ acting on all of `S_n`, and the counts `f_n^k` it
//! determines.
//!
//! `cargo run --release --example orbit_census -- [n_max]`

use std::time::Instant;

use thetalab::enumerate::Engine;
use thetalab::series::witness_lower_bound;

fn main() {
    let n_max: usize = std::env::args().nth(1).map_or(9, |a| a.parse().expect("n_max"));
    let mut engine = Engine::default();
    engine.parallel_census = true;

    for n in 1..=n_max {
        let start = Instant::now();
        let census = engine.orbit_census(n).expect("census");
        let hist: Vec<String> = census.histogram.iter().map(|(len, c)| format!("{len}:{c}")).collect();
        println!(
            "n = {n:2}  orbits {:>7}  longest {:>4}  f^2 {:>5} (bound {:>5})  [{:.1?}]",
            census.orbit_count(),
            census.longest_orbit(),
            census.fixed_by(2),
            witness_lower_bound(n),
            start.elapsed()
        );
        if n <= 6 {
            println!("        lengths {}", hist.join(" "));
        }
    }
}
