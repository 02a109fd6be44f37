//! `t_n(σ)` for every `σ ∈ S_3` next to the closed forms, plus the first
//! rows of the higher-iterate table for 213.
//!
//! `cargo run --release --example table1_counts -- [n_max]`

use thetalab::enumerate::Engine;
use thetalab::series::{formula_eval, Family};
use thetalab::verify::{emit_table, TableId};
use thetalab::Pattern;

fn main() {
    let n_max: usize = std::env::args().nth(1).map_or(10, |a| a.parse().expect("n_max"));
    let engine = Engine::default();

    println!("{}", emit_table(&engine, TableId::Table1, n_max).expect("table"));

    for sigma in Pattern::s3() {
        let mut agree = 0;
        let mut checked = 0;
        for n in 1..=n_max {
            let value = engine.count_t(n, &sigma, 1).expect("count");
            let claim = formula_eval(Family::T, Some(&sigma), 1, n, None).expect("formula");
            if claim.status != thetalab::series::Status::OutOfRange {
                checked += 1;
                agree += usize::from(claim.value == value as i64);
            }
        }
        println!("{sigma}: formula agrees at {agree}/{checked} points in range");
    }

    println!();
    println!("{}", emit_table(&engine, TableId::Table2, n_max).expect("table"));
}
