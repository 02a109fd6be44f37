//! Groups iteration counts `k` by the sequence `(f_n^k(σ))_n` and compares
//! the grouping with the listed sample classes.
//!
//! `cargo run --release --example periodicity -- [n_max] [k_max]`

use thetalab::enumerate::Engine;
use thetalab::verify::periodicity_classes;
use thetalab::Pattern;

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max = args.next().map_or(8, |a| a.parse().expect("n_max"));
    let k_max = args.next().map_or(40, |a| a.parse().expect("k_max"));
    let engine = Engine::default();

    for sigma in Pattern::s3() {
        let classes = periodicity_classes(&engine, Some(&sigma), n_max, k_max).expect("classes");
        println!("{classes}");
    }
    let all = periodicity_classes(&engine, None, n_max.min(9), k_max).expect("classes");
    println!("{all}");
}
