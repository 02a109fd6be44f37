//! Streams the avoiders of a pattern and keeps those whose θ-image avoids it
//! too; the survivors are the set counted by `t_n(σ)`.
//!
//! `cargo run --example avoiders -- [sigma] [n]`

use thetalab::enumerate::gen_avoiders;
use thetalab::patterns::avoids;
use thetalab::Pattern;

fn main() {
    let mut args = std::env::args().skip(1);
    let sigma: Pattern = args.next().as_deref().unwrap_or("231").parse().expect("pattern");
    let n: usize = args.next().map_or(4, |a| a.parse().expect("n"));

    let mut avoiding = 0;
    let mut both = Vec::new();
    for pi in gen_avoiders(n, &sigma) {
        avoiding += 1;
        let image = pi.theta();
        if avoids(image.values(), &sigma) {
            both.push(format!("{pi} -> {image}"));
        }
    }
    println!("{avoiding} permutations of length {n} avoid {sigma}");
    println!("{} of them keep avoiding it under theta:", both.len());
    for line in both {
        println!("  {line}");
    }
}
