//! Cycle form, θ, its inverse and powers for one permutation.
//!
//! `cargo run --example theta_basics -- [perm]`

use thetalab::Permutation;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "413526987".into());
    let pi: Permutation = arg.parse().unwrap_or_else(|e| panic!("{e}"));

    let form = pi.standard_cycle_form();
    println!("pi            {pi}");
    println!("cycle form    {form}");
    println!("theta(pi)     {}", pi.theta());
    println!("theta^-1(pi)  {}", pi.theta_inverse());
    for k in 2..=4 {
        println!("theta^{k}(pi)   {}", pi.theta_power(k));
    }
    println!("cyclic        {}", pi.is_cyclic());
    match pi.orbit_length() {
        Ok(len) => println!("orbit length  {len}"),
        Err(e) => println!("orbit length  {e}"),
    }

    // θ⁻¹ cuts before each left-to-right maximum.
    let image = pi.theta();
    println!("ltr maxima of theta(pi): {:?}", image.left_to_right_maxima());

    let parts = pi.decompose_irreducible();
    let shown: Vec<String> = parts.iter().map(ToString::to_string).collect();
    println!("irreducible blocks: {}", shown.join(" + "));
}
