//! Coefficient dumps of the generating functions, with the rational ones
//! computed twice: by series division and by the denominator recurrence.
//!
//! `cargo run --example generating_functions -- [order]`

use thetalab::series::{gf_coeffs, rational_gf_coeffs, Gf, Series};

fn main() {
    let order: usize = std::env::args().nth(1).map_or(12, |a| a.parse().expect("order"));

    for gf in Gf::ALL {
        let series = gf_coeffs(gf, order).expect("series");
        let tag = if gf.is_conjectured() { " (conjectured)" } else { "" };
        println!("{gf}{tag}: {series}");
        if let Some((num, den)) = gf.rational_parts() {
            let (num, den) = (Series::from_ints(&num, order), Series::from_ints(&den, order));
            let by_division = &num * &den.inverse().expect("unit");
            let by_recurrence = rational_gf_coeffs(&num, &den, order).expect("recurrence");
            assert_eq!(by_division.to_integers().unwrap(), by_recurrence.to_integers().unwrap());
        }
    }

    // The Catalan kernel behind the 321 closed form: sqrt(1 - 4x) = 1 - 2x c(x).
    let kernel = Series::from_ints(&[1, -4], order).sqrt().expect("sqrt");
    println!("sqrt(1-4x) = {kernel}");
}
