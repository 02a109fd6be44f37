//! Generating functions for the counting sequences, assembled from series
//! primitives.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Series, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gf {
    /// `x / (1 - x - x²)²`.
    T132,
    /// `2x² / (2x(1-x) - 1 + √(1-4x²))`.
    T321,
    /// Irreducible members of `T_n(321)`: `(x - x³c(x²)) / (1 - x - x²c(x²))`.
    A321,
    /// `θ²`-fixed avoiders of 231 (equivalently 312): `1 / (1 - x - x² - x⁴)`.
    F2_2313,
    /// Conjectured `1 / (1 - x - x² - 2x³)`.
    F3Conj,
    /// Conjectured `1 / (1 - x - x² - 2x⁴ - x⁵ - x⁶)`.
    F4Conj,
    /// Conjectured `1 / (1 - x - x²)`.
    F5Conj,
    /// `(2x⁵ + 9x⁴ - 8x³ - 10x² + 13x - 4) / ((x-1)³(1-x-x²))`, valid from `x²` on.
    T213,
}

impl Gf {
    pub const ALL: [Gf; 8] = [
        Gf::T132,
        Gf::T321,
        Gf::A321,
        Gf::F2_2313,
        Gf::F3Conj,
        Gf::F4Conj,
        Gf::F5Conj,
        Gf::T213,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Gf::T132 => "t132",
            Gf::T321 => "t321",
            Gf::A321 => "a321",
            Gf::F2_2313 => "f2",
            Gf::F3Conj => "f3",
            Gf::F4Conj => "f4",
            Gf::F5Conj => "f5",
            Gf::T213 => "t213",
        }
    }

    pub fn is_conjectured(self) -> bool {
        matches!(self, Gf::F3Conj | Gf::F4Conj | Gf::F5Conj)
    }

    /// Numerator and denominator for the rational ones.
    pub fn rational_parts(self) -> Option<(Vec<i64>, Vec<i64>)> {
        let fib_den = [1, -1, -1];
        Some(match self {
            Gf::T132 => (vec![0, 1], poly_mul(&fib_den, &fib_den)),
            Gf::F2_2313 => (vec![1], vec![1, -1, -1, 0, -1]),
            Gf::F3Conj => (vec![1], vec![1, -1, -1, -2]),
            Gf::F4Conj => (vec![1], vec![1, -1, -1, 0, -2, -1, -1]),
            Gf::F5Conj => (vec![1], fib_den.to_vec()),
            Gf::T213 => (
                vec![-4, 13, -10, -8, 9, 2],
                poly_mul(&[-1, 3, -3, 1], &fib_den),
            ),
            Gf::T321 | Gf::A321 => return None,
        })
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gf {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Gf::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown generating function {s:?}"))
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `Σ C_n xⁿ` up to `order`.
pub fn catalan_series(order: usize) -> Series {
    let mut c = BigInt::from(1);
    let mut coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order {
        coeffs.push(BigRational::from_integer(c.clone()));
        c = c * (2 * (2 * j + 1)) / (j + 2);
    }
    Series::new(coeffs)
}

/// `num / den` by unrolling the recurrence `Σ den_j a_{n-j} = num_n`.
pub fn rational_gf_coeffs(num: &Series, den: &Series, order: usize) -> Result<Series, SeriesError> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let zero = BigRational::zero();
    let at = |s: &Series, i: usize| if i <= s.order() { s.coeff(i).clone() } else { zero.clone() };
    let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = at(num, n);
        for j in 1..=n.min(den.order()) {
            acc -= den.coeff(j) * &out[n - j];
        }
        out.push(acc / d0);
    }
    Ok(Series::new(out))
}

/// `A(x)`, the irreducible part of `T_321`.
fn a321(order: usize) -> Result<Series, SeriesError> {
    let cx2 = catalan_series(order).substitute_power(2);
    let x = Series::monomial(1, 1, order);
    let num = &x - &cx2.shift_up(3);
    let den = &(&Series::one(order) - &x) - &cx2.shift_up(2);
    num.div(&den)
}

/// `T_321` assembled as `A / (1 - A)`.
pub fn t321_via_irreducible(order: usize) -> Result<Series, SeriesError> {
    let a = a321(order)?;
    integral(a.div(&(&Series::one(order) - &a))?)
}

fn t321_closed(order: usize) -> Result<Series, SeriesError> {
    // The denominator starts at x, so one extra order is spent on cancelling it.
    let work = order + 1;
    let root = Series::from_ints(&[1, 0, -4], work).sqrt()?;
    let den = &Series::from_ints(&[-1, 2, -2], work) + &root;
    let t = Series::monomial(2, 2, work).div(&den)?;
    integral(t.truncate(order))
}

fn integral(s: Series) -> Result<Series, SeriesError> {
    s.to_integers()?;
    Ok(s)
}

/// Exact coefficients of `which` up to `x^order`; every coefficient is
/// checked to be an integer.
pub fn gf_coeffs(which: Gf, order: usize) -> Result<Series, SeriesError> {
    match which {
        Gf::T321 => t321_closed(order),
        Gf::A321 => integral(a321(order)?),
        _ => {
            let (num, den) = which.rational_parts().expect("rational");
            let num = Series::from_ints(&num, order);
            let den = Series::from_ints(&den, order);
            integral(rational_gf_coeffs(&num, &den, order)?)
        }
    }
}
