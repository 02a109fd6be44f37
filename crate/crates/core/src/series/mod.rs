//! Truncated formal power series with exact rational coefficients, and the
//! generating functions and closed forms built from them.
//!
//! A series of order `N` carries the coefficients of `x^0..=x^N`. Binary
//! operations truncate to the smaller order; nothing is ever rounded.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

mod formula;
mod gf;
mod numbers;

pub use formula::{
    formula_eval, witness_lower_bound, Family, FormulaError, FormulaResult, Status, CONSTANTS_132, CONSTANTS_213,
    CONSTANTS_FROM, T132_TABLE_FROM,
};
pub use gf::{catalan_series, gf_coeffs, rational_gf_coeffs, t321_via_irreducible, Gf};
pub use numbers::{binom, catalan, fib};
pub(crate) use numbers::catalan_u128;

/// Truncation order used when callers do not pick one.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("numerator valuation {numerator} is below denominator valuation {denominator}")]
    Valuation { numerator: usize, denominator: usize },
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("coefficient of x^{index} is not an integer: {value}")]
    NonInteger { index: usize, value: String },
    #[error("recurrence needs a nonzero constant term in the denominator")]
    ZeroConstantTerm,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Series {
    /// A series from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        Series { coeffs }
    }

    /// Integer coefficients, padded with zeros or truncated to `order`.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series {
            coeffs: (0..=order)
                .map(|i| rat(coeffs.get(i).copied().unwrap_or(0)))
                .collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_ints(&[], order)
    }

    pub fn one(order: usize) -> Self {
        Series::from_ints(&[1], order)
    }

    /// `c · x^degree`.
    pub fn monomial(c: i64, degree: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if degree <= order {
            s.coeffs[degree] = rat(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Same coefficients with known zeros appended up to `order`.
    fn extend_zero(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(self.order()) + 1, BigRational::zero());
        Series { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Series {
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|i| if i >= k { self.coeffs[i - k].clone() } else { BigRational::zero() })
            .collect();
        Series { coeffs }
    }

    /// Divides by `x^k` when the first `k` coefficients vanish; the order drops by `k`.
    fn shift_down(&self, k: usize) -> Series {
        debug_assert!(self.coeffs[..k].iter().all(Zero::is_zero));
        Series {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// `a(x^d)` truncated to the same order.
    pub fn substitute_power(&self, d: usize) -> Series {
        assert!(d >= 1);
        let mut out = Series::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * d > self.order() {
                break;
            }
            out.coeffs[i * d] = c.clone();
        }
        out
    }

    /// Multiplicative inverse by Newton iteration, `g ← g (2 - b g)`.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        let target = self.coeffs.len();
        let mut g = Series::new(vec![c0.recip()]);
        let mut len = 1;
        while len < target {
            len = (2 * len).min(target);
            let b = self.truncate(len - 1);
            let g_ext = g.extend_zero(len - 1);
            let two = Series::from_ints(&[2], len - 1);
            g = &g_ext * &(&two - &(&b * &g_ext));
        }
        Ok(g)
    }

    /// `a / b`. A common power of `x` is cancelled first, which costs that
    /// many orders of precision.
    pub fn div(&self, b: &Series) -> Result<Series, SeriesError> {
        let db = b.valuation().ok_or(SeriesError::DivisionByZero)?;
        let order = self.order().min(b.order());
        let a = self.truncate(order);
        let b = b.truncate(order);
        if db > order {
            return Err(SeriesError::DivisionByZero);
        }
        let da = a.valuation().unwrap_or(order + 1);
        if da < db {
            return Err(SeriesError::Valuation {
                numerator: da,
                denominator: db,
            });
        }
        let a = a.shift_down(db);
        let b = b.shift_down(db);
        Ok(&a * &b.inverse()?)
    }

    /// Square root with constant term 1, by Newton iteration `s ← (s + a/s) / 2`.
    pub fn sqrt(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm);
        }
        let target = self.coeffs.len();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s = Series::one(0);
        let mut len = 1;
        while len < target {
            len = (2 * len).min(target);
            let a = self.truncate(len - 1);
            let s_ext = s.extend_zero(len - 1);
            s = (&s_ext + &a.div(&s_ext)?).scale(&half);
        }
        Ok(s)
    }

    /// Exact integer coefficients, or the first non-integer found.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NonInteger {
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Integer coefficients as `i64`; panics on overflow.
    pub fn to_i64s(&self) -> Result<Vec<i64>, SeriesError> {
        Ok(self
            .to_integers()?
            .iter()
            .map(|c| c.to_i64().expect("coefficient fits in i64"))
            .collect())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Human form such as `1 - 2x^2 + O(x^5)`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }
}

pub fn series_mul(a: &Series, b: &Series) -> Series {
    a * b
}

pub fn series_div(a: &Series, b: &Series) -> Result<Series, SeriesError> {
    a.div(b)
}

pub fn series_sqrt(a: &Series) -> Result<Series, SeriesError> {
    a.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.to_i64s().unwrap()
    }

    #[test]
    fn division_examples() {
        let x = Series::monomial(1, 1, 6);
        let fib_den = Series::from_ints(&[1, -1, -1], 6);
        assert_eq!(ints(&x.div(&fib_den).unwrap()), [0, 1, 1, 2, 3, 5, 8]);
        let one_minus_x = Series::from_ints(&[1, -1], 6);
        let sq = &one_minus_x * &one_minus_x;
        assert_eq!(ints(&x.truncate(5).div(&sq).unwrap()), [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn division_errors() {
        let a = Series::from_ints(&[1, 1], 4);
        assert_eq!(a.div(&Series::zero(4)), Err(SeriesError::DivisionByZero));
        let b = Series::from_ints(&[0, 1], 4);
        assert_eq!(
            a.div(&b),
            Err(SeriesError::Valuation {
                numerator: 0,
                denominator: 1
            })
        );
        // Cancelling x costs one order.
        let c = Series::from_ints(&[0, 2, 2], 4);
        assert_eq!(ints(&c.div(&b).unwrap()), [2, 2, 0, 0]);
    }

    #[test]
    fn sqrt_examples() {
        let kernel = Series::from_ints(&[1, 0, -4], 6);
        assert_eq!(ints(&kernel.sqrt().unwrap()), [1, 0, -2, 0, -2, 0, -4]);
        assert_eq!(ints(&Series::one(5).sqrt().unwrap()), [1, 0, 0, 0, 0, 0]);
        let sq = Series::from_ints(&[1, 2, 1], 5);
        assert_eq!(ints(&sq.sqrt().unwrap()), [1, 1, 0, 0, 0, 0]);
        assert_eq!(
            Series::from_ints(&[4, 1], 3).sqrt(),
            Err(SeriesError::SqrtConstantTerm)
        );
    }

    #[test]
    fn non_integer_detected() {
        let half = Series::from_ints(&[1, 1], 2).sqrt().unwrap();
        assert!(matches!(
            half.to_integers(),
            Err(SeriesError::NonInteger { index: 1, .. })
        ));
    }

    #[test]
    fn display() {
        let s = Series::from_ints(&[1, 0, -2, 3], 4);
        assert_eq!(s.to_string(), "1 - 2x^2 + 3x^3 + O(x^5)");
        assert_eq!(Series::zero(1).to_string(), "0 + O(x^2)");
    }

    #[test]
    fn substitution() {
        let c = catalan_series(6);
        assert_eq!(ints(&c.substitute_power(2)), [1, 0, 1, 0, 2, 0, 5]);
    }
}
