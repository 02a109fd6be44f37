//! Closed forms and conjectured values, each tagged with the range of `n`
//! on which it is actually claimed.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use super::{binom, fib, gf_coeffs, Gf};
use crate::patterns::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `t_n(σ)`.
    T,
    /// `t_n^k(σ)`.
    TK,
    /// `f_n^k(σ)`.
    F,
    /// A lower bound for `f_n²` over all of `S_n`.
    FAllLowerBound,
    /// `a_n(321)`.
    AIrred,
    /// `a(n, i)`.
    ANi,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::T,
        Family::TK,
        Family::F,
        Family::FAllLowerBound,
        Family::AIrred,
        Family::ANi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::T => "t",
            Family::TK => "t_k",
            Family::F => "f",
            Family::FAllLowerBound => "f_all_lower_bound",
            Family::AIrred => "a_irred",
            Family::ANi => "a_ni",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown formula family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Proven,
    Conjectured,
    /// The formula evaluated where nobody claims it holds.
    OutOfRange,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proven => "proven",
            Status::Conjectured => "conjectured",
            Status::OutOfRange => "out_of_range",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: i64,
    pub status: Status,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("no formula for family {family} with sigma {sigma} and k = {k}")]
    Unsupported { family: Family, sigma: String, k: u32 },
    #[error("family a_ni needs a position i")]
    MissingPosition,
    #[error("position i = {i} is outside 1..={n}")]
    BadPosition { i: usize, n: usize },
    #[error("n must be at least 1")]
    ZeroLength,
}

/// Conjectured constants of `f_n^k(213)` and `f_n^k(132)` for `k = 1..=14`.
pub const CONSTANTS_213: [i64; 14] = [2, 4, 7, 9, 2, 9, 8, 9, 8, 7, 2, 16, 2, 10];
pub const CONSTANTS_132: [i64; 14] = [2, 3, 6, 7, 2, 7, 8, 7, 7, 5, 2, 13, 2, 9];
/// From which `n` the constants above are claimed.
pub const CONSTANTS_FROM: usize = 8;

/// Smallest `n` from which each row of the conjectured `t_n^k(132)` table
/// (`k = 3, 4, 5, ≥ 6`) is asserted. The table carries no range of its own;
/// at `n = 2` every `t_2^k` is 2, so the rows for `k >= 4` cannot start there.
pub const T132_TABLE_FROM: [usize; 4] = [4, 4, 4, 4];

struct Claim {
    value: i64,
    from: usize,
    conjectured: bool,
    source: String,
}

impl Claim {
    fn proven(value: i64, from: usize, source: impl Into<String>) -> Self {
        Claim { value, from, conjectured: false, source: source.into() }
    }

    fn conjectured(value: i64, from: usize, source: impl Into<String>) -> Self {
        Claim { value, from, conjectured: true, source: source.into() }
    }

    fn at(self, n: usize) -> FormulaResult {
        let status = match (n >= self.from, self.conjectured) {
            (false, _) => Status::OutOfRange,
            (true, false) => Status::Proven,
            (true, true) => Status::Conjectured,
        };
        FormulaResult { value: self.value, status, source: self.source }
    }
}

fn fib_i(n: usize) -> i64 {
    fib(n as u32) as i64
}

fn binom_i(n: i64, k: i64) -> i64 {
    binom(n, k) as i64
}

fn gf_at(which: Gf, n: usize) -> i64 {
    gf_coeffs(which, n)
        .expect("generating function")
        .coeff(n)
        .to_integer()
        .to_i64()
        .expect("coefficient fits in i64")
}

/// `a_n(321)`, with `a_1 = 1` from the generating function.
fn a_irred_value(n: usize) -> i64 {
    if n == 1 {
        1
    } else {
        binom_i(n as i64 - 2, (n as i64 - 2) / 2)
    }
}

/// Sizes of direct sums of the order-two witnesses `1, 21, 3421, 4132,
/// 637948521, 916823754`: `L_n = L_{n-1} + L_{n-2} + 2L_{n-4} + 2L_{n-9}`.
pub fn witness_lower_bound(n: usize) -> i64 {
    let mut l = vec![1i64];
    for m in 1..=n {
        let get = |j: usize| if m >= j { l[m - j] } else { 0 };
        let v = get(1) + get(2) + 2 * get(4) + 2 * get(9);
        l.push(v);
    }
    l[n]
}

fn t_claim(sigma: &str, n: usize) -> Option<Claim> {
    let ni = n as i64;
    Some(match sigma {
        "123" => Claim::proven(0, 11, "t_n(123) = 0 for n >= 11"),
        "132" => Claim::proven(
            (0..=n + 1).map(|k| fib_i(n + 1 - k) * fib_i(k)).sum(),
            1,
            "t_n(132) = sum_{k=0}^{n+1} F_{n+1-k} F_k for n >= 1",
        ),
        "213" => Claim::proven(
            2 * fib_i(n + 2) + ni * ni - 6 * ni + 4,
            2,
            "t_n(213) = 2F_{n+2} + n^2 - 6n + 4 for n >= 2",
        ),
        "231" | "312" => Claim::proven(1 << (n - 1), 1, format!("t_n({sigma}) = 2^(n-1) for n >= 1")),
        "321" => Claim::proven(
            gf_at(Gf::T321, n),
            1,
            "T_321(x) = 2x^2 / (2x(1-x) - 1 + sqrt(1-4x^2))",
        ),
        _ => return None,
    })
}

fn t132_power2(n: usize) -> i64 {
    let k = (n / 3) as i64;
    match n % 3 {
        0 => k * k * k + 3 * k * k + 2 * k - 1,
        1 => k * k * k + 4 * k * k + 4 * k,
        _ => k * k * k + 5 * k * k + 7 * k + 2,
    }
}

fn tk_claim(sigma: &str, k: u32, n: usize) -> Option<Claim> {
    if k == 1 {
        return t_claim(sigma, n);
    }
    let ni = n as i64;
    Some(match (sigma, k) {
        ("123", _) => Claim::proven(0, 11, "t_n^k(123) <= t_n(123) = 0 for n >= 11"),
        ("231" | "312" | "321", _) => Claim::proven(
            fib_i(n + 1),
            1,
            format!("t_n^k({sigma}) = F_{{n+1}} for n >= 1, k >= 2"),
        ),
        ("213", 2) => Claim::proven(binom_i(ni + 1, 2), 4, "t_n^2(213) = C(n+1, 2) for n >= 4"),
        ("213", 3) => Claim::proven(2 * ni + 1, 4, "t_n^3(213) = 2n + 1 for n >= 4"),
        ("213", 4) => Claim::proven(ni + 4, 5, "t_n^4(213) = n + 4 for n >= 5"),
        ("213", _) => Claim::proven(7, 5, "t_n^k(213) = 7 for n >= 5, k >= 5"),
        ("132", 2) => Claim::conjectured(
            t132_power2(n),
            2,
            "t_n^2(132) piecewise cubic in n mod 3 (conjectured, n >= 2)",
        ),
        ("132", 3) => Claim::conjectured(3 * ni - 4, T132_TABLE_FROM[0], "t_n^3(132) = 3n - 4 (conjectured)"),
        ("132", 4) => Claim::conjectured(2 * ni - 1, T132_TABLE_FROM[1], "t_n^4(132) = 2n - 1 (conjectured)"),
        ("132", 5) => Claim::conjectured(ni + 2, T132_TABLE_FROM[2], "t_n^5(132) = n + 2 (conjectured)"),
        ("132", _) => Claim::conjectured(5, T132_TABLE_FROM[3], "t_n^k(132) = 5 for k >= 6 (conjectured)"),
        _ => return None,
    })
}

fn f_claim(sigma: &str, k: u32, n: usize) -> Option<Claim> {
    let fixed_points = || fib_i(n + 1);
    Some(match (sigma, k) {
        ("231" | "312" | "321", 1) => {
            Claim::proven(fixed_points(), 5, format!("f_n^1({sigma}) = F_{{n+1}} for n >= 5"))
        }
        ("132" | "213", 1) => Claim::proven(2, 5, format!("f_n^1({sigma}) = 2 for n >= 5")),
        ("123", 1) => Claim::proven(0, 5, "f_n^1(123) = 0 for n >= 5"),
        ("231" | "312", 2) => Claim::proven(
            gf_at(Gf::F2_2313, n),
            0,
            format!("F_{sigma}^2(x) = 1 / (1 - x - x^2 - x^4)"),
        ),
        ("321", 2) => Claim::proven(fixed_points(), 2, "f_n^2(321) = F_{n+1} for n >= 2"),
        ("213", 2) => Claim::proven(4, 5, "f_n^2(213) = 4 for n >= 5"),
        ("132", 2) => Claim::proven(3, 5, "f_n^2(132) = 3 for n >= 5"),
        ("123", 2) => Claim::proven(0, 5, "f_n^2(123) = 0 for n >= 5"),
        ("231" | "312", 3) => Claim::conjectured(
            gf_at(Gf::F3Conj, n),
            0,
            format!("F_{sigma}^3(x) = 1 / (1 - x - x^2 - 2x^3) (conjectured)"),
        ),
        ("231" | "312", 4) => Claim::conjectured(
            gf_at(Gf::F4Conj, n),
            0,
            format!("F_{sigma}^4(x) = 1 / (1 - x - x^2 - 2x^4 - x^5 - x^6) (conjectured)"),
        ),
        ("231" | "312", 5) => Claim::conjectured(
            gf_at(Gf::F5Conj, n),
            0,
            format!("F_{sigma}^5(x) = 1 / (1 - x - x^2) (conjectured)"),
        ),
        ("213" | "132", 3..=14) => {
            let row = if sigma == "213" { &CONSTANTS_213 } else { &CONSTANTS_132 };
            Claim::conjectured(
                row[k as usize - 1],
                CONSTANTS_FROM,
                format!("f_n^{k}({sigma}) eventually constant (conjectured, n >= {CONSTANTS_FROM})"),
            )
        }
        _ => return None,
    })
}

fn a_ni_claim(n: usize, i: usize) -> Claim {
    let (ni, ii) = (n as i64, i as i64);
    let top = (ni - 2 + 1) / 2 - 1; // ⌈(n-2)/2⌉ - 1
    let half = n.div_ceil(2);
    if i + 1 == n {
        return Claim::proven(
            if n >= 2 { a_irred_value(n - 1) } else { 0 },
            3,
            "a(n, n-1) = a_{n-1}(321) for n >= 3",
        );
    }
    if i == n || i < half {
        return Claim::proven(0, 2, "irreducible members of T_n(321) end in n pi_n or n i with ceil(n/2) <= i <= n-2");
    }
    if i + 2 == n {
        return Claim::proven(binom_i(ni - 4, top), 6, "a(n, n-2) = C(n-4, ceil((n-2)/2) - 1) for n >= 6");
    }
    Claim::proven(
        binom_i(ii - 2, top),
        6,
        "a(n, i) = C(i-2, ceil((n-2)/2) - 1) for n >= 6, ceil(n/2) <= i < n-2",
    )
}

/// Evaluates the closed form or conjectured value for the family at `n`.
///
/// `k` is the iteration count (ignored by `a_irred`, `a_ni`; must be 1 for
/// `t` and 2 for `f_all_lower_bound`). `i` is only used by `a_ni`.
pub fn formula_eval(
    family: Family,
    sigma: Option<&Pattern>,
    k: u32,
    n: usize,
    i: Option<usize>,
) -> Result<FormulaResult, FormulaError> {
    if n == 0 {
        return Err(FormulaError::ZeroLength);
    }
    let sigma_name = sigma.map(ToString::to_string).unwrap_or_default();
    let unsupported = || FormulaError::Unsupported {
        family,
        sigma: if sigma_name.is_empty() { "-".to_string() } else { sigma_name.clone() },
        k,
    };
    let claim = match family {
        Family::T if k == 1 => t_claim(&sigma_name, n),
        Family::T => None,
        Family::TK if k >= 1 => tk_claim(&sigma_name, k, n),
        Family::TK => None,
        Family::F if k >= 1 => f_claim(&sigma_name, k, n),
        Family::F => None,
        Family::FAllLowerBound if k == 2 && sigma.is_none() => Some(Claim::proven(
            witness_lower_bound(n),
            10,
            "f_n^2 >= f_{n-1}^2 + f_{n-2}^2 + 2f_{n-4}^2 + 2f_{n-9}^2 for n > 9",
        )),
        Family::FAllLowerBound => None,
        Family::AIrred if matches!(sigma_name.as_str(), "" | "321") => Some(Claim::proven(
            a_irred_value(n),
            2,
            "a_n(321) = C(n-2, floor((n-2)/2)) for n >= 2",
        )),
        Family::AIrred => None,
        Family::ANi if matches!(sigma_name.as_str(), "" | "321") => {
            let i = i.ok_or(FormulaError::MissingPosition)?;
            if i == 0 || i > n {
                return Err(FormulaError::BadPosition { i, n });
            }
            Some(a_ni_claim(n, i))
        }
        Family::ANi => None,
    };
    claim.map(|c| c.at(n)).ok_or_else(unsupported)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(family: Family, sigma: &str, k: u32, n: usize) -> FormulaResult {
        let sigma: Option<Pattern> = if sigma.is_empty() { None } else { Some(sigma.parse().unwrap()) };
        formula_eval(family, sigma.as_ref(), k, n, None).unwrap()
    }

    #[test]
    fn documented_examples() {
        let r = eval(Family::T, "231", 1, 5);
        assert_eq!((r.value, r.status), (16, Status::Proven));
        let r = eval(Family::TK, "213", 3, 4);
        assert_eq!((r.value, r.status), (9, Status::Proven));
        let r = eval(Family::F, "132", 2, 7);
        assert_eq!((r.value, r.status), (3, Status::Proven));
    }

    #[test]
    fn thresholds() {
        assert_eq!(eval(Family::T, "123", 1, 10).status, Status::OutOfRange);
        assert_eq!(eval(Family::T, "123", 1, 11).status, Status::Proven);
        assert_eq!(eval(Family::F, "213", 2, 4).status, Status::OutOfRange);
        assert_eq!(eval(Family::F, "213", 9, 8).status, Status::Conjectured);
        assert_eq!(eval(Family::F, "213", 9, 7).status, Status::OutOfRange);
        assert_eq!(eval(Family::F, "312", 3, 6).status, Status::Conjectured);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(eval(Family::T, "213", 1, 2).value, 2);
        assert_eq!(eval(Family::T, "132", 1, 3).value, 5);
        assert_eq!(eval(Family::T, "321", 1, 4).value, 9);
        assert_eq!(eval(Family::TK, "213", 2, 6).value, 21);
        assert_eq!(eval(Family::TK, "321", 2, 6).value, 13);
        assert_eq!(eval(Family::F, "213", 12, 9).value, 16);
        assert_eq!(eval(Family::F, "132", 14, 9).value, 9);
        assert_eq!(eval(Family::AIrred, "", 1, 8).value, 20);
    }

    #[test]
    fn witness_recurrence() {
        let l: Vec<i64> = (1..=11).map(witness_lower_bound).collect();
        assert_eq!(l, [1, 2, 3, 7, 12, 23, 41, 78, 145, 271, 502]);
    }

    #[test]
    fn irreducible_by_position() {
        let r = |n, i| formula_eval(Family::ANi, None, 1, n, Some(i)).unwrap();
        assert_eq!(r(7, 6).value, 6);
        assert_eq!(r(8, 5), FormulaResult {
            value: 3,
            status: Status::Proven,
            source: "a(n, i) = C(i-2, ceil((n-2)/2) - 1) for n >= 6, ceil(n/2) <= i < n-2".into(),
        });
        assert_eq!(r(6, 1).value, 0);
        assert_eq!(r(6, 6).value, 0);
        assert!(formula_eval(Family::ANi, None, 1, 6, None).is_err());
        assert!(formula_eval(Family::ANi, None, 1, 6, Some(7)).is_err());
    }

    #[test]
    fn unsupported_combinations() {
        let p: Pattern = "123".parse().unwrap();
        assert!(formula_eval(Family::F, Some(&p), 3, 8, None).is_err());
        assert!(formula_eval(Family::T, Some(&p), 2, 8, None).is_err());
        assert!(formula_eval(Family::FAllLowerBound, None, 3, 8, None).is_err());
        assert!(formula_eval(Family::T, None, 1, 8, None).is_err());
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>(), Ok(f));
        }
    }
}
