//! Structural conclusions of the lemmas behind the closed forms, as
//! predicates on single permutations.
//!
//! Each predicate only makes a claim about permutations in the class its
//! lemma speaks about; [`StructuralLemma::in_class`] is the matching filter.

use std::fmt;
use std::str::FromStr;

use crate::patterns::{avoids, Pattern};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructuralLemma {
    /// In `T_n(132)`, `n` sits at position 1, `n - 1` or `n` of `θ(π)`.
    PosOfN132,
    /// In `T_n(213)`, one non-trivial cycle on `{n} ∪ [r, s]`, the rest fixed.
    FixedInterval213,
    /// Irreducible members of `T_n(321)` end in `n, π_n` or `n, i` with `π_i = n`.
    IrredEnd321,
    /// `θ²`-fixed with `π_n ≠ n`: `π_j = n ⇒ π_{j+1} = j` and `π_{n-1} = π_n + 1`.
    Order2Shape,
}

impl StructuralLemma {
    pub const ALL: [StructuralLemma; 4] = [
        StructuralLemma::PosOfN132,
        StructuralLemma::FixedInterval213,
        StructuralLemma::IrredEnd321,
        StructuralLemma::Order2Shape,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructuralLemma::PosOfN132 => "pos_of_n_132",
            StructuralLemma::FixedInterval213 => "fixed_interval_213",
            StructuralLemma::IrredEnd321 => "irred_end_321",
            StructuralLemma::Order2Shape => "order2_shape",
        }
    }

    /// The pattern whose `T_n` class the lemma describes, if any.
    pub fn pattern(self) -> Option<Pattern> {
        let s = match self {
            StructuralLemma::PosOfN132 => "132",
            StructuralLemma::FixedInterval213 => "213",
            StructuralLemma::IrredEnd321 => "321",
            StructuralLemma::Order2Shape => return None,
        };
        Some(s.parse().expect("pattern"))
    }

    /// Whether `π` belongs to the class the lemma speaks about.
    pub fn in_class(self, pi: &Permutation) -> bool {
        let n = pi.len();
        match self.pattern() {
            Some(sigma) => {
                let in_t = avoids(pi.values(), &sigma) && avoids(pi.theta().values(), &sigma);
                match self {
                    StructuralLemma::IrredEnd321 => in_t && n >= 2 && pi.is_irreducible(),
                    _ => in_t,
                }
            }
            None => n >= 3 && pi.at(n) != n && pi.theta_power(2) == *pi,
        }
    }

    pub fn holds(self, pi: &Permutation) -> bool {
        structural_check(pi, self)
    }
}

impl fmt::Display for StructuralLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructuralLemma {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StructuralLemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown structural check {s:?}"))
    }
}

/// True iff `π` satisfies the named structural conclusion.
pub fn structural_check(pi: &Permutation, which: StructuralLemma) -> bool {
    let n = pi.len();
    match which {
        StructuralLemma::PosOfN132 => {
            let image = pi.theta();
            match image.values().iter().position(|&v| v as usize == n) {
                Some(i) => {
                    let pos = i + 1;
                    pos == 1 || pos + 1 == n || pos == n
                }
                None => true,
            }
        }
        StructuralLemma::FixedInterval213 => {
            let form = pi.standard_cycle_form();
            let mut moving = form.cycles().iter().filter(|c| c.len() > 1);
            let Some(cycle) = moving.next() else {
                return true;
            };
            if moving.next().is_some() {
                return false;
            }
            let mut rest: Vec<u8> = cycle.iter().copied().filter(|&v| v as usize != n).collect();
            rest.sort_unstable();
            rest.windows(2).all(|w| w[1] == w[0] + 1)
        }
        StructuralLemma::IrredEnd321 => {
            if n < 2 {
                return true;
            }
            if pi.at(n - 1) == n {
                return true;
            }
            let i = pi.at(n);
            pi.at(i) == n && n.div_ceil(2) <= i && i + 2 <= n
        }
        StructuralLemma::Order2Shape => {
            if n < 3 || pi.at(n) == n {
                return true;
            }
            let j = pi.values().iter().position(|&v| v as usize == n).expect("n present") + 1;
            let r = pi.at(n);
            j < n && pi.at(j + 1) == j && pi.at(n - 1) == r + 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn named_examples() {
        assert!(structural_check(&p("3421"), StructuralLemma::Order2Shape));
        assert!(structural_check(&p("4132"), StructuralLemma::Order2Shape));
        assert!(structural_check(&Permutation::identity(5), StructuralLemma::FixedInterval213));
        assert!(!structural_check(&p("2143"), StructuralLemma::FixedInterval213));
        assert!(structural_check(&p("3412"), StructuralLemma::IrredEnd321));
        assert!(!structural_check(&p("312"), StructuralLemma::IrredEnd321));
    }

    #[test]
    fn class_filters() {
        assert!(StructuralLemma::Order2Shape.in_class(&p("3421")));
        assert!(!StructuralLemma::Order2Shape.in_class(&p("2134")));
        assert!(StructuralLemma::IrredEnd321.in_class(&p("21")));
        assert!(!StructuralLemma::IrredEnd321.in_class(&p("12")));
    }

    #[test]
    fn names_round_trip() {
        for lemma in StructuralLemma::ALL {
            assert_eq!(lemma.name().parse::<StructuralLemma>(), Ok(lemma));
        }
    }
}
