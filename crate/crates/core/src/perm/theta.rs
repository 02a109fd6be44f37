//! Standard cycle form and the fundamental bijection.
//!
//! `θ(π)` is the one-line word obtained by writing `π` in standard cycle form
//! (each cycle led by its maximum, cycles sorted by increasing maxima) and
//! erasing the parentheses. The inverse cuts a word before each
//! left-to-right maximum and reads the pieces back as cycles.

use std::fmt;

use super::{PermError, Permutation};

/// Step cap used by [`Permutation::orbit_length`].
pub const DEFAULT_ORBIT_CAP: u64 = 10_000_000;

/// Cycles of a permutation, each starting at its maximum, sorted by maxima.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleForm {
    cycles: Vec<Vec<u8>>,
}

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<u8>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Concatenation of the cycles, which is `θ` of the owner.
    pub fn flatten(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.cycles.concat())
    }

    /// The permutation these cycles describe.
    pub fn to_permutation(&self) -> Permutation {
        let n: usize = self.cycles.iter().map(Vec::len).sum();
        let mut values = vec![0u8; n];
        for cycle in &self.cycles {
            for (i, &a) in cycle.iter().enumerate() {
                values[a as usize - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_vec_unchecked(values)
    }
}

/// Renders as `(3)(5,2,1,4)(6)(8)(9,7)`.
impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Writes `θ(src)` into `dst`.
///
/// Scanning candidate leaders from `n` down, the first unvisited element of
/// each cycle is its maximum, so cycles come out in decreasing order of
/// their maxima and are laid down from the back of `dst`.
pub fn theta_slice(src: &[u8], dst: &mut [u8]) {
    let n = src.len();
    debug_assert_eq!(dst.len(), n);
    let mut visited = 0u64;
    let mut end = n;
    for leader in (1..=n as u8).rev() {
        if visited & (1 << (leader - 1)) != 0 {
            continue;
        }
        let mut len = 0;
        let mut x = leader;
        loop {
            visited |= 1 << (x - 1);
            len += 1;
            x = src[x as usize - 1];
            if x == leader {
                break;
            }
        }
        let start = end - len;
        let mut x = leader;
        for slot in &mut dst[start..end] {
            *slot = x;
            x = src[x as usize - 1];
        }
        end = start;
    }
}

/// Writes `θ⁻¹(src)` into `dst`.
pub fn theta_inverse_slice(src: &[u8], dst: &mut [u8]) {
    let n = src.len();
    debug_assert_eq!(dst.len(), n);
    let mut start = 0;
    while start < n {
        let leader = src[start];
        let mut end = start + 1;
        while end < n && src[end] < leader {
            end += 1;
        }
        for i in start..end {
            let next = if i + 1 < end { src[i + 1] } else { leader };
            dst[src[i] as usize - 1] = next;
        }
        start = end;
    }
}

/// Least `k >= 1` with `θ^k(src) = src`, or `None` once `cap` steps pass.
pub fn orbit_length_slice(src: &[u8], cap: u64) -> Option<u64> {
    let n = src.len();
    let mut cur = src.to_vec();
    let mut next = vec![0u8; n];
    let mut steps = 0u64;
    loop {
        theta_slice(&cur, &mut next);
        steps += 1;
        if next == src {
            return Some(steps);
        }
        if steps >= cap {
            return None;
        }
        std::mem::swap(&mut cur, &mut next);
    }
}

impl Permutation {
    pub fn standard_cycle_form(&self) -> CycleForm {
        let mut visited = vec![false; self.len() + 1];
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        for start in 1..=self.len() {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x as u8);
                x = self.at(x);
            }
            let lead = (0..cycle.len()).max_by_key(|&i| cycle[i]).unwrap_or(0);
            cycle.rotate_left(lead);
            cycles.push(cycle);
        }
        cycles.sort_by_key(|c| c[0]);
        CycleForm { cycles }
    }

    /// The fundamental bijection.
    pub fn theta(&self) -> Permutation {
        let mut out = vec![0u8; self.len()];
        theta_slice(self.values(), &mut out);
        Permutation::from_vec_unchecked(out)
    }

    pub fn theta_inverse(&self) -> Permutation {
        let mut out = vec![0u8; self.len()];
        theta_inverse_slice(self.values(), &mut out);
        Permutation::from_vec_unchecked(out)
    }

    /// `θ^k` for any integer `k`; negative powers iterate the inverse.
    pub fn theta_power(&self, k: i64) -> Permutation {
        let n = self.len();
        let mut cur = self.values().to_vec();
        let mut next = vec![0u8; n];
        for _ in 0..k.unsigned_abs() {
            if k > 0 {
                theta_slice(&cur, &mut next);
            } else {
                theta_inverse_slice(&cur, &mut next);
            }
            std::mem::swap(&mut cur, &mut next);
        }
        Permutation::from_vec_unchecked(cur)
    }

    /// Orbit length under `θ` with the default step cap.
    pub fn orbit_length(&self) -> Result<u64, PermError> {
        self.orbit_length_capped(DEFAULT_ORBIT_CAP)
    }

    pub fn orbit_length_capped(&self, cap: u64) -> Result<u64, PermError> {
        orbit_length_slice(self.values(), cap).ok_or(PermError::OrbitCapExceeded { cap })
    }

    /// Number of cycles in the disjoint cycle decomposition.
    pub fn cycle_count(&self) -> usize {
        let mut visited = 0u64;
        let mut count = 0;
        for start in 1..=self.len() as u8 {
            if visited & (1 << (start - 1)) != 0 {
                continue;
            }
            count += 1;
            let mut x = start;
            while visited & (1 << (x - 1)) == 0 {
                visited |= 1 << (x - 1);
                x = self.at(x as usize) as u8;
            }
        }
        count
    }

    /// True iff the cycle decomposition is a single `n`-cycle.
    pub fn is_cyclic(&self) -> bool {
        !self.is_empty() && self.cycle_count() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_form_rendering() {
        assert_eq!(
            p("413526987").standard_cycle_form().to_string(),
            "(3)(5,2,1,4)(6)(8)(9,7)"
        );
        assert_eq!(p("123").standard_cycle_form().to_string(), "(1)(2)(3)");
        assert_eq!(p("21").standard_cycle_form().to_string(), "(2,1)");
        assert_eq!(
            p("134579862").standard_cycle_form().to_string(),
            "(1)(9,2,3,4,5,7,8,6)"
        );
        let form = p("413526987").standard_cycle_form();
        assert_eq!(form.to_permutation(), p("413526987"));
        assert_eq!(form.flatten(), p("352146897"));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(p("413526987").theta(), p("352146897"));
        assert_eq!(p("134579862").theta(), p("192345786"));
        assert_eq!(p("1").theta(), p("1"));
        assert_eq!(Permutation::empty().theta(), Permutation::empty());
        assert_eq!(p("192345786").standard_cycle_form().to_string(), "(1)(7)(8)(9,6,5,4,3,2)");
    }

    #[test]
    fn theta_inverse_examples() {
        assert_eq!(p("352146897").theta_inverse(), p("413526987"));
        assert_eq!(Permutation::identity(6).theta_inverse(), Permutation::identity(6));
        let pre = p("3421").theta_inverse();
        assert_eq!(pre.theta(), p("3421"));
    }

    #[test]
    fn powers() {
        let pi = p("134579862");
        assert_eq!(pi.theta_power(2), p("178965432"));
        // The third iterate has nine symbols and contains 213.
        assert_eq!(pi.theta_power(3), p("165839274"));
        assert_eq!(pi.theta_power(0), pi);
        assert_eq!(p("4132").theta_power(1), p("3421"));
        assert_eq!(p("3421").theta_power(-1), p("4132"));
        assert_eq!(pi.theta_power(-2).theta_power(2), pi);
    }

    #[test]
    fn cyclicity_and_orbits() {
        assert!(p("312").is_cyclic());
        assert!(!p("413526987").is_cyclic());
        assert!(!Permutation::identity(4).is_cyclic());
        assert!(p("1").is_cyclic());
        assert_eq!(p("2143").orbit_length(), Ok(1));
        assert_eq!(p("3421").orbit_length(), Ok(2));
        assert_eq!(p("312").orbit_length(), Ok(3));
        assert_eq!(
            p("312").orbit_length_capped(2),
            Err(PermError::OrbitCapExceeded { cap: 2 })
        );
    }
}
