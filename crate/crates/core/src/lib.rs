//! Permutations under the fundamental bijection `θ`: pattern avoidance,
//! enumeration of the counting sequences, generating functions, and a
//! harness that checks closed forms and conjectures against brute force.

pub mod cli;
pub mod enumerate;
pub mod patterns;
pub mod perm;
pub mod series;
pub mod verify;

pub use patterns::Pattern;
pub use perm::{PermError, Permutation};
