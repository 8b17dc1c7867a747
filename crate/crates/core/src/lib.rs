//! Exact evaluation of the largest-odd-divisor function `α` and of the sums
//!
//! ```text
//! V(n) = Σ α(k)/k,   U(n) = Σ α(k),   G(n) = Σ (n+1−k)/k · α(k) = (n+1)V(n) − U(n)
//! ```
//!
//! together with their deviations from the quadratic envelopes, the block
//! maxima of `g`, and a registry of checkers for every bound, symmetry and
//! equality characterization known for these functions.
//!
//! Every value is an exact rational. Each sum has a brute-force oracle taken
//! straight from its definition and an `O(log n)` evaluator driven by the
//! binary digits of `n`.

pub mod bitcore;
pub mod deviations;
pub mod error;
pub mod extremal;
pub mod sums;
pub mod verify;

pub use bitcore::{ExactRational, IntervalIndex, Nat};
pub use error::{Error, Result};
