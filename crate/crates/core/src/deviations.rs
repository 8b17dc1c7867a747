//! Deviations of the sums from their quadratic envelopes:
//!
//! ```text
//! v(n) = V(n) − 2n/3        u(n) = (n²+n)/3 − U(n)        g(n) = n(n+2)/3 − G(n)
//! ```
//!
//! with `v(0) = u(0) = g(0) = 0`, and the digit functional
//! `h(n) = Σ_{k<m} ε̄_k ⌊n/2^(k+1)⌋`.
//!
//! `v`, `u` and `g` each have a recurrence evaluator and an independent
//! closed digit formula. Identity checks compare them structurally; nothing
//! in this module rounds.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bitcore::{self, floor_lg, nat_to_rational, ratio, ExactRational, Nat, Thirds};
use crate::error::{Error, Result};
use crate::sums;

/// Which deviation a [`Deviation`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeviationKind {
    V,
    U,
    G,
    H,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Deviation {
    pub kind: DeviationKind,
    pub arg: Nat,
    pub value: ExactRational,
}

impl Deviation {
    pub fn eval(kind: DeviationKind, arg: Nat) -> Result<Self> {
        let value = match kind {
            DeviationKind::V => dev_v(&arg),
            DeviationKind::U => dev_u(&arg),
            DeviationKind::G => dev_g(&arg),
            DeviationKind::H => nat_to_rational(&h_eval(&arg)?),
        };
        Ok(Deviation { kind, arg, value })
    }
}

/// `v(n) = ⅓ Σ ε_k / 2^k`.
pub fn dev_v(n: &Nat) -> ExactRational {
    v_digits(n).to_rational()
}

/// `v` by the digit formula: the digit string of `n` read backwards is the
/// numerator over `3·2^m`.
pub(crate) fn v_digits(n: &Nat) -> Thirds {
    let Some(m) = n.bits().checked_sub(1) else {
        return Thirds::zero();
    };
    // bit k of n lands at bit m − k
    let bytes = n.to_bytes_le();
    let width = 8 * bytes.len() as u64;
    let flipped: Vec<u8> = bytes.iter().rev().map(|b| b.reverse_bits()).collect();
    let reversed = Nat::from_bytes_le(&flipped) >> (width - 1 - m);
    Thirds::scaled(BigInt::from(reversed), m)
}

/// `v` from `v(2n) = v(n)/2`, `v(2n+1) = 1/3 + v(n)/2`, most significant digit first.
pub fn v_recurrence(n: &Nat) -> ExactRational {
    let mut v = Thirds::zero();
    let one = BigInt::one();
    for k in (0..n.bits()).rev() {
        v.halve();
        if n.bit(k) {
            v.add_third(&one);
        }
    }
    v.to_rational()
}

/// `v(n)` as `V(n) − 2n/3` from the fast sum evaluator.
pub fn v_from_sum(n: &Nat) -> ExactRational {
    if n.is_zero() {
        return ExactRational::zero();
    }
    sums::v_fast(n) - nat_to_rational(n) * ratio(2, 3)
}

/// `u(n)` from `u(2n+ε) = u(n) + n/3 − ε(2n+ε)/3`.
pub fn dev_u(n: &Nat) -> ExactRational {
    // tracks 3·u(p) for the digit prefix p
    let mut prefix = BigInt::zero();
    let mut triple = BigInt::zero();
    for k in (0..n.bits()).rev() {
        triple += &prefix;
        if n.bit(k) {
            triple -= (&prefix << 1u32) + 1u32;
        }
        prefix = (prefix << 1u32) + u32::from(n.bit(k));
    }
    ExactRational::new(triple, BigInt::from(3u32))
}

/// `u(n) = −ε₀·n/3 + (2/3)·h(⌊n/2⌋)`, reading `h(0)` as 0.
pub fn dev_u_closed(n: &Nat) -> ExactRational {
    let half = n >> 1u32;
    let h = if half.is_zero() {
        Nat::zero()
    } else {
        h_raw(&half)
    };
    let mut out = nat_to_rational(&h) * ratio(2, 3);
    if n.bit(0) {
        out -= nat_to_rational(n) / BigInt::from(3u32);
    }
    out
}

/// `u(n)` as `(n²+n)/3 − U(n)` from the fast sum evaluator.
pub fn u_from_sum(n: &Nat) -> ExactRational {
    let q = nat_to_rational(&(n * n + n));
    q / BigInt::from(3u32) - nat_to_rational(&sums::u_fast(n))
}

/// `h(n) = Σ_{k=0}^{m−1} ε̄_k ⌊n/2^(k+1)⌋`, always in `[0, n−1]`.
pub fn h_eval(n: &Nat) -> Result<Nat> {
    if n.is_zero() {
        return Err(Error::Domain("h requires n >= 1"));
    }
    Ok(h_raw(n))
}

fn h_raw(n: &Nat) -> Nat {
    let m = n.bits() - 1;
    (0..m)
        .filter(|&k| !n.bit(k))
        .fold(Nat::zero(), |acc, k| acc + (n >> (k + 1)))
}

/// `g(n)` from `g(2n) = g(n) + v(n)/2`, `g(2n+1) = g(n)`, carrying `v` along.
pub fn dev_g(n: &Nat) -> ExactRational {
    g_thirds(n).to_rational()
}

pub(crate) fn g_thirds(n: &Nat) -> Thirds {
    let mut g = Thirds::zero();
    let mut v = Thirds::zero();
    let one = BigInt::one();
    for k in (0..n.bits()).rev() {
        v.halve();
        if n.bit(k) {
            v.add_third(&one);
        } else {
            g.add(&v);
        }
    }
    g
}

/// `g(n) = ½ Σ_{p≥0} ε̄_p · v(⌊n/2^(p+1)⌋)`.
pub fn g_digits(n: &Nat) -> ExactRational {
    let Ok(m) = floor_lg(n) else {
        return ExactRational::zero();
    };
    let mut acc = Thirds::zero();
    for p in (0..m).filter(|&p| !n.bit(p)) {
        acc.add(&v_digits(&(n >> (p + 1))));
    }
    acc.halve();
    acc.to_rational()
}

/// `g(n)` as `n(n+2)/3 − G(n)` from the fast sum evaluator.
pub fn g_from_sum(n: &Nat) -> ExactRational {
    if n.is_zero() {
        return ExactRational::zero();
    }
    let q = nat_to_rational(&(n * (n + 2u32)));
    q / BigInt::from(3u32) - sums::g_fast(n)
}

/// `g(4n + residue)` through the two-stage recurrences
///
/// ```text
/// g(4n)   = g(n) + ¾v(n)        g(4n+1) = g(n) + ½v(n)
/// g(4n+2) = g(n) + ⅙ + ¼v(n)    g(4n+3) = g(n)
/// ```
pub fn two_stage_g(n: &Nat, residue: u8) -> Result<ExactRational> {
    let g = dev_g(n);
    let v = dev_v(n);
    Ok(match residue {
        0 => g + v * ratio(3, 4),
        1 => g + v * ratio(1, 2),
        2 => g + ratio(1, 6) + v * ratio(1, 4),
        3 => g,
        _ => {
            return Err(Error::Usage(format!(
                "residue must be in 0..=3, got {residue}"
            )))
        }
    })
}

/// `(1/3)·2^(-k)`, the weight of digit `k` in `v`.
pub fn digit_weight(k: u64) -> ExactRational {
    bitcore::inv_pow2(k) / BigInt::from(3u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcore::pow2;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn v_examples() {
        assert_eq!(dev_v(&n(0)), ratio(0, 1));
        assert_eq!(dev_v(&n(1)), ratio(1, 3));
        assert_eq!(dev_v(&n(6)), ratio(1, 4));
        assert_eq!(dev_v(&n(8)), ratio(1, 24));
        for m in 0..40 {
            assert_eq!(dev_v(&pow2(m)), digit_weight(m));
        }
    }

    #[test]
    fn v_routes_agree() {
        for k in 0..3000u64 {
            let k = n(k);
            let d = dev_v(&k);
            assert_eq!(d, v_recurrence(&k), "n={k}");
            assert_eq!(d, v_from_sum(&k), "n={k}");
        }
    }

    #[test]
    fn u_examples() {
        assert_eq!(dev_u(&n(0)), ratio(0, 1));
        assert_eq!(dev_u(&n(6)), ratio(0, 1));
        assert_eq!(dev_u(&n(4)), ratio(2, 3));
        assert_eq!(dev_u(&n(1)), ratio(-1, 3));
        for k in 0..3000u64 {
            let k = n(k);
            assert_eq!(dev_u(&k), u_from_sum(&k), "n={k}");
            assert_eq!(dev_u(&k), dev_u_closed(&k), "n={k}");
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_eval(&n(4)).unwrap(), n(3));
        assert_eq!(h_eval(&n(7)).unwrap(), n(0));
        assert_eq!(h_eval(&n(5)).unwrap(), n(1));
        assert_eq!(h_eval(&n(1)).unwrap(), n(0));
        assert!(matches!(h_eval(&n(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn g_examples() {
        let table = [
            ratio(0, 1),
            ratio(1, 6),
            ratio(0, 1),
            ratio(1, 4),
            ratio(1, 6),
            ratio(1, 4),
            ratio(0, 1),
        ];
        for (k, want) in (1u64..).zip(table) {
            assert_eq!(dev_g(&n(k)), want, "g({k})");
        }
        assert_eq!(dev_g(&n(0)), ratio(0, 1));
        assert_eq!(dev_g(&n(10)), ratio(3, 8));
        assert_eq!(dev_g(&n(31)), ratio(0, 1));
        for k in 0..3000u64 {
            let k = n(k);
            assert_eq!(dev_g(&k), g_digits(&k), "n={k}");
            assert_eq!(dev_g(&k), g_from_sum(&k), "n={k}");
        }
    }

    #[test]
    fn two_stage_examples() {
        assert_eq!(two_stage_g(&n(1), 0).unwrap(), ratio(1, 4));
        assert_eq!(two_stage_g(&n(1), 2).unwrap(), ratio(1, 4));
        for k in 0..500u64 {
            assert_eq!(two_stage_g(&n(k), 3).unwrap(), dev_g(&n(k)));
            for r in 0..4u8 {
                assert_eq!(
                    two_stage_g(&n(k), r).unwrap(),
                    dev_g(&n(4 * k + r as u64)),
                    "n={k} r={r}"
                );
            }
        }
        assert!(matches!(two_stage_g(&n(1), 4), Err(Error::Usage(_))));
    }

    #[test]
    fn deviation_wrapper() {
        let d = Deviation::eval(DeviationKind::H, n(4)).unwrap();
        assert_eq!(d.value, ratio(3, 1));
        assert!(Deviation::eval(DeviationKind::H, n(0)).is_err());
        assert_eq!(
            Deviation::eval(DeviationKind::G, n(6)).unwrap().value,
            ratio(1, 4)
        );
    }
}
