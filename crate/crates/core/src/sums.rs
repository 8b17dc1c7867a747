//! The largest odd divisor `α` and the partial sums `V`, `U` and `G`.
//!
//! Each sum comes twice: a `*_brute` oracle that adds up the defining series
//! term by term, and a `*_fast` evaluator that walks the binary digits of `n`
//! from the most significant end using
//!
//! ```text
//! V(2n) = n + V(n)/2                  V(2n+1) = n + 1 + V(n)/2
//! U(2n) = n² + U(n)                   U(2n+1) = (n+1)² + U(n)
//! G(2n) = n(n+1) + G(n) − V(n)/2      G(2n+1) = (n+1)² + G(n)
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::bitcore::{self, nat_to_rational, ExactRational, Nat};
use crate::error::{Error, Result};

/// Caps the number of terms a brute-force summation may touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteLimits {
    pub max_terms: u64,
}

impl Default for BruteLimits {
    fn default() -> Self {
        BruteLimits { max_terms: 1 << 22 }
    }
}

impl BruteLimits {
    /// Returns `n` as a machine word if a brute-force pass over `1..=n` is allowed.
    pub fn admit(&self, n: &Nat, what: &'static str) -> Result<u64> {
        match n.to_u64() {
            Some(v) if v <= self.max_terms => Ok(v),
            _ => Err(Error::Resource {
                what,
                requested: n.to_string(),
                cap: self.max_terms,
            }),
        }
    }
}

/// Largest odd divisor of `k`.
pub fn alpha(k: &Nat) -> Result<Nat> {
    match k.trailing_zeros() {
        Some(z) => Ok(k >> z),
        None => Err(Error::Domain("alpha requires k >= 1")),
    }
}

/// `α(k)` for machine words, by repeated halving.
pub fn alpha_u64(mut k: u64) -> u64 {
    assert!(k >= 1, "alpha requires k >= 1");
    while k.is_multiple_of(2) {
        k /= 2;
    }
    k
}

fn require_positive(n: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::Domain(what))
    } else {
        Ok(())
    }
}

/// `V(n) = Σ_{k=1}^{n} α(k)/k`, summed term by term.
pub fn v_brute(n: &Nat, limits: &BruteLimits) -> Result<ExactRational> {
    let n = limits.admit(n, "v_brute")?;
    require_positive(n, "V requires n >= 1")?;
    Ok((1..=n).fold(ExactRational::zero(), |acc, k| {
        acc + bitcore::ratio(alpha_u64(k) as i64, k)
    }))
}

/// `U(n) = Σ_{k=1}^{n} α(k)`, summed term by term.
pub fn u_brute(n: &Nat, limits: &BruteLimits) -> Result<Nat> {
    let n = limits.admit(n, "u_brute")?;
    require_positive(n, "U requires n >= 1")?;
    Ok((1..=n).fold(Nat::zero(), |acc, k| acc + alpha_u64(k)))
}

/// `G(n) = Σ_{k=1}^{n} (n+1−k)/k · α(k)`, summed term by term.
pub fn g_brute(n: &Nat, limits: &BruteLimits) -> Result<ExactRational> {
    let n = limits.admit(n, "g_brute")?;
    require_positive(n, "G requires n >= 1")?;
    Ok((1..=n).fold(ExactRational::zero(), |acc, k| {
        acc + ExactRational::new(BigInt::from(n + 1 - k) * alpha_u64(k), BigInt::from(k))
    }))
}

/// One row of running brute-force sums.
#[derive(Clone, Debug, PartialEq)]
pub struct BruteRow {
    pub n: u64,
    pub v: ExactRational,
    pub u: Nat,
    pub g: ExactRational,
}

/// Yields `(n, V(n), U(n), G(n))` for `n = 1, 2, …` by extending the defining
/// sums one term at a time.
///
/// `G` advances by `G(n) − G(n−1) = Σ_{k≤n} α(k)/k = V(n)`, which is the
/// definition of `G` differenced in `n`; no recurrence in `n/2` is involved.
#[derive(Clone, Debug)]
pub struct BruteSums {
    row: BruteRow,
}

impl BruteSums {
    pub fn new() -> Self {
        BruteSums {
            row: BruteRow {
                n: 0,
                v: ExactRational::zero(),
                u: Nat::zero(),
                g: ExactRational::zero(),
            },
        }
    }

    /// Current row; `n = 0` before the first step.
    pub fn current(&self) -> &BruteRow {
        &self.row
    }

    /// Advances until the current row is `target`, restarting if it lies behind.
    pub fn seek(&mut self, target: u64) -> &BruteRow {
        if target < self.row.n {
            *self = BruteSums::new();
        }
        while self.row.n < target {
            self.step();
        }
        &self.row
    }

    fn step(&mut self) {
        let r = &mut self.row;
        r.n += 1;
        let a = alpha_u64(r.n);
        r.v += bitcore::ratio(a as i64, r.n);
        r.u += a;
        r.g += &r.v;
    }
}

impl Default for BruteSums {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for BruteSums {
    type Item = BruteRow;

    fn next(&mut self) -> Option<BruteRow> {
        self.step();
        Some(self.row.clone())
    }
}

/// `V(n)` in `O(log n)` big-integer steps. `V(0)` is the empty sum.
pub fn v_fast(n: &Nat) -> ExactRational {
    fast_vg(n, false).0
}

/// `U(n)` in `O(log n)` big-integer steps, with `U(0) = 0`.
pub fn u_fast(n: &Nat) -> Nat {
    let mut prefix = Nat::zero();
    let mut u = Nat::zero();
    for k in (0..n.bits()).rev() {
        if n.bit(k) {
            let next = &prefix + 1u32;
            u += &next * &next;
        } else {
            u += &prefix * &prefix;
        }
        prefix = (prefix << 1u32) + u32::from(n.bit(k));
    }
    u
}

/// `G(n)` in `O(log n)` big-integer steps, carrying `(G, V)` jointly.
pub fn g_fast(n: &Nat) -> ExactRational {
    fast_vg(n, true).1
}

/// Walks the digits of `n` below the leading one, keeping `2^(j−1)·V(p)` and
/// `2^(j−1)·G(p)` as integers for the `j`-digit prefix `p`.
fn fast_vg(n: &Nat, with_g: bool) -> (ExactRational, ExactRational) {
    if n.is_zero() {
        return (ExactRational::zero(), ExactRational::zero());
    }
    let top = n.bits() - 1;
    let mut prefix = Nat::one();
    let mut vs = Nat::one();
    let mut gs = Nat::one();
    for (j, k) in (0..top).rev().enumerate() {
        let j = j as u64 + 1;
        let bit = n.bit(k);
        if with_g {
            gs <<= 1u32;
            if bit {
                let next = &prefix + 1u32;
                gs += (&next * &next) << j;
            } else {
                gs += (&prefix * (&prefix + 1u32)) << j;
                gs -= &vs;
            }
        }
        vs += (&prefix + u32::from(bit)) << j;
        prefix = (prefix << 1u32) + u32::from(bit);
    }
    let scale = BigInt::one() << top;
    let v = ExactRational::new(BigInt::from(vs), scale.clone());
    let g = if with_g {
        ExactRational::new(BigInt::from(gs), scale)
    } else {
        ExactRational::zero()
    };
    (v, g)
}

/// Which of the three sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumKind {
    V,
    U,
    G,
}

/// A sum evaluated at an argument.
#[derive(Clone, Debug, PartialEq)]
pub struct SumValue {
    pub kind: SumKind,
    pub arg: Nat,
    pub value: ExactRational,
}

impl SumValue {
    pub fn fast(kind: SumKind, arg: Nat) -> Self {
        let value = match kind {
            SumKind::V => v_fast(&arg),
            SumKind::U => nat_to_rational(&u_fast(&arg)),
            SumKind::G => g_fast(&arg),
        };
        SumValue { kind, arg, value }
    }
}

/// Test functions available to the weighted mean `(1/n)·Σ f(k/n)·α(k)/k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionId {
    /// `f(x) = 1`
    Const1,
    /// `f(x) = x`
    X,
    /// `f(x) = x²`
    X2,
    /// `f(x) = 1/(1+x)`
    Inv1px,
}

impl FunctionId {
    pub const ALL: [FunctionId; 4] = [
        FunctionId::Const1,
        FunctionId::X,
        FunctionId::X2,
        FunctionId::Inv1px,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Const1 => "const1",
            FunctionId::X => "x",
            FunctionId::X2 => "x2",
            FunctionId::Inv1px => "inv1px",
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "unknown function {s:?}; expected one of const1, x, x2, inv1px"
                ))
            })
    }
}

/// `(2/3)·∫₀¹ f`, the limit of the weighted mean as `n → ∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct CesaroLimit {
    /// Exact value when it is rational.
    pub exact: Option<ExactRational>,
    /// Closed form as text.
    pub expr: &'static str,
    pub approx: f64,
}

pub fn cesaro_limit(f: FunctionId) -> CesaroLimit {
    let rational = |p, q| CesaroLimit {
        exact: Some(bitcore::ratio(p, q)),
        expr: "",
        approx: p as f64 / q as f64,
    };
    match f {
        FunctionId::Const1 => CesaroLimit {
            expr: "2/3",
            ..rational(2, 3)
        },
        FunctionId::X => CesaroLimit {
            expr: "1/3",
            ..rational(1, 3)
        },
        FunctionId::X2 => CesaroLimit {
            expr: "2/9",
            ..rational(2, 9)
        },
        FunctionId::Inv1px => CesaroLimit {
            exact: None,
            expr: "2/3*ln(2)",
            approx: 2.0 / 3.0 * std::f64::consts::LN_2,
        },
    }
}

/// `(1/n)·Σ_{k=1}^{n} f(k/n)·α(k)/k`, exactly.
pub fn cesaro_mean(f: FunctionId, n: &Nat, limits: &BruteLimits) -> Result<ExactRational> {
    let n = limits.admit(n, "cesaro_mean")?;
    require_positive(n, "cesaro_mean requires n >= 1")?;
    let big_n = BigInt::from(n);
    Ok(match f {
        FunctionId::Const1 => {
            // α(k)/k = 2^(−v₂(k)), and v₂(k) ≤ ⌊lg n⌋
            let top = 63 - n.leading_zeros() as u64;
            let s = (1..=n).fold(BigInt::zero(), |acc, k| {
                acc + (BigInt::one() << (top - k.trailing_zeros() as u64))
            });
            ExactRational::new(s, big_n << top)
        }
        FunctionId::X => {
            let s = (1..=n).fold(BigInt::zero(), |acc, k| acc + alpha_u64(k));
            ExactRational::new(s, &big_n * &big_n)
        }
        FunctionId::X2 => {
            let s = (1..=n).fold(BigInt::zero(), |acc, k| {
                acc + BigInt::from(k) * alpha_u64(k)
            });
            ExactRational::new(s, big_n.pow(3))
        }
        FunctionId::Inv1px => {
            // (1/n)·(n/(n+k))·α(k)/k = 1 / (2^v₂(k)·(n+k))
            let (num, den) = split_sum(1, n, &|k| {
                (BigInt::one(), BigInt::from(n + k) << k.trailing_zeros())
            });
            ExactRational::new(num, den)
        }
    })
}

/// Sums `Σ_{k=lo}^{hi} p_k/q_k` by binary splitting, without reducing.
fn split_sum(lo: u64, hi: u64, term: &dyn Fn(u64) -> (BigInt, BigInt)) -> (BigInt, BigInt) {
    if lo == hi {
        return term(lo);
    }
    let mid = lo + (hi - lo) / 2;
    let (a, b) = split_sum(lo, mid, term);
    let (c, d) = split_sum(mid + 1, hi, term);
    (a * &d + c * &b, b * d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcore::{pow2, ratio};

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&n(1)).unwrap(), n(1));
        assert_eq!(alpha(&n(12)).unwrap(), n(3));
        assert_eq!(alpha(&n(40)).unwrap(), n(5));
        assert!(matches!(alpha(&n(0)), Err(Error::Domain(_))));
        for k in 1..2000u64 {
            assert_eq!(alpha(&n(2 * k)).unwrap(), alpha(&n(k)).unwrap());
            assert_eq!(alpha(&n(2 * k - 1)).unwrap(), n(2 * k - 1));
            assert_eq!(alpha(&n(k)).unwrap(), n(alpha_u64(k)));
        }
    }

    #[test]
    fn brute_examples() {
        let lim = BruteLimits::default();
        assert_eq!(v_brute(&n(1), &lim).unwrap(), ratio(1, 1));
        assert_eq!(v_brute(&n(3), &lim).unwrap(), ratio(5, 2));
        assert_eq!(v_brute(&n(4), &lim).unwrap(), ratio(11, 4));
        assert_eq!(u_brute(&n(1), &lim).unwrap(), n(1));
        assert_eq!(u_brute(&n(6), &lim).unwrap(), n(14));
        assert_eq!(u_brute(&n(7), &lim).unwrap(), n(21));
        assert_eq!(g_brute(&n(1), &lim).unwrap(), ratio(1, 1));
        assert_eq!(g_brute(&n(4), &lim).unwrap(), ratio(31, 4));
        assert_eq!(g_brute(&n(2), &lim).unwrap(), ratio(5, 2));
    }

    #[test]
    fn brute_respects_cap() {
        let lim = BruteLimits { max_terms: 10 };
        assert!(v_brute(&n(10), &lim).is_ok());
        assert!(matches!(v_brute(&n(11), &lim), Err(Error::Resource { .. })));
        assert!(matches!(
            u_brute(&pow2(80), &lim),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(g_brute(&n(0), &lim), Err(Error::Domain(_))));
    }

    #[test]
    fn fast_examples() {
        assert_eq!(v_fast(&n(4)), ratio(11, 4));
        assert_eq!(v_fast(&n(1)), ratio(1, 1));
        assert_eq!(v_fast(&n(1024)), ratio(699051, 1024));
        assert_eq!(u_fast(&n(0)), n(0));
        assert_eq!(u_fast(&n(7)), n(21));
        assert_eq!(u_fast(&pow2(10)), n(349526));
        assert_eq!(g_fast(&n(4)), ratio(31, 4));
        assert_eq!(g_fast(&n(7)), ratio(21, 1));
        assert_eq!(g_fast(&n(5)), ratio(23, 2));
    }

    #[test]
    fn fast_matches_brute_and_identity() {
        let lim = BruteLimits::default();
        for (row, k) in BruteSums::new().zip(1..=600u64) {
            let k = n(k);
            assert_eq!(row.v, v_brute(&k, &lim).unwrap());
            assert_eq!(row.g, g_brute(&k, &lim).unwrap());
            assert_eq!(v_fast(&k), row.v, "V({k})");
            assert_eq!(u_fast(&k), row.u, "U({k})");
            assert_eq!(g_fast(&k), row.g, "G({k})");
            let via_identity =
                (nat_to_rational(&k) + BigInt::from(1)) * &row.v - nat_to_rational(&row.u);
            assert_eq!(row.g, via_identity);
        }
    }

    #[test]
    fn brute_cursor_seeks_both_ways() {
        let mut c = BruteSums::new();
        assert_eq!(c.seek(7).u, n(21));
        assert_eq!(c.seek(4).v, ratio(11, 4));
        assert_eq!(c.current().n, 4);
    }

    #[test]
    fn cesaro_examples() {
        let lim = BruteLimits::default();
        assert_eq!(
            cesaro_mean(FunctionId::Const1, &n(4), &lim).unwrap(),
            ratio(11, 16)
        );
        assert_eq!(
            cesaro_mean(FunctionId::X, &n(4), &lim).unwrap(),
            ratio(3, 8)
        );
        // 1·1 + 2·1 + 3·3 + 4·1 over 4³
        assert_eq!(
            cesaro_mean(FunctionId::X2, &n(4), &lim).unwrap(),
            ratio(16, 64)
        );
        // 1/5 + 1/12 + 1/7 + 1/32
        assert_eq!(
            cesaro_mean(FunctionId::Inv1px, &n(4), &lim).unwrap(),
            ratio(1, 5) + ratio(1, 12) + ratio(1, 7) + ratio(1, 32)
        );
        assert!(cesaro_mean(FunctionId::X, &n(0), &lim).is_err());
        assert_eq!("x2".parse::<FunctionId>().unwrap(), FunctionId::X2);
        assert!("sin".parse::<FunctionId>().is_err());
    }

    #[test]
    fn cesaro_x_tends_to_one_third() {
        let lim = BruteLimits::default();
        let mean = cesaro_mean(FunctionId::X, &n(1 << 14), &lim).unwrap();
        assert!((bitcore::to_f64(&mean) - 1.0 / 3.0).abs() < 1e-3);
    }

    #[test]
    fn sum_value_kinds() {
        assert_eq!(SumValue::fast(SumKind::U, n(6)).value, ratio(14, 1));
        assert_eq!(SumValue::fast(SumKind::G, n(2)).value, ratio(5, 2));
    }
}
