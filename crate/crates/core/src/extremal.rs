//! Where `g` is largest and smallest.
//!
//! The skeleton offsets `x_r = (2/3)(4^r − 1) = (1010…10)₂` and `y_r = 2x_r`
//! locate the maxima of `g` on every dyadic block. This module exposes the
//! block maximum `Λ(n, m) = max{ g(2^m·n + t) : 0 ≤ t < 2^m }`, the block
//! envelope `λ_m`, the bound `θ_n`, argmax/argmin reports, and enumerators for
//! the equality sets of the sharp bounds.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::bitcore::{
    floor_lg, inv_pow2, nat_to_rational, pow2, ratio, round_pow2_over_3, ExactRational,
    IntervalIndex, Nat,
};
use crate::deviations::dev_g;
use crate::error::{Error, Result};
use crate::sums::{alpha_u64, u_fast, v_fast, BruteLimits};

/// `(x_r, y_r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonPair {
    pub r: u64,
    pub x: Nat,
    pub y: Nat,
}

/// Closed form `x_r = (2/3)(4^r − 1)`, `y_r = 2x_r`.
pub fn skeleton(r: u64) -> SkeletonPair {
    let x = (pow2(2 * r) - 1u32) * 2u32 / 3u32;
    let y = &x << 1u32;
    SkeletonPair { r, x, y }
}

/// The same pair from `x_0 = y_0 = 0`, `x_{r+1} = 4x_r + 2`, `y_{r+1} = 4y_r + 4`.
pub fn skeleton_by_recurrence(r: u64) -> SkeletonPair {
    let (mut x, mut y) = (Nat::zero(), Nat::zero());
    for _ in 0..r {
        x = (x << 2u32) + 2u32;
        y = (y << 2u32) + 4u32;
    }
    SkeletonPair { r, x, y }
}

/// `Λ(n, m)` from two evaluations of `g`:
///
/// ```text
/// Λ(n, 2k+1) = max(g(2^(2k+1)n + y_k), g(2^(2k+1)n + x_k))
/// Λ(n, 2k+2) = max(g(2^(2k+2)n + y_k), g(2^(2k+2)n + x_(k+1)))
/// ```
pub fn lambda_block(n: &Nat, m: u64) -> Result<ExactRational> {
    if n.is_zero() {
        return Err(Error::Domain("lambda_block requires n >= 1"));
    }
    if m == 0 {
        return Err(Error::Usage("lambda_block requires m >= 1".into()));
    }
    let (first, second) = lambda_block_candidates(n, m);
    Ok(dev_g(&first).max(dev_g(&second)))
}

/// The two points of the block `2^m·n + [0, 2^m)` where the maximum of `g` may sit.
pub fn lambda_block_candidates(n: &Nat, m: u64) -> (Nat, Nat) {
    let base = n << m;
    let k = (m - 1) / 2;
    let s = skeleton(k);
    if m % 2 == 1 {
        (&base + &s.y, &base + &s.x)
    } else {
        (&base + &s.y, &base + skeleton(k + 1).x)
    }
}

/// `Λ(n, m)` by evaluating `g` at every point of the block.
pub fn lambda_block_brute(n: &Nat, m: u64, limits: &BruteLimits) -> Result<ExactRational> {
    if n.is_zero() {
        return Err(Error::Domain("lambda_block_brute requires n >= 1"));
    }
    let width = limits.admit(&pow2(m), "lambda_block_brute")?;
    let base = n << m;
    Ok((0..width)
        .map(|t| dev_g(&(&base + t)))
        .max()
        .expect("block is nonempty"))
}

/// `λ_m = (3m + 1 − (−1)^m·2^(−m)) / 27`, the maximum of `g` on `I_m`.
pub fn lambda_m(m: u64) -> ExactRational {
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let head = ExactRational::from_integer(BigInt::from(3 * m + 1));
    (head - inv_pow2(m) * BigInt::from(sign)) / BigInt::from(27u32)
}

/// `λ_m` in the form `(1/9)(m + round(2^m/3)/2^m)`.
pub fn lambda_m_rounded(m: u64) -> ExactRational {
    let frac = nat_to_rational(&round_pow2_over_3(m)) * inv_pow2(m);
    (frac + BigInt::from(m)) / BigInt::from(9u32)
}

/// `θ_n = (1/9)(⌊lg n⌋ + round(2^⌊lg n⌋/3)·2^(−⌊lg n⌋))`.
pub fn theta(n: &Nat) -> Result<ExactRational> {
    let m = floor_lg(n).map_err(|_| Error::Domain("theta requires n >= 1"))?;
    Ok(lambda_m_rounded(m))
}

/// Whether the maximum of `g` on a block is attained once or twice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxShape {
    /// `m ∈ {0, 1}`, found by direct evaluation.
    Single,
    /// `m ≥ 2`, the two skeleton points.
    Pair,
}

/// Minimum and maximum of `g` over `I_m` with the points attaining them.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalReport {
    pub m: IntervalIndex,
    pub min_value: ExactRational,
    pub min_points: BTreeSet<Nat>,
    pub max_value: ExactRational,
    pub max_points: BTreeSet<Nat>,
    pub shape: MaxShape,
}

/// The two maximizers of `g` on `I_m` (`m ≥ 2`):
/// `2^m + x_⌊m/2⌋` and `2^m + y_⌊(m−1)/2⌋`.
pub fn skeleton_argmax(m: u64) -> (Nat, Nat) {
    assert!(m >= 2, "two-point maximum needs m >= 2");
    let base = pow2(m);
    (&base + skeleton(m / 2).x, &base + skeleton((m - 1) / 2).y)
}

/// The same two points written as `2^m − 1 + round(2^m/3)` and
/// `2^m − 1 + round(2^(m+1)/3)`.
pub fn rounded_argmax(m: u64) -> (Nat, Nat) {
    let base = pow2(m) - 1u32;
    (
        &base + round_pow2_over_3(m),
        &base + round_pow2_over_3(m + 1),
    )
}

pub fn argmax_g(m: u64) -> ExtremalReport {
    let block = IntervalIndex(m);
    let min_points = BTreeSet::from([block.last()]);
    if m < 2 {
        let range = block.as_u64_range().expect("small block");
        let values: Vec<(u64, ExactRational)> = range.map(|t| (t, dev_g(&Nat::from(t)))).collect();
        let max_value = values
            .iter()
            .map(|(_, v)| v)
            .max()
            .cloned()
            .expect("nonempty");
        let max_points = values
            .iter()
            .filter(|(_, v)| *v == max_value)
            .map(|(t, _)| Nat::from(*t))
            .collect();
        return ExtremalReport {
            m: block,
            min_value: ExactRational::zero(),
            min_points,
            max_value,
            max_points,
            shape: MaxShape::Single,
        };
    }
    let (a, b) = skeleton_argmax(m);
    ExtremalReport {
        m: block,
        min_value: ExactRational::zero(),
        min_points,
        max_value: lambda_m(m),
        max_points: BTreeSet::from([a, b]),
        shape: MaxShape::Pair,
    }
}

/// The equality sets of the sharp bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EqualityKind {
    /// `V(n) = (2n²+1)/(3n)`: `{2^m : m ≥ 0}`.
    VLower,
    /// `V(n) = 2n(n+2)/(3(n+1))`: `{2^(m+1) − 1 : m ≥ 0}`.
    VUpper,
    /// even `n`, `U(n) = (n²+2)/3`: `{2^m : m ≥ 1}`.
    UEvenLower,
    /// even `n`, `U(n) = (n²+n)/3`: `{2^m − 2 : m ≥ 2}`.
    UEvenUpper,
    /// odd `n ≥ 3`, `U(n) = (n²+n+3)/3`: `{2^m + 1 : m ≥ 1}`.
    UOddLower,
    /// odd `n`, `U(n) = (n²+2n)/3`: `{2^m − 1 : m ≥ 1}`.
    UOddUpper,
    /// `G(n) = n(n+2)/3`, i.e. `g(n) = 0`: `{2^r − 1 : r ≥ 1}`.
    GUpper,
    /// `G(n) = n(n+2)/3 − θ_n`: `{2^r − 1 + round(2^r/3)} ∪ {2^r − 1 + round(2^(r+1)/3)}`.
    GTheta,
}

impl EqualityKind {
    pub const ALL: [EqualityKind; 8] = [
        EqualityKind::VLower,
        EqualityKind::VUpper,
        EqualityKind::UEvenLower,
        EqualityKind::UEvenUpper,
        EqualityKind::UOddLower,
        EqualityKind::UOddUpper,
        EqualityKind::GUpper,
        EqualityKind::GTheta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EqualityKind::VLower => "V_LOWER",
            EqualityKind::VUpper => "V_UPPER",
            EqualityKind::UEvenLower => "U_EVEN_LOWER",
            EqualityKind::UEvenUpper => "U_EVEN_UPPER",
            EqualityKind::UOddLower => "U_ODD_LOWER",
            EqualityKind::UOddUpper => "U_ODD_UPPER",
            EqualityKind::GUpper => "G_UPPER",
            EqualityKind::GTheta => "G_THETA",
        }
    }

    /// Evaluates the defining equality at `n`.
    pub fn holds(self, n: &Nat) -> bool {
        if n.is_zero() {
            return false;
        }
        let q = nat_to_rational(n);
        let three = BigInt::from(3u32);
        let u = || nat_to_rational(&u_fast(n));
        match self {
            EqualityKind::VLower => {
                v_fast(n) == (&q * &q * BigInt::from(2) + BigInt::one()) / (&q * &three)
            }
            EqualityKind::VUpper => {
                v_fast(n)
                    == &q * (&q + BigInt::from(2)) * BigInt::from(2)
                        / ((&q + BigInt::one()) * &three)
            }
            EqualityKind::UEvenLower => !n.bit(0) && u() == (&q * &q + BigInt::from(2)) / &three,
            EqualityKind::UEvenUpper => !n.bit(0) && u() == (&q * &q + &q) / &three,
            EqualityKind::UOddLower => {
                n.bit(0) && *n >= Nat::from(3u32) && u() == (&q * &q + &q + &three) / &three
            }
            EqualityKind::UOddUpper => n.bit(0) && u() == (&q * &q + &q * BigInt::from(2)) / &three,
            EqualityKind::GUpper => crate::deviations::g_from_sum(n).is_zero(),
            EqualityKind::GTheta => crate::deviations::g_from_sum(n) == theta(n).expect("n >= 1"),
        }
    }

    /// Members in `I_m` according to the closed-form description.
    pub fn members_in_block(self, m: u64) -> Vec<Nat> {
        let p = pow2(m);
        let top = pow2(m + 1) - 1u32;
        match self {
            EqualityKind::VLower => vec![p],
            EqualityKind::VUpper | EqualityKind::GUpper => vec![top],
            EqualityKind::UEvenLower if m >= 1 => vec![p],
            EqualityKind::UEvenUpper if m >= 1 => vec![top - 1u32],
            EqualityKind::UOddLower if m >= 1 => vec![p + 1u32],
            EqualityKind::UOddUpper => vec![top],
            EqualityKind::GTheta => {
                let (a, b) = rounded_argmax(m);
                let mut out: Vec<Nat> = vec![a, b];
                out.retain(|t| IntervalIndex(m).contains(t));
                out.sort();
                out.dedup();
                out
            }
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for EqualityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EqualityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EqualityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown equality kind {s:?}")))
    }
}

/// All `n ≤ bound` in the equality set, generated block by block from the
/// closed form and re-validated by direct evaluation.
pub fn equality_set(kind: EqualityKind, bound: &Nat) -> Result<Vec<Nat>> {
    if bound.is_zero() {
        return Err(Error::Usage("equality_set requires bound >= 1".into()));
    }
    let mut out = Vec::new();
    for m in 0..=floor_lg(bound)? {
        for t in kind.members_in_block(m) {
            if &t > bound {
                continue;
            }
            if !kind.holds(&t) {
                panic!("closed-form member {t} of {kind} fails its defining equality");
            }
            out.push(t);
        }
    }
    Ok(out)
}

/// `n ≤ bound` with `3U(n) = 2(1 + 2 + ⋯ + n)`, i.e. `{2^m − 2 : m ≥ 2}`.
pub fn perfect_mean_solutions(bound: &Nat) -> Result<Vec<Nat>> {
    let out = equality_set(EqualityKind::UEvenUpper, bound)?;
    for n in &out {
        assert_eq!(u_fast(n) * 3u32, n * (n + 1u32), "n = {n}");
    }
    Ok(out)
}

/// [`perfect_mean_solutions`] by full scan, keeping a running `U(n)`.
pub fn perfect_mean_scan(bound: &Nat, limits: &BruteLimits) -> Result<Vec<Nat>> {
    let bound = limits.admit(bound, "perfect_mean_scan")?;
    let mut u = 0u128;
    let mut out = Vec::new();
    for n in 1..=bound {
        u += u128::from(alpha_u64(n));
        let n = u128::from(n);
        if 3 * u == n * (n + 1) {
            out.push(Nat::from(n));
        }
    }
    Ok(out)
}

/// Every `n ≤ bound` with `g(n) < threshold`, by direct evaluation.
pub fn scan_g_below(
    threshold: &ExactRational,
    bound: &Nat,
    limits: &BruteLimits,
) -> Result<Vec<Nat>> {
    let bound = limits.admit(bound, "scan_g_below")?;
    Ok((1..=bound)
        .filter(|&k| dev_g(&Nat::from(k)) < *threshold)
        .map(Nat::from)
        .collect())
}

/// `Λ(1, 2k−1) = (6k − 2 + 2^(1−2k))/27`.
pub fn lambda_one_odd(k: u64) -> ExactRational {
    assert!(k >= 1);
    let head = ExactRational::from_integer(BigInt::from(6 * k - 2));
    (head + inv_pow2(2 * k - 1)) / BigInt::from(27u32)
}

/// `Λ(1, 2k) = (6k + 1 − 2^(−2k))/27`.
pub fn lambda_one_even(k: u64) -> ExactRational {
    let head = ExactRational::from_integer(BigInt::from(6 * k + 1));
    (head - inv_pow2(2 * k)) / BigInt::from(27u32)
}

/// `g(y_r) = 2r/9 + (1/27)(1 − 4^(−r))`.
pub fn g_at_y(r: u64) -> ExactRational {
    ratio(2 * r as i64, 9) + (ExactRational::one() - inv_pow2(2 * r)) / BigInt::from(27u32)
}

/// `max g` over a small `u64` range, and all points attaining it.
pub fn scan_block_max(range: std::ops::Range<u64>) -> Option<(ExactRational, Vec<u64>)> {
    let mut best: Option<(ExactRational, Vec<u64>)> = None;
    for t in range {
        let g = dev_g(&Nat::from(t));
        match &mut best {
            Some((value, points)) if g == *value => points.push(t),
            Some((value, _)) if g < *value => {}
            _ => best = Some((g, vec![t])),
        }
    }
    best
}

/// Converts a member list to machine words for display or comparison.
pub fn to_u64s(v: &[Nat]) -> Vec<u64> {
    v.iter().map(|n| n.to_u64().expect("fits in u64")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deviations::{dev_v, g_from_sum};

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn skeleton_examples() {
        assert_eq!(
            skeleton(0),
            SkeletonPair {
                r: 0,
                x: n(0),
                y: n(0)
            }
        );
        assert_eq!(
            skeleton(1),
            SkeletonPair {
                r: 1,
                x: n(2),
                y: n(4)
            }
        );
        assert_eq!(
            skeleton(2),
            SkeletonPair {
                r: 2,
                x: n(10),
                y: n(20)
            }
        );
        for r in 0..=64 {
            let s = skeleton(r);
            assert_eq!(s, skeleton_by_recurrence(r));
            if r > 0 {
                assert_eq!(floor_lg(&s.x).unwrap(), 2 * r - 1);
                assert_eq!(floor_lg(&s.y).unwrap(), 2 * r);
            }
            let four_r = inv_pow2(2 * r);
            assert_eq!(dev_v(&s.x), ratio(2, 9) - four_r.clone() * ratio(2, 9));
            assert_eq!(dev_v(&s.y), ratio(1, 9) - four_r * ratio(1, 9));
        }
    }

    #[test]
    fn lambda_block_examples() {
        assert_eq!(lambda_block(&n(1), 2).unwrap(), ratio(1, 4));
        assert_eq!(lambda_block(&n(1), 3).unwrap(), ratio(3, 8));
        assert_eq!(lambda_block(&n(1), 1).unwrap(), ratio(1, 6));
        assert!(matches!(lambda_block(&n(1), 0), Err(Error::Usage(_))));
        assert!(matches!(lambda_block(&n(0), 2), Err(Error::Domain(_))));
        let lim = BruteLimits::default();
        assert_eq!(lambda_block_brute(&n(1), 2, &lim).unwrap(), ratio(1, 4));
        assert_eq!(lambda_block_brute(&n(1), 1, &lim).unwrap(), ratio(1, 6));
        assert_eq!(lambda_block_brute(&n(3), 2, &lim).unwrap(), ratio(3, 8));
        let tight = BruteLimits { max_terms: 8 };
        assert!(matches!(
            lambda_block_brute(&n(1), 4, &tight),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn lambda_block_matches_scan() {
        let lim = BruteLimits::default();
        for base in 1..=20u64 {
            for m in 1..=8 {
                assert_eq!(
                    lambda_block(&n(base), m).unwrap(),
                    lambda_block_brute(&n(base), m, &lim).unwrap(),
                    "n={base} m={m}"
                );
            }
        }
    }

    #[test]
    fn envelope_examples() {
        assert_eq!(lambda_m(0), ratio(0, 1));
        assert_eq!(lambda_m(1), ratio(1, 6));
        assert_eq!(lambda_m(2), ratio(1, 4));
        assert_eq!(lambda_m(4), ratio(23, 48));
        for m in 0..80 {
            assert_eq!(lambda_m(m), lambda_m_rounded(m), "m={m}");
        }
        assert_eq!(theta(&n(1)).unwrap(), ratio(0, 1));
        assert_eq!(theta(&n(5)).unwrap(), ratio(1, 4));
        assert_eq!(theta(&n(8)).unwrap(), ratio(3, 8));
        assert!(matches!(theta(&n(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn argmax_examples() {
        let r = argmax_g(2);
        assert_eq!(r.max_points, BTreeSet::from([n(4), n(6)]));
        assert_eq!(r.max_value, ratio(1, 4));
        assert_eq!(r.min_points, BTreeSet::from([n(7)]));
        assert_eq!(r.shape, MaxShape::Pair);
        let r = argmax_g(3);
        assert_eq!(r.max_points, BTreeSet::from([n(10), n(12)]));
        assert_eq!(r.max_value, ratio(3, 8));
        let r = argmax_g(4);
        assert_eq!(r.max_points, BTreeSet::from([n(20), n(26)]));
        assert_eq!(r.max_value, ratio(23, 48));
        let r = argmax_g(0);
        assert_eq!(r.max_points, BTreeSet::from([n(1)]));
        assert_eq!(r.min_points, BTreeSet::from([n(1)]));
        assert_eq!(r.max_value, ratio(0, 1));
        assert_eq!(r.shape, MaxShape::Single);
        let r = argmax_g(1);
        assert_eq!(r.max_points, BTreeSet::from([n(2)]));
        assert_eq!(r.max_value, ratio(1, 6));
    }

    #[test]
    fn argmax_matches_scan() {
        for m in 0..=12 {
            let (value, points) = scan_block_max(IntervalIndex(m).as_u64_range().unwrap()).unwrap();
            let r = argmax_g(m);
            assert_eq!(r.max_value, value);
            assert_eq!(r.max_points, points.into_iter().map(Nat::from).collect());
            if m >= 2 {
                let (a, b) = rounded_argmax(m);
                assert_eq!(r.max_points, BTreeSet::from([a, b]));
            }
        }
    }

    #[test]
    fn equality_set_examples() {
        let b = n(100);
        let got = |k| to_u64s(&equality_set(k, &b).unwrap());
        assert_eq!(got(EqualityKind::VLower), vec![1, 2, 4, 8, 16, 32, 64]);
        assert_eq!(got(EqualityKind::VUpper), vec![1, 3, 7, 15, 31, 63]);
        assert_eq!(got(EqualityKind::GUpper), vec![1, 3, 7, 15, 31, 63]);
        assert_eq!(got(EqualityKind::UEvenUpper), vec![2, 6, 14, 30, 62]);
        assert_eq!(got(EqualityKind::UEvenLower), vec![2, 4, 8, 16, 32, 64]);
        assert_eq!(got(EqualityKind::UOddLower), vec![3, 5, 9, 17, 33, 65]);
        assert_eq!(got(EqualityKind::UOddUpper), vec![1, 3, 7, 15, 31, 63]);
        assert_eq!(
            got(EqualityKind::GTheta),
            vec![1, 2, 4, 6, 10, 12, 20, 26, 42, 52, 84]
        );
        assert!("G_NOPE".parse::<EqualityKind>().is_err());
        assert_eq!(
            "G_THETA".parse::<EqualityKind>().unwrap(),
            EqualityKind::GTheta
        );
    }

    #[test]
    fn equality_sets_match_full_scan() {
        let bound = 1u64 << 11;
        for kind in EqualityKind::ALL {
            let scanned: Vec<u64> = (1..=bound).filter(|&k| kind.holds(&n(k))).collect();
            let generated = to_u64s(&equality_set(kind, &n(bound)).unwrap());
            assert_eq!(scanned, generated, "{kind}");
        }
    }

    #[test]
    fn equality_set_reaches_large_bounds() {
        let s = equality_set(EqualityKind::GUpper, &pow2(256)).unwrap();
        assert_eq!(s.len(), 256);
        assert_eq!(s.last().unwrap(), &(pow2(256) - 1u32));
        assert!(g_from_sum(s.last().unwrap()).is_zero());
    }

    #[test]
    fn perfect_mean_examples() {
        assert_eq!(
            to_u64s(&perfect_mean_solutions(&n(10)).unwrap()),
            vec![2, 6]
        );
        assert_eq!(
            to_u64s(&perfect_mean_solutions(&n(100)).unwrap()),
            vec![2, 6, 14, 30, 62]
        );
        assert!(perfect_mean_solutions(&n(1)).unwrap().is_empty());
        let limits = BruteLimits::default();
        assert_eq!(
            perfect_mean_scan(&n(5000), &limits).unwrap(),
            perfect_mean_solutions(&n(5000)).unwrap()
        );
        assert!(perfect_mean_scan(&pow2(40), &limits).is_err());
    }

    #[test]
    fn scan_examples() {
        let lim = BruteLimits::default();
        let got = |t: ExactRational, b| to_u64s(&scan_g_below(&t, &n(b), &lim).unwrap());
        assert_eq!(got(ratio(1, 4), 16), vec![1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(got(ratio(1, 1_000_000), 64), vec![1, 3, 7, 15, 31, 63]);
        assert_eq!(got(ratio(1, 1), 7), (1..=7).collect::<Vec<_>>());
        assert!(got(ratio(0, 1), 100).is_empty());
        assert!(scan_g_below(&ratio(1, 4), &n(100), &BruteLimits { max_terms: 50 }).is_err());
    }

    #[test]
    fn one_based_block_formulas() {
        for k in 1..=7 {
            assert_eq!(lambda_block(&n(1), 2 * k - 1).unwrap(), lambda_one_odd(k));
            assert_eq!(lambda_block(&n(1), 2 * k).unwrap(), lambda_one_even(k));
        }
        for r in 0..=30 {
            assert_eq!(dev_g(&skeleton(r).y), g_at_y(r));
        }
    }
}
