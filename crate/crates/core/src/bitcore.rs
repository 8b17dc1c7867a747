//! Big naturals, exact rationals and the binary-digit machinery everything
//! else is built on.
//!
//! [`Nat`] and [`ExactRational`] are thin aliases over `num-bigint` and
//! `num-rational`: a `BigRational` is always kept in lowest terms with a
//! positive denominator, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

/// Reduced fraction of arbitrary-precision integers.
pub type ExactRational = BigRational;

/// `2^k` as a [`Nat`].
pub fn pow2(k: u64) -> Nat {
    Nat::one() << k
}

/// The rational `p/q`, reduced.
///
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: u64) -> ExactRational {
    ExactRational::new(BigInt::from(p), BigInt::from(q))
}

/// Embeds a natural number into the rationals.
pub fn nat_to_rational(n: &Nat) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n.clone()))
}

/// `1 / 2^k`.
pub fn inv_pow2(k: u64) -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::one() << k)
}

/// `⌊lg n⌋`, the index `m` of the dyadic block `I_m` containing `n`.
pub fn floor_lg(n: &Nat) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::Domain("floor_lg requires n >= 1"));
    }
    Ok(n.bits() - 1)
}

/// Number of set binary digits.
pub fn popcount(n: &Nat) -> u64 {
    n.count_ones()
}

/// Binary digits of a positive integer, lowest digit first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryDigits {
    digits: Vec<bool>,
}

impl BinaryDigits {
    /// `m = ⌊lg n⌋`; the digit at this index is always set.
    pub fn msb_index(&self) -> u64 {
        self.digits.len() as u64 - 1
    }

    /// `ε_k`, zero above the leading digit.
    pub fn digit(&self, k: u64) -> bool {
        self.digits.get(k as usize).copied().unwrap_or(false)
    }

    /// Digits `ε_0, ε_1, …, ε_m`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        self.digits.iter().copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.digits
    }

    /// The block `I_m` the source number belongs to.
    pub fn block(&self) -> IntervalIndex {
        IntervalIndex(self.msb_index())
    }

    /// `Σ ε_k 2^k`.
    pub fn reconstruct(&self) -> Nat {
        self.digits
            .iter()
            .rev()
            .fold(Nat::zero(), |acc, &d| (acc << 1u32) + u32::from(d))
    }
}

impl fmt::Display for BinaryDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in self.digits.iter().rev() {
            f.write_str(if d { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn to_digits(n: &Nat) -> Result<BinaryDigits> {
    let m = floor_lg(n).map_err(|_| Error::Domain("to_digits requires n >= 1"))?;
    Ok(BinaryDigits {
        digits: (0..=m).map(|k| n.bit(k)).collect(),
    })
}

/// `n̂`: keep the leading digit of `n`, complement every digit below it.
pub fn hat(n: &Nat) -> Result<Nat> {
    let m = floor_lg(n).map_err(|_| Error::Domain("hat requires n >= 1"))?;
    let mask = pow2(m) - 1u32;
    Ok(n ^ mask)
}

/// `ñ = 3·2^⌊lg n⌋ − 2 − n`, an involution of each block `I_m`.
///
/// The all-ones point `2^(m+1) − 1` is fixed: the formula would send it to
/// `2^m − 1`, outside the block. `g` vanishes at both.
pub fn tilde(n: &Nat) -> Result<Nat> {
    let m = floor_lg(n).map_err(|_| Error::Domain("tilde requires n >= 1"))?;
    if n.count_ones() == m + 1 {
        return Ok(n.clone());
    }
    Ok(pow2(m) * 3u32 - 2u32 - n)
}

/// Nearest integer to `2^m / 3`. Ties cannot occur.
pub fn round_pow2_over_3(m: u64) -> Nat {
    if m % 2 == 1 {
        (pow2(m) + 1u32) / 3u32
    } else {
        (pow2(m) - 1u32) / 3u32
    }
}

/// Index of the dyadic block `I_m = [2^m, 2^(m+1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalIndex(pub u64);

impl IntervalIndex {
    pub fn of(n: &Nat) -> Result<Self> {
        floor_lg(n).map(IntervalIndex)
    }

    pub fn m(self) -> u64 {
        self.0
    }

    /// Smallest element, `2^m`.
    pub fn first(self) -> Nat {
        pow2(self.0)
    }

    /// Largest element, `2^(m+1) − 1`.
    pub fn last(self) -> Nat {
        pow2(self.0 + 1) - 1u32
    }

    pub fn contains(self, n: &Nat) -> bool {
        !n.is_zero() && n.bits() - 1 == self.0
    }

    /// The block as a machine-word range; `None` once it no longer fits.
    pub fn as_u64_range(self) -> Option<Range<u64>> {
        if self.0 >= 63 {
            return None;
        }
        Some(1u64 << self.0..1u64 << (self.0 + 1))
    }
}

/// True when the reduced denominator has the form `2^k` or `3·2^k`.
pub fn is_dyadic_over_three(r: &ExactRational) -> bool {
    let mut d = r.denom().clone();
    if (&d % 3u32).is_zero() {
        d /= 3u32;
    }
    d.is_positive() && (d.magnitude() & (d.magnitude() - 1u32)).is_zero()
}

/// Parses a natural number written in decimal or, with a `0b` prefix, binary.
pub fn parse_nat(s: &str) -> Result<Nat> {
    let bad = || Error::Usage(format!("not a natural number: {s:?}"));
    let (digits, radix) = match s.strip_prefix("0b") {
        Some(rest) => (rest, 2),
        None => (s, 10),
    };
    if digits.is_empty() || !digits.chars().all(|c| c.is_digit(radix)) {
        return Err(bad());
    }
    Nat::parse_bytes(digits.as_bytes(), radix).ok_or_else(bad)
}

/// Parses `"p/q"` or `"p"` (optionally negative) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let bad = || Error::Usage(format!("not a rational of the form p/q: {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (p, q) = match body.split_once('/') {
        Some((p, q)) => (p, q),
        None => (body, "1"),
    };
    let decimal = |s: &str| -> Result<Nat> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        Nat::parse_bytes(s.as_bytes(), 10).ok_or_else(bad)
    };
    let p = decimal(p)?;
    let q = decimal(q)?;
    if q.is_zero() {
        return Err(Error::Usage(format!("zero denominator in {s:?}")));
    }
    let sign = if neg { Sign::Minus } else { Sign::Plus };
    Ok(ExactRational::new(
        BigInt::from_biguint(sign, p),
        BigInt::from(q),
    ))
}

/// Canonical `p/q` rendering; a unit denominator prints as a bare integer.
pub fn format_rational(r: &ExactRational) -> String {
    r.to_string()
}

/// Renders `value` with `sig` significant digits, rounding half to even.
pub fn to_decimal(value: &ExactRational, sig: usize) -> String {
    assert!(sig >= 1, "at least one significant digit");
    if value.is_zero() {
        return "0".to_string();
    }
    let neg = value.is_negative();
    let num = value.numer().magnitude().clone();
    let den = value.denom().magnitude().clone();
    let ten = Nat::from(10u32);

    // e = ⌊log10(num/den)⌋
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    let cmp_pow10 = |e: i64| -> Ordering {
        if e >= 0 {
            num.cmp(&(&den * ten.clone().pow(e as u64)))
        } else {
            (&num * ten.clone().pow((-e) as u64)).cmp(&den)
        }
    };
    while cmp_pow10(e) == Ordering::Less {
        e -= 1;
    }
    while cmp_pow10(e + 1) != Ordering::Less {
        e += 1;
    }

    let shift = sig as i64 - 1 - e;
    let (n, d) = if shift >= 0 {
        (&num * ten.clone().pow(shift as u64), den)
    } else {
        (num, den * ten.clone().pow((-shift) as u64))
    };
    let (mut q, r) = n.div_rem(&d);
    match (&r << 1u32).cmp(&d) {
        Ordering::Greater => q += 1u32,
        Ordering::Equal if q.is_odd() => q += 1u32,
        _ => {}
    }
    if q == ten.clone().pow(sig as u64) {
        q /= 10u32;
        e += 1;
    }

    let digits = q.to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let low_exp = e - (sig as i64 - 1);
    if low_exp >= 0 {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', low_exp as usize));
    } else if e >= 0 {
        let (int, frac) = digits.split_at(e as usize + 1);
        out.push_str(int);
        out.push('.');
        out.push_str(frac);
    } else {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-e - 1) as usize));
        out.push_str(&digits);
    }
    out
}

/// Lossy conversion for display and tolerance checks.
pub fn to_f64(r: &ExactRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Unreduced accumulator for values `num / (3·2^exp)`.
///
/// Every deviation and sum in this crate has a denominator of that shape, so
/// the digit loops run on shifts and integer adds and reduce once at the end.
#[derive(Clone, Debug, Default)]
pub(crate) struct Thirds {
    num: BigInt,
    exp: u64,
}

impl Thirds {
    pub(crate) fn zero() -> Self {
        Self::default()
    }

    /// `k / (3·2^exp)`.
    pub(crate) fn scaled(k: BigInt, exp: u64) -> Self {
        Thirds { num: k, exp }
    }

    /// Divides by two.
    pub(crate) fn halve(&mut self) {
        self.exp += 1;
    }

    /// Adds `k / 3`.
    pub(crate) fn add_third(&mut self, k: &BigInt) {
        self.num += k << self.exp;
    }

    pub(crate) fn add(&mut self, other: &Thirds) {
        match self.exp.cmp(&other.exp) {
            Ordering::Equal => self.num += &other.num,
            Ordering::Greater => self.num += &other.num << (self.exp - other.exp),
            Ordering::Less => {
                self.num <<= other.exp - self.exp;
                self.num += &other.num;
                self.exp = other.exp;
            }
        }
    }

    pub(crate) fn to_rational(&self) -> ExactRational {
        ExactRational::new(self.num.clone(), BigInt::from(3u32) << self.exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn floor_lg_examples() {
        assert_eq!(floor_lg(&n(1)).unwrap(), 0);
        assert_eq!(floor_lg(&n(7)).unwrap(), 2);
        assert_eq!(floor_lg(&pow2(100)).unwrap(), 100);
        assert!(matches!(floor_lg(&n(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn digits_examples() {
        let d = to_digits(&n(6)).unwrap();
        assert_eq!(d.as_slice(), &[false, true, true]);
        assert_eq!(d.msb_index(), 2);
        let d = to_digits(&n(1)).unwrap();
        assert_eq!(d.as_slice(), &[true]);
        assert_eq!(d.msb_index(), 0);
        let d = to_digits(&n(10)).unwrap();
        assert_eq!(d.as_slice(), &[false, true, false, true]);
        assert_eq!(d.msb_index(), 3);
        assert_eq!(d.to_string(), "1010");
        assert!(to_digits(&n(0)).is_err());
    }

    #[test]
    fn popcount_examples() {
        assert_eq!(popcount(&n(0)), 0);
        assert_eq!(popcount(&n(7)), 3);
        assert_eq!(popcount(&n(10)), 2);
    }

    #[test]
    fn hat_and_tilde_examples() {
        assert_eq!(hat(&n(6)).unwrap(), n(5));
        assert_eq!(hat(&n(7)).unwrap(), n(4));
        assert_eq!(hat(&n(4)).unwrap(), n(7));
        assert_eq!(hat(&n(1)).unwrap(), n(1));
        assert_eq!(tilde(&n(4)).unwrap(), n(6));
        assert_eq!(tilde(&n(5)).unwrap(), n(5));
        assert_eq!(tilde(&n(9)).unwrap(), n(13));
        assert_eq!(tilde(&n(1)).unwrap(), n(1));
        assert_eq!(tilde(&n(7)).unwrap(), n(7));
        assert_eq!(tilde(&n(6)).unwrap(), n(4));
        assert!(hat(&n(0)).is_err());
        assert!(tilde(&n(0)).is_err());
    }

    #[test]
    fn round_pow2_over_3_matches_nearest_integer() {
        assert_eq!(round_pow2_over_3(0), n(0));
        assert_eq!(round_pow2_over_3(2), n(1));
        assert_eq!(round_pow2_over_3(4), n(5));
        for m in 0..53u32 {
            let exact = (1u64 << m) as f64 / 3.0;
            assert_eq!(
                round_pow2_over_3(m as u64),
                n(exact.round() as u64),
                "m={m}"
            );
        }
    }

    #[test]
    fn blocks() {
        let b = IntervalIndex(3);
        assert_eq!(b.first(), n(8));
        assert_eq!(b.last(), n(15));
        assert!(b.contains(&n(8)) && b.contains(&n(15)));
        assert!(!b.contains(&n(16)) && !b.contains(&n(0)));
        assert_eq!(b.as_u64_range(), Some(8..16));
        assert_eq!(IntervalIndex::of(&n(100)).unwrap(), IntervalIndex(6));
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(format_rational(&ratio(11, 4)), "11/4");
        assert_eq!(format_rational(&ratio(6, 3)), "2");
        assert_eq!(format_rational(&ratio(-2, 6)), "-1/3");
        assert_eq!(parse_rational("22/8").unwrap(), ratio(11, 4));
        assert_eq!(parse_rational("-1/3").unwrap(), ratio(-1, 3));
        assert_eq!(parse_rational("7").unwrap(), ratio(7, 1));
        for bad in [
            "", "1/0", "a/2", "1//2", "1/2/3", "+1", " 1", "0b1/2", "1/-2",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn nat_text_form() {
        assert_eq!(parse_nat("10").unwrap(), n(10));
        assert_eq!(parse_nat("0b1010").unwrap(), n(10));
        assert_eq!(parse_nat("0").unwrap(), n(0));
        for bad in ["", "0b", "0b12", "-1", "1.5", "x"] {
            assert!(parse_nat(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn decimals_round_half_even() {
        assert_eq!(to_decimal(&ratio(3, 8), 12), "0.375000000000");
        assert_eq!(to_decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&ratio(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&ratio(1, 8), 2), "0.12");
        assert_eq!(to_decimal(&ratio(3, 8), 2), "0.38");
        assert_eq!(to_decimal(&ratio(-5, 2), 1), "-2");
        assert_eq!(to_decimal(&ratio(7, 2), 1), "4");
        assert_eq!(to_decimal(&ratio(349526, 1), 3), "350000");
        assert_eq!(to_decimal(&ratio(999, 1000), 2), "1.0");
        assert_eq!(to_decimal(&ratio(1, 1000), 3), "0.00100");
        assert_eq!(to_decimal(&ratio(123, 10), 5), "12.300");
        assert_eq!(to_decimal(&ratio(0, 1), 5), "0");
    }

    #[test]
    fn thirds_accumulator() {
        let mut t = Thirds::scaled(BigInt::from(1), 0);
        t.halve();
        t.add_third(&BigInt::from(1));
        assert_eq!(t.to_rational(), ratio(1, 2));
        let mut u = Thirds::zero();
        u.add(&t);
        u.halve();
        u.halve();
        u.add(&t);
        assert_eq!(u.to_rational(), ratio(5, 8));
        assert!(is_dyadic_over_three(&u.to_rational()));
        assert!(is_dyadic_over_three(&ratio(5, 24)));
        assert!(!is_dyadic_over_three(&ratio(1, 9)));
        assert!(!is_dyadic_over_three(&ratio(1, 5)));
    }
}
