//! Registry of checkers, one per claim.
//!
//! A checker walks its configured range in ascending order, evaluates the
//! claim exactly at every case, and stops at the first failure. Identity-type
//! claims are additionally spot-checked at seeded random big arguments.
//!
//! Case sets per theorem (`N = max_n`, `T = random_big_trials`):
//!
//! | theorem | cases |
//! |---|---|
//! | P1B COR3 COR4 T5 L1 T2 P4B P5C COR5 COR8 ORACLE_UVG | `n ∈ [1, N]` |
//! | P2C P2D P6B EQ4_IDENTITY | `n ∈ [1, N]`, then `T` random `n` |
//! | EQL21 | `n ∈ [0, N)`, then `T` random `n` |
//! | L2 | `p ∈ [0, max_p] × r ∈ [0, max_r]` |
//! | COR6 | `p ∈ [1, max_p] × r ∈ [1, max_r]` |
//! | T3 | `n ∈ [1, min(N, 64)] × m ∈ [1, min(max_m, 12)]`, then `m ∈ [1, max_m]` for `Λ(1, m)` |
//! | COR7 | `m ∈ [0, max_m]` |
//! | P10 | `m ∈ [2, max_m]` |
//! | COR10 | `m ∈ [2, max_m]`, then `n ∈ [1, N]` |
//!
//! Checkers evaluate `V`, `U` and `G` through a [`SumEvaluator`], so a faulty
//! evaluator can be swapped in to show the checkers are not vacuous.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitcore::{
    floor_lg, hat, inv_pow2, nat_to_rational, popcount, pow2, ratio, tilde, ExactRational,
    IntervalIndex, Nat,
};
use crate::deviations::{
    dev_g, dev_u, dev_u_closed, dev_v, g_digits, h_eval, two_stage_g, v_recurrence,
};
use crate::error::{Error, Result};
use crate::extremal::{
    argmax_g, g_at_y, lambda_block, lambda_block_brute, lambda_m, lambda_m_rounded,
    lambda_one_even, lambda_one_odd, rounded_argmax, scan_block_max, skeleton, skeleton_argmax,
    theta, EqualityKind,
};
use crate::sums::{self, BruteLimits, BruteSums, SumKind};

/// Largest block base and block exponent covered by the brute `Λ` scan.
pub const T3_MAX_N: u64 = 64;
pub const T3_MAX_M: u64 = 12;

macro_rules! theorems {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Identifier of a checked claim.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant),*
        }

        impl TheoremId {
            /// All checkers, in run order.
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name),*
                }
            }
        }
    };
}

theorems! {
    P1B => "P1B",
    Cor3 => "COR3",
    Cor4 => "COR4",
    T5 => "T5",
    L1 => "L1",
    T2 => "T2",
    P4B => "P4B",
    P5C => "P5C",
    Cor5 => "COR5",
    P2C => "P2C",
    P2D => "P2D",
    P6B => "P6B",
    Eql21 => "EQL21",
    L2 => "L2",
    Cor6 => "COR6",
    T3 => "T3",
    Cor7 => "COR7",
    Cor8 => "COR8",
    P10 => "P10",
    Cor10 => "COR10",
    Eq4Identity => "EQ4_IDENTITY",
    OracleUvg => "ORACLE_UVG",
}

impl TheoremId {
    fn has_random_trials(self) -> bool {
        matches!(
            self,
            TheoremId::P2C
                | TheoremId::P2D
                | TheoremId::P6B
                | TheoremId::Eq4Identity
                | TheoremId::Eql21
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown theorem id {s:?}")))
    }
}

/// Ranges a checker covers. `max_n` is scanned exhaustively, so it is a
/// machine word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeConfig {
    pub max_n: u64,
    pub max_m: u64,
    pub max_r: u64,
    pub max_p: u64,
    pub random_big_trials: u64,
    pub random_bits: u64,
    pub seed: u64,
}

impl Default for RangeConfig {
    fn default() -> Self {
        RangeConfig {
            max_n: 1 << 16,
            max_m: 14,
            max_r: 8,
            max_p: 256,
            random_big_trials: 1000,
            random_bits: 256,
            seed: 0x0dd5_u64,
        }
    }
}

impl RangeConfig {
    pub fn validate(&self) -> Result<()> {
        let limits = [
            ("max_n", self.max_n),
            ("max_m", self.max_m),
            ("max_r", self.max_r),
            ("max_p", self.max_p),
            ("bits", self.random_bits),
        ];
        for (name, v) in limits {
            if v < 1 {
                return Err(Error::Usage(format!("{name} must be at least 1")));
            }
        }
        if self.max_m >= 62 {
            return Err(Error::Usage("max_m must be below 62".into()));
        }
        Ok(())
    }

    fn render(&self) -> String {
        format!(
            "max_n={} max_m={} max_r={} max_p={} trials={} bits={} seed={}",
            self.max_n,
            self.max_m,
            self.max_r,
            self.max_p,
            self.random_big_trials,
            self.random_bits,
            self.seed
        )
    }
}

/// One input of a checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Case {
    N(Nat),
    Block(u64),
    PR {
        p: u64,
        r: u64,
    },
    NM {
        n: u64,
        m: u64,
    },
    /// `Λ(1, m)` against its one-variable closed form.
    LambdaOne(u64),
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::N(n) => write!(f, "n:{n}"),
            Case::Block(m) => write!(f, "m:{m}"),
            Case::PR { p, r } => write!(f, "p:{p},r:{r}"),
            Case::NM { n, m } => write!(f, "n:{n},m:{m}"),
            Case::LambdaOne(m) => write!(f, "lambda1,m:{m}"),
        }
    }
}

/// How `actual` must relate to `expected` for the claim to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Eq => "eq",
            Relation::Ne => "ne",
            Relation::Lt => "lt",
            Relation::Le => "le",
            Relation::Gt => "gt",
            Relation::Ge => "ge",
        }
    }
}

/// First failing case of a checker, with every value serialized exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub case: Case,
    pub claim: &'static str,
    pub relation: Relation,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub range: RangeConfig,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub checked_count: u64,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One-line `key=value` record. Timing is left out so records are
    /// byte-identical across runs.
    pub fn to_record(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        let mut line = format!(
            "theorem={} status={} checked={} {}",
            self.theorem,
            status,
            self.checked_count,
            self.range.render()
        );
        if let Some(cx) = &self.counterexample {
            line.push_str(&format!(
                " case={} claim={} relation={} expected={} actual={}",
                cx.case,
                cx.claim,
                cx.relation.name(),
                cx.expected,
                cx.actual
            ));
        }
        line
    }
}

/// Source of `V`, `U` and `G` values for the checkers.
pub trait SumEvaluator {
    fn v(&self, n: &Nat) -> ExactRational;
    fn u(&self, n: &Nat) -> Nat;
    fn g(&self, n: &Nat) -> ExactRational;
}

/// The digit-driven evaluators from [`crate::sums`].
#[derive(Clone, Copy, Debug, Default)]
pub struct FastSums;

impl SumEvaluator for FastSums {
    fn v(&self, n: &Nat) -> ExactRational {
        sums::v_fast(n)
    }
    fn u(&self, n: &Nat) -> Nat {
        sums::u_fast(n)
    }
    fn g(&self, n: &Nat) -> ExactRational {
        sums::g_fast(n)
    }
}

/// Shifts one sum by `delta` at a single argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub kind: SumKind,
    pub at: Nat,
    pub delta: i64,
}

/// Wraps an evaluator and applies a [`Fault`]; for harness self-tests.
#[derive(Clone, Debug)]
pub struct FaultInjected<E> {
    pub inner: E,
    pub fault: Fault,
}

impl<E: SumEvaluator> FaultInjected<E> {
    fn hits(&self, kind: SumKind, n: &Nat) -> bool {
        self.fault.kind == kind && &self.fault.at == n
    }
}

impl<E: SumEvaluator> SumEvaluator for FaultInjected<E> {
    fn v(&self, n: &Nat) -> ExactRational {
        let v = self.inner.v(n);
        if self.hits(SumKind::V, n) {
            v + BigInt::from(self.fault.delta)
        } else {
            v
        }
    }
    fn u(&self, n: &Nat) -> Nat {
        let u = self.inner.u(n);
        if self.hits(SumKind::U, n) {
            let shifted = BigInt::from(u) + self.fault.delta;
            shifted.to_biguint().unwrap_or_default()
        } else {
            u
        }
    }
    fn g(&self, n: &Nat) -> ExactRational {
        let g = self.inner.g(n);
        if self.hits(SumKind::G, n) {
            g + BigInt::from(self.fault.delta)
        } else {
            g
        }
    }
}

/// Runs one checker with the fast evaluators.
pub fn check(theorem: TheoremId, range: &RangeConfig) -> VerifyReport {
    check_with(theorem, range, &FastSums)
}

/// Runs one checker with the given evaluator.
pub fn check_with(
    theorem: TheoremId,
    range: &RangeConfig,
    eval: &dyn SumEvaluator,
) -> VerifyReport {
    let start = Instant::now();
    let mut ctx = Ctx::new(eval);
    let mut checked = 0u64;
    let mut counterexample = None;
    for case in cases(theorem, range) {
        checked += 1;
        if let Err(fail) = check_case(theorem, &case, &mut ctx) {
            counterexample = Some(fail.into_counterexample(case));
            break;
        }
    }
    VerifyReport {
        theorem,
        range: *range,
        status: if counterexample.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        counterexample,
        checked_count: checked,
        elapsed: start.elapsed(),
    }
}

/// Re-evaluates a single case, returning the failure if it still fails.
pub fn recheck(theorem: TheoremId, case: &Case, eval: &dyn SumEvaluator) -> Option<Counterexample> {
    let mut ctx = Ctx::new(eval);
    check_case(theorem, case, &mut ctx)
        .err()
        .map(|f| f.into_counterexample(case.clone()))
}

/// Every checker in [`TheoremId::ALL`] order.
pub fn run_all(range: &RangeConfig) -> Vec<VerifyReport> {
    run_all_with(range, &FastSums)
}

pub fn run_all_with(range: &RangeConfig, eval: &dyn SumEvaluator) -> Vec<VerifyReport> {
    TheoremId::ALL
        .iter()
        .map(|&t| check_with(t, range, eval))
        .collect()
}

/// The ordered case list of a checker.
pub fn cases(theorem: TheoremId, range: &RangeConfig) -> Box<dyn Iterator<Item = Case>> {
    use TheoremId::*;
    let range = *range;
    let ns = move |lo: u64, hi: u64| (lo..=hi).map(|n| Case::N(Nat::from(n)));
    let scan: Box<dyn Iterator<Item = Case>> = match theorem {
        Eql21 => Box::new(ns(0, range.max_n - 1)),
        L2 => Box::new(
            (0..=range.max_p).flat_map(move |p| (0..=range.max_r).map(move |r| Case::PR { p, r })),
        ),
        Cor6 => Box::new(
            (1..=range.max_p).flat_map(move |p| (1..=range.max_r).map(move |r| Case::PR { p, r })),
        ),
        T3 => {
            let top_n = range.max_n.min(T3_MAX_N);
            let top_m = range.max_m.min(T3_MAX_M);
            Box::new(
                (1..=top_n)
                    .flat_map(move |n| (1..=top_m).map(move |m| Case::NM { n, m }))
                    .chain((1..=range.max_m).map(Case::LambdaOne)),
            )
        }
        Cor7 => Box::new((0..=range.max_m).map(Case::Block)),
        P10 => Box::new((2..=range.max_m).map(Case::Block)),
        Cor10 => Box::new((2..=range.max_m).map(Case::Block).chain(ns(1, range.max_n))),
        _ => Box::new(ns(1, range.max_n)),
    };
    if theorem.has_random_trials() {
        Box::new(scan.chain(random_nats(&range).map(Case::N)))
    } else {
        scan
    }
}

/// `random_big_trials` numbers of exactly `random_bits` bits.
pub fn random_nats(range: &RangeConfig) -> impl Iterator<Item = Nat> {
    let mut rng = ChaCha8Rng::seed_from_u64(range.seed);
    let bits = range.random_bits;
    let bytes = bits.div_ceil(8) as usize;
    (0..range.random_big_trials).map(move |_| {
        let mut buf = vec![0u8; bytes];
        rng.fill_bytes(&mut buf);
        let raw = Nat::from_bytes_le(&buf);
        (raw % pow2(bits - 1)) | pow2(bits - 1)
    })
}

struct Ctx<'a> {
    eval: &'a dyn SumEvaluator,
    brute: BruteSums,
}

impl<'a> Ctx<'a> {
    fn new(eval: &'a dyn SumEvaluator) -> Self {
        Ctx {
            eval,
            brute: BruteSums::new(),
        }
    }
}

struct Failure {
    claim: &'static str,
    relation: Relation,
    expected: String,
    actual: String,
}

impl Failure {
    fn into_counterexample(self, case: Case) -> Counterexample {
        Counterexample {
            case,
            claim: self.claim,
            relation: self.relation,
            expected: self.expected,
            actual: self.actual,
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Requires `actual <relation> expected`.
fn require<T: Ord + fmt::Display>(
    claim: &'static str,
    actual: &T,
    relation: Relation,
    expected: &T,
) -> Outcome {
    let ok = match relation {
        Relation::Eq => actual == expected,
        Relation::Ne => actual != expected,
        Relation::Lt => actual < expected,
        Relation::Le => actual <= expected,
        Relation::Gt => actual > expected,
        Relation::Ge => actual >= expected,
    };
    if ok {
        Ok(())
    } else {
        Err(Failure {
            claim,
            relation,
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

/// Requires `actual = bound` exactly when `witness` holds.
fn equality_iff<T: Ord + fmt::Display>(
    claim: &'static str,
    actual: &T,
    bound: &T,
    witness: bool,
) -> Outcome {
    let relation = if witness { Relation::Eq } else { Relation::Ne };
    require(claim, actual, relation, bound)
}

fn is_pow2(n: &Nat) -> bool {
    !n.is_zero() && n.count_ones() == 1
}

fn q(n: &Nat) -> ExactRational {
    nat_to_rational(n)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn thirds(x: ExactRational) -> ExactRational {
    x / BigInt::from(3u32)
}

fn check_case(theorem: TheoremId, case: &Case, ctx: &mut Ctx<'_>) -> Outcome {
    use TheoremId::*;
    match (theorem, case) {
        (P1B, Case::N(n)) => check_p1b(n, ctx),
        (Cor3, Case::N(n)) => check_cor3(n),
        (Cor4, Case::N(n)) => check_cor4(n),
        (T5, Case::N(n)) => check_t5(n, ctx),
        (L1, Case::N(n)) => check_l1(n),
        (T2, Case::N(n)) => check_t2(n, ctx),
        (P4B, Case::N(n)) => check_p4b(n, ctx),
        (P5C, Case::N(n)) => check_p5c(n, ctx),
        (Cor5, Case::N(n)) => check_cor5(n, ctx),
        (P2C, Case::N(n)) => check_p2c(n, ctx),
        (P2D, Case::N(n)) => check_p2d(n),
        (P6B, Case::N(n)) => check_p6b(n),
        (Eql21, Case::N(n)) => check_eql21(n),
        (L2, Case::PR { p, r }) => check_l2(*p, *r),
        (Cor6, Case::PR { p, r }) => check_cor6(*p, *r),
        (T3, Case::NM { n, m }) => check_t3_block(*n, *m),
        (T3, Case::LambdaOne(m)) => check_t3_single(*m),
        (Cor7, Case::Block(m)) => check_cor7(*m),
        (Cor8, Case::N(n)) => check_cor8(n, ctx),
        (P10, Case::Block(m)) => check_p10(*m),
        (Cor10, Case::Block(m)) => check_cor10_points(*m),
        (Cor10, Case::N(n)) => check_cor10_set(n, ctx),
        (Eq4Identity, Case::N(n)) => check_eq4(n, ctx),
        (OracleUvg, Case::N(n)) => check_oracle(n, ctx),
        _ => Err(Failure {
            claim: "case-kind",
            relation: Relation::Eq,
            expected: format!("a case accepted by {theorem}"),
            actual: case.to_string(),
        }),
    }
}

fn check_p1b(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let big_v = ctx.eval.v(n);
    let two_n = q(n) * BigInt::from(2);
    require("p1b.lower", &big_v, Relation::Gt, &thirds(two_n.clone()))?;
    require("p1b.upper", &big_v, Relation::Lt, &thirds(two_n + int(2)))?;
    let half = &big_v / BigInt::from(2);
    let even = ctx.eval.v(&(n << 1u32));
    require("p1a.even", &even, Relation::Eq, &(q(n) + &half))?;
    let odd = ctx.eval.v(&((n << 1u32) + 1u32));
    require("p1a.odd", &odd, Relation::Eq, &(q(n) + int(1) + half))
}

fn check_cor3(n: &Nat) -> Outcome {
    let odd = dev_v(&((n << 1u32) + 1u32));
    let even = dev_v(&(n << 1u32));
    require("cor3.odd-lower", &odd, Relation::Gt, &ratio(1, 3))?;
    require("cor3.odd-upper", &odd, Relation::Lt, &ratio(2, 3))?;
    require("cor3.even-lower", &even, Relation::Gt, &ratio(0, 1))?;
    require("cor3.even-upper", &even, Relation::Lt, &ratio(1, 3))
}

fn check_cor4(n: &Nat) -> Outcome {
    let m = floor_lg(n).expect("n >= 1");
    let v = dev_v(n);
    let lower = thirds(inv_pow2(m));
    let upper = ratio(2, 3)
        - (ExactRational::from_integer(BigInt::from(2)) - inv_pow2(m)) / (q(n) * BigInt::from(3));
    require("cor4.lower", &v, Relation::Ge, &lower)?;
    require("cor4.upper", &v, Relation::Le, &upper)?;
    equality_iff("cor4.lower-equality", &v, &lower, *n == pow2(m))?;
    equality_iff("cor4.upper-equality", &v, &upper, *n == pow2(m + 1) - 1u32)
}

fn check_t5(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let big_v = ctx.eval.v(n);
    let x = q(n);
    let lower = (&x * &x * int(2) + int(1)) / (&x * int(3));
    let upper = &x * (&x + int(2)) * int(2) / ((&x + int(1)) * int(3));
    require("t5.lower", &big_v, Relation::Ge, &lower)?;
    require("t5.upper", &big_v, Relation::Le, &upper)?;
    equality_iff("t5.lower-equality", &big_v, &lower, is_pow2(n))?;
    equality_iff("t5.upper-equality", &big_v, &upper, is_pow2(&(n + 1u32)))
}

fn check_l1(n: &Nat) -> Outcome {
    let m = floor_lg(n).expect("n >= 1");
    let h = h_eval(n).expect("n >= 1");
    let top = n - 1u32;
    require("l1.upper", &h, Relation::Le, &top)?;
    equality_iff("l1.zero", &h, &Nat::zero(), *n == pow2(m + 1) - 1u32)?;
    equality_iff("l1.top", &h, &top, *n == pow2(m))
}

fn check_t2(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let big_u = q(&ctx.eval.u(n));
    let x = q(n);
    let sq = &x * &x;
    if !n.bit(0) {
        let lower = thirds(&sq + int(2));
        let upper = thirds(&sq + &x);
        require("t2.even-lower", &big_u, Relation::Ge, &lower)?;
        require("t2.even-upper", &big_u, Relation::Le, &upper)?;
        equality_iff("t2.even-lower-equality", &big_u, &lower, is_pow2(n))?;
        equality_iff(
            "t2.even-upper-equality",
            &big_u,
            &upper,
            is_pow2(&(n + 2u32)),
        )?;
    } else {
        let printed = thirds(&sq + &x + int(1));
        let upper = thirds(&sq + &x * BigInt::from(2));
        require("t2.odd-lower", &big_u, Relation::Ge, &printed)?;
        require("t2.odd-upper", &big_u, Relation::Le, &upper)?;
        equality_iff(
            "t2.odd-upper-equality",
            &big_u,
            &upper,
            is_pow2(&(n + 1u32)),
        )?;
        if *n >= Nat::from(3u32) {
            // sharp odd bound: h(⌊n/2⌋) ≤ ⌊n/2⌋ − 1 gives U(n) ≥ (n²+n+3)/3
            let sharp = thirds(&sq + &x + int(3));
            require("t2.odd-lower-sharp", &big_u, Relation::Ge, &sharp)?;
            equality_iff(
                "t2.odd-lower-equality",
                &big_u,
                &sharp,
                is_pow2(&(n - 1u32)),
            )?;
        }
    }
    let from_sum = thirds(&sq + &x) - &big_u;
    let recurrence = dev_u(n);
    require("t2.u-recurrence", &recurrence, Relation::Eq, &from_sum)?;
    require("t2.u-closed", &dev_u_closed(n), Relation::Eq, &from_sum)
}

fn check_p4b(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let big_g = ctx.eval.g(n);
    let x = q(n);
    let lower = thirds(&x * (&x + ratio(7, 4)));
    let upper = thirds(&x * (&x + int(2)));
    require("p4b.lower", &big_g, Relation::Ge, &lower)?;
    require("p4b.upper", &big_g, Relation::Le, &upper)
}

fn g_via(n: &Nat, ctx: &Ctx<'_>) -> ExactRational {
    let x = q(n);
    thirds(&x * (&x + int(2))) - ctx.eval.g(n)
}

fn check_p5c(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let m = floor_lg(n).expect("n >= 1");
    let g = dev_g(n);
    require("p5b.digits", &g_digits(n), Relation::Eq, &g)?;
    require("p5.from-sum", &g_via(n, ctx), Relation::Eq, &g)?;
    let half_v = dev_v(n) / BigInt::from(2);
    require(
        "p5a.even",
        &dev_g(&(n << 1u32)),
        Relation::Eq,
        &(&g + half_v),
    )?;
    require("p5a.odd", &dev_g(&((n << 1u32) + 1u32)), Relation::Eq, &g)?;
    require("p5c.lower", &g, Relation::Ge, &ExactRational::zero())?;
    require("p5c.upper", &g, Relation::Le, &ratio(m as i64, 3))
}

fn check_cor5(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let g = g_via(n, ctx);
    equality_iff(
        "cor5.zero-set",
        &g,
        &ExactRational::zero(),
        is_pow2(&(n + 1u32)),
    )
}

fn check_p2c(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let v = dev_v(n);
    require("p2a.recurrence", &v_recurrence(n), Relation::Eq, &v)?;
    let from_sum = ctx.eval.v(n) - q(n) * ratio(2, 3);
    require("p2b.from-sum", &from_sum, Relation::Eq, &v)?;
    let m = floor_lg(n).expect("n >= 1");
    let total = (0..=m).fold(v.clone(), |acc, p| acc + dev_v(&(n >> p)));
    let expected = ratio(2, 3) * BigInt::from(popcount(n));
    require("p2c.telescoping", &total, Relation::Eq, &expected)
}

fn check_p2d(n: &Nat) -> Outcome {
    let m = IntervalIndex::of(n).expect("n >= 1");
    let h = hat(n).expect("n >= 1");
    require(
        "p2d.block",
        &IntervalIndex::of(&h).expect("hat(n) >= 1").m(),
        Relation::Eq,
        &m.m(),
    )?;
    require(
        "p2d.involution",
        &hat(&h).expect("hat(n) >= 1"),
        Relation::Eq,
        n,
    )?;
    require(
        "p2d.symmetry",
        &(dev_v(n) + dev_v(&h)),
        Relation::Eq,
        &ratio(2, 3),
    )
}

fn check_p6b(n: &Nat) -> Outcome {
    let m = IntervalIndex::of(n).expect("n >= 1");
    let t = tilde(n).expect("n >= 1");
    require(
        "p6b.block",
        &IntervalIndex::of(&t).expect("tilde(n) >= 1").m(),
        Relation::Eq,
        &m.m(),
    )?;
    require(
        "p6b.involution",
        &tilde(&t).expect("tilde(n) >= 1"),
        Relation::Eq,
        n,
    )?;
    require("p6b.symmetry", &dev_g(&t), Relation::Eq, &dev_g(n))
}

fn check_eql21(n: &Nat) -> Outcome {
    const CLAIMS: [&str; 4] = ["eql21.r0", "eql21.r1", "eql21.r2", "eql21.r3"];
    for (residue, claim) in (0u8..4).zip(CLAIMS) {
        let direct = dev_g(&((n << 2u32) + residue));
        let staged = two_stage_g(n, residue).expect("residue in range");
        require(claim, &staged, Relation::Eq, &direct)?;
    }
    Ok(())
}

fn check_l2(p: u64, r: u64) -> Outcome {
    let p = Nat::from(p);
    let v = dev_v(&p);
    let third = ratio(1, 3);
    let (s, s1) = (skeleton(r), skeleton(r + 1));

    let base = &p << (2 * r + 2);
    let lhs = dev_g(&(&base + &s1.x)) - dev_g(&(&base + &s.y));
    let rhs = thirds(ExactRational::one() + inv_pow2(2 * r + 1)) * (&third - &v);
    require("l2.first", &lhs, Relation::Eq, &rhs)?;

    let base = &p << (2 * r + 1);
    let lhs = dev_g(&(&base + &s.x)) - dev_g(&(&base + &s.y));
    let rhs = thirds(ExactRational::one() - inv_pow2(2 * r)) * (&v - &third);
    require("l2.second", &lhs, Relation::Eq, &rhs)?;

    if p.is_zero() {
        require("l2.g-at-y", &dev_g(&s.y), Relation::Eq, &g_at_y(r))?;
    }
    Ok(())
}

fn check_cor6(p: u64, r: u64) -> Outcome {
    let p = Nat::from(p);
    let (prev, s, next) = (skeleton(r - 1), skeleton(r), skeleton(r + 1));
    let g = |x: Nat| dev_g(&x);

    let base = &p << (2 * r + 2);
    let mid = pow2(2 * r + 1);
    require(
        "cor6.first",
        &g(&base + &s.x),
        Relation::Lt,
        &g(&base + &s.y),
    )?;
    require(
        "cor6.second",
        &g(&base + &mid + &s.y),
        Relation::Lt,
        &g(&base + &next.x),
    )?;

    let base = &p << (2 * r + 1);
    let mid = pow2(2 * r);
    require(
        "cor6.third",
        &g(&base + &prev.y),
        Relation::Lt,
        &g(&base + &s.x),
    )?;
    require(
        "cor6.fourth",
        &g(&base + &mid + &s.x),
        Relation::Lt,
        &g(&base + &s.y),
    )
}

fn check_t3_block(n: u64, m: u64) -> Outcome {
    let n = Nat::from(n);
    let closed = lambda_block(&n, m).expect("n, m >= 1");
    let brute = lambda_block_brute(&n, m, &BruteLimits::default()).expect("small block");
    require("t3.block-max", &closed, Relation::Eq, &brute)
}

fn check_t3_single(m: u64) -> Outcome {
    let closed = lambda_block(&Nat::one(), m).expect("m >= 1");
    let k = m.div_ceil(2);
    let formula = if m % 2 == 1 {
        lambda_one_odd(k)
    } else {
        lambda_one_even(k)
    };
    require("t3.lambda-one", &closed, Relation::Eq, &formula)
}

fn check_cor7(m: u64) -> Outcome {
    let range = IntervalIndex(m).as_u64_range().expect("validated max_m");
    let (scanned, _) = scan_block_max(range).expect("nonempty block");
    let envelope = lambda_m(m);
    require("cor7.scan", &scanned, Relation::Eq, &envelope)?;
    require(
        "cor7.rounded",
        &lambda_m_rounded(m),
        Relation::Eq,
        &envelope,
    )?;
    if m >= 1 {
        let block = lambda_block(&Nat::one(), m).expect("m >= 1");
        require("cor7.lambda-one", &block, Relation::Eq, &envelope)?;
    }
    Ok(())
}

fn check_cor8(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let m = floor_lg(n).expect("n >= 1");
    let g = g_via(n, ctx);
    let th = theta(n).expect("n >= 1");
    require("cor8.lower", &g, Relation::Ge, &ExactRational::zero())?;
    require("cor8.theta", &g, Relation::Le, &th)?;
    require(
        "cor8.envelope",
        &th,
        Relation::Le,
        &(ratio(m as i64, 9) + ratio(1, 18)),
    )?;
    require("cor8.lambda", &th, Relation::Eq, &lambda_m(m))
}

fn render_points(points: &[u64]) -> String {
    let parts: Vec<String> = points.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(";"))
}

fn render_nats<'a>(points: impl IntoIterator<Item = &'a Nat>) -> String {
    let parts: Vec<String> = points.into_iter().map(Nat::to_string).collect();
    format!("{{{}}}", parts.join(";"))
}

fn check_p10(m: u64) -> Outcome {
    let block = IntervalIndex(m);
    let range = block.as_u64_range().expect("validated max_m");
    let report = argmax_g(m);

    let (max_value, max_points) = scan_block_max(range.clone()).expect("nonempty block");
    require("p10.max-value", &max_value, Relation::Eq, &report.max_value)?;
    let claimed = render_nats(&report.max_points);
    require(
        "p10.max-points",
        &render_points(&max_points),
        Relation::Eq,
        &claimed,
    )?;

    let zeros: Vec<u64> = range.filter(|&t| dev_g(&Nat::from(t)).is_zero()).collect();
    require(
        "p10.min-points",
        &render_points(&zeros),
        Relation::Eq,
        &render_nats(&report.min_points),
    )
}

fn check_cor10_points(m: u64) -> Outcome {
    let (a, b) = skeleton_argmax(m);
    let (c, d) = rounded_argmax(m);
    let mut skel = vec![a, b];
    let mut rounded = vec![c, d];
    skel.sort();
    rounded.sort();
    require(
        "cor10.two-forms",
        &render_nats(&skel),
        Relation::Eq,
        &render_nats(&rounded),
    )
}

fn check_cor10_set(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let m = floor_lg(n).expect("n >= 1");
    let member = EqualityKind::GTheta.members_in_block(m).contains(n);
    let th = theta(n).expect("n >= 1");
    equality_iff("cor10.theta-set", &g_via(n, ctx), &th, member)
}

fn check_eq4(n: &Nat, ctx: &Ctx<'_>) -> Outcome {
    let via = (q(n) + int(1)) * ctx.eval.v(n) - q(&ctx.eval.u(n));
    require("eq4.identity", &ctx.eval.g(n), Relation::Eq, &via)
}

fn check_oracle(n: &Nat, ctx: &mut Ctx<'_>) -> Outcome {
    let target = u64::try_from(n).expect("scan range fits a machine word");
    let row = ctx.brute.seek(target).clone();
    require("oracle.v", &ctx.eval.v(n), Relation::Eq, &row.v)?;
    require("oracle.u", &ctx.eval.u(n), Relation::Eq, &row.u)?;
    require("oracle.g", &ctx.eval.g(n), Relation::Eq, &row.g)
}
