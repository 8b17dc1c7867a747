use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use oddsum::bitcore::{
    floor_lg, format_rational, hat, parse_nat, parse_rational, popcount, tilde, to_digits,
    ExactRational, IntervalIndex, Nat,
};
use oddsum::deviations::{
    dev_g, dev_u, dev_u_closed, dev_v, g_digits, g_from_sum, two_stage_g, u_from_sum, v_from_sum,
    v_recurrence,
};
use oddsum::sums::{g_fast, u_fast, v_fast};
use proptest::prelude::*;

fn big_nat() -> impl Strategy<Value = Nat> {
    prop::collection::vec(any::<u8>(), 1..48).prop_map(|bytes| Nat::from_bytes_le(&bytes) + 1u32)
}

fn rational() -> impl Strategy<Value = (i64, i64)> {
    (any::<i32>(), 1..i32::MAX).prop_map(|(p, q)| (i64::from(p), i64::from(q)))
}

fn q((p, d): (i64, i64)) -> ExactRational {
    ExactRational::new(BigInt::from(p), BigInt::from(d))
}

proptest! {
    #[test]
    fn hat_is_a_block_involution(n in big_nat()) {
        let h = hat(&n).unwrap();
        prop_assert_eq!(hat(&h).unwrap(), n.clone());
        prop_assert_eq!(IntervalIndex::of(&h).unwrap(), IntervalIndex::of(&n).unwrap());
        prop_assert_eq!(dev_v(&n) + dev_v(&h), ExactRational::new(2.into(), 3.into()));
    }

    #[test]
    fn tilde_is_a_block_involution(n in big_nat()) {
        let t = tilde(&n).unwrap();
        prop_assert_eq!(tilde(&t).unwrap(), n.clone());
        prop_assert!(IntervalIndex::of(&n).unwrap().contains(&t));
        prop_assert_eq!(dev_g(&t), dev_g(&n));
    }

    #[test]
    fn digits_reconstruct(n in big_nat()) {
        let d = to_digits(&n).unwrap();
        prop_assert_eq!(d.reconstruct(), n.clone());
        prop_assert_eq!(d.msb_index(), floor_lg(&n).unwrap());
        prop_assert_eq!(d.iter().filter(|&b| b).count() as u64, popcount(&n));
    }

    #[test]
    fn nat_text_round_trips(n in big_nat()) {
        prop_assert_eq!(parse_nat(&n.to_string()).unwrap(), n.clone());
        prop_assert_eq!(parse_nat(&format!("0b{}", n.to_str_radix(2))).unwrap(), n);
    }

    #[test]
    fn rational_arithmetic_matches_cross_multiplication(a in rational(), b in rational()) {
        let (x, y) = (q(a), q(b));
        let (p1, q1) = (BigInt::from(a.0), BigInt::from(a.1));
        let (p2, q2) = (BigInt::from(b.0), BigInt::from(b.1));
        prop_assert_eq!(&x + &y, ExactRational::new(&p1 * &q2 + &p2 * &q1, &q1 * &q2));
        prop_assert_eq!(&x - &y, ExactRational::new(&p1 * &q2 - &p2 * &q1, &q1 * &q2));
        prop_assert_eq!(&x * &y, ExactRational::new(&p1 * &p2, &q1 * &q2));
        prop_assert_eq!(x < y, &p1 * &q2 < &p2 * &q1);
        if !p2.is_zero() {
            let quotient = &x / &y;
            prop_assert!(quotient.denom().is_positive());
            prop_assert_eq!(quotient, ExactRational::new(&p1 * &q2, &q1 * &p2));
        }
        let sum = &x + &y;
        prop_assert_eq!(parse_rational(&format_rational(&sum)).unwrap(), sum);
    }

    #[test]
    fn v_routes_agree(n in big_nat()) {
        let v = dev_v(&n);
        prop_assert_eq!(v_recurrence(&n), v.clone());
        prop_assert_eq!(v_from_sum(&n), v);
    }

    #[test]
    fn u_routes_agree(n in big_nat()) {
        let u = dev_u(&n);
        prop_assert_eq!(dev_u_closed(&n), u.clone());
        prop_assert_eq!(u_from_sum(&n), u);
    }

    #[test]
    fn g_routes_agree(n in big_nat()) {
        let g = dev_g(&n);
        prop_assert_eq!(g_digits(&n), g.clone());
        prop_assert_eq!(g_from_sum(&n), g);
    }

    #[test]
    fn sums_identity(n in big_nat()) {
        let x = ExactRational::from_integer(BigInt::from(n.clone()));
        let u = ExactRational::from_integer(BigInt::from(u_fast(&n)));
        prop_assert_eq!(g_fast(&n), (x + ExactRational::one()) * v_fast(&n) - u);
    }

    #[test]
    fn two_stage_matches_direct(n in big_nat(), r in 0u8..4) {
        prop_assert_eq!(two_stage_g(&n, r).unwrap(), dev_g(&((&n << 2u32) + r)));
    }

    #[test]
    fn telescoping(n in big_nat()) {
        let m = floor_lg(&n).unwrap();
        let total = (0..=m).fold(dev_v(&n), |acc, p| acc + dev_v(&(&n >> p)));
        prop_assert_eq!(total, ExactRational::new(BigInt::from(2 * popcount(&n)), 3.into()));
    }

    #[test]
    fn g_is_bounded_by_theta(n in big_nat()) {
        let g = dev_g(&n);
        prop_assert!(!g.is_negative());
        prop_assert!(g <= oddsum::extremal::theta(&n).unwrap());
    }
}
