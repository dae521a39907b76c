use hqcert::scalars::{is_q_admissible, q_number};
use hqcert::{DeformationParam, ExactScalar};
use proptest::prelude::*;

fn nonzero() -> impl Strategy<Value = ExactScalar> {
    (prop_oneof![-20i64..=-1, 1i64..=20], 1i64..=20).prop_map(|(a, b)| ExactScalar::new(a, b))
}

proptest! {
    #[test]
    fn q_number_is_symmetric(q in nonzero(), j in 1usize..8) {
        let inv = q.recip().unwrap();
        prop_assert_eq!(q_number(j, &q).unwrap(), q_number(j, &inv).unwrap());
    }

    #[test]
    fn q_number_closed_form(q in nonzero(), j in 1usize..8) {
        // (q - q^{-1}) j_q = q^j - q^{-j}
        let lhs = &(&q - &q.recip().unwrap()) * &q_number(j, &q).unwrap();
        prop_assert_eq!(lhs, &q.pow(j as i32) - &q.pow(-(j as i32)));
    }

    #[test]
    fn q_number_recursion(q in nonzero(), j in 1usize..8) {
        let p = DeformationParam::new(q.clone()).unwrap();
        let rhs = &(&q * &p.q_number(j)) + &q.pow(-(j as i32));
        prop_assert_eq!(p.q_number(j + 1), rhs);
    }

    #[test]
    fn rationals_are_always_admissible(q in nonzero(), j in 1usize..10) {
        prop_assert!(is_q_admissible(j, &q).unwrap());
    }

    #[test]
    fn display_parse_round_trip(x in nonzero()) {
        prop_assert_eq!(x.to_string().parse::<ExactScalar>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactScalar>(&json).unwrap(), x);
    }
}

#[test]
fn classical_q_numbers() {
    for j in 1..6 {
        assert_eq!(q_number(j, &ExactScalar::one()).unwrap(), ExactScalar::from(j as i64));
        let sign = if j % 2 == 1 { 1 } else { -1 };
        assert_eq!(q_number(j, &ExactScalar::from(-1)).unwrap(), ExactScalar::from(sign * j as i64));
    }
    assert_eq!(q_number(3, &ExactScalar::from(2)).unwrap(), ExactScalar::new(21, 4));
}

#[test]
fn parse_rejects_garbage() {
    for bad in ["", "1/0", "x", "1.5", "1/-2", "--3", "2/"] {
        assert!(bad.parse::<ExactScalar>().is_err(), "{bad:?}");
    }
    assert_eq!(" -6/4 ".parse::<ExactScalar>().unwrap(), ExactScalar::new(-3, 2));
    assert!(DeformationParam::new(ExactScalar::zero()).is_err());
}
