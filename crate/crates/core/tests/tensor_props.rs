mod common;

use hqcert::tensor::{decode, encode};
use hqcert::{ExactScalar, TensorOp};
use proptest::prelude::*;

fn op(dim: usize, legs: usize) -> impl Strategy<Value = TensorOp> {
    let size = dim.pow(legs as u32);
    prop::collection::vec((-4i64..=4, 1i64..=3), size * size).prop_map(move |v| {
        let entries = v.into_iter().map(|(a, b)| ExactScalar::new(a, b)).collect();
        TensorOp::from_entries(dim, legs, entries).unwrap()
    })
}

/// `Id ⊗ … ⊗ X ⊗ … ⊗ Id` by direct indexing.
fn embed_ref(x: &TensorOp, at: usize, total: usize) -> TensorOp {
    let n = x.dim();
    let size = n.pow(total as u32);
    let span = at - 1..at - 1 + x.legs();
    let mut out = TensorOp::zeros(n, total);
    for r in 0..size {
        let rd = decode(r, n, total);
        for c in 0..size {
            let cd = decode(c, n, total);
            let outside_equal = (0..total).filter(|i| !span.contains(i)).all(|i| rd[i] == cd[i]);
            if outside_equal {
                let v = x.get(encode(&rd[span.clone()], n), encode(&cd[span.clone()], n));
                out.set(r, c, v.clone());
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compose_matches_reference(a in op(2, 2), b in op(2, 2)) {
        prop_assert_eq!(a.compose(&b).unwrap(), common::matmul(&a, &b));
    }

    #[test]
    fn compose_is_associative(a in op(2, 1), b in op(2, 1), c in op(2, 1)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn embed_matches_reference(x in op(2, 1), y in op(2, 2)) {
        for at in 1..=3 {
            prop_assert_eq!(x.embed(at, 3).unwrap(), embed_ref(&x, at, 3));
        }
        for at in 1..=2 {
            prop_assert_eq!(y.embed(at, 3).unwrap(), embed_ref(&y, at, 3));
        }
        prop_assert_eq!(y.shift_up(1), embed_ref(&y, 2, 3));
    }

    #[test]
    fn kron_mixed_product(a in op(2, 1), b in op(2, 1), c in op(2, 1), d in op(2, 1)) {
        let lhs = a.kron(&b).unwrap().compose(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_trace_matches_reference(x in op(2, 3)) {
        let id = TensorOp::identity(2, 1);
        prop_assert_eq!(x.partial_trace(&[2, 3]).unwrap(), common::ftrace_keep_first(&id, &x));
        prop_assert_eq!(x.partial_trace(&[1, 2, 3]).unwrap().as_scalar().cloned().unwrap(), x.trace());
    }

    #[test]
    fn partial_trace_of_product_state(a in op(2, 1), b in op(2, 1)) {
        let t = a.kron(&b).unwrap().partial_trace(&[2]).unwrap();
        prop_assert_eq!(t, a.scale(&b.trace()));
        let t = a.kron(&b).unwrap().partial_trace(&[1]).unwrap();
        prop_assert_eq!(t, b.scale(&a.trace()));
    }

    #[test]
    fn trace_is_cyclic(a in op(3, 1), b in op(3, 1)) {
        prop_assert_eq!(a.compose(&b).unwrap().trace(), b.compose(&a).unwrap().trace());
    }

    #[test]
    fn json_round_trip(x in op(2, 2)) {
        prop_assert_eq!(TensorOp::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn inverse_when_invertible(x in op(2, 1)) {
        match x.inverse() {
            Some(inv) => prop_assert_eq!(x.compose(&inv).unwrap(), TensorOp::identity(2, 1)),
            None => prop_assert!(x.rank() < 2),
        }
    }
}

#[test]
fn permutation_swaps_legs() {
    let p = TensorOp::permutation_p(3);
    let a = TensorOp::from_fn(3, 1, |r, c| ExactScalar::from((3 * r[0] + c[0]) as i64));
    let b = TensorOp::from_fn(3, 1, |r, c| ExactScalar::from((r[0] * c[0] + 1) as i64));
    let ab = a.kron(&b).unwrap();
    let ba = b.kron(&a).unwrap();
    assert_eq!(p.compose(&ab).unwrap().compose(&p).unwrap(), ba);
    assert_eq!(p.compose(&p).unwrap(), TensorOp::identity(3, 2));
}

#[test]
fn malformed_operators_rejected() {
    assert!(TensorOp::from_entries(2, 2, vec![ExactScalar::one(); 15]).is_err());
    assert!(TensorOp::from_json(r#"{"n":2,"legs":1,"entries":["1","2","3"]}"#).is_err());
    assert!(TensorOp::identity(2, 2).embed(2, 2).is_err());
    assert!(TensorOp::identity(2, 1).compose(&TensorOp::identity(2, 2)).is_err());
}
