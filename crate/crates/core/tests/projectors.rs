mod common;

use hqcert::projectors::{
    antisymmetrizer, check_absorption, classical_projector, recursion_step, symmetrizer, ProjectorKind,
};
use hqcert::rmatrix::dj_rmatrix;
use hqcert::{DeformationParam, ExactScalar, TensorOp};

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn setup(n: usize, q: ExactScalar) -> (TensorOp, DeformationParam) {
    let q = DeformationParam::new(q).unwrap();
    (dj_rmatrix(n, &q, None).unwrap(), q)
}

#[test]
fn recursion_forms_agree() {
    for n in [2, 3] {
        let (r, q) = setup(n, ExactScalar::from(2));
        for kind in [ProjectorKind::Antisymmetrizer, ProjectorKind::Symmetrizer] {
            let mut x = TensorOp::identity(n, 1);
            for k in 1..4 {
                let right = recursion_step(&r, &q, &x, k, kind, false).unwrap();
                let left = recursion_step(&r, &q, &x, k, kind, true).unwrap();
                assert_eq!(right, left, "n={n} k={k} {kind:?}");
                x = right.scale(&q.q_number(k + 1).recip().unwrap());
            }
        }
    }
}

#[test]
fn ranks_are_binomial() {
    for n in [2, 3] {
        let (r, q) = setup(n, ExactScalar::new(3, 2));
        for k in 1..=4 {
            let a = antisymmetrizer(&r, &q, k).unwrap();
            let s = symmetrizer(&r, &q, k).unwrap();
            assert_eq!(a.rank(), binomial(n, k));
            assert_eq!(s.rank(), binomial(n + k - 1, k));
            assert_eq!(common::matmul(&a, &a), a);
            assert_eq!(common::matmul(&s, &s), s);
            if k >= 2 {
                assert!(common::matmul(&a, &s).is_zero());
            }
            assert!(check_absorption(&r, &q, &a, ProjectorKind::Antisymmetrizer).unwrap());
            assert!(check_absorption(&r, &q, &s, ProjectorKind::Symmetrizer).unwrap());
        }
    }
}

#[test]
fn absorption_detects_wrong_kind() {
    let (r, q) = setup(2, ExactScalar::from(2));
    let a = antisymmetrizer(&r, &q, 2).unwrap();
    assert!(!check_absorption(&r, &q, &a, ProjectorKind::Symmetrizer).unwrap());
    assert!(!check_absorption(&r, &q, &TensorOp::identity(2, 2), ProjectorKind::Antisymmetrizer).unwrap());
}

#[test]
fn top_antisymmetrizer_vanishes_above_dimension() {
    let (r, q) = setup(2, ExactScalar::from(2));
    assert!(antisymmetrizer(&r, &q, 3).unwrap().is_zero());
    let (r, q) = setup(3, ExactScalar::from(2));
    assert!(antisymmetrizer(&r, &q, 4).unwrap().is_zero());
}

#[test]
fn classical_limit_is_young_projector() {
    for n in [2, 3] {
        let (r, q) = setup(n, ExactScalar::one());
        assert_eq!(r, TensorOp::permutation_p(n));
        for k in 1..=3 {
            assert_eq!(antisymmetrizer(&r, &q, k).unwrap(), classical_projector(n, k, ProjectorKind::Antisymmetrizer));
            assert_eq!(symmetrizer(&r, &q, k).unwrap(), classical_projector(n, k, ProjectorKind::Symmetrizer));
        }
    }
}

#[test]
fn classical_antisymmetrizer_reference() {
    // (1/2)(Id − P) built by hand
    let p = TensorOp::permutation_p(2);
    let expect = TensorOp::identity(2, 2).sub(&p).unwrap().scale(&ExactScalar::new(1, 2));
    assert_eq!(classical_projector(2, 2, ProjectorKind::Antisymmetrizer), expect);
}
