//! Cross-checks of the CHN machinery against scalar specializations and the
//! classical limit, computed without the ideal machinery.

mod common;

use hqcert::chn::{
    cayley_hamilton_check, cayley_hamilton_residual, chn_check_in, chn_residual, d_script, det_eigen_residual, det_q, det_q_with,
    epsilon_factor, newton_residual, proof_step_sides, top_wedge_residual, ChnEngine, ChnVariant, NewtonVariant,
    PowerKind, SymKind,
};
use hqcert::ncalg::NCMatrix;
use hqcert::{ExactScalar, FChoice, TensorOp};

fn r_word(engine: &ChnEngine, legs: &[usize], width: usize) -> TensorOp {
    let pair = engine.hq().pair();
    legs.iter()
        .fold(TensorOp::identity(pair.n(), width), |acc, &i| common::matmul(&acc, &pair.r().embed(i, width).unwrap()))
}

fn cpow(c: &ExactScalar, k: usize) -> ExactScalar {
    c.pow(k as i32)
}

/// The operator multiplying `M_{1̄→k̄}` in each power family.
fn power_operator(engine: &ChnEngine, kind: PowerKind, k: usize) -> TensorOp {
    let pair = engine.hq().pair();
    let up: Vec<usize> = (1..k).collect();
    let down: Vec<usize> = (1..k).rev().collect();
    match kind {
        PowerKind::Right | PowerKind::TildeRight => r_word(engine, &up, k),
        PowerKind::Left | PowerKind::TildeLeft => r_word(engine, &down, k),
        PowerKind::Wedge | PowerKind::TildeWedge => pair.antisymmetrizer(k).unwrap(),
        PowerKind::Sym | PowerKind::TildeSym => pair.symmetrizer(k).unwrap(),
    }
}

fn assert_zero_at(engine: &ChnEngine, m: &NCMatrix, c: &ExactScalar, what: &str) {
    let v = common::matrix_at_scalar(engine.hq(), m, c);
    assert!(v.is_zero(), "{what} at c={c}: {:?}", v.entries());
}

fn engines() -> Vec<(ChnEngine, usize)> {
    vec![
        (common::engine(2, 2, FChoice::Flip), 4),
        (common::engine(2, 2, FChoice::SameAsR), 4),
        (common::engine(3, 2, FChoice::SameAsR), 3),
    ]
}

#[test]
fn powers_and_symmetric_functions_at_scalar_matrices() {
    for (engine, j_max) in engines() {
        let hq = engine.hq();
        let d = hq.pair().d().clone();
        let q = hq.pair().q().clone();
        for c in common::random_rationals(5, 5) {
            for k in 1..=j_max {
                let ck = cpow(&c, k);
                for kind in PowerKind::ALL {
                    let got = common::matrix_at_scalar(hq, &engine.power(kind, k).unwrap(), &c);
                    let want = common::ftrace_keep_first(&d, &power_operator(&engine, kind, k)).scale(&ck);
                    assert_eq!(got, want, "{kind} k={k}");
                }
                let up: Vec<usize> = (1..k).collect();
                let down: Vec<usize> = (1..k).rev().collect();
                let reference = [
                    (SymKind::S, common::ftrace_full(&d, &r_word(&engine, &up, k))),
                    (SymKind::SBar, common::ftrace_full(&d, &r_word(&engine, &down, k))),
                    (SymKind::Sigma, &q.pow(k as i32) * &common::ftrace_full(&d, &hq.pair().antisymmetrizer(k).unwrap())),
                    (SymKind::Tau, &q.pow(-(k as i32)) * &common::ftrace_full(&d, &hq.pair().symmetrizer(k).unwrap())),
                ];
                for (kind, value) in reference {
                    assert_eq!(common::at_scalar(hq, &engine.sym(kind, k).unwrap(), &c), &value * &ck, "{kind:?} k={k}");
                }
            }
        }
    }
}

#[test]
fn residuals_vanish_at_scalar_matrices() {
    for (engine, j_max) in engines() {
        let hq = engine.hq();
        for c in common::random_rationals(17, 5) {
            for j in 1..=j_max {
                for v in ChnVariant::ALL {
                    assert_zero_at(&engine, &chn_residual(&engine, j, v).unwrap(), &c, &format!("chn {v} j={j}"));
                }
                for v in NewtonVariant::ALL {
                    let r = newton_residual(&engine, j, v).unwrap();
                    assert!(common::at_scalar(hq, &r, &c).is_zero(), "newton {v} j={j}");
                }
                for k in 1..j {
                    let (lhs, rhs) = proof_step_sides(&engine, j, k).unwrap();
                    assert_zero_at(&engine, &lhs.sub(&rhs).unwrap(), &c, &format!("proof step j={j} k={k}"));
                }
            }
            assert_zero_at(&engine, &cayley_hamilton_residual(&engine).unwrap(), &c, "cayley-hamilton");
            assert_zero_at(&engine, &top_wedge_residual(&engine).unwrap(), &c, "top wedge");
            let eps = epsilon_factor(&hq.pair().antisymmetrizer(hq.n()).unwrap()).unwrap();
            for p in det_eigen_residual(&engine, &eps).unwrap() {
                assert!(common::at_scalar(hq, &p, &c).is_zero());
            }
        }
    }
}

#[test]
fn determinant_of_scalar_matrix() {
    for (engine, _) in engines() {
        let det = det_q(&engine).unwrap();
        for c in common::random_rationals(23, 5) {
            assert_eq!(common::at_scalar(engine.hq(), &det, &c), c.pow(engine.n() as i32));
        }
    }
}

#[test]
fn determinant_is_gauge_invariant() {
    let engine = common::engine(2, 2, FChoice::SameAsR);
    let a = engine.hq().pair().antisymmetrizer(2).unwrap();
    let eps = epsilon_factor(&a).unwrap();
    let base = det_q_with(&engine, &eps).unwrap();
    for lambda in common::random_rationals(29, 4) {
        let scaled = eps.rescaled(&lambda).unwrap();
        assert_eq!(scaled.outer(2, 2), a);
        assert_eq!(det_q_with(&engine, &scaled).unwrap(), base);
    }
}

#[test]
fn classical_limit() {
    let engine = common::engine(2, 1, FChoice::Flip);
    let hq = engine.hq();
    let m = hq.matrix();
    let tr = engine.trace(m).unwrap();
    assert_eq!(engine.sym(SymKind::Sigma, 1).unwrap(), tr);
    assert_eq!(&*engine.power(PowerKind::TildeLeft, 2).unwrap(), &m.mul(m).unwrap());
    assert_eq!(d_script(hq.pair()).unwrap(), TensorOp::identity(2, 1).scale(&ExactScalar::new(1, 2)));

    // M² − tr(M) M + det(M) Id, built directly
    let det = det_q(&engine).unwrap();
    let id = NCMatrix::from_scalar(&TensorOp::identity(2, 1));
    let expected = m.mul(m).unwrap().sub(&m.mul_poly_right(&tr)).unwrap().add(&id.mul_poly_right(&det)).unwrap();
    assert_eq!(cayley_hamilton_residual(&engine).unwrap(), expected);
    assert!(cayley_hamilton_check(&engine).unwrap().pass);

    // on commuting numbers the residual vanishes and det_q is the determinant
    let vals = common::random_rationals(31, 20);
    for chunk in vals.chunks(4) {
        let gens = hq.generators();
        let value = |g: u32| {
            let (a, b) = gens.entry_of(g).unwrap();
            chunk[2 * a + b].clone()
        };
        let classical = &(&chunk[0] * &chunk[3]) - &(&chunk[1] * &chunk[2]);
        assert_eq!(det.evaluate(value), classical);
        assert!(expected.evaluate(value).is_zero());
    }
}

#[test]
fn relations_first_needed_at_degree_three() {
    // at j = 2 every variant is a free-algebra identity
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let engine = common::engine(2, 2, f);
        let empty = engine.hq().empty_ideal();
        for v in ChnVariant::ALL {
            assert!(chn_check_in(&engine, &empty, 2, v).unwrap().pass, "{v}");
            let r = chn_check_in(&engine, &empty, 3, v).unwrap();
            assert!(!r.pass && r.residual_rank >= 1, "{v}");
            assert!(chn_check_in(&engine, &engine.hq().ideal().unwrap(), 3, v).unwrap().pass);
        }
    }
}
