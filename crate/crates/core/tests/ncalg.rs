mod common;

use std::sync::Arc;

use hqcert::ncalg::identities::{
    braided_product_relations, check_braided_closure, check_equivalent_forms, check_lemma1,
    check_projector_relations, check_projector_relations_in, equivalent_forms,
};
use hqcert::ncalg::{GeneratorRegistry, NCPoly, PolySpan};
use hqcert::rmatrix::{dj_rmatrix, PairData};
use hqcert::{DeformationParam, ExactScalar, FChoice, HqMatrix, RFPair, TensorOp};
use proptest::prelude::*;

fn hq(n: usize, f: FChoice) -> HqMatrix {
    HqMatrix::generic(Arc::new(common::pair(n, 2, f)))
}

#[test]
fn relation_counts() {
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let h = hq(2, f);
        assert_eq!(h.relations().unwrap().len(), 3);
        assert_eq!(h.full_qm_relations().unwrap().len(), 6);
    }
    assert_eq!(hq(3, FChoice::SameAsR).relations().unwrap().len(), 18);
    let one = RFPair::standard(1, ExactScalar::from(2), FChoice::SameAsR).unwrap();
    assert!(HqMatrix::generic(Arc::new(one)).relations().unwrap().is_empty());
}

#[test]
fn relations_vanish_on_scalar_matrices() {
    for c in common::random_rationals(11, 5) {
        for f in [FChoice::Flip, FChoice::SameAsR] {
            let h = hq(2, f);
            for r in h.relations().unwrap().iter().chain(&h.full_qm_relations().unwrap()) {
                assert!(common::at_scalar(&h, r, &c).is_zero());
            }
        }
    }
}

#[test]
fn components_are_proper() {
    let h = hq(2, FChoice::SameAsR);
    let ideal = h.ideal().unwrap();
    let rels = h.relations().unwrap();
    assert_eq!(ideal.component(2, None).unwrap().rank(), 3);
    let c3 = ideal.component(3, None).unwrap();
    assert_eq!(c3.monomial_count(), 64);
    assert!(c3.rank() < 64);
    // degree-3 component spanned by g·r and r·g
    let mut spanning = Vec::new();
    for r in &rels {
        for g in h.generators().ids() {
            spanning.push(NCPoly::generator(g).mul(r));
            spanning.push(r.mul(&NCPoly::generator(g)));
        }
    }
    assert_eq!(c3.rank(), common::poly_rank(&spanning));
    let m11 = NCPoly::generator(h.generators().id(0, 0));
    assert!(!ideal.membership(&m11.mul(&m11)).unwrap().member);
    assert!(ideal.membership(&rels[1].mul(&m11)).unwrap().member);
    assert!(!ideal.membership(&m11).unwrap().member);
}

#[test]
fn inhomogeneous_membership_rejected() {
    let h = hq(2, FChoice::Flip);
    let m11 = NCPoly::generator(h.generators().id(0, 0));
    let p = m11.add(&m11.mul(&m11));
    assert!(h.ideal().unwrap().membership(&p).is_err());
}

#[test]
fn twisted_copy_identities() {
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let h = hq(2, f);
        let rep = check_lemma1(h.pair(), h.matrix(), 3).unwrap();
        assert!(rep.pass, "{rep:?}");
    }
}

#[test]
fn twisted_copy_identities_fail_for_incompatible_f() {
    let q = DeformationParam::new(ExactScalar::from(2)).unwrap();
    let r = dj_rmatrix(2, &q, None).unwrap();
    let mut f = TensorOp::permutation_p(2);
    f.set(1, 1, ExactScalar::one());
    let data = PairData::new(r, f, q).unwrap();
    let h = hq(2, FChoice::Flip);
    let rep = check_lemma1(&data, h.matrix(), 3).unwrap();
    assert!(!rep.pass);
    assert!(rep.residual_rank > 0);
}

#[test]
fn equivalent_forms_generate_the_same_ideal() {
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let h = hq(2, f);
        assert!(check_equivalent_forms(&h).unwrap().pass);
        let rels = h.relations().unwrap();
        for form in equivalent_forms(h.pair(), h.matrix()).unwrap() {
            let mut all = rels.clone();
            all.extend(form);
            assert_eq!(common::poly_rank(&all), rels.len());
        }
    }
}

#[test]
fn projector_relations() {
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let h = hq(2, f);
        for k in 1..=3 {
            for i in 0..=3 - k {
                assert!(check_projector_relations(&h, k, i).unwrap().pass, "k={k} i={i}");
            }
        }
        let empty = h.empty_ideal();
        let rep = check_projector_relations_in(&h, &empty, 2, 0).unwrap();
        assert!(!rep.pass);
    }
}

#[test]
fn braided_closure_needs_cross_relations() {
    let pair = common::pair(2, 2, FChoice::SameAsR);
    assert!(check_braided_closure(&pair, true).unwrap().pass);
    let rep = check_braided_closure(&pair, false).unwrap();
    assert!(!rep.pass && rep.residual_rank > 0);
}

#[test]
fn braided_product_rejects_shared_generators() {
    let pair = common::pair(2, 2, FChoice::Flip);
    let mut reg = GeneratorRegistry::new();
    let a = reg.register("M", 2).unwrap();
    let b = reg.register("N", 2).unwrap();
    assert!(braided_product_relations(&pair, &a, &a).is_err());
    let prod = braided_product_relations(&pair, &a, &b).unwrap();
    assert_eq!(prod.product.dim(), 2);
    assert!(!prod.cross.is_empty());
    assert_eq!(prod.relations.len(), 6 + prod.cross.len());
    assert_eq!(reg.register("M", 2).unwrap(), a);
    assert!(reg.register("M", 3).is_err());
}

fn small_poly(gens: Vec<u32>) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::sample::select(gens.clone()), prop::sample::select(gens), -3i64..=3), 1..5)
        .prop_map(|terms| NCPoly::from_terms(terms.into_iter().map(|(a, b, c)| (vec![a, b], ExactScalar::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn span_rank_matches_reference(polys in prop::collection::vec(small_poly(vec![0, 1, 2]), 1..7)) {
        let span = PolySpan::from_polys(&polys);
        prop_assert_eq!(span.rank(), common::poly_rank(&polys));
        for p in &polys {
            prop_assert!(span.contains(p));
        }
    }

    #[test]
    fn sandwiched_relations_are_members(i in 0usize..3, g in 0usize..4, h in 0usize..4, c in -5i64..=5) {
        let m = hq(2, FChoice::SameAsR);
        let rels = m.relations().unwrap();
        let ids = m.generators().ids();
        let p = rels[i].sandwich(&[ids[g]], &[ids[h]]).scale(&ExactScalar::from(c))
            .add(&rels[(i + 1) % 3].sandwich(&[ids[h], ids[g]], &[]));
        prop_assert!(m.ideal().unwrap().membership(&p).unwrap().member);
    }
}

#[test]
fn full_relations_contain_hq_relations() {
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let h = hq(2, f);
        let full = h.full_qm_relations().unwrap();
        let mut both = full.clone();
        both.extend(h.relations().unwrap());
        assert_eq!(common::poly_rank(&both), full.len());
    }
}
