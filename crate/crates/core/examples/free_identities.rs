//! Twisted-copy identities in the free algebra, equivalent forms of the
//! hq relations and the projector relations.

use std::sync::Arc;

use hqcert::ncalg::identities;
use hqcert::{ExactScalar, FChoice, HqMatrix, RFPair, Result};

fn main() -> Result<()> {
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let pair = RFPair::standard(2, ExactScalar::from(2), f)?;
        let hq = HqMatrix::generic(Arc::new(pair));
        let l1 = identities::check_lemma1(hq.pair(), hq.matrix(), 4)?;
        println!("F={f} twisted-copy identities: pass={} ({} ms)", l1.pass, l1.elapsed_ms);
        println!("F={f} equivalent forms: pass={}", identities::check_equivalent_forms(&hq)?.pass);
        for k in 1..=3 {
            for i in 0..=3 - k {
                let r = identities::check_projector_relations(&hq, k, i)?;
                println!("F={f} projector relations k={k} i={i}: pass={}", r.pass);
            }
        }
    }
    Ok(())
}
