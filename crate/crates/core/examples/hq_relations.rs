//! The quadratic hq relations, their degree-2 and degree-3 ideal components,
//! and a membership query.

use std::sync::Arc;

use hqcert::ncalg::NCPoly;
use hqcert::{ExactScalar, FChoice, HqMatrix, RFPair, Result};

fn main() -> Result<()> {
    let pair = RFPair::standard(2, ExactScalar::from(2), FChoice::SameAsR)?;
    let hq = HqMatrix::generic(Arc::new(pair));
    let rels = hq.relations()?;
    println!("{} independent relations:", rels.len());
    for r in &rels {
        println!("  {} = 0", hq.display(r));
    }
    let ideal = hq.ideal()?;
    for d in 2..=3 {
        let c = ideal.component(d, None)?;
        println!("degree {d}: ideal rank {} of {} monomials", c.rank(), c.monomial_count());
    }
    let m11 = NCPoly::generator(hq.generators().id(0, 0));
    let square = m11.mul(&m11);
    println!("M11^2 in ideal: {}", ideal.membership(&square)?.member);
    println!("first relation times M11 in ideal: {}", ideal.membership(&rels[0].mul(&m11))?.member);
    Ok(())
}
