//! Quantum determinant, the rank-one factorization of the top
//! antisymmetrizer and the Cayley–Hamilton theorem.

use std::sync::Arc;

use hqcert::chn::{cayley_hamilton_check, d_script, det_q, determinant_check, epsilon_factor, ChnEngine};
use hqcert::{ExactScalar, FChoice, HqMatrix, RFPair, Result};

fn main() -> Result<()> {
    for (n, f) in [(2, FChoice::Flip), (2, FChoice::SameAsR), (3, FChoice::SameAsR)] {
        let pair = RFPair::standard(n, ExactScalar::from(2), f)?;
        let eps = epsilon_factor(&pair.antisymmetrizer(n)?)?;
        println!("n={n} F={f}");
        println!("  eps_low = {:?}", eps.eps_low);
        println!("  script D = {:?}", d_script(&pair)?.entries());
        let engine = ChnEngine::new(Arc::new(HqMatrix::generic(Arc::new(pair))));
        if n == 2 {
            println!("  det_q = {}", engine.hq().display(&det_q(&engine)?));
        }
        println!("  determinant pass={}", determinant_check(&engine)?.pass);
        println!("  cayley-hamilton pass={}", cayley_hamilton_check(&engine)?.pass);
    }
    Ok(())
}
