//! Cayley–Hamilton–Newton identities for the generic 2×2 hq-matrix.

use std::sync::Arc;

use hqcert::chn::{chn_check, powers, sym_functions, ChnEngine, ChnVariant, PowerKind};
use hqcert::{ExactScalar, FChoice, HqMatrix, RFPair, Result};

fn main() -> Result<()> {
    let pair = RFPair::standard(2, ExactScalar::from(2), FChoice::SameAsR)?;
    let engine = ChnEngine::new(Arc::new(HqMatrix::generic(Arc::new(pair))));
    let hq = engine.hq_arc();
    let sym = sym_functions(&engine, 2)?;
    println!("sigma_1 = {}", hq.display(&sym.sigma[1]));
    println!("sigma_2 = {}", hq.display(&sym.sigma[2]));
    let fam = powers(&engine, 2)?;
    let wedge = fam.get(PowerKind::Wedge, 2).expect("computed up to degree 2");
    println!("(M^wedge2)_11 = {}", hq.display(wedge.get(0, 0)));
    for j in 1..=4 {
        for v in ChnVariant::ALL {
            let r = chn_check(&engine, j, v)?;
            println!("j={j} {v:<17} pass={} residual_rank={} ({} ms)", r.pass, r.residual_rank, r.elapsed_ms);
        }
    }
    Ok(())
}
