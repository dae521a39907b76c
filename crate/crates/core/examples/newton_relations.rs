//! Newton relations between the quantum symmetric functions, and the check
//! that they are the F-traces of the matrix identities.

use std::sync::Arc;

use hqcert::chn::{newton_check, newton_residual, trace_linkage_check, ChnEngine, NewtonVariant};
use hqcert::{ExactScalar, FChoice, HqMatrix, RFPair, Result};

fn main() -> Result<()> {
    let pair = RFPair::standard(2, ExactScalar::from(2), FChoice::Flip)?;
    let engine = ChnEngine::new(Arc::new(HqMatrix::generic(Arc::new(pair))));
    let res = newton_residual(&engine, 2, NewtonVariant::Antisym)?;
    println!("degree-2 antisymmetric Newton residual has {} terms before reduction", res.len());
    for j in 1..=4 {
        for v in NewtonVariant::ALL {
            let n = newton_check(&engine, j, v)?;
            let t = trace_linkage_check(&engine, j, v)?;
            println!("j={j} {v:<7} newton pass={} trace-linkage pass={}", n.pass, t.pass);
        }
    }
    Ok(())
}
