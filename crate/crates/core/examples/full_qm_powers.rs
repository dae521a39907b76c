//! Right and left powers coincide for a full quantum matrix, but not for a
//! generic hq-matrix.

use std::sync::Arc;

use hqcert::chn::{check_full_qm_powers, ChnEngine};
use hqcert::{ExactScalar, FChoice, HqMatrix, RFPair, Result};

fn main() -> Result<()> {
    let pair = RFPair::standard(2, ExactScalar::from(2), FChoice::SameAsR)?;
    let engine = ChnEngine::new(Arc::new(HqMatrix::generic(Arc::new(pair))));
    println!("{} full quantum-matrix relations", engine.hq().full_qm_relations()?.len());
    for k in 1..=3 {
        let full = check_full_qm_powers(&engine, k, true)?;
        let half = check_full_qm_powers(&engine, k, false)?;
        println!("k={k}: full ideal pass={} hq ideal pass={} (rank {})", full.pass, half.pass, half.residual_rank);
    }
    Ok(())
}
