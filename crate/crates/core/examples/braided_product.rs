//! Closure of the hq relations under the braided product of two hq-matrices,
//! with and without the cross relations.

use hqcert::ncalg::identities::check_braided_closure;
use hqcert::{ExactScalar, FChoice, RFPair, Result};

fn main() -> Result<()> {
    for f in [FChoice::Flip, FChoice::SameAsR] {
        let pair = RFPair::standard(2, ExactScalar::from(2), f)?;
        for cross in [true, false] {
            let r = check_braided_closure(&pair, cross)?;
            println!("F={f} cross relations={cross}: pass={} residual_rank={}", r.pass, r.residual_rank);
        }
    }
    Ok(())
}
