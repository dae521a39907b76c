//! Ranks of the q-(anti)symmetrizer towers for the standard R-matrices.

use hqcert::{ExactScalar, FChoice, RFPair, Result};

fn main() -> Result<()> {
    for n in [2, 3] {
        let pair = RFPair::standard(n, ExactScalar::from(2), FChoice::SameAsR)?;
        for k in 1..=4 {
            let a = pair.antisymmetrizer(k)?;
            let s = pair.symmetrizer(k)?;
            println!("n={n} k={k}: rank A = {:>2}, rank S = {:>2}, tr A = {}", a.rank(), s.rank(), a.trace());
        }
    }
    Ok(())
}
