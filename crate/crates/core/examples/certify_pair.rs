//! Builds Drinfeld–Jimbo pairs and prints their certificates, `Ψ` and `D`.

use hqcert::rmatrix::check_height;
use hqcert::{ExactScalar, FChoice, RFPair, Result};

fn main() -> Result<()> {
    for (n, f) in [(2, FChoice::Flip), (2, FChoice::SameAsR), (3, FChoice::SameAsR)] {
        let pair = RFPair::standard(n, ExactScalar::from(2), f)?;
        println!("n={n} F={f}");
        println!("  certificates: {:?}", pair.certificates());
        println!("  height {n}: {}", check_height(&pair, n)?);
        println!("  D = {:?}", pair.d().entries());
    }
    let pair = RFPair::standard(2, ExactScalar::new(1, 3), FChoice::Flip)?;
    println!("q=1/3: rank S2 = {}, rank A2 = {}", pair.split().s2.rank(), pair.split().a2.rank());
    Ok(())
}
