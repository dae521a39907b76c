//! Runs every suite for a JSON pair configuration, as the `verify` command does.
//!
//! `cargo run --example batch_run -- examples/configs/dj2_p.json 3`

use hqcert::run::{run, PairConfig, RunConfig};
use hqcert::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/dj2_r.json").into());
    let max_degree = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let config = RunConfig { pair: PairConfig::load(&path)?, max_degree, ..RunConfig::default() };
    let outcome = run(&config)?;
    for r in &outcome.reports {
        println!("{:<5} {:<20} {}", if r.pass { "pass" } else { "FAIL" }, r.check, serde_json::to_string(&r.params).unwrap());
    }
    println!("{} reports, all pass: {}", outcome.reports.len(), outcome.all_pass());
    Ok(())
}
