//! Runs every self-check suite and prints a summary per suite.

use sigmacolor::verify::{run_suite, Suite};
use sigmacolor::Caps;

fn main() -> sigmacolor::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(1);
    for suite in Suite::ALL {
        let r = run_suite(suite, seed, 25, &Caps::default())?;
        println!(
            "{:<15} {:>3} checks  {} failures",
            r.suite,
            r.checks.len(),
            r.failures
        );
        if let Some(first) = r.checks.first() {
            println!(
                "  e.g. {} [{}] {}",
                first.instance, first.hash, first.values
            );
        }
    }
    Ok(())
}
