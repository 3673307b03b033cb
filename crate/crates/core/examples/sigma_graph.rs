//! Builds the constraint graph for the subdivided clique and the depth-2
//! star, and prints the parameters that bound their Σ-chromatic numbers.
//!
//! cargo run --example sigma_graph -- 5

use sigmacolor::families::{gen_star_example, gen_subdivided_clique, Family};
use sigmacolor::{build_sigma_graph, mad_sigma, omega_sigma, sigma_chromatic_exact, Caps};

fn describe(f: &Family) -> sigmacolor::Result<()> {
    let caps = Caps::default();
    let gs = build_sigma_graph(&f.graph, &f.system)?;
    let (omega, clique) = omega_sigma(&f.graph, &f.system, &caps)?;
    println!(
        "{:<18} |V| = {:>2}  |E| = {:>2}  depth {}  rho {}  |E(G_sigma)| = {:>2}  omega = {} {:?}  chi = {}  mad = {}",
        f.stats.family,
        f.graph.n(),
        f.graph.m(),
        f.system.depth(),
        f.system.rho(),
        gs.m(),
        omega,
        clique,
        sigma_chromatic_exact(&f.graph, &f.system, &caps)?,
        mad_sigma(&f.graph, &f.system)?,
    );
    Ok(())
}

fn main() -> sigmacolor::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    describe(&gen_subdivided_clique(n)?)?;
    describe(&gen_star_example(n)?)?;
    Ok(())
}
