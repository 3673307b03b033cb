//! Recovers a 1-subdivided clique from a large Σ-clique.

use sigmacolor::families::gen_subdivided_clique;
use sigmacolor::{extract_subdivided_clique, omega_sigma, Caps};

fn main() -> sigmacolor::Result<()> {
    let f = gen_subdivided_clique(9)?;
    let (omega, clique) = omega_sigma(&f.graph, &f.system, &Caps::default())?;
    println!("Σ-clique of size {omega}: {clique:?}");
    let sc = extract_subdivided_clique(&f.graph, &f.system, &clique, omega / 3)?;
    println!("branch vertices {:?}", sc.branch);
    for ((u, v), w) in &sc.subdividers {
        println!("  {u} - {w} - {v}");
    }
    println!("subgraph check: {}", sc.is_subgraph_of(&f.graph));
    Ok(())
}
