//! The exact small-instance oracles side by side.

use sigmacolor::families::gen_subdivided_clique;
use sigmacolor::{
    acyclic_chromatic_exact, build_sigma_graph, choosability_check, chromatic_number_exact,
    clique_number_exact, max_average_degree, star_chromatic_exact, Caps, Error, Graph,
};

fn main() -> sigmacolor::Result<()> {
    let caps = Caps::default();
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("K2,4", Graph::complete_bipartite(2, 4)),
        ("P6", Graph::path(6)),
    ];
    println!("graph  omega  chi  chi_a  chi_s  mad   2-choosable");
    for (name, g) in graphs {
        println!(
            "{name:<6} {:>5} {:>4} {:>6} {:>6}  {:<5} {}",
            clique_number_exact(&g, &caps)?.0,
            chromatic_number_exact(&g, &caps)?.0,
            acyclic_chromatic_exact(&g, &caps)?,
            star_chromatic_exact(&g, &caps)?.0,
            max_average_degree(&g).to_string(),
            choosability_check(&g, 2, &caps)?
        );
    }
    // caps are enforced, never approximated
    let big = build_sigma_graph(
        &Graph::complete(30),
        &sigmacolor::NeighborhoodSystem::full(&Graph::complete(30)),
    )?;
    match chromatic_number_exact(&big, &caps) {
        Err(Error::InstanceTooLarge { size, cap, .. }) => {
            println!("K30: {size} vertices exceed cap {cap}")
        }
        other => println!("unexpected: {other:?}"),
    }
    let f = gen_subdivided_clique(7)?;
    let gs = build_sigma_graph(&f.graph, &f.system)?;
    println!(
        "K7*: chromatic number of G_sigma = {}",
        chromatic_number_exact(&gs, &caps)?.0
    );
    Ok(())
}
