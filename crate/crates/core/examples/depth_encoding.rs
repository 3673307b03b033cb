//! Encodes a pattern graph into a depth-3 neighborhood system on one of its
//! subdivisions; any Σ-coloring then properly colors the pattern.

use sigmacolor::families::{encode_depth_d_system, gen_subdivision};
use sigmacolor::{chromatic_number_exact, sigma_chromatic_exact, Caps, Graph};

fn main() -> sigmacolor::Result<()> {
    let caps = Caps::default();
    let patterns = [
        ("K4", Graph::complete(4)),
        ("C5", Graph::cycle(5)),
        ("K2,3", Graph::complete_bipartite(2, 3)),
    ];
    for (name, h) in patterns {
        let counts: Vec<usize> = (0..h.m()).map(|i| 1 + i % 5).collect();
        let (g, emb) = gen_subdivision(&h, &counts)?;
        let s = encode_depth_d_system(&g, &emb, 1)?;
        println!(
            "{name:<5} subdivided {counts:?}: {} vertices, rho {}, depth {}, chi_sigma {} >= chi {}",
            g.n(),
            s.rho(),
            s.depth(),
            sigma_chromatic_exact(&g, &s, &caps)?,
            chromatic_number_exact(&h, &caps)?.0
        );
    }
    Ok(())
}
