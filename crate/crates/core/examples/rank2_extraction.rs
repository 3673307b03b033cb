//! Samples a rank-two full subhypergraph out of a random full hypergraph of
//! rank three at the guaranteed size.

use sigmacolor::families::random_full_hypergraph;
use sigmacolor::hypergraph::rank2_threshold;
use sigmacolor::{extract_rank2_subhypergraph, is_rank2_full_on};

fn main() -> sigmacolor::Result<()> {
    for n in 2..=5 {
        let size = rank2_threshold(3, n);
        let h = random_full_hypergraph(size, 3, n as u64);
        let x = extract_rank2_subhypergraph(&h, n, 1)?;
        println!(
            "n = {n}: {size} vertices, {} hyperedges -> {} vertices after {} round(s), {} bad pair(s), rank-2 full: {}",
            h.hyperedges().len(),
            x.vertices.len(),
            x.rounds,
            x.bad_pairs,
            is_rank2_full_on(&h, &x.vertices)
        );
    }
    Ok(())
}
