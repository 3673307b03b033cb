//! Exact arrangeability of the subdivided bicliques and the greedy star
//! coloring it drives.

use sigmacolor::families::gen_subdivided_biclique;
use sigmacolor::{arrangeability_exact, greedy_star_coloring, is_star_coloring, Caps, Palette};

fn main() -> sigmacolor::Result<()> {
    let caps = Caps {
        arrangeability: 24,
        ..Caps::default()
    };
    for n in 1..=4 {
        let h = gen_subdivided_biclique(n)?;
        let cert = arrangeability_exact(&h, &caps)?;
        let c = greedy_star_coloring(&h, &cert.ordering, &Palette::Uniform(h.n()))?;
        assert!(is_star_coloring(&h, &c));
        println!(
            "H_{n}: {} vertices, arrangeability {} (worst vertex {:?}), greedy star coloring uses {} colors",
            h.n(),
            cert.k,
            cert.worst_vertex,
            c.palette_size()
        );
    }
    Ok(())
}
