//! Turns a star coloring of the base graph into a Σ-coloring with at most
//! `k²ρ` colors, and compares it with the optimum.

use sigmacolor::families::gen_random_instance;
use sigmacolor::{
    is_sigma_valid, orientation_from_star_coloring, sigma_chromatic_exact, sigma_color_via_star,
    star_chromatic_exact, verify_in_orientation, Caps,
};

fn main() -> sigmacolor::Result<()> {
    let caps = Caps::default();
    println!("seed  n  rho  star k  palette  k^2*rho  optimum");
    for seed in 0..8 {
        let (g, s) = gen_random_instance(11, 0.3, 3, seed)?;
        let (k, star) = star_chromatic_exact(&g, &caps)?;
        let io = orientation_from_star_coloring(&g, &star)?;
        assert!(verify_in_orientation(&g, &io));
        let c = sigma_color_via_star(&g, &s, &star)?;
        assert!(is_sigma_valid(&s, &c));
        println!(
            "{seed:>4} {:>2} {:>4} {k:>7} {:>8} {:>8} {:>8}",
            g.n(),
            s.rho(),
            c.palette_size(),
            k * k * s.rho(),
            sigma_chromatic_exact(&g, &s, &caps)?
        );
    }
    Ok(())
}
