//! Colors each pair slot of Σ separately and combines the colors.

use sigmacolor::families::gen_random_instance;
use sigmacolor::{
    is_sigma_valid, sigma_color_greedy, sigma_color_product, Coloring, Graph, NeighborhoodSystem,
};

fn main() -> sigmacolor::Result<()> {
    let (g, s) = gen_random_instance(14, 0.45, 3, 11)?;
    let slot_sizes = std::cell::RefCell::new(Vec::new());
    let colorer = |g: &Graph, slot: &NeighborhoodSystem| -> sigmacolor::Result<Coloring> {
        let c = sigma_color_greedy(g, slot)?;
        slot_sizes.borrow_mut().push(c.palette_size());
        Ok(c)
    };
    let c = sigma_color_product(&g, &s, colorer)?;
    assert!(is_sigma_valid(&s, &c));
    let k = slot_sizes.borrow().iter().copied().max().unwrap_or(1);
    println!("rho = {}, slot palettes {:?}", s.rho(), slot_sizes.borrow());
    println!(
        "product uses {} colors; k^C(rho,2) allows {}",
        c.palette_size(),
        k.pow(3)
    );
    println!(
        "plain greedy on G_sigma uses {}",
        sigma_color_greedy(&g, &s)?.palette_size()
    );
    Ok(())
}
