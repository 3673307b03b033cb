mod common;

use sigmacolor::arrange::arrangeability_exact;
use sigmacolor::families::{gen_star_example, gen_subdivided_biclique, gen_subdivided_clique};
use sigmacolor::hypergraph::{extract_subdivided_clique, sigma_clique_to_hypergraph};
use sigmacolor::{
    is_star_coloring, omega_sigma, sigma_chromatic_exact, star_chromatic_exact, Caps, Coloring,
    Error, Graph, NeighborhoodSystem,
};

use common::star_by_components;

/// Side A gets 0, side B gets 1, subdividing vertices get 2.
fn three_star_coloring(n: usize) -> Coloring {
    let colors = (0..2 * n + n * n)
        .map(|v| match v {
            v if v < n => 0,
            v if v < 2 * n => 1,
            _ => 2,
        })
        .collect();
    Coloring::new(colors)
}

#[test]
fn subdivided_bicliques_are_three_star_colorable() {
    for n in 1..=6 {
        let h = gen_subdivided_biclique(n).unwrap();
        let c = three_star_coloring(n);
        assert!(is_star_coloring(&h, &c), "n = {n}");
        assert!(star_by_components(&h, &c), "n = {n}");
    }
    let caps = Caps {
        star: 15,
        ..Caps::default()
    };
    let (k, _) = star_chromatic_exact(&gen_subdivided_biclique(3).unwrap(), &caps).unwrap();
    assert_eq!(k, 3);
}

#[test]
fn subdivided_biclique_arrangeability_grows() {
    // at least (n - 1) / 2 over all orderings
    let caps = Caps {
        arrangeability: 24,
        ..Caps::default()
    };
    let expected = [(2, 1), (3, 1), (4, 2)];
    for (n, k) in expected {
        let cert = arrangeability_exact(&gen_subdivided_biclique(n).unwrap(), &caps).unwrap();
        assert_eq!(cert.k, k, "n = {n}");
        assert!(2 * cert.k + 1 >= n);
    }
}

#[test]
fn star_examples_need_n_colors_on_a_tree() {
    let caps = Caps::default();
    for n in 2..=7 {
        let f = gen_star_example(n).unwrap();
        assert!(f.graph.is_forest());
        assert_eq!(
            sigma_chromatic_exact(&f.graph, &f.system, &caps).unwrap(),
            n
        );
        let (omega, clique) = omega_sigma(&f.graph, &f.system, &caps).unwrap();
        assert_eq!(omega, n);
        assert_eq!(clique, (1..=n).collect::<Vec<_>>());
        assert_eq!(f.stats.chi_sigma_at_least, n);
    }
}

#[test]
fn branch_vertices_form_a_pair_hypergraph() {
    let f = gen_subdivided_clique(4).unwrap();
    let h = sigma_clique_to_hypergraph(&f.graph, &f.system, &[0, 1, 2, 3]).unwrap();
    assert_eq!(h.hyperedges().len(), 6);
    assert_eq!(h.rank(), 2);

    // with Σ = N on K_4 every trace is the whole clique minus one vertex
    let k4 = Graph::complete(4);
    let full = NeighborhoodSystem::full(&k4);
    let h = sigma_clique_to_hypergraph(&k4, &full, &[0, 1, 2, 3]).unwrap();
    assert_eq!(h.rank(), 3);
}

#[test]
fn subdivision_extraction_needs_three_n_members() {
    let f = gen_subdivided_clique(4).unwrap();
    let c = [0, 1, 2, 3];
    let one = extract_subdivided_clique(&f.graph, &f.system, &c, 1).unwrap();
    assert_eq!((one.branch.len(), one.subdividers.len()), (1, 0));
    match extract_subdivided_clique(&f.graph, &f.system, &c, 2) {
        Err(Error::CliqueTooSmall {
            needed: 6,
            found: 4,
            ..
        }) => {}
        other => panic!("{other:?}"),
    }
    // only the pair 0-2 is covered
    let s = NeighborhoodSystem::new(&Graph::path(3), vec![vec![], vec![0, 2], vec![]], 1).unwrap();
    assert!(matches!(
        extract_subdivided_clique(&Graph::path(3), &s, &[0, 1, 2], 1),
        Err(Error::NotASigmaClique { .. })
    ));
}
