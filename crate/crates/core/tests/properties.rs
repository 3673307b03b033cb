mod common;

use proptest::prelude::*;

use sigmacolor::arrange::{arrangeability_exact, arrangeability_of_ordering, heuristic_ordering};
use sigmacolor::color::choosability_check;
use sigmacolor::families::{
    encode_depth_d_system, gen_random_instance, gen_subdivision, random_full_hypergraph,
};
use sigmacolor::graph::degeneracy_ordering;
use sigmacolor::hypergraph::rank2_threshold;
use sigmacolor::io::{parse_graph, parse_sigma, write_graph, write_sigma};
use sigmacolor::sigma::{default_realizer, realizer_complexity};
use sigmacolor::{
    acyclic_chromatic_exact, build_sigma_graph, chromatic_number_exact, clique_number_exact,
    extract_rank2_subhypergraph, greedy_star_coloring, is_rank2_full_on, is_sigma_valid,
    is_star_coloring, mad_sigma, omega_sigma, orientation_from_star_coloring, sigma_color_greedy,
    sigma_color_via_star, star_chromatic_exact, verify_in_orientation, Caps, Coloring, Graph,
    NeighborhoodSystem, Ordering, Palette,
};

use common::*;

fn instance(max_n: usize, rho_cap: usize) -> impl Strategy<Value = (Graph, NeighborhoodSystem)> {
    (1..=max_n, 0.0..0.7f64, 0..=rho_cap, any::<u64>())
        .prop_map(|(n, p, r, seed)| gen_random_instance(n, p, r, seed).unwrap())
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    instance(max_n, 0).prop_map(|(g, _)| g)
}

/// Fewest colors of a star coloring, by trying every coloring.
fn brute_star(g: &Graph) -> usize {
    let n = g.n();
    (1..=n.max(1))
        .find(|&k| {
            canonical_colorings(n, k)
                .into_iter()
                .any(|c| star_by_components(g, &Coloring::new(c)))
        })
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sigma_graph_matches_definition((g, s) in instance(14, 4)) {
        let gs = build_sigma_graph(&g, &s).unwrap();
        let pairs: Vec<(usize, usize)> = constraint_pairs(&s).into_iter().collect();
        prop_assert_eq!(gs.edges(), &pairs[..]);
    }

    #[test]
    fn sigma_graph_commutes_with_relabeling((g, s) in instance(10, 4), shift in 0usize..10) {
        let n = g.n();
        let f = |v: usize| (v + shift) % n;
        let g2 = Graph::from_edges(n, g.edges().iter().map(|&(u, v)| (f(u), f(v)))).unwrap();
        let mut sets = vec![Vec::new(); n];
        for v in 0..n {
            sets[f(v)] = s.set(v).iter().map(|&u| f(u)).collect();
        }
        let s2 = NeighborhoodSystem::new(&g2, sets, 1).unwrap();
        let a = build_sigma_graph(&g, &s).unwrap();
        let b = build_sigma_graph(&g2, &s2).unwrap();
        let mapped = Graph::from_edges(n, a.edges().iter().map(|&(u, v)| (f(u), f(v)))).unwrap();
        prop_assert_eq!(mapped, b);
    }

    #[test]
    fn degeneracy_ordering_bounds_back_degree(g in graph(16)) {
        let (o, d) = degeneracy_ordering(&g);
        prop_assert!(o.max_back_degree(&g) <= d);
    }

    #[test]
    fn chromatic_at_least_clique_and_matches_brute(g in graph(7)) {
        let caps = Caps::default();
        let (chi, c) = chromatic_number_exact(&g, &caps).unwrap();
        let (omega, clique) = clique_number_exact(&g, &caps).unwrap();
        prop_assert!(chi >= omega);
        prop_assert!(sigmacolor::is_proper(&g, &c));
        prop_assert_eq!(c.palette_size(), chi);
        let edges = g.edges().iter().copied().collect();
        prop_assert_eq!(chi, brute_chromatic(g.n(), &edges));
        prop_assert_eq!(omega, brute_clique(g.n(), &edges));
        prop_assert_eq!(clique.len(), omega);
    }

    #[test]
    fn star_oracle_matches_brute(g in graph(7)) {
        let caps = Caps::default();
        let (k, c) = star_chromatic_exact(&g, &caps).unwrap();
        prop_assert_eq!(k, brute_star(&g));
        prop_assert!(star_by_components(&g, &c));
        let a = acyclic_chromatic_exact(&g, &caps).unwrap();
        prop_assert!(a <= k && k <= a * (2 * a).saturating_sub(1).max(1));
    }

    #[test]
    fn star_check_matches_components(g in graph(8), colors in prop::collection::vec(0usize..4, 8)) {
        let c = Coloring::new(colors[..g.n()].to_vec());
        prop_assert_eq!(is_star_coloring(&g, &c), star_by_components(&g, &c));
        if is_star_coloring(&g, &c) {
            let io = orientation_from_star_coloring(&g, &c).unwrap();
            prop_assert!(verify_in_orientation(&g, &io));
            prop_assert!(io.out_degrees(g.n()).iter().all(|&d| d <= c.palette_size()));
        } else {
            prop_assert!(orientation_from_star_coloring(&g, &c).is_err());
        }
    }

    #[test]
    fn greedy_sigma_coloring_within_mad_bound((g, s) in instance(16, 4)) {
        let c = sigma_color_greedy(&g, &s).unwrap();
        prop_assert!(is_sigma_valid(&s, &c));
        let mad = mad_sigma(&g, &s).unwrap();
        prop_assert!(c.palette_size() as u64 <= mad.to_integer() + 1);
    }

    #[test]
    fn mad_matches_subset_enumeration((g, s) in instance(12, 4)) {
        let (num, den) = brute_mad(g.n(), &constraint_pairs(&s));
        prop_assert_eq!(mad_sigma(&g, &s).unwrap(), num_rational::Ratio::new(num, den));
    }

    #[test]
    fn pipeline_with_greedy_star_is_valid((g, s) in instance(16, 4)) {
        let order = heuristic_ordering(&g);
        let star = greedy_star_coloring(&g, &order, &Palette::Uniform(g.n().max(1))).unwrap();
        prop_assert!(is_star_coloring(&g, &star));
        let c = sigma_color_via_star(&g, &s, &star).unwrap();
        prop_assert!(is_sigma_valid(&s, &c));
        let k = star.palette_size();
        prop_assert!(c.palette_size() <= (k * k * s.rho()).max(1));
    }

    #[test]
    fn exact_arrangeability_is_minimal(g in graph(9), perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let caps = Caps::default();
        let cert = arrangeability_exact(&g, &caps).unwrap();
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let other = arrangeability_of_ordering(&g, &Ordering::new(p).unwrap()).unwrap();
        prop_assert!(cert.k <= other.k);
        prop_assert!(cert.ordering.max_back_degree(&g) <= cert.k + 1);
        prop_assert_eq!(arrangeability_of_ordering(&g, &cert.ordering).unwrap().k, cert.k);
    }

    #[test]
    fn omega_at_least_rho((g, s) in instance(14, 4)) {
        let (omega, clique) = omega_sigma(&g, &s, &Caps::default()).unwrap();
        prop_assert!(omega >= s.rho());
        let pairs = constraint_pairs(&s);
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                prop_assert!(pairs.contains(&(u.min(v), u.max(v))));
            }
        }
    }

    #[test]
    fn choice_number_at_least_chromatic((g, s) in instance(8, 3)) {
        let caps = Caps::default();
        let gs = build_sigma_graph(&g, &s).unwrap();
        let (chi, _) = chromatic_number_exact(&gs, &caps).unwrap();
        if chi >= 2 {
            if let Ok(ok) = choosability_check(&gs, chi - 1, &caps) {
                prop_assert!(!ok);
            }
        }
    }

    #[test]
    fn realizer_load_counts_paths((g, s) in instance(12, 3)) {
        let r = default_realizer(&g, &s).unwrap();
        let lambda = realizer_complexity(&r);
        let total: usize = s.sets().iter().map(Vec::len).sum();
        prop_assert_eq!(r.paths().len(), total);
        prop_assert_eq!(lambda == 0, total == 0);
        prop_assert!(lambda <= total);
    }

    #[test]
    fn formats_round_trip((g, s) in instance(14, 4)) {
        let g2 = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(parse_sigma(&write_sigma(&s), &g, None).unwrap(), s);
    }

    #[test]
    fn encoding_forces_pattern_colors(h in graph(5), counts in prop::collection::vec(1usize..=5, 10)) {
        let caps = Caps::default();
        let (g, emb) = gen_subdivision(&h, &counts[..h.m()]).unwrap();
        let s = encode_depth_d_system(&g, &emb, 1).unwrap();
        let gs = build_sigma_graph(&g, &s).unwrap();
        let (chi, _) = chromatic_number_exact(&gs, &caps).unwrap();
        let (chi_h, _) = chromatic_number_exact(&h, &caps).unwrap();
        prop_assert!(chi >= chi_h);
        prop_assert_eq!(s.rho(), if h.m() > 0 { 2 } else { 0 });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank2_extraction_verified(rank in 2usize..=4, n in 2usize..=4, seed in any::<u64>()) {
        let h = random_full_hypergraph(rank2_threshold(rank, n), rank, seed);
        let x = extract_rank2_subhypergraph(&h, n, seed).unwrap();
        prop_assert!(x.vertices.len() >= n);
        prop_assert!(is_rank2_full_on(&h, &x.vertices));
        prop_assert!(rank2_full_brute(h.hyperedges(), &x.vertices));
        prop_assert_eq!(extract_rank2_subhypergraph(&h, n, seed).unwrap(), x);
    }
}
