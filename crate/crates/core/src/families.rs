//! Generators for the extremal constructions and for random fuzzing
//! instances.
//!
//! Vertex labelings are canonical: branch vertices first, then subdividing
//! vertices in lexicographic order of the edge they subdivide.

use std::collections::BTreeSet;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::FullHypergraph;
use crate::sigma::NeighborhoodSystem;

/// Values a generated instance is known to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    pub family: String,
    pub parameter: usize,
    pub vertices: usize,
    pub edges: usize,
    pub rho: usize,
    pub depth: usize,
    /// Known lower bound on the Σ-chromatic number.
    pub chi_sigma_at_least: usize,
    /// Known upper bound on the Σ-chromatic number, when one is asserted.
    pub chi_sigma_at_most: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Family {
    pub graph: Graph,
    pub system: NeighborhoodSystem,
    pub stats: FamilyStats,
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// 1-subdivided `K_n` with `Σ(w) = N(w)` on the subdividing vertices.
/// `G_Σ` is `K_n` plus isolated vertices, so `χ(Σ) = n` while `ρ = 2`.
pub fn gen_subdivided_clique(n: usize) -> Result<Family> {
    if n < 2 {
        return Err(Error::Precondition("subdivided clique needs n >= 2".into()));
    }
    let mut edges = Vec::new();
    let mut sets = vec![Vec::new(); n];
    for (i, j) in pairs(n) {
        let w = sets.len();
        edges.push((i, w));
        edges.push((j, w));
        sets.push(vec![i, j]);
    }
    let graph = Graph::from_edges(sets.len(), edges)?;
    let system = NeighborhoodSystem::new(&graph, sets, 1)?;
    let stats = FamilyStats {
        family: "subdivided-clique".into(),
        parameter: n,
        vertices: graph.n(),
        edges: graph.m(),
        rho: 2,
        depth: 1,
        chi_sigma_at_least: n,
        chi_sigma_at_most: Some(n),
    };
    Ok(Family {
        graph,
        system,
        stats,
    })
}

/// 1-subdivided `K_{n,n}`: sides `0..n` and `n..2n`, then the subdivider of
/// `(i, n + j)` at `2n + i·n + j`.
pub fn gen_subdivided_biclique(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Precondition(
            "subdivided biclique needs n >= 1".into(),
        ));
    }
    let mut edges = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let w = 2 * n + i * n + j;
            edges.push((i, w));
            edges.push((n + j, w));
        }
    }
    Graph::from_edges(2 * n + n * n, edges)
}

/// Star with center 0, leaves `v_i = i` for `1..=n` and `v_{i,j}` after
/// them, with `Σ(v_{i,j}) = {v_i, v_j}` (depth 2).
pub fn gen_star_example(n: usize) -> Result<Family> {
    if n < 2 {
        return Err(Error::Precondition("star example needs n >= 2".into()));
    }
    let total = 1 + n + n * (n - 1) / 2;
    let graph = Graph::star(total - 1);
    let mut sets = vec![Vec::new(); 1 + n];
    for (i, j) in pairs(n) {
        sets.push(vec![1 + i, 1 + j]);
    }
    let system = NeighborhoodSystem::new(&graph, sets, 2)?;
    let stats = FamilyStats {
        family: "star-example".into(),
        parameter: n,
        vertices: graph.n(),
        edges: graph.m(),
        rho: 2,
        depth: 2,
        chi_sigma_at_least: n,
        chi_sigma_at_most: Some(n),
    };
    Ok(Family {
        graph,
        system,
        stats,
    })
}

/// Where the pattern graph sits inside a subdivision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// Image of pattern vertex `i`.
    pub branch: Vec<usize>,
    /// For pattern edge `i` (in `Graph::edges` order), the path from the
    /// image of its lower endpoint to the image of its higher one.
    pub paths: Vec<Vec<usize>>,
}

/// Subdivides edge `i` of `h` exactly `per_edge[i]` times. Pattern
/// vertices keep their ids; new vertices follow edge by edge.
pub fn gen_subdivision(h: &Graph, per_edge: &[usize]) -> Result<(Graph, Embedding)> {
    if per_edge.len() != h.m() {
        return Err(Error::Precondition(format!(
            "{} subdivision counts for {} edges",
            per_edge.len(),
            h.m()
        )));
    }
    let mut next = h.n();
    let mut edges = Vec::new();
    let mut paths = Vec::with_capacity(h.m());
    for (&(u, v), &k) in h.edges().iter().zip(per_edge) {
        let mut path = vec![u];
        path.extend(next..next + k);
        next += k;
        path.push(v);
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        paths.push(path);
    }
    let g = Graph::from_edges(next, edges)?;
    Ok((
        g,
        Embedding {
            branch: h.vertices().collect(),
            paths,
        },
    ))
}

/// Puts `Σ = {ends}` on a middle vertex of every embedded path, giving a
/// depth-`(2d+1)` system with `ρ = 2` whose colorings restrict to proper
/// colorings of the pattern. The middle is the `⌈(L−1)/2⌉`-th internal
/// vertex of a path with `L` edges.
pub fn encode_depth_d_system(
    subdivided: &Graph,
    embedding: &Embedding,
    d: usize,
) -> Result<NeighborhoodSystem> {
    let mut sets = vec![Vec::new(); subdivided.n()];
    for (i, path) in embedding.paths.iter().enumerate() {
        let len = path.len() - 1;
        if len > 4 * d + 2 {
            return Err(Error::PathTooLong {
                edge: i,
                len,
                max: 4 * d + 2,
            });
        }
        if len < 2 {
            return Err(Error::PathTooShort { edge: i });
        }
        let middle = path[len / 2];
        sets[middle] = vec![path[0], path[len]];
    }
    NeighborhoodSystem::new(subdivided, sets, 2 * d + 1)
}

/// Erdős–Rényi graph with each `Σ(v)` a uniform subset of `N(v)` whose
/// size is uniform in `0..=min(rho_cap, deg v)`.
pub fn gen_random_instance(
    n: usize,
    edge_prob: f64,
    rho_cap: usize,
    seed: u64,
) -> Result<(Graph, NeighborhoodSystem)> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::Precondition(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = pairs(n).filter(|_| rng.gen_bool(edge_prob)).collect();
    let graph = Graph::from_edges(n, edges)?;
    let sets = graph
        .vertices()
        .map(|v| {
            let nb = graph.neighbors(v);
            let size = rng.gen_range(0..=rho_cap.min(nb.len()));
            index::sample(&mut rng, nb.len(), size)
                .into_iter()
                .map(|i| nb[i])
                .collect()
        })
        .collect();
    let system = NeighborhoodSystem::new(&graph, sets, 1)?;
    Ok((graph, system))
}

/// All pairs as two-element hyperedges.
pub fn complete_pair_hypergraph(n: usize) -> FullHypergraph {
    FullHypergraph::new(n, pairs(n).map(|(u, v)| vec![u, v]).collect())
        .expect("all pairs are covered")
}

/// Random full hypergraph of rank `rank`: pairs are visited in random order
/// and each uncovered pair gets a hyperedge padded with `rank − 2` random
/// extra vertices.
pub fn random_full_hypergraph(n: usize, rank: usize, seed: u64) -> FullHypergraph {
    assert!(rank >= 2, "rank must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<(usize, usize)> = pairs(n).collect();
    order.shuffle(&mut rng);
    let mut covered = vec![false; n * n];
    let mut hyperedges = Vec::new();
    for (u, v) in order {
        if covered[u * n + v] {
            continue;
        }
        let mut e: BTreeSet<usize> = BTreeSet::from([u, v]);
        while e.len() < rank.min(n) {
            e.insert(rng.gen_range(0..n));
        }
        let e: Vec<usize> = e.into_iter().collect();
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                covered[a * n + b] = true;
            }
        }
        hyperedges.push(e);
    }
    FullHypergraph::new(n, hyperedges).expect("every pair got a hyperedge")
}
