//! Σ-cliques, full hypergraphs, and the two extraction procedures: a
//! rank-two full subhypergraph by random sampling, and a 1-subdivided
//! clique from a large Σ-clique when `ρ = 2`.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{clique_number_exact, Caps};
use crate::graph::Graph;
use crate::sigma::{build_sigma_graph, NeighborhoodSystem};

/// A hypergraph in which every pair of vertices lies in some hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullHypergraph {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
    /// `pair_witness[u * n + v]`: lowest index of a hyperedge holding both.
    pair_witness: Vec<usize>,
    /// Original vertex names, when the hypergraph was cut out of a graph.
    labels: Vec<usize>,
}

impl FullHypergraph {
    /// Validates fullness. Hyperedges are sorted and deduplicated
    /// internally; their order is kept.
    pub fn new(n: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_labels(n, hyperedges, (0..n).collect())
    }

    fn with_labels(n: usize, mut hyperedges: Vec<Vec<usize>>, labels: Vec<usize>) -> Result<Self> {
        let mut pair_witness = vec![usize::MAX; n * n];
        for (i, e) in hyperedges.iter_mut().enumerate() {
            e.sort_unstable();
            e.dedup();
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {i} has vertex {bad} out of range"
                )));
            }
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    for key in [u * n + v, v * n + u] {
                        if pair_witness[key] == usize::MAX {
                            pair_witness[key] = i;
                        }
                    }
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if pair_witness[u * n + v] == usize::MAX {
                    return Err(Error::InvalidHypergraph(format!(
                        "pair ({u}, {v}) is not covered"
                    )));
                }
            }
        }
        Ok(FullHypergraph {
            n,
            hyperedges,
            pair_witness,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn rank(&self) -> usize {
        self.hyperedges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The chosen hyperedge `e_{u,v}` for a pair.
    pub fn witness(&self, u: usize, v: usize) -> &[usize] {
        &self.hyperedges[self.pair_witness[u * self.n + v]]
    }

    pub fn witness_index(&self, u: usize, v: usize) -> usize {
        self.pair_witness[u * self.n + v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

/// Largest Σ-clique, as the clique number of `G_Σ` with a witness.
pub fn omega_sigma(g: &Graph, s: &NeighborhoodSystem, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    clique_number_exact(&build_sigma_graph(g, s)?, caps)
}

/// First uncovered pair of `c`, if any.
fn uncovered_pair(s: &NeighborhoodSystem, c: &[usize]) -> Option<(usize, usize)> {
    let mut covered = BTreeSet::new();
    for set in s.sets() {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                covered.insert((u, v));
            }
        }
    }
    for (i, &u) in c.iter().enumerate() {
        for &v in &c[i + 1..] {
            if !covered.contains(&(u.min(v), u.max(v))) {
                return Some((u, v));
            }
        }
    }
    None
}

/// The hypergraph on `c` whose hyperedges are the traces `Σ(w) ∩ c` of
/// size at least two, one per distinct trace, in order of first witness.
/// Local vertex `i` is `labels()[i]`, the `i`-th smallest member of `c`.
pub fn sigma_clique_to_hypergraph(
    g: &Graph,
    s: &NeighborhoodSystem,
    c: &[usize],
) -> Result<FullHypergraph> {
    s.check_for(g)?;
    let mut members: Vec<usize> = c.to_vec();
    members.sort_unstable();
    members.dedup();
    if let Some((u, v)) = uncovered_pair(s, &members) {
        return Err(Error::NotASigmaClique { u, v });
    }
    let local: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut seen = BTreeSet::new();
    let mut hyperedges = Vec::new();
    for set in s.sets() {
        let trace: Vec<usize> = set.iter().filter_map(|v| local.get(v).copied()).collect();
        if trace.len() >= 2 && seen.insert(trace.clone()) {
            hyperedges.push(trace);
        }
    }
    FullHypergraph::with_labels(members.len(), hyperedges, members)
}

/// Every pair of `y` has a hyperedge meeting `y` in exactly that pair.
pub fn is_rank2_full_on(h: &FullHypergraph, y: &[usize]) -> bool {
    if y.len() <= 1 {
        return true;
    }
    let mut inside = vec![false; h.n()];
    y.iter().for_each(|&v| inside[v] = true);
    let mut good = BTreeSet::new();
    for e in h.hyperedges() {
        let trace: Vec<usize> = e.iter().copied().filter(|&v| inside[v]).collect();
        if let [a, b] = trace[..] {
            good.insert((a, b));
        }
    }
    y.iter().enumerate().all(|(i, &u)| {
        y[i + 1..]
            .iter()
            .all(|&v| good.contains(&(u.min(v), u.max(v))))
    })
}

/// Vertex count from which a rank-two full subhypergraph on `n` vertices
/// is guaranteed: `4·r·n² + 2`.
pub fn rank2_threshold(rank: usize, n: usize) -> usize {
    4 * rank * n * n + 2
}

/// Upper bound on the expected number of bad pairs in a uniform
/// `2n`-sample, and the retry cap derived from it.
fn sampling_budget(vertices: usize, rank: usize, n: usize) -> usize {
    let (nn, big) = (n as f64, vertices as f64);
    let expected_bad =
        (rank.saturating_sub(2)) as f64 * nn * (2.0 * nn - 1.0) * (2.0 * nn - 2.0) / (big - 2.0);
    let success = (1.0 - expected_bad / nn).max(1e-3);
    64 * (1.0 / success).ceil() as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rank2Extraction {
    /// Vertices of the rank-two full subhypergraph, sorted; at least `n`.
    pub vertices: Vec<usize>,
    pub rounds: usize,
    pub bad_pairs: usize,
}

/// Samples `2n`-subsets until fewer than `n` pairs are bad (their chosen
/// hyperedge meets the sample in three or more vertices), then drops one
/// endpoint of each bad pair.
pub fn extract_rank2_subhypergraph(
    h: &FullHypergraph,
    n: usize,
    seed: u64,
) -> Result<Rank2Extraction> {
    let rank = h.rank().max(2);
    let need = rank2_threshold(rank, n);
    if h.n() < need {
        return Err(Error::TooFewVertices { have: h.n(), need });
    }
    if n <= 1 {
        return Ok(Rank2Extraction {
            vertices: (0..n).collect(),
            rounds: 0,
            bad_pairs: 0,
        });
    }
    let budget = sampling_budget(h.n(), rank, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inside = vec![false; h.n()];
    for round in 1..=budget {
        let mut sample = index::sample(&mut rng, h.n(), 2 * n).into_vec();
        sample.sort_unstable();
        sample.iter().for_each(|&v| inside[v] = true);
        let mut bad = Vec::new();
        for (i, &u) in sample.iter().enumerate() {
            for &v in &sample[i + 1..] {
                let hits = h.witness(u, v).iter().filter(|&&x| inside[x]).count();
                if hits > 2 {
                    bad.push((u, v));
                }
            }
        }
        sample.iter().for_each(|&v| inside[v] = false);
        if bad.len() < n {
            let mut keep: BTreeSet<usize> = sample.iter().copied().collect();
            for &(u, v) in &bad {
                if keep.contains(&u) && keep.contains(&v) {
                    keep.remove(&v);
                }
            }
            return Ok(Rank2Extraction {
                vertices: keep.into_iter().collect(),
                rounds: round,
                bad_pairs: bad.len(),
            });
        }
    }
    Err(Error::SamplingBudgetExhausted { rounds: budget })
}

/// A 1-subdivision of a clique found inside `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdividedClique {
    pub branch: Vec<usize>,
    /// `((u, v), w)`: `w` subdivides the edge between branch vertices `u < v`.
    pub subdividers: Vec<((usize, usize), usize)>,
}

impl SubdividedClique {
    /// Direct adjacency check that this is a 1-subdivision of a clique on
    /// the branch vertices, as a subgraph of `g`.
    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        let k = self.branch.len();
        if self.subdividers.len() != k * k.saturating_sub(1) / 2 {
            return false;
        }
        let mut used: BTreeSet<usize> = self.branch.iter().copied().collect();
        if used.len() != k {
            return false;
        }
        let mut pairs = BTreeSet::new();
        for &((u, v), w) in &self.subdividers {
            if !used.insert(w)
                || !self.branch.contains(&u)
                || !self.branch.contains(&v)
                || u == v
                || !pairs.insert((u.min(v), u.max(v)))
                || !g.has_edge(u, w)
                || !g.has_edge(v, w)
            {
                return false;
            }
        }
        true
    }
}

/// From a Σ-clique `c` with `|c| ≥ 3n` under a depth-1 system with `ρ = 2`,
/// finds `n` members pairwise joined through outside vertices `w` with
/// `Σ(w) = {u, v}`.
///
/// The pairs of `c` lacking such an outside witness form a graph with at
/// most `|c|` edges (each inside witness covers a single pair), so the
/// min-degree greedy independent set there has at least `|c|/3 ≥ n`
/// vertices.
pub fn extract_subdivided_clique(
    g: &Graph,
    s: &NeighborhoodSystem,
    c: &[usize],
    n: usize,
) -> Result<SubdividedClique> {
    s.check_for(g)?;
    if s.rho() != 2 {
        return Err(Error::WrongRho {
            expected: 2,
            found: s.rho(),
        });
    }
    if s.depth() != 1 {
        return Err(Error::WrongDepth {
            expected: 1,
            found: s.depth(),
        });
    }
    let mut members: Vec<usize> = c.to_vec();
    members.sort_unstable();
    members.dedup();
    if let Some((u, v)) = uncovered_pair(s, &members) {
        return Err(Error::NotASigmaClique { u, v });
    }
    let threshold = (3 * n) * (3 * n).saturating_sub(1) / 2 - 3 * n;
    let in_c: BTreeSet<usize> = members.iter().copied().collect();
    // outside witness for each pair, lowest id
    let mut outside: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (w, set) in s.sets().iter().enumerate() {
        if let [u, v] = set[..] {
            if !in_c.contains(&w) && in_c.contains(&u) && in_c.contains(&v) {
                outside.entry((u, v)).or_insert(w);
            }
        }
    }
    if members.len() < 3 * n {
        return Err(Error::CliqueTooSmall {
            needed: 3 * n,
            found: members.len(),
            edges: outside.len(),
            threshold,
        });
    }
    // complement of the outside-witness graph, on local indices
    let k = members.len();
    let mut missing = vec![BTreeSet::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if !outside.contains_key(&(members[i], members[j])) {
                missing[i].insert(j);
                missing[j].insert(i);
            }
        }
    }
    let mut alive: BTreeSet<usize> = (0..k).collect();
    let mut independent = Vec::new();
    while independent.len() < n {
        let Some(&v) = alive.iter().min_by_key(|&&v| (missing[v].len(), v)) else {
            break;
        };
        independent.push(v);
        let mut gone: Vec<usize> = missing[v].iter().copied().collect();
        gone.push(v);
        for x in gone {
            if alive.remove(&x) {
                for y in std::mem::take(&mut missing[x]) {
                    missing[y].remove(&x);
                }
            }
        }
    }
    if independent.len() < n {
        return Err(Error::CliqueTooSmall {
            needed: n,
            found: independent.len(),
            edges: outside.len(),
            threshold,
        });
    }
    let mut branch: Vec<usize> = independent.into_iter().map(|i| members[i]).collect();
    branch.sort_unstable();
    let mut subdividers = Vec::new();
    for (i, &u) in branch.iter().enumerate() {
        for &v in &branch[i + 1..] {
            subdividers.push(((u, v), outside[&(u, v)]));
        }
    }
    Ok(SubdividedClique {
        branch,
        subdividers,
    })
}
