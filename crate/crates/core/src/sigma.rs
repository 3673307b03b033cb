//! Neighborhood systems, the auxiliary graph `G_Σ` and realizers.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::Ratio;

use crate::density::max_average_degree;
use crate::error::{Error, Result};
use crate::graph::{neighborhood_at_depth, Graph};

/// For every vertex `v` a set `Σ(v)` inside the radius-`depth` ball around
/// `v` (excluding `v`). Sets are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NeighborhoodSystem {
    sets: Vec<Vec<usize>>,
    depth: usize,
}

/// Members dropped by [`NeighborhoodSystem::new_clamped`], as
/// `(vertex, member)` pairs.
pub type Dropped = Vec<(usize, usize)>;

impl NeighborhoodSystem {
    /// Validates `Σ(v) ⊆ N^depth(v)` for every `v`.
    pub fn new(g: &Graph, sets: Vec<Vec<usize>>, depth: usize) -> Result<Self> {
        let (s, dropped) = Self::build(g, sets, depth, false)?;
        debug_assert!(dropped.is_empty());
        Ok(s)
    }

    /// Like [`NeighborhoodSystem::new`] but drops members outside the ball
    /// instead of failing, reporting what was dropped.
    pub fn new_clamped(g: &Graph, sets: Vec<Vec<usize>>, depth: usize) -> Result<(Self, Dropped)> {
        Self::build(g, sets, depth, true)
    }

    fn build(
        g: &Graph,
        mut sets: Vec<Vec<usize>>,
        depth: usize,
        clamp: bool,
    ) -> Result<(Self, Dropped)> {
        if depth == 0 {
            return Err(Error::InvalidSystem("depth must be at least 1".into()));
        }
        if sets.len() != g.n() {
            return Err(Error::InvalidSystem(format!(
                "system has {} vertices, graph has {}",
                sets.len(),
                g.n()
            )));
        }
        let mut dropped = Vec::new();
        for (v, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                continue;
            }
            let ball = neighborhood_at_depth(g, v, depth);
            let mut kept = Vec::with_capacity(set.len());
            for &u in set.iter() {
                if u == v {
                    if clamp {
                        dropped.push((v, u));
                        continue;
                    }
                    return Err(Error::SelfInSigma { vertex: v });
                }
                if ball.binary_search(&u).is_err() {
                    if clamp {
                        dropped.push((v, u));
                        continue;
                    }
                    return Err(Error::OutOfBall {
                        vertex: v,
                        member: u,
                        depth,
                    });
                }
                kept.push(u);
            }
            *set = kept;
        }
        Ok((NeighborhoodSystem { sets, depth }, dropped))
    }

    pub fn empty(n: usize, depth: usize) -> Self {
        NeighborhoodSystem {
            sets: vec![Vec::new(); n],
            depth,
        }
    }

    /// `Σ(v) = N(v)` for every vertex.
    pub fn full(g: &Graph) -> Self {
        NeighborhoodSystem {
            sets: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
            depth: 1,
        }
    }

    /// A system whose sets are subsets of `parent`'s sets, so no
    /// revalidation is needed.
    pub(crate) fn from_subsets(parent: &NeighborhoodSystem, mut sets: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(sets.len(), parent.n());
        for set in &mut sets {
            set.sort_unstable();
            set.dedup();
        }
        NeighborhoodSystem {
            sets,
            depth: parent.depth,
        }
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn set(&self, v: usize) -> &[usize] {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn is_all_empty(&self) -> bool {
        self.sets.iter().all(Vec::is_empty)
    }

    /// Largest `|Σ(v)|`.
    pub fn rho(&self) -> usize {
        rho(self)
    }

    pub(crate) fn check_for(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::InvalidSystem(format!(
                "system has {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        Ok(())
    }
}

pub fn rho(s: &NeighborhoodSystem) -> usize {
    s.sets.iter().map(Vec::len).max().unwrap_or(0)
}

/// `G_Σ` together with, for every edge, the witnesses `w` whose set
/// contains both endpoints (ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaGraph {
    pub graph: Graph,
    pub witnesses: BTreeMap<(usize, usize), Vec<usize>>,
}

impl SigmaGraph {
    pub fn witnesses_of(&self, u: usize, v: usize) -> &[usize] {
        self.witnesses
            .get(&(u.min(v), u.max(v)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

/// Joins `u` and `v` whenever some `Σ(w)` contains both.
pub fn sigma_graph(g: &Graph, s: &NeighborhoodSystem) -> Result<SigmaGraph> {
    s.check_for(g)?;
    let mut witnesses: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (w, set) in s.sets.iter().enumerate() {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                witnesses.entry((u, v)).or_default().push(w);
            }
        }
    }
    let graph = Graph::from_edges(g.n(), witnesses.keys().copied())?;
    Ok(SigmaGraph { graph, witnesses })
}

pub fn build_sigma_graph(g: &Graph, s: &NeighborhoodSystem) -> Result<Graph> {
    Ok(sigma_graph(g, s)?.graph)
}

/// `G_Σ ∪ G`: the constraint graph when the coloring must also be proper
/// on `G`.
pub fn build_sigma_graph_also_proper(g: &Graph, s: &NeighborhoodSystem) -> Result<Graph> {
    build_sigma_graph(g, s)?.union(g)
}

/// Exact maximum average degree of `G_Σ`.
pub fn mad_sigma(g: &Graph, s: &NeighborhoodSystem) -> Result<Ratio<u64>> {
    Ok(max_average_degree(&build_sigma_graph(g, s)?))
}

/// One stored path per ordered witness pair `(v, u)` with `u ∈ Σ(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizerPath {
    pub owner: usize,
    pub member: usize,
    /// Vertex sequence from `member` to `owner`.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    n: usize,
    depth: usize,
    paths: Vec<RealizerPath>,
}

impl Realizer {
    /// Checks each path against `g` and `s`: consecutive vertices adjacent,
    /// endpoints matching a witness pair, at most `2·depth` edges, and
    /// exactly one path per pair.
    pub fn new(g: &Graph, s: &NeighborhoodSystem, paths: Vec<RealizerPath>) -> Result<Self> {
        s.check_for(g)?;
        let mut expected: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (v, set) in s.sets.iter().enumerate() {
            for &u in set {
                expected.insert((v, u));
            }
        }
        let mut seen = BTreeSet::new();
        for p in &paths {
            let key = (p.owner, p.member);
            if !expected.contains(&key) {
                return Err(Error::InvalidRealizer(format!(
                    "{} is not in sigma({})",
                    p.member, p.owner
                )));
            }
            if !seen.insert(key) {
                return Err(Error::InvalidRealizer(format!(
                    "pair ({}, {}) has two paths",
                    p.owner, p.member
                )));
            }
            if p.vertices.first() != Some(&p.member) || p.vertices.last() != Some(&p.owner) {
                return Err(Error::InvalidRealizer(format!(
                    "path for ({}, {}) has wrong endpoints",
                    p.owner, p.member
                )));
            }
            if p.vertices.len() - 1 > 2 * s.depth() {
                return Err(Error::InvalidRealizer(format!(
                    "path for ({}, {}) has {} edges, limit {}",
                    p.owner,
                    p.member,
                    p.vertices.len() - 1,
                    2 * s.depth()
                )));
            }
            let distinct: BTreeSet<_> = p.vertices.iter().collect();
            if distinct.len() != p.vertices.len()
                || p.vertices.windows(2).any(|w| !g.has_edge(w[0], w[1]))
            {
                return Err(Error::InvalidRealizer(format!(
                    "path for ({}, {}) is not a path of the graph",
                    p.owner, p.member
                )));
            }
        }
        if seen.len() != expected.len() {
            return Err(Error::InvalidRealizer(format!(
                "{} witness pairs have no path",
                expected.len() - seen.len()
            )));
        }
        Ok(Realizer {
            n: g.n(),
            depth: s.depth(),
            paths,
        })
    }

    pub fn paths(&self) -> &[RealizerPath] {
        &self.paths
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Shortest paths for every witness pair. BFS from the owner visits
/// neighbors in ascending order, so the first discoverer is the parent.
pub fn default_realizer(g: &Graph, s: &NeighborhoodSystem) -> Result<Realizer> {
    s.check_for(g)?;
    let mut paths = Vec::new();
    for (v, set) in s.sets.iter().enumerate() {
        if set.is_empty() {
            continue;
        }
        let mut parent = vec![usize::MAX; g.n()];
        parent[v] = v;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        for &u in set {
            let mut walk = vec![u];
            let mut x = u;
            while x != v {
                x = parent[x];
                walk.push(x);
            }
            paths.push(RealizerPath {
                owner: v,
                member: u,
                vertices: walk,
            });
        }
    }
    Realizer::new(g, s, paths)
}

/// Largest number of realizer paths through a single vertex.
pub fn realizer_complexity(r: &Realizer) -> usize {
    let mut load = vec![0usize; r.n];
    for p in &r.paths {
        for &x in &p.vertices {
            load[x] += 1;
        }
    }
    load.into_iter().max().unwrap_or(0)
}
