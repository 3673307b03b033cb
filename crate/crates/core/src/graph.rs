//! Simple undirected graphs on dense vertex ids, vertex orderings and
//! colorings.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and the edge list holds each edge once as
/// `(u, v)` with `u < v`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting self-loops, repeated edges and
    /// out-of-range endpoints. Endpoint order within a pair is irrelevant.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    /// Self-loops and out-of-range endpoints are still rejected.
    pub fn from_edges_dedup(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            adj,
            edges: set.into_iter().collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Self::from_edges(n, edges).expect("cycle is simple")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Self::from_edges(a + b, edges).expect("biclique is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Union of the edge sets of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n() != other.n() {
            return Err(Error::InvalidGraph(format!(
                "union of graphs on {} and {} vertices",
                self.n(),
                other.n()
            )));
        }
        Graph::from_edges_dedup(
            self.n(),
            self.edges.iter().chain(other.edges.iter()).copied(),
        )
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `source`, `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }
}

/// The radius-`d` ball around `v`, without `v`, sorted.
pub fn neighborhood_at_depth(g: &Graph, v: usize, d: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut out = Vec::new();
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        if dist[x] == d {
            continue;
        }
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A linear ordering of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    perm: Vec<usize>,
    position: Vec<usize>,
}

impl Ordering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            position[v] = i;
        }
        Ok(Ordering { perm, position })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// `true` if `a` comes strictly before `b`.
    #[inline]
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} vertices, graph has {}",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }

    /// Largest number of neighbors any vertex has before it.
    pub fn max_back_degree(&self, g: &Graph) -> usize {
        g.vertices()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&u| self.precedes(u, v))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }
}

/// A total vertex coloring. Colors are arbitrary non-negative integers and
/// need not be contiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    colors: Vec<usize>,
    palette_size: usize,
}

impl From<Vec<usize>> for Coloring {
    fn from(colors: Vec<usize>) -> Self {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Self {
        c.colors
    }
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let palette_size = colors.iter().collect::<BTreeSet<_>>().len();
        Coloring {
            colors,
            palette_size,
        }
    }

    pub fn constant(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Same color classes, renamed to `0..palette_size` in order of first
    /// appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring::new(colors)
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidColoring(format!(
                "coloring has {} entries, graph has {} vertices",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.len() == g.n() && g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v))
}

/// Smallest-last ordering: repeatedly remove a minimum-degree vertex
/// (lowest id on ties) and list the removal sequence reversed. Every vertex
/// then has at most `degeneracy` neighbors before it.
pub fn degeneracy_ordering(g: &Graph) -> (Ordering, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                queue.remove(&(deg[u], u));
                deg[u] -= 1;
                queue.insert((deg[u], u));
            }
        }
    }
    order.reverse();
    (Ordering::new(order).unwrap(), degeneracy)
}

pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).1
}

/// First-fit coloring along `order`.
pub fn greedy_coloring(g: &Graph, order: &Ordering) -> Coloring {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = Vec::new();
    for &v in order.perm() {
        used.clear();
        used.extend(
            g.neighbors(v)
                .iter()
                .map(|&u| color[u])
                .filter(|&c| c != usize::MAX),
        );
        used.sort_unstable();
        used.dedup();
        let mut c = 0;
        for &x in &used {
            if x == c {
                c += 1;
            } else if x > c {
                break;
            }
        }
        color[v] = c;
    }
    Coloring::new(color)
}
