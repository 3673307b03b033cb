//! Maximum subgraph density by parametric minimum cut.
//!
//! For a guess `t / D` the network `source → edge-node (cap D)`,
//! `edge-node → endpoints (cap ∞)`, `vertex → sink (cap t)` has a cut of
//! value `D·m − max_H (D·|E(H)| − t·|V(H)|)`. Two distinct densities of
//! subgraphs of an `n`-vertex graph differ by at least `1/(n(n−1))`, so a
//! binary search over integer `t` with `D = n(n−1)` pins the densest
//! subgraph exactly.

use std::collections::VecDeque;

use num_rational::Ratio;

use crate::graph::Graph;

const INF: i64 = i64::MAX / 4;

struct Dinic {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    q.push_back(v);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network.
    fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        seen
    }
}

/// Maximizes `scale·|E(H)| − t·|V(H)|` over vertex sets `H`; returns the
/// optimum and a maximizing set (empty set when the optimum is 0).
fn best_closure(g: &Graph, scale: i64, t: i64) -> (i64, Vec<usize>) {
    let m = g.m();
    let (s, sink) = (0, 1);
    let mut net = Dinic::new(2 + m + g.n());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        net.add_edge(s, 2 + i, scale);
        net.add_edge(2 + i, 2 + m + u, INF);
        net.add_edge(2 + i, 2 + m + v, INF);
    }
    for v in g.vertices() {
        net.add_edge(2 + m + v, sink, t);
    }
    let cut = net.max_flow(s, sink);
    let side = net.source_side(s);
    let set = g.vertices().filter(|&v| side[2 + m + v]).collect();
    (scale * m as i64 - cut, set)
}

fn induced_edge_count(g: &Graph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    set.iter().for_each(|&v| inside[v] = true);
    g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] && inside[v])
        .count()
}

/// Densest subgraph: exact `max |E(H)|/|V(H)|` and a witness vertex set.
pub fn densest_subgraph(g: &Graph) -> (Ratio<u64>, Vec<usize>) {
    let n = g.n();
    if g.m() == 0 {
        return (Ratio::from_integer(0), Vec::new());
    }
    let scale = (n * (n - 1)) as i64;
    // largest t with a subgraph of density > t/scale
    let (mut lo, mut hi) = (0i64, scale * g.m() as i64);
    let mut witness = best_closure(g, scale, 0).1;
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        let (value, set) = best_closure(g, scale, mid);
        if value > 0 {
            lo = mid;
            witness = set;
        } else {
            hi = mid - 1;
        }
    }
    let e = induced_edge_count(g, &witness) as u64;
    (Ratio::new(e, witness.len() as u64), witness)
}

/// `2 · max |E(H)|/|V(H)|`, exact.
pub fn max_average_degree(g: &Graph) -> Ratio<u64> {
    densest_subgraph(g).0 * 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_mad(g: &Graph) -> Ratio<u64> {
        let n = g.n();
        let mut best = Ratio::from_integer(0);
        for mask in 1u32..(1 << n) {
            let e = g
                .edges()
                .iter()
                .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .count() as u64;
            let r = Ratio::new(2 * e, mask.count_ones() as u64);
            if r > best {
                best = r;
            }
        }
        best
    }

    #[test]
    fn small_graphs() {
        assert_eq!(max_average_degree(&Graph::empty(4)), Ratio::from_integer(0));
        assert_eq!(
            max_average_degree(&Graph::complete(4)),
            Ratio::from_integer(3)
        );
        assert_eq!(max_average_degree(&Graph::path(4)), Ratio::new(3, 2));
        assert_eq!(
            max_average_degree(&Graph::complete(1)),
            Ratio::from_integer(0)
        );
        // K4 plus a pendant path: the K4 is densest
        let g = Graph::from_edges(
            6,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
            ],
        )
        .unwrap();
        let (d, w) = densest_subgraph(&g);
        assert_eq!(d, Ratio::new(3, 2));
        assert_eq!(w, vec![0, 1, 2, 3]);
    }

    #[test]
    fn agrees_with_enumeration() {
        let graphs = [
            Graph::cycle(7),
            Graph::complete_bipartite(2, 5),
            Graph::from_edges(
                7,
                [
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (5, 6),
                    (3, 6),
                    (4, 6),
                ],
            )
            .unwrap(),
        ];
        for g in graphs {
            assert_eq!(max_average_degree(&g), brute_mad(&g));
        }
    }
}
