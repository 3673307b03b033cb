//! Exact small-instance oracles for chromatic and clique number.
//!
//! Both oracles work one connected component at a time, so the caps bound
//! the largest component rather than the whole vertex count. Isolated
//! vertices never count against a cap.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Size limits for the exponential searches. Exceeding a cap is an error,
/// never a silent approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub chromatic: usize,
    pub clique: usize,
    pub star: usize,
    pub acyclic: usize,
    pub arrangeability: usize,
    pub choosability_vertices: usize,
    pub choosability_k: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            chromatic: 24,
            clique: 64,
            star: 12,
            acyclic: 12,
            arrangeability: 16,
            choosability_vertices: 8,
            choosability_k: 4,
        }
    }
}

impl Caps {
    /// Same caps with the chromatic, star and acyclic limits raised to `n`.
    pub fn with_coloring_cap(mut self, n: usize) -> Self {
        self.chromatic = n;
        self.star = n;
        self.acyclic = n;
        self
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::InstanceTooLarge { what, size, cap })
    } else {
        Ok(())
    }
}

/// Chromatic number with a witness coloring using exactly that many colors
/// (colors `0..k`).
pub fn chromatic_number_exact(g: &Graph, caps: &Caps) -> Result<(usize, Coloring)> {
    let comps = g.components();
    let largest = comps.iter().map(Vec::len).max().unwrap_or(0);
    check_cap("chromatic number", largest, caps.chromatic)?;
    let mut color = vec![0; g.n()];
    let mut k = 0;
    for comp in &comps {
        let sub = g.induced(comp);
        let (kc, colors) = chromatic_connected(&sub);
        k = k.max(kc);
        for (i, &v) in comp.iter().enumerate() {
            color[v] = colors[i];
        }
    }
    Ok((k, Coloring::new(color)))
}

fn chromatic_connected(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n <= 1 {
        return (n, vec![0; n]);
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let (lower, _) = max_clique_bits(&adj);
    let upper = dsatur_greedy(&adj);
    let mut k = lower.max(1);
    while k < upper.0 {
        let mut st = Dsatur::new(&adj, k);
        if st.search(0) {
            return (k, st.color.iter().map(|&c| c as usize).collect());
        }
        k += 1;
    }
    (upper.0, upper.1)
}

/// Pick order for DSATUR: most distinct neighbor colors, then most
/// uncolored neighbors, then lowest id.
fn dsatur_pick(adj: &[u64], color: &[i32], forb: &[u64]) -> Option<usize> {
    let mut uncolored = 0u64;
    for (v, &c) in color.iter().enumerate() {
        if c < 0 {
            uncolored |= 1 << v;
        }
    }
    let mut best: Option<(u32, u32, usize)> = None;
    for v in 0..adj.len() {
        if color[v] >= 0 {
            continue;
        }
        let sat = forb[v].count_ones();
        let deg = (adj[v] & uncolored).count_ones();
        let better = match best {
            None => true,
            Some((bs, bd, _)) => sat > bs || (sat == bs && deg > bd),
        };
        if better {
            best = Some((sat, deg, v));
        }
    }
    best.map(|b| b.2)
}

fn dsatur_greedy(adj: &[u64]) -> (usize, Vec<usize>) {
    let n = adj.len();
    let mut color = vec![-1i32; n];
    let mut forb = vec![0u64; n];
    let mut k = 0;
    while let Some(v) = dsatur_pick(adj, &color, &forb) {
        let c = (!forb[v]).trailing_zeros();
        color[v] = c as i32;
        k = k.max(c as usize + 1);
        for (u, f) in forb.iter_mut().enumerate() {
            if adj[v] >> u & 1 == 1 {
                *f |= 1 << c;
            }
        }
    }
    (k, color.into_iter().map(|c| c as usize).collect())
}

struct Dsatur<'a> {
    adj: &'a [u64],
    k: usize,
    color: Vec<i32>,
    // per vertex, per color: number of colored neighbors with that color
    counts: Vec<Vec<u32>>,
    forb: Vec<u64>,
}

impl<'a> Dsatur<'a> {
    fn new(adj: &'a [u64], k: usize) -> Self {
        let n = adj.len();
        Dsatur {
            adj,
            k,
            color: vec![-1; n],
            counts: vec![vec![0; k]; n],
            forb: vec![0; n],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c as i32;
        for u in 0..self.adj.len() {
            if self.adj[v] >> u & 1 == 1 {
                self.counts[u][c] += 1;
                self.forb[u] |= 1 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = -1;
        for u in 0..self.adj.len() {
            if self.adj[v] >> u & 1 == 1 {
                self.counts[u][c] -= 1;
                if self.counts[u][c] == 0 {
                    self.forb[u] &= !(1 << c);
                }
            }
        }
    }

    fn search(&mut self, used: usize) -> bool {
        let Some(v) = dsatur_pick(self.adj, &self.color, &self.forb) else {
            return true;
        };
        // colors above `used` are interchangeable; only try the first
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forb[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// Clique number with a witness clique (sorted).
pub fn clique_number_exact(g: &Graph, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    let comps = g.components();
    let largest = comps.iter().map(Vec::len).max().unwrap_or(0);
    check_cap("clique number", largest, caps.clique.min(64))?;
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    for comp in &comps {
        if comp.len() <= best.0 {
            continue;
        }
        let sub = g.induced(comp);
        let adj: Vec<u64> = sub
            .vertices()
            .map(|v| sub.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
            .collect();
        let (size, bits) = max_clique_bits(&adj);
        if size > best.0 {
            let mut w: Vec<usize> = (0..comp.len())
                .filter(|&i| bits >> i & 1 == 1)
                .map(|i| comp[i])
                .collect();
            w.sort_unstable();
            best = (size, w);
        }
    }
    Ok(best)
}

/// Bron–Kerbosch with Tomita pivoting and a size bound, on bitset
/// adjacency. Returns the first maximum clique found.
fn max_clique_bits(adj: &[u64]) -> (usize, u64) {
    fn expand(adj: &[u64], r: u64, p: u64, x: u64, best: &mut (usize, u64)) {
        let size = r.count_ones() as usize;
        if p == 0 {
            if x == 0 && size > best.0 {
                *best = (size, r);
            }
            return;
        }
        if size + p.count_ones() as usize <= best.0 {
            return;
        }
        let px = p | x;
        let mut pivot = 0;
        let mut most = -1i32;
        let mut bits = px;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let cnt = (p & adj[u]).count_ones() as i32;
            if cnt > most {
                most = cnt;
                pivot = u;
            }
        }
        let mut cand = p & !adj[pivot];
        let (mut p, mut x) = (p, x);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(adj, r | 1 << v, p & adj[v], x & adj[v], best);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let n = adj.len();
    if n == 0 {
        return (0, 0);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = (0, 0);
    expand(adj, 0, all, 0, &mut best);
    best
}
