//! Brute-force oracles that share no code with the library algorithms.
//! Each follows a definition directly and is only fit for tiny inputs.

#![allow(dead_code)]

use std::collections::BTreeSet;

use sigmacolor::{Coloring, Graph, NeighborhoodSystem};

/// Pairs `{u, v}` lying together in some `Σ(w)`, straight from the sets.
pub fn constraint_pairs(s: &NeighborhoodSystem) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for set in s.sets() {
        for &u in set {
            for &v in set {
                if u < v {
                    out.insert((u, v));
                }
            }
        }
    }
    out
}

pub fn adjacency(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Fewest colors over every assignment in `k^n`, tried for `k = 0, 1, ...`.
pub fn brute_chromatic(n: usize, edges: &BTreeSet<(usize, usize)>) -> usize {
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = vec![0; n];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = x % k;
                x /= k;
            }
            if edges.iter().all(|&(u, v)| c[u] != c[v]) {
                return k;
            }
        }
    }
    n
}

/// Largest clique by subset enumeration.
pub fn brute_clique(n: usize, edges: &BTreeSet<(usize, usize)>) -> usize {
    let adj = adjacency(n, edges);
    (0u32..1 << n)
        .filter(|&m| {
            (0..n)
                .all(|u| (0..n).all(|v| u >= v || m >> u & 1 == 0 || m >> v & 1 == 0 || adj[u][v]))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// `max 2|E(H)|/|V(H)|` over nonempty vertex subsets, as a reduced
/// fraction `(num, den)`.
pub fn brute_mad(n: usize, edges: &BTreeSet<(usize, usize)>) -> (u64, u64) {
    let mut best = (0u64, 1u64);
    for m in 1u32..1 << n {
        let v = m.count_ones() as u64;
        let e = edges
            .iter()
            .filter(|&&(a, b)| m >> a & 1 == 1 && m >> b & 1 == 1)
            .count() as u64;
        if 2 * e * best.1 > best.0 * v {
            best = (2 * e, v);
        }
    }
    let g = gcd(best.0, best.1);
    (best.0 / g, best.1 / g)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Star coloring by definition: proper, and every two-colored component
/// is a star (a tree with at most one vertex of degree above one).
pub fn star_by_components(g: &Graph, c: &Coloring) -> bool {
    if g.edges().iter().any(|&(u, v)| c.color(u) == c.color(v)) {
        return false;
    }
    let colors: BTreeSet<usize> = c.colors().iter().copied().collect();
    for &a in &colors {
        for &b in &colors {
            if a >= b {
                continue;
            }
            let inside: Vec<bool> = g
                .vertices()
                .map(|v| c.color(v) == a || c.color(v) == b)
                .collect();
            let mut seen = vec![false; g.n()];
            for start in g.vertices() {
                if !inside[start] || seen[start] {
                    continue;
                }
                let mut comp = vec![start];
                seen[start] = true;
                let mut i = 0;
                while i < comp.len() {
                    for &u in g.neighbors(comp[i]) {
                        if inside[u] && !seen[u] {
                            seen[u] = true;
                            comp.push(u);
                        }
                    }
                    i += 1;
                }
                let deg = |v: usize| g.neighbors(v).iter().filter(|&&u| inside[u]).count();
                let edges: usize = comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
                let hubs = comp.iter().filter(|&&v| deg(v) > 1).count();
                if edges + 1 != comp.len() || hubs > 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether some orientation makes every two-colored path `u w v` point
/// into `w`. An edge `uw` must point into `w` iff `w` has a second
/// neighbor colored like `u`; such an orientation exists iff no edge is
/// forced both ways.
pub fn in_orientation_exists(g: &Graph, c: &Coloring) -> bool {
    if g.edges().iter().any(|&(u, v)| c.color(u) == c.color(v)) {
        return false;
    }
    let forced_into = |u: usize, w: usize| {
        g.neighbors(w)
            .iter()
            .filter(|&&x| c.color(x) == c.color(u))
            .count()
            >= 2
    };
    g.edges()
        .iter()
        .all(|&(u, v)| !(forced_into(u, v) && forced_into(v, u)))
}

/// Same question by trying all `2^m` orientations.
pub fn in_orientation_exists_brute(g: &Graph, c: &Coloring) -> bool {
    if g.edges().iter().any(|&(u, v)| c.color(u) == c.color(v)) {
        return false;
    }
    let edges = g.edges();
    assert!(
        edges.len() <= 20,
        "brute force over orientations is for tiny graphs"
    );
    'outer: for mask in 0u32..1 << edges.len() {
        let head = |u: usize, v: usize| {
            let i = edges
                .iter()
                .position(|&e| e == (u.min(v), u.max(v)))
                .unwrap();
            if mask >> i & 1 == 1 {
                u.max(v)
            } else {
                u.min(v)
            }
        };
        for w in g.vertices() {
            for &u in g.neighbors(w) {
                for &v in g.neighbors(w) {
                    if u < v && c.color(u) == c.color(v) && (head(u, w) != w || head(v, w) != w) {
                        continue 'outer;
                    }
                }
            }
        }
        return true;
    }
    false
}

/// Arrangeability minimized over all `n!` orderings, charges recounted
/// from the definition.
pub fn brute_arrangeability(g: &Graph) -> usize {
    fn charge(g: &Graph, pos: &[usize], v: usize) -> usize {
        (0..g.n())
            .filter(|&w| {
                pos[w] < pos[v]
                    && g.vertices()
                        .any(|u| pos[u] > pos[v] && g.has_edge(u, v) && g.has_edge(u, w))
            })
            .count()
    }
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    loop {
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        best = best.min((0..n).map(|v| charge(g, &pos, v)).max().unwrap_or(0));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best
}

/// Every restricted-growth string of length `n` using at most `k` values:
/// each coloring up to renaming, once.
pub fn canonical_colorings(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..(used + 1).min(k) {
            cur.push(c);
            rec(n, k, cur, used.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), 0, &mut out);
    out
}

/// The graph on `n` vertices whose edge set is encoded by the bits of
/// `mask` over pairs in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Rank-two fullness by definition: every pair of `y` lies in a hyperedge
/// meeting `y` in exactly that pair.
pub fn rank2_full_brute(hyperedges: &[Vec<usize>], y: &[usize]) -> bool {
    let inside: BTreeSet<usize> = y.iter().copied().collect();
    y.iter().all(|&u| {
        y.iter().all(|&v| {
            u == v
                || hyperedges.iter().any(|e| {
                    e.contains(&u)
                        && e.contains(&v)
                        && e.iter().filter(|x| inside.contains(x)).count() == 2
                })
        })
    })
}
