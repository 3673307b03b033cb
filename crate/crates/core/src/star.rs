//! Star colorings, colored in-orientations, greedy list star coloring from
//! an ordering, and exact star/acyclic chromatic numbers.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exact::{check_cap, Caps};
use crate::graph::{is_proper, Coloring, Graph, Ordering};

/// An orientation of every edge plus the coloring it is paired with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InOrientation {
    /// `(tail, head)` for every edge, in the order of `Graph::edges`.
    pub arcs: Vec<(usize, usize)>,
    pub coloring: Coloring,
}

impl InOrientation {
    /// Builds an orientation, checking that every edge of `g` appears
    /// exactly once and nothing else does.
    pub fn new(g: &Graph, arcs: Vec<(usize, usize)>, coloring: Coloring) -> Result<Self> {
        coloring.check_for(g)?;
        let mut seen = BTreeSet::new();
        for &(a, b) in &arcs {
            if !g.has_edge(a, b) || !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Precondition(format!(
                    "arc ({a}, {b}) is not a fresh edge"
                )));
            }
        }
        if seen.len() != g.m() {
            return Err(Error::Precondition("orientation misses edges".into()));
        }
        Ok(InOrientation { arcs, coloring })
    }

    pub fn out_degrees(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &(tail, _) in &self.arcs {
            out[tail] += 1;
        }
        out
    }

    pub fn head_of(&self) -> BTreeMap<(usize, usize), usize> {
        self.arcs
            .iter()
            .map(|&(a, b)| ((a.min(b), a.max(b)), b))
            .collect()
    }
}

/// Per vertex color lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<usize>>) -> Result<Self> {
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(Error::Precondition(format!("vertex {v} has an empty list")));
            }
        }
        Ok(ListAssignment { lists })
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

/// Colors available to the greedy: the same `0..k` everywhere, or lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Palette {
    Uniform(usize),
    Lists(ListAssignment),
}

/// Proper, and no path on four vertices uses only two colors.
pub fn is_star_coloring(g: &Graph, c: &Coloring) -> bool {
    if !is_proper(g, c) {
        return false;
    }
    // a bichromatic P4 a-b-x-y has middle edge bx with c(a) = c(x) and c(y) = c(b)
    g.edges().iter().all(|&(b, x)| {
        let (cb, cx) = (c.color(b), c.color(x));
        let b_side = g.neighbors(b).iter().any(|&a| a != x && c.color(a) == cx);
        let x_side = g.neighbors(x).iter().any(|&y| y != b && c.color(y) == cb);
        !(b_side && x_side)
    })
}

/// Proper coloring, and every path `u–w–v` with `c(u) = c(v)` has both
/// edges pointing into `w`.
pub fn verify_in_orientation(g: &Graph, io: &InOrientation) -> bool {
    let c = &io.coloring;
    if !is_proper(g, c) || io.arcs.len() != g.m() {
        return false;
    }
    let head = io.head_of();
    if head.len() != g.m() {
        return false;
    }
    for w in g.vertices() {
        let nbrs = g.neighbors(w);
        for (i, &u) in nbrs.iter().enumerate() {
            for &v in &nbrs[i + 1..] {
                if c.color(u) == c.color(v) {
                    let into_u = head.get(&(u.min(w), u.max(w))) == Some(&w);
                    let into_v = head.get(&(v.min(w), v.max(w))) == Some(&w);
                    if !(into_u && into_v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Orients every edge toward the center of its bicolored star. A
/// single-edge star points at its lower endpoint.
pub fn orientation_from_star_coloring(g: &Graph, c: &Coloring) -> Result<InOrientation> {
    c.check_for(g)?;
    if !is_star_coloring(g, c) {
        return Err(Error::NotAStarColoring);
    }
    // number of neighbors of `x` colored like `y`
    let pair_degree = |x: usize, y: usize| {
        g.neighbors(x)
            .iter()
            .filter(|&&z| c.color(z) == c.color(y))
            .count()
    };
    let arcs = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if pair_degree(u, v) >= 2 {
                (v, u)
            } else if pair_degree(v, u) >= 2 {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    InOrientation::new(g, arcs, c.clone())
}

/// `P(v)`: vertices before `v` that are adjacent to `v` or reach it by a
/// path `u–w–v` with `u ≺ w`.
fn conflict_set(g: &Graph, o: &Ordering, v: usize, mark: &mut [usize], stamp: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &w in g.neighbors(v) {
        if o.precedes(w, v) && mark[w] != stamp {
            mark[w] = stamp;
            out.push(w);
        }
        for &u in g.neighbors(w) {
            if u != v && o.precedes(u, v) && o.precedes(u, w) && mark[u] != stamp {
                mark[u] = stamp;
                out.push(u);
            }
        }
    }
    out
}

/// Colors vertices in order, giving each a color absent from its conflict
/// set. Completes only with a star coloring.
pub fn greedy_star_coloring(g: &Graph, o: &Ordering, palette: &Palette) -> Result<Coloring> {
    o.check_for(g)?;
    if let Palette::Lists(l) = palette {
        if l.len() != g.n() {
            return Err(Error::Precondition(format!(
                "{} lists for {} vertices",
                l.len(),
                g.n()
            )));
        }
    }
    let mut color = vec![usize::MAX; g.n()];
    let mut mark = vec![usize::MAX; g.n()];
    let mut taken = BTreeSet::new();
    for (step, &v) in o.perm().iter().enumerate() {
        taken.clear();
        taken.extend(
            conflict_set(g, o, v, &mut mark, step)
                .into_iter()
                .map(|u| color[u]),
        );
        let pick = match palette {
            Palette::Uniform(k) => (0..*k).find(|c| !taken.contains(c)),
            Palette::Lists(l) => l.list(v).iter().copied().find(|c| !taken.contains(c)),
        };
        color[v] = pick.ok_or(Error::ListExhausted { vertex: v })?;
    }
    Ok(Coloring::new(color))
}

/// Static search order: start at a maximum-degree vertex, then repeatedly
/// take the vertex with most already-ordered neighbors.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (hits[a], g.degree(a))
                    .cmp(&(hits[b], g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            hits[u] += 1;
        }
    }
    order
}

/// Local validity test: does the partial coloring stay valid around `v`.
type LocalCheck = dyn Fn(&Graph, &[Option<usize>], usize) -> bool;

/// Backtracking over colorings with `k` colors and a local validity check
/// evaluated after each assignment. Colors above the largest used so far
/// are interchangeable, so only the first is tried.
fn color_search(g: &Graph, k: usize, ok: &LocalCheck) -> Option<Vec<usize>> {
    fn rec(
        g: &Graph,
        k: usize,
        order: &[usize],
        i: usize,
        used: usize,
        color: &mut Vec<Option<usize>>,
        ok: &LocalCheck,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 0..(used + 1).min(k) {
            color[v] = Some(c);
            if ok(g, color, v) && rec(g, k, order, i + 1, used.max(c + 1), color, ok) {
                return true;
            }
        }
        color[v] = None;
        false
    }
    let order = search_order(g);
    let mut color = vec![None; g.n()];
    rec(g, k, &order, 0, 0, &mut color, ok).then(|| color.into_iter().map(Option::unwrap).collect())
}

fn proper_at(g: &Graph, color: &[Option<usize>], v: usize) -> bool {
    g.neighbors(v).iter().all(|&u| color[u] != color[v])
}

/// No fully colored bichromatic P4 passes through `v`.
fn star_ok_at(g: &Graph, color: &[Option<usize>], v: usize) -> bool {
    if !proper_at(g, color, v) {
        return false;
    }
    let cv = color[v];
    // v as an end: v-a-b-x with c(b) = c(v), c(x) = c(a)
    for &a in g.neighbors(v) {
        let Some(ca) = color[a] else { continue };
        for &b in g.neighbors(a) {
            if b == v || color[b] != cv {
                continue;
            }
            if g.neighbors(b)
                .iter()
                .any(|&x| x != a && color[x] == Some(ca))
            {
                return false;
            }
        }
    }
    // v inside: a-v-b-x with c(a) = c(b), c(x) = c(v)
    for &b in g.neighbors(v) {
        let Some(cb) = color[b] else { continue };
        let other_end = g
            .neighbors(v)
            .iter()
            .any(|&a| a != b && color[a] == Some(cb));
        if other_end && g.neighbors(b).iter().any(|&x| x != v && color[x] == cv) {
            return false;
        }
    }
    true
}

/// No bicolored cycle closes through `v`: for each other color, `v`'s
/// neighbors of that color must lie in distinct components of the
/// two-colored subgraph without `v`.
fn acyclic_ok_at(g: &Graph, color: &[Option<usize>], v: usize) -> bool {
    if !proper_at(g, color, v) {
        return false;
    }
    let cv = color[v].unwrap();
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &u in g.neighbors(v) {
        if let Some(cu) = color[u] {
            by_color.entry(cu).or_default().push(u);
        }
    }
    for (&other, starts) in &by_color {
        if starts.len() < 2 {
            continue;
        }
        let mut comp = vec![usize::MAX; g.n()];
        for (id, &s) in starts.iter().enumerate() {
            if comp[s] != usize::MAX {
                return false;
            }
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if y == v || comp[y] != usize::MAX {
                        continue;
                    }
                    if color[y] == Some(cv) || color[y] == Some(other) {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
    }
    true
}

/// Star chromatic number with a witness.
pub fn star_chromatic_exact(g: &Graph, caps: &Caps) -> Result<(usize, Coloring)> {
    check_cap("star chromatic number", g.n(), caps.star)?;
    if g.n() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let start = crate::exact::clique_number_exact(g, caps)?.0.max(1);
    for k in start..=g.n() {
        if let Some(colors) = color_search(g, k, &star_ok_at) {
            let c = Coloring::new(colors);
            debug_assert!(is_star_coloring(g, &c));
            return Ok((k, c));
        }
    }
    unreachable!("distinct colors always form a star coloring")
}

/// Acyclic chromatic number: proper, and any two color classes induce a
/// forest.
pub fn acyclic_chromatic_exact(g: &Graph, caps: &Caps) -> Result<usize> {
    check_cap("acyclic chromatic number", g.n(), caps.acyclic)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let start = crate::exact::clique_number_exact(g, caps)?.0.max(1);
    Ok((start..=g.n())
        .find(|&k| color_search(g, k, &acyclic_ok_at).is_some())
        .expect("distinct colors are acyclic"))
}

/// Direct check: proper, and every pair of color classes induces a forest.
pub fn is_acyclic_coloring(g: &Graph, c: &Coloring) -> bool {
    if !is_proper(g, c) {
        return false;
    }
    let colors: BTreeSet<usize> = c.colors().iter().copied().collect();
    let colors: Vec<usize> = colors.into_iter().collect();
    for (i, &a) in colors.iter().enumerate() {
        for &b in &colors[i + 1..] {
            let keep: Vec<usize> = g
                .vertices()
                .filter(|&v| c.color(v) == a || c.color(v) == b)
                .collect();
            if !g.induced(&keep).is_forest() {
                return false;
            }
        }
    }
    true
}
