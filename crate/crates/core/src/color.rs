//! Colorings under a neighborhood system.
//!
//! A coloring is valid for `Σ` when any two vertices sharing a set `Σ(w)`
//! get distinct colors, which is the same as being proper on `G_Σ`. It need
//! not be proper on `G` itself.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::arrange::heuristic_ordering;
use crate::density::max_average_degree;
use crate::error::{Error, Result};
use crate::exact::{check_cap, chromatic_number_exact, Caps};
use crate::graph::{degeneracy_ordering, greedy_coloring, is_proper, Coloring, Graph};
use crate::sigma::{build_sigma_graph, build_sigma_graph_also_proper, NeighborhoodSystem};
use crate::star::{
    greedy_star_coloring, orientation_from_star_coloring, star_chromatic_exact, Palette,
};

pub fn is_sigma_valid(s: &NeighborhoodSystem, c: &Coloring) -> bool {
    if c.len() != s.n() {
        return false;
    }
    let mut seen = BTreeSet::new();
    s.sets().iter().all(|set| {
        seen.clear();
        set.iter().all(|&u| seen.insert(c.color(u)))
    })
}

/// Product of a star coloring with a coloring of the auxiliary graph `G₂`
/// whose edges join `u, v` when both point into a common `w` with
/// `u, v ∈ Σ(w)`.
///
/// With `k` star colors the result uses at most `k²·ρ` colors. Colors are
/// flattened as `c₁·(k·ρ) + c₂`, so they need not be contiguous.
pub fn sigma_color_via_star(
    g: &Graph,
    s: &NeighborhoodSystem,
    star: &Coloring,
) -> Result<Coloring> {
    s.check_for(g)?;
    if s.depth() != 1 {
        return Err(Error::WrongDepth {
            expected: 1,
            found: s.depth(),
        });
    }
    let io = orientation_from_star_coloring(g, star)?;
    let rho = s.rho();
    if rho == 0 {
        return Ok(Coloring::constant(g.n()));
    }
    let c1 = star.normalized();
    let k = c1.palette_size();
    let head = io.head_of();
    let points_into = |u: usize, w: usize| head.get(&(u.min(w), u.max(w))) == Some(&w);
    let mut g2_edges = BTreeSet::new();
    for w in g.vertices() {
        let inward: Vec<usize> = s
            .set(w)
            .iter()
            .copied()
            .filter(|&u| points_into(u, w))
            .collect();
        for (i, &u) in inward.iter().enumerate() {
            for &v in &inward[i + 1..] {
                g2_edges.insert((u, v));
            }
        }
    }
    let g2 = Graph::from_edges(g.n(), g2_edges)?;
    debug_assert!(g2.max_degree() <= k * (rho - 1));
    let (order, _) = degeneracy_ordering(&g2);
    let c2 = greedy_coloring(&g2, &order);
    let stride = k * rho;
    let colors = g
        .vertices()
        .map(|v| c1.color(v) * stride + c2.color(v))
        .collect();
    Ok(Coloring::new(colors))
}

/// First-fit on `G_Σ` in degeneracy order; at most `degeneracy(G_Σ) + 1`
/// colors.
pub fn sigma_color_greedy(g: &Graph, s: &NeighborhoodSystem) -> Result<Coloring> {
    let gs = build_sigma_graph(g, s)?;
    let (order, _) = degeneracy_ordering(&gs);
    Ok(greedy_coloring(&gs, &order))
}

/// Splits every `Σ(v)` into its pairs, colors each pair system with
/// `pair_colorer`, and returns the tuple of slot colors (renamed to
/// `0..palette`).
///
/// Slot `j` holds the `j`-th pair of `Σ(v)` in lexicographic order, or
/// nothing when `Σ(v)` has fewer pairs.
pub fn sigma_color_product<F>(
    g: &Graph,
    s: &NeighborhoodSystem,
    pair_colorer: F,
) -> Result<Coloring>
where
    F: Fn(&Graph, &NeighborhoodSystem) -> Result<Coloring>,
{
    s.check_for(g)?;
    let rho = s.rho();
    let slots = rho * rho.saturating_sub(1) / 2;
    let mut tuples: Vec<Vec<usize>> = vec![Vec::with_capacity(slots); g.n()];
    for j in 0..slots {
        let sets: Vec<Vec<usize>> = s
            .sets()
            .iter()
            .map(|set| nth_pair(set, j).map_or_else(Vec::new, |(a, b)| vec![a, b]))
            .collect();
        let slot = NeighborhoodSystem::from_subsets(s, sets);
        let c = pair_colorer(g, &slot)?;
        c.check_for(g)?;
        if !is_sigma_valid(&slot, &c) {
            return Err(Error::Precondition(format!(
                "pair colorer returned an invalid coloring for slot {j}"
            )));
        }
        for v in g.vertices() {
            tuples[v].push(c.color(v));
        }
    }
    Ok(flatten_tuples(&tuples))
}

/// `j`-th pair of a sorted set in lexicographic order.
fn nth_pair(set: &[usize], mut j: usize) -> Option<(usize, usize)> {
    for (i, &a) in set.iter().enumerate() {
        let rest = set.len() - i - 1;
        if j < rest {
            return Some((a, set[i + 1 + j]));
        }
        j -= rest;
    }
    None
}

fn flatten_tuples(tuples: &[Vec<usize>]) -> Coloring {
    let mut ids: BTreeMap<&[usize], usize> = BTreeMap::new();
    let colors = tuples
        .iter()
        .map(|t| {
            let next = ids.len();
            *ids.entry(t.as_slice()).or_insert(next)
        })
        .collect();
    Coloring::new(colors)
}

pub fn sigma_chromatic_exact(g: &Graph, s: &NeighborhoodSystem, caps: &Caps) -> Result<usize> {
    Ok(chromatic_number_exact(&build_sigma_graph(g, s)?, caps)?.0)
}

/// Decides whether every assignment of `k`-lists to the vertices admits a
/// proper coloring from the lists.
///
/// Vertices of degree below `k` are peeled first (they can always be
/// colored last), and the cap applies to what remains. Lists are then
/// enumerated up to renaming of colors: each vertex takes some colors
/// already seen plus a number of fresh ones, which keeps the universe
/// within `k·|V|` colors.
pub fn choosability_check(g_sigma: &Graph, k: usize, caps: &Caps) -> Result<bool> {
    if k == 0 {
        return Ok(g_sigma.n() == 0);
    }
    check_cap("choosability list size", k, caps.choosability_k)?;
    let core = k_core(g_sigma, k);
    if core.is_empty() {
        return Ok(true);
    }
    check_cap("choosability", core.len(), caps.choosability_vertices)?;
    let h = g_sigma.induced(&core);
    let mut search = ListSearch {
        g: &h,
        k,
        order: bfs_order(&h),
        lists: vec![Vec::new(); h.n()],
    };
    Ok(!search.find_bad(0, 0))
}

/// Vertices surviving repeated removal of vertices with degree `< k`.
fn k_core(g: &Graph, k: usize) -> Vec<usize> {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<usize> = g.vertices().filter(|&v| deg[v] < k).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] < k {
                    stack.push(u);
                }
            }
        }
    }
    g.vertices().filter(|&v| alive[v]).collect()
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let mut seen = BTreeSet::from([comp[0]]);
        let mut queue = std::collections::VecDeque::from([comp[0]]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbors(v) {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

struct ListSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    lists: Vec<Vec<usize>>,
}

impl ListSearch<'_> {
    /// `true` if some completion of the current lists is not colorable.
    fn find_bad(&mut self, i: usize, seen_colors: usize) -> bool {
        if i > 0 && !self.colorable(i) {
            return true;
        }
        if i == self.order.len() {
            return false;
        }
        let v = self.order[i];
        let k = self.k;
        for fresh in k.saturating_sub(seen_colors)..=k {
            let old = k - fresh;
            let mut found = false;
            for_each_combination(seen_colors, old, &mut |combo| {
                let mut list = combo.to_vec();
                list.extend(seen_colors..seen_colors + fresh);
                self.lists[v] = list;
                if self.find_bad(i + 1, seen_colors + fresh) {
                    found = true;
                }
                found
            });
            if found {
                return true;
            }
        }
        self.lists[v].clear();
        false
    }

    /// Can the first `len` vertices of the order be colored from their lists?
    fn colorable(&self, len: usize) -> bool {
        fn rec(s: &ListSearch<'_>, i: usize, len: usize, color: &mut Vec<Option<usize>>) -> bool {
            if i == len {
                return true;
            }
            let v = s.order[i];
            for &c in &s.lists[v] {
                if s.g.neighbors(v).iter().all(|&u| color[u] != Some(c)) {
                    color[v] = Some(c);
                    if rec(s, i + 1, len, color) {
                        return true;
                    }
                }
            }
            color[v] = None;
            false
        }
        rec(self, 0, len, &mut vec![None; self.g.n()])
    }
}

/// Calls `f` on every `r`-subset of `0..n` in lexicographic order until it
/// returns `true`.
fn for_each_combination(n: usize, r: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if f(&idx) {
            return;
        }
        let mut i = r;
        while i > 0 && idx[i - 1] == n - r + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Greedy,
    StarPipeline,
    Product,
    Exact,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            "star-pipeline" => Ok(Strategy::StarPipeline),
            "product" => Ok(Strategy::Product),
            "exact" => Ok(Strategy::Exact),
            other => Err(Error::Precondition(format!("unknown strategy {other}"))),
        }
    }
}

/// Machine-readable result of a coloring run. `valid` is always recomputed
/// from the system, never taken from the strategy.
#[derive(Debug, Clone, Serialize)]
pub struct ColoringReport {
    pub palette_size: usize,
    pub colors: Vec<usize>,
    pub valid: bool,
    pub bound_used: String,
    pub wall_time_ms: f64,
}

/// Runs one strategy. With `also_proper` the coloring must additionally be
/// proper on `g`.
pub fn color_with_strategy(
    g: &Graph,
    s: &NeighborhoodSystem,
    strategy: Strategy,
    caps: &Caps,
    also_proper: bool,
) -> Result<ColoringReport> {
    let start = Instant::now();
    let rho = s.rho();
    let (coloring, bound_used) = match strategy {
        Strategy::Greedy | Strategy::Exact => {
            let target = if also_proper {
                build_sigma_graph_also_proper(g, s)?
            } else {
                build_sigma_graph(g, s)?
            };
            if strategy == Strategy::Exact {
                let (k, c) = chromatic_number_exact(&target, caps)?;
                (c, format!("chromatic number of constraint graph = {k}"))
            } else {
                let mad = max_average_degree(&target);
                let (order, _) = degeneracy_ordering(&target);
                let c = greedy_coloring(&target, &order);
                (c, format!("floor(mad)+1 = {}", mad.to_integer() + 1))
            }
        }
        Strategy::StarPipeline => {
            let star = if g.n() <= caps.star {
                star_chromatic_exact(g, caps)?.1
            } else {
                greedy_star_coloring(g, &heuristic_ordering(g), &Palette::Uniform(g.n().max(1)))?
            };
            let k = star.palette_size();
            let c = sigma_color_via_star(g, s, &star)?;
            (c, format!("k^2*rho = {}^2*{} = {}", k, rho, k * k * rho))
        }
        Strategy::Product => {
            let mut c = sigma_color_product(g, s, sigma_color_greedy)?;
            if also_proper {
                let (order, _) = degeneracy_ordering(g);
                let base = greedy_coloring(g, &order);
                let tuples: Vec<Vec<usize>> = g
                    .vertices()
                    .map(|v| vec![c.color(v), base.color(v)])
                    .collect();
                c = flatten_tuples(&tuples);
            }
            let slots = rho * rho.saturating_sub(1) / 2;
            (c, format!("k^C(rho,2) with C({rho},2) = {slots}"))
        }
    };
    let mut valid = is_sigma_valid(s, &coloring);
    if also_proper {
        valid &= is_proper(g, &coloring);
    }
    Ok(ColoringReport {
        palette_size: coloring.palette_size(),
        colors: coloring.colors().to_vec(),
        valid,
        bound_used,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
