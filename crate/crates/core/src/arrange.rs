//! Arrangeability of vertex orderings.
//!
//! For an ordering `≺`, vertex `v` is charged with every earlier `w` that
//! shares a neighbor `u` with `v` where `v ≺ u`. The arrangeability of the
//! ordering is the largest charge.

use serde::Serialize;

use crate::error::Result;
use crate::exact::{check_cap, Caps};
use crate::graph::{degeneracy_ordering, Graph, Ordering};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangeabilityCertificate {
    #[serde(serialize_with = "serialize_ordering")]
    pub ordering: Ordering,
    pub k: usize,
    /// Earliest vertex (in the ordering) carrying charge `k`; `None` on the
    /// empty graph.
    pub worst_vertex: Option<usize>,
}

fn serialize_ordering<S: serde::Serializer>(
    o: &Ordering,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(o.perm())
}

/// Charge of `v`: earlier vertices sharing a later common neighbor with it.
pub fn charge(g: &Graph, o: &Ordering, v: usize) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for &u in g.neighbors(v) {
        if !o.precedes(v, u) {
            continue;
        }
        for &w in g.neighbors(u) {
            if w != v && o.precedes(w, v) && !seen[w] {
                seen[w] = true;
                count += 1;
            }
        }
    }
    count
}

pub fn arrangeability_of_ordering(g: &Graph, o: &Ordering) -> Result<ArrangeabilityCertificate> {
    o.check_for(g)?;
    let mut best: Option<(usize, usize)> = None;
    for &v in o.perm() {
        let c = charge(g, o, v);
        if best.is_none_or(|(k, _)| c > k) {
            best = Some((c, v));
        }
    }
    Ok(ArrangeabilityCertificate {
        ordering: o.clone(),
        k: best.map_or(0, |b| b.0),
        worst_vertex: best.map(|b| b.1),
    })
}

/// Minimum arrangeability over all orderings, with the lexicographically
/// smallest optimal ordering.
///
/// The charge of `v` depends only on the set of vertices placed before it,
/// so the search is a bottleneck dynamic program over prefix sets.
pub fn arrangeability_exact(g: &Graph, caps: &Caps) -> Result<ArrangeabilityCertificate> {
    let n = g.n();
    check_cap("arrangeability", n, caps.arrangeability.min(26))?;
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let prefix_charge = |placed: u32, v: usize| -> u8 {
        let mut reach = 0u32;
        let mut later = adj[v] & !placed;
        while later != 0 {
            let u = later.trailing_zeros() as usize;
            later &= later - 1;
            reach |= adj[u];
        }
        (reach & placed).count_ones() as u8
    };
    // rest[S]: best achievable max charge for the vertices after prefix S
    let mut rest = vec![u8::MAX; 1usize << n];
    rest[full as usize] = 0;
    for placed in (0..full).rev() {
        let mut best = u8::MAX;
        let mut free = full & !placed;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let c = prefix_charge(placed, v).max(rest[(placed | 1 << v) as usize]);
            best = best.min(c);
        }
        rest[placed as usize] = best;
    }
    let k = rest[0];
    let mut perm = Vec::with_capacity(n);
    let mut placed = 0u32;
    for _ in 0..n {
        let v = (0..n)
            .find(|&v| {
                placed >> v & 1 == 0
                    && prefix_charge(placed, v).max(rest[(placed | 1 << v) as usize]) <= k
            })
            .expect("an optimal continuation exists");
        perm.push(v);
        placed |= 1 << v;
    }
    let cert = arrangeability_of_ordering(g, &Ordering::new(perm)?)?;
    debug_assert_eq!(cert.k, k as usize);
    Ok(cert)
}

/// Degeneracy ordering; no optimality claim.
pub fn heuristic_ordering(g: &Graph) -> Ordering {
    degeneracy_ordering(g).0
}
