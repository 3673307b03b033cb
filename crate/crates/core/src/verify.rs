//! Seeded self-check harness.
//!
//! Each suite draws instances deterministically from a seed, evaluates a
//! family of inequalities with the exact oracles, and records one
//! [`Check`] per instance. Reports are identical for identical seeds apart
//! from `timestamp`.

use std::time::{SystemTime, UNIX_EPOCH};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arrange::arrangeability_exact;
use crate::color::{
    choosability_check, is_sigma_valid, sigma_chromatic_exact, sigma_color_via_star,
};
use crate::density::max_average_degree;
use crate::error::{Error, Result};
use crate::exact::{chromatic_number_exact, Caps};
use crate::families::{
    encode_depth_d_system, gen_random_instance, gen_star_example, gen_subdivided_biclique,
    gen_subdivided_clique, gen_subdivision, random_full_hypergraph,
};
use crate::graph::{degeneracy, Graph};
use crate::hypergraph::{
    extract_rank2_subhypergraph, extract_subdivided_clique, is_rank2_full_on, omega_sigma,
    rank2_threshold,
};
use crate::io::{write_graph, write_sigma};
use crate::sigma::{build_sigma_graph, mad_sigma, NeighborhoodSystem};
use crate::star::{greedy_star_coloring, is_star_coloring, star_chromatic_exact, Palette};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Chain,
    /// Star-coloring pipeline palette bound; CLI name `lemma1`.
    Lemma1,
    Arrangeability,
    Turan,
    Families,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Chain,
        Suite::Lemma1,
        Suite::Arrangeability,
        Suite::Turan,
        Suite::Families,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chain => "chain",
            Suite::Lemma1 => "lemma1",
            Suite::Arrangeability => "arrangeability",
            Suite::Turan => "turan",
            Suite::Families => "families",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub index: usize,
    pub instance: String,
    /// First 16 hex digits of the SHA-256 of the instance files.
    pub hash: String,
    pub values: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub checks: Vec<Check>,
    pub failures: usize,
    /// Seconds since the Unix epoch; the only non-deterministic field.
    pub timestamp: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn instance_hash(g: &Graph, s: Option<&NeighborhoodSystem>) -> String {
    let mut h = Sha256::new();
    h.update(write_graph(g));
    if let Some(s) = s {
        h.update(write_sigma(s));
    }
    hex::encode(&h.finalize()[..8])
}

/// Random depth-1 instance number `index` of the stream for `seed`, with
/// `1..=max_n` vertices, edge probability in `[0.15, 0.6)` and
/// `ρ ≤ rho_cap`.
pub fn sample_instance(
    seed: u64,
    index: usize,
    max_n: usize,
    rho_cap: usize,
) -> Result<(Graph, NeighborhoodSystem)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(1..=max_n.max(1));
    let p = rng.gen_range(0.15..0.6);
    gen_random_instance(n, p, rho_cap, rng.gen())
}

/// Runs `count` randomized instances (plus fixtures where the suite has
/// them).
pub fn run_suite(suite: Suite, seed: u64, count: usize, caps: &Caps) -> Result<Report> {
    let mut checks = Vec::new();
    match suite {
        Suite::Chain => {
            for i in 0..count {
                let (g, s) = sample_instance(seed, i, 16, 4)?;
                checks.push(chain_check(i, format!("random#{i}"), &g, &s, caps)?);
            }
        }
        Suite::Lemma1 => {
            let mut fixtures = Vec::new();
            for n in 2..=4 {
                let f = gen_subdivided_clique(n)?;
                fixtures.push((format!("K{n}*"), f.graph, f.system));
            }
            for (i, (name, g, s)) in fixtures.into_iter().enumerate() {
                checks.push(star_pipeline_check(i, name, &g, &s, caps)?);
            }
            let base = checks.len();
            for i in 0..count {
                let (g, s) = sample_instance(seed, i, 12, 4)?;
                checks.push(star_pipeline_check(
                    base + i,
                    format!("random#{i}"),
                    &g,
                    &s,
                    caps,
                )?);
            }
        }
        Suite::Arrangeability => {
            for i in 0..count {
                let (g, s) = sample_instance(seed, i, 10, 4)?;
                checks.push(arrangeability_check(
                    i,
                    format!("random#{i}"),
                    &g,
                    &s,
                    caps,
                )?);
            }
        }
        Suite::Turan => {
            let mut i = 0;
            for (rank, n) in [(2, 3), (3, 3), (3, 4)] {
                for j in 0..count {
                    checks.push(rank2_check(i, rank, n, seed.wrapping_add(j as u64))?);
                    i += 1;
                }
            }
            for n in [1, 2, 3] {
                checks.push(subdivision_check(i, n)?);
                i += 1;
            }
        }
        Suite::Families => checks = family_checks(caps)?,
    }
    let failures = checks.iter().filter(|c| !c.pass).count();
    Ok(Report {
        suite: suite.name().into(),
        seed,
        count,
        checks,
        failures,
        timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs()),
    })
}

/// `ρ ≤ ω ≤ χ ≤ ⌊mad⌋ + 1`, and `ch ≤ ⌊mad⌋ + 1` when the list check fits.
pub fn chain_check(
    index: usize,
    instance: String,
    g: &Graph,
    s: &NeighborhoodSystem,
    caps: &Caps,
) -> Result<Check> {
    let gs = build_sigma_graph(g, s)?;
    let rho = s.rho();
    let (omega, _) = omega_sigma(g, s, caps)?;
    let (chi, _) = chromatic_number_exact(&gs, caps)?;
    let mad = mad_sigma(g, s)?;
    let bound = (mad.to_integer() + 1) as usize;
    let ch_ok = match choosability_check(&gs, bound, caps) {
        Ok(b) => Some(b),
        Err(Error::InstanceTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let pass = rho <= omega && omega <= chi && chi <= bound && ch_ok != Some(false);
    Ok(Check {
        index,
        instance,
        hash: instance_hash(g, Some(s)),
        values: json!({
            "n": g.n(), "rho": rho, "omega": omega, "chi": chi,
            "mad": mad.to_string(), "mad_bound": bound, "ch_within_bound": ch_ok,
        }),
        pass,
    })
}

/// Star-pipeline output is Σ-valid with at most `k²ρ` colors, `k = χ_s(G)`.
pub fn star_pipeline_check(
    index: usize,
    instance: String,
    g: &Graph,
    s: &NeighborhoodSystem,
    caps: &Caps,
) -> Result<Check> {
    let (k, star) = star_chromatic_exact(g, caps)?;
    let c = sigma_color_via_star(g, s, &star)?;
    let rho = s.rho();
    let bound = (k * k * rho).max(1);
    let valid = is_sigma_valid(s, &c);
    let palette = c.palette_size();
    Ok(Check {
        index,
        instance,
        hash: instance_hash(g, Some(s)),
        values: json!({ "n": g.n(), "rho": rho, "star_k": k, "palette": palette, "bound": bound, "valid": valid }),
        pass: valid && palette <= bound,
    })
}

/// With `k` the exact arrangeability of `G`: `degeneracy(G_Σ) ≤ (2k+1)ρ`,
/// and greedy star coloring along the optimal ordering stays within
/// `(k+2)²` colors.
pub fn arrangeability_check(
    index: usize,
    instance: String,
    g: &Graph,
    s: &NeighborhoodSystem,
    caps: &Caps,
) -> Result<Check> {
    let cert = arrangeability_exact(g, caps)?;
    let k = cert.k;
    let rho = s.rho();
    let degen = degeneracy(&build_sigma_graph(g, s)?);
    let star = greedy_star_coloring(g, &cert.ordering, &Palette::Uniform((k + 2) * (k + 2)))?;
    let star_ok = is_star_coloring(g, &star);
    let back_ok = cert.ordering.max_back_degree(g) <= k + 1;
    Ok(Check {
        index,
        instance,
        hash: instance_hash(g, Some(s)),
        values: json!({
            "n": g.n(), "rho": rho, "arrangeability": k, "degeneracy_sigma": degen,
            "degeneracy_bound": (2 * k + 1) * rho, "star_palette": star.palette_size(),
            "star_bound": (k + 2) * (k + 2), "star_valid": star_ok,
        }),
        pass: degen <= (2 * k + 1) * rho && star_ok && back_ok,
    })
}

/// Rank-two extraction on a random full hypergraph at the threshold size.
pub fn rank2_check(index: usize, rank: usize, n: usize, seed: u64) -> Result<Check> {
    let h = random_full_hypergraph(rank2_threshold(rank, n), rank, seed);
    let mut hasher = Sha256::new();
    hasher.update(crate::io::write_hypergraph(&h));
    let hash = hex::encode(&hasher.finalize()[..8]);
    let instance = format!("full-hypergraph(r={rank}, n={n}, seed={seed})");
    let (values, pass) = match extract_rank2_subhypergraph(&h, n, seed) {
        Ok(x) => {
            let full = is_rank2_full_on(&h, &x.vertices);
            (
                json!({ "vertices": h.n(), "rank": h.rank(), "n": n, "size": x.vertices.len(),
                        "rounds": x.rounds, "bad_pairs": x.bad_pairs, "rank2_full": full }),
                full && x.vertices.len() >= n,
            )
        }
        Err(e) => (
            json!({ "vertices": h.n(), "rank": h.rank(), "n": n, "error": e.to_string() }),
            false,
        ),
    };
    Ok(Check {
        index,
        instance,
        hash,
        values,
        pass,
    })
}

/// 1-subdivided `K_n` recovered from the branch vertices of `K_{3n}*`.
pub fn subdivision_check(index: usize, n: usize) -> Result<Check> {
    let f = gen_subdivided_clique((3 * n).max(2))?;
    let c: Vec<usize> = (0..3 * n).collect();
    let (values, pass) = match extract_subdivided_clique(&f.graph, &f.system, &c, n) {
        Ok(sc) => {
            let ok = sc.branch.len() >= n && sc.is_subgraph_of(&f.graph);
            (
                json!({ "n": n, "branch": sc.branch, "subdividers": sc.subdividers.len(), "verified": ok }),
                ok,
            )
        }
        Err(e) => (json!({ "n": n, "error": e.to_string() }), false),
    };
    Ok(Check {
        index,
        instance: format!("K{}*", 3 * n),
        hash: instance_hash(&f.graph, Some(&f.system)),
        values,
        pass,
    })
}

fn family_checks(caps: &Caps) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=7 {
        let f = gen_subdivided_clique(n)?;
        let chi = sigma_chromatic_exact(&f.graph, &f.system, caps)?;
        let stats_ok = f.stats.vertices == f.graph.n()
            && f.stats.edges == f.graph.m()
            && f.stats.rho == f.system.rho()
            && f.stats.depth == f.system.depth();
        out.push(Check {
            index: out.len(),
            instance: format!("K{n}*"),
            hash: instance_hash(&f.graph, Some(&f.system)),
            values: json!({ "n": n, "rho": f.system.rho(), "chi_sigma": chi, "stats": f.stats }),
            pass: chi == n && f.system.rho() == 2 && stats_ok,
        });
    }
    for n in 2..=7 {
        let f = gen_star_example(n)?;
        let chi = sigma_chromatic_exact(&f.graph, &f.system, caps)?;
        let (omega, _) = omega_sigma(&f.graph, &f.system, caps)?;
        let mad = max_average_degree(&f.graph);
        let depth1 = NeighborhoodSystem::new(&f.graph, f.system.sets().to_vec(), 1).is_ok();
        out.push(Check {
            index: out.len(),
            instance: format!("S{n}"),
            hash: instance_hash(&f.graph, Some(&f.system)),
            values: json!({
                "n": n, "depth": f.system.depth(), "chi_sigma": chi, "omega_sigma": omega,
                "tree": f.graph.is_forest(), "mad_graph": mad.to_string(), "depth1_valid": depth1,
            }),
            pass: chi == n
                && omega == n
                && f.graph.is_forest()
                && mad <= num_rational::Ratio::from_integer(2)
                && !depth1
                && f.system.depth() == 2,
        });
    }
    let h3 = gen_subdivided_biclique(3)?;
    let star_caps = Caps { star: 15, ..*caps };
    let (chi_s, _) = star_chromatic_exact(&h3, &star_caps)?;
    out.push(Check {
        index: out.len(),
        instance: "H3".into(),
        hash: instance_hash(&h3, None),
        values: json!({ "vertices": h3.n(), "edges": h3.m(), "star_chromatic": chi_s }),
        pass: h3.n() == 15 && h3.m() == 18 && chi_s <= 3,
    });
    let patterns = [
        ("K4", Graph::complete(4), 1),
        ("C5", Graph::cycle(5), 3),
        ("K3", Graph::complete(3), 5),
    ];
    for (name, h, per) in patterns {
        let (g, emb) = gen_subdivision(&h, &vec![per; h.m()])?;
        let s = encode_depth_d_system(&g, &emb, 1)?;
        let chi_sigma = sigma_chromatic_exact(&g, &s, caps)?;
        let (chi_h, _) = chromatic_number_exact(&h, caps)?;
        out.push(Check {
            index: out.len(),
            instance: format!("{name} subdivided {per}x, depth 3"),
            hash: instance_hash(&g, Some(&s)),
            values: json!({ "chi_sigma": chi_sigma, "chi_pattern": chi_h, "rho": s.rho() }),
            pass: chi_sigma >= chi_h && s.rho() == 2 && s.depth() == 3,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip(mut r: Report) -> Report {
        r.timestamp = 0;
        r
    }

    #[test]
    fn reports_are_deterministic() {
        let caps = Caps::default();
        for suite in [Suite::Chain, Suite::Lemma1, Suite::Arrangeability] {
            let a = run_suite(suite, 7, 5, &caps).unwrap();
            let b = run_suite(suite, 7, 5, &caps).unwrap();
            assert!(a.passed(), "{suite:?}: {a:?}");
            assert_eq!(
                serde_json::to_string(&strip(a)).unwrap(),
                serde_json::to_string(&strip(b)).unwrap()
            );
        }
    }

    #[test]
    fn turan_suite_passes() {
        let r = run_suite(Suite::Turan, 3, 2, &Caps::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checks.len(), 3 * 2 + 3);
    }

    #[test]
    fn sampled_instances_vary() {
        let a = sample_instance(1, 0, 16, 4).unwrap();
        let b = sample_instance(1, 1, 16, 4).unwrap();
        assert_ne!(
            instance_hash(&a.0, Some(&a.1)),
            instance_hash(&b.0, Some(&b.1))
        );
        assert_eq!(sample_instance(1, 0, 16, 4).unwrap(), a);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
