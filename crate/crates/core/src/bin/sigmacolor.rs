//! Command-line front end. JSON goes to stdout, one-line summaries to
//! stderr. Exit status: 0 ok, 1 verification failure, 2 usage or input
//! error, 3 exact-oracle cap exceeded.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sigmacolor::arrange::{arrangeability_exact, arrangeability_of_ordering, heuristic_ordering};
use sigmacolor::color::{color_with_strategy, Strategy};
use sigmacolor::density::densest_subgraph;
use sigmacolor::families::{
    gen_random_instance, gen_star_example, gen_subdivided_biclique, gen_subdivided_clique,
};
use sigmacolor::hypergraph::{
    extract_rank2_subhypergraph, extract_subdivided_clique, is_rank2_full_on, omega_sigma,
};
use sigmacolor::io;
use sigmacolor::sigma::{build_sigma_graph, build_sigma_graph_also_proper, NeighborhoodSystem};
use sigmacolor::star::{
    greedy_star_coloring, is_star_coloring, orientation_from_star_coloring, star_chromatic_exact,
    verify_in_orientation, Palette,
};
use sigmacolor::verify::{run_suite, Suite};
use sigmacolor::{Caps, Error, Graph};

#[derive(Parser)]
#[command(
    name = "sigmacolor",
    version,
    about = "Coloring graphs under neighborhood systems"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Depth of the neighborhood system, overriding the file header.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Uniform palette size for list-based colorings.
    #[arg(long, global = true)]
    palette: Option<usize>,
    /// Vertex cap for the exact colorings and exact arrangeability.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Also require the coloring to be proper on the base graph.
    #[arg(long, global = true)]
    also_proper: bool,
    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Greedy,
    StarPipeline,
    Product,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    SubdividedClique,
    SubdividedBiclique,
    StarExample,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Chain,
    Lemma1,
    Arrangeability,
    Turan,
    Families,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the auxiliary graph and report its statistics.
    BuildSigmaGraph { graph: PathBuf, sigma: PathBuf },
    /// Σ-color with one of the strategies.
    Color {
        graph: PathBuf,
        sigma: PathBuf,
        #[arg(long, value_enum, default_value = "greedy")]
        strategy: StrategyArg,
    },
    /// Star-color the graph and orient it.
    StarColor {
        graph: PathBuf,
        /// Per-vertex lists; otherwise `--palette` or the vertex count.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Ordering for the greedy; defaults to an optimal one when small.
        #[arg(long)]
        ordering: Option<PathBuf>,
        /// Compute the star chromatic number instead of running the greedy.
        #[arg(long)]
        exact: bool,
    },
    /// Arrangeability of an ordering, or the exact minimum.
    Arrangeability {
        graph: PathBuf,
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(long)]
        exact: bool,
    },
    /// Exact maximum average degree of the graph, or of `G_Σ` given a system.
    Mad {
        graph: PathBuf,
        sigma: Option<PathBuf>,
    },
    /// Largest Σ-clique.
    Clique { graph: PathBuf, sigma: PathBuf },
    /// Rank-two full subhypergraph on `n` vertices.
    ExtractRank2 {
        hypergraph: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// 1-subdivided clique from a Σ-clique.
    ExtractSubdivision {
        graph: PathBuf,
        sigma: PathBuf,
        #[arg(long)]
        n: usize,
        /// Comma-separated Σ-clique; defaults to a maximum one.
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
    },
    /// Generate an instance. With `--out P` writes `P.graph` and `P.sigma`.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 3)]
        rho_cap: usize,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<Value, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn load_system(
    g: &Graph,
    path: &Path,
    depth: Option<usize>,
) -> Result<NeighborhoodSystem, Failure> {
    Ok(io::parse_sigma(&read(path)?, g, depth)?)
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn caps(c: &Common) -> Caps {
    match c.cap {
        Some(n) => Caps {
            arrangeability: n,
            ..Caps::default().with_coloring_cap(n)
        },
        None => Caps::default(),
    }
}

fn run(cli: &Cli) -> CmdResult {
    let c = &cli.common;
    let caps = caps(c);
    match &cli.cmd {
        Cmd::BuildSigmaGraph { graph, sigma } => {
            let g = load_graph(graph)?;
            let s = load_system(&g, sigma, c.depth)?;
            let gs = if c.also_proper {
                build_sigma_graph_also_proper(&g, &s)?
            } else {
                build_sigma_graph(&g, &s)?
            };
            eprintln!(
                "G_sigma: {} vertices, {} edges, rho = {}",
                gs.n(),
                gs.m(),
                s.rho()
            );
            let mut out = json!({
                "rho": s.rho(), "depth": s.depth(), "vertices": gs.n(), "edges": gs.m(),
            });
            match &c.out {
                Some(p) => write(p, &io::write_graph(&gs))?,
                None => out["graph"] = Value::String(io::write_graph(&gs)),
            }
            Ok(out)
        }
        Cmd::Color {
            graph,
            sigma,
            strategy,
        } => {
            let g = load_graph(graph)?;
            let s = load_system(&g, sigma, c.depth)?;
            let strategy = match strategy {
                StrategyArg::Greedy => Strategy::Greedy,
                StrategyArg::StarPipeline => Strategy::StarPipeline,
                StrategyArg::Product => Strategy::Product,
                StrategyArg::Exact => Strategy::Exact,
            };
            let report = color_with_strategy(&g, &s, strategy, &caps, c.also_proper)?;
            eprintln!(
                "{} colors, valid = {}, bound: {}",
                report.palette_size, report.valid, report.bound_used
            );
            Ok(serde_json::to_value(report).expect("report serializes"))
        }
        Cmd::StarColor {
            graph,
            lists,
            ordering,
            exact,
        } => {
            let g = load_graph(graph)?;
            let (coloring, how) = if *exact {
                let (k, col) = star_chromatic_exact(&g, &caps)?;
                (col, format!("exact star chromatic number {k}"))
            } else {
                let order = match ordering {
                    Some(p) => io::parse_ordering(&read(p)?)?,
                    None if g.n() <= caps.arrangeability => {
                        arrangeability_exact(&g, &caps)?.ordering
                    }
                    None => heuristic_ordering(&g),
                };
                let palette = match (lists, c.palette) {
                    (Some(p), _) => Palette::Lists(io::parse_lists(&read(p)?, g.n())?),
                    (None, Some(k)) => Palette::Uniform(k),
                    (None, None) => Palette::Uniform(g.n().max(1)),
                };
                let k = arrangeability_of_ordering(&g, &order)?.k;
                (
                    greedy_star_coloring(&g, &order, &palette)?,
                    format!("greedy along a {k}-arrangeable ordering"),
                )
            };
            let io_ = orientation_from_star_coloring(&g, &coloring)?;
            let max_out = io_.out_degrees(g.n()).into_iter().max().unwrap_or(0);
            let valid = is_star_coloring(&g, &coloring) && verify_in_orientation(&g, &io_);
            eprintln!(
                "{} colors ({how}), valid = {valid}",
                coloring.palette_size()
            );
            Ok(json!({
                "palette_size": coloring.palette_size(), "colors": coloring.colors(), "valid": valid,
                "orientation": io_.arcs, "max_out_degree": max_out, "method": how,
            }))
        }
        Cmd::Arrangeability {
            graph,
            ordering,
            exact,
        } => {
            let g = load_graph(graph)?;
            let cert = match (ordering, exact) {
                (Some(p), false) => {
                    arrangeability_of_ordering(&g, &io::parse_ordering(&read(p)?)?)?
                }
                (_, true) => arrangeability_exact(&g, &caps)?,
                (None, false) => arrangeability_of_ordering(&g, &heuristic_ordering(&g))?,
            };
            eprintln!("arrangeability of ordering: {}", cert.k);
            Ok(serde_json::to_value(cert).expect("certificate serializes"))
        }
        Cmd::Mad { graph, sigma } => {
            let g = load_graph(graph)?;
            let target = match sigma {
                Some(p) => build_sigma_graph(&g, &load_system(&g, p, c.depth)?)?,
                None => g.clone(),
            };
            let (density, witness) = densest_subgraph(&target);
            let mad = density * 2;
            eprintln!("mad = {mad}");
            Ok(json!({
                "mad": mad.to_string(), "numerator": mad.numer(), "denominator": mad.denom(),
                "floor_plus_one": mad.to_integer() + 1, "densest_subgraph": witness,
            }))
        }
        Cmd::Clique { graph, sigma } => {
            let g = load_graph(graph)?;
            let s = load_system(&g, sigma, c.depth)?;
            let (omega, clique) = omega_sigma(&g, &s, &caps)?;
            eprintln!("omega_sigma = {omega}");
            Ok(json!({ "omega": omega, "clique": clique, "rho": s.rho() }))
        }
        Cmd::ExtractRank2 { hypergraph, n } => {
            let h = io::parse_hypergraph(&read(hypergraph)?)?;
            let x = extract_rank2_subhypergraph(&h, *n, c.seed)?;
            let full = is_rank2_full_on(&h, &x.vertices);
            eprintln!(
                "{} vertices after {} rounds, rank-2 full = {full}",
                x.vertices.len(),
                x.rounds
            );
            let mut out = serde_json::to_value(&x).expect("extraction serializes");
            out["rank2_full"] = full.into();
            Ok(out)
        }
        Cmd::ExtractSubdivision {
            graph,
            sigma,
            n,
            clique,
        } => {
            let g = load_graph(graph)?;
            let s = load_system(&g, sigma, c.depth)?;
            let members = match clique {
                Some(v) => v.clone(),
                None => omega_sigma(&g, &s, &caps)?.1,
            };
            let sc = extract_subdivided_clique(&g, &s, &members, *n)?;
            let ok = sc.is_subgraph_of(&g);
            eprintln!("branch vertices {:?}, verified = {ok}", sc.branch);
            let mut out = serde_json::to_value(&sc).expect("subdivision serializes");
            out["verified"] = ok.into();
            Ok(out)
        }
        Cmd::Gen {
            family,
            n,
            p,
            rho_cap,
        } => {
            let (g, s, stats) = match family {
                FamilyArg::SubdividedClique => {
                    let f = gen_subdivided_clique(*n)?;
                    (
                        f.graph,
                        Some(f.system),
                        serde_json::to_value(f.stats).expect("stats"),
                    )
                }
                FamilyArg::StarExample => {
                    let f = gen_star_example(*n)?;
                    (
                        f.graph,
                        Some(f.system),
                        serde_json::to_value(f.stats).expect("stats"),
                    )
                }
                FamilyArg::SubdividedBiclique => {
                    let g = gen_subdivided_biclique(*n)?;
                    let stats = json!({
                        "family": "subdivided-biclique", "parameter": n,
                        "vertices": g.n(), "edges": g.m(), "star_chromatic_at_most": 3,
                    });
                    (g, None, stats)
                }
                FamilyArg::Random => {
                    let (g, s) = gen_random_instance(*n, *p, *rho_cap, c.seed)?;
                    let stats = json!({
                        "family": "random", "parameter": n, "edge_prob": p, "seed": c.seed,
                        "vertices": g.n(), "edges": g.m(), "rho": s.rho(), "depth": s.depth(),
                    });
                    (g, Some(s), stats)
                }
            };
            eprintln!("{} vertices, {} edges", g.n(), g.m());
            let mut out = json!({ "stats": stats });
            match &c.out {
                Some(prefix) => {
                    write(&prefix.with_extension("graph"), &io::write_graph(&g))?;
                    if let Some(s) = &s {
                        write(&prefix.with_extension("sigma"), &io::write_sigma(s))?;
                    }
                }
                None => {
                    out["graph"] = io::write_graph(&g).into();
                    if let Some(s) = &s {
                        out["sigma"] = io::write_sigma(s).into();
                    }
                }
            }
            Ok(out)
        }
        Cmd::Verify { suite, count } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Chain => vec![Suite::Chain],
                SuiteArg::Lemma1 => vec![Suite::Lemma1],
                SuiteArg::Arrangeability => vec![Suite::Arrangeability],
                SuiteArg::Turan => vec![Suite::Turan],
                SuiteArg::Families => vec![Suite::Families],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let mut reports = Vec::new();
            let mut failures = 0;
            for s in suites {
                let r = run_suite(s, c.seed, *count, &caps)?;
                eprintln!(
                    "{:<15} {:>4} checks, {} failed",
                    r.suite,
                    r.checks.len(),
                    r.failures
                );
                failures += r.failures;
                reports.push(r);
            }
            let out = json!({ "reports": reports, "failures": failures });
            if failures > 0 {
                emit(c, &out, false)?;
                return Err(Failure::Verify);
            }
            Ok(out)
        }
    }
}

/// Prints `value`, or writes it to `--out` unless the command already
/// used that path for its own files.
fn emit(c: &Common, value: &Value, out_used: bool) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("json serializes");
    match &c.out {
        Some(p) if !out_used => write(p, &(text + "\n")),
        _ => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_used = matches!(cli.cmd, Cmd::BuildSigmaGraph { .. } | Cmd::Gen { .. });
    let result = run(&cli).and_then(|v| emit(&cli.common, &v, out_used));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InstanceTooLarge { .. } => 3,
                Error::SamplingBudgetExhausted { .. } | Error::CliqueTooSmall { .. } => 1,
                _ => 2,
            })
        }
    }
}
