//! Reads a graph and a Σ file, reports parse errors with line numbers, and
//! writes the constraint graph back out.
//!
//! cargo run --example files_roundtrip -- tests/fixtures/k4star.graph tests/fixtures/k4star.sigma

use sigmacolor::io::{parse_graph, parse_labeled_edges, parse_sigma, write_graph};
use sigmacolor::{build_sigma_graph, Error};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let (graph, sigma) = match (args.next(), args.next()) {
        (Some(g), Some(s)) => (std::fs::read_to_string(g)?, std::fs::read_to_string(s)?),
        _ => ("3 2\n0 1\n1 2\n".to_string(), "1: 0 2\n".to_string()),
    };
    let g = parse_graph(&graph)?;
    let s = parse_sigma(&sigma, &g, None)?;
    print!("{}", write_graph(&build_sigma_graph(&g, &s)?));

    if let Err(Error::Parse { line, msg }) = parse_graph("3 2\n0 1\n0 1\n") {
        eprintln!("rejected duplicate edge at line {line}: {msg}");
    }
    let (h, labels) = parse_labeled_edges("alice bob\nbob carol\n")?;
    eprintln!("labeled input: {} vertices named {labels:?}", h.n());
    Ok(())
}
