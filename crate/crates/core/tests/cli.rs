use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigmacolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn f(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn sigma_graph_of_subdivided_k4_is_k4() {
    let out = run(&["build-sigma-graph", &f("k4star.graph"), &f("k4star.sigma")]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["edges"], 6);
    assert_eq!(v["rho"], 2);
    assert_eq!(v["graph"], "10 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
}

#[test]
fn sigma_graph_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.sigma");
    std::fs::write(&empty, "# nothing constrained\n").unwrap();
    let target = dir.path().join("gs.graph");
    let out = run(&[
        "build-sigma-graph",
        &f("k4star.graph"),
        empty.to_str().unwrap(),
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(json(&out)["edges"], 0);
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(
        sigmacolor::io::parse_graph(&written).unwrap(),
        sigmacolor::Graph::empty(10)
    );
}

#[test]
fn out_of_ball_member_names_the_vertex() {
    let out = run(&[
        "build-sigma-graph",
        &f("path3.graph"),
        &f("path3_bad.sigma"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("vertex 0"), "{}", stderr(&out));
    let ok = run(&[
        "build-sigma-graph",
        &f("path3.graph"),
        &f("path3_bad.sigma"),
        "--depth",
        "2",
    ]);
    assert!(ok.status.success());
}

#[test]
fn parse_errors_report_lines() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.graph");
    std::fs::write(&bad, "3 2\n0 1\n1 1\n").unwrap();
    let out = run(&["mad", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
    let missing = run(&["mad", "/nonexistent/graph"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["color"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let out = run(&[
        "color",
        &f("k4star.graph"),
        &f("k4star.sigma"),
        "--strategy",
        "magic",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_coloring_of_subdivided_k4() {
    let out = run(&[
        "color",
        &f("k4star.graph"),
        &f("k4star.sigma"),
        "--strategy",
        "exact",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["palette_size"], 4);
    assert_eq!(v["valid"], true);
    assert_eq!(v["colors"].as_array().unwrap().len(), 10);
    assert!(v["wall_time_ms"].is_number());
}

#[test]
fn every_strategy_is_valid_on_random_fixture() {
    let mad = json(&run(&["mad", &f("random12.graph"), &f("random12.sigma")]));
    let bound = mad["floor_plus_one"].as_u64().unwrap();
    for strategy in ["greedy", "star-pipeline", "product", "exact"] {
        let out = run(&[
            "color",
            &f("random12.graph"),
            &f("random12.sigma"),
            "--strategy",
            strategy,
        ]);
        assert!(out.status.success(), "{strategy}: {}", stderr(&out));
        let v = json(&out);
        assert_eq!(v["valid"], true, "{strategy}");
        if strategy == "greedy" {
            assert!(v["palette_size"].as_u64().unwrap() <= bound);
        }
        let proper = run(&[
            "color",
            &f("random12.graph"),
            &f("random12.sigma"),
            "--strategy",
            strategy,
            "--also-proper",
        ]);
        assert_eq!(json(&proper)["valid"], true, "{strategy} --also-proper");
    }
}

#[test]
fn star_pipeline_rejects_depth_two() {
    let out = run(&[
        "color",
        &f("s4.graph"),
        &f("s4.sigma"),
        "--strategy",
        "star-pipeline",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("depth"), "{}", stderr(&out));
}

#[test]
fn cap_exceeded_exits_three() {
    let out = run(&[
        "color",
        &f("k4star.graph"),
        &f("k4star.sigma"),
        "--strategy",
        "exact",
        "--cap",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let out = run(&["star-color", &f("h3.graph"), "--exact"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn star_color_and_arrangeability() {
    let out = run(&["star-color", &f("h3.graph"), "--exact", "--cap", "15"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["palette_size"], 3);
    assert_eq!(v["valid"], true);
    assert!(v["max_out_degree"].as_u64().unwrap() <= 3);

    let out = run(&["star-color", &f("random12.graph"), "--palette", "40"]);
    assert_eq!(json(&out)["valid"], true, "{}", stderr(&out));
    let out = run(&["star-color", &f("random12.graph"), "--palette", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["arrangeability", &f("h3.graph"), "--exact"]);
    let v = json(&out);
    assert_eq!(v["k"], 1);
    assert_eq!(v["ordering"].as_array().unwrap().len(), 15);
}

#[test]
fn arrangeability_of_given_ordering() {
    let dir = tempfile::tempdir().unwrap();
    let order = dir.path().join("o.txt");
    std::fs::write(&order, "0 2 1\n").unwrap();
    let out = run(&[
        "arrangeability",
        &f("path3.graph"),
        "--ordering",
        order.to_str().unwrap(),
    ]);
    let v = json(&out);
    assert_eq!(v["k"], 1);
    assert_eq!(v["worst_vertex"], 2);
}

#[test]
fn clique_and_subdivision() {
    let v = json(&run(&["clique", &f("s4.graph"), &f("s4.sigma")]));
    assert_eq!(v["omega"], 4);
    assert_eq!(v["clique"], serde_json::json!([1, 2, 3, 4]));

    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("k6");
    let gen = run(&[
        "gen",
        "subdivided-clique",
        "--n",
        "6",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    assert_eq!(json(&gen)["stats"]["vertices"], 21);
    let g = prefix.with_extension("graph");
    let s = prefix.with_extension("sigma");
    let out = run(&[
        "extract-subdivision",
        g.to_str().unwrap(),
        s.to_str().unwrap(),
        "--n",
        "2",
        "--clique",
        "0,1,2,3,4,5",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["branch"].as_array().unwrap().len(), 2);
    let too_big = run(&[
        "extract-subdivision",
        g.to_str().unwrap(),
        s.to_str().unwrap(),
        "--n",
        "3",
    ]);
    assert_eq!(too_big.status.code(), Some(1));
}

#[test]
fn rank2_extraction_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.hyper");
    let h = sigmacolor::families::random_full_hypergraph(
        sigmacolor::hypergraph::rank2_threshold(3, 3),
        3,
        5,
    );
    std::fs::write(&path, sigmacolor::io::write_hypergraph(&h)).unwrap();
    let args = [
        "extract-rank2",
        path.to_str().unwrap(),
        "--n",
        "3",
        "--seed",
        "9",
    ];
    let a = run(&args);
    assert!(a.status.success(), "{}", stderr(&a));
    let v = json(&a);
    assert_eq!(v["rank2_full"], true);
    assert!(v["vertices"].as_array().unwrap().len() >= 3);
    assert_eq!(a.stdout, run(&args).stdout);
    let small = run(&["extract-rank2", &f("tiny.hyper"), "--n", "2"]);
    assert_eq!(small.status.code(), Some(2));
}

#[test]
fn gen_without_out_inlines_files() {
    let v = json(&run(&[
        "gen", "random", "--n", "9", "--p", "0.5", "--seed", "3",
    ]));
    let g = sigmacolor::io::parse_graph(v["graph"].as_str().unwrap()).unwrap();
    assert_eq!(g.n(), 9);
    let s = sigmacolor::io::parse_sigma(v["sigma"].as_str().unwrap(), &g, None).unwrap();
    assert!(s.rho() <= 3);
    let again = json(&run(&[
        "gen", "random", "--n", "9", "--p", "0.5", "--seed", "3",
    ]));
    assert_eq!(v, again);
}

#[test]
fn verify_is_deterministic_and_passes() {
    let strip = |mut v: Value| {
        for r in v["reports"].as_array_mut().unwrap() {
            r["timestamp"] = Value::Null;
        }
        v
    };
    let a = run(&["verify", "--suite", "chain", "--count", "15", "--seed", "4"]);
    assert!(a.status.success(), "{}", stderr(&a));
    let b = run(&["verify", "--suite", "chain", "--count", "15", "--seed", "4"]);
    let (a, b) = (strip(json(&a)), strip(json(&b)));
    assert_eq!(a, b);
    assert_eq!(a["failures"], 0);
    assert_eq!(a["reports"][0]["checks"].as_array().unwrap().len(), 15);
    let hash = a["reports"][0]["checks"][0]["hash"].as_str().unwrap();
    assert_eq!(hash.len(), 16);
}

#[test]
fn verify_all_suites_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = run(&["verify", "--count", "5", "--out", target.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    let suites: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["suite"].as_str().unwrap())
        .collect();
    assert_eq!(
        suites,
        ["chain", "lemma1", "arrangeability", "turan", "families"]
    );
}
