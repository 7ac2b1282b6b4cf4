use std::fs;

use regex::Regex;
use unitcodes::cli::{self, EXIT_IO, EXIT_OK, EXIT_USAGE};
use unitcodes::graph::{ExportFormat, UnitGraph};
use unitcodes::verify::{Report, Status};
use unitcodes::RingSpec;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("unitcodes").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn field<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')))
        .map(str::trim)
}

#[test]
fn graph_invariants_report() {
    let (code, out, _) = run(&["graph", "5", "5", "--invariants"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "vertices"), Some("25"));
    assert_eq!(field(&out, "edges"), Some("192"));
    assert_eq!(field(&out, "connected"), Some("yes"));
    assert_eq!(field(&out, "bipartite"), Some("no"));
    assert_eq!(field(&out, "diameter"), Some("2"));
    assert_eq!(field(&out, "girth"), Some("3"));
    assert_eq!(field(&out, "edge connectivity"), Some("15"));
}

#[test]
fn exports_match_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");
    for (n, m) in [(2, 2), (3, 2), (4, 5)] {
        let path = |ext: &str| dir.path().join(format!("z{n}_z{m}.{ext}"));
        let (code, _, err) = run(&[
            "graph",
            &n.to_string(),
            &m.to_string(),
            "--export-edges",
            path("edges").to_str().unwrap(),
            "--export-dot",
            path("dot").to_str().unwrap(),
            "--export-incidence",
            path("incidence").to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK, "{err}");
        for ext in ["edges", "dot", "incidence"] {
            let want = fs::read(format!("{golden}/z{n}_z{m}.{ext}")).unwrap();
            assert_eq!(fs::read(path(ext)).unwrap(), want, "z{n}_z{m}.{ext}");
        }
    }
}

#[test]
fn unwritable_export_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("g.dot");
    let (code, _, err) = run(&["graph", "3", "2", "--export-dot", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO);
    assert!(err.contains("g.dot"));
    let (code, _, _) = run(&[
        "verify",
        "--n",
        "2..3",
        "--m",
        "2..3",
        "--fields",
        "2",
        "--json",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_IO);
}

#[test]
fn usage_errors_go_to_stderr() {
    for args in [
        &["code", "3", "2"][..],
        &["code", "3", "2", "--field", "9"],
        &["dual", "0", "2", "--field", "3"],
        &["verify", "--n", "2..5", "--m", "2..5"],
        &["verify", "--n", "2..5", "--m", "2..5", "--fields", "2,6"],
        &[
            "verify", "--n", "2..5", "--m", "2..5", "--fields", "2", "--budget", "10",
        ],
        &["conjecture", "--n", "x", "--m", "2..5", "--fields", "2"],
        &["frobnicate"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_small_range_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let csv = dir.path().join("report.csv");
    let (code, out, _) = run(&[
        "verify",
        "--n",
        "2..6",
        "--m",
        "2..6",
        "--fields",
        "2,3",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("theorem failures: 0"));

    let text = fs::read_to_string(&json).unwrap();
    let report = Report::from_json(&text).unwrap();
    assert_eq!(report.records.len(), 50);
    for rec in &report.records {
        for c in rec.checks.iter().filter(|c| !c.name.is_conjecture()) {
            assert!(
                matches!(c.status, Status::Pass | Status::Skipped),
                "{rec:?}"
            );
        }
    }
    // parse and re-emit
    assert_eq!(report.to_json(), text);

    let rows = fs::read_to_string(&csv).unwrap();
    let mut lines = rows.lines();
    assert_eq!(
        lines.next(),
        Some("n,m,r,case,check,predicted,observed,status,reason")
    );
    assert_eq!(lines.count(), report.summary.checks);
}

#[test]
fn json_top_level_shape() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let (code, _, _) = run(&[
        "verify",
        "--n",
        "3..3",
        "--m",
        "2..2",
        "--fields",
        "3",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(
        obj.keys().collect::<Vec<_>>(),
        ["config", "records", "summary"]
    );
    assert!(obj["config"].get("jobs").is_none());
    let rec = &v["records"][0];
    assert_eq!(
        (rec["n"].as_u64(), rec["m"].as_u64(), rec["r"].as_u64()),
        (Some(3), Some(2), Some(3))
    );
    assert_eq!(rec["case"], "PP_OddTwo");
    let params = rec["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "CodeParamsVsPredicted")
        .unwrap();
    assert_eq!(params["observed"], serde_json::json!([6, 5, 2]));
    assert_eq!(params["status"], "Pass");
    assert!(params.get("reason").is_none());
}

#[test]
fn conjecture_command_lists_counts() {
    let (code, out, _) = run(&["conjecture", "--n", "3..5", "--m", "3..5", "--fields", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("ConjectureI: "));
    assert!(out.contains("ConjectureII: "));
    assert!(!out.contains("ConjectureFail"));
}

/// Minimal grammar for the DOT subset we emit.
#[test]
fn dot_exports_are_well_formed() {
    let node = Regex::new(r#"^    v(\d+) \[label="\((\d+),(\d+)\)"\];$"#).unwrap();
    let edge = Regex::new(r"^    v(\d+) -- v(\d+);$").unwrap();
    for n in 2..=8u64 {
        for m in 2..=8u64 {
            let g = UnitGraph::build(RingSpec::new(n, m).unwrap());
            let text = g.export_to_string(ExportFormat::Dot);
            let lines: Vec<&str> = text.lines().collect();
            assert_eq!(lines.first(), Some(&"graph G {"));
            assert_eq!(lines.last(), Some(&"}"));
            let body = &lines[1..lines.len() - 1];
            let (nodes, edges) = body.split_at(g.vertex_count());
            for (i, line) in nodes.iter().enumerate() {
                let c = node
                    .captures(line)
                    .unwrap_or_else(|| panic!("bad node line {line:?}"));
                let idx: u64 = c[1].parse().unwrap();
                let (a, b): (u64, u64) = (c[2].parse().unwrap(), c[3].parse().unwrap());
                assert_eq!(idx, i as u64);
                assert_eq!(idx, a * m + b);
            }
            assert_eq!(edges.len(), g.edge_count());
            for line in edges {
                let c = edge
                    .captures(line)
                    .unwrap_or_else(|| panic!("bad edge line {line:?}"));
                let (u, w): (usize, usize) = (c[1].parse().unwrap(), c[2].parse().unwrap());
                assert!(u < w && g.is_adjacent(u, w));
            }
        }
    }
}
