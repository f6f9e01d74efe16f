use std::path::Path;
use std::process::{Command, Output};

use proptest::prelude::*;
use rsp::format::{parse_graph, write_graph, InputFormat};
use rsp::output::JsonReport;
use rsp_core::Graph;

const TRIANGLE: &str = "c triangle\np sp 3 3\na 1 2 1\na 2 3 1\na 1 3 10\n";

fn rsp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsp"))
        .args(args)
        .env_remove("RSP_SEED")
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn triangle_all() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.gr", TRIANGLE);
    let out = rsp(&[
        "all", "--input", &file, "--source", "1", "--target", "3", "--paths",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "kind\tindex\tdistance\tswap_u\tswap_v\tswap_w\tpath\n\
         edge\t1\t10\t1\t3\t10\t1;3\n\
         edge\t2\t10\t1\t3\t10\t1;3\n\
         node\t1\t10\t1\t3\t10\t1;3\n"
    );
}

#[test]
fn edges_and_nodes_split_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.gr", TRIANGLE);
    let base = ["--input", &file, "--source", "1", "--target", "3"];
    let edges = stdout(&rsp(&[&["edges"], &base[..]].concat()));
    let nodes = stdout(&rsp(&[&["nodes"], &base[..]].concat()));
    assert_eq!(
        edges
            .lines()
            .skip(1)
            .filter(|l| l.starts_with("edge"))
            .count(),
        2
    );
    assert_eq!(edges.lines().count(), 3);
    assert_eq!(nodes.lines().count(), 2);
    assert!(nodes.lines().nth(1).unwrap().starts_with("node\t1\t10"));
}

#[test]
fn edge_list_keeps_zero_based_ids() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.txt", "# triangle\n0 1 1\n1 2 1\n0 2 10\n");
    let out = rsp(&[
        "edges",
        "--input",
        &file,
        "--format",
        "edge-list",
        "--source",
        "0",
        "--target",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().nth(1), Some("edge\t1\t10\t0\t2\t10"));
}

#[test]
fn json_output_parses() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.gr", TRIANGLE);
    let out = rsp(&[
        "all", "--input", &file, "--source", "1", "--target", "3", "--output", "json", "--paths",
    ]);
    assert!(out.status.success());
    let report: JsonReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.elements.len(), 3);
    assert_eq!(report.elements[2].kind, "node");
    assert_eq!(report.elements[0].path, Some(vec![1, 3]));
    assert_eq!(
        report.elements[0].swap.as_ref().map(|s| (s.u, s.v)),
        Some((1, 3))
    );
}

#[test]
fn bridge_reports_infinity() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "b.gr", "p sp 3 2\na 1 2 1\na 2 3 1\n");
    let out = rsp(&[
        "all", "--input", &file, "--source", "1", "--target", "3", "--paths",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out)
        .lines()
        .skip(1)
        .all(|l| l.ends_with("\tINF\t-\t-\t-\t-")));
}

#[test]
fn random_check_is_clean() {
    let out = rsp(&["check", "--random", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("instances\t100"));
    assert!(text.ends_with("0 mismatches\n"));
}

#[test]
fn seed_environment_variable_wins() {
    let run = |env: Option<&str>, seed: &str| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_rsp"));
        cmd.args(["check", "--random", "20", "--seed", seed]);
        match env {
            Some(v) => cmd.env("RSP_SEED", v),
            None => cmd.env_remove("RSP_SEED"),
        };
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(Some("3"), "9"), run(None, "3"));
}

#[test]
fn check_single_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.gr", TRIANGLE);
    let out = rsp(&["check", "--input", &file, "--source", "1", "--target", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("edge_checks\t2\nnode_checks\t1\n"));
}

#[test]
fn unreachable_target_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "u.gr", "p sp 4 2\na 1 2 1\na 3 4 1\n");
    let out = rsp(&["all", "--input", &file, "--source", "1", "--target", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("target 4 is not reachable from source 1"),
        "{err}"
    );
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "w.gr", "p sp 2 1\na 1 2 0\n");
    let out = rsp(&["all", "--input", &file, "--source", "1", "--target", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("weight ≤ 0 at line 2"));

    let file = write(dir.path(), "g.gr", "p sp 2 1\na 1 x 1\n");
    let out = rsp(&["all", "--input", &file, "--source", "1", "--target", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn self_loops_are_dropped_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "l.gr",
        "p sp 3 4\na 1 2 1\na 2 2 5\na 2 3 1\na 1 3 10\n",
    );
    let out = rsp(&["all", "--input", &file, "--source", "1", "--target", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("dropped 1 self-loop"));
}

#[test]
fn bench_family_table() {
    let out = rsp(&["bench", "--k-min", "5", "--k-max", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n\tm\tl\tfast_ms"));
    assert_eq!(text.lines().count(), 4);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..30).prop_flat_map(|n| {
        let edge = (0..n, 0..n, 1u32..1000).prop_filter("no self-loops", |(u, v, _)| u != v);
        (Just(n), proptest::collection::vec(edge, 1..80), 0..n, 0..n)
            .prop_filter("distinct terminals", |(_, _, s, t)| s != t)
            .prop_map(|(n, edges, s, t)| {
                let edges = edges
                    .into_iter()
                    .map(|(u, v, w)| (u, v, f64::from(w) / 4.0));
                Graph::from_edges(n, s, t, edges).unwrap()
            })
    })
}

fn sorted_edges(g: &Graph) -> Vec<(usize, usize, u64)> {
    let mut edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| (e.u.min(e.v), e.u.max(e.v), e.weight.to_bits()))
        .collect();
    edges.sort_unstable();
    edges
}

proptest! {
    #[test]
    fn formats_round_trip(g in arb_graph()) {
        for format in [InputFormat::Dimacs, InputFormat::EdgeList] {
            let base = format.id_base();
            let text = write_graph(&g, format);
            let parsed = parse_graph(&text, format, Some(g.source() + base), Some(g.target() + base))
                .unwrap();
            prop_assert_eq!(sorted_edges(&parsed.graph), sorted_edges(&g));
            prop_assert_eq!(parsed.dropped_self_loops, 0);
            if format == InputFormat::Dimacs {
                prop_assert_eq!(parsed.graph.vertex_count(), g.vertex_count());
            }
        }
    }
}
