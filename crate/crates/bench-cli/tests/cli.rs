use std::io::Write;
use std::process::{Command, Output};

fn graphbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphbench")).args(args).output().expect("binary runs")
}

#[test]
fn unknown_primitive_exits_with_usage_code() {
    let out = graphbench(&["mst", "--graph", "gen:grid:3x3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn sssp_without_weights_exits_with_usage_code() {
    let out = graphbench(&["sssp", "--graph", "gen:grid:3x3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--random-weights"));
}

#[test]
fn bad_source_and_missing_file() {
    assert_eq!(graphbench(&["bfs", "--graph", "gen:grid:3x3", "--src", "9"]).status.code(), Some(2));
    assert_eq!(graphbench(&["bfs", "--graph", "/nonexistent/graph.mtx"]).status.code(), Some(1));
    assert_eq!(graphbench(&["bfs", "--graph", "gen:torus:3"]).status.code(), Some(2));
}

#[test]
fn grid_bfs_json_report() {
    let out = graphbench(&["bfs", "--graph", "gen:grid:100x100", "--format", "json", "--validate"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["runtimes_ms"].as_array().unwrap().len(), 10);
    assert_eq!(v["validation"]["status"], "passed");
    assert_eq!(v["warmup"], true);
    assert!(v["average_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn matrix_market_file_with_csv_output() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        "%%MatrixMarket matrix coordinate integer symmetric\n% weighted path\n4 4 3\n2 1 5\n3 2 1\n4 3 2\n"
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let out = graphbench(&["sssp", "--graph", path, "--reps", "3", "--format", "csv", "--validate"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[4].starts_with("summary,"));
    assert!(lines[4].contains(",passed,"));
}

#[test]
fn table_output_for_each_primitive() {
    for p in ["bfs", "sssp", "bc", "cc", "pagerank"] {
        let out = graphbench(&[p, "--graph", "gen:scale-free:n=300", "--random-weights", "--reps", "2", "--validate", "--src", "random"]);
        assert!(out.status.success(), "{p}: {}", String::from_utf8_lossy(&out.stderr));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("MTEPS"), "{p}");
        assert!(text.contains("validation passed"), "{p}: {text}");
    }
}
