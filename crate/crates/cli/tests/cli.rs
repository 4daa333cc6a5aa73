use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktree-lab"))
        .args(args)
        .output()
        .expect("spawn ktree-lab")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_edge_list() {
    let text = stdout(&["generate", "--k", "2", "--n", "1000", "--seed", "42"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# ktree k=2 n=1000 seed=42"));
    let edges: Vec<(u32, u32)> = lines
        .map(|l| {
            let (u, v) = l.split_once(' ').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(edges.len(), 1997);
    assert!(edges.iter().all(|&(u, v)| u < v && v < 1000));
    assert!(edges.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn generate_is_reproducible() {
    let args = ["generate", "--k", "3", "--n", "5000", "--seed", "9"];
    assert_eq!(stdout(&args), stdout(&args));
    let other = stdout(&["generate", "--k", "3", "--n", "5000", "--seed", "10"]);
    assert_ne!(stdout(&args), other);
}

#[test]
fn generate_tree_decomposition() {
    let dir = TempDir::new().unwrap();
    let td = dir.path().join("g.td");
    let edges = dir.path().join("g.txt");
    stdout(&[
        "generate",
        "--k",
        "3",
        "--n",
        "4",
        "--out",
        path_str(&edges),
        "--td",
        path_str(&td),
    ]);
    let text = fs::read_to_string(&td).unwrap();
    assert_eq!(text, "s td 1 4 4\nb 1 1 2 3 4\n");

    stdout(&[
        "generate",
        "--k",
        "2",
        "--n",
        "4",
        "--seed",
        "5",
        "--out",
        path_str(&edges),
        "--td",
        path_str(&td),
    ]);
    let text = fs::read_to_string(&td).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s td 2 3 4"));
    assert_eq!(text.lines().filter(|l| l.starts_with("b ")).count(), 2);
    assert_eq!(text.lines().last(), Some("1 2"));
}

#[test]
fn generate_partial_tree() {
    let text = stdout(&[
        "generate",
        "--k",
        "4",
        "--n",
        "500",
        "--seed",
        "1",
        "--partial-b",
        "0.5",
    ]);
    assert!(text.starts_with("# ktree k=4 n=500 seed=1 b=0.5\n"));
    // initial K5 plus two kept edges per added vertex
    assert_eq!(text.lines().count() - 1, 10 + 2 * 495);

    let full = stdout(&["generate", "--k", "4", "--n", "500", "--seed", "1"]);
    let ones = stdout(&[
        "generate",
        "--k",
        "4",
        "--n",
        "500",
        "--seed",
        "1",
        "--partial-b",
        "1",
    ]);
    assert_eq!(
        full.lines().skip(1).collect::<Vec<_>>(),
        ones.lines().skip(1).collect::<Vec<_>>()
    );

    let out = run(&["generate", "--k", "2", "--n", "50", "--partial-b", "0.1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["generate", "--k", "2", "--n", "50", "--partial-b", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn generate_rejects_bad_parameters() {
    for args in [
        &["generate", "--k", "1", "--n", "10"][..],
        &["generate", "--k", "3", "--n", "3"],
        &["generate", "--k", "2"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn theory_csv_values() {
    let text = stdout(&["theory", "--k", "2", "--dmax", "5"]);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "d,beta,closed_form");
    let beta: Vec<f64> = rows[1..]
        .iter()
        .map(|r| r.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let want = [0.5, 0.2, 0.1, 2.0 / 35.0];
    assert_eq!(beta.len(), want.len());
    for (b, w) in beta.iter().zip(want) {
        assert!((b - w).abs() < 1e-12);
    }
}

#[test]
fn theory_json_and_dp_column() {
    let v: Value = serde_json::from_str(&stdout(&[
        "theory", "--k", "3", "--dmax", "10", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v["gamma"].as_f64(), Some(2.5));
    assert_eq!(v["rows"][0]["beta"].as_f64(), Some(0.5));
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);

    let text = stdout(&["theory", "--k", "2", "--dmax", "60", "--n", "100"]);
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "d,beta,closed_form,expected_dp");

    let out = run(&["theory", "--k", "1", "--dmax", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn concentration_report() {
    let v: Value = serde_json::from_str(&stdout(&[
        "concentration",
        "--k",
        "2",
        "--n",
        "10000",
        "--trials",
        "50",
        "--seed",
        "3",
    ]))
    .unwrap();
    let r = &v["report"];
    assert_eq!(r["d"].as_u64(), Some(2));
    assert_eq!(r["violations"].as_u64(), Some(0));
    assert_eq!(r["counts"].as_array().unwrap().len(), 50);
    assert_eq!(v["seeds"].as_array().unwrap().len(), 50);

    let out = run(&["concentration", "--k", "2", "--n", "100", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "concentration",
        "--k",
        "3",
        "--n",
        "100",
        "--trials",
        "5",
        "--d",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn concentration_thread_count_does_not_matter() {
    let args = [
        "concentration",
        "--k",
        "3",
        "--n",
        "2000",
        "--trials",
        "12",
        "--seed",
        "8",
    ];
    let one = stdout(&[&["--threads", "1"], &args[..]].concat());
    let four = stdout(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(one, four);
}

#[test]
fn analyze_generated_and_file_input_agree() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("g.txt");
    stdout(&[
        "generate",
        "--k",
        "2",
        "--n",
        "20000",
        "--seed",
        "11",
        "--out",
        path_str(&graph),
    ]);

    let a = dir.path().join("a");
    stdout(&[
        "analyze",
        "--k",
        "2",
        "--n",
        "20000",
        "--seed",
        "11",
        "--out",
        path_str(&a),
    ]);
    let b = dir.path().join("b");
    stdout(&[
        "analyze",
        "--input",
        path_str(&graph),
        "--out",
        path_str(&b),
    ]);

    let body = |p: &Path, suffix: &str| {
        let mut name = p.as_os_str().to_owned();
        name.push(suffix);
        fs::read_to_string(name).unwrap()
    };
    assert_eq!(body(&a, ".hist.csv"), body(&b, ".hist.csv"));
    assert_eq!(body(&a, ".deviation.csv"), body(&b, ".deviation.csv"));

    let summary: Value = serde_json::from_str(&body(&a, ".summary.json")).unwrap();
    assert!(summary["total_variation_distance"].as_f64().unwrap() < 0.05);
    let gamma = summary["exponent_fit"]["Ok"]["gamma_hat"].as_f64().unwrap();
    assert!((2.5..3.5).contains(&gamma));
}

#[test]
fn analyze_rejects_malformed_input() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("bad.txt");
    fs::write(&graph, "# ktree k=2 n=4 seed=0\n0 1\n0 2\n1 x\n").unwrap();
    let out = run(&[
        "analyze",
        "--input",
        path_str(&graph),
        "--out",
        path_str(&dir.path().join("o")),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let missing = dir.path().join("missing.txt");
    let out = run(&[
        "analyze",
        "--input",
        path_str(&missing),
        "--out",
        path_str(&dir.path().join("o")),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_is_io_error() {
    let out = run(&[
        "generate",
        "--k",
        "2",
        "--n",
        "10",
        "--out",
        "/nonexistent-dir/x.txt",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
