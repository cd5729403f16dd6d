use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lapdist(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lapdist"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_double_star_and_count() {
    let g = lapdist(&["generate", "double-star", "--d", "7", "--p", "3", "--q", "4", "--format", "edges"], None);
    assert!(g.status.success());
    let text = stdout(&g);
    assert!(text.starts_with("13 12\n"));
    let c = lapdist(&["count", "--alpha", "1", "--alpha", "0.5"], Some(&text));
    assert!(c.status.success());
    let lines: Vec<String> = stdout(&c).lines().map(String::from).collect();
    assert_eq!(lines[0], "graph6,alpha,below,equal,above");
    assert!(lines[1].ends_with(",1,3,5,5"), "{}", lines[1]);
    assert!(lines[2].ends_with(",1/2,3,0,10"), "{}", lines[2]);
}

#[test]
fn count_interval_on_graph6() {
    // P6
    let g = lapdist(&["generate", "path", "--n", "6"], None);
    let c = lapdist(&["count", "--interval", "[0,1)", "--json"], Some(&stdout(&g)));
    assert!(c.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&c).trim()).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["interval"], "[0,1)");
}

#[test]
fn spectrum_of_a_star() {
    let o = lapdist(&["spectrum"], Some("D?{\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "graph6,n,spectrum\nD?{,5,5.000 1.000 1.000 1.000 0.000\n");
}

#[test]
fn parse_errors_exit_with_two() {
    let o = lapdist(&["spectrum"], Some("D?\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let o = lapdist(&["count", "--alpha", "1e3"], Some("A_\n"));
    assert_eq!(o.status.code(), Some(2));
    let o = lapdist(&["generate", "gamma", "--d", "7", "--parts", "1,1"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = lapdist(&["no-such-command"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table1_passes() {
    let o = lapdist(&["table1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn counterexamples_csv() {
    let o = lapdist(&["counterexamples", "--n-max", "6"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().skip(1).all(|l| l.contains(",6,3,1,2,")));
}

#[test]
fn census_resume_keeps_finished_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("census.csv");
    let out_s = out.to_str().unwrap();
    let first = lapdist(&["census", "6", "8", "--out", out_s], None);
    assert!(first.status.success());
    let second = lapdist(&["census", "6", "10", "--out", out_s, "--resume", "--check", "--workers", "2"], None);
    assert_eq!(second.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# lapdist-census v1");
    assert_eq!(lines.len(), 2 + 5);
    assert!(lines[6].starts_with("10,106,33,"));
}

#[test]
fn census_check_reports_mismatches() {
    // the published n = 5 row disagrees with the enumeration
    let o = lapdist(&["census", "--n-min", "5", "--n-max", "5", "--check"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n=5"));
}

#[test]
fn census_from_graph6_input() {
    let dir = tempfile::tempdir().unwrap();
    let trees = dir.path().join("trees.g6");
    let g = lapdist(&["generate", "trees", "--n", "9", "--out", trees.to_str().unwrap()], None);
    assert!(g.status.success());
    let o = lapdist(&["census", "--input", trees.to_str().unwrap(), "--json"], None);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (v["n"].as_u64(), v["trees_total"].as_u64(), v["trees_extremal"].as_u64()),
        (Some(9), Some(47), Some(20))
    );
}

#[test]
fn detm_agrees() {
    let o = lapdist(&["detm", "--n-max", "12"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("\n6,1,1,1\n"));
    assert!(text.contains("\n4,0,0,0\n"));
}

#[test]
fn verify_reports_every_check() {
    let o = lapdist(
        &["verify", "--tree-max", "8", "--oracle-max", "7", "--graph-max", "5", "--random-instances", "10"],
        None,
    );
    let text = stdout(&o);
    assert!(text.contains("PASS tree-theorems"));
    assert!(text.contains("PASS interlacing"));
    // the published reference rows are checked as well; see README
    assert!(text.contains("FAIL census"));
    assert_eq!(o.status.code(), Some(1));
}
