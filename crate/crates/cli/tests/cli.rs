use std::path::PathBuf;
use std::process::{Command, Output};

fn srreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("srreg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn broom_invariants() {
    let path = graph_file("broom.json", r#"{"vertices":4, "edges":[[1,2],[1,3],[2,3],[3,4]]}"#);
    let o = srreg(&["invariants", "--graph", path.to_str().unwrap(), "--n-max", "2", "--out", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("n,a1,a2,greg,reg_symbolic,cm,a1_branch,a2_branch,greg_branch")
    );
    let row2: Vec<&str> = lines.nth(1).unwrap().split(',').collect();
    assert_eq!(&row2[..4], ["2", "3/3/ok", "3/3/ok", "5/5/ok"]);
}

#[test]
fn pentagon_from_edge_list() {
    let path = graph_file("c5.txt", "5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    let o = srreg(&["invariants", "--graph", path.to_str().unwrap(), "--n-max", "3", "--out", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row2: Vec<&str> = out.lines().nth(2).unwrap().split(',').collect();
    assert_eq!(row2[1], "-inf/-inf/ok");
    assert_eq!(row2[3], "3/3/ok");

    let o = srreg(&["classify", "--graph", path.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(out.contains("class=C5/C5CYCLE\n"));
    assert!(out.contains("matroid.exchange=false\n"));
}

#[test]
fn formula_only_triangle() {
    let path = graph_file("k3.json", r#"{"vertices":3,"edges":[[1,2],[2,3],[1,3]]}"#);
    let o = srreg(&[
        "invariants", "--graph", path.to_str().unwrap(), "--n-max", "1", "--method", "formula",
        "--out", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[1..6], ["-inf", "0", "2", "2", "true"]);
}

#[test]
fn oracle_table_csv() {
    let path = graph_file("edge.json", r#"{"vertices":3,"edges":[[1,2]]}"#);
    let o = srreg(&["table", "--graph", path.to_str().unwrap(), "--n-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,a0,a1,a2,a3,greg,reg\n1,-inf,0,-2,-inf,1,1\n");
}

#[test]
fn input_errors_exit_2() {
    let lp = graph_file("loop.json", r#"{"vertices":4,"edges":[[1,1]]}"#);
    let o = srreg(&["classify", "--graph", lp.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("loop"));

    let o = srreg(&["classify", "--graph", "/nonexistent/graph.json"]);
    assert_eq!(o.status.code(), Some(2));

    let o = srreg(&["verify", "--max-vertices", "9", "--max-n", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = srreg(&["verify", "--max-vertices", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_sweep_is_clean() {
    let o = srreg(&["verify", "--max-vertices", "3", "--max-n", "2", "--isolated", "--dedupe"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.ends_with("mismatches=0\n"));
    assert!(out.contains("graph=3:{1,2} n=1 invariant=a1 formula=0 branch=CONE1:EDGE oracle=0 match=true"));
}

#[test]
fn c1_discrepancy_exits_1() {
    // K4 minus an edge at n = 2 is where the a_1 table undershoots.
    let o = srreg(&["verify", "--max-vertices", "4", "--max-n", "2", "--dedupe"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let bad: Vec<&str> = out.lines().filter(|l| l.ends_with("match=false")).collect();
    assert_eq!(bad.len(), 2);
    assert!(bad.iter().all(|l| l.contains("n=2 invariant=a1 formula=3 branch=C1/3n-3 oracle=4")));
}

#[test]
fn report_does_not_depend_on_workers() {
    let run = |w: &str| {
        srreg(&["verify", "--max-vertices", "5", "--max-n", "2", "--isolated", "--workers", w])
    };
    let one = run("1");
    let eight = run("8");
    assert_eq!(one.status.code(), eight.status.code());
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, eight.stdout);
}
