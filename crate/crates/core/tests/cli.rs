use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hyperspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperspace"))
        .args(args)
        .output()
        .expect("run the binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn workspace() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        ("pairs4.txt", "n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"),
        ("with_empty.txt", "n=3\n0 1\n\n"),
        ("singleton.txt", "n=3\n0 1\n2\n"),
        ("cosingletons.txt", "m=3\n1 2\n0 2\n0 1\n"),
        ("bad.txt", "n=2\n0 5\n"),
    ];
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn scalar_commands() {
    let dir = workspace();
    let out = hyperspace(&["depth", &path(&dir, "pairs4.txt")]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "4\n".into()));
    let out = hyperspace(&["tau", &path(&dir, "pairs4.txt")]);
    assert_eq!(stdout(&out), "3\n");
    let out = hyperspace(&["tau", &path(&dir, "with_empty.txt")]);
    assert_eq!(stdout(&out), "inf\n");
    let out = hyperspace(&["depth", &path(&dir, "singleton.txt")]);
    assert_eq!(stdout(&out), "inf\n");
    let out = hyperspace(&["dandy", &path(&dir, "pairs4.txt"), "--d", "3"]);
    assert_eq!(stdout(&out), "true\n");
    let out = hyperspace(&["dandy", &path(&dir, "pairs4.txt"), "--d", "4"]);
    assert_eq!(stdout(&out), "false\n");
}

#[test]
fn induced_system_text() {
    let dir = workspace();
    let out = hyperspace(&["induced", &path(&dir, "cosingletons.txt")]);
    // any two of the sets meet; all three do not
    assert_eq!(stdout(&out), "n=3\n0 1 2\n");
}

#[test]
fn malformed_input_exits_2() {
    let dir = workspace();
    let out = hyperspace(&["depth", &path(&dir, "bad.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside ground set"));
    assert_eq!(hyperspace(&["embed", "--from", "x.json"]).status.code(), Some(2));
    assert_eq!(hyperspace(&["depth", "--unknown", "x"]).status.code(), Some(2));
}

#[test]
fn cube_and_embedding_round_trip() {
    let dir = workspace();
    for (name, size) in [("a.json", "3"), ("b.json", "2")] {
        let out = hyperspace(&["cube", "--n", "2", "--size", size]);
        assert_eq!(out.status.code(), Some(0));
        fs::write(dir.path().join(name), &out.stdout).unwrap();
    }
    let b = stdout(&hyperspace(&["cube", "--n", "2", "--size", "2"]));
    assert_eq!(
        b.trim(),
        r#"{"n":2,"size":4,"labels":[[0,0,1,1],[0,1,0,1]]}"#
    );
    let out = hyperspace(&["embed", "--from", &path(&dir, "b.json"), "--to", &path(&dir, "a.json")]);
    assert_eq!(stdout(&out).trim(), r#"{"kind":"embed","map":[0,1,3,4]}"#);
    let out = hyperspace(&["embed", "--from", &path(&dir, "a.json"), "--to", &path(&dir, "b.json")]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "none\n".into()));
    let out = hyperspace(&[
        "embed", "--from", &path(&dir, "b.json"), "--to", &path(&dir, "a.json"), "--kind",
        "parbed", "--beta", "1,0",
    ]);
    assert!(stdout(&out).contains(r#""beta":[1,0]"#));
    let out = hyperspace(&[
        "embed", "--from", &path(&dir, "b.json"), "--to", &path(&dir, "a.json"), "--budget", "1",
    ]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(3), "indeterminate\n".into()));
}

#[test]
fn fcn_reports_budget_relative_values() {
    let dir = workspace();
    let cube = hyperspace(&["cube", "--n", "2", "--size", "4"]);
    fs::write(dir.path().join("a.json"), &cube.stdout).unwrap();
    let out = hyperspace(&["fcn", &path(&dir, "a.json"), "--max-factor", "3", "--nonempty"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"value":2,"witness":[[0],[1]],"max_factor":3,"nonempty_only":true}"#
    );
    let out = hyperspace(&["fcn", &path(&dir, "a.json"), "--max-factor", "3", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn halfcube_sizes() {
    let out = hyperspace(&["halfcube", "--n", "2", "--k", "4"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["size"], 6);
    assert_eq!(hyperspace(&["halfcube", "--n", "3", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn spray_cover_writes_csv() {
    let dir = workspace();
    let plot = path(&dir, "plot.csv");
    let out = hyperspace(&["spray-cover", "--centers", "0,0;1,0;0,1", "--N", "1e3", "--plot", &plot]);
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["N"], 1000);
    assert_eq!(summary["certificate_violations"], 0);
    assert_eq!(summary["profile_violations"], 0);
    let csv = fs::read_to_string(&plot).unwrap();
    assert_eq!(csv.lines().next(), Some("x_num,x_den,y_num,y_den,color"));
    assert_eq!(csv.lines().count(), 1001);
    let out = hyperspace(&["spray-cover", "--centers", "0,0;1,0;2,0", "--N", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_of_a_saved_coloring() {
    let dir = workspace();
    let coloring = hyperspace(&["color", "--N", "50", "--strategy", "constant:1"]);
    fs::write(dir.path().join("chi.json"), &coloring.stdout).unwrap();
    let out = hyperspace(&["audit", "--N", "50", "--coloring", &path(&dir, "chi.json")]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!report["violations"].as_array().unwrap().is_empty());
    let out = hyperspace(&["audit", "--N", "60", "--coloring", &path(&dir, "chi.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identities_and_version() {
    let out = hyperspace(&["check-identities", "--n-max", "4", "--samples", "500", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));
    assert_eq!(stdout(&hyperspace(&["--version"])), "hyperspace 1\n");
}
