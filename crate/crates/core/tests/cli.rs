use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn tvk(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvk")).args(args).current_dir(dir).env_remove("TVK_FIXTURES").output().unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn success_paths() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let inst = fixture("random-s1-n7-b1000.json");
    for args in [
        vec!["gen", "--seed", "1", "--out", "g.json"],
        vec!["depth", &inst, "--k", "2"],
        vec!["enumerate", &inst, "--out", "e.json"],
        vec!["prove", &inst],
        vec!["verify", &inst, "e.json"],
        vec!["plot", &inst, "e.json", "--out", "e.svg"],
        vec!["minimize", "--seed", "1", "--iterations", "1"],
    ] {
        let o = tvk(&args, d);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(d.join("g.json")).unwrap(), std::fs::read(&inst).unwrap());
    let o = tvk(&["case4-general", &fixture("case4-s3-r3.json"), "--r", "3"], d);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"total\": 4"));
}

#[test]
fn fixtures_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_tvk"))
        .args(["gen", "--kind", "case4", "--seed", "3"])
        .env("TVK_FIXTURES", dir.path().join("fx"))
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("fx/case4-s3-r3.json").exists());
}

#[test]
fn validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("bad.json"), "[[[0,1,2],[3,4,5],[6]]]").unwrap();
    let o = tvk(&["verify", &fixture("random-s1-n7-b1000.json"), "bad.json"], d);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"valid\": false"));
    std::fs::write(d.join("col.json"), r#"{"schema_version":1,"points":[[0,0],[1,1],[2,2],[5,0],[0,5],[7,3],[3,9]]}"#).unwrap();
    assert_eq!(code(&tvk(&["enumerate", "col.json"], d)), 2);
    assert_eq!(code(&tvk(&["case4-general", &fixture("random-s1-n7-b1000.json")], d)), 2);
}

#[test]
fn usage_and_parse_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&tvk(&["frobnicate"], d)), 1);
    assert_eq!(code(&tvk(&["gen"], d)), 1);
    assert_eq!(code(&tvk(&["enumerate", "missing.json"], d)), 1);
    std::fs::write(d.join("zero.json"), r#"{"schema_version":1,"points":[["1","0/0"]]}"#).unwrap();
    let o = tvk(&["enumerate", "zero.json"], d);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("points[0][1]"));
    assert_eq!(code(&tvk(&["--help"], d)), 0);
}
