use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn degloci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degloci"))
        .args(args)
        .env_remove("DEGLOCI_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scenario(name: &str) -> String {
    corpus().join(format!("{name}.scn")).display().to_string()
}

fn golden(file: &str) -> String {
    std::fs::read_to_string(corpus().join("golden").join(file)).unwrap()
}

fn scenarios() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(corpus())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "scn").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
}

#[test]
fn corpus_matches_golden_files() {
    let names = scenarios();
    assert!(names.len() >= 5);
    for name in names {
        let json = degloci(&["--scenario", &scenario(&name), "--report", "json"]);
        assert_eq!(json.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&json), golden(&format!("{name}.jsonl")), "{name}.jsonl");
        let text = degloci(&["--scenario", &scenario(&name), "--report", "text"]);
        assert_eq!(stdout(&text), golden(&format!("{name}.txt")), "{name}.txt");
    }
}

#[test]
fn corpus_directory_runs_everything() {
    let out = degloci(&["--corpus", corpus().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let expected: String = scenarios().iter().map(|n| golden(&format!("{n}.txt"))).collect();
    assert_eq!(text, expected);
}

#[test]
fn characteristic_two_kills_the_determinant() {
    let out = degloci(&["--scenario", &scenario("symmetric_char2"), "--char", "2", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("symmetric_char2.char2.jsonl"));
    let first: serde_json::Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(first["result"]["ideal"], serde_json::json!([]));
}

#[test]
fn parallel_runs_keep_declaration_order() {
    for name in ["rank3_order_ideal", "random_bounds"] {
        let seq = degloci(&["--scenario", &scenario(name), "--report", "json"]);
        let par = degloci(&["--scenario", &scenario(name), "--report", "json", "--parallel"]);
        assert_eq!(stdout(&seq), stdout(&par));
    }
}

#[test]
fn dry_run_skips_every_task() {
    let out = degloci(&["--scenario", &scenario("rank3_order_ideal"), "--dry-run", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().all(|l| l.contains("\"status\":\"skipped\"")));
}

fn temp_scenario(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("degloci-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    assert_eq!(degloci(&[]).status.code(), Some(2));
    assert_eq!(degloci(&["--report", "yaml", "--scenario", "x"]).status.code(), Some(2));
    let p = temp_scenario("bad.scn", "ring A field 0 vars x\ntask dimension ideal=J\n");
    let out = degloci(&["--scenario", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.scn:2:22"), "{err}");
    assert!(err.contains("`J`"), "{err}");
}

#[test]
fn task_errors_exit_with_one() {
    // Frobenius needs positive characteristic
    let p = temp_scenario(
        "err.scn",
        "ring A field 0 vars x\nmodule M gens 0\nelement v in M coords x\ntask p_ample module=M elements=v\n",
    );
    let out = degloci(&["--scenario", p.to_str().unwrap(), "--report", "json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("\"status\":\"error\""));
}

#[test]
fn degree_guard_exits_with_three() {
    let p = temp_scenario(
        "guard.scn",
        "ring A field 0 vars x y z\nideal I = x^5 - y*z^4, y^5 - x^4*z, z^5 - x*y^4\ntask groebner ideal=I\n",
    );
    let out = Command::new(env!("CARGO_BIN_EXE_degloci"))
        .args(["--scenario", p.to_str().unwrap(), "--report", "json"])
        .env("DEGLOCI_MAX_DEGREE", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("\"status\":\"resource\""));
}
