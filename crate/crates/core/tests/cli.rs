use std::path::PathBuf;
use std::process::{Command, Output};

use kgroth::MVPolynomial;
use serde_json::Value;

fn kgroth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgroth"))
        .args(args)
        .env_remove("KGROTH_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn text(args: &[&str]) -> String {
    let mut a = args.to_vec();
    a.extend(["--format", "text"]);
    let o = kgroth(&a);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim_end().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kgroth-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn polynomial_commands() {
    assert_eq!(text(&["groth", "21"]), "x1");
    assert_eq!(text(&["groth", "--w", "21"]), "x1");
    assert_eq!(text(&["lascoux", "2,1"]), "x1^2*x2");
    assert_eq!(text(&["lascoux", "0,1"]), "x1 + x2 + b*x1*x2");
    assert_eq!(text(&["key", "--alpha", "0,1"]), "x1 + x2");
    assert_eq!(text(&["schubert", "132"]), "x1 + x2");
}

#[test]
fn json_output_round_trips() {
    for args in [["groth", "31524"], ["lascoux", "1,0,2,1"]] {
        let o = kgroth(&args);
        let json: kgroth::algebra::PolyJson = serde_json::from_slice(&o.stdout).unwrap();
        let from_json = MVPolynomial::from_json(&json).unwrap();
        let from_text: MVPolynomial = text(&args).parse().unwrap();
        assert_eq!(from_json, from_text);
    }
}

#[test]
fn left_key_command() {
    let o = kgroth(&["left-key", "1,2,3,5,7/2,4,5,6/4,6"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["content"], serde_json::json!([4, 5, 0, 2]));
    assert_eq!(v["key"], "1,1,1,1,2/2,2,2,2/4,4");
    assert_eq!(text(&["left-key", "1,2/2"]), "key 1,1/2\ncontent 2,1");
    assert_eq!(text(&["left-key", "1"]), "key 1\ncontent 1");

    let bad = kgroth(&["left-key", "1,1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("cell (0, 1)"));
}

#[test]
fn tableaux_command() {
    let out = text(&["tableaux", "31524"]);
    let first: Vec<&str> = out.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(first, ["1,2,4/3", "1,2/3,4", "1,2,4/3,4"]);
}

#[test]
fn expand_command() {
    assert_eq!(
        text(&["expand", "--groth", "31524", "--basis", "lascoux"]),
        "1·L[2,0,2] + 1·L[3,0,1] + 1·L[3,0,2]·b"
    );
    assert!(text(&["expand", "--lascoux", "1,0,2,1", "--basis", "key"]).contains("-1·k[2,1,2]·b"));
    assert_eq!(text(&["expand", "--lascoux", "2,1", "--basis", "key"]), "1·k[2,1]");
    assert_eq!(
        text(&["expand", "--stable", "21", "--vars", "2", "--basis", "schur"]),
        "1·s[1] + 1·s[1,1]·b"
    );

    let o = kgroth(&["expand", "--poly", "x1 + x2 + x3", "--basis", "key", "--vars", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not in span"));
    let o = kgroth(&["expand", "--poly", "x1", "--basis", "schur", "--vars", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_command() {
    let o = kgroth(&["verify", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[..6].iter().all(|r| r["kind"] == "report" && r["holds"] == true));
    assert_eq!(lines[6]["kind"], "summary");
    assert_eq!(lines[6]["passed"], true);

    let o = kgroth(&["verify", "--w", "31524"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);

    let all = text(&["verify", "--suite", "all"]);
    for suite in ["conjecture", "fk", "schub-key", "bksty", "fg", "oracle", "warning"] {
        assert!(all.contains(&format!("PASS {suite} ")), "{suite} missing in\n{all}");
    }
}

#[test]
fn usage_errors() {
    for args in [
        vec!["verify"],
        vec!["verify", "--n", "8"],
        vec!["verify", "--n", "3", "--w", "21"],
        vec!["groth", "3,1,1"],
        vec!["lascoux", "a"],
        vec!["frobnicate"],
    ] {
        assert_eq!(kgroth(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(kgroth(&["groth", "9,1,2,3,4,5,6,7,8", "--allow-large"]).status.code(), Some(0));
}

#[test]
fn cache_file_and_env_override() {
    let dir = scratch("cache");
    let file = dir.join("memo.jsonl");
    let other = dir.join("other.jsonl");
    let fresh = stdout(&kgroth(&["verify", "--n", "4", "--cache", file.to_str().unwrap()]));
    let header = std::fs::read_to_string(&file).unwrap();
    assert!(header.starts_with(r#"{"format":"kgroth-cache","version":1}"#));
    let reused = stdout(&kgroth(&["verify", "--n", "4", "--cache", file.to_str().unwrap()]));
    assert_eq!(fresh, reused);

    let o = Command::new(env!("CARGO_BIN_EXE_kgroth"))
        .args(["cache-info", "--cache", other.to_str().unwrap()])
        .env("KGROTH_CACHE", &file)
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["path"], file.to_str().unwrap());
    assert!(v["groth"].as_u64().unwrap() >= 24);
    assert!(!other.exists());

    std::fs::write(&other, "{\"format\":\"kgroth-cache\",\"version\":9}\n").unwrap();
    assert_eq!(kgroth(&["cache-info", "--cache", other.to_str().unwrap()]).status.code(), Some(2));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn jobs_do_not_change_output() {
    let one = stdout(&kgroth(&["verify", "--n", "5", "--jobs", "1"]));
    let many = stdout(&kgroth(&["verify", "--n", "5", "--jobs", "4"]));
    assert_eq!(one, many);
}
