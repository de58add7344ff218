use std::process::{Command, Output};

use catval_cli::{ResultRecord, CACHE_ENV};

fn catval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catval"))
        .args(args)
        .env_remove(CACHE_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let cases = [
        (&["compute", "--invariant", "kl", "--a", "1", "--b", "1", "--n", "5"][..], "45t^2+55t+1"),
        (&["compute", "--invariant", "z", "--a", "1", "--b", "1", "--n", "4"][..], "t^4+22t^3+50t^2+22t+1"),
        (&["compute", "--invariant", "volume", "--a", "1", "--b", "1", "--n", "2"][..], "1/3"),
        (&["compute", "--invariant", "tutte", "--n", "2"][..], "x^2+xy+y^2+x+y"),
        (&["compute", "--invariant", "invkl", "--n", "4"][..], "19t+14"),
    ];
    for (args, expected) in cases {
        let o = catval(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o).trim(), expected);
    }
}

#[test]
fn json_output_round_trips() {
    for inv in ["ehrhart", "tutte", "whitney", "volume"] {
        let o = catval(&["compute", "--invariant", inv, "--a", "2", "--b", "1", "--n", "2", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let record: ResultRecord = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(record.invariant, inv);
        assert_eq!((record.ground, record.rank), (6, 2));
        assert!(record.value().is_some());
        assert_eq!(serde_json::to_string(&record).unwrap(), text.trim());
    }
}

#[test]
fn csv_layout() {
    let o = catval(&["compute", "--invariant", "whitney", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "invariant,a,b,n,degree,coeff0,coeff1,coeff2,coeff3");
    assert_eq!(lines[1], "whitney,1,1,3,3,1,5,8,1");
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let args = ["compute", "--invariant", "ehrhart", "--a", "1", "--b", "2", "--n", "3", "--format", "json", "--cache", path];
    let first = catval(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = catval(&args);
    assert_eq!(first.stdout, second.stdout);

    // the environment variable supplies the same directory
    let via_env = Command::new(env!("CARGO_BIN_EXE_catval"))
        .args(&args[..args.len() - 2])
        .env(CACHE_ENV, path)
        .output()
        .unwrap();
    assert_eq!(via_env.stdout, first.stdout);
}

#[test]
fn tables() {
    let o = catval(&["table", "--invariant", "invkl", "--n-max", "4"]);
    assert_eq!(stdout(&o), "2, n=2\n3t+5, n=3\n19t+14, n=4\n");
    let o = catval(&["table", "--invariant", "kl", "--n-max", "2"]);
    assert_eq!(stdout(&o), "1, n=2\n");
    for inv in ["kl", "invkl", "z", "whitney"] {
        let o = catval(&["table", "--invariant", inv, "--n-max", "7", "--golden"]);
        assert_eq!(o.status.code(), Some(0), "{inv}");
        assert!(stdout(&o).contains("golden: 6/6 rows match"));
    }
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let o = catval(&["verify", "--suite", "subdivision", "--seed", "42", "--trials", "200", "--out", path, "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("subdivision.json")).unwrap()).unwrap();
    assert_eq!(report["seed"], 42);
    assert_eq!(report["suite"], "subdivision");
    for key in ["cases", "runtime_ms"] {
        assert!(report.get(key).is_some());
    }
    let case = &report["cases"][0];
    for key in ["instance", "expected", "actual", "pass"] {
        assert!(case.get(key).is_some());
    }

    let o = catval(&["verify", "--suite", "counting"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("counting: PASS"));
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let strip = |o: &Output| -> Vec<String> {
        stdout(o).lines().map(|l| l.split(" (").next().unwrap().to_string()).collect()
    };
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    let one = catval(&["verify", "--suite", "oracles", "--max-ground", "8", "--jobs", "1", "--out", d1.path().to_str().unwrap()]);
    let four = catval(&["verify", "--suite", "oracles", "--max-ground", "8", "--jobs", "4", "--out", d2.path().to_str().unwrap()]);
    assert_eq!(strip(&one), strip(&four));
    let cases = |d: &tempfile::TempDir| -> serde_json::Value {
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.path().join("oracles.json")).unwrap()).unwrap();
        v["cases"].clone()
    };
    assert_eq!(cases(&d1), cases(&d2));
}

#[test]
fn conjecture_probe() {
    let o = catval(&["conjecture", "--a-max", "3", "--b-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().next().unwrap().starts_with("a=1 b=1: equal"));
}

#[test]
fn exit_codes() {
    assert_eq!(catval(&["compute", "--invariant", "kl"]).status.code(), Some(2));
    assert_eq!(catval(&["compute", "--invariant", "kl", "--n", "0"]).status.code(), Some(2));
    assert_eq!(catval(&["compute", "--invariant", "bogus", "--n", "2"]).status.code(), Some(2));
    assert_eq!(catval(&["table", "--invariant", "tutte", "--n-max", "4", "--golden"]).status.code(), Some(2));
    assert_eq!(catval(&["verify", "--max-ground", "40"]).status.code(), Some(2));
    assert_eq!(catval(&["frobnicate"]).status.code(), Some(2));
}
