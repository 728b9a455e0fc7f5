use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn extremal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .env_remove("EXTREMAL_CACHE_DIR")
        .output()
        .expect("spawn extremal")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn enum_table_full_ternary_golay() {
    let o = extremal(&["enum", "--type", "iii", "--n", "12", "--format", "table", "--full"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<(usize, String)> = text
        .lines()
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            let w = it.next()?.parse().ok()?;
            Some((w, it.next()?.to_string()))
        })
        .collect();
    assert_eq!(
        rows,
        vec![(0, "1".into()), (6, "264".into()), (9, "440".into()), (12, "24".into())]
    );
}

#[test]
fn enum_inadmissible_length() {
    let o = extremal(&["enum", "--type", "iii", "--n", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("n must satisfy 4|n"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn enum_json_binary_golay() {
    let o = extremal(&["enum", "--type", "ii", "--n", "24", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["A"], serde_json::json!({"8":"759","12":"2576","16":"759","24":"1"}));
    for key in ["type", "n", "m", "d", "a", "A", "signs", "excluded", "witness_weight", "schema_version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["excluded"], false);
}

#[test]
fn json_and_csv_round_trip_exact_decimals() {
    let n = "3952";
    let j = extremal(&["enum", "--type", "ii", "--n", n, "--format", "json", "--full"]);
    let c = extremal(&["enum", "--type", "ii", "--n", n, "--format", "csv", "--full"]);
    assert_eq!(j.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&j.stdout).unwrap();
    let lib = extremal::extremal_enumerator(extremal::CodeType::II, 3952).unwrap();
    let map = v["A"].as_object().unwrap();
    let csv = stdout(&c);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("weight,coefficient"));
    assert_eq!(lines.next(), Some("0,1"));
    let mut seen = 0;
    for (line, (w, coeff)) in lines.zip(lib.poly.nonzero_terms().skip(1)) {
        let expect = coeff.to_string();
        assert_eq!(line, format!("{w},{expect}"));
        assert_eq!(map[&w.to_string()].as_str().unwrap(), expect);
        seen += 1;
    }
    assert_eq!(seen, map.len());
    // coefficients here run to hundreds of digits
    assert!(map.values().any(|s| s.as_str().unwrap().len() > 500));
    assert_eq!(v["signs"]["third"], "neg");
}

#[test]
fn table_truncates_long_coefficients() {
    let o = extremal(&["enum", "--type", "iii", "--n", "600"]);
    let text = stdout(&o);
    assert!(text.contains("digits)"));
    assert!(text.contains("more nonzero coefficients"));
}

#[test]
fn scan_rows_and_header() {
    let o = extremal(&["scan", "--type", "iii", "--from", "60", "--to", "84"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,d,highest,next,third,excluded,witness"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    let ns: Vec<&str> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(ns, ["60", "64", "68", "72", "76", "80", "84"]);
    let r72 = &rows[3];
    assert_eq!(r72[3], "neg");
    assert_eq!(r72[6], "true");

    let empty = extremal(&["scan", "--type", "iii", "--from", "5", "--to", "7"]);
    assert_eq!(stdout(&empty), "n,m,d,highest,next,third,excluded,witness\n");

    let o = extremal(&["scan", "--type", "iii", "--from", "828", "--to", "840"]);
    let text = stdout(&o);
    let third = |n: &str| {
        text.lines()
            .find(|l| l.starts_with(&format!("{n},")))
            .map(|l| l.split(',').nth(5).unwrap().to_string())
            .unwrap()
    };
    assert_eq!(third("828"), "pos");
    assert_eq!(third("840"), "neg");

    let bad = extremal(&["scan", "--type", "iii", "--from", "20", "--to", "4"]);
    assert_eq!(bad.status.code(), Some(64));
}

#[test]
fn scan_json_format() {
    let o = extremal(&["scan", "--type", "ii", "--from", "8", "--to", "24", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["n"], 24);
    assert_eq!(rows[2]["witness"], Value::Null);
}

#[test]
fn bound_command() {
    assert_eq!(stdout(&extremal(&["bound", "--type", "iii", "--n", "72"])), "21\n");
    assert_eq!(stdout(&extremal(&["bound", "--type", "ii", "--n", "48"])), "12\n");
    assert_eq!(stdout(&extremal(&["bound", "--type", "i", "--n", "8"])), "4\n");
    assert_eq!(extremal(&["bound", "--type", "iii", "--n", "14"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(extremal(&["enum", "--type", "iii", "--n", "12", "--frobnicate"]).status.code(), Some(64));
    assert_eq!(extremal(&["verify", "--claim", "thm7"]).status.code(), Some(64));
    assert_eq!(extremal(&["explode"]).status.code(), Some(64));
}

#[test]
fn verify_passing_claims() {
    let o = extremal(&["verify", "--claim", "thm2-iii", "--cap", "1000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("thm2-iii: PASS"));

    let o = extremal(&["verify", "--claim", "remark-ii", "--cap", "400"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("remark-ii: PASS (50 lengths, n <= 400)"));

    let o = extremal(&["verify", "--claim", "thm3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("handoff 24i+20 n=956"));
}

#[test]
fn verify_prop_reports_counterexamples() {
    // The 24i+20 family is negative in the next-to-highest slot, not the
    // highest one, so the claim as stated fails there.
    let o = extremal(&["verify", "--claim", "prop", "--cap", "944"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("prop: FAIL"));
    assert!(text.contains("boundary n=248 [n=24i+8 (11<=i<=38)] outside: does not hold"));
    assert!(text.contains("boundary n=272 [n=24i+8 (11<=i<=38)] inside: holds"));
    assert!(text.contains("counterexample n=476"));
    let cex: Vec<&str> = text.lines().filter(|l| l.contains("counterexample")).collect();
    assert!(cex.iter().all(|l| l.contains("24i+20")), "{cex:?}");
}

#[test]
fn cache_round_trip_and_quarantine() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_extremal"))
            .args(args)
            .env("EXTREMAL_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run(&["enum", "--type", "iii", "--n", "36", "--format", "json", "--full"]);
    let path = dir.path().join("iii-36.json");
    assert!(path.exists());
    let second = run(&["enum", "--type", "iii", "--n", "36", "--format", "json", "--full"]);
    assert_eq!(first.stdout, second.stdout);

    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, &text[..text.len() - 10]).unwrap();
    let third = run(&["enum", "--type", "iii", "--n", "36", "--format", "json", "--full"]);
    assert_eq!(third.stdout, first.stdout);
    assert!(dir.path().join("iii-36.json.bad").exists());
    assert!(String::from_utf8(third.stderr).unwrap().contains("quarantined"));
    assert!(path.exists(), "recomputed entry rewritten");
}

#[test]
fn unwritable_cache_warns_and_continues() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, b"").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(["scan", "--type", "iii", "--from", "4", "--to", "40"])
        .env("EXTREMAL_CACHE_DIR", blocker.join("sub"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let err = stderr(&o);
    assert_eq!(err.matches("warning: cannot write cache").count(), 1, "{err}");
    assert_eq!(stdout(&o).lines().count(), 11);
}

#[test]
fn jobs_do_not_change_output() {
    let one = extremal(&["scan", "--type", "ii", "--from", "8", "--to", "800", "--jobs", "1"]);
    let four = extremal(&["scan", "--type", "ii", "--from", "8", "--to", "800", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
}
