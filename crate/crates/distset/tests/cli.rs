use std::fs;
use std::path::Path;
use std::process::Command;

use distset::catalog::{self, EntryRecord};
use distset::cli::run;

fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("distset").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn classify(dir: &Path, extra: &[&str]) -> (u8, String) {
    let out = dir.to_str().unwrap();
    let mut args = vec!["classify", "--mode", "spherical", "--max-n", "8", "--out", out];
    args.extend_from_slice(extra);
    let (code, stdout, stderr) = call(&args);
    assert_eq!(code, 0, "{stderr}");
    (code, stdout)
}

#[test]
fn mydim_of_small_graphs() {
    assert_eq!(call(&["mydim", "bbbbbbbaaaabaabaababbaaabbbb"]).1, "6\n");
    assert_eq!(call(&["mydim", "aaaaaaaabbaabba"]).1, "4\n");
    assert_eq!(call(&["mydim", "aba"]).1, "1\n");
    assert_eq!(call(&["mydim", "aaaaaa"]).1, "3\n");
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["mydim", "abx"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(call(&["mydim", "abab"]).0, 2);
    let (code, out, _) = call(&["mydim", "aaaaaaaabbaabba", "--max-dim", "3"]);
    assert_eq!((code, out.as_str()), (4, ">= 4\n"));
    assert_eq!(call(&["classify", "--dim", "0"]).0, 2);
    assert_eq!(call(&["classify", "--seed-n", "9", "--max-n", "8"]).0, 2);
    assert_eq!(call(&["no-such-command"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(call(&["table", dir.path().join("missing.jsonl").to_str().unwrap()]).0, 2);
}

#[test]
fn binary_reports_exit_status() {
    let out = Command::new(env!("CARGO_BIN_EXE_distset")).args(["mydim", "aaaaaaaabbaabba", "--max-dim", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_distset")).args(["mydim", "aba"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1\n");
}

#[test]
fn catalogs_do_not_depend_on_job_count() {
    let one = tempfile::tempdir().unwrap();
    let three = tempfile::tempdir().unwrap();
    let (_, s1) = classify(one.path(), &["--dim", "3", "--jobs", "1"]);
    let (_, s3) = classify(three.path(), &["--dim", "3", "--jobs", "3"]);
    assert_eq!(s1, s3);
    for file in ["catalog.jsonl", "summary.tsv", "rows.tsv"] {
        assert_eq!(fs::read(one.path().join(file)).unwrap(), fs::read(three.path().join(file)).unwrap(), "{file}");
    }
}

#[test]
fn resume_completes_a_truncated_run() {
    let fresh = tempfile::tempdir().unwrap();
    classify(fresh.path(), &["--dim", "3"]);
    let expected = fs::read_to_string(fresh.path().join("catalog.jsonl")).unwrap();

    // keep the header, the n=6 level and half of the n=7 entries
    let lines: Vec<&str> = expected.lines().collect();
    let mark6 = lines.iter().position(|l| l.contains("\"level\"") && l.contains("\"n\":6")).unwrap();
    let cut = mark6 + 1 + (lines.iter().position(|l| l.contains("\"level\"") && l.contains("\"n\":7")).unwrap() - mark6) / 2;
    let partial = tempfile::tempdir().unwrap();
    fs::write(partial.path().join("catalog.jsonl"), lines[..cut].join("\n") + "\n").unwrap();

    classify(partial.path(), &["--dim", "3", "--resume"]);
    assert_eq!(fs::read_to_string(partial.path().join("catalog.jsonl")).unwrap(), expected);
    assert_eq!(fs::read(partial.path().join("rows.tsv")).unwrap(), fs::read(fresh.path().join("rows.tsv")).unwrap());

    let (code, _, err) = call(&["classify", "--dim", "3", "--mode", "general", "--resume", "--out", partial.path().to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn catalog_round_trip_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    classify(dir.path(), &["--format", "json"]);
    let path = dir.path().join("catalog.jsonl");
    let (c, _) = catalog::read(&path).unwrap();
    assert_eq!(c.header.d, 4);
    assert_eq!(c.levels.iter().map(|l| l.n).collect::<Vec<_>>(), [6, 7, 8]);
    for e in &c.entries {
        assert_eq!(&EntryRecord::from(e).to_entry().unwrap(), e);
    }
    let survivors = |n| c.entries.iter().filter(|e| e.n == n && e.survived).count();
    assert_eq!([survivors(6), survivors(7), survivors(8)], [30, 17, 6]);

    let (code, summary, _) = call(&["table", path.to_str().unwrap(), "--which", "summary"]);
    assert_eq!(code, 0);
    let sets = summary.lines().find(|l| l.starts_with("spherical_sets")).unwrap();
    assert_eq!(sets.split('\t').skip(1).collect::<Vec<_>>(), ["42", "23", "7"]);

    let (code, rows, _) = call(&["table", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(rows.lines().any(|l| l.starts_with("8\t") && l.contains("\tspherical\t0\t-1\t")), "{rows}");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("rows.json")).unwrap()).unwrap();
    assert!(json.as_array().unwrap().iter().all(|r| r["n"].as_u64().unwrap() <= 8));
}

#[test]
fn verify_reads_fixture_files() {
    let dir = tempfile::tempdir().unwrap();
    let rows: Vec<serde_json::Value> = serde_json::from_str(include_str!("../data/tables.json")).unwrap();
    let path = dir.path().join("rows.json");
    fs::write(&path, serde_json::to_string(&rows[..3]).unwrap()).unwrap();
    let (code, out, _) = call(&["verify", "--file", path.to_str().unwrap(), "--skip-mydim"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("3 of 3 rows certified\n"));

    // a wrong point fails the row
    let mut bad = rows[0].clone();
    bad["points"] = serde_json::json!([{"a": "1/3", "b": "1/5"}]);
    fs::write(&path, serde_json::to_string(&[bad]).unwrap()).unwrap();
    let (code, out, _) = call(&["verify", "--file", path.to_str().unwrap(), "--skip-mydim"]);
    assert_eq!(code, 1, "{out}");
}
