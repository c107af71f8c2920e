use std::process::{Command, Output};

use seifert_ps::report::RecordReport;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seifert-ps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn jsonl_records(text: &str) -> (Vec<RecordReport>, serde_json::Value) {
    let mut records = Vec::new();
    let mut summary = serde_json::Value::Null;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if let Some(s) = v.get("summary") {
            summary = s.clone();
        } else {
            records.push(serde_json::from_value(v).unwrap());
        }
    }
    (records, summary)
}

#[test]
fn tangle_from_cf() {
    let o = bin(&["tangle", "--cf", "-1,2,3,2,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fraction 4/9"), "{}", stdout(&o));
}

#[test]
fn tangle_from_rational() {
    let o = bin(&["tangle", "--rational", "7/2", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["cf"], serde_json::json!(["2", "3"]));
    assert_eq!(v["fraction"], "7/2");

    let o = bin(&["tangle", "--rational", "0/1"]);
    assert!(stdout(&o).contains("continued fraction [0]"));

    let o = bin(&["tangle", "--cf", "0,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fraction inf"));
}

#[test]
fn tangle_parse_errors() {
    assert_eq!(bin(&["tangle", "--cf", "1,x"]).status.code(), Some(2));
    assert_eq!(bin(&["tangle", "--rational", "7/"]).status.code(), Some(2));
    assert_eq!(bin(&["tangle", "--rational", "inf"]).status.code(), Some(2));
    assert_eq!(bin(&["tangle"]).status.code(), Some(2));
}

#[test]
fn ttk_report() {
    let o = bin(&["ttk", "2", "3", "5", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let (r, _) = jsonl_records(&stdout(&o));
    assert_eq!(r[0].slope, "131");
    assert_eq!(r[0].verdict.kind, "DistinctByIndexSet");
    assert_eq!(r[0].hyperbolic_certified, Some(true));
    let sets: Vec<String> = r[0]
        .positions
        .iter()
        .map(|p| format!("{:?}", p.index_set))
        .collect();
    assert_eq!(sets, vec!["[Small(3), Small(5)]", "[Small(2), Small(5)]"]);
}

#[test]
fn ttk_degenerate_and_invalid() {
    let o = bin(&["ttk", "2", "3", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("ConnectedSumOfTwoLensSpaces"));
    assert!(!text.contains("position "));

    let o = bin(&["ttk", "2", "4", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd(p,q)"));

    let o = bin(&["ttk", "3", "5", "-4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("slope -241"));
}

#[test]
fn emk_reports() {
    let o = bin(&["emk", "case1", "2", "4", "2", "--slope", "1", "--format", "jsonl"]);
    let (r, _) = jsonl_records(&stdout(&o));
    assert_eq!(r[0].verdict.kind, "DistinctByInvariantsMod1");
    assert_eq!(r[0].hypothesis_holds, Some(false));

    let o = bin(&["emk", "case1", "3", "2", "2", "--slope", "0", "--format", "jsonl"]);
    let (r, _) = jsonl_records(&stdout(&o));
    assert_eq!(r[0].verdict.kind, "DistinctByIndexSet");

    let o = bin(&["emk", "case2", "2", "4", "1", "--slope", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("HypothesisViolated"));

    assert_eq!(bin(&["emk", "case1", "2", "4", "2", "--slope", "2"]).status.code(), Some(2));
    assert_eq!(bin(&["emk", "case9", "2", "4", "2", "--slope", "0"]).status.code(), Some(2));
}

#[test]
fn enumerate_ttk_box() {
    let o = bin(&[
        "enumerate", "ttk", "--p", "2..5", "--q", "3..7", "--n", "2..6", "--format", "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (records, summary) = jsonl_records(&stdout(&o));
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r.verdict.kind == "DistinctByIndexSet"));
    assert_eq!(summary["records"], records.len());
}

#[test]
fn enumerate_k24_family() {
    let o = bin(&[
        "enumerate", "emk", "--case", "1", "--l", "2..2", "--m", "4..4", "--n", "1..20", "--slope",
        "1", "--format", "jsonl",
    ]);
    let (records, summary) = jsonl_records(&stdout(&o));
    assert_eq!(records.len(), 20);
    assert!(records.iter().all(|r| r.verdict.kind == "DistinctByInvariantsMod1"));
    assert_eq!(summary["verdicts"]["DistinctByInvariantsMod1"], 20);
    assert_eq!(summary["distinct_braid_indices"], 1);
}

#[test]
fn enumerate_empty_range() {
    let o = bin(&["enumerate", "ttk", "--p", "5..4", "--q", "3..7", "--n", "2..6", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let (records, summary) = jsonl_records(&stdout(&o));
    assert!(records.is_empty());
    assert_eq!(summary["records"], 0);
}

#[test]
fn enumerate_negative_ranges_and_csv() {
    let o = bin(&[
        "enumerate", "emk", "--case", "case2", "--l", "-2..2", "--m", "-3..-1", "--p", "1..2",
        "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 5 * 3 * 2 * 2);
    assert!(text.contains("# records=60"));
}

#[test]
fn enumerate_is_deterministic_across_thread_counts() {
    let run = |jobs: &str| {
        stdout(&bin(&[
            "enumerate", "emk", "--case", "1", "--l", "-3..6", "--m", "-3..6", "--n", "-3..6",
            "--format", "jsonl", "--jobs", jobs,
        ]))
    };
    let one = run("1");
    assert_eq!(one, run("8"));
    assert_eq!(one, run("3"));
    assert_eq!(one.lines().count(), 10 * 10 * 10 * 2 + 1);
}

#[test]
fn jsonl_round_trips() {
    let o = bin(&[
        "enumerate", "emk", "--case", "2", "--l", "0..3", "--m", "-2..3", "--p", "-1..2",
        "--format", "jsonl",
    ]);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if v.get("summary").is_some() {
            continue;
        }
        let r: RecordReport = serde_json::from_value(v.clone()).unwrap();
        assert_eq!(serde_json::to_value(&r).unwrap(), v);
        for key in ["family", "params", "slope", "classification", "positions", "verdict", "evidence"] {
            assert!(v.get(key).is_some(), "{key} missing in {line}");
        }
    }
}

#[test]
fn compare_sfs() {
    let o = bin(&["compare-sfs", "--base", "disk", "4/3,9/5", "-1/3,9/5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NOT homeomorphic"));

    let o = bin(&["compare-sfs", "--base", "disk", "4/3,9/5", "9/5,4/3"]);
    assert!(stdout(&o).trim_end().ends_with("\nhomeomorphic"));

    let o = bin(&["compare-sfs", "--base", "disk", "4/3,9/5", "1/3,4/5", "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["homeomorphic"], true);
    assert_eq!(v["normalized"], serde_json::json!([["1/3", "4/5"], ["1/3", "4/5"]]));

    let o = bin(&["compare-sfs", "--base", "sphere", "1/2,1/3,1/5", "3/2,1/3,1/5"]);
    assert!(stdout(&o).contains("NOT homeomorphic"));

    assert_eq!(bin(&["compare-sfs", "4/3,x", "1/3,4/5"]).status.code(), Some(2));
    assert_eq!(bin(&["compare-sfs", "4/3", "1/3,4/5"]).status.code(), Some(2));
}

#[test]
fn output_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.jsonl");
    let o = bin(&["ttk", "2", "3", "5", "--format", "jsonl", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"slope\":\"131\""));

    let bad = dir.path().join("missing").join("out.jsonl");
    let o = bin(&["ttk", "2", "3", "5", "--output", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn in_process_runner() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = seifert_ps::cli::run(["seifert-ps", "ttk", "2", "3", "2"], &mut out, &mut err);
    assert_eq!(code, 0);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("slope 56"));
    assert!(text.contains("position F': index set {2}"));
}
