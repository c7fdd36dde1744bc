//! Harness tests for the binary surface: output shapes, format contracts,
//! exit codes.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use sixfold::CountReport;

fn sixfold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sixfold"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn count_text_contains_the_headline_line() {
    let out = sixfold(&["count", "50"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("P+ = 22, pi+ = 28, P- = 18, pi- = 32, pi = 60"));

    let out = sixfold(&["count", "1"]);
    assert!(stdout(&out).contains("pi = 2"));
}

#[test]
fn count_json_round_trips_byte_identically() {
    let out = sixfold(&["count", "10", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: CountReport = serde_json::from_str(&text).expect("valid count JSON");
    assert_eq!(parsed.pi_total, 16);
    assert_eq!(parsed.m, 10);
    let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    reserialized.push('\n');
    assert_eq!(text, reserialized);

    // fixed key order: m, nu, k, r, nu0, k0, p_plus, ...
    let m_pos = text.find("\"m\"").unwrap();
    let nu_pos = text.find("\"nu\"").unwrap();
    let pi_total_pos = text.find("\"pi_total\"").unwrap();
    let levels_pos = text.find("\"levels\"").unwrap();
    assert!(m_pos < nu_pos && nu_pos < pi_total_pos && pi_total_pos < levels_pos);
    assert!(!text.contains('.'), "integers only, no floats");
}

#[test]
fn count_csv_has_header_and_one_row() {
    let out = sixfold(&["count", "50", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "m,nu,k,r,nu0,k0,p_plus,pi_plus,p_minus,pi_minus,pi_total"
    );
    assert_eq!(lines[1], "50,3,2,2,3,2,22,28,18,32,60");
}

#[test]
fn terms_table_matches_the_worked_example() {
    let out = sixfold(&[
        "terms", "50", "--side", "plus", "--max-q", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "factors,d,q,s,residue,sign,count");

    let term_lines: Vec<&str> = lines[1..]
        .iter()
        .copied()
        .filter(|l| !l.starts_with("gamma"))
        .collect();
    let tally_lines: Vec<&str> = lines[1..]
        .iter()
        .copied()
        .filter(|l| l.starts_with("gamma"))
        .collect();
    // row count = terms + level tallies
    assert_eq!(term_lines.len(), 15);
    assert_eq!(tally_lines.len(), 2);
    assert_eq!(lines.len(), 1 + 15 + 2);

    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for line in &term_lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 7);
        counts.insert(cols[1].parse().unwrap(), cols[6].parse().unwrap());
    }
    let expected: BTreeMap<u64, u64> = [
        (5u64, 10u64),
        (11, 4),
        (17, 3),
        (7, 7),
        (13, 3),
        (35, 1),
        (65, 0),
        (77, 0),
        (119, 0),
        (143, 0),
        (221, 0),
        (55, 1),
        (85, 1),
        (187, 1),
        (91, 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(counts, expected);

    // display order: level, then minus class before plus class
    let ds: Vec<u64> = term_lines
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(
        ds,
        vec![5, 11, 17, 7, 13, 35, 65, 77, 119, 143, 221, 55, 85, 187, 91]
    );
}

#[test]
fn terms_minus_level_one_counts() {
    let out = sixfold(&[
        "terms", "50", "--side", "minus", "--max-q", "1", "--format", "csv",
    ]);
    let text = stdout(&out);
    let counts: Vec<u64> = text
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with("gamma"))
        .map(|l| l.split(',').nth(6).unwrap().parse().unwrap())
        .collect();
    assert_eq!(counts, vec![9, 4, 7, 4]);
}

#[test]
fn terms_empty_basis_note() {
    let out = sixfold(&["terms", "1", "--side", "plus"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("empty basis"));
}

#[test]
fn verify_reports_full_match() {
    let out = sixfold(&["verify", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("50/50 match"));
}

#[test]
fn verify_five_thousand_matches() {
    let out = sixfold(&["verify", "5000"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("5000/5000 match"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sixfold(&["verify", "0"]).status.code(), Some(2));
    assert_eq!(sixfold(&["count", "0"]).status.code(), Some(2));
    assert_eq!(sixfold(&["count"]).status.code(), Some(2));
    assert_eq!(sixfold(&["terms", "50"]).status.code(), Some(2)); // --side required
    assert_eq!(sixfold(&["nonsense"]).status.code(), Some(2));
    // oracle cap exceeded is a resource/usage failure, not a mismatch
    let out = sixfold(&["verify", "1000", "--oracle-cap", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn paper_check_exits_zero_and_lists_errata() {
    let out = sixfold(&["paper-check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0 fail"));
    for needle in ["Theorem 3.1", "Eq. (2.15)", "Eq. (2.20)", "Eq. (2.12)"] {
        assert!(text.contains(needle), "missing errata anchor {needle}");
    }
}

#[test]
fn bench_reports_totals_and_term_counts() {
    let out = sixfold(&["bench", "50", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("pi = 60").count(), 2);

    let out = sixfold(&["bench", "1", "1"]);
    assert!(stdout(&out).contains("terms enumerated = 0"));

    assert_eq!(sixfold(&["bench", "50", "0"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("sixfold-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("count50.json");
    let out = sixfold(&[
        "count",
        "50",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let parsed: CountReport = serde_json::from_str(&written).unwrap();
    assert_eq!(parsed.p_plus, 22);
    std::fs::remove_file(&path).ok();
}
