use std::process::Command;

use regsel::cli::{parse_circle, run, Cli};
use clap::Parser;
use serde_json::Value;

fn regsel(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_regsel"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let cli = Cli::try_parse_from(std::iter::once("regsel").chain(args.iter().copied())).unwrap();
    serde_json::from_str(&run(&cli.command).unwrap().stdout).unwrap()
}

#[test]
fn analyze_names_unchangeable_and_changeable_lamps() {
    let (code, out, _) = regsel(&["analyze", "fixtures/boards/seven_lamp_system.json"]);
    assert_eq!(code, 0);
    assert!(out.contains("lamp 0 on: unchangeable, certificate [0, 2, 3, 4, 5, 6]"), "{out}");
    assert!(out.contains("lamp 1 off: changeable"), "{out}");
}

#[test]
fn analyze_trefoil_every_crossing_changeable() {
    let r = json(&["analyze", "fixtures/pd/knot_3_1.pd", "--format", "json"]);
    let sites = r["per_site"].as_array().unwrap();
    assert_eq!(sites.len(), 3);
    assert!(sites.iter().all(|s| s["changeable"]["solvable"] == true));
}

#[test]
fn analyze_empty_diagram() {
    let dir = std::env::temp_dir().join(format!("regsel-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.pd");
    std::fs::write(&path, "").unwrap();
    let r = json(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r["sites"], 0);
    assert_eq!(r["solve"]["solvable"], true);
}

#[test]
fn parse_errors_exit_nonzero_with_line() {
    let dir = std::env::temp_dir().join(format!("regsel-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.pd");
    std::fs::write(&path, "X[1,2,3,4]\nX[1,2").unwrap();
    let (code, _, err) = regsel(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn infeasible_solve_needs_the_flag() {
    let (code, out, _) = regsel(&["solve", "unsolvable_diamond"]);
    assert_eq!(code, 1);
    assert!(out.contains("unsolvable"));
    let (code, out, _) = regsel(&["solve", "unsolvable_diamond", "--certificate", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(!v["certificate"].as_array().unwrap().is_empty());
}

#[test]
fn solve_single_site() {
    let v = json(&["solve", "seven_lamp_system", "--site", "1", "--format", "json"]);
    assert_eq!(v["solvable"], true);
    let (code, _, _) = regsel(&["solve", "seven_lamp_system", "--site", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn unlink_report_fields() {
    let v = json(&["unlink", "link_4_2_1", "--format", "json", "--certificate"]);
    assert_eq!(v["u_upper"], 2);
    assert_eq!(v["u_circled_upper"], 1);
    assert_eq!(v["witness_moves"].as_array().unwrap().len(), 1);
    assert_eq!(v["certificate"]["verdict"], "trivial");
    let v = json(&["unlink", "link_4_2_1", "--format", "json", "--budget", "0"]);
    assert!(v["u_upper"].is_null());
    assert!(v["u_circled_upper"].is_null());
}

#[test]
fn unlink_with_an_explicit_circle() {
    // a small circle around crossing 0 of the Hopf link
    let v = json(&["unlink", "link_hopf", "--format", "json"]);
    let transits: Vec<String> = v["circle"]["transits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| format!("{}:{}", t["dart"], t["index"]))
        .collect();
    let explicit = json(&["unlink", "link_hopf", "--format", "json", "--circle", &transits.join(",")]);
    assert_eq!(explicit["u_circled_upper"], 1);
    assert_eq!(explicit["circles_tried"], 1);

    let empty = json(&["unlink", "link_hopf", "--format", "json", "--circle", ""]);
    assert!(empty["u_circled_upper"].is_null(), "Hopf link has no plain region unlinking");
    assert!(parse_circle("1-2", 0).is_err());
}

#[test]
fn unlink_rejects_patterns() {
    let (code, _, err) = regsel(&["unlink", "diamond"]);
    assert_eq!(code, 2);
    assert!(err.contains("link diagram"));
}

#[test]
fn tanglize_and_foldcheck() {
    let t = json(&["tanglize", "contact_t3", "--format", "json"]);
    let names: Vec<&str> = t["components"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["K0", "L1", "L2"]);
    let f = json(&["foldcheck", "fixtures/fold/kite_vertex.fold", "--format", "json"]);
    assert_eq!(f["pass"], false);
    let f = json(&["foldcheck", "preliminary_base", "--format", "json"]);
    assert_eq!(f["pass"], true);
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let (code, _, _) = regsel(&["fold"]);
    assert_eq!(code, 2);
}
