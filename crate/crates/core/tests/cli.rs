use std::process::{Command, Output};

use macdonald_interp::algebra::Ctx;
use macdonald_interp::comb::parse_composition;
use macdonald_interp::interp::e_star_k;
use macdonald_interp::queues::{collect_queues, EnumOptions, Queue, QueueFamily};
use macdonald_interp::tableaux::{enumerate_tableaux_typed, QueueTableau};
use macdonald_interp::verify::fixtures::golden_f_star_02;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdonald-interp")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_objects(args: &[&str]) -> Vec<Value> {
    let v: Value = serde_json::from_str(&stdout(args)).unwrap();
    v.as_array().unwrap().iter().map(|item| item["object"].clone()).collect()
}

#[test]
fn golden_interpolation_asep_polynomial() {
    let text = stdout(&["compute", "f*", "--n", "2", "--mu", "0,2", "--mode", "symbolic"]);
    assert_eq!(text.trim(), golden_f_star_02().to_string());
    let queues = stdout(&["compute", "F*", "--mu", "0,2"]);
    assert_eq!(queues, text);
}

#[test]
fn column_partition_is_elementary() {
    let text = stdout(&["compute", "P*", "--n", "3", "--lambda", "1,1,0"]);
    assert_eq!(text.trim(), e_star_k(2, 3, &Ctx::symbolic()).to_string());
}

#[test]
fn empty_composition_gives_one() {
    assert_eq!(stdout(&["compute", "F*", "--mu", "0,0,0"]).trim(), "(1)");
}

#[test]
fn enumeration_counts() {
    assert!(stdout(&["enumerate", "smlq", "--mu", "0,2"]).ends_with("count: 15\n"));
    let trivial = stdout(&["enumerate", "smlq", "--mu", "0,0"]);
    assert!(trivial.contains("weight: (1)") && trivial.ends_with("count: 1\n"));
    assert!(stdout(&["enumerate", "tableaux", "--lambda", "2,0", "--type", "0,2"]).ends_with("count: 15\n"));
}

#[test]
fn queue_json_round_trips() {
    let parsed: Vec<Queue> = json_objects(&["enumerate", "smlq", "--mu", "0,2", "--format", "json"])
        .into_iter()
        .map(|v| serde_json::from_value(v).unwrap())
        .collect();
    assert_eq!(parsed, collect_queues(QueueFamily::Signed, &[0, 2], EnumOptions::default()));
}

#[test]
fn tableau_json_round_trips() {
    let parsed: Vec<QueueTableau> = json_objects(&["enumerate", "tableaux", "--lambda", "2,0", "--type", "0,2", "--format", "json"])
        .into_iter()
        .map(|v| serde_json::from_value(v).unwrap())
        .collect();
    assert_eq!(parsed, enumerate_tableaux_typed(&[2, 0], &[0, 2]));
}

#[test]
fn composition_json_and_text_round_trip() {
    let v: Value = serde_json::from_str(&stdout(&["compute", "G", "--mu", "2,1,0", "--format", "json"])).unwrap();
    let from_json: Vec<Vec<i32>> = v["entries"].as_array().unwrap().iter().map(|e| serde_json::from_value(e["composition"].clone()).unwrap()).collect();
    let from_text: Vec<Vec<i32>> = stdout(&["compute", "G", "--mu", "2,1,0"])
        .lines()
        .map(|l| parse_composition(l.split(':').next().unwrap()).unwrap())
        .collect();
    assert!(!from_json.is_empty());
    assert_eq!(from_json, from_text);
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    let a = stdout(&["verify", "hecke-relations", "--n", "4"]);
    assert_eq!(a, stdout(&["verify", "hecke-relations", "--n", "4"]));
    for line in a.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass", "{line}");
        assert_eq!(v["suite"], "hecke-relations");
    }
    stdout(&["verify", "factorization-q1", "--max-size", "4"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["compute", "P*", "--lambda", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "P*", "--lambda", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "f*"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "smlq", "--mu", "1,1,1,1,1"]).status.code(), Some(4));
    assert_eq!(run(&["enumerate", "tableaux", "--lambda", "6"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "main-theorem", "--max-n", "5"]).status.code(), Some(4));
}

#[test]
fn render_formats() {
    let latex = stdout(&["render", "--lambda", "2,0", "--type", "0,2", "--format", "latex"]);
    assert!(latex.contains("\\documentclass") && latex.contains("\\end{document}"));
    let svg = stdout(&["render", "--lambda", "2,0", "--type", "0,2", "--format", "svg", "--index", "3"]);
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert_eq!(run(&["render", "--lambda", "2,0", "--type", "0,2", "--index", "15"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("macdonald-interp-out-{}.txt", std::process::id()));
    let out = run(&["compute", "F*", "--mu", "0,0", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "(1)");
    std::fs::remove_file(path).unwrap();
}
