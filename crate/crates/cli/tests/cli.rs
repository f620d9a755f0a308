mod common;
#[path = "../../diagrams/tests/support/mod.rs"]
mod support;

use std::io::Write;
use std::process::{Command, Stdio};

use common::*;
use serde_json::Value;
use tlsl2_core::scalars::{specialize, RatFunc};
use tlsl2_core::{Field, GenericField};

const G: GenericField = GenericField;

#[test]
fn golden_outputs() {
    let failures: Vec<String> = GOLDEN
        .iter()
        .filter_map(|(name, args, code)| check_golden(name, args, *code).err())
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn usage_errors_exit_one() {
    for (args, fragment) in USAGE_ERRORS {
        check_usage_error(args, fragment).unwrap();
    }
}

fn oracle(file: &str) -> tlsl2_core::scalars::LaurentPoly {
    let w = support::word(&read_golden(file));
    support::to_laurent(&support::state_sum_bracket(&w))
}

#[test]
fn bracket_goldens_match_state_sum() {
    assert_eq!(read_golden("bracket_circle.txt"), "-a^2 - a^-2\n");
    assert_eq!(read_golden("bracket_empty.txt"), "1\n");
    for knot in ["circle", "empty", "trefoil", "hopf", "figure_eight"] {
        let expected = oracle(&format!("{knot}.word"));
        assert_eq!(
            read_golden(&format!("bracket_{knot}.txt")),
            format!("{expected}\n"),
            "{knot}"
        );
    }
    let at_root = specialize(&RatFunc::from_laurent(oracle("figure_eight.word")), 5).unwrap();
    assert_eq!(
        read_golden("bracket_figure_eight_root5.txt"),
        format!("{at_root}\n")
    );
}

fn table(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

#[test]
fn jones_wenzl_goldens() {
    assert_eq!(table(&read_golden("jw_1.txt")), vec![vec!["[2, 1]", "1"]]);
    let rows = table(&read_golden("jw_2.txt"));
    assert_eq!(rows.len(), 2);
    let coeff = |m: &str| {
        let row = rows.iter().find(|r| r[0] == m).unwrap();
        G.parse(&row[1]).unwrap()
    };
    assert_eq!(coeff("[3, 4, 1, 2]"), G.one());
    assert_eq!(coeff("[2, 1, 4, 3]"), G.quantum_int(2).inv().unwrap());
    assert_eq!(table(&read_golden("jw_3.txt")).len(), 5);
}

#[test]
fn homdim_goldens() {
    let row = |name: &str| table(&read_golden(name)).pop().unwrap();
    assert_eq!(row("homdim_11_2.txt")[3..], ["1", "1", "1", "iso"]);
    assert_eq!(row("homdim_1_2.txt")[3..], ["0", "0", "0", "iso"]);
    let rows = table(&read_golden("verify_generic_small.txt"));
    assert_eq!(rows.len(), 148);
    assert!(rows[1..].iter().all(|r| r[6] == "iso"));
}

#[test]
fn text_and_json_agree() {
    let json = |name: &str| -> Value { serde_json::from_str(&read_golden(name)).unwrap() };
    assert_eq!(
        json("bracket_trefoil.json")["bracket"].as_str().unwrap(),
        read_golden("bracket_trefoil.txt").trim_end()
    );

    let terms = json("jw_2.json")["terms"].as_array().unwrap().clone();
    let rows = table(&read_golden("jw_2.txt"));
    assert_eq!(terms.len(), rows.len());
    for (t, r) in terms.iter().zip(&rows) {
        let m: Value = serde_json::from_str(&r[0]).unwrap();
        assert_eq!(t["matching"], m);
        assert_eq!(t["coeff"].as_str().unwrap(), r[1]);
    }

    let reports = json("verify_roots.json");
    let rows = table(&read_golden("verify_roots.txt"));
    let header = &rows[0];
    assert_eq!(reports.as_array().unwrap().len(), rows.len() - 1);
    for (rep, row) in reports.as_array().unwrap().iter().zip(&rows[1..]) {
        for (key, cell) in header.iter().zip(row) {
            let v = &rep[key.as_str()];
            let text = match v {
                Value::String(s) => s.clone(),
                Value::Array(a) => {
                    let c: Vec<String> = a.iter().map(ToString::to_string).collect();
                    format!("({})", c.join(","))
                }
                other => other.to_string(),
            };
            assert_eq!(&text, cell, "{key}");
        }
    }

    let gram = json("gram_11_11.json");
    let rows = table(&read_golden("gram_11_11.txt"));
    for (i, row) in gram["gram"].as_array().unwrap().iter().enumerate() {
        let row: Vec<&str> = row
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_str().unwrap())
            .collect();
        assert_eq!(row, rows[i]);
    }
    assert_eq!(rows.last().unwrap()[1], gram["rank"].to_string());
}

#[test]
fn out_flag_and_stdin() {
    let path = std::env::temp_dir().join(format!("tlsl2-out-{}.txt", std::process::id()));
    let out = run(&["jw", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        read_golden("jw_2.txt")
    );
    std::fs::remove_file(&path).unwrap();

    let mut child = Command::new(env!("CARGO_BIN_EXE_tlsl2"))
        .args(["bracket", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(read_golden("trefoil.word").as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        read_golden("bracket_trefoil.txt")
    );
}

#[test]
fn verification_failure_exits_two() {
    let out = run(&["gram", "--check", "gram_tampered.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("mismatch in gram"));
}
