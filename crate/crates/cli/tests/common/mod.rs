#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs the binary from inside the golden directory.
pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlsl2"))
        .current_dir(golden_dir())
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// `(golden file, arguments, exit code)`.
pub const GOLDEN: &[(&str, &[&str], i32)] = &[
    ("bracket_circle.txt", &["bracket", "circle.word"], 0),
    ("bracket_empty.txt", &["bracket", "empty.word"], 0),
    ("bracket_trefoil.txt", &["bracket", "trefoil.word"], 0),
    (
        "bracket_trefoil.json",
        &["bracket", "trefoil.word", "--format", "json"],
        0,
    ),
    ("bracket_hopf.txt", &["bracket", "hopf.word"], 0),
    (
        "bracket_figure_eight.txt",
        &["bracket", "figure_eight.word"],
        0,
    ),
    (
        "bracket_figure_eight_root5.txt",
        &["bracket", "figure_eight.word", "--mode", "root:5"],
        0,
    ),
    ("jw_1.txt", &["jw", "1"], 0),
    ("jw_2.txt", &["jw", "2"], 0),
    ("jw_2.json", &["jw", "2", "--format", "json"], 0),
    ("jw_3.txt", &["jw", "3"], 0),
    ("jw_3_root4.txt", &["--mode", "root:4", "jw", "3"], 0),
    ("homdim_11_2.txt", &["homdim", "1,1", "2"], 0),
    ("homdim_1_2.txt", &["homdim", "1", "2"], 0),
    ("homdim_21_111.txt", &["homdim", "2,1", "1,1,1"], 0),
    (
        "homdim_11_11_root3.json",
        &[
            "homdim", "1,1", "1,1", "--mode", "root:3", "--format", "json",
        ],
        0,
    ),
    (
        "verify_generic_small.txt",
        &["verify", "generic_small.batch"],
        0,
    ),
    ("verify_roots.txt", &["verify", "roots.batch"], 0),
    (
        "verify_roots.json",
        &["verify", "roots.batch", "--format", "json"],
        0,
    ),
    ("gram_11_11.txt", &["gram", "1,1", "1,1"], 0),
    (
        "gram_11_11.json",
        &["gram", "1,1", "1,1", "--format", "json"],
        0,
    ),
    (
        "gram_check_ok.txt",
        &["gram", "--check", "gram_11_11.json"],
        0,
    ),
    (
        "gram_check_tampered.txt",
        &["gram", "--check", "gram_tampered.json"],
        2,
    ),
];

/// `(arguments, fragment expected on stderr)`; all must exit with code 1.
pub const USAGE_ERRORS: &[(&[&str], &str)] = &[
    (&["bracket", "open.word"], "not closed"),
    (&["bracket", "bad_arity.word"], "line 2"),
    (&["bracket", "missing.word"], "cannot read"),
    (&["jw", "3", "--mode", "root:3"], "Delta_2 vanishes"),
    (&["homdim", "2", "2", "--mode", "root:3"], "color 2"),
    (&["homdim", "1,x", "2"], "bad color"),
    (&["verify", "malformed.batch"], "line 3"),
    (&["verify", "bad_color.batch"], "line 1"),
    (&["jw", "1", "--mode", "root:2"], "r >= 3"),
    (&["frobnicate"], "unrecognized"),
    (&["gram", "--check", "circle.word"], "not valid JSON"),
];

/// Compares one golden case; with `TLSL2_BLESS` set the golden file is rewritten instead.
pub fn check_golden(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    if out.status.code() != Some(code) {
        return Err(format!(
            "{name}: exit {:?}, expected {code}; stderr: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    if std::env::var_os("TLSL2_BLESS").is_some() {
        std::fs::write(golden_dir().join(name), &stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    if stdout != read_golden(name) {
        return Err(format!(
            "{name}: output differs from the golden file:\n{stdout}"
        ));
    }
    Ok(())
}

pub fn check_usage_error(args: &[&str], fragment: &str) -> Result<(), String> {
    let out = run(args);
    let stderr = String::from_utf8_lossy(&out.stderr);
    if out.status.code() != Some(1) || !stderr.contains(fragment) {
        return Err(format!(
            "{args:?}: exit {:?}, stderr {stderr:?}, expected exit 1 mentioning {fragment:?}",
            out.status.code()
        ));
    }
    Ok(())
}
