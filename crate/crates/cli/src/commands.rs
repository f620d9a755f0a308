use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use tlsl2_core::{with_field, Error, Mode};
use tlsl2_diagrams::tl_category::TlCategory;
use tlsl2_diagrams::turaev::ObjectSeq;
use tlsl2_diagrams::GeneratorWord;
use tlsl2_functor::{verify_batch, verify_equivalence, FunctorReport, Verdict};

use crate::{Format, Options, Outcome};

const REPORT_HEADER: &str =
    "source\ttarget\tmode\tdim_diagram_side\tdim_rep_side\tmatrix_rank\tverdict\n";

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn ok(output: String) -> Outcome {
    Outcome { output, ok: true }
}

pub fn bracket(opts: &Options, path: &Path) -> Result<Outcome> {
    let text = read_input(path)?;
    let word = GeneratorWord::parse(&text).with_context(|| path.display().to_string())?;
    let value = with_field!(opts.mode, f => word.bracket(&f).map(|v| v.to_string()))?;
    Ok(ok(match opts.format {
        Format::Text => format!("{value}\n"),
        Format::Json => pretty(&json!({
            "mode": opts.mode,
            "crossings": word.crossings(),
            "bracket": value,
        })),
    }))
}

pub fn jw(opts: &Options, k: usize) -> Result<Outcome> {
    let terms: Vec<(Vec<usize>, String)> = with_field!(opts.mode, f => {
        TlCategory::new(f).jones_wenzl(k).map(|p| {
            p.terms().map(|(d, c)| (d.one_based(), c.to_string())).collect()
        })
    })?;
    Ok(ok(match opts.format {
        Format::Text => {
            let mut out = String::new();
            for (m, c) in &terms {
                let m: Vec<String> = m.iter().map(ToString::to_string).collect();
                writeln!(out, "[{}]\t{c}", m.join(", ")).unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = terms
                .iter()
                .map(|(m, c)| json!({ "matching": m, "coeff": c }))
                .collect();
            pretty(&json!({ "k": k, "mode": opts.mode, "terms": rows }))
        }
    }))
}

fn report_row(r: &FunctorReport) -> String {
    let verdict = match r.verdict {
        Verdict::Iso => "iso",
        Verdict::NotIso => "not-iso",
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{verdict}\n",
        r.source, r.target, r.mode, r.dim_diagram_side, r.dim_rep_side, r.matrix_rank
    )
}

fn all_iso(reports: &[FunctorReport]) -> bool {
    reports.iter().all(|r| r.verdict == Verdict::Iso)
}

pub fn homdim(opts: &Options, s: &ObjectSeq, t: &ObjectSeq) -> Result<Outcome> {
    let report = verify_equivalence(s, t, opts.mode)?;
    let output = match opts.format {
        Format::Text => format!("{REPORT_HEADER}{}", report_row(&report)),
        Format::Json => pretty(&serde_json::to_value(&report)?),
    };
    Ok(Outcome {
        output,
        ok: report.verdict == Verdict::Iso,
    })
}

/// Parses `s ; t ; mode` lines; the mode field falls back to `default`.
/// Blank lines and `#` comments are skipped.
pub fn parse_batch(text: &str, default: Mode) -> Result<Vec<(ObjectSeq, ObjectSeq, Mode)>> {
    let mut items = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let item = parse_batch_line(line, default).with_context(|| format!("line {}", no + 1))?;
        items.push(item);
    }
    Ok(items)
}

fn parse_batch_line(line: &str, default: Mode) -> Result<(ObjectSeq, ObjectSeq, Mode)> {
    let fields: Vec<&str> = line.split(';').map(str::trim).collect();
    let mode = match fields.len() {
        2 => default,
        3 => fields[2].parse()?,
        _ => bail!("expected 's ; t ; mode', got '{line}'"),
    };
    let s = parse_object(fields[0])?;
    let t = parse_object(fields[1])?;
    s.validate(mode)?;
    t.validate(mode)?;
    Ok((s, t, mode))
}

/// `ObjectSeq` parsing with errors phrased for a single field.
pub fn parse_object(text: &str) -> Result<ObjectSeq> {
    text.parse().map_err(|e| match e {
        Error::Parse { msg, .. } => anyhow!(msg),
        e => e.into(),
    })
}

pub fn verify(opts: &Options, path: &Path) -> Result<Outcome> {
    let text = read_input(path)?;
    let items = parse_batch(&text, opts.mode).with_context(|| path.display().to_string())?;
    let reports = verify_batch(&items)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let output = match opts.format {
        Format::Text => {
            let mut out = REPORT_HEADER.to_string();
            reports.iter().for_each(|r| out.push_str(&report_row(r)));
            out
        }
        Format::Json => pretty(&serde_json::to_value(&reports)?),
    };
    Ok(Outcome {
        output,
        ok: all_iso(&reports),
    })
}

fn gram_report(s: &ObjectSeq, t: &ObjectSeq, mode: Mode) -> Result<Value> {
    s.validate(mode)?;
    t.validate(mode)?;
    Ok(with_field!(mode, f => TlCategory::new(f).gram_report(s, t))?)
}

pub fn gram(opts: &Options, s: &ObjectSeq, t: &ObjectSeq) -> Result<Outcome> {
    let report = gram_report(s, t, opts.mode)?;
    Ok(ok(match opts.format {
        Format::Json => pretty(&report),
        Format::Text => {
            let mut out = String::new();
            for row in report["gram"].as_array().unwrap() {
                let row: Vec<&str> = row
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_str().unwrap())
                    .collect();
                writeln!(out, "{}", row.join("\t")).unwrap();
            }
            writeln!(out, "rank\t{}", report["rank"]).unwrap();
            out
        }
    }))
}

/// Recomputes a saved Gram report and compares it field by field.
pub fn gram_check(opts: &Options, path: &Path) -> Result<Outcome> {
    let saved: Value = serde_json::from_str(&read_input(path)?)
        .with_context(|| format!("{} is not valid JSON", path.display()))?;
    let field = |k: &str| {
        saved
            .get(k)
            .ok_or_else(|| anyhow!("report has no '{k}' field"))
    };
    let s: ObjectSeq = serde_json::from_value(field("source")?.clone())?;
    let t: ObjectSeq = serde_json::from_value(field("target")?.clone())?;
    let mode: Mode = serde_json::from_value(field("mode")?.clone())?;
    let fresh = gram_report(&s, &t, mode)?;
    let mut problems = Vec::new();
    for key in ["basis", "dual_basis", "gram", "rank"] {
        if field(key)? != &fresh[key] {
            problems.push(key);
        }
    }
    let status = if problems.is_empty() {
        "ok".to_string()
    } else {
        format!("mismatch in {}", problems.join(", "))
    };
    let output = match opts.format {
        Format::Text => format!("{s} -> {t} {mode}: {status}\n"),
        Format::Json => pretty(&json!({
            "source": s,
            "target": t,
            "mode": mode,
            "consistent": problems.is_empty(),
            "mismatches": problems,
        })),
    };
    Ok(Outcome {
        output,
        ok: problems.is_empty(),
    })
}
