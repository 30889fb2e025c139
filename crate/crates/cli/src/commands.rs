//! Subcommand bodies. Each returns its standard-output text so that tests can
//! drive them without spawning a process.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use superimmanant::superimm::{berezinian, berezinian_series, super_immanant_lambda, MultiIndex, SuperMatrix};
use superimmanant::supersym::{s_hat, schur_super};
use superimmanant::tableaux::Partition;
use superimmanant::verify::{run_check, CheckOptions, CheckReport, CHECK_NAMES};

use crate::error::CliError;
use crate::expr::Context;
use crate::serial::{to_terms, TermJson};

/// `2,1` → [2, 1]; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u32>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| CliError::Input(format!("{p:?} is not a non-negative integer"))))
        .collect()
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Ok(Partition::from_parts(&parse_list(s)?)?)
}

pub fn parse_index(s: &str, m: usize, n: usize) -> Result<MultiIndex, CliError> {
    let v = parse_list(s)?.into_iter().map(|k| k as usize).collect();
    Ok(MultiIndex::new(v, m, n)?)
}

#[derive(Serialize)]
struct PolyOut {
    #[serde(flatten)]
    extra: serde_json::Map<String, serde_json::Value>,
    value: String,
    terms: Vec<TermJson>,
}

fn poly_json(p: &superimmanant::superring::SuperPoly, ctx: &Context, extra: serde_json::Value) -> String {
    let extra = match extra {
        serde_json::Value::Object(o) => o,
        _ => serde_json::Map::new(),
    };
    let out = PolyOut { extra, value: ctx.display(p), terms: to_terms(p, ctx) };
    serde_json::to_string_pretty(&out).expect("serializable")
}

/// Imm_{χ^λ}(X^I_J).
pub fn imm(lambda: &str, rows: &str, cols: &str, x: &SuperMatrix, ctx: &Context, json: bool) -> Result<String, CliError> {
    let (m, n) = x.dims();
    let l = parse_partition(lambda)?;
    let (i, j) = (parse_index(rows, m, n)?, parse_index(cols, m, n)?);
    if i.len() != j.len() {
        return Err(CliError::Input(format!("|I| = {} but |J| = {}", i.len(), j.len())));
    }
    let v = super_immanant_lambda(&l, x, &i, &j)?;
    Ok(if json {
        poly_json(&v, ctx, serde_json::json!({"lambda": l.parts(), "rows": i.entries(), "cols": j.entries()}))
    } else {
        format!("Imm_{l}(X^{:?}_{:?}) = {}\n", i.entries(), j.entries(), ctx.display(&v))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SchurForm {
    /// The polynomial in x₁…x_m, y₁…y_n.
    Expanded,
    /// det(S_{λ_i − i + j}) without expanding.
    JacobiTrudi,
}

/// 𝕊_λ(x₁…x_m; y₁…y_n).
pub fn schur(lambda: &str, m: usize, n: usize, form: SchurForm, json: bool) -> Result<String, CliError> {
    let l = parse_partition(lambda)?;
    let ctx = Context::symmetric(m, n);
    match form {
        SchurForm::Expanded => {
            let v = schur_super(&l, m, n)?;
            Ok(if json {
                poly_json(&v, &ctx, serde_json::json!({"lambda": l.parts(), "m": m, "n": n}))
            } else {
                format!("S_{l}({m}|{n}) = {}\n", ctx.display(&v))
            })
        }
        SchurForm::JacobiTrudi => {
            let len = l.len();
            let idx = |i: usize, j: usize| l.part(i) as i64 - i as i64 + j as i64;
            if json {
                let grid: Vec<Vec<i64>> = (1..=len).map(|i| (1..=len).map(|j| idx(i, j)).collect()).collect();
                let mut entries = serde_json::Map::new();
                for k in grid.iter().flatten().copied().filter(|&k| k >= 0).collect::<std::collections::BTreeSet<_>>() {
                    entries.insert(format!("S_{k}"), serde_json::json!(ctx.display(&s_hat(k, m, n)?)));
                }
                let doc = serde_json::json!({"lambda": l.parts(), "m": m, "n": n, "indices": grid, "entries": entries});
                return Ok(serde_json::to_string_pretty(&doc).expect("serializable"));
            }
            let cell = |k: i64| if k < 0 { "0".to_string() } else { format!("S_{k}") };
            let cells: Vec<Vec<String>> = (1..=len).map(|i| (1..=len).map(|j| cell(idx(i, j))).collect()).collect();
            let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut s = format!("S_{l}({m}|{n}) = det\n");
            for row in &cells {
                let padded: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
                let _ = writeln!(s, "  | {} |", padded.join("  "));
            }
            if len == 0 {
                s.push_str("  (empty determinant = 1)\n");
            }
            let mut ks: Vec<i64> = cells.iter().flatten().filter_map(|c| c.strip_prefix("S_")?.parse().ok()).collect();
            ks.sort_unstable();
            ks.dedup();
            s.push_str("where S_k is the t^k coefficient of Π(1 + y_j t) / Π(1 − x_i t):\n");
            for k in ks {
                let _ = writeln!(s, "  S_{k} = {}", ctx.display(&s_hat(k, m, n)?));
            }
            Ok(s)
        }
    }
}

/// Ber(I − uX̂) to order K, and Ber X when its lower block is invertible.
pub fn berezinian_cmd(x: &SuperMatrix, ctx: &Context, order: usize, json: bool) -> Result<String, CliError> {
    let series = berezinian_series(x, order)?;
    let ber = berezinian(x).ok();
    if json {
        let coeffs: Vec<serde_json::Value> = series
            .coeffs()
            .iter()
            .take(order + 1)
            .map(|c| serde_json::json!({"value": ctx.display(c), "terms": to_terms(c, ctx)}))
            .collect();
        let doc = serde_json::json!({
            "order": order,
            "series": coeffs,
            "berezinian": ber.as_ref().map(|b| serde_json::json!({"value": ctx.display(b), "terms": to_terms(b, ctx)})),
        });
        return Ok(serde_json::to_string_pretty(&doc).expect("serializable"));
    }
    let mut s = format!("Ber(I - u X^) to order {order}:\n");
    for k in 0..=order {
        let c = series.coeffs().get(k).map(|c| ctx.display(c)).unwrap_or_else(|| "0".into());
        let _ = writeln!(s, "  u^{k}: {c}");
    }
    match ber {
        Some(b) => {
            let _ = writeln!(s, "Ber X = {}", ctx.display(&b));
        }
        None => s.push_str("Ber X: lower-right block is not invertible\n"),
    }
    Ok(s)
}

/// A CheckReport as written to the report document.
#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub identity: String,
    pub parameters: serde_json::Map<String, serde_json::Value>,
    pub status: &'static str,
    pub cases: usize,
    pub skipped: Vec<String>,
    pub witness: Option<WitnessJson>,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
    pub difference: Option<String>,
}

impl ReportJson {
    pub fn new(r: &CheckReport, wall_time_ms: f64) -> Self {
        ReportJson {
            identity: r.name.clone(),
            parameters: r.params.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect(),
            status: if r.passed { "pass" } else { "fail" },
            cases: r.cases,
            skipped: r.skipped.clone(),
            witness: r.witness.as_ref().map(|w| WitnessJson {
                case: w.case.clone(),
                lhs: w.lhs.clone(),
                rhs: w.rhs.clone(),
                difference: w.difference.clone(),
            }),
            wall_time_ms,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckDoc {
    pub check: String,
    pub m: usize,
    pub n: usize,
    pub max_r: usize,
    pub order: usize,
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
    pub wall_time_ms: f64,
    pub reports: Vec<ReportJson>,
}

/// Runs the named check (or every check), timing each one.
pub fn check(name: &str, opts: &CheckOptions) -> Result<CheckDoc, CliError> {
    let names: Vec<&str> = if name == "all" { CHECK_NAMES.to_vec() } else { vec![name] };
    let start = Instant::now();
    let mut reports = Vec::new();
    for k in names {
        let t = Instant::now();
        let reps = run_check(k, opts)?;
        let ms = t.elapsed().as_secs_f64() * 1e3 / reps.len().max(1) as f64;
        reports.extend(reps.iter().map(|r| ReportJson::new(r, ms)));
    }
    Ok(CheckDoc {
        check: name.to_string(),
        m: opts.m,
        n: opts.n,
        max_r: opts.max_r,
        order: opts.order,
        seed: opts.seed,
        trials: opts.trials,
        passed: reports.iter().all(|r| r.status == "pass"),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        reports,
    })
}

/// The human-readable table printed for `check`.
pub fn check_table(doc: &CheckDoc) -> String {
    let params = |r: &ReportJson| {
        r.parameters.iter().map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or_default())).collect::<Vec<_>>().join(" ")
    };
    let rows: Vec<[String; 5]> = doc
        .reports
        .iter()
        .map(|r| [r.identity.clone(), params(r), r.cases.to_string(), r.status.to_uppercase(), format!("{:.1}", r.wall_time_ms)])
        .collect();
    let head = ["check", "parameters", "cases", "status", "ms"];
    let mut w = head.map(|h| h.chars().count());
    for row in &rows {
        for (k, c) in row.iter().enumerate() {
            w[k] = w[k].max(c.chars().count());
        }
    }
    let line = |cells: [&str; 5]| {
        let mut s = String::new();
        for (k, c) in cells.iter().enumerate() {
            let pad = w[k] - c.chars().count();
            if k == 2 || k == 4 {
                s.push_str(&" ".repeat(pad));
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(pad));
            }
            s.push_str(if k < 4 { "  " } else { "\n" });
        }
        s
    };
    let mut out = line(head);
    out.push_str(&line(w.map(|k| "-".repeat(k)).each_ref().map(String::as_str)));
    for row in &rows {
        out.push_str(&line(row.each_ref().map(String::as_str)));
    }
    for r in &doc.reports {
        for s in &r.skipped {
            let _ = writeln!(out, "skipped in {}: {s}", r.identity);
        }
        if let Some(wt) = &r.witness {
            let _ = writeln!(out, "witness for {} at {}:\n  lhs = {}\n  rhs = {}", r.identity, wt.case, wt.lhs, wt.rhs);
            if let Some(d) = &wt.difference {
                let _ = writeln!(out, "  first difference: {d}");
            }
        }
    }
    let failed = doc.reports.iter().filter(|r| r.status != "pass").count();
    let _ = writeln!(
        out,
        "{} of {} checks passed in {:.1} ms",
        doc.reports.len() - failed,
        doc.reports.len(),
        doc.wall_time_ms
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list("2, 1").unwrap(), vec![2, 1]);
        assert_eq!(parse_list("").unwrap(), Vec::<u32>::new());
        assert!(parse_list("2,-1").is_err());
        assert!(parse_partition("1,2").is_err());
        assert!(parse_index("3", 1, 1).is_err());
    }

    #[test]
    fn imm_generic() {
        let x = SuperMatrix::generator(1, 1);
        let ctx = Context::default();
        assert_eq!(imm("1", "1", "1", &x, &ctx, false).unwrap(), "Imm_(1)(X^[1]_[1]) = x11\n");
        // the odd diagonal entry carries the prefactor −1
        assert_eq!(imm("1", "2", "2", &x, &ctx, false).unwrap(), "Imm_(1)(X^[2]_[2]) = -x22\n");
        assert!(imm("2", "1", "1", &x, &ctx, false).is_err());
        assert!(imm("1", "1,2", "1", &x, &ctx, false).is_err());
    }

    #[test]
    fn schur_forms() {
        assert_eq!(schur("1,1", 1, 1, SchurForm::Expanded, false).unwrap(), "S_(1,1)(1|1) = x_1*y_1 + y_1^2\n");
        let jt = schur("2,1", 1, 1, SchurForm::JacobiTrudi, false).unwrap();
        assert!(jt.contains("| S_2  S_3 |") && jt.contains("| S_0  S_1 |"), "{jt}");
        assert!(jt.contains("S_0 = 1"));
        let j: serde_json::Value = serde_json::from_str(&schur("2,1", 1, 1, SchurForm::JacobiTrudi, true).unwrap()).unwrap();
        assert_eq!(j["indices"], serde_json::json!([[2, 3], [0, 1]]));
    }

    #[test]
    fn check_doc_and_table() {
        let doc = check("vanishing", &CheckOptions { max_r: 2, ..Default::default() }).unwrap();
        assert!(doc.passed);
        assert_eq!(doc.reports.len(), 1);
        let t = check_table(&doc);
        assert!(t.contains("vanishing") && t.contains("PASS") && t.contains("1 of 1 checks passed"), "{t}");
        assert!(check("nonsense", &CheckOptions::default()).is_err());
    }
}
