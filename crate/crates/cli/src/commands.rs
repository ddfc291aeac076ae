use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};

use leja::disk::explicit_leja_point;
use leja::extrema::{self, circle_point, SearchParams};
use leja::greedy::{greedy_section_with, DiscretizedCompact};
use leja::recursion::{self, USequenceCache};
use leja::verify::{self, GridPolicy, SuiteOutcome, Verifier, VerifyConfig};
use leja::{binary_expand, Execution, LagrangeBasis};
use num_complex::Complex64;

use crate::table::{format_float, Cell, Table};
use crate::{Cli, Command, Format, ReportFormat, Which};

fn sink(output: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit(table: &Table, format: Format, output: &Option<PathBuf>) -> Result<()> {
    let mut out = sink(output)?;
    match format {
        Format::Csv => table.write_csv(&mut out),
        Format::Json => table.write_json(&mut out),
    }
    .and_then(|_| Ok(out.flush()?))
    .with_context(|| match output {
        Some(p) => format!("cannot write {}", p.display()),
        None => "cannot write to stdout".to_string(),
    })
}

/// Returns `Ok(false)` when a verification check failed.
pub fn run(cli: Cli) -> Result<bool> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match cli.command {
        Command::Gen { k, format, output } => {
            emit(&gen_table(k)?, format, &output)?;
        }
        Command::Lebesgue { k, grid, refine, which, format, output } => {
            let params = SearchParams::new(grid as usize, refine)?.with_execution(exec);
            emit(&lebesgue_table(k, &params, which)?, format, &output)?;
        }
        Command::Verify { max_k, grid, adaptive_grid, refine, suites, format, output } => {
            let suites = verify::parse_suites(&suites)?;
            let defaults = VerifyConfig::default();
            let config = VerifyConfig {
                max_k: max_k.map_or(defaults.max_k, |m| m as usize),
                exact_max_k: max_k.unwrap_or(defaults.exact_max_k),
                grid: if adaptive_grid { GridPolicy::Sweep { cap: grid as usize } } else { GridPolicy::Fixed(grid as usize) },
                refine_tolerance: refine,
                execution: exec,
                ..defaults
            };
            let mut verifier = Verifier::new(config)?;
            let outcomes = verifier.run_all(&suites);
            write_verify_report(&outcomes, format, &output)?;
            let failed = outcomes.iter().find(|o| !o.passed());
            if let Some(o) = failed {
                eprintln!("verification failed in suite {}: {}", o.suite, o.first_failure().unwrap_or("unknown"));
                return Ok(false);
            }
        }
        Command::Plotdata { k, grid, which, output } => {
            let mut out = sink(&output)?;
            plotdata(k, grid as usize, which, exec, &mut out).with_context(|| match &output {
                Some(p) => format!("cannot write {}", p.display()),
                None => "cannot write to stdout".to_string(),
            })?;
        }
        Command::Greedy { k, grid, format, output } => {
            emit(&greedy_table(k, grid as usize, exec)?, format, &output)?;
        }
        Command::Recursion { max_k, format, output } => {
            emit(&recursion_table(max_k)?, format, &output)?;
        }
    }
    Ok(true)
}

pub fn gen_table(k: u64) -> Result<Table> {
    let mut t = Table::new(&["index", "angle_numerator", "angle_log_denominator", "re", "im"]);
    for i in 0..k {
        let a = explicit_leja_point(i);
        let z = a.to_point();
        t.push(vec![i.into(), a.numerator().into(), a.log_denominator().into(), z.re.into(), z.im.into()]);
    }
    Ok(t)
}

pub fn lebesgue_table(k: u64, params: &SearchParams, which: Which) -> Result<Table> {
    let basis = LagrangeBasis::explicit(k as usize)?;
    let (lambda, lambda2) = match which {
        Which::Both => {
            let (a, b) = extrema::basis_constants(&basis, params);
            (Some(a), Some(b))
        }
        Which::Lambda => (Some(extrema::sup_on_circle(|t| basis.lebesgue_function(circle_point(t)), params)), None),
        Which::Lambda2 => {
            (None, Some(extrema::sup_on_circle(|t| basis.quadratic_lebesgue_function(circle_point(t)), params)))
        }
    };
    let e = binary_expand(k)?;
    let theorem = verify::theorem_bound(k);
    let proposition = verify::proposition_bound(k);
    let mut t = Table::new(&[
        "k",
        "p0",
        "s",
        "lambda",
        "lambda_argmax",
        "theorem_bound",
        "theorem_slack",
        "lambda2",
        "lambda2_argmax",
        "proposition_bound",
        "proposition_slack",
        "grid",
        "refine",
    ]);
    t.push(vec![
        k.into(),
        e.lowest().into(),
        e.s().into(),
        lambda.map(|r| r.value).into(),
        lambda.map(|r| r.argmax_angle).into(),
        theorem.into(),
        lambda.map(|r| theorem - r.value).into(),
        lambda2.map(|r| r.value).into(),
        lambda2.map(|r| r.argmax_angle).into(),
        proposition.into(),
        lambda2.map(|r| proposition - r.value).into(),
        params.grid_size.into(),
        params.refine_tolerance.into(),
    ]);
    Ok(t)
}

pub fn plotdata(k: u64, grid: usize, which: Which, exec: Execution, out: &mut dyn Write) -> Result<()> {
    let basis = LagrangeBasis::explicit(k as usize)?;
    let values = leja::exec::map_range(grid, exec, |i| {
        let theta = std::f64::consts::TAU * i as f64 / grid as f64;
        (theta, basis.lebesgue_values(circle_point(theta)))
    });
    let mut w = csv::Writer::from_writer(out);
    match which {
        Which::Lambda => w.write_record(["theta", "lambda"])?,
        Which::Lambda2 => w.write_record(["theta", "lambda2"])?,
        Which::Both => w.write_record(["theta", "lambda", "lambda2"])?,
    }
    for (theta, v) in values {
        let theta = format_float(theta);
        match which {
            Which::Lambda => w.write_record([theta, format_float(v.lambda)])?,
            Which::Lambda2 => w.write_record([theta, format_float(v.lambda2)])?,
            Which::Both => w.write_record([theta, format_float(v.lambda), format_float(v.lambda2)])?,
        }
    }
    w.flush()?;
    Ok(())
}

pub fn greedy_table(k: u64, grid: usize, exec: Execution) -> Result<Table> {
    let candidates = DiscretizedCompact::circle(grid)?;
    let section = greedy_section_with(k as usize, &candidates, Complex64::new(1.0, 0.0), exec)?;
    let pts = section.points();
    let diagnostic = if pts.len() >= 2 { leja::greedy::transfinite_diameter_diagnostic(&section)? } else { vec![] };
    let mut t = Table::new(&["index", "re", "im", "theta", "distance_product_mean"]);
    for (i, z) in pts.iter().enumerate() {
        let mean = if i == 0 { None } else { Some(diagnostic[i - 1].1) };
        t.push(vec![i.into(), z.re.into(), z.im.into(), z.arg().rem_euclid(std::f64::consts::TAU).into(), mean.into()]);
    }
    Ok(t)
}

pub fn recursion_table(max_k: u64) -> Result<Table> {
    let mut cache = USequenceCache::new();
    let zeros: std::collections::HashSet<u64> = recursion::equality_set(max_k).into_iter().collect();
    let mut t = Table::new(&["k", "p0", "s", "u", "u_float", "delta", "delta_float", "delta_is_zero"]);
    for k in 1..=max_k {
        let e = binary_expand(k)?;
        let u = cache.u(k)?;
        let d = cache.delta(k)?;
        debug_assert_eq!(d.is_zero(), zeros.contains(&k));
        t.push(vec![
            k.into(),
            e.lowest().into(),
            e.s().into(),
            Cell::Text(u.to_string()),
            u.to_f64().into(),
            Cell::Text(d.to_string()),
            d.to_f64().into(),
            d.is_zero().into(),
        ]);
    }
    Ok(t)
}

fn write_verify_report(outcomes: &[SuiteOutcome], format: ReportFormat, output: &Option<PathBuf>) -> Result<()> {
    let mut out = sink(output)?;
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, outcomes)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut t = Table::new(&["suite", "family", "exact", "checks", "failures", "worst_slack", "worst_k", "status"]);
            for o in outcomes {
                for f in &o.families {
                    t.push(vec![
                        Cell::Text(o.suite.to_string()),
                        Cell::Text(f.name.to_string()),
                        o.exact.into(),
                        f.checks.into(),
                        f.failures.into(),
                        f.worst_slack.into(),
                        f.worst_k.into(),
                        Cell::Text(if f.passed() { "pass" } else { "fail" }.into()),
                    ]);
                }
            }
            t.write_csv(&mut out)?;
        }
        ReportFormat::Text => {
            for o in outcomes {
                let status = if o.passed() { "PASS" } else { "FAIL" };
                let mode = if o.exact { "exact" } else { "numeric" };
                write!(out, "{status} {:<10} {mode:<8} checks={} failures={}", o.suite.name(), o.checks(), o.failures())?;
                match o.worst() {
                    Some((family, k, slack)) => writeln!(out, " worst slack {slack:.3e} at k={k} [{family}]")?,
                    None => writeln!(out)?,
                }
                for f in &o.families {
                    let worst = match (f.worst_slack, f.worst_k) {
                        (Some(s), Some(k)) => format!(" worst slack {s:.3e} at k={k}"),
                        _ => String::new(),
                    };
                    writeln!(out, "    {:<4} {} checks={}{worst}", if f.passed() { "ok" } else { "FAIL" }, f.name, f.checks)?;
                }
            }
            let passed = outcomes.iter().filter(|o| o.passed()).count();
            writeln!(out, "{passed}/{} suites passed", outcomes.len())?;
        }
    }
    out.flush()?;
    Ok(())
}
