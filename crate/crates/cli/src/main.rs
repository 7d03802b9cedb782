//! `bmturan`: compute the Boros-Moll coefficient triangle, verify the
//! inequality families on it, and emit symbolic certificates.
//!
//! Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
//! 2 = operational error (bad arguments, unreadable input, unwritable
//! output). Verdicts are always decided in exact arithmetic; decimal
//! columns in `report` output are display-only.

use bmturan::arith::{fmt_frac, parse_frac, rat_to_decimal};
use bmturan::coeffs::{row_direct_sum, Triangle, TriangleMethod};
use bmturan::inequalities::{find_checks, needed_max_m, registry, RowCheck};
use bmturan::poly::certify::{
    certificate_export_json, certify_all_targets, certify_positive, positivity_targets,
    PositivityCertificate,
};
use bmturan::poly::identities::{
    identity_names, is_identity_name, verify_identity, verify_identity_suite, IdentityOutcome,
};
use bmturan::report::{CheckReport, ReportLine};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bmturan",
    version,
    about = "Exact computation and verification of Boros-Moll coefficient inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel sweeps (default: all cores, or
    /// BMTURAN_JOBS)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the coefficient triangle and write it as CSV or JSON
    Compute {
        /// Largest row index to compute
        #[arg(long)]
        m_max: usize,
        /// Construction method recorded in the file header
        #[arg(long, default_value = "recurrence")]
        method: TriangleMethod,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run inequality checks over computed rows and stream a JSON-lines
    /// report
    Verify {
        /// Largest row index to verify
        #[arg(long, default_value_t = 300)]
        m_max: usize,
        /// Comma-separated check ids (default: all)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Output path for the report stream (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stop after the first check that reports a failure
        #[arg(long)]
        fail_fast: bool,
    },
    /// Verify the polynomial identities and positivity certificates
    /// symbolically
    Certify {
        /// Comma-separated identity or positivity-target names
        /// (default: the full suite)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Write the machine-readable certificate JSON here as well
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize a JSON-lines report stream as a table
    Report {
        /// Report file (default: stdin)
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Operational failure: maps to exit code 2.
struct OpError(String);

impl OpError {
    fn new(msg: impl Into<String>) -> Self {
        OpError(msg.into())
    }
}

type OpResult<T> = Result<T, OpError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(OpError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> OpResult<bool> {
    init_thread_pool(cli.jobs)?;
    match cli.command {
        Command::Compute {
            m_max,
            method,
            format,
            out,
        } => cmd_compute(m_max, method, format, out.as_deref()),
        Command::Verify {
            m_max,
            checks,
            out,
            fail_fast,
        } => cmd_verify(m_max, &checks, out.as_deref(), fail_fast),
        Command::Certify { checks, out } => cmd_certify(&checks, out.as_deref()),
        Command::Report { file } => cmd_report(file.as_deref()),
    }
}

fn init_thread_pool(jobs: Option<usize>) -> OpResult<()> {
    let jobs = match jobs {
        Some(n) => Some(n),
        None => match std::env::var("BMTURAN_JOBS") {
            Ok(v) => Some(
                v.parse::<usize>()
                    .map_err(|_| OpError::new(format!("BMTURAN_JOBS must be an integer, got {v:?}")))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| OpError::new(format!("cannot configure {n} worker threads: {e}")))?;
    }
    Ok(())
}

fn write_output(out: Option<&Path>, text: &str) -> OpResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| OpError::new(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---- compute ------------------------------------------------------------

fn cmd_compute(
    m_max: usize,
    method: TriangleMethod,
    format: Format,
    out: Option<&Path>,
) -> OpResult<bool> {
    let tri = Triangle::build(method, m_max);
    // cross-validate against the independent direct formula before writing
    let mut rows = (0..=m_max.min(10)).collect::<Vec<_>>();
    if m_max > 10 {
        rows.push(m_max);
    }
    for &m in &rows {
        let row = tri.row(m).map_err(|e| OpError::new(e.to_string()))?;
        if row != row_direct_sum(m).as_slice() {
            return Err(OpError::new(format!(
                "internal cross-validation failed at row {m}: {method} disagrees with the direct formula"
            )));
        }
    }
    let text = match format {
        Format::Csv => tri.to_csv(),
        Format::Json => {
            let mut s = tri.to_json();
            s.push('\n');
            s
        }
    };
    write_output(out, &text)?;
    Ok(true)
}

// ---- verify -------------------------------------------------------------

/// Rows verified together; bounds peak memory while keeping the stream
/// order deterministic (canonical check order, then ascending m).
const VERIFY_CHUNK: usize = 64;

fn cmd_verify(
    m_max: usize,
    check_ids: &[String],
    out: Option<&Path>,
    fail_fast: bool,
) -> OpResult<bool> {
    if m_max < 1 {
        return Err(OpError::new("--m-max must be at least 1 for verify"));
    }
    let checks: Vec<Box<dyn RowCheck>> = if check_ids.is_empty() {
        registry()
    } else {
        find_checks(check_ids).map_err(|e| OpError::new(e.to_string()))?
    };
    let tri = Triangle::build(TriangleMethod::Recurrence, needed_max_m(&checks, m_max));
    let mut writer: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(fs::File::create(path).map_err(|e| {
            OpError::new(format!("cannot write {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let io_err = |e: io::Error| OpError::new(format!("cannot write report stream: {e}"));

    let mut all_pass = true;
    let mut total_instances = 0usize;
    let mut total_failures = 0usize;
    let mut stopped_early = false;
    'checks: for check in &checks {
        let mut instances = 0usize;
        let mut failures = 0usize;
        // the sweep covers 1 <= m <= m_max, clipped to the check's domain
        let mut chunk_lo = check.min_m().max(1);
        while chunk_lo <= m_max {
            let chunk_hi = m_max.min(chunk_lo + VERIFY_CHUNK - 1);
            let reports: Vec<CheckReport> = (chunk_lo..=chunk_hi)
                .into_par_iter()
                .map(|m| check.run(&tri, m))
                .collect();
            for report in reports {
                instances += report.count;
                let fails = report.failures().count();
                failures += fails;
                if report.count > 0 {
                    writeln!(writer, "{}", report.jsonl()).map_err(io_err)?;
                }
                if fails > 0 {
                    all_pass = false;
                    if fail_fast {
                        summarize_check(check.as_ref(), instances, failures);
                        total_instances += instances;
                        total_failures += failures;
                        stopped_early = true;
                        break 'checks;
                    }
                }
            }
            chunk_lo = chunk_hi + 1;
        }
        summarize_check(check.as_ref(), instances, failures);
        total_instances += instances;
        total_failures += failures;
    }
    writer.flush().map_err(io_err)?;
    let verdict = if all_pass { "pass" } else { "fail" };
    let early = if stopped_early {
        " (stopped at first failure: --fail-fast)"
    } else {
        ""
    };
    eprintln!(
        "verify: m_max = {m_max}, {} checks, {total_instances} instances, {total_failures} failures, verdict {verdict}{early}",
        checks.len()
    );
    Ok(all_pass)
}

fn summarize_check(check: &dyn RowCheck, instances: usize, failures: usize) {
    let vacuous = if instances == 0 {
        format!(" (vacuous pass: domain starts at m = {})", check.min_m())
    } else {
        String::new()
    };
    eprintln!(
        "check {}: {instances} instances, {failures} failures{vacuous}",
        check.id()
    );
}

// ---- certify ------------------------------------------------------------

fn cmd_certify(check_ids: &[String], out: Option<&Path>) -> OpResult<bool> {
    let target_names: Vec<&'static str> = positivity_targets().iter().map(|t| t.0).collect();
    let mut identity_sel: Vec<String> = Vec::new();
    let mut target_sel: Vec<String> = Vec::new();
    for raw in check_ids {
        let name = raw.trim();
        if is_identity_name(name) {
            if !identity_sel.iter().any(|s| s == name) {
                identity_sel.push(name.to_string());
            }
        } else if target_names.contains(&name) {
            if !target_sel.iter().any(|s| s == name) {
                target_sel.push(name.to_string());
            }
        } else {
            return Err(OpError::new(format!(
                "unknown certify check {name:?}; identities: {}; positivity targets: {}",
                identity_names().join(", "),
                target_names.join(", ")
            )));
        }
    }

    let full_suite = check_ids.is_empty();
    let identities: Vec<IdentityOutcome> = if full_suite {
        verify_identity_suite()
    } else {
        identity_sel
            .iter()
            .map(|name| verify_identity(name).expect("name validated above"))
            .collect()
    };
    let certificates: Vec<PositivityCertificate> = if full_suite {
        certify_all_targets()
    } else {
        positivity_targets()
            .into_iter()
            .filter(|(name, _, _)| target_sel.iter().any(|s| s == name))
            .map(|(name, poly, domain)| certify_positive(name, poly, domain))
            .collect()
    };

    for outcome in &identities {
        let note = if outcome.note.is_empty() {
            String::new()
        } else {
            format!("; {}", outcome.note)
        };
        println!(
            "identity {}: {} ({} lhs terms, {} rhs terms{note})",
            outcome.name,
            if outcome.pass { "pass" } else { "fail" },
            outcome.lhs_terms,
            outcome.rhs_terms
        );
    }
    for cert in &certificates {
        println!(
            "positivity {} [{}; {}]: {}; corner {} -> {}",
            cert.name,
            cert.domain.describe(),
            cert.domain.substitution(),
            cert.verdict.as_str(),
            cert.corner_point,
            fmt_frac(&cert.corner_value)
        );
    }
    if let Some(path) = out {
        fs::write(path, certificate_export_json(&identities, &certificates))
            .map_err(|e| OpError::new(format!("cannot write {}: {e}", path.display())))?;
    }

    if let Some(bad) = identities.iter().find(|o| !o.pass) {
        eprintln!("identity {} failed: {}", bad.name, bad.note);
        return Ok(false);
    }
    if let Some(bad) = certificates.iter().find(|c| !c.passed()) {
        eprintln!("positivity target {} failed", bad.name);
        return Ok(false);
    }
    Ok(true)
}

// ---- report -------------------------------------------------------------

struct CheckAgg {
    check: String,
    m_lo: u64,
    m_hi: u64,
    count: usize,
    fails: Vec<ReportLine>,
}

fn cmd_report(file: Option<&Path>) -> OpResult<bool> {
    let text = match file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| OpError::new(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| OpError::new(format!("cannot read stdin: {e}")))?;
            s
        }
    };

    let mut aggs: Vec<CheckAgg> = Vec::new();
    let mut total = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let parsed = ReportLine::parse(line)
            .map_err(|e| OpError::new(format!("malformed report line {}: {e}", idx + 1)))?;
        total += 1;
        let agg = match aggs.iter_mut().find(|a| a.check == parsed.check) {
            Some(agg) => agg,
            None => {
                aggs.push(CheckAgg {
                    check: parsed.check.clone(),
                    m_lo: parsed.m,
                    m_hi: parsed.m,
                    count: 0,
                    fails: Vec::new(),
                });
                aggs.last_mut().unwrap()
            }
        };
        agg.m_lo = agg.m_lo.min(parsed.m);
        agg.m_hi = agg.m_hi.max(parsed.m);
        agg.count += 1;
        if parsed.is_fail() {
            agg.fails.push(parsed);
        }
    }
    if total == 0 {
        println!("no reports");
        return Ok(true);
    }

    // fail rows first, input order otherwise preserved
    let (fail_aggs, pass_aggs): (Vec<&CheckAgg>, Vec<&CheckAgg>) =
        aggs.iter().partition(|a| !a.fails.is_empty());
    println!(
        "{:<16} {:>11} {:>10} {:>9}  verdict",
        "check", "m-range", "instances", "failures"
    );
    for agg in fail_aggs.iter().chain(pass_aggs.iter()) {
        println!(
            "{:<16} {:>11} {:>10} {:>9}  {}",
            agg.check,
            format!("{}..{}", agg.m_lo, agg.m_hi),
            agg.count,
            agg.fails.len(),
            if agg.fails.is_empty() { "pass" } else { "fail" }
        );
    }
    const WITNESS_LIMIT: usize = 8;
    for agg in &fail_aggs {
        println!("witnesses for {}:", agg.check);
        for line in agg.fails.iter().take(WITNESS_LIMIT) {
            let l = line
                .l
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".to_string());
            let note = if line.note.is_empty() {
                String::new()
            } else {
                format!("  [{}]", line.note)
            };
            println!(
                "  m = {}, l = {}: lhs = {} (approx {}), rhs = {} (approx {}){}",
                line.m,
                l,
                line.lhs,
                approx(&line.lhs),
                line.rhs,
                approx(&line.rhs),
                note
            );
        }
        if agg.fails.len() > WITNESS_LIMIT {
            println!("  ... and {} more", agg.fails.len() - WITNESS_LIMIT);
        }
    }
    if !fail_aggs.is_empty() {
        println!("(approx columns are display-only decimals; verdicts are exact)");
    }
    Ok(fail_aggs.is_empty())
}

/// Display-only decimal rendering of a `num/den` wire value.
fn approx(wire: &str) -> String {
    match parse_frac(wire) {
        Ok(r) => rat_to_decimal(&r, 6),
        Err(_) => "?".to_string(),
    }
}
