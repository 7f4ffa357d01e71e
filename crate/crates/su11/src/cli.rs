//! Command-line front end: compute tables, run verification suites, emit
//! reports.
//!
//! Two subcommands:
//!
//! * `table {u|t|f|d}` — write one of the representation-theoretic objects
//!   (squeeze-block U_mn(g), t-matrix block, f-symbol table, D-operator
//!   diagonal) as CSV or JSON with a metadata header.
//! * `verify <suite>` — run a verification suite (`addition`, `sandwich`,
//!   `ortho`, `genfun`, `legendre`, `unity`, `algebra`, `weyl`, `all`) over
//!   its default or configured grid, emitting one JSON report line per check
//!   (or a summary in csv/text format).
//!
//! Exit codes: 0 all checks passed, 1 some check failed, 2 configuration or
//! usage error. Identical configuration and seed produce byte-identical
//! output. Flags fall back to `SU11_*` environment variables
//! (`SU11_DIM`, `SU11_TOL`, `SU11_SEED`, `SU11_COUNT`, `SU11_FORMAT`,
//! `SU11_OUT`).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::grp::CartanAngles;
use crate::irrep::{classify, d_operator, f_values, Epsilon, IrrepLabel};
use crate::repmat::t_block;
use crate::verify::{run_suite, Suite, SuiteConfig, VerificationReport};
use crate::weyl::{u_of_g, u_squeeze_quadrature, UnitaryBlock};
use crate::{Error, FockSpace, Result};

#[derive(Parser)]
#[command(
    name = "su11",
    about = "SU(1,1) on the Heisenberg algebra: representation tables and identity verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a representation-theoretic table.
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
    /// Run a verification suite and emit reports.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Output format: json, csv or text.
    #[arg(long)]
    format: Option<String>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TableKind {
    /// Squeeze/Weyl block U_mn(g) for g = k(phi) h(alpha) k(psi).
    U {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long, default_value_t = 0.0)]
        psi: f64,
        #[arg(long)]
        dim: Option<usize>,
        /// Build by Gauss-Hermite quadrature instead of the closed form
        /// (boost part only).
        #[arg(long)]
        quadrature: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Representation matrix block t_kn over a k-window.
    T {
        /// Complex tau as RE+IMi, e.g. -0.5+1i.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        /// Epsilon: 0 or 1/2.
        #[arg(long)]
        eps: String,
        /// Window as LO:HI or LO..HI.
        #[arg(long, allow_hyphen_values = true)]
        krange: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long, default_value_t = 0.0)]
        psi: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symbol values f_k(zeta) for zeta = 0..=zeta-max.
    F {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 8)]
        zeta_max: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Basis-operator diagonal (D_k)_{t+2k+2eps, t}.
    D {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        dim: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
#[command(
    after_help = "Default grids per suite are documented in docs/verification-grids.md; \
identical configuration and seed produce byte-identical reports."
)]
struct VerifyArgs {
    /// Suite: addition, sandwich, ortho, genfun, legendre, unity, algebra,
    /// weyl, all.
    suite: String,
    /// Interior (comparison) dimension; operators are built padded.
    #[arg(long)]
    dim: Option<usize>,
    /// Tolerance override applied to every check in the suite.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for the random-element grids.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random elements per sampled grid.
    #[arg(long)]
    count: Option<usize>,
    /// Restrict tau values where the suite supports it (list or LO..HI).
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    /// Restrict alpha values where the suite supports it (comma list).
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Group-element sampling mode; only "random" (seeded) is defined.
    #[arg(long)]
    g: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

/// Parse a complex number written as `RE`, `RE+IMi` or `RE-IMi`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t = text.trim();
    let bad = || Error::Config(format!("cannot parse complex number '{text}'"));
    if let Some(body) = t.strip_suffix('i') {
        // split at the last +/- that is not an exponent sign or leading sign
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
                split = Some(i);
                break;
            }
        }
        let i = split.ok_or_else(bad)?;
        let re: f64 = body[..i].parse().map_err(|_| bad())?;
        let im_text = &body[i..];
        let im: f64 = if im_text == "+" {
            1.0
        } else if im_text == "-" {
            -1.0
        } else {
            im_text.parse().map_err(|_| bad())?
        };
        Ok(Complex64::new(re, im))
    } else {
        Ok(Complex64::new(t.parse().map_err(|_| bad())?, 0.0))
    }
}

/// Parse epsilon: `0`, `1/2` or `0.5`.
pub fn parse_eps(text: &str) -> Result<Epsilon> {
    match text.trim() {
        "0" | "0.0" => Ok(Epsilon::Zero),
        "1/2" | "0.5" => Ok(Epsilon::Half),
        other => Err(Error::Config(format!(
            "epsilon must be 0 or 1/2, got '{other}'"
        ))),
    }
}

/// Parse an integer window `LO:HI` or `LO..HI` (inclusive).
pub fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::Config(format!("cannot parse range '{text}'"));
    let (lo, hi) = text
        .split_once("..")
        .or_else(|| text.split_once(':'))
        .ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Parse a float list `A,B,C` or an inclusive integer range `LO..HI`.
pub fn parse_list(text: &str) -> Result<Vec<f64>> {
    if text.contains("..") {
        let (lo, hi) = parse_range(text)?;
        return Ok((lo..=hi).map(|v| v as f64).collect());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("cannot parse list entry '{p}'")))
        })
        .collect()
}

fn env_var<T: std::str::FromStr>(name: &str) -> Option<T> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn format_complex(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn parse(args: &OutputArgs) -> Result<Format> {
        let name = args
            .format
            .clone()
            .or_else(|| env_var::<String>("SU11_FORMAT"))
            .unwrap_or_else(|| "csv".to_string());
        match name.as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

fn write_output(args: &OutputArgs, content: &str) -> Result<()> {
    let out = args.out.clone().or_else(|| env_var::<PathBuf>("SU11_OUT"));
    match out {
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| Error::Config(format!("cannot write stdout: {e}"))),
    }
}

/// Render a dense complex matrix with metadata as CSV or JSON.
fn render_matrix(
    meta: &BTreeMap<String, String>,
    rows: usize,
    cols: usize,
    entry: impl Fn(usize, usize) -> Complex64,
    format: &Format,
) -> String {
    match format {
        Format::Json => {
            let data: Vec<Vec<[f64; 2]>> = (0..rows)
                .map(|r| {
                    (0..cols)
                        .map(|c| {
                            let z = entry(r, c);
                            [z.re, z.im]
                        })
                        .collect()
                })
                .collect();
            let mut obj = serde_json::Map::new();
            for (k, v) in meta {
                obj.insert(k.clone(), serde_json::Value::String(v.clone()));
            }
            obj.insert("rows".into(), serde_json::to_value(&data).expect("floats"));
            serde_json::to_string_pretty(&serde_json::Value::Object(obj)).expect("floats") + "\n"
        }
        _ => {
            let mut s = String::new();
            for (k, v) in meta {
                s.push_str(&format!("# {k} = {v}\n"));
            }
            for r in 0..rows {
                let line: Vec<String> = (0..cols).map(|c| format_complex(entry(r, c))).collect();
                s.push_str(&line.join(","));
                s.push('\n');
            }
            s
        }
    }
}

fn table_u(
    alpha: f64,
    phi: f64,
    psi: f64,
    dim: Option<usize>,
    quadrature: bool,
    output: &OutputArgs,
) -> Result<()> {
    let dim = dim.or_else(|| env_var("SU11_DIM")).unwrap_or(16);
    let space = FockSpace::new(dim)?;
    let block: UnitaryBlock = if quadrature {
        if phi != 0.0 || psi != 0.0 {
            return Err(Error::Config(
                "quadrature builds the boost part only".into(),
            ));
        }
        u_squeeze_quadrature(alpha, space)?
    } else {
        let g = CartanAngles::new(phi, alpha, psi).to_group();
        u_of_g(&g, space)
    };
    let mut meta = BTreeMap::new();
    meta.insert("N".to_string(), dim.to_string());
    meta.insert(
        "g".to_string(),
        format!("phi={phi},alpha={alpha},psi={psi}"),
    );
    meta.insert("source".to_string(), block.source().to_string());
    meta.insert(
        "unitarity_residual".to_string(),
        format!("{:e}", block.unitarity_residual(dim)),
    );
    let format = Format::parse(output)?;
    write_output(
        output,
        &render_matrix(&meta, dim, dim, |r, c| block.entry(r, c), &format),
    )
}

fn table_t(
    tau: &str,
    eps: &str,
    krange: &str,
    alpha: f64,
    phi: f64,
    psi: f64,
    output: &OutputArgs,
) -> Result<()> {
    let label = IrrepLabel::new(parse_complex(tau)?, parse_eps(eps)?);
    let (lo, hi) = parse_range(krange)?;
    let angles = CartanAngles::new(phi, alpha, psi);
    let block = t_block(&label, lo, hi, &angles)?;
    let format = Format::parse(output)?;
    let mut meta = BTreeMap::new();
    meta.insert("tau".to_string(), format_complex(label.tau()));
    meta.insert("eps".to_string(), label.epsilon().to_string());
    meta.insert("phi".to_string(), phi.to_string());
    meta.insert("alpha".to_string(), alpha.to_string());
    meta.insert("psi".to_string(), psi.to_string());
    meta.insert("k_lo".to_string(), lo.to_string());
    meta.insert("k_hi".to_string(), hi.to_string());
    match format {
        Format::Json => write_output(
            output,
            &render_matrix(
                &meta,
                block.dim(),
                block.dim(),
                |r, c| block.matrix()[(r, c)],
                &format,
            ),
        ),
        _ => {
            // long form: k, n, re, im
            let mut s = String::new();
            for (k, v) in &meta {
                s.push_str(&format!("# {k} = {v}\n"));
            }
            s.push_str("k,n,re,im\n");
            for k in lo..=hi {
                for n in lo..=hi {
                    let z = block.entry(k, n);
                    s.push_str(&format!("{k},{n},{},{}\n", z.re, z.im));
                }
            }
            write_output(output, &s)
        }
    }
}

fn table_f(tau: &str, eps: &str, k: i64, zeta_max: u32, output: &OutputArgs) -> Result<()> {
    let label = IrrepLabel::new(parse_complex(tau)?, parse_eps(eps)?);
    let class = classify(&label);
    if !class.contains(k) {
        return Err(Error::OutOfRange {
            k,
            range: class.describe(),
        });
    }
    let values = f_values(&label, k, zeta_max)?;
    let format = Format::parse(output)?;
    match format {
        Format::Json => {
            let obj = serde_json::json!({
                "tau": format_complex(label.tau()),
                "eps": label.epsilon().to_string(),
                "k": k,
                "values": values.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            });
            write_output(
                output,
                &(serde_json::to_string_pretty(&obj).expect("floats") + "\n"),
            )
        }
        _ => {
            let mut s = format!(
                "# tau = {}\n# eps = {}\n# k = {k}\nk,t,re,im\n",
                format_complex(label.tau()),
                label.epsilon()
            );
            for (t, z) in values.iter().enumerate() {
                s.push_str(&format!("{k},{t},{},{}\n", z.re, z.im));
            }
            write_output(output, &s)
        }
    }
}

fn table_d(tau: &str, eps: &str, k: i64, dim: Option<usize>, output: &OutputArgs) -> Result<()> {
    let label = IrrepLabel::new(parse_complex(tau)?, parse_eps(eps)?);
    let dim = dim.or_else(|| env_var("SU11_DIM")).unwrap_or(24);
    let space = FockSpace::new(dim)?;
    let d = d_operator(&label, k, space)?;
    let shift = d.shift();
    let diag = d
        .op()
        .term(shift)
        .ok_or_else(|| Error::Config("operator vanished at this truncation".into()))?;
    let format = Format::parse(output)?;
    match format {
        Format::Json => {
            let obj = serde_json::json!({
                "tau": format_complex(label.tau()),
                "eps": label.epsilon().to_string(),
                "k": k,
                "N": dim,
                "shift": shift,
                "entries": diag.values().map(|(t, z)| serde_json::json!({
                    "t": t, "re": z.re, "im": z.im
                })).collect::<Vec<_>>(),
            });
            write_output(
                output,
                &(serde_json::to_string_pretty(&obj).expect("floats") + "\n"),
            )
        }
        _ => {
            let mut s = format!(
                "# tau = {}\n# eps = {}\n# N = {dim}\n# shift = {shift}\nk,t,re,im\n",
                format_complex(label.tau()),
                label.epsilon()
            );
            for (t, z) in diag.values() {
                s.push_str(&format!("{k},{t},{},{}\n", z.re, z.im));
            }
            write_output(output, &s)
        }
    }
}

/// Summary rows aggregated by identity id: (pass, fail, max residual).
fn summarize(reports: &[VerificationReport]) -> Vec<(String, usize, usize, f64)> {
    let mut agg: BTreeMap<String, (usize, usize, f64)> = BTreeMap::new();
    for r in reports {
        let e = agg.entry(r.identity_id.clone()).or_insert((0, 0, 0.0));
        if r.passed {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
        if r.residual.is_finite() {
            e.2 = e.2.max(r.residual);
        }
    }
    agg.into_iter()
        .map(|(id, (p, f, m))| (id, p, f, m))
        .collect()
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let mut cfg = SuiteConfig::default();
    cfg.dim = args.dim.or_else(|| env_var("SU11_DIM")).unwrap_or(cfg.dim);
    if cfg.dim < 8 {
        return Err(Error::Config(format!(
            "dim must be at least 8, got {}",
            cfg.dim
        )));
    }
    cfg.tol_override = args.tol.or_else(|| env_var("SU11_TOL"));
    if let Some(t) = cfg.tol_override {
        if t.is_nan() || t <= 0.0 {
            return Err(Error::Config(format!(
                "tolerance must be positive, got {t}"
            )));
        }
    }
    cfg.seed = args
        .seed
        .or_else(|| env_var("SU11_SEED"))
        .unwrap_or(cfg.seed);
    cfg.count = args
        .count
        .or_else(|| env_var("SU11_COUNT"))
        .unwrap_or(cfg.count);
    if let Some(t) = &args.tau {
        cfg.taus = Some(parse_list(t)?);
    }
    if let Some(a) = &args.alpha {
        cfg.alphas = Some(parse_list(a)?);
    }
    if let Some(g) = &args.g {
        if g != "random" {
            return Err(Error::Config(format!(
                "only '--g random' is defined, got '{g}'"
            )));
        }
    }
    let suite: Suite = args.suite.parse()?;
    let reports = run_suite(suite, &cfg)?;
    let all_passed = reports.iter().all(|r| r.passed);
    let format = Format::parse(&args.output)?;
    let content = match format {
        Format::Json => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&r.to_json_line());
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("identity,pass,fail,max_residual\n");
            for (id, p, f, m) in summarize(&reports) {
                s.push_str(&format!("{id},{p},{f},{m:e}\n"));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (id, p, f, m) in summarize(&reports) {
                let status = if f == 0 { "PASS" } else { "FAIL" };
                s.push_str(&format!(
                    "{status} {id}: {p} passed, {f} failed, max residual {m:.3e}\n"
                ));
            }
            s.push_str(&format!(
                "{}: {} checks, {} failed\n",
                if all_passed { "PASS" } else { "FAIL" },
                reports.len(),
                reports.iter().filter(|r| !r.passed).count()
            ));
            s
        }
    };
    write_output(&args.output, &content)?;
    Ok(all_passed)
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table { kind } => (match kind {
            TableKind::U {
                alpha,
                phi,
                psi,
                dim,
                quadrature,
                output,
            } => table_u(*alpha, *phi, *psi, *dim, *quadrature, output),
            TableKind::T {
                tau,
                eps,
                krange,
                alpha,
                phi,
                psi,
                output,
            } => table_t(tau, eps, krange, *alpha, *phi, *psi, output),
            TableKind::F {
                tau,
                eps,
                k,
                zeta_max,
                output,
            } => table_f(tau, eps, *k, *zeta_max, output),
            TableKind::D {
                tau,
                eps,
                k,
                dim,
                output,
            } => table_d(tau, eps, *k, *dim, output),
        })
        .map(|()| true),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("-0.5+1i").unwrap(), Complex64::new(-0.5, 1.0));
        assert_eq!(
            parse_complex("1.5-0.25i").unwrap(),
            Complex64::new(1.5, -0.25)
        );
        assert_eq!(parse_complex("-0.5-i").unwrap(), Complex64::new(-0.5, -1.0));
        assert_eq!(
            parse_complex("1e-3+2e-4i").unwrap(),
            Complex64::new(1e-3, 2e-4)
        );
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn eps_parsing() {
        assert_eq!(parse_eps("0").unwrap(), Epsilon::Zero);
        assert_eq!(parse_eps("1/2").unwrap(), Epsilon::Half);
        assert_eq!(parse_eps("0.5").unwrap(), Epsilon::Half);
        assert!(parse_eps("1").is_err());
    }

    #[test]
    fn range_and_list_parsing() {
        assert_eq!(parse_range("-3:3").unwrap(), (-3, 3));
        assert_eq!(parse_range("0..3").unwrap(), (0, 3));
        assert!(parse_range("5:1").is_err());
        assert_eq!(parse_list("0.25,0.5,1").unwrap(), vec![0.25, 0.5, 1.0]);
        assert_eq!(parse_list("0..3").unwrap(), vec![0.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn complex_formatting_roundtrip() {
        let z = Complex64::new(-0.5, 1.25);
        assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
    }
}
