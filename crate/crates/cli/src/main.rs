//! `splitq`: factorization, root isolation, primitive elements and prime scans
//! for integer polynomials.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use splitq::criterion::{
    self, cross_check, density_stats, schur_search, ScanConfig, ScanReport, SchurWitness, CSV_HEADER,
};
use splitq::splitfield::{self, PrimitiveElement, SplitConfig};
use splitq::zfactor::{factor_q_with, FactorConfig};
use splitq::zpoly::bezout_bound;
use splitq::IntPoly;

#[derive(Parser)]
#[command(name = "splitq", version, about = "Splitting fields of integer polynomials and the mod-p splitting criterion")]
struct Cli {
    #[command(flatten)]
    cfg: Config,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct Config {
    /// Starting precision of root isolation, in bits.
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(8..))]
    precision: u32,
    /// Precision cap, in bits.
    #[arg(long, global = true, default_value_t = 8192, value_parser = clap::value_parser!(u32).range(8..))]
    precision_cap: u32,
    /// Largest squarefree degree handed to the factorizer.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    factor_cap: u64,
    /// Seed of the randomized splitting mod p.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for prime scans (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write output here instead of stdout. Scans stream CSV records to this
    /// file and finish with a JSON summary in `<out>.summary.json`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Integers per sieve segment.
    #[arg(long, global = true, default_value_t = 1 << 20, value_parser = clap::value_parser!(u64).range(1..))]
    segment_size: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Factor over the rationals.
    Factor { poly: String },
    /// Certified complex roots with multiplicities.
    Roots { poly: String },
    /// Primitive element of the splitting field and its minimal polynomial.
    PrimitiveElement { poly: String },
    /// Primitive element, bound, scan and Schur cross-check in one run.
    Verify {
        poly: String,
        #[arg(long, default_value_t = 100_000)]
        p_max: u64,
        /// Schur primes to search for.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Scan the primes above the bad-prime bound.
    Scan {
        poly: String,
        /// Minimal polynomial to test; computed when omitted.
        #[arg(long = "P")]
        p_poly: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        p_max: u64,
    },
    /// Prime divisors of values of a polynomial.
    Schur {
        poly: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Largest |m| evaluated.
        #[arg(long, default_value_t = 100_000)]
        m_max: u64,
    },
    /// Several generators of the same splitting field.
    Family {
        poly: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Integer λ with gcd(R(t), S(t)) | λ for all integers t.
    Lemma1Bound { r: String, s: String },
}

impl Config {
    fn split(&self) -> SplitConfig {
        SplitConfig {
            precision_bits: self.precision,
            precision_cap: self.precision_cap.max(self.precision),
            factor: self.factor(),
        }
    }

    fn factor(&self) -> FactorConfig {
        FactorConfig {
            degree_cap: self.factor_cap as usize,
            seed: self.seed,
        }
    }

    fn scan(&self) -> ScanConfig {
        ScanConfig {
            segment_size: self.segment_size,
        }
    }
}

fn parse(s: &str) -> Result<IntPoly> {
    IntPoly::parse(s).with_context(|| format!("cannot parse polynomial {s:?}"))
}

/// Destination for the command's main output.
fn sink(cfg: &Config) -> Result<Box<dyn Write>> {
    Ok(match &cfg.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_json<T: Serialize>(w: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` signals violations found.
fn run(cli: &Cli) -> Result<bool> {
    let cfg = &cli.cfg;
    match &cli.cmd {
        Command::Factor { poly } => cmd_factor(&parse(poly)?, cfg),
        Command::Roots { poly } => cmd_roots(&parse(poly)?, cfg),
        Command::PrimitiveElement { poly } => cmd_primitive_element(&parse(poly)?, cfg),
        Command::Verify { poly, p_max, count } => cmd_verify(&parse(poly)?, *p_max, *count, cfg),
        Command::Scan { poly, p_poly, p_max } => {
            let phi = parse(poly)?;
            let p_poly = match p_poly {
                Some(s) => parse(s)?,
                None => splitfield::primitive_element_with(&phi, &cfg.split(), 0)?.min_poly,
            };
            cmd_scan(&phi, &p_poly, *p_max, cfg)
        }
        Command::Schur { poly, count, m_max } => cmd_schur(&parse(poly)?, *count, *m_max, cfg),
        Command::Family { poly, k } => cmd_family(&parse(poly)?, *k, cfg),
        Command::Lemma1Bound { r, s } => cmd_lemma1(&parse(r)?, &parse(s)?, cfg),
    }
}

fn cmd_factor(f: &IntPoly, cfg: &Config) -> Result<bool> {
    let fac = factor_q_with(f, &cfg.factor())?;
    let mut w = sink(cfg)?;
    match cfg.format {
        Format::Json => {
            let factors: Vec<_> = fac
                .factors
                .iter()
                .map(|(g, m)| json!({"factor": g, "multiplicity": m}))
                .collect();
            emit_json(&mut w, &json!({"input": f, "unit": fac.unit.to_string(), "factors": factors}))?;
        }
        Format::Csv => {
            writeln!(w, "factor,multiplicity")?;
            writeln!(w, "{},1", fac.unit)?;
            for (g, m) in &fac.factors {
                writeln!(w, "{g},{m}")?;
            }
        }
        Format::Human => writeln!(w, "{fac}")?,
    }
    w.flush()?;
    Ok(true)
}

fn cmd_roots(f: &IntPoly, cfg: &Config) -> Result<bool> {
    let roots = splitfield::isolate_roots_with(f, &cfg.split())?;
    let mut w = sink(cfg)?;
    let rows: Vec<_> = roots
        .iter()
        .map(|(r, m)| {
            let (re, im) = r.center.to_f64();
            (r.index, re, im, r.radius.to_f64(), *m, r.source_factor.to_string())
        })
        .collect();
    match cfg.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(i, re, im, rad, m, fac)| {
                    json!({"index": i, "re": re, "im": im, "radius": rad, "multiplicity": m, "factor": fac})
                })
                .collect();
            emit_json(&mut w, &items)?;
        }
        Format::Csv => {
            writeln!(w, "index,re,im,radius,multiplicity,factor")?;
            for (i, re, im, rad, m, fac) in &rows {
                writeln!(w, "{i},{re:e},{im:e},{rad:e},{m},{fac}")?;
            }
        }
        Format::Human => {
            for ((r, m), (_, _, _, rad, _, fac)) in roots.iter().zip(&rows) {
                writeln!(w, "#{}  {}  (radius {rad:.3e}, multiplicity {m}, factor {fac})", r.index, r.center)?;
            }
        }
    }
    w.flush()?;
    Ok(true)
}

fn cmd_primitive_element(f: &IntPoly, cfg: &Config) -> Result<bool> {
    let pe = splitfield::primitive_element_with(f, &cfg.split(), 0)?;
    let mut w = sink(cfg)?;
    emit_json(&mut w, &pe.record())?;
    w.flush()?;
    Ok(true)
}

fn summary_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".summary.json");
    PathBuf::from(s)
}

/// Runs the scan, streaming CSV rows when writing CSV to a file or stdout.
fn run_scan(phi: &IntPoly, p_poly: &IntPoly, p_max: u64, cfg: &Config) -> Result<ScanReport> {
    let stream_csv = cfg.out.is_some() || cfg.format == Format::Csv;
    if !stream_csv {
        return Ok(criterion::scan_with(phi, p_poly, p_max, &cfg.scan(), |_| Ok(()))?);
    }
    let mut w = sink(cfg)?;
    writeln!(w, "{CSV_HEADER}")?;
    let report = criterion::scan_with(phi, p_poly, p_max, &cfg.scan(), |recs| {
        criterion::write_csv_rows(recs, &mut w)
            .and_then(|_| w.flush())
            .map_err(|e| splitq::Error::Mismatch(format!("write failed: {e}")))
    })?;
    w.flush()?;
    Ok(report)
}

/// Writes the summary: next to the CSV file when `--out` is set, else to stdout
/// (unless stdout already carries CSV).
fn finish_scan<T: Serialize>(summary: &T, human: &str, cfg: &Config) -> Result<()> {
    if let Some(out) = &cfg.out {
        let mut f = BufWriter::new(File::create(summary_path(out))?);
        emit_json(&mut f, summary)?;
        f.flush()?;
    }
    if cfg.out.is_none() && cfg.format == Format::Csv {
        return Ok(());
    }
    let mut stdout = io::stdout().lock();
    match cfg.format {
        Format::Human => write!(stdout, "{human}")?,
        _ => emit_json(&mut stdout, summary)?,
    }
    Ok(())
}

fn cmd_scan(phi: &IntPoly, p_poly: &IntPoly, p_max: u64, cfg: &Config) -> Result<bool> {
    let report = run_scan(phi, p_poly, p_max, cfg)?;
    let summary = report.summary();
    let human = format!(
        "phi = {}\nP = {}\nB = {}\nprimes in ({}, {}]: {}\nsplit primes: {}\nviolations: {}\n",
        summary.phi,
        summary.p_poly,
        summary.bound,
        report.range.0,
        summary.p_max,
        summary.n_primes,
        summary.n_split,
        summary.violations.len()
    );
    finish_scan(&summary, &human, cfg)?;
    Ok(report.violations.is_empty())
}

fn cmd_verify(phi: &IntPoly, p_max: u64, count: usize, cfg: &Config) -> Result<bool> {
    let pe: PrimitiveElement = splitfield::primitive_element_with(phi, &cfg.split(), 0)?;
    let report = run_scan(phi, &pe.min_poly, p_max, cfg)?;
    let witnesses = schur_search(&pe.min_poly, count, 1_000_000)?;
    let cross = cross_check(&witnesses, &report)?;
    let density = density_stats(&report)?;
    let summary = report.summary();
    let ok = report.violations.is_empty() && cross;
    let value = json!({
        "summary": summary,
        "primitive_element": pe.record(),
        "schur_primes": witnesses.iter().map(|w| w.q.to_string()).collect::<Vec<_>>(),
        "cross_check": cross,
        "density": {
            "split_fraction": density.split_fraction,
            "heuristic_1_over_deg_P": density.expected,
            "sample_size": density.sample_size,
        },
    });
    let mut human = format!(
        "phi = {}\nP = {} (degree {})\nB = {}\nprimes in ({}, {}]: {}\nsplit primes: {} (fraction {:.4}, heuristic 1/deg P = {:.4})\nviolations: {}\nSchur primes: {}, cross-check {}\n",
        phi,
        pe.min_poly,
        pe.degree(),
        report.bad_bound,
        report.range.0,
        report.range.1,
        report.n_primes(),
        report.n_split(),
        density.split_fraction,
        density.expected,
        report.violations.len(),
        witnesses.len(),
        if cross { "passed" } else { "FAILED" }
    );
    if witnesses.len() < count {
        human.push_str(&format!("warning: only {} of {count} Schur primes found\n", witnesses.len()));
    }
    for v in &report.violations {
        human.push_str(&format!("violation at p = {}: {:?}\n", v.p, v.failed));
    }
    finish_scan(&value, &human, cfg)?;
    Ok(ok)
}

fn cmd_schur(f: &IntPoly, count: usize, m_max: u64, cfg: &Config) -> Result<bool> {
    let ws: Vec<SchurWitness> = schur_search(f, count, m_max)?;
    if ws.iter().any(|w| !w.validate(f)) {
        bail!("a Schur witness failed re-validation");
    }
    if ws.len() < count {
        eprintln!("warning: only {} of {count} primes found for |m| <= {m_max}", ws.len());
    }
    let mut w = sink(cfg)?;
    match cfg.format {
        Format::Json => {
            let items: Vec<_> = ws
                .iter()
                .map(|x| json!({"q": x.q.to_string(), "m": x.m.to_string(), "value": x.value.to_string()}))
                .collect();
            emit_json(&mut w, &items)?;
        }
        Format::Csv => {
            writeln!(w, "q,m,value")?;
            for x in &ws {
                writeln!(w, "{},{},{}", x.q, x.m, x.value)?;
            }
        }
        Format::Human => {
            for x in &ws {
                writeln!(w, "q = {} divides P({}) = {}", x.q, x.m, x.value)?;
            }
        }
    }
    w.flush()?;
    Ok(true)
}

fn cmd_family(f: &IntPoly, k: usize, cfg: &Config) -> Result<bool> {
    let fam = splitfield::family_with(f, k, &cfg.split())?;
    let mut w = sink(cfg)?;
    match cfg.format {
        Format::Human => {
            for pe in &fam {
                writeln!(w, "{}  (degree {}, weights {:?})", pe.min_poly, pe.degree(), pe.weights)?;
            }
        }
        Format::Csv => {
            writeln!(w, "min_poly,degree")?;
            for pe in &fam {
                writeln!(w, "{},{}", pe.min_poly, pe.degree())?;
            }
        }
        Format::Json => {
            let records: Vec<_> = fam.iter().map(PrimitiveElement::record).collect();
            emit_json(&mut w, &records)?;
        }
    }
    w.flush()?;
    Ok(true)
}

fn cmd_lemma1(r: &IntPoly, s: &IntPoly, cfg: &Config) -> Result<bool> {
    let cert = bezout_bound(r, s)?;
    let mut w = sink(cfg)?;
    match cfg.format {
        Format::Human => {
            writeln!(w, "lambda = {}", cert.lambda)?;
            writeln!(w, "({r})*({}) + ({s})*({}) = {}", cert.a1, cert.b1, cert.lambda)?;
        }
        Format::Csv => {
            writeln!(w, "lambda,a1,b1")?;
            writeln!(w, "{},{},{}", cert.lambda, cert.a1, cert.b1)?;
        }
        Format::Json => emit_json(
            &mut w,
            &json!({"R": r, "S": s, "lambda": cert.lambda.to_string(), "a1": cert.a1, "b1": cert.b1}),
        )?,
    }
    w.flush()?;
    Ok(true)
}
