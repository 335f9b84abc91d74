//! The `hdx` command line.

mod instance;
mod pipeline;

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::{read_complex, write_complex};
use crate::HdxError;

pub use instance::{Instance, InstanceText, Mode};
pub use pipeline::{
    build_explicit, certify_bundle, certify_complex_file, certify_explicit, certify_local,
    complex_checks, cotype_links, expected_degrees, family, kms_map, local_checks, make_bundle,
    predicted_order, Bundle, Certificate, Check, FamilyRow, Hypotheses, InstanceSummary, LocalData,
    LocalOrder, Options, BUNDLE_KIND, SCHEMA_VERSION,
};

#[derive(Debug, Parser)]
#[command(
    name = "hdx",
    version,
    about = "Coset-complex high-dimensional expanders"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a complex file (explicit) or a subgroup-level bundle (certificate).
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a complex file or bundle and print its certificate.
    Verify {
        input: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify in one step.
    Certify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certificate mode over the first irreducible f of each degree.
    Family {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        degrees: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Diagram preset: A~n (n >= 2) or G~2.
    #[arg(long, conflicts_with = "gcm")]
    pub preset: Option<String>,
    /// Generalized Cartan matrix as JSON, e.g. [[2,-1,-1],[-1,2,-1],[-1,-1,2]].
    #[arg(long)]
    pub gcm: Option<String>,
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Modulus over k: coefficients "1,1,1", a polynomial "t^2+t+1" or "auto:<degree>".
    #[arg(long, default_value = "auto:2")]
    pub f: String,
    #[arg(long, value_enum, default_value_t = Mode::Certificate)]
    pub mode: Mode,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LimitArgs {
    /// Maximum number of group elements to enumerate.
    #[arg(long, default_value_t = crate::groups::DEFAULT_BUDGET)]
    pub budget: usize,
    /// Residual tolerance for the iterative eigensolver.
    #[arg(long)]
    pub tol: Option<f64>,
}

impl SpecArgs {
    pub fn instance_text(&self) -> Result<InstanceText, HdxError> {
        let gcm = match &self.gcm {
            Some(s) => {
                Some(serde_json::from_str(s).map_err(|e| HdxError::Spec(format!("--gcm: {e}")))?)
            }
            None => None,
        };
        Ok(InstanceText {
            preset: self.preset.clone(),
            gcm,
            p: self.p,
            m: self.m,
            f: self.f.clone(),
        })
    }
}

impl LimitArgs {
    pub fn options(&self) -> Result<Options, HdxError> {
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(HdxError::Spec(format!("--tol {tol} is not in (0, 1)")));
            }
        }
        Ok(Options {
            budget: self.budget,
            tol: self.tol,
            ..Options::default()
        })
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli, &mut std::io::stdout().lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs one command, writing the report to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, HdxError> {
    if let Some(w) = cli.workers {
        // a pool may already exist when `run` is called twice in one process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build_global();
    }
    match &cli.command {
        Command::Build { spec, out: path } => build(spec, path.as_deref(), cli.format, out),
        Command::Verify {
            input,
            limits,
            out: path,
        } => {
            let cert = verify(input, &limits.options()?)?;
            emit_certificate(&cert, path.as_deref(), cli.format, out)?;
            Ok(cert.exit_code())
        }
        Command::Certify { spec, out: path } => {
            let inst = Instance::resolve(spec.instance_text()?)?;
            let opts = spec.limits.options()?;
            let cert = match spec.mode {
                Mode::Explicit => certify_explicit(&inst, &opts)?.0,
                Mode::Certificate => certify_local(&inst, &opts)?.0,
            };
            emit_certificate(&cert, path.as_deref(), cli.format, out)?;
            Ok(cert.exit_code())
        }
        Command::Family {
            spec,
            degrees,
            out: path,
        } => {
            let rows = family(&spec.instance_text()?, degrees, &spec.limits.options()?)?;
            match cli.format {
                Format::Json => write_json(&rows, path, out)?,
                Format::Text => write_text(&family_text(&rows), path, out)?,
            }
            Ok(0)
        }
    }
}

fn build(
    spec: &SpecArgs,
    path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<u8, HdxError> {
    let inst = Instance::resolve(spec.instance_text()?)?;
    let opts = spec.limits.options()?;
    let mut summary = Vec::new();
    match spec.mode {
        Mode::Explicit => {
            let (x, data) = build_explicit(&inst, &opts)?;
            if let Some(p) = path {
                let mut w = BufWriter::new(File::create(p)?);
                write_complex(&mut w, &x)?;
                w.flush()?;
            }
            summary.push(("group_order".to_string(), data.g.order().to_string()));
            summary.push(("vertices".into(), x.num_vertices().to_string()));
            summary.push(("maximal_faces".into(), x.maximal_faces().len().to_string()));
            for t in x.degree_profile() {
                summary.push((
                    format!("type_{}", t.ty),
                    format!("{} vertices, degree {}..{}", t.vertices, t.min, t.max),
                ));
            }
        }
        Mode::Certificate => {
            let local = match kms_map(&inst)? {
                Some(kms) => Some(local_checks(&inst, &kms, &opts)?),
                None => None,
            };
            let bundle = make_bundle(&inst, local.as_ref());
            if let Some(p) = path {
                let mut w = BufWriter::new(File::create(p)?);
                serde_json::to_writer_pretty(&mut w, &bundle)?;
                writeln!(w)?;
                w.flush()?;
            }
            summary.push((
                "group_order".into(),
                bundle
                    .group_order
                    .map_or("unknown".into(), |o| o.to_string()),
            ));
            summary.push((
                "local_groups".into(),
                bundle.local_group_orders.len().to_string(),
            ));
            summary.push((
                "degree_bound".into(),
                expected_degrees(&inst)?
                    .into_iter()
                    .max()
                    .unwrap_or(0)
                    .to_string(),
            ));
        }
    }
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                summary.into_iter().map(|(k, v)| (k, v.into())).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&map)?)?;
        }
        Format::Text => {
            for (k, v) in summary {
                writeln!(out, "{k}: {v}")?;
            }
        }
    }
    Ok(0)
}

/// Reads a complex file or a bundle and checks it.
pub fn verify(input: &Path, opts: &Options) -> Result<Certificate, HdxError> {
    let mut reader = BufReader::new(File::open(input)?);
    let head = reader.fill_buf()?;
    if head.starts_with(b"hdx-complex") {
        let x = read_complex(reader)?;
        certify_complex_file(&x, opts)
    } else {
        let bundle: Bundle = serde_json::from_reader(reader)?;
        certify_bundle(&bundle, opts)
    }
}

fn emit_certificate(
    cert: &Certificate,
    path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), HdxError> {
    if let Some(p) = path {
        let mut w = BufWriter::new(File::create(p)?);
        serde_json::to_writer_pretty(&mut w, cert)?;
        writeln!(w)?;
        w.flush()?;
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(cert)?)?,
        Format::Text => out.write_all(certificate_text(cert).as_bytes())?,
    }
    Ok(())
}

fn write_json<T: Serialize>(
    value: &T,
    path: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<(), HdxError> {
    let text = serde_json::to_string_pretty(value)?;
    if let Some(p) = path {
        std::fs::write(p, format!("{text}\n"))?;
    }
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_text(text: &str, path: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), HdxError> {
    if let Some(p) = path {
        std::fs::write(p, text)?;
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), |x| x.to_string())
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unverified",
    }
}

pub fn certificate_text(c: &Certificate) -> String {
    let mut s = String::new();
    let i = &c.instance;
    let diagram = i.preset.clone().unwrap_or_else(|| format!("{:?}", i.gcm));
    s += &format!(
        "instance: {diagram} over F_{} (q = {}), f = {}\n",
        i.p, i.q, i.f
    );
    s += &format!("mode: {}, d = {}\n", c.mode, c.d);
    s += &format!("|G|: {}\n", opt(&c.group_order));
    s += &format!("degree bound: {}\n", c.degree_bound);
    s += &format!(
        "hypotheses: surjective {}, local injective {}, IP {}, sharply transitive {}\n",
        yes_no(c.hypotheses.surjective),
        yes_no(c.hypotheses.local_injective),
        yes_no(c.hypotheses.ip),
        yes_no(c.hypotheses.sharp_transitive)
    );
    for ch in &c.checks {
        s += &format!(
            "  [{}] {}: {}\n",
            if ch.pass { "pass" } else { "FAIL" },
            ch.name,
            ch.detail
        );
    }
    s += "links:\n";
    for l in &c.links {
        s += &format!(
            "  cotype {:?} {}: {} vertices, count {}, lambda2 {:.9} <= {:.9}: {}\n",
            l.cotype,
            l.rank2_type.map_or("", |t| t.name()),
            l.size,
            opt(&l.count),
            l.lambda2,
            l.bound,
            l.pass
        );
    }
    if let Some(g) = c.global_lambda2 {
        s += &format!("global lambda2: {g:.9}\n");
    }
    s += &format!(
        "gamma: {:.9} (applicable: {})\n",
        c.gamma, c.gamma_applicable
    );
    s += &format!(
        "gamma': {}\n",
        c.gamma_prime.map_or("-".into(), |g| format!("{g:.9}"))
    );
    for f in &c.failed_clauses {
        s += &format!("failed: {f}\n");
    }
    s += &format!("verdict: {}\n", c.verdict);
    s
}

pub fn family_text(rows: &[FamilyRow]) -> String {
    let mut s = format!(
        "{:>6} {:>28} {:>14} {:>12} {:>12}  {}\n",
        "deg f", "|G|", "degree bound", "gamma", "gamma'", "f"
    );
    for r in rows {
        s += &format!(
            "{:>6} {:>28} {:>14} {:>12.9} {:>12}  {}\n",
            r.deg_f,
            opt(&r.group_order),
            r.degree_bound,
            r.gamma,
            r.gamma_prime.map_or("-".into(), |g| format!("{g:.9}")),
            r.f
        );
    }
    s
}
