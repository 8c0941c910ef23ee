//! The `qcstab` command line: `cosets`, `check` and `search`.
//!
//! Exit codes: 0 when every requested form is certified (search: when the
//! run completes), 1 when `check` finds a form that is not certified, 2 on
//! invalid input.

pub mod config;
pub mod report;
pub mod search;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::cyclic::cyclotomic_cosets;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::qc::DualForm;
use config::{RawConfig, Settings};
use report::{evaluate, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNCERTIFIED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qcstab", version, about = "Stabilizer codes from index-2 quasi-cyclic codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the q-cyclotomic cosets modulo n.
    Cosets(CosetArgs),
    /// Build Q(f, g, h), check self-orthogonality and report parameters.
    Check(RunArgs),
    /// Scan coset-generated (f, g) pairs and report every certified code.
    Search(RunArgs),
}

#[derive(Args, Debug)]
struct CosetArgs {
    #[arg(long = "n")]
    n: usize,
    #[arg(long = "p", default_value_t = 2)]
    p: u64,
    #[arg(long = "r", default_value_t = 1)]
    r: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Flat key = value file with the same keys as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long = "n")]
    n: Option<String>,
    #[arg(long = "p")]
    p: Option<String>,
    #[arg(long = "r")]
    r: Option<String>,
    /// Polynomial, "poly:<text>" or "cosets:<reps>".
    #[arg(long = "f", allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long = "g", allow_hyphen_values = true)]
    g: Option<String>,
    /// Polynomial, "linear", "artin-schreier" or "trace:<s>".
    #[arg(long = "h", allow_hyphen_values = true)]
    h: Option<String>,
    /// symplectic, euclidean or hermitian; repeatable.
    #[arg(long = "form")]
    form: Vec<String>,
    #[arg(long = "f-cosets")]
    f_cosets: Option<String>,
    #[arg(long = "g-cosets")]
    g_cosets: Option<String>,
    #[arg(long)]
    budget: Option<String>,
    #[arg(long = "mc-samples")]
    mc_samples: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    workers: Option<String>,
    /// Search: pair every f subset with every g subset.
    #[arg(long = "all-pairs")]
    all_pairs: bool,
    /// Write the reports here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write each report as its own JSON file in this directory.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

impl RunArgs {
    fn settings(&self) -> Result<Settings> {
        let mut raw = match &self.config {
            Some(path) => RawConfig::parse(
                &fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
            )?,
            None => RawConfig::default(),
        };
        let flags = [
            ("n", &self.n),
            ("p", &self.p),
            ("r", &self.r),
            ("f", &self.f),
            ("g", &self.g),
            ("h", &self.h),
            ("f-cosets", &self.f_cosets),
            ("g-cosets", &self.g_cosets),
            ("budget", &self.budget),
            ("mc-samples", &self.mc_samples),
            ("seed", &self.seed),
            ("workers", &self.workers),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                raw.set(key, v.clone());
            }
        }
        if !self.form.is_empty() {
            raw.set("form", self.form.join(","));
        }
        if self.all_pairs {
            raw.set("all-pairs", "true");
        }
        let s = Settings::from_raw(&raw)?;
        let field = s.field()?;
        if s.forms.contains(&DualForm::Hermitian) && field.sqrt_order().is_none() {
            return Err(Error::WrongFieldForHermitian);
        }
        Ok(s)
    }
}

#[derive(Serialize)]
struct CosetListing {
    n: usize,
    q: u64,
    cosets: Vec<CosetEntry>,
}

#[derive(Serialize)]
struct CosetEntry {
    representative: usize,
    size: usize,
    elements: Vec<usize>,
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Parse(format!("stdout: {e}"))),
    }
}

fn write_fixtures(dir: &Path, reports: &[Report]) -> Result<()> {
    let io = |e: std::io::Error| Error::Parse(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    for (i, r) in reports.iter().enumerate() {
        let k = r.k.map_or("na".to_string(), |k| k.to_string());
        let name = format!("{i:04}-{}-n{}-k{k}.json", r.form, r.n);
        let body = serde_json::to_string_pretty(r).expect("report serializes");
        fs::write(dir.join(name), body + "\n").map_err(io)?;
    }
    Ok(())
}

fn ndjson(reports: &[Report]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
        .collect()
}

fn cosets_cmd(a: &CosetArgs, stdout: &mut dyn Write) -> Result<i32> {
    let q = Field::new(a.p, a.r)?.order();
    let cosets = cyclotomic_cosets(a.n, q)?;
    let text = if a.json {
        let listing = CosetListing {
            n: a.n,
            q,
            cosets: cosets
                .iter()
                .map(|c| CosetEntry {
                    representative: c[0],
                    size: c.len(),
                    elements: c.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&listing).expect("listing serializes") + "\n"
    } else {
        let mut s = format!("{} cyclotomic cosets of {} modulo {}\n", cosets.len(), q, a.n);
        for c in &cosets {
            let elems: Vec<String> = c.iter().map(|e| e.to_string()).collect();
            s.push_str(&format!(
                "rep {:>4}  degree {:>3}  {{{}}}\n",
                c[0],
                c.len(),
                elems.join(", ")
            ));
        }
        s
    };
    emit(&a.out, &text, stdout)?;
    Ok(EXIT_OK)
}

fn check_cmd(a: &RunArgs, stdout: &mut dyn Write) -> Result<i32> {
    let s = a.settings()?;
    let field = s.field()?;
    let f = s.f.resolve(&field, s.n)?;
    let g = s.g.resolve(&field, s.n)?;
    let h = s.h.resolve(&field, s.n)?;
    let opts = s.distance_options();
    let reports = s
        .forms
        .iter()
        .map(|&form| evaluate(&s, &field, &f, &g, &h, form, &opts))
        .collect::<Result<Vec<_>>>()?;
    emit(&a.out, &ndjson(&reports), stdout)?;
    if let Some(dir) = &a.fixtures {
        write_fixtures(dir, &reports)?;
    }
    Ok(if reports.iter().all(|r| r.certified) {
        EXIT_OK
    } else {
        EXIT_UNCERTIFIED
    })
}

fn search_cmd(a: &RunArgs, stdout: &mut dyn Write) -> Result<i32> {
    let s = a.settings()?;
    let reports = search::search(&s)?;
    emit(&a.out, &ndjson(&reports), stdout)?;
    if let Some(dir) = &a.fixtures {
        write_fixtures(dir, &reports)?;
    }
    Ok(EXIT_OK)
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Cosets(a) => cosets_cmd(a, stdout),
        Command::Check(a) => check_cmd(a, stdout),
        Command::Search(a) => search_cmd(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}
