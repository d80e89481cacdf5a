//! `affine-chars`: permutation weights, characters and theta-sum oracles for
//! affine A_r^(1) from the command line.
//!
//! Exit codes: 0 success, 1 comparison mismatch, 2 invalid input or other error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use affine_chars::{
    basic_character_rhs, guaranteed_order, lattice_theta, normalized_character, oracle_character,
    permutation_weights, t_polynomial, AffineDominant, DynkinLabels, Method, QSeries, Rank,
};
use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "affine-chars",
    version,
    about = "Exact q-series characters of affine A_r^(1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Rank r of A_r (1..=8).
    #[arg(long, global = true, default_value_t = 4)]
    rank: usize,

    /// Level k.
    #[arg(long, global = true, default_value_t = 1)]
    level: i64,

    /// Comma-separated Dynkin labels of λ⁺ (default: all zero).
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    labels: Option<Vec<i64>>,

    /// Depth cutoff M.
    #[arg(long = "max-depth", global = true, default_value_t = 8)]
    max_depth: u32,

    /// Series truncation N (default: M, or the guaranteed order for `oracle`).
    #[arg(long, global = true)]
    truncate: Option<usize>,

    #[arg(long, global = true, default_value = "translation")]
    method: Method,

    /// Shell cutoff nmax for theta sums.
    #[arg(long, global = true, default_value_t = 2)]
    shells: u64,

    #[arg(
        long,
        global = true,
        value_enum,
        env = "AFFINE_CHARS_FORMAT",
        default_value = "json"
    )]
    format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List permutation weights up to depth M.
    Permweights,
    /// Normalized character from permutation weights.
    Character,
    /// Normalized character from shell-organized theta sums.
    Oracle,
    /// Depth sums vs shell sums vs Θ/Φ^r, coefficient by coefficient.
    Compare {
        /// QSeries JSON to use in place of the depth-organized character.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Lattice theta series and the T-polynomials of shells 1..=nmax.
    Theta,
}

struct Run {
    dom: AffineDominant,
    cli: Cli,
}

impl Run {
    fn from_cli(cli: Cli) -> anyhow::Result<Self> {
        let rank = Rank::new(cli.rank)?;
        let labels = cli.labels.clone().unwrap_or_else(|| vec![0; rank.get()]);
        if labels.len() != rank.get() {
            return Err(anyhow!(format!(
                "A{rank} needs {rank} labels, got {}",
                labels.len()
            )));
        }
        let labels = DynkinLabels::new(labels)?;
        let dom = AffineDominant::new(cli.level, labels)?;
        Ok(Run { dom, cli })
    }

    fn depth_trunc(&self) -> anyhow::Result<usize> {
        let m = self.cli.max_depth as usize;
        match self.cli.truncate {
            Some(n) if n > m => Err(anyhow!(format!("--truncate {n} exceeds --max-depth {m}"))),
            Some(n) => Ok(n),
            None => Ok(m),
        }
    }

    fn weight_json(&self) -> serde_json::Value {
        json!({
            "algebra": format!("A{}(1)", self.dom.rank()),
            "weight": {"k": self.dom.level(), "labels": self.dom.lambda_plus().labels()},
        })
    }
}

fn series_csv(q: &QSeries) -> String {
    let mut out = String::from("order,value\n");
    for (i, c) in q.coeffs().iter().enumerate() {
        writeln!(out, "{i},{c}").unwrap();
    }
    out
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data") + "\n"
}

fn permweights(run: &Run) -> anyhow::Result<String> {
    let set = permutation_weights(&run.dom, run.cli.max_depth, run.cli.method);
    Ok(match run.cli.format {
        Format::Json => format!(
            "{}\n{}",
            set.notation(),
            pretty(&serde_json::to_value(&set)?)
        ),
        Format::Csv => {
            let r = run.dom.rank().get();
            let mut out = (1..=r).map(|i| format!("n{i},")).collect::<String>() + "depth,sign\n";
            for m in set.members() {
                for l in m.lambda_labels().labels() {
                    write!(out, "{l},").unwrap();
                }
                writeln!(out, "{},{}", m.depth(), m.sign()).unwrap();
            }
            out
        }
    })
}

fn character(run: &Run) -> anyhow::Result<String> {
    let trunc = run.depth_trunc()?;
    let ch = normalized_character(&run.dom, run.cli.max_depth, run.cli.method)?.truncated(trunc);
    Ok(match run.cli.format {
        Format::Json => pretty(&serde_json::to_value(&ch)?),
        Format::Csv => series_csv(&ch.chi),
    })
}

fn oracle(run: &Run) -> anyhow::Result<String> {
    let nmax = run.cli.shells;
    let order = guaranteed_order(&run.dom, nmax);
    if order < 0 {
        return Err(anyhow!(format!(
            "{nmax} shells fix no coefficient; use more --shells"
        )));
    }
    let trunc = run.cli.truncate.unwrap_or(order as usize);
    let chi = oracle_character(&run.dom, nmax, trunc)?;
    Ok(match run.cli.format {
        Format::Json => {
            let mut v = run.weight_json();
            v["shells"] = json!(nmax);
            v["guaranteed_order"] = json!(order);
            v["chi"] = serde_json::to_value(&chi)?;
            pretty(&v)
        }
        Format::Csv => series_csv(&chi),
    })
}

fn theta(run: &Run) -> anyhow::Result<String> {
    let trunc = run.depth_trunc()?;
    let theta = lattice_theta(run.dom.rank(), trunc);
    let ts: Vec<_> = (1..=run.cli.shells)
        .map(|n| t_polynomial(&run.dom, n, trunc))
        .collect();
    Ok(match run.cli.format {
        Format::Json => {
            let mut v = run.weight_json();
            v["theta"] = serde_json::to_value(&theta)?;
            v["t_polynomials"] = serde_json::to_value(&ts)?;
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("series,order,value\n");
            for (i, c) in theta.coeffs().iter().enumerate() {
                writeln!(out, "theta,{i},{c}").unwrap();
            }
            for t in &ts {
                for (i, c) in t.series.coeffs().iter().enumerate() {
                    writeln!(out, "T{},{i},{c}", t.shell).unwrap();
                }
            }
            out
        }
    })
}

/// Table text plus the first differing order, if any.
fn compare(run: &Run, fixture: Option<&PathBuf>) -> anyhow::Result<(String, Option<usize>)> {
    let m = run.depth_trunc()?;
    let depths = match fixture {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str::<QSeries>(&text)
                .map_err(|e| anyhow!(format!("{}: {e}", path.display())))?
        }
        None => normalized_character(&run.dom, run.cli.max_depth, run.cli.method)?
            .chi
            .truncate(m),
    };
    let order = guaranteed_order(&run.dom, run.cli.shells);
    let shells = if order >= 0 {
        Some(oracle_character(&run.dom, run.cli.shells, m)?)
    } else {
        None
    };
    let closed = run
        .dom
        .is_basic()
        .then(|| basic_character_rhs(run.dom.rank(), m));

    let cell = |q: Option<&QSeries>, i: usize| {
        q.and_then(|s| s.coeff(i))
            .map_or("-".to_string(), |c| c.to_string())
    };
    let mut out = format!("{}  M={m} nmax={}\n", run.dom, run.cli.shells);
    writeln!(
        out,
        "{:>5} {:>14} {:>14} {:>14}  status",
        "order", "depths", "shells", "closed form"
    )?;
    let mut first_bad = None;
    for i in 0..=m {
        let d = depths.coeff(i);
        let mut compared = false;
        let mut ok = true;
        for other in [shells.as_ref(), closed.as_ref()].into_iter().flatten() {
            if let Some(c) = other.coeff(i) {
                compared = true;
                ok &= d == Some(c);
            }
        }
        let status = match (compared, ok) {
            (false, _) => "-",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        };
        if compared && !ok && first_bad.is_none() {
            first_bad = Some(i);
        }
        writeln!(
            out,
            "{i:>5} {:>14} {:>14} {:>14}  {status}",
            cell(Some(&depths), i),
            cell(shells.as_ref(), i),
            cell(closed.as_ref(), i)
        )?;
    }
    match first_bad {
        Some(i) => writeln!(out, "FAIL: first mismatch at q^{i}")?,
        None => writeln!(out, "PASS")?,
    }
    Ok((out, first_bad))
}

fn emit(path: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(Into::into),
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let run = Run::from_cli(cli)?;
    let (text, code) = match &run.cli.command {
        Command::Permweights => (permweights(&run)?, 0),
        Command::Character => (character(&run)?, 0),
        Command::Oracle => (oracle(&run)?, 0),
        Command::Theta => (theta(&run)?, 0),
        Command::Compare { fixture } => {
            let (text, bad) = compare(&run, fixture.as_ref())?;
            if let Some(i) = bad {
                eprintln!("mismatch: first differing order q^{i}");
            }
            (text, u8::from(bad.is_some()))
        }
    };
    emit(run.cli.out.as_ref(), &text)?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
