use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lieforge::suite::{self, Suite, SuiteConfig, SuiteOutput};
use lieforge::{CheckReport, Tolerance};

/// Verify the SU(2) construction of the Lorentz and Poincaré algebras.
#[derive(Debug, Parser)]
#[command(name = "lieforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for the random trials.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of random trials per invariance check.
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,

    /// Space/time ratio of the vector matrices.
    #[arg(long, global = true, default_value_t = 1.0, allow_hyphen_values = true)]
    alpha: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for JSON artifacts (json format only).
    #[arg(long, global = true, default_value = ".")]
    artifact_dir: PathBuf,

    #[arg(long, global = true, hide = true, allow_hyphen_values = true)]
    perturb: Option<f64>,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Fundamental, Lorentz and Poincaré relations in the 2 and (2⊕2) representations.
    Verify,
    /// Extract 4-vector generators from the vector matrices.
    Transfer,
    /// Finite-transform invariants, affine transforms and intertwining.
    Invariants,
    /// SU(2) and SU(3) structure constants and the anticommutator obstruction.
    Sun,
    /// The worked exercises.
    Exercises,
    /// Everything.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Command> for Suite {
    fn from(c: Command) -> Self {
        match c {
            Command::Verify => Suite::Verify,
            Command::Transfer => Suite::Transfer,
            Command::Invariants => Suite::Invariants,
            Command::Sun => Suite::Sun,
            Command::Exercises => Suite::Exercises,
            Command::All => Suite::All,
        }
    }
}

fn tolerance() -> Result<Tolerance, String> {
    let default = Tolerance::default();
    match std::env::var("LIEFORGE_TOL") {
        Ok(raw) => {
            let abs: f64 = raw
                .trim()
                .parse()
                .map_err(|e| format!("LIEFORGE_TOL={raw}: {e}"))?;
            Tolerance::new(abs, default.exp_eps.max(abs))
                .map_err(|e| format!("LIEFORGE_TOL={raw}: {e}"))
        }
        Err(_) => Ok(default),
    }
}

fn text_line(r: &CheckReport) -> String {
    let mut line = format!(
        "{} {:<26} {:<40} max {:.3e} (tol {:.0e})",
        if r.passed { "PASS" } else { "FAIL" },
        r.identity.to_string(),
        r.relation,
        r.max_residual,
        r.tolerance
    );
    if let (false, Some(w)) = (r.passed, &r.witness) {
        line.push_str(&format!(
            "\n     worst at {:?}: {}",
            w.indices, w.description
        ));
    }
    if let Some(note) = &r.note {
        line.push_str(&format!("\n     {note}"));
    }
    line
}

fn render(out: &SuiteOutput, format: Format) -> String {
    match format {
        Format::Json => suite::to_json_lines(&out.reports),
        Format::Text => {
            let mut s = String::new();
            for a in &out.artifacts {
                s.push_str(&format!("== {} ==\n{}\n", a.name, a.text));
            }
            for r in &out.reports {
                s.push_str(&text_line(r));
                s.push('\n');
            }
            let failed = out.reports.iter().filter(|r| !r.passed).count();
            s.push_str(&format!(
                "{} reports, {} passed, {} failed\n",
                out.reports.len(),
                out.reports.len() - failed,
                failed
            ));
            s
        }
    }
}

fn write_artifacts(out: &SuiteOutput, dir: &Path) -> io::Result<()> {
    if out.artifacts.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(dir)?;
    for a in &out.artifacts {
        let body = serde_json::to_string_pretty(&a.json)? + "\n";
        fs::write(dir.join(format!("{}.json", a.name)), body)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, String> {
    let cfg = SuiteConfig {
        seed: cli.seed,
        trials: usize::try_from(cli.trials).map_err(|e| e.to_string())?,
        alpha: cli.alpha,
        tol: tolerance()?,
        perturb: cli.perturb,
    };
    let out = suite::run(cli.command.into(), &cfg).map_err(|e| e.to_string())?;
    let body = render(&out, cli.format);
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?,
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| e.to_string())?,
    }
    if cli.format == Format::Json {
        write_artifacts(&out, &cli.artifact_dir)
            .map_err(|e| format!("{}: {e}", cli.artifact_dir.display()))?;
    }
    Ok(out.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
