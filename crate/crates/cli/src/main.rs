use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use frobcat::algebra::DEFAULT_PRESENTATION_CAP;
use frobcat::linalg::FieldSpec;
use frobcat::modcat::DEFAULT_CUTOFF;
use frobcat::weyl::DynkinType;
use frobcat_cli::suites::{find, registry, run_suite, suite_names, Context};
use frobcat_cli::{present, survey, with_field, Config};

#[derive(Parser)]
#[command(name = "frobcat", version, about = "Frobenius subcategories of modules over preprojective algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Common {
    /// Dynkin type, e.g. A3.
    #[arg(long = "type", default_value = "A2")]
    ty: DynkinType,
    /// `q` or `p:<prime>`.
    #[arg(long, default_value_t = FieldSpec::default())]
    field: FieldSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Largest homological degree examined.
    #[arg(long, default_value_t = DEFAULT_CUTOFF)]
    cutoff: usize,
    /// Path-length cap for quiver presentations.
    #[arg(long = "degree-cap", default_value_t = DEFAULT_PRESENTATION_CAP)]
    degree_cap: usize,
}

impl Common {
    fn config(&self) -> Config {
        Config {
            ty: self.ty,
            field: self.field,
            seed: self.seed,
            workers: self.workers,
            cutoff: self.cutoff,
            degree_cap: self.degree_cap,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// TSV table over all pairs (v, w) with a virtual-dimension footer.
    Survey {
        #[command(flatten)]
        common: Common,
    },
    /// Runs one suite, or `all`, and prints a JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// JSON quiver presentation and fingerprint of Pi_{v,w}.
    Present {
        /// Reduced word, comma separated, `e` for the identity.
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[command(flatten)]
        common: Common,
    },
}

fn verify(suite: &str, cfg: Config) -> Result<bool> {
    with_field!(cfg, pi => {
        let ctx = Context::new(pi, cfg.clone());
        let suites = if suite == "all" {
            registry()
        } else {
            vec![find(suite).map_err(|e| anyhow::anyhow!("{e}; known suites: all, {}", suite_names().join(", ")))?]
        };
        let mut reports = Vec::new();
        for s in &suites {
            reports.push(serde_json::to_value(run_suite(s.as_ref(), &ctx)?)?);
        }
        let passed = reports.iter().all(|r| r["passed"] == true);
        let out = if reports.len() == 1 { reports.remove(0) } else { serde_json::Value::Array(reports) };
        writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&out)?)?;
        Ok(passed)
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Survey { common } => {
            let cfg = common.config();
            with_field!(cfg, pi => {
                let rows = survey::survey_rows(&pi, &cfg)?;
                let stdout = std::io::stdout();
                let mut out = stdout.lock();
                let ok = survey::write_survey(&rows, &cfg, &mut out, &mut std::io::stderr())?;
                out.flush()?;
                Ok(ok)
            })
        }
        Command::Verify { suite, common } => verify(&suite, common.config()),
        Command::Present { v, w, common } => {
            let cfg = common.config();
            with_field!(cfg, pi => {
                let g = pi.group();
                let (v, w) = (g.parse_element(&v)?, g.parse_element(&w)?);
                let json = present::present(&pi, &v, &w, &cfg)?;
                writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&json)?)?;
                Ok(true)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
