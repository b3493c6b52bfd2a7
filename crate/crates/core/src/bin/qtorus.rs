use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use qtorus::cli::{self, exit_code, Options, Outcome};
use qtorus::config::{AlgebraConfig, CorpusConfig};
use qtorus::selftest::Level;
use qtorus::Result;

#[derive(Parser)]
#[command(
    name = "qtorus",
    version,
    about = "Quantum tori: invariants, modules and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Algebra definition (TOML); a corpus file for `survey`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    #[arg(long = "K", global = true, default_value_t = 2)]
    k: usize,
    #[arg(long, global = true, default_value_t = 24)]
    growth_steps: usize,
    /// Coefficient bound of the brute-force isotropic search.
    #[arg(long, global = true)]
    bound: Option<i64>,
    /// Maximum number of modules examined by `survey`.
    #[arg(long, global = true, default_value_t = 1000)]
    budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = LevelArg::Quick)]
    level: LevelArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Center, dimension and hypothesis flags.
    Algebra,
    /// Compare the dimension with an exhaustive search.
    DimOracle,
    /// Build A/fA and certify its properties.
    Contract {
        /// Unitary element, e.g. "t^2 - x1".
        f: String,
    },
    /// Build the module induced from a character of the coefficient subalgebra.
    Induce {
        /// Character values on x1..x(n-1).
        #[arg(allow_hyphen_values = true)]
        chi: Vec<String>,
    },
    /// Collect certified GK dimensions over a corpus.
    Survey,
    /// Run the property suites.
    Selftest,
}

fn load(cli: &Cli) -> Result<AlgebraConfig> {
    match &cli.config {
        Some(p) => AlgebraConfig::load(p),
        None => Err(qtorus::Error::Config("--config is required".into())),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let mut opts = Options {
        seed: cli.seed.unwrap_or(1),
        samples: cli.samples,
        k: cli.k,
        growth_steps: cli.growth_steps,
        bound: cli.bound,
        budget: cli.budget,
    };
    let with_seed = |cfg: &AlgebraConfig, opts: &mut Options| {
        if cli.seed.is_none() {
            if let Some(s) = cfg.seed {
                opts.seed = s;
            }
        }
    };
    match &cli.command {
        Command::Algebra => {
            let cfg = load(cli)?;
            with_seed(&cfg, &mut opts);
            cli::cmd_algebra(&cfg, &opts)
        }
        Command::DimOracle => {
            let cfg = load(cli)?;
            with_seed(&cfg, &mut opts);
            cli::cmd_dim_oracle(&cfg, &opts)
        }
        Command::Contract { f } => {
            let cfg = load(cli)?;
            with_seed(&cfg, &mut opts);
            cli::cmd_contract(&cfg, f, &opts)
        }
        Command::Induce { chi } => {
            let cfg = load(cli)?;
            with_seed(&cfg, &mut opts);
            cli::cmd_induce(&cfg, chi, &opts)
        }
        Command::Survey => {
            let corpus = match &cli.config {
                Some(p) => cli::load_corpus(&CorpusConfig::load(p)?)?,
                None => cli::default_corpus(),
            };
            cli::cmd_survey(&corpus, &opts)
        }
        Command::Selftest => {
            let level = match cli.level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            cli::cmd_selftest(level, &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if let Some(path) = &cli.out {
                let body = serde_json::to_string_pretty(&out.report).expect("serializable") + "\n";
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            out.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    eprintln!("elapsed: {:.2?}", start.elapsed());
    ExitCode::from(code as u8)
}
