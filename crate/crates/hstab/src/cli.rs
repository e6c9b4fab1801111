//! Argument parsing and dispatch. `run` returns the process exit code:
//! 0 on success, 1 when `verify all` finds a failing check, 2 on bad input
//! or a computation error. Errors are written to stderr as one JSON object.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hstab_core::arith::RankMode;
use hstab_core::fi::{
    build_m, build_m_specht, degrees, is_uniformly_stable, multiplicity_table, noetherian_experiment,
    shift_decompose_mm, weight,
};
use hstab_core::specht::Decomposer;
use hstab_core::{HeckeElement, Partition};
use serde_json::json;

use crate::format::{multiplicity_csv, read_sequence, sequence_to_string};
use crate::report;
use crate::verify::{run_all, VerifyConfig};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "hstab",
    version,
    about = "Stability computations for consistent sequences of Hecke modules"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Debug, Args)]
struct Options {
    /// Refuse specialized rank computations.
    #[arg(long, global = true)]
    strict: bool,
    /// Rank arithmetic.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Evaluation points for specialized rank.
    #[arg(long, global = true, default_value_t = 3)]
    points: usize,
    /// Seed for the specialization points.
    #[arg(long = "rank-seed", global = true, default_value_t = 0)]
    rank_seed: u64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Specialized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "Mm")]
    Mm,
    #[value(name = "M-specht")]
    MSpecht,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hecke algebra arithmetic.
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Consistent sequences.
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Acceptance checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
enum HeckeCommand {
    /// Product of two generator words in the T-basis.
    Mult {
        #[arg(long)]
        n: usize,
        /// Generator indices separated by spaces or commas, e.g. "1 2 1".
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
}

#[derive(Debug, Subcommand)]
enum SeqCommand {
    /// Build M(m) or M(S^lambda) and serialize it.
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        nmax: usize,
    },
    /// Injective, surjective and stability degrees of the coinvariant maps.
    Degrees {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        amax: usize,
    },
    Weight {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Multiplicities of irreducibles, indexed by unpadded partitions.
    Multiplicities {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Uniform representation stability within the truncation.
    CheckStable {
        #[arg(long = "in")]
        input: PathBuf,
        /// Coinvariant range for the degree bound; defaults to min(2, n_max - 1).
        #[arg(long)]
        amax: Option<usize>,
    },
    /// Splitting of the shifted free sequence S_{+a} M(m).
    ShiftDecompose {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Random finitely seeded subsequences of M(m).
    Noetherian {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Run every acceptance check; exit 1 if any fails.
    All {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long = "stable-nmax", default_value_t = 7)]
        stable_nmax: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Print one line per check on stderr.
        #[arg(long)]
        progress: bool,
    },
}

pub fn parse_word(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Input(format!("bad generator index {t:?}")))
        })
        .collect()
}

fn check_nmax(n_max: usize) -> Result<(), CliError> {
    if n_max == 0 {
        return Err(CliError::Input("n_max must be at least 1".into()));
    }
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Output {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Output {
                path: "stdout".into(),
                source,
            })
        }
    }
}

impl Options {
    fn rank_mode(&self) -> Result<RankMode, CliError> {
        match self.mode {
            Mode::Exact => Ok(RankMode::Exact),
            Mode::Specialized if self.strict => {
                Err(CliError::Input("specialized rank is not allowed with --strict".into()))
            }
            Mode::Specialized => Ok(RankMode::Specialized {
                count: self.points,
                seed: self.rank_seed,
            }),
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    let opts = &cli.options;
    let mode = opts.rank_mode()?;
    let out = opts.out.as_deref();
    let csv_ok = matches!(cli.command, Command::Seq(SeqCommand::Multiplicities { .. }));
    if opts.format == Format::Csv && !csv_ok {
        return Err(CliError::Input(
            "CSV output is only available for multiplicities".into(),
        ));
    }
    match cli.command {
        Command::Hecke(HeckeCommand::Mult { n, left, right }) => {
            let x = HeckeElement::from_word(n, &parse_word(&left)?)?;
            let y = HeckeElement::from_word(n, &parse_word(&right)?)?;
            emit(out, &report::to_pretty(&report::hecke_element(&x.mult(&y)?)))
        }
        Command::Seq(cmd) => seq(cmd, mode, opts.format, out),
        Command::Verify(VerifyCommand::All {
            nmax,
            stable_nmax,
            trials,
            seed,
            progress,
        }) => {
            check_nmax(nmax)?;
            let cfg = VerifyConfig {
                n_max: nmax,
                stable_n_max: stable_nmax,
                trials,
                seed,
            };
            let report = run_all(&cfg, |r| {
                if progress {
                    eprintln!("{:>2} {} {}", r.id, if r.passed { "pass" } else { "FAIL" }, r.name);
                }
            });
            emit(out, &report.to_json())?;
            if report.passed {
                Ok(())
            } else {
                Err(CliError::Verification)
            }
        }
    }
}

fn seq(cmd: SeqCommand, mode: RankMode, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let dec = Decomposer::new();
    match cmd {
        SeqCommand::Build { kind, m, lambda, nmax } => {
            check_nmax(nmax)?;
            let v = match (kind, m, lambda) {
                (Kind::Mm, Some(m), None) => build_m(m, nmax)?,
                (Kind::MSpecht, None, Some(l)) => build_m_specht(&l.parse::<Partition>()?, nmax)?,
                (Kind::Mm, ..) => return Err(CliError::Input("--kind Mm takes --m and no --lambda".into())),
                (Kind::MSpecht, ..) => return Err(CliError::Input("--kind M-specht takes --lambda and no --m".into())),
            };
            emit(out, &sequence_to_string(&v.sequence))
        }
        SeqCommand::Degrees { input, amax } => {
            let v = read_sequence(&input)?;
            let d = degrees(&v, amax, mode)?;
            emit(out, &report::to_pretty(&report::degree_report(v.label(), &d)))
        }
        SeqCommand::Weight { input } => {
            let v = read_sequence(&input)?;
            let w = weight(&v, &dec)?;
            emit(out, &report::to_pretty(&report::weight(v.label(), v.n_max(), w)))
        }
        SeqCommand::Multiplicities { input } => {
            let v = read_sequence(&input)?;
            let t = multiplicity_table(&v, &dec)?;
            let text = match format {
                Format::Json => report::to_pretty(&report::multiplicities(v.label(), &t)),
                Format::Csv => multiplicity_csv(&t),
            };
            emit(out, &text)
        }
        SeqCommand::CheckStable { input, amax } => {
            let v = read_sequence(&input)?;
            let amax = amax.or(v.n_max().checked_sub(1).map(|top| top.min(2)));
            let verdict = is_uniformly_stable(&v, amax, mode, &dec)?;
            emit(out, &report::to_pretty(&report::stability(v.label(), &verdict)))
        }
        SeqCommand::ShiftDecompose { m, a, nmax } => {
            check_nmax(nmax)?;
            let r = shift_decompose_mm(m, a, nmax)?;
            emit(out, &report::to_pretty(&report::shift_decomposition(&r)))
        }
        SeqCommand::Noetherian { m, trials, seed, nmax } => {
            check_nmax(nmax)?;
            let r = noetherian_experiment(m, trials, seed, nmax)?;
            emit(out, &report::to_pretty(&report::noetherian(&r)))
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return 0;
        }
        Err(e) => {
            let body = json!({"error": "usage", "message": e.to_string().trim_end()});
            eprintln!("{body}");
            return 2;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            let body = json!({"error": e.kind(), "message": e.to_string()});
            eprintln!("{body}");
            e.exit_code()
        }
    }
}
