//! The `gwalk` command line.
//!
//! ```text
//! gwalk gb      --input PATH [--ordering SPEC]
//! gwalk walk    --input PATH [--start SPEC] [--target SPEC] [--algorithm standard|generic] [-v LEVEL]
//! gwalk fan-svg --input PATH [--start SPEC] [--target SPEC] [--svg-out PATH]
//! gwalk bench   [SYSTEM|PATH ...] [--field QQ|Fp|both] [--prime P] [--algorithm ALG ...]
//! ```
//!
//! Orderings are names stored in the input file, the built-in names `lex`,
//! `degrevlex`, `elim-sigma` and `elim-tau`, or inline JSON specs.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use gwalk_core::bench::{format_report, run_bench, BenchAlgorithm, BenchOptions};
use gwalk_core::groebner::buchberger;
use gwalk_core::io::{load_ideal, IdealFile};
use gwalk_core::svg::fan_svg;
use gwalk_core::systems::BENCH_PRIME;
use gwalk_core::walk::{generic_walk, standard_walk, standard_walk_recorded};
use gwalk_core::{CoefficientField, Error, MarkedGroebnerBasis, TermOrdering};

#[derive(Parser, Debug)]
#[command(name = "gwalk", version, about = "Gröbner bases and Gröbner walk basis conversion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a reduced Gröbner basis with Buchberger's algorithm.
    Gb {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "lex")]
        ordering: String,
        #[arg(long)]
        no_time: bool,
    },
    /// Convert the start basis into the target basis by a Gröbner walk.
    Walk {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "degrevlex")]
        start: String,
        #[arg(long, default_value = "lex")]
        target: String,
        #[arg(long, value_enum, default_value_t = WalkAlgorithm::Standard)]
        algorithm: WalkAlgorithm,
        /// 1 prints the walk trace, 2 adds the basis size after each step.
        #[arg(short = 'v', long = "verbose", default_value_t = 0)]
        verbosity: u8,
        #[arg(long)]
        no_time: bool,
    },
    /// Draw the standard walk of a two-variable ideal as SVG.
    FanSvg {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "degrevlex")]
        start: String,
        #[arg(long, default_value = "lex")]
        target: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        svg_out: Option<PathBuf>,
    },
    /// Run the benchmark table.
    Bench {
        /// System names (`cyclic5`, `katsura6`) or ideal files.
        systems: Vec<String>,
        #[arg(long, value_enum, default_value_t = FieldChoice::Fp)]
        field: FieldChoice,
        #[arg(long, default_value_t = BENCH_PRIME)]
        prime: u64,
        #[arg(long = "algorithm", value_enum)]
        algorithms: Vec<BenchAlgorithmArg>,
        /// Per-job time limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        no_time: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum WalkAlgorithm {
    Standard,
    Generic,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FieldChoice {
    #[value(name = "QQ", alias = "qq")]
    Qq,
    #[value(name = "Fp", alias = "fp")]
    Fp,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BenchAlgorithmArg {
    Standard,
    Generic,
    Buchberger,
}

impl From<BenchAlgorithmArg> for BenchAlgorithm {
    fn from(a: BenchAlgorithmArg) -> Self {
        match a {
            BenchAlgorithmArg::Standard => BenchAlgorithm::Standard,
            BenchAlgorithmArg::Generic => BenchAlgorithm::Generic,
            BenchAlgorithmArg::Buchberger => BenchAlgorithm::Buchberger,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status: 0 on success, 1 on a computation or input error, 2 on a
/// usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            1
        }
    }
}

fn basis_text(g: &MarkedGroebnerBasis, ord: &TermOrdering, vars: &[String]) -> String {
    format!(
        "Gröbner basis with elements\n{}with respect to the ordering\n  {}\n",
        g.format_with(ord),
        ord.describe(vars)
    )
}

fn time_line(d: Duration) -> String {
    format!("Time: {:.3} s\n", d.as_secs_f64())
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Error> {
    let mut text = String::new();
    match cmd {
        Command::Gb { input, ordering, no_time } => {
            let file = load_ideal(&input)?;
            let ord = file.resolve_ordering(&ordering)?;
            let t = Instant::now();
            let g = buchberger(&file.ideal, &ord)?;
            let elapsed = t.elapsed();
            text += &basis_text(&g, &ord, &file.ideal.ring().vars);
            if !no_time {
                text += &time_line(elapsed);
            }
        }
        Command::Walk { input, start, target, algorithm, verbosity, no_time } => {
            let file = load_ideal(&input)?;
            let (start, target) = orderings(&file, &start, &target)?;
            let t = Instant::now();
            let (g, trace) = match algorithm {
                WalkAlgorithm::Standard => standard_walk(&file.ideal, &start, &target)?,
                WalkAlgorithm::Generic => generic_walk(&file.ideal, &start, &target)?,
            };
            let elapsed = t.elapsed();
            if verbosity >= 1 {
                text += &trace.to_string();
            }
            if verbosity >= 2 {
                let sizes: Vec<String> = trace.basis_sizes.iter().map(|s| s.to_string()).collect();
                text += &format!("Basis sizes: [{}]\n", sizes.join(", "));
            }
            text += &basis_text(&g, &target, &file.ideal.ring().vars);
            if !no_time {
                text += &time_line(elapsed);
            }
        }
        Command::FanSvg { input, start, target, svg_out } => {
            let file = load_ideal(&input)?;
            let (start, target) = orderings(&file, &start, &target)?;
            let run = standard_walk_recorded(&file.ideal, &start, &target)?;
            let svg = fan_svg(&run.trace, &run.bases, &file.ideal.ring().vars)?;
            match svg_out {
                Some(path) => {
                    fs::write(&path, svg).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
                    text += &format!("wrote {}\n", path.display());
                }
                None => text = svg,
            }
        }
        Command::Bench { systems, field, prime, algorithms, timeout, parallel, no_time } => {
            let fp = CoefficientField::prime(prime)?;
            let fields = match field {
                FieldChoice::Qq => vec![CoefficientField::Rationals],
                FieldChoice::Fp => vec![fp],
                FieldChoice::Both => vec![CoefficientField::Rationals, fp],
            };
            let algorithms: Vec<BenchAlgorithm> = if algorithms.is_empty() {
                BenchAlgorithm::ALL.to_vec()
            } else {
                algorithms.into_iter().map(Into::into).collect()
            };
            let timeout = match timeout {
                Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
                Some(s) => return Err(Error::InvalidArgument(format!("timeout must be positive, got {}", s))),
                None => None,
            };
            let reports = run_bench(&systems, &fields, &algorithms, &BenchOptions { timeout, parallel })?;
            text += &format_report(&reports, !no_time);
        }
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn orderings(file: &IdealFile, start: &str, target: &str) -> Result<(TermOrdering, TermOrdering), Error> {
    Ok((file.resolve_ordering(start)?, file.resolve_ordering(target)?))
}
