use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hosoya::report::{self, CommandError, Report, Verification};
use hosoya::{FamilySpec, SrgParams, DEFAULT_MAX_VERTICES};

/// Hosoya polynomial, Wiener and hyper-Wiener indices of distance-regular
/// graphs from intersection arrays, checked against brute-force BFS.
#[derive(Parser, Debug)]
#[command(name = "hosoya", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Refuse to build graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form invariants from an intersection array {b_0..b_{D-1}; c_1..c_D}.
    Array {
        /// b_0,...,b_{D-1}
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        b: Vec<i64>,
        /// c_1,...,c_D
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        c: Vec<i64>,
        /// Expected graph order; an error if the array implies a different one.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Closed-form invariants of a strongly regular graph SRG(n,k,lambda,mu).
    Srg {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(allow_negative_numbers = true)]
        lambda: i64,
        #[arg(allow_negative_numbers = true)]
        mu: i64,
    },
    /// Compare the closed form with all-pairs BFS on a concrete graph.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VerifyArgs {
    /// Built-in family, e.g. hypercube:6, petersen, hamming:2,3.
    #[arg(long)]
    family: Option<FamilySpec>,
    /// Edge-list file: one "u v" pair per line, '#' comments.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Vertex count for --file; defaults to one more than the largest index.
    #[arg(long, requires = "file")]
    vertices: Option<usize>,
}

fn run(cli: &Cli) -> Result<Report, CommandError> {
    match &cli.command {
        Command::Array { b, c, n } => report::array_report(b, c, n.map(Into::into)),
        Command::Srg { n, k, lambda, mu } => report::srg_report(SrgParams::new(*n, *k, *lambda, *mu)),
        Command::Verify(args) => match (&args.family, &args.file) {
            (Some(spec), _) => report::verify_family(spec, cli.max_vertices),
            (None, Some(path)) => report::verify_file(path, args.vertices, cli.max_vertices),
            (None, None) => unreachable!("clap enforces one input"),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
            };
            print!("{out}");
            if report.verification == Verification::Mismatch {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
