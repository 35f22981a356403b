use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod bench;
mod routes;
mod verify;

/// Exit statuses shared by every subcommand.
pub const EXIT_UNEXPECTED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    pub fn internal(message: impl Display) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.to_string(),
        }
    }
}

impl From<krawkit::Error> for Failure {
    fn from(e: krawkit::Error) -> Self {
        if e.is_internal() {
            Failure::internal(e)
        } else {
            Failure::usage(e)
        }
    }
}

pub type Outcome = std::result::Result<(), Failure>;

#[derive(Parser)]
#[command(
    name = "krawkit",
    version,
    about = "Exact Krawtchouk, binomial and Catalan computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity by a chosen route.
    Eval(EvalArgs),
    /// Print the full matrix K_p^n(x), 0 <= p, x <= n.
    Table(TableArgs),
    /// Run identity sweeps and stream one JSON report per point.
    Verify(verify::VerifyArgs),
    /// Time two routes against each other, one csv row per index.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Kraw,
    Catalan,
    Central,
    Binom,
    Motzkin,
}

#[derive(clap::Args)]
struct EvalArgs {
    quantity: Quantity,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    /// Chain depths for the general reduction; default to the largest powers of two dividing n and x.
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long, default_value = "direct")]
    route: String,
    /// Print every chain of the general reduction (Krawtchouk values only).
    #[arg(long)]
    explain: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Largest order accepted.
    #[arg(long, default_value_t = 256)]
    cap: i64,
}

fn need(name: &str, v: Option<i64>) -> Result<i64, Failure> {
    v.ok_or_else(|| Failure::usage(format!("--{name} is required")))
}

/// Reads `KRAWKIT_TERM_CAP`, the number of chains kept by `--explain`.
fn term_cap() -> Result<usize, Failure> {
    match std::env::var("KRAWKIT_TERM_CAP") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::usage(format!("KRAWKIT_TERM_CAP must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(krawkit::reduction::DEFAULT_TERM_CAP),
    }
}

fn eval(args: EvalArgs) -> Outcome {
    if args.explain {
        if !matches!(args.quantity, Quantity::Kraw) || !matches!(args.route.as_str(), "direct" | "general") {
            return Err(Failure::usage("--explain applies to kraw with the general route"));
        }
        let (n, p, x) = (need("n", args.n)?, need("p", args.p)?, need("x", args.x)?);
        let params = routes::general_params(n, p, x, args.r, args.s)?;
        let trace = routes::kraw_trace(params, term_cap()?)?;
        for term in &trace.terms {
            let indices: Vec<String> = term.indices.iter().map(|i| i.to_string()).collect();
            println!(
                "({}) 2^{} * {} * {} = {}",
                indices.join(","),
                term.power,
                term.coefficient_product,
                term.leaf_value,
                term.value()
            );
        }
        if trace.truncated {
            println!("... {} of {} chains shown", trace.terms.len(), trace.term_count);
        }
        println!("chains: {}", trace.term_count);
        println!("total: {}", trace.total);
        return Ok(());
    }
    let route = args.route.as_str();
    let value = match args.quantity {
        Quantity::Kraw => {
            let (n, p, x) = (need("n", args.n)?, need("p", args.p)?, need("x", args.x)?);
            if route == "general" && (args.r.is_some() || args.s.is_some()) {
                routes::kraw_trace(routes::general_params(n, p, x, args.r, args.s)?, 0)?.total
            } else {
                routes::kraw(route, n, p, x)?
            }
        }
        Quantity::Catalan => routes::catalan_by(route, need("n", args.n)?)?,
        Quantity::Central => routes::central_by(route, need("m", args.m.or(args.n))?)?,
        Quantity::Binom => routes::binom(route, need("n", args.n)?, need("k", args.k)?)?,
        Quantity::Motzkin => routes::motzkin_by(route, need("n", args.n)?)?,
    };
    println!("{value}");
    Ok(())
}

fn table(args: TableArgs) -> Outcome {
    if args.n < 0 || args.n > args.cap {
        return Err(Failure::usage(format!(
            "order must lie in 0..={}, got {}",
            args.cap, args.n
        )));
    }
    let table = krawkit::build_table(args.n);
    match args.format {
        TableFormat::Csv => print!("{}", table.to_csv()),
        TableFormat::Json => println!("{}", table.to_json()),
    }
    Ok(())
}

/// Sizes the global worker pool from `KRAWKIT_THREADS`.
fn configure_threads() -> Outcome {
    let Ok(v) = std::env::var("KRAWKIT_THREADS") else {
        return Ok(());
    };
    let threads: usize = match v.parse() {
        Ok(t) if t >= 1 => t,
        _ => {
            return Err(Failure::usage(format!(
                "KRAWKIT_THREADS must be a positive integer, got {v:?}"
            )))
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(Failure::internal)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Eval(a) => eval(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify::run(a),
        Command::Bench(a) => bench::run(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("krawkit: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
