use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use qes::commands::{self, CliError};
use qes_core::decompose::DEFAULT_CAP;
use qes_core::superops::DEFAULT_DEGREE_CAP;

#[derive(Parser)]
#[command(name = "qes", version, about = "Exact checks for module-preserving differential operators")]
struct Cli {
    /// Print the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Bracket rounds for closures, or largest module dimension for enumeration.
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Target {
    /// Generator family: sl2(n), g11(n,m), g15(n), g24(r,p).
    #[arg(long)]
    family: Option<String>,
    /// Module: P(n), R(n,m), T(n), S(r,p[,q]).
    #[arg(long)]
    module: Option<String>,
    /// Superalgebra family: sR(n,m,D,G), sT(n,D), sS(r,p[,q]).
    #[arg(long = "super")]
    sup: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Relations,
    Closure,
    Counts,
    Preservation,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Basis,
    Preservers,
    MaximalLength,
}

#[derive(Subcommand)]
enum Command {
    /// Check relations, closure, counting formulas or preservation.
    Verify {
        kind: VerifyKind,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Express an operator in the generators modulo the kernel.
    Decompose {
        operator: String,
        #[command(flatten)]
        target: Target,
    },
    /// List basis words, preservers or maximal-length monomials.
    Enumerate {
        kind: EnumerateKind,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
    },
    /// Run every verifier on small cases plus a seeded random sweep.
    ReportAll,
}

fn run(cli: &Cli) -> commands::CliResult {
    let rounds = cli.cap.unwrap_or(DEFAULT_DEGREE_CAP);
    let dim_cap = cli.cap.map_or(DEFAULT_CAP, |c| c as usize);
    let usage = |m: &str| CliError::Usage(m.to_string());
    match &cli.command {
        Command::Verify { kind, target: t, k } => {
            let (f, m, s) = (t.family.as_deref(), t.module.as_deref(), t.sup.as_deref());
            match kind {
                VerifyKind::Relations => commands::verify_relations(f.ok_or_else(|| usage("missing --family"))?),
                VerifyKind::Closure => commands::verify_closure(f, s, rounds),
                VerifyKind::Counts => commands::verify_counts(f, m, s, *k, dim_cap),
                VerifyKind::Preservation => commands::verify_preservation(f, m, s),
            }
        }
        Command::Decompose { operator, target: t } => {
            commands::decompose(operator, t.family.as_deref(), t.module.as_deref(), t.sup.as_deref())
        }
        Command::Enumerate { kind, target: t, k, l } => match kind {
            EnumerateKind::MaximalLength => commands::enumerate_maximal(
                t.family.as_deref().ok_or_else(|| usage("missing --family"))?,
                l.ok_or_else(|| usage("missing --l"))?,
            ),
            EnumerateKind::Preservers => commands::enumerate_preserver_ops(
                t.module.as_deref(),
                t.sup.as_deref(),
                k.ok_or_else(|| usage("missing --k"))?,
                dim_cap,
            ),
            EnumerateKind::Basis => {
                commands::enumerate_basis(t.family.as_deref(), t.module.as_deref(), t.sup.as_deref(), *k)
            }
        },
        Command::ReportAll => commands::report_all(cli.seed, rounds),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.timing_ms = start.elapsed().as_millis() as u64;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Core(qes_core::Error::CapExceeded { .. }) = e {
                eprintln!("hint: raise the limit with --cap");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
