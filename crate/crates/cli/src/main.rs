mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use erogers::Rational;

use report::RunReport;

#[derive(Parser, Debug)]
#[command(
    name = "erogers",
    version,
    about = "Erdős–Rogers computations on uniform hypergraphs"
)]
struct Cli {
    /// Worker threads for parallel searches (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// k-shadow of a hypergraph.
    Shadow {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether G is homomorphic to F.
    Hom { g: PathBuf, f: PathBuf },
    /// Decide whether G is k-shadow-homomorphic to F.
    ShadowHom {
        g: PathBuf,
        f: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Decide k-tight connectivity.
    Tight {
        g: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Search F-iterated blowups for a copy of G.
    BlowupMember {
        g: PathBuf,
        f: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_steps: usize,
    },
    /// α_F as an exact rational.
    Alpha { f: PathBuf },
    /// β_F as an exact rational.
    Beta { f: PathBuf },
    /// Whether β_F is attained by the whole 2-shadow.
    Concluding { f: PathBuf },
    /// Canonical form and labeling.
    Canon { file: PathBuf },
    /// Count copies of a pattern in a host.
    Count { pattern: PathBuf, host: PathBuf },
    /// Write a standard hypergraph.
    Build {
        #[arg(value_enum)]
        family: Family,
        #[arg(short)]
        r: usize,
        /// Vertex count for `complete`, edge count for `simplex`.
        #[arg(short)]
        s: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random G-free construction with a certificate.
    Construct(ConstructArgs),
    /// Look for a copy of G in H; exit 0 when H is G-free.
    VerifyGfree { h: PathBuf, g: PathBuf },
    /// Fraction of w-subsets of H that span a copy of F.
    Cover {
        h: PathBuf,
        f: PathBuf,
        #[arg(short)]
        w: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check every w-subset instead of sampling.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Supersaturation extraction of an F-iterated blowup copy from H.
    Extract {
        h: PathBuf,
        f: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        steps: Vec<usize>,
    },
    /// Largest F-free induced subgraph of H.
    Maxfree {
        h: PathBuf,
        f: PathBuf,
        #[arg(long)]
        packing: bool,
    },
    /// One representative per class of G-free r-graphs on n vertices.
    Enumerate {
        g: PathBuf,
        #[arg(short)]
        n: usize,
        /// Write the classes as a blank-line separated .hg stream.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact f_{F,G}(n) by enumeration.
    FExact {
        f: PathBuf,
        g: PathBuf,
        #[arg(short)]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Complete,
    Simplex,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Construction {
    Coloring,
    Labeling,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: Construction,
    #[arg(short)]
    n: usize,
    #[arg(short = 'F', long = "pattern")]
    f: PathBuf,
    /// Shadow order, labeling only.
    #[arg(short)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "1")]
    c1: Rational,
    #[arg(long, default_value = "1")]
    c2: Rational,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    cert: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: cannot start {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let name = command_name(&cli.command);
    let start = Instant::now();
    match commands::run(cli.command) {
        Ok(out) => {
            let report = RunReport {
                command: name.to_string(),
                inputs: out.inputs,
                result: out.result,
                decision: out.decision,
                seed: out.seed,
                wall_time_ms: start.elapsed().as_millis() as u64,
            };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            // A closed pipe downstream is not an error worth a panic.
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(if report.decision == Some(false) { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Shadow { .. } => "shadow",
        Command::Hom { .. } => "hom",
        Command::ShadowHom { .. } => "shadow-hom",
        Command::Tight { .. } => "tight",
        Command::BlowupMember { .. } => "blowup-member",
        Command::Alpha { .. } => "alpha",
        Command::Beta { .. } => "beta",
        Command::Concluding { .. } => "concluding",
        Command::Canon { .. } => "canon",
        Command::Count { .. } => "count",
        Command::Build { .. } => "build",
        Command::Construct(_) => "construct",
        Command::VerifyGfree { .. } => "verify-gfree",
        Command::Cover { .. } => "cover",
        Command::Extract { .. } => "extract",
        Command::Maxfree { .. } => "maxfree",
        Command::Enumerate { .. } => "enumerate",
        Command::FExact { .. } => "f-exact",
    }
}
