use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

mod commands;

#[derive(Parser, Debug)]
#[command(name = "posetlab", version, about = "Persistence modules over finite posets")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for per-interval jobs (default: all cores).
    #[arg(long, global = true, env = "POSETLAB_THREADS")]
    pub threads: Option<usize>,

    /// Field characteristic for computations and generated modules.
    #[arg(long, global = true, default_value_t = 2)]
    pub field: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a poset (and optionally a module over it) and summarise it.
    Check { poset: PathBuf, module: Option<PathBuf> },
    /// List the intervals of a poset in canonical order.
    Intervals { poset: PathBuf },
    /// Interval resolution global dimension.
    Gldim {
        poset: PathBuf,
        #[arg(long, value_enum, default_value_t = Via::Engine)]
        via: Via,
        /// Also compute the opposite poset and require equality.
        #[arg(long)]
        op: bool,
        /// Include wall-clock timings in JSON output.
        #[arg(long)]
        timings: bool,
    },
    /// Minimal interval cover of a module.
    Cover { poset: PathBuf, module: PathBuf },
    /// Interval resolution of a module.
    Resolve {
        poset: PathBuf,
        module: PathBuf,
        /// Give up beyond this many cover steps (default: total dim + 2).
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Apply Res, Ind, Cont or Coind for the interior system `--sub`.
    Functor {
        #[arg(value_enum)]
        which: Functor,
        poset: PathBuf,
        module: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<String>,
    },
    /// Floor map and fibers of the interior system `--sub`.
    Interior {
        poset: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<String>,
    },
    /// Whether the interior system `--sub` is aligned, with ν when it is.
    Aligned {
        poset: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<String>,
    },
    /// Remove ℓ_4 … ℓ_n from an A_n segment.
    Contract {
        poset: PathBuf,
        /// Segment labels in path order.
        #[arg(
            long,
            value_delimiter = ',',
            conflicts_with = "auto",
            required_unless_present = "auto"
        )]
        segment: Vec<String>,
        /// Contract qualifying segments until none is left.
        #[arg(long)]
        auto: bool,
    },
    /// Reverse every cover at a sink or source.
    Reflect {
        poset: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Split off interval summands.
    Decompose { poset: PathBuf, module: PathBuf },
    /// Graphviz rendering of the Hasse diagram.
    Dot { poset: PathBuf },
    /// Expand a diagram with double edges into a poset.
    Expand {
        diagram: PathBuf,
        /// Segment size for an edge, as `index=m`.
        #[arg(long = "len", value_parser = parse_len)]
        lengths: Vec<(usize, usize)>,
    },
    /// Seeded random inputs for experiments and tests.
    Sample {
        #[command(subcommand)]
        what: Sample,
    },
}

#[derive(Subcommand, Debug)]
pub enum Sample {
    /// A random connected poset.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A random tree poset.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A random module over the given poset.
    Module {
        poset: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    /// Maximum of intresdim Γ_S over all intervals.
    Engine,
    /// `#leaves − 2` (trees only).
    Formula,
    /// Contract qualifying segments first.
    Contract,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Functor {
    Res,
    Ind,
    Cont,
    Coind,
}

fn parse_len(s: &str) -> Result<(usize, usize), String> {
    let (i, m) = s.split_once('=').ok_or("expected index=m")?;
    Ok((
        i.trim().parse().map_err(|e| format!("{e}"))?,
        m.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| commands::run(&cli)) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialise") + "\n"
            } else {
                out.text
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
