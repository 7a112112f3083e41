use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use hombound::limits::DEFAULT_MAX_EVALUATIONS;
use hombound::ExactRational;

use crate::error::CliError;

pub const GUARD_ENV: &str = "HOMBOUND_GUARD_EVALS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// h_H(G) for every (H, G) pair
    Hom,
    /// t_H(G) = h_H(G) / N^|H|
    Density,
    /// t_H(G) >= p^m; with --r also the tensor-power checks up to G^r
    CheckSidorenko,
    /// Good/bad vertex audit of each G for pattern size --n
    Drc,
    /// Apex lower bound with per-anchor embedding diagnostics
    EmbedVerify,
    /// h_H(F×G) = h_H(F)·h_H(G) for every pair F, G of host graphs
    Tensor,
    /// Sweep all apex graphs up to --max-vertices against the host corpus
    Search,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Hom => "hom",
            Command::Density => "density",
            Command::CheckSidorenko => "check-sidorenko",
            Command::Drc => "drc",
            Command::EmbedVerify => "embed-verify",
            Command::Tensor => "tensor",
            Command::Search => "search",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Seeded random host corpus: `COUNT` graphs `G(N, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub vertices: usize,
    pub p: ExactRational,
    pub count: usize,
}

impl std::str::FromStr for RandomSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').collect();
        let [n, p, count] = parts.as_slice() else {
            return Err(format!("expected N,P_NUM/P_DEN,COUNT, got {s:?}"));
        };
        let (num, den) = p
            .split_once('/')
            .ok_or_else(|| format!("probability {p:?} must be written P_NUM/P_DEN"))?;
        let num: u64 = num
            .trim()
            .parse()
            .map_err(|e| format!("bad numerator {num:?}: {e}"))?;
        let den: u64 = den
            .trim()
            .parse()
            .map_err(|e| format!("bad denominator {den:?}: {e}"))?;
        let p = ExactRational::ratio(num, den).map_err(|e| e.to_string())?;
        if p > ExactRational::one() {
            return Err(format!("probability {num}/{den} exceeds 1"));
        }
        Ok(RandomSpec {
            vertices: n
                .trim()
                .parse()
                .map_err(|e| format!("bad vertex count {n:?}: {e}"))?,
            p,
            count: count
                .trim()
                .parse()
                .map_err(|e| format!("bad count {count:?}: {e}"))?,
        })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hombound",
    version,
    about = "Exact homomorphism counts and apex-graph bound checks"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Pattern graph as a graph6 string (repeatable)
    #[arg(long = "h-graph6", value_name = "S")]
    pub h_graph6: Vec<String>,
    /// Host graph as a graph6 string (repeatable)
    #[arg(long = "g-graph6", value_name = "S")]
    pub g_graph6: Vec<String>,
    /// Pattern graphs: graph6 stream or edge list
    #[arg(long = "h-file", value_name = "P")]
    pub h_file: Option<PathBuf>,
    /// Host graphs: graph6 stream or edge list
    #[arg(long = "g-file", value_name = "P")]
    pub g_file: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Restrict drc per-vertex output to this tuple length
    #[arg(long)]
    pub k: Option<usize>,
    /// Largest tensor power for check-sidorenko
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long = "max-vertices")]
    pub max_vertices: Option<usize>,
    /// Random host corpus N,P_NUM/P_DEN,COUNT
    #[arg(long, value_name = "N,P_NUM/P_DEN,COUNT")]
    pub random: Option<RandomSpec>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "P")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Stop at the first lemma violation
    #[arg(long)]
    pub strict: bool,
    /// Omit the generation timestamp
    #[arg(long = "no-timestamp")]
    pub no_timestamp: bool,
    /// Cap on map evaluations per count
    #[arg(long, value_name = "EVALS", env = GUARD_ENV)]
    pub guard: Option<u64>,
}

/// Validated run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub h_graph6: Vec<String>,
    pub g_graph6: Vec<String>,
    pub h_file: Option<PathBuf>,
    pub g_file: Option<PathBuf>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub max_vertices: Option<usize>,
    pub random: Option<RandomSpec>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub strict: bool,
    pub no_timestamp: bool,
    pub guard: u64,
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, CliError> {
        let guard = args.guard.unwrap_or(DEFAULT_MAX_EVALUATIONS);
        if guard == 0 {
            return Err(CliError::usage("--guard must be positive"));
        }
        let has_h = !args.h_graph6.is_empty() || args.h_file.is_some();
        let has_g = !args.g_graph6.is_empty() || args.g_file.is_some() || args.random.is_some();
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(CliError::usage(format!(
                    "{} requires {what}",
                    args.command.name()
                )))
            }
        };
        match args.command {
            Command::Hom
            | Command::Density
            | Command::CheckSidorenko
            | Command::EmbedVerify
            | Command::Tensor => {
                need(has_h, "a pattern graph (--h-graph6 or --h-file)")?;
                need(has_g, "a host graph (--g-graph6, --g-file or --random)")?;
            }
            Command::Drc => {
                need(has_g, "a host graph (--g-graph6, --g-file or --random)")?;
                need(args.n.is_some_and(|n| n >= 1), "--n >= 1")?;
                if let (Some(k), Some(n)) = (args.k, args.n) {
                    need((1..=n).contains(&k), "--k within 1..=n")?;
                }
            }
            Command::Search => {
                need(args.max_vertices.is_some(), "--max-vertices")?;
                need(has_g, "a host corpus (--g-graph6, --g-file or --random)")?;
            }
        }
        if args.r == Some(0) {
            return Err(CliError::usage("--r must be at least 1"));
        }
        Ok(RunConfig {
            command: args.command,
            h_graph6: args.h_graph6,
            g_graph6: args.g_graph6,
            h_file: args.h_file,
            g_file: args.g_file,
            n: args.n,
            k: args.k,
            r: args.r,
            max_vertices: args.max_vertices,
            random: args.random,
            seed: args.seed,
            out: args.out,
            format: args.format,
            strict: args.strict,
            no_timestamp: args.no_timestamp,
            guard,
        })
    }
}
