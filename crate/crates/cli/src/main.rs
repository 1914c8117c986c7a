use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zerotwist::contact::StructureCandidate;
use zerotwist::fullpath::DEFAULT_CAP;
use zerotwist::plumbing::SeifertData;
use zerotwist_cli::{
    cmd_classify, cmd_dual, cmd_fullpath, cmd_graph, cmd_magic_c, cmd_report, parse_candidate,
    parse_range, parse_seifert, reproduce, xi_k, xi_k_data, CliError, CliResult, FullPathArgs,
    Output,
};

/// Lattice computations for contact structures on small Seifert fibred spaces.
#[derive(Parser)]
#[command(name = "zerotwist", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpaceArgs {
    /// Seifert invariants, e.g. "-1;3/8,8/13,1/69".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "k")]
    seifert: Option<String>,
    /// Use S³_k(T(8,13)) with legs ordered 8/13, 3/8, 1/(104-k).
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
}

impl SpaceArgs {
    fn data(&self) -> CliResult<SeifertData> {
        match (&self.seifert, self.k) {
            (Some(s), None) => parse_seifert(s),
            (None, Some(k)) => xi_k_data(k),
            _ => Err(CliError::Usage("give one of --seifert or --k".into())),
        }
    }
}

#[derive(Args)]
struct CandidateArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Rotation vector on G in grouped form, e.g. "1|-2,-1,-1|1,-1|67".
    #[arg(long, allow_hyphen_values = true)]
    rotations: Option<String>,
}

impl CandidateArgs {
    /// `--k` alone means the structure ξ_k.
    fn candidate(&self) -> CliResult<StructureCandidate> {
        match (&self.rotations, &self.space.seifert, self.space.k) {
            (None, None, Some(k)) => xi_k(k),
            (Some(r), _, _) => parse_candidate(&self.space.data()?, r),
            _ => Err(CliError::Usage(
                "give --rotations with --seifert, or --k alone".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lemma6,
    Theorem2Table,
    Conjugates,
}

#[derive(Subcommand)]
enum Command {
    /// Standard graph, intersection matrix and determinant.
    Graph {
        #[arg(allow_hyphen_values = true)]
        seifert: String,
        /// Use the orientation-reversed space.
        #[arg(long)]
        dual: bool,
    },
    /// Orientation-reversed Seifert invariants.
    Dual {
        #[arg(allow_hyphen_values = true)]
        seifert: String,
    },
    /// Walk a characteristic vector along its full path.
    Fullpath {
        #[command(flatten)]
        space: SpaceArgs,
        /// Walk on the graph of the orientation-reversed space.
        #[arg(long)]
        dual: bool,
        /// Vector in grouped ("0|-1,-1,-2|0,1,-2|0^68") or flat form.
        #[arg(allow_hyphen_values = true)]
        vector: String,
        /// Print every step.
        #[arg(long)]
        trace: bool,
        /// Also walk the negated vector.
        #[arg(long)]
        both_ends: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Magic C of a rotation vector.
    MagicC {
        #[command(flatten)]
        candidate: CandidateArgs,
    },
    /// Tight structures on an L-space, up to full path.
    Classify {
        #[command(flatten)]
        space: SpaceArgs,
        /// Assert that the input is an L-space.
        #[arg(long)]
        attest_lspace: bool,
    },
    /// Tightness and vanishing verdicts for one structure.
    Report {
        #[command(flatten)]
        candidate: CandidateArgs,
    },
    /// Replay published computations.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Inclusive range A..B.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "k")]
        range: Option<String>,
    },
}

fn run(cli: &Cli) -> CliResult<(Output, bool)> {
    let ok = |o: Output| Ok((o, true));
    match &cli.command {
        Command::Graph { seifert, dual } => ok(cmd_graph(&parse_seifert(seifert)?, *dual)?),
        Command::Dual { seifert } => ok(cmd_dual(&parse_seifert(seifert)?)?),
        Command::Fullpath {
            space,
            dual,
            vector,
            trace,
            both_ends,
            cap,
        } => ok(cmd_fullpath(FullPathArgs {
            data: &space.data()?,
            dual: *dual,
            vector,
            trace: *trace,
            both_ends: *both_ends,
            cap: *cap,
        })?),
        Command::MagicC { candidate } => ok(cmd_magic_c(&candidate.candidate()?)?),
        Command::Classify {
            space,
            attest_lspace,
        } => ok(cmd_classify(&space.data()?, *attest_lspace)?),
        Command::Report { candidate } => ok(cmd_report(&candidate.candidate()?)?),
        Command::Reproduce { target, k, range } => {
            let span = match (range, k) {
                (Some(r), _) => Some(parse_range(r)?),
                (None, Some(k)) => Some((*k, *k)),
                (None, None) => None,
            };
            match target {
                Target::Lemma6 => match span {
                    Some((a, b)) if a != b => {
                        Err(CliError::Usage("lemma6 takes a single k".into()))
                    }
                    Some((a, _)) => reproduce::lemma6(a),
                    None => reproduce::lemma6(35),
                },
                Target::Theorem2Table => {
                    let (a, b) = span.unwrap_or((1, 35));
                    reproduce::theorem2_table(a, b)
                }
                Target::Conjugates => {
                    let (a, b) = span.unwrap_or((35, 35));
                    reproduce::conjugates(&(a..=b).collect::<Vec<_>>())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, pass)) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
