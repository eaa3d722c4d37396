//! Command-line front end for `cutsetkit`.
//!
//! Every command renders a deterministic report (plain text by default,
//! JSON with `--json`) and an exit code: 0 on success, 1 when an implication
//! check fails, 2 on input errors.

pub mod checks;
mod commands;
pub mod verify;

use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cutsetkit::families::{
    generate_with_limit, FamilySpec, DEFAULT_MAX_EDGES, DEFAULT_MAX_ELEMENTS,
};
use cutsetkit::format::parse_instance;
use cutsetkit::{Hypergraph, Instance, Poset};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cutsetkit",
    version,
    about = "Antichain cutsets, chain connectivity and EL-labelings of finite posets"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Refuse inputs with more elements (or vertices) than this.
    #[arg(long, global = true, env = "CUTSETKIT_MAX_ELEMENTS", default_value_t = DEFAULT_MAX_ELEMENTS)]
    pub max_elements: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a member of a built-in family in text format (JSON with --json).
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Connectivity, grading and level sets of a poset.
    Analyze(Source),
    /// Enumerate antichain cutsets and compare them with the level sets.
    Cutsets {
        #[command(flatten)]
        source: Source,
        /// Print at most this many cutsets (counts are unaffected).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check an edge labeling of a lattice for the EL property.
    ElCheck {
        #[command(flatten)]
        source: Source,
        /// Labeling file (`label x y k` lines); defaults to the
        /// join-irreducible labeling when the lattice is semimodular.
        #[arg(long)]
        labeling: Option<PathBuf>,
        /// Print at most this many labels.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Strong connectivity, exact transversals and balanced colorings.
    Hypergraph {
        #[command(flatten)]
        source: Source,
        /// Print at most this many transversals.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Run every implication check over the built-in corpus and random instances.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random posets and random hypergraphs to add to the corpus.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

/// Where the instance comes from: a file (`-` for stdin), a built-in family,
/// or stdin when neither is given.
#[derive(Debug, Args)]
pub struct Source {
    #[arg(conflicts_with = "family")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, default_value = "", requires = "family")]
    pub params: String,
}

/// A rejected input: unreadable, malformed, or outside the size guards.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<cutsetkit::Error> for InputError {
    fn from(e: cutsetkit::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

pub fn run(cli: &Cli) -> Result<Outcome, InputError> {
    let limits = Limits {
        max_elements: cli.max_elements,
        max_chains: DEFAULT_MAX_EDGES as u128,
    };
    match &cli.command {
        Command::Generate { family, params } => {
            let spec = FamilySpec::parse(family, params)?;
            let inst = generate_with_limit(&spec, limits.max_elements)?;
            Ok(Outcome {
                stdout: commands::generate(&inst, cli.json),
                code: EXIT_OK,
            })
        }
        Command::Analyze(src) => {
            let p = limits.poset(load(src, &limits)?)?;
            Ok(commands::analyze(&p, cli.json))
        }
        Command::Cutsets { source, limit } => {
            let p = limits.poset(load(source, &limits)?)?;
            Ok(commands::cutsets(&p, *limit, cli.json))
        }
        Command::ElCheck {
            source,
            labeling,
            limit,
        } => {
            let p = limits.poset(load(source, &limits)?)?;
            let labeling = labeling.as_ref().map(read_path).transpose()?;
            commands::el_check(&p, labeling.as_deref(), *limit, cli.json)
        }
        Command::Hypergraph { source, limit } => {
            let h = match load(source, &limits)? {
                Instance::Hypergraph(h) => h,
                Instance::Poset(p) => {
                    let p = limits.poset(Instance::Poset(p))?;
                    Hypergraph::from_poset(&p)?
                }
            };
            Ok(commands::hypergraph(&h, *limit, cli.json))
        }
        Command::Verify { seed, samples } => Ok(verify::run(*seed, *samples, cli.json)),
    }
}

struct Limits {
    max_elements: usize,
    max_chains: u128,
}

impl Limits {
    fn check_size(&self, inst: &Instance) -> Result<(), InputError> {
        let (what, size) = match inst {
            Instance::Poset(p) => ("elements", p.len()),
            Instance::Hypergraph(h) => ("vertices", h.vertex_count()),
        };
        if size > self.max_elements {
            return Err(InputError(format!(
                "input has {size} {what}, limit is {} (CUTSETKIT_MAX_ELEMENTS)",
                self.max_elements
            )));
        }
        if let Instance::Hypergraph(h) = inst {
            if h.edges().len() as u128 > self.max_chains {
                return Err(InputError(format!(
                    "input has more than {} edges",
                    self.max_chains
                )));
            }
        }
        Ok(())
    }

    /// Unwraps a poset and refuses ones with too many maximal chains.
    fn poset(&self, inst: Instance) -> Result<Poset, InputError> {
        let Instance::Poset(p) = inst else {
            return Err(InputError("expected a poset, got a hypergraph".into()));
        };
        let chains = p.count_maximal_chains();
        if chains > self.max_chains {
            return Err(InputError(format!(
                "poset has {chains} maximal chains, limit is {}",
                self.max_chains
            )));
        }
        Ok(p)
    }
}

fn read_path(path: &PathBuf) -> Result<String, InputError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load(src: &Source, limits: &Limits) -> Result<Instance, InputError> {
    let inst = match (&src.family, &src.input) {
        (Some(family), _) => {
            let spec = FamilySpec::parse(family, &src.params)?;
            generate_with_limit(&spec, limits.max_elements)?
        }
        (None, Some(path)) => parse_instance(&read_path(path)?)?,
        (None, None) => parse_instance(&read_path(&PathBuf::from("-"))?)?,
    };
    limits.check_size(&inst)?;
    Ok(inst)
}
