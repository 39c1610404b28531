use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cyclemonoid::cycles::DEFAULT_CYCLE_BUDGET;
use cyclemonoid::realize::{DEFAULT_COVER_BUDGET, DEFAULT_SOLVER_BUDGET};
use cyclemonoid::Budgets;

#[derive(Debug, Parser)]
#[command(name = "cyclemonoid", version, about = "Hike dependency graphs of multidigraphs")]
pub struct Cli {
    /// Human-readable output (a table for `enumerate`, indented JSON otherwise).
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Simple cycles enumerated before giving up.
    #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
    pub cycle_budget: u64,
    /// Solver nodes per clique cover.
    #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
    pub solver_budget: u64,
    /// Clique covers tried per graph.
    #[arg(long, default_value_t = DEFAULT_COVER_BUDGET)]
    pub cover_budget: u64,
    /// Only try covers of the smallest size (never concludes unrealizable
    /// from those alone).
    #[arg(long)]
    pub min_cover_only: bool,
}

impl BudgetArgs {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            cycles: self.cycle_budget,
            solver_nodes: self.solver_budget,
            covers: self.cover_budget,
            min_cover_only: self.min_cover_only,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// φ(G) of a multidigraph edge list.
    Phi {
        /// Edge list file (`n <count>` then `u v [k]` lines); `-` for stdin.
        input: PathBuf,
        /// Include the vertex set of each cycle.
        #[arg(long)]
        labels: bool,
        #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
        cycle_budget: u64,
    },
    /// Decide whether a simple graph is φ of some multidigraph.
    Realize {
        /// graph6 string or file (graph6 line or simple edge list); `-` for stdin.
        input: String,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Write the witness edge list here when realizable.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Classify graph6 corpora and report counts per vertex number.
    Enumerate {
        /// Corpus directories (holding `graph{n}c.g6`) or graph6 files.
        #[arg(required = true)]
        corpus: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Verdict cache file (overrides CYCLEMONOID_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Apply a hike-monoid-preserving transformation (or glue).
    Transform {
        input: PathBuf,
        /// reverse | jump:V | reduce | cubic | glue:V1:V2
        #[arg(long)]
        op: String,
        /// Second digraph for `glue`.
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Algebraic and combinatorial invariants of the hike monoid.
    Invariants {
        input: PathBuf,
        /// Root of the closed-walk series.
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Closed-walk series at a vertex, exactly and by number of cycles.
    WalkGf {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long, default_value_t = 20)]
        order: usize,
        /// Also count walks to this vertex by erased loops.
        #[arg(long)]
        loop_erased_to: Option<usize>,
        /// Length cutoff for the loop-erased series.
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// Realize a tree by its directed medial digraph.
    Tree { input: String },
    /// Is the trace monoid T_n a hike monoid?
    Tn {
        n: usize,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
}
