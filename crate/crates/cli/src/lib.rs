//! Command-line front end: argument parsing, the verdict cache and the batch
//! enumeration harness.

pub mod args;
pub mod cache;
pub mod commands;
pub mod harness;
pub mod record;

use std::io::Write;

use args::{Cli, Command};
use commands::Output;
use harness::{corpus_files, enumerate, load_corpus, open_cache, EnumerateOptions};

fn dispatch(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Phi { input, labels, cycle_budget } => commands::cmd_phi(input, *labels, *cycle_budget),
        Command::Realize { input, budgets, witness } => {
            commands::cmd_realize(input, &budgets.budgets(), witness.as_deref())
        }
        Command::Enumerate { corpus, min_n, max_n, budgets, threads, cache } => {
            let files = corpus_files(corpus, *min_n, *max_n)?;
            let graphs = load_corpus(&files, *min_n, *max_n)?;
            let mut cache = open_cache(cache.as_deref())?;
            let opts = EnumerateOptions { min_n: *min_n, max_n: *max_n, budgets: budgets.budgets(), threads: *threads };
            let report = enumerate(&graphs, &opts, cache.as_mut())?;
            Ok(Output { json: serde_json::to_value(&report)?, table: Some(report.table()), code: 0 })
        }
        Command::Transform { input, op, other } => commands::cmd_transform(input, op, other.as_deref()),
        Command::Invariants { input, vertex, order } => commands::cmd_invariants(input, *vertex, *order),
        Command::WalkGf { input, vertex, order, loop_erased_to, max_len } => {
            commands::cmd_walk_gf(input, *vertex, *order, *loop_erased_to, *max_len)
        }
        Command::Tree { input } => commands::cmd_tree(input),
        Command::Tn { n, budgets } => commands::cmd_tn(*n, &budgets.budgets()),
    }
}

/// Runs one command, writing its output to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let output = dispatch(cli)?;
    match (&output.table, cli.pretty) {
        (Some(table), true) => write!(out, "{table}")?,
        (_, true) => writeln!(out, "{}", serde_json::to_string_pretty(&output.json)?)?,
        (_, false) => writeln!(out, "{}", output.json)?,
    }
    Ok(output.code)
}
