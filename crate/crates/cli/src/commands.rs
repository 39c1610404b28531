//! One function per subcommand. Each returns the JSON to print and the exit
//! code; errors become exit code 2 in `main`.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context};
use cyclemonoid::graph::{find_isomorphism, parse_simple_edge_list, to_edge_list, to_graph6};
use cyclemonoid::invariants::{
    det_i_minus_a, hike_gf_by_omega, loop_erased_omega_gf, perm_i_plus_a, sa_hike_polynomial, walk_gf_by_omega,
    walk_resolvent_gf,
};
use cyclemonoid::realize::{realize_tree, realize_with_stats};
use cyclemonoid::transforms::{glue, jump, reduce, reverse_all, to_cubic_logged, TransformLog, TransformStep};
use cyclemonoid::{families, parse_edge_list, parse_graph6, phi, Budgets, MultiDigraph, SimpleGraph};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::harness::{cache_key, classify};
use crate::record::{VerdictLabel, VerdictRecord};

pub struct Output {
    pub json: Value,
    /// Shown instead of the JSON under `--pretty`, when set.
    pub table: Option<String>,
    pub code: i32,
}

impl Output {
    fn ok(json: Value) -> Self {
        Output { json, table: None, code: 0 }
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_digraph(path: &Path) -> anyhow::Result<MultiDigraph> {
    Ok(parse_edge_list(&read_input(path)?)?)
}

/// A simple graph given inline as graph6, or as a file holding a graph6 line
/// or a simple edge list.
pub fn read_simple(input: &str) -> anyhow::Result<SimpleGraph> {
    let path = Path::new(input);
    let text = if input == "-" || path.is_file() { read_input(path)? } else { input.to_owned() };
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).unwrap_or("");
    if first.starts_with("n ") {
        Ok(parse_simple_edge_list(&text)?)
    } else {
        Ok(parse_graph6(first)?)
    }
}

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
fn big(x: &BigInt) -> Value {
    i64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::from(x.to_string()))
}

fn edges(h: &SimpleGraph) -> Vec<[usize; 2]> {
    h.edges().map(|(u, v)| [u, v]).collect()
}

pub fn cmd_phi(input: &Path, labels: bool, cycle_budget: u64) -> anyhow::Result<Output> {
    let g = read_digraph(input)?;
    let p = cyclemonoid::cycles::phi_with_budget(&g, cycle_budget)?;
    let mut out = json!({
        "base_n": g.n(),
        "n": p.h.n(),
        "edges": edges(&p.h),
        "graph6": to_graph6(&p.h).ok(),
    });
    if labels {
        out["labels"] = serde_json::to_value(&p.labels)?;
    }
    Ok(Output::ok(out))
}

fn verdict_output(rec: VerdictRecord, witness_path: Option<&Path>) -> anyhow::Result<Output> {
    let code = rec.verdict.exit_code();
    let edge_list = rec.witness.as_ref().map(to_edge_list);
    if let (Some(path), Some(text)) = (witness_path, &edge_list) {
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut json = serde_json::to_value(&rec)?;
    if let Some(text) = edge_list {
        json["witness_edge_list"] = Value::from(text);
    }
    Ok(Output { json, table: None, code })
}

pub fn cmd_realize(input: &str, budgets: &Budgets, witness: Option<&Path>) -> anyhow::Result<Output> {
    let h = read_simple(input)?;
    verdict_output(classify(&h, budgets)?, witness)
}

pub fn cmd_transform(input: &Path, op: &str, other: Option<&Path>) -> anyhow::Result<Output> {
    let g = read_digraph(input)?;
    let parts: Vec<&str> = op.split(':').collect();
    let num = |s: &str| s.parse::<usize>().with_context(|| format!("bad vertex {s:?} in --op"));
    let (result, log, preserving) = match parts.as_slice() {
        ["reverse"] => {
            let mut log = TransformLog::new();
            log.push(TransformStep::ReverseAll);
            (reverse_all(&g), log, true)
        }
        ["jump", v] => {
            let v = num(v)?;
            let mut log = TransformLog::new();
            log.push(TransformStep::Jump(v));
            (jump(&g, v)?, log, true)
        }
        ["reduce"] => {
            let (r, log) = reduce(&g)?;
            (r, log, true)
        }
        ["cubic"] => {
            let (r, log) = reduce(&g)?;
            let (c, more) = to_cubic_logged(&r)?;
            let mut log = log;
            log.extend(more);
            (c, log, true)
        }
        ["glue", v1, v2] => {
            let other = read_digraph(other.context("glue needs --other")?)?;
            let (v1, v2) = (num(v1)?, num(v2)?);
            let mut log = TransformLog::new();
            log.push(TransformStep::Glue { other: other.clone(), v1, v2 });
            (glue(&g, v1, &other, v2)?, log, false)
        }
        _ => bail!("unknown --op {op:?}; expected reverse, jump:V, reduce, cubic or glue:V1:V2"),
    };
    let mut out = json!({
        "graph": result,
        "edge_list": to_edge_list(&result),
        "log": log,
    });
    if preserving {
        let (before, after) = (phi(&g)?.h, phi(&result)?.h);
        out["phi_preserved"] = Value::from(find_isomorphism(&before, &after).is_some());
    }
    Ok(Output::ok(out))
}

pub fn cmd_invariants(input: &Path, vertex: usize, order: usize) -> anyhow::Result<Output> {
    let g = read_digraph(input)?;
    let h = phi(&g)?.h;
    let perm = perm_i_plus_a(&g).ok();
    let sa = sa_hike_polynomial(&h).ok();
    let walk = walk_resolvent_gf(&g, vertex, order)?;
    Ok(Output::ok(json!({
        "det": big(&det_i_minus_a(&g)),
        "perm": perm.as_ref().map(big),
        "sa_poly": sa,
        "hike_gf": sa.is_some().then(|| hike_gf_by_omega(&h, order)).transpose()?,
        "walk_gf_vertex_i": {
            "vertex": vertex,
            "num": walk.num,
            "den": walk.den,
            "series": walk.series,
        },
    })))
}

pub fn cmd_walk_gf(
    input: &Path,
    vertex: usize,
    order: usize,
    loop_erased_to: Option<usize>,
    max_len: usize,
) -> anyhow::Result<Output> {
    let g = read_digraph(input)?;
    let walk = walk_resolvent_gf(&g, vertex, order)?;
    let h = phi(&g)?.h;
    let mut out = json!({
        "vertex": vertex,
        "num": walk.num,
        "den": walk.den,
        "series": walk.series,
        "by_omega": walk_gf_by_omega(&h, order).ok(),
    });
    if let Some(j) = loop_erased_to {
        out["loop_erased"] = serde_json::to_value(loop_erased_omega_gf(&g, vertex, j, max_len, order)?)?;
    }
    Ok(Output::ok(out))
}

pub fn cmd_tree(input: &str) -> anyhow::Result<Output> {
    let t = read_simple(input)?;
    let g = realize_tree(&t)?;
    let verified = find_isomorphism(&phi(&g)?.h, &t).is_some();
    let json = json!({ "witness": g, "edge_list": to_edge_list(&g), "verified": verified });
    Ok(Output { json, table: None, code: if verified { 0 } else { 2 } })
}

pub fn cmd_tn(n: usize, budgets: &Budgets) -> anyhow::Result<Output> {
    let h = families::trace_family_graph(n);
    let (verdict, stats) = realize_with_stats(&h, budgets)?;
    let rec = VerdictRecord::new(&h, cache_key(&h)?, &verdict, stats)?;
    let message = match rec.verdict {
        VerdictLabel::Realizable => "hike monoid",
        VerdictLabel::Unrealizable => "not a hike monoid",
        VerdictLabel::Undecided => "undecided within budget",
    };
    let mut out = verdict_output(rec, None)?;
    out.json["n"] = Value::from(n);
    out.json["message"] = Value::from(message);
    Ok(out)
}
