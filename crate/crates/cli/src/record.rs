//! JSON verdict records shared by `realize`, `tn`, `enumerate` and the cache.

use cyclemonoid::realize::{BudgetKind, SearchStats};
use cyclemonoid::{MultiDigraph, SimpleGraph, Verdict, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictLabel {
    Realizable,
    Unrealizable,
    Undecided,
}

impl VerdictLabel {
    /// Process exit code for this verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictLabel::Realizable => 0,
            VerdictLabel::Unrealizable => 1,
            VerdictLabel::Undecided => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub covers_tried: u64,
    pub solver_nodes: u64,
    pub millis: u64,
}

impl From<SearchStats> for StatsRecord {
    fn from(s: SearchStats) -> Self {
        StatsRecord { covers_tried: s.covers_tried, solver_nodes: s.solver_nodes, millis: s.millis }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub graph6: String,
    pub canonical: String,
    pub verdict: VerdictLabel,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Offending induced cycle, or curated-table index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<MultiDigraph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<VertexSet>>,
    /// The integer solution of the cover's system, i.e. the witness matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<Vec<Vec<u64>>>,
    pub stats: StatsRecord,
}

fn budget_reason(kind: BudgetKind) -> &'static str {
    match kind {
        BudgetKind::Covers => "cover_budget",
        BudgetKind::SolverNodes => "solver_budget",
        BudgetKind::MinCoverRestriction => "min_cover_restriction",
    }
}

impl VerdictRecord {
    pub fn new(h: &SimpleGraph, canonical: String, verdict: &Verdict, stats: SearchStats) -> anyhow::Result<Self> {
        let mut r = VerdictRecord {
            graph6: cyclemonoid::graph::to_graph6(h)?,
            canonical,
            verdict: VerdictLabel::Undecided,
            reason: None,
            detail: None,
            witness: None,
            cover: None,
            solution: None,
            stats: stats.into(),
        };
        match verdict {
            Verdict::Realizable(real) => {
                r.verdict = VerdictLabel::Realizable;
                r.solution = Some(real.witness.rows());
                r.witness = Some(real.witness.clone());
                r.cover = Some(real.cover.clone());
            }
            Verdict::Unrealizable { reason, detail } => {
                r.verdict = VerdictLabel::Unrealizable;
                r.reason = Some(reason.as_str().to_owned());
                r.detail = (!detail.is_empty()).then(|| detail.clone());
            }
            Verdict::Undecided { exhausted } => r.reason = Some(budget_reason(*exhausted).to_owned()),
        }
        Ok(r)
    }

    /// Histogram key: the reason, or the verdict when there is none.
    pub fn reason_key(&self) -> String {
        match &self.reason {
            Some(r) => r.clone(),
            None => serde_json::to_value(self.verdict).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default(),
        }
    }

    /// Equal up to timing and search statistics.
    pub fn same_outcome(&self, other: &VerdictRecord) -> bool {
        VerdictRecord { stats: StatsRecord::default(), ..self.clone() }
            == VerdictRecord { stats: StatsRecord::default(), ..other.clone() }
    }
}
