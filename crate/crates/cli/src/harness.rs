//! Batch classification of graph6 corpora.
//!
//! Workers pull graph indices from a shared counter and send finished records
//! down a channel; the calling thread is the only one touching the cache file.
//! Totals are accumulated by graph index, so they do not depend on the number
//! of threads.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use anyhow::{bail, Context};
use cyclemonoid::graph::canonical_form_with_cap;
use cyclemonoid::realize::{realize_components, MAX_REALIZE_VERTICES};
use cyclemonoid::{parse_graph6, Budgets, SimpleGraph};
use serde::Serialize;

use crate::cache::VerdictCache;
use crate::record::{VerdictLabel, VerdictRecord};

/// One in this many cache hits is recomputed and compared.
pub const AUDIT_PERIOD: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerN {
    pub n: usize,
    pub graphs_seen: u64,
    pub realizable: u64,
    pub unrealizable: u64,
    pub undecided: u64,
    pub by_reason: BTreeMap<String, u64>,
}

impl PerN {
    fn new(n: usize) -> Self {
        PerN { n, graphs_seen: 0, realizable: 0, unrealizable: 0, undecided: 0, by_reason: BTreeMap::new() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub wall_millis: u64,
    /// Summed per-graph search time, by `n`.
    pub millis_by_n: BTreeMap<usize, u64>,
    pub threads: usize,
    pub computed: u64,
    pub cache_hits: u64,
    pub audited: u64,
}

/// Everything but `stats` is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub per_n: Vec<PerN>,
    pub stats: RunStats,
}

impl EnumerationReport {
    pub fn realizable_counts(&self) -> Vec<u64> {
        self.per_n.iter().map(|p| p.realizable).collect()
    }

    pub fn table(&self) -> String {
        let mut s = format!("{:>3} {:>8} {:>10} {:>12} {:>9}  reasons\n", "n", "graphs", "realizable", "unrealizable", "undecided");
        for p in &self.per_n {
            let reasons: Vec<String> = p.by_reason.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s += &format!(
                "{:>3} {:>8} {:>10} {:>12} {:>9}  {}\n",
                p.n,
                p.graphs_seen,
                p.realizable,
                p.unrealizable,
                p.undecided,
                reasons.join(" ")
            );
        }
        s
    }
}

pub struct EnumerateOptions {
    pub min_n: usize,
    pub max_n: usize,
    pub budgets: Budgets,
    pub threads: usize,
}

/// The corpus files to read: a directory contributes `graph{n}c.g6` for
/// every `n` in range, a file is taken as is.
pub fn corpus_files(paths: &[PathBuf], min_n: usize, max_n: usize) -> anyhow::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            for n in min_n..=max_n {
                let f = p.join(format!("graph{n}c.g6"));
                if !f.is_file() {
                    bail!("missing corpus file {} (see scripts/make_corpus.py)", f.display());
                }
                out.push(f);
            }
        } else if p.is_file() {
            out.push(p.clone());
        } else {
            bail!("corpus path {} does not exist", p.display());
        }
    }
    Ok(out)
}

pub fn load_corpus(files: &[PathBuf], min_n: usize, max_n: usize) -> anyhow::Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    for f in files {
        let text = std::fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let h = parse_graph6(line.trim()).with_context(|| format!("{}:{}", f.display(), i + 1))?;
            if (min_n..=max_n).contains(&h.n()) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

pub fn cache_key(h: &SimpleGraph) -> anyhow::Result<String> {
    Ok(canonical_form_with_cap(h, MAX_REALIZE_VERTICES)?)
}

/// Classifies one graph from scratch.
pub fn classify(h: &SimpleGraph, budgets: &Budgets) -> anyhow::Result<VerdictRecord> {
    let key = cache_key(h)?;
    let (verdict, stats) = realize_components(h, budgets)?;
    VerdictRecord::new(h, key, &verdict, stats)
}

struct Done {
    index: usize,
    record: VerdictRecord,
    fresh: bool,
    audited: bool,
}

/// Classifies `graphs`, consulting and extending `cache` when given.
pub fn enumerate(
    graphs: &[SimpleGraph],
    opts: &EnumerateOptions,
    cache: Option<&mut VerdictCache>,
) -> anyhow::Result<EnumerationReport> {
    let start = Instant::now();
    let threads = opts.threads.max(1);
    let mut appender = match cache.as_deref() {
        Some(c) => Some(c.appender()?),
        None => None,
    };
    let known = cache.as_deref().map(VerdictCache::entries);
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<anyhow::Result<Done>>();
    let mut records: Vec<Option<VerdictRecord>> = vec![None; graphs.len()];
    let mut stats = RunStats { threads, ..RunStats::default() };
    let mut fresh_records = Vec::new();

    std::thread::scope(|scope| -> anyhow::Result<()> {
        for _ in 0..threads {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                let Some(h) = graphs.get(index) else { break };
                let done = (|| {
                    let key = cache_key(h)?;
                    if let Some(hit) = known.and_then(|m| m.get(&key)) {
                        let audited = index % AUDIT_PERIOD == 0;
                        if audited {
                            let again = classify(h, &opts.budgets)?;
                            if !again.same_outcome(hit) {
                                bail!("cache audit failed for {}: cached {:?}, recomputed {:?}", hit.graph6, hit.verdict, again.verdict);
                            }
                        }
                        return Ok(Done { index, record: hit.clone(), fresh: false, audited });
                    }
                    Ok(Done { index, record: classify(h, &opts.budgets)?, fresh: true, audited: false })
                })();
                let failed = done.is_err();
                if tx.send(done).is_err() || failed {
                    break;
                }
            });
        }
        drop(tx);
        // Single writer: the cache file is only touched here.
        for done in rx {
            let done = done?;
            if done.fresh {
                stats.computed += 1;
                if let Some(app) = appender.as_mut() {
                    app.append(&done.record)?;
                }
                fresh_records.push(done.record.clone());
            } else {
                stats.cache_hits += 1;
            }
            stats.audited += u64::from(done.audited);
            records[done.index] = Some(done.record);
        }
        Ok(())
    })?;

    if let Some(c) = cache {
        c.absorb(fresh_records);
    }
    let mut per_n: BTreeMap<usize, PerN> = BTreeMap::new();
    for (h, rec) in graphs.iter().zip(&records) {
        let rec = rec.as_ref().context("a worker stopped early")?;
        let p = per_n.entry(h.n()).or_insert_with(|| PerN::new(h.n()));
        p.graphs_seen += 1;
        match rec.verdict {
            VerdictLabel::Realizable => p.realizable += 1,
            VerdictLabel::Unrealizable => p.unrealizable += 1,
            VerdictLabel::Undecided => p.undecided += 1,
        }
        *p.by_reason.entry(rec.reason_key()).or_default() += 1;
        *stats.millis_by_n.entry(h.n()).or_default() += rec.stats.millis;
    }
    stats.wall_millis = start.elapsed().as_millis() as u64;
    Ok(EnumerationReport { per_n: per_n.into_values().collect(), stats })
}

/// Default cache location when neither `--cache` nor the environment names one.
pub fn default_cache_path() -> Option<PathBuf> {
    std::env::var_os(crate::cache::CACHE_ENV).map(PathBuf::from)
}

pub fn open_cache(path: Option<&Path>) -> anyhow::Result<Option<VerdictCache>> {
    match path.map(Path::to_path_buf).or_else(default_cache_path) {
        Some(p) => Ok(Some(VerdictCache::open(p)?)),
        None => Ok(None),
    }
}
