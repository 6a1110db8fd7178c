//! The end-to-end procedure: strip, exact-dedupe, colorability filter,
//! iso-dedupe, criticality check — with persistence, resumability, and
//! parallel sharding.
//!
//! Two drivers are provided. [`census`] runs one strip pass over a rank
//! range with the four stages and a final criticality check; it shards the
//! range across threads, persists each completed shard, and resumes from the
//! last completed one. [`descend`] chains one-block strip passes level by
//! level from a start hypergraph down to a target block count, carrying a
//! capped, deduped population of non-colorable survivors — the way small
//! critical sets are actually found.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::is_noncolorable;
use crate::corpus;
use crate::iso::{canonical_form, canonical_hypergraph, CanonicalForm};
use crate::loops::{max_loop_with_budget, DEFAULT_NODE_BUDGET};
use crate::mmp::{self, Hypergraph};
use crate::parity::parity_proof;
use crate::strip::{enumerate_strips, exact_fingerprint, StripPlan};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("strip plan invalid: {0}")]
    Strip(#[from] crate::strip::StripError),
    #[error("target block count {target} not below start {start}")]
    BadTarget { target: usize, start: usize },
    #[error("i/o failure at {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("persistence state at {path} does not match this run: {detail}")]
    StateMismatch { path: PathBuf, detail: String },
    #[error("corpus file {path}: {detail}")]
    Corpus { path: PathBuf, detail: String },
}

/// True iff the hypergraph is non-colorable and every one-edge-removed
/// subset is colorable. Early-exits on the first non-colorable subset.
pub fn is_critical(h: &Hypergraph) -> bool {
    if !is_noncolorable(h) {
        return false;
    }
    (0..h.edge_count()).all(|i| !is_noncolorable(&h.remove_edges(&[i])))
}

/// Which stages a census pass applies.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StageConfig {
    pub exact_dedupe: bool,
    pub noncolorable_only: bool,
    pub iso_dedupe: bool,
    pub check_critical: bool,
    /// Criticality is only evaluated at or below this block count; beyond it
    /// the record's critical flag stays unknown.
    pub critical_max_blocks: usize,
    /// Loop orders are only computed at or below this block count; the
    /// search is exponential in the worst case.
    pub loop_max_blocks: usize,
    pub jobs: usize,
}

impl Default for StageConfig {
    fn default() -> Self {
        StageConfig {
            exact_dedupe: true,
            noncolorable_only: true,
            iso_dedupe: true,
            check_critical: true,
            critical_max_blocks: 25,
            loop_max_blocks: 30,
            jobs: 1,
        }
    }
}

/// One survivor of a census run, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub canonical_mmp: String,
    pub vertex_count: usize,
    pub block_count: usize,
    /// None when the block count was above the loop bound.
    pub max_loop_order: Option<usize>,
    /// False when the loop search hit its node budget; the order is then a
    /// lower bound.
    pub loop_exact: bool,
    pub parity_holds: bool,
    /// None when the block count was above the criticality bound.
    pub critical: Option<bool>,
    /// Discovery metadata: seed, source rank range or level.
    pub source: String,
}

impl CensusRecord {
    fn build(h: &Hypergraph, stages: &StageConfig, source: String) -> CensusRecord {
        let canon = canonical_hypergraph(&h.renormalize());
        let (max_loop_order, loop_exact) = if canon.edge_count() <= stages.loop_max_blocks {
            let out = max_loop_with_budget(&canon, DEFAULT_NODE_BUDGET);
            (Some(out.order), out.complete)
        } else {
            (None, false)
        };
        let critical = if stages.check_critical && canon.edge_count() <= stages.critical_max_blocks
        {
            Some(is_critical(&canon))
        } else {
            None
        };
        CensusRecord {
            canonical_mmp: mmp::serialize(&canon).expect("census outputs stay within 61 labels"),
            vertex_count: canon.vertex_count(),
            block_count: canon.edge_count(),
            max_loop_order,
            loop_exact,
            parity_holds: parity_proof(&canon).holds,
            critical,
            source,
        }
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.canonical_mmp,
            self.vertex_count,
            self.block_count,
            self.max_loop_order.map_or("-".into(), |l| l.to_string()),
            self.loop_exact,
            self.parity_holds,
            self.critical.map_or("unknown".into(), |c| c.to_string()),
            self.source
        )
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> PipelineError + '_ {
    move |source| PipelineError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Sidecar manifest entry marking one completed unit of work.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq, Clone)]
struct ManifestLine {
    unit: String,
    survivors: usize,
}

struct Checkpoint {
    dir: PathBuf,
    done: Vec<ManifestLine>,
}

impl Checkpoint {
    /// Opens or creates a checkpoint directory. `header` identifies the run
    /// configuration; resuming with a different configuration is refused.
    fn open(dir: &Path, header: &str) -> Result<Checkpoint, PipelineError> {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        let header_path = dir.join("run.json");
        if header_path.exists() {
            let existing = fs::read_to_string(&header_path).map_err(io_err(&header_path))?;
            if existing.trim() != header.trim() {
                return Err(PipelineError::StateMismatch {
                    path: header_path,
                    detail: "run configuration differs from the checkpointed one".into(),
                });
            }
        } else {
            fs::write(&header_path, header).map_err(io_err(&header_path))?;
        }
        let manifest_path = dir.join("manifest.jsonl");
        let mut done = Vec::new();
        if manifest_path.exists() {
            let text = fs::read_to_string(&manifest_path).map_err(io_err(&manifest_path))?;
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let entry: ManifestLine =
                    serde_json::from_str(line).map_err(|e| PipelineError::StateMismatch {
                        path: manifest_path.clone(),
                        detail: format!("corrupt manifest line: {e}"),
                    })?;
                done.push(entry);
            }
        }
        Ok(Checkpoint { dir: dir.to_path_buf(), done })
    }

    fn is_done(&self, unit: &str) -> bool {
        self.done.iter().any(|l| l.unit == unit)
    }

    fn load_unit(&self, unit: &str) -> Result<Vec<Hypergraph>, PipelineError> {
        let path = self.dir.join(format!("{unit}.mmp"));
        let text = fs::read_to_string(&path).map_err(io_err(&path))?;
        let mut out = Vec::new();
        for (lineno, parsed) in mmp::parse_lines(&text) {
            let p = parsed.map_err(|e| PipelineError::StateMismatch {
                path: path.clone(),
                detail: format!("line {lineno}: {e}"),
            })?;
            out.push(p.hypergraph);
        }
        Ok(out)
    }

    fn store_unit(&mut self, unit: &str, survivors: &[Hypergraph]) -> Result<(), PipelineError> {
        let path = self.dir.join(format!("{unit}.mmp"));
        let mut text = String::new();
        for h in survivors {
            text.push_str(&mmp::serialize(h).expect("survivors stay within 61 labels"));
            text.push('\n');
        }
        fs::write(&path, text).map_err(io_err(&path))?;
        let manifest_path = self.dir.join("manifest.jsonl");
        let mut f = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&manifest_path)
            .map_err(io_err(&manifest_path))?;
        let line = ManifestLine {
            unit: unit.to_string(),
            survivors: survivors.len(),
        };
        writeln!(f, "{}", serde_json::to_string(&line).expect("manifest serializes"))
            .map_err(io_err(&manifest_path))?;
        self.done.push(line);
        Ok(())
    }

    fn store_records(&self, records: &[CensusRecord]) -> Result<(), PipelineError> {
        let path = self.dir.join("records.tsv");
        let mut text = String::new();
        for r in records {
            text.push_str(&r.to_tsv());
            text.push('\n');
        }
        fs::write(&path, text).map_err(io_err(&path))
    }
}

/// Applies exact dedupe, the colorability filter, and iso dedupe in stage
/// order, preserving first occurrences.
fn apply_stages(survivors: Vec<Hypergraph>, stages: &StageConfig) -> Vec<Hypergraph> {
    let mut current = survivors;
    if stages.exact_dedupe {
        let mut seen = HashSet::new();
        current.retain(|h| seen.insert(exact_fingerprint(h)));
    }
    if stages.noncolorable_only {
        if stages.jobs > 1 {
            let keep: Vec<bool> = current.par_iter().map(is_noncolorable).collect();
            let mut it = keep.iter();
            current.retain(|_| *it.next().unwrap());
        } else {
            current.retain(is_noncolorable);
        }
    }
    if stages.iso_dedupe {
        let forms: Vec<CanonicalForm> = if stages.jobs > 1 {
            current.par_iter().map(canonical_form).collect()
        } else {
            current.iter().map(canonical_form).collect()
        };
        let mut seen = HashSet::new();
        let mut it = forms.into_iter();
        current.retain(|_| seen.insert(it.next().unwrap()));
    }
    current
}

/// One strip pass: enumerate the plan's subsets of `start`, apply the four
/// stages, check criticality on survivors, and return records sorted by
/// canonical line. With an output directory the pass persists each completed
/// rank-range shard and resumes from the manifest.
pub fn census(
    start: &Hypergraph,
    target_blocks: usize,
    plan: &StripPlan,
    stages: &StageConfig,
    outdir: Option<&Path>,
) -> Result<Vec<CensusRecord>, PipelineError> {
    if target_blocks >= start.edge_count() {
        return Err(PipelineError::BadTarget {
            target: target_blocks,
            start: start.edge_count(),
        });
    }
    let mut plan = plan.clone();
    plan.k = start.edge_count() - target_blocks;
    plan.validate(start)?;

    let header = serde_json::json!({
        "kind": "census",
        "start": mmp::serialize(start).expect("input within 61 labels"),
        "target_blocks": target_blocks,
        "plan": {
            "k": plan.k,
            "start": plan.start.to_string(),
            "end": plan.end.to_string(),
            "increment": plan.increment.to_string(),
            "drop_disconnected": plan.drop_disconnected,
        },
        "stages": stages,
    })
    .to_string();
    let mut checkpoint = match outdir {
        Some(dir) => Some(Checkpoint::open(dir, &header)?),
        None => None,
    };

    // contiguous rank shards, one per job slice, each a multiple of the
    // increment so sampled ranks stay congruent to plan.start
    let emitted = (plan.end - plan.start) / plan.increment + 1;
    let shard_count = (stages.jobs.max(1) * 8).min(emitted.max(1) as usize);
    let per_shard = emitted.div_ceil(shard_count as u128);
    let mut shards: Vec<(u128, u128)> = Vec::new();
    let mut rank = plan.start;
    while rank <= plan.end {
        let last = (rank + (per_shard - 1) * plan.increment).min(plan.end);
        shards.push((rank, last));
        rank = last + plan.increment;
    }

    let run_shard = |(lo, hi): (u128, u128)| -> Result<Vec<Hypergraph>, PipelineError> {
        let shard_plan = StripPlan {
            start: lo,
            end: hi,
            ..plan.clone()
        };
        let stream = enumerate_strips(start, &shard_plan)?;
        let mut survivors: Vec<Hypergraph> = Vec::new();
        for h in stream {
            if !stages.noncolorable_only || is_noncolorable(&h) {
                survivors.push(h);
            }
        }
        Ok(survivors)
    };

    let mut merged: Vec<Hypergraph> = Vec::new();
    match &mut checkpoint {
        Some(cp) => {
            for (i, &(lo, hi)) in shards.iter().enumerate() {
                let unit = format!("shard_{i:05}");
                let survivors = if cp.is_done(&unit) {
                    cp.load_unit(&unit)?
                } else {
                    let s = run_shard((lo, hi))?;
                    cp.store_unit(&unit, &s)?;
                    s
                };
                merged.extend(survivors);
            }
        }
        None => {
            if stages.jobs > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(stages.jobs)
                    .build()
                    .expect("thread pool");
                let results: Vec<Result<Vec<Hypergraph>, PipelineError>> =
                    pool.install(|| shards.par_iter().map(|&s| run_shard(s)).collect());
                for r in results {
                    merged.extend(r?);
                }
            } else {
                for &s in &shards {
                    merged.extend(run_shard(s)?);
                }
            }
        }
    }

    // colorability already applied per shard; finish with the dedupe stages
    let mut post = stages.clone();
    post.noncolorable_only = false;
    let survivors = apply_stages(merged, &post);

    let source = format!(
        "census k={} ranks {}..={} step {}",
        plan.k, plan.start, plan.end, plan.increment
    );
    let mut records: Vec<CensusRecord> = survivors
        .iter()
        .map(|h| CensusRecord::build(h, stages, source.clone()))
        .collect();
    records.sort_by(|a, b| a.canonical_mmp.cmp(&b.canonical_mmp));
    if let Some(cp) = &checkpoint {
        cp.store_records(&records)?;
    }
    Ok(records)
}

/// Level-by-level descent configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DescentConfig {
    pub seed: u64,
    pub target_blocks: usize,
    /// Population carried between levels after filtering and dedupe.
    pub level_cap: usize,
    /// Sampled one-block-removed children per parent at high block counts.
    pub children_per_parent: usize,
    /// At or below this block count every child is enumerated.
    pub full_enumeration_below: usize,
    /// Skip straight to this block count by sampling random rank subsets
    /// before the one-block levels start.
    pub jump_to: Option<usize>,
    /// Raw subsets drawn by the jump.
    pub jump_samples: usize,
    /// Isomorphism dedupe is applied only at or below this block count;
    /// exact dedupe always runs.
    pub iso_dedupe_max_blocks: usize,
    pub drop_disconnected: bool,
    pub critical_max_blocks: usize,
    pub jobs: usize,
}

impl Default for DescentConfig {
    fn default() -> Self {
        DescentConfig {
            seed: 0,
            target_blocks: 15,
            level_cap: 1200,
            children_per_parent: 4,
            full_enumeration_below: 24,
            jump_to: None,
            jump_samples: 2000,
            iso_dedupe_max_blocks: 32,
            drop_disconnected: true,
            critical_max_blocks: 25,
            jobs: 1,
        }
    }
}

/// Strips one block per level from `start` down to the target block count,
/// keeping a deduped population of non-colorable survivors, then reports
/// survivors of the final level as census records. Deterministic for a given
/// config; resumable per completed level via the output directory.
pub fn descend(
    start: &Hypergraph,
    cfg: &DescentConfig,
    outdir: Option<&Path>,
) -> Result<Vec<CensusRecord>, PipelineError> {
    if cfg.target_blocks >= start.edge_count() {
        return Err(PipelineError::BadTarget {
            target: cfg.target_blocks,
            start: start.edge_count(),
        });
    }
    let header = serde_json::json!({
        "kind": "descend",
        "start": mmp::serialize(start).expect("input within 61 labels"),
        "config": cfg,
    })
    .to_string();
    let mut checkpoint = match outdir {
        Some(dir) => Some(Checkpoint::open(dir, &header)?),
        None => None,
    };

    let base_stages = StageConfig {
        exact_dedupe: true,
        noncolorable_only: true,
        iso_dedupe: true,
        check_critical: true,
        critical_max_blocks: cfg.critical_max_blocks,
        loop_max_blocks: StageConfig::default().loop_max_blocks,
        jobs: cfg.jobs,
    };

    let pool = (cfg.jobs > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool")
    });
    let run_stages = |children: Vec<Hypergraph>, stages: &StageConfig| match &pool {
        Some(p) => p.install(|| apply_stages(children, stages)),
        None => apply_stages(children, stages),
    };

    let mut population = vec![start.renormalize()];
    let mut level = start.edge_count();

    if let Some(jump_to) = cfg.jump_to {
        if jump_to < level && jump_to >= cfg.target_blocks {
            let unit = format!("level_{jump_to:03}");
            match checkpoint.as_ref().filter(|cp| cp.is_done(&unit)) {
                Some(cp) => population = cp.load_unit(&unit)?,
                None => {
                    let k = level - jump_to;
                    let total = crate::strip::binomial(level, k);
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6a75_6d70);
                    let mut ranks: Vec<u128> =
                        (0..cfg.jump_samples).map(|_| rng.gen::<u128>() % total).collect();
                    ranks.sort_unstable();
                    ranks.dedup();
                    let children: Vec<Hypergraph> = ranks
                        .iter()
                        .map(|&r| {
                            let removed = crate::strip::unrank_combination(level, k, r);
                            start.remove_edges(&removed).renormalize()
                        })
                        .filter(|h| !cfg.drop_disconnected || h.is_connected())
                        .collect();
                    let stages = StageConfig {
                        iso_dedupe: jump_to <= cfg.iso_dedupe_max_blocks,
                        ..base_stages.clone()
                    };
                    let mut filtered = run_stages(children, &stages);
                    if filtered.len() > cfg.level_cap {
                        filtered.shuffle(&mut rng);
                        filtered.truncate(cfg.level_cap);
                    }
                    if let Some(cp) = &mut checkpoint {
                        cp.store_unit(&unit, &filtered)?;
                    }
                    population = filtered;
                }
            }
            level = jump_to;
        }
    }

    while level > cfg.target_blocks && !population.is_empty() {
        let next_blocks = level - 1;
        let unit = format!("level_{next_blocks:03}");
        if let Some(cp) = &checkpoint {
            if cp.is_done(&unit) {
                population = cp.load_unit(&unit)?;
                level = next_blocks;
                continue;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (next_blocks as u64) << 32);
        let mut children: Vec<Hypergraph> = Vec::new();
        let sample_all = level <= cfg.full_enumeration_below;
        for parent in &population {
            let b = parent.edge_count();
            let picks: Vec<usize> = if sample_all || cfg.children_per_parent >= b {
                (0..b).collect()
            } else {
                rand::seq::index::sample(&mut rng, b, cfg.children_per_parent).into_vec()
            };
            for i in picks {
                let child = parent.remove_edges(&[i]).renormalize();
                if cfg.drop_disconnected && !child.is_connected() {
                    continue;
                }
                children.push(child);
            }
        }
        let stages = StageConfig {
            iso_dedupe: next_blocks <= cfg.iso_dedupe_max_blocks,
            ..base_stages.clone()
        };
        let mut filtered = run_stages(children, &stages);
        if filtered.len() > cfg.level_cap {
            filtered.shuffle(&mut rng);
            filtered.truncate(cfg.level_cap);
        }
        if let Some(cp) = &mut checkpoint {
            cp.store_unit(&unit, &filtered)?;
        }
        population = filtered;
        level = next_blocks;
    }

    let source = format!("descend seed={} target={}", cfg.seed, cfg.target_blocks);
    let mut records: Vec<CensusRecord> = match &pool {
        Some(p) => p.install(|| {
            population
                .par_iter()
                .map(|h| CensusRecord::build(h, &base_stages, source.clone()))
                .collect()
        }),
        None => population
            .iter()
            .map(|h| CensusRecord::build(h, &base_stages, source.clone()))
            .collect(),
    };
    records.sort_by(|a, b| a.canonical_mmp.cmp(&b.canonical_mmp));
    if let Some(cp) = &checkpoint {
        cp.store_records(&records)?;
    }
    Ok(records)
}

/// One property check of the corpus regression.
#[derive(Debug, Clone)]
pub struct CorpusCheck {
    pub set: String,
    pub property: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct CorpusReport {
    pub checks: Vec<CorpusCheck>,
}

impl CorpusReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, set: &str, property: &str, pass: bool, detail: String) {
        self.checks.push(CorpusCheck {
            set: set.to_string(),
            property: property.to_string(),
            pass,
            detail,
        });
    }
}

/// Runs the golden-data regression over the embedded corpus: parse shape,
/// connectivity, non-colorability, criticality, maximal loop order, and the
/// parity verdict, one pass/fail check per property.
pub fn verify_corpus() -> CorpusReport {
    verify_entries(corpus::ALL.iter().copied())
}

/// Same regression over corpus entries loaded from a TSV file with columns
/// name, mmp, vertices, blocks, loop order (or '-'), critical, parity.
pub fn verify_corpus_file(path: &Path) -> Result<CorpusReport, PipelineError> {
    let text = fs::read_to_string(path).map_err(|e| PipelineError::Corpus {
        path: path.to_path_buf(),
        detail: format!("unreadable: {e}"),
    })?;
    let mut entries: Vec<(String, String, usize, usize, Option<usize>, bool, bool)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let fail = |detail: String| PipelineError::Corpus {
            path: path.to_path_buf(),
            detail: format!("line {}: {detail}", lineno + 1),
        };
        if fields.len() != 7 {
            return Err(fail(format!("expected 7 tab-separated fields, got {}", fields.len())));
        }
        let parse_usize =
            |s: &str| s.parse::<usize>().map_err(|e| fail(format!("bad number {s:?}: {e}")));
        let parse_bool =
            |s: &str| s.parse::<bool>().map_err(|e| fail(format!("bad flag {s:?}: {e}")));
        let loop_order = if fields[4] == "-" {
            None
        } else {
            Some(parse_usize(fields[4])?)
        };
        entries.push((
            fields[0].to_string(),
            fields[1].to_string(),
            parse_usize(fields[2])?,
            parse_usize(fields[3])?,
            loop_order,
            parse_bool(fields[5])?,
            parse_bool(fields[6])?,
        ));
    }
    let owned: Vec<corpus::CorpusEntry> = Vec::new();
    drop(owned);
    let mut report = CorpusReport::default();
    for (name, mmp_text, n, b, loop_order, critical, parity) in &entries {
        check_one(
            &mut report,
            name,
            mmp_text,
            *n,
            *b,
            *loop_order,
            *critical,
            *parity,
        );
    }
    Ok(report)
}

fn verify_entries<'a, I>(entries: I) -> CorpusReport
where
    I: Iterator<Item = corpus::CorpusEntry>,
{
    let mut report = CorpusReport::default();
    for e in entries {
        check_one(
            &mut report,
            e.name,
            e.mmp,
            e.vertex_count,
            e.block_count,
            e.max_loop_order,
            e.critical,
            e.parity_holds,
        );
    }
    report
}

#[allow(clippy::too_many_arguments)]
fn check_one(
    report: &mut CorpusReport,
    name: &str,
    mmp_text: &str,
    n: usize,
    b: usize,
    loop_order: Option<usize>,
    critical: bool,
    parity: bool,
) {
    let parsed = match mmp::parse(mmp_text) {
        Ok(p) => p,
        Err(e) => {
            report.push(name, "parse", false, e.to_string());
            return;
        }
    };
    let h = parsed.hypergraph;
    report.push(
        name,
        "parse",
        h.vertex_count() == n && h.edge_count() == b,
        format!("{}-{}", h.vertex_count(), h.edge_count()),
    );
    report.push(name, "connected", h.is_connected(), String::new());
    report.push(name, "noncolorable", is_noncolorable(&h), String::new());
    let crit = is_critical(&h);
    report.push(
        name,
        "critical",
        crit == critical,
        format!("expected {critical}, found {crit}"),
    );
    if let Some(want) = loop_order {
        let got = max_loop_with_budget(&h, DEFAULT_NODE_BUDGET);
        report.push(
            name,
            "max_loop_order",
            got.complete && got.order == want,
            format!("expected {want}, found {}", got.order),
        );
    }
    let verdict = parity_proof(&h);
    report.push(
        name,
        "parity",
        verdict.holds == parity,
        format!("expected {parity}, found {}", verdict.holds),
    );
}
