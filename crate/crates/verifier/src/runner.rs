//! Runs registry theorems over a corpus in parallel with deterministic output.

use std::time::Instant;

use rayon::prelude::*;

use crate::corpus::CorpusSpec;
use crate::error::{Result, VerifierError};
use crate::registry::{lookup, prepare, Ctx, TheoremDef, REGISTRY};
use crate::report::{aggregate, per_case, ReportRecord, UnitInfo};

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Theorem ids; empty selects the whole registry.
    pub theorems: Vec<String>,
    /// Hypotheses left unenforced.
    pub dropped: Vec<String>,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
    /// One record per case instead of one per (theorem, entry).
    pub per_case: bool,
    /// Fill in `millis`; off by default so reports are byte-stable.
    pub timings: bool,
}

/// Resolves theorem ids in registry order, rejecting unknown ones.
pub fn select(ids: &[String]) -> Result<Vec<&'static TheoremDef>> {
    if ids.is_empty() {
        return Ok(REGISTRY.iter().collect());
    }
    let mut chosen = Vec::new();
    for id in ids {
        let def = lookup(id).ok_or_else(|| VerifierError::UnknownTheorem(id.clone()))?;
        if !chosen.iter().any(|d: &&TheoremDef| d.id == def.id) {
            chosen.push(def);
        }
    }
    chosen.sort_by_key(|d| REGISTRY.iter().position(|r| r.id == d.id));
    Ok(chosen)
}

/// Every dropped name must be a hypothesis of every selected theorem.
pub fn validate_drops(defs: &[&TheoremDef], dropped: &[String]) -> Result<()> {
    for def in defs {
        for name in dropped {
            if !def.hypotheses.contains(&name.as_str()) {
                return Err(VerifierError::UnknownHypothesis {
                    theorem: def.id.to_string(),
                    name: name.clone(),
                    known: def.hypotheses.join(", "),
                });
            }
        }
    }
    Ok(())
}

/// Evaluates the selected theorems on every applicable entry. Records come
/// out theorem by theorem, each in corpus order, whatever the thread count.
pub fn run(corpus: &CorpusSpec, opts: &RunOptions) -> Result<Vec<ReportRecord>> {
    let defs = select(&opts.theorems)?;
    validate_drops(&defs, &opts.dropped)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| VerifierError::Usage(e.to_string()))?;
    pool.install(|| {
        let prepared = corpus
            .entries
            .par_iter()
            .map(|e| {
                prepare(e, &corpus.limits).map_err(|source| VerifierError::Check {
                    theorem: "prepare".into(),
                    entry: e.text.clone(),
                    source,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let units: Vec<(&TheoremDef, usize)> = defs
            .iter()
            .flat_map(|d| {
                corpus
                    .entries
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| d.applies_to(e))
                    .map(move |(k, _)| (*d, k))
            })
            .collect();
        let ctx = Ctx {
            dropped: &opts.dropped,
            limits: &corpus.limits,
            degree: corpus.degree,
        };
        let chunks = units
            .par_iter()
            .map(|&(def, k)| {
                let entry = &corpus.entries[k];
                let start = Instant::now();
                let cases = (def.run)(&ctx, entry, &prepared[k]).map_err(|source| VerifierError::Check {
                    theorem: def.id.to_string(),
                    entry: entry.text.clone(),
                    source,
                })?;
                let info = UnitInfo {
                    theorem: def.id.to_string(),
                    recipe: entry.recipe.clone(),
                    entry: entry.text.clone(),
                    scope: entry.scope(),
                    dropped: opts.dropped.clone(),
                    sample_seed: prepared[k].sample_seed(),
                    millis: opts.timings.then(|| start.elapsed().as_millis() as u64),
                };
                Ok(if opts.per_case {
                    per_case(&info, &cases)
                } else {
                    aggregate(&info, &cases).into_iter().collect()
                })
            })
            .collect::<Result<Vec<Vec<ReportRecord>>>>()?;
        Ok(chunks.into_iter().flatten().collect())
    })
}

/// Re-runs one theorem on one corpus line and returns every case.
pub fn run_entry(
    def: &TheoremDef,
    line: &str,
    limits: &ringlab_core::Limits,
    degree: usize,
    dropped: &[String],
) -> Result<Vec<crate::report::CaseResult>> {
    validate_drops(&[def], dropped)?;
    let entry = crate::corpus::parse_entry(line, limits)?;
    let wrap = |source| VerifierError::Check {
        theorem: def.id.to_string(),
        entry: line.to_string(),
        source,
    };
    let prepared = prepare(&entry, limits).map_err(wrap)?;
    let ctx = Ctx {
        dropped,
        limits,
        degree,
    };
    (def.run)(&ctx, &entry, &prepared).map_err(wrap)
}
