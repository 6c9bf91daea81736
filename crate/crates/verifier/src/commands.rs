//! Command-line interface.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ringlab_core::arith::{
    arith_is_prime, arith_is_r_ideal, arith_is_s_r_ideal, arith_oracle_check, ArithClaim, ArithIdeal, ArithMCS,
    ArithRing, Factor,
};
use ringlab_core::classify::{
    has_ac, has_fac, has_property_a, is_pr_ideal, is_r_ideal, is_s_prime, is_s_r_ideal, is_s_uz_ring, is_s_z0_ideal,
    is_uz_ring, is_z0_ideal, Counterexample, Verdict,
};
use ringlab_core::dsl::build_ring;
use ringlab_core::hom::isomorphic;
use ringlab_core::ideal::{prime_counterexample, Ideal, IdealLattice, MulClosedSet};
use ringlab_core::localize::{localize, localize_oracle};
use ringlab_core::poly::{
    bounded_s_r_search, decide_content_s_r, poly_s_unit_check, PolyIdealSpec, PolyRing, SUnitResult,
};
use ringlab_core::{Limits, Ring};

use crate::corpus::{default_corpus, finite_mcs_gens, parse_corpus, CorpusSpec};
use crate::error::{Result, VerifierError};
use crate::registry::{lookup, ARITH_BOUND, REGISTRY};
use crate::report::summarize;
use crate::runner::{run, run_entry, RunOptions};

/// Largest ring on which `localize` runs the fraction-ring comparison.
const ORACLE_MAX: usize = 24;

#[derive(Debug, Parser)]
#[command(name = "ringlab", version, about = "Explore S-r-ideals of commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate predicates on a ring, an ideal and a multiplicative set.
    Classify {
        ring: String,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        mcs: Option<String>,
        /// Include the ring-level predicates.
        #[arg(long)]
        all_predicates: bool,
    },
    /// List the ideals of a finite ring.
    Ideals { ring: String },
    /// Run registry theorems over a corpus.
    Verify {
        /// Comma-separated theorem ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Re-run one theorem with hypotheses left unenforced.
    Hunt {
        theorem: String,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        drop: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List registered theorems and their hypotheses.
    Theorems,
    /// Re-run the cases named by report records (JSON lines; `-` reads stdin).
    Replay {
        records: PathBuf,
        /// Degree bound for polynomial searches.
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Decide S-r questions for ideals of R[x].
    Poly {
        base: String,
        /// `content <gens>`, `kernel <point> <gens>` or `unit <coeffs>`.
        kind: String,
        args: Vec<String>,
        #[arg(long)]
        mcs: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Localize a finite ring at a multiplicative set.
    Localize {
        ring: String,
        #[arg(long)]
        mcs: String,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Corpus file; the built-in corpus when omitted.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write JSON lines here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
    /// One record per annotation combination.
    #[arg(long)]
    per_case: bool,
    /// Record wall time per record.
    #[arg(long)]
    timings: bool,
}

/// Runs a parsed command and returns the process exit code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Classify {
            ring,
            ideal,
            mcs,
            all_predicates,
        } => classify(&ring, ideal.as_deref(), mcs.as_deref(), all_predicates, &limits, out),
        Command::Ideals { ring } => ideals(&ring, &limits, out),
        Command::Verify { theorems, run } => verify(theorems, Vec::new(), &run, out, err),
        Command::Hunt { theorem, drop, run } => verify(vec![theorem], drop, &run, out, err),
        Command::Theorems => {
            for t in REGISTRY {
                writeln!(out, "{}\t{}\thypotheses: {}", t.id, t.summary, t.hypotheses.join(", "))?;
            }
            Ok(0)
        }
        Command::Poly {
            base,
            kind,
            args,
            mcs,
            degree,
        } => poly(&base, &kind, &args, mcs.as_deref(), degree, &limits, out),
        Command::Localize { ring, mcs } => localize_cmd(&ring, &mcs, &limits, out),
        Command::Replay { records, degree } => replay(&records, degree, &limits, out),
    }
}

fn verdict_line<E: Display>(name: &str, v: &Verdict<E>) -> String {
    let mut line = format!("{name}={}", v.outcome);
    if let Some(w) = &v.witness {
        line.push_str(&format!(" witness={w}"));
    }
    match &v.counterexample {
        Some(Counterexample::Pair(w, z)) => line.push_str(&format!(" counterexample=({w}, {z})")),
        Some(Counterexample::Element(a)) => line.push_str(&format!(" counterexample={a}")),
        Some(Counterexample::Set(s)) => {
            let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            line.push_str(&format!(" counterexample={{{}}}", parts.join(", ")))
        }
        None => {}
    }
    if let Some(r) = &v.reason {
        line.push_str(&format!(" reason={r}"));
    }
    line
}

fn labelled(ring: &Ring, v: Verdict) -> Verdict<String> {
    v.map(|e| ring.literal(e).to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// An integer product, when the text names at least one `Z` factor.
fn as_arith(text: &str) -> Option<ArithRing> {
    ArithRing::parse(text)
        .ok()
        .filter(|r| r.factors().contains(&Factor::Int))
}

fn classify(
    text: &str,
    ideal: Option<&str>,
    mcs: Option<&str>,
    all: bool,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<i32> {
    if let Some(ring) = as_arith(text) {
        return classify_arith(&ring, ideal, mcs, out);
    }
    let ring = build_ring(text, limits)?;
    writeln!(out, "ring={} size={}", ring.recipe(), ring.size())?;
    let s = mcs.map(|t| finite_mcs_gens(&ring, t)).transpose()?;
    let s = s.map(|g| MulClosedSet::generate(&ring, &g));
    if all || ideal.is_none() {
        writeln!(out, "{}", verdict_line("uz", &labelled(&ring, is_uz_ring(&ring))))?;
        writeln!(out, "reduced={}", yes_no(ring.is_reduced()))?;
        writeln!(out, "{}", verdict_line("property_a", &labelled(&ring, has_property_a(&ring))))?;
        writeln!(out, "{}", verdict_line("ac", &labelled(&ring, has_ac(&ring))))?;
        writeln!(out, "{}", verdict_line("fac", &labelled(&ring, has_fac(&ring, limits.fac_cap))))?;
        if let Some(s) = &s {
            writeln!(out, "{}", verdict_line("s_uz", &labelled(&ring, is_s_uz_ring(&ring, s))))?;
        }
    }
    let Some(ideal) = ideal else { return Ok(0) };
    let gens = ringlab_core::dsl::resolve_all(&ring, &ringlab_core::dsl::parse_lits(ideal)?)?;
    let a = Ideal::generate(&ring, &gens);
    let lattice = IdealLattice::new(&ring);
    writeln!(out, "ideal=({}) size={}", ring.literal_list(a.generators()), a.len())?;
    writeln!(out, "{}", verdict_line("r", &labelled(&ring, is_r_ideal(&a))))?;
    writeln!(out, "{}", verdict_line("pr", &labelled(&ring, is_pr_ideal(&a))))?;
    let mut prime = format!("prime={}", yes_no(lattice.is_prime(&a)));
    if let Some((x, y)) = prime_counterexample(&a) {
        prime.push_str(&format!(" counterexample=({}, {})", ring.literal(x), ring.literal(y)));
    }
    writeln!(out, "{prime}")?;
    writeln!(out, "maximal={}", yes_no(lattice.is_maximal(&a)))?;
    writeln!(out, "in_zd={}", yes_no(a.members().all(|x| ring.is_zero_divisor(x))))?;
    writeln!(out, "{}", verdict_line("z0", &labelled(&ring, is_z0_ideal(&a))))?;
    if let Some(s) = &s {
        writeln!(out, "mcs={}", s.display())?;
        writeln!(out, "{}", verdict_line("s_r", &labelled(&ring, is_s_r_ideal(&a, s))))?;
        writeln!(out, "{}", verdict_line("s_prime", &labelled(&ring, is_s_prime(&a, s))))?;
        writeln!(out, "{}", verdict_line("s_z0", &labelled(&ring, is_s_z0_ideal(&a, s))))?;
    }
    Ok(0)
}

fn classify_arith(ring: &ArithRing, ideal: Option<&str>, mcs: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "ring={ring}")?;
    let Some(ideal) = ideal else {
        writeln!(out, "uz=no")?;
        return Ok(0);
    };
    let a = ArithIdeal::parse(ring, ideal)?;
    writeln!(out, "ideal={a}")?;
    writeln!(out, "prime={}", yes_no(arith_is_prime(&a)?))?;
    let r = arith_is_r_ideal(&a);
    let mut agrees = arith_oracle_check(&a, &ArithClaim::RIdeal(r.clone()), ARITH_BOUND);
    writeln!(out, "{}", verdict_line("r", &r))?;
    if let Some(text) = mcs {
        let s = ArithMCS::parse(ring, text)?;
        let v = arith_is_s_r_ideal(&a, &s, ARITH_BOUND);
        agrees &= arith_oracle_check(&a, &ArithClaim::SRIdeal(s.clone(), v.clone()), ARITH_BOUND);
        writeln!(out, "mcs={s}")?;
        writeln!(out, "{}", verdict_line("s_r", &v))?;
    }
    writeln!(
        out,
        "oracle={} bound={ARITH_BOUND}",
        if agrees { "agrees" } else { "disagrees" }
    )?;
    Ok(if agrees { 0 } else { 1 })
}

fn ideals(text: &str, limits: &Limits, out: &mut dyn Write) -> Result<i32> {
    let ring = build_ring(text, limits)?;
    let lattice = IdealLattice::new(&ring);
    for a in lattice.ideals() {
        let mut tags = Vec::new();
        if !a.is_proper() {
            tags.push("unit");
        }
        if lattice.is_prime(a) {
            tags.push("prime");
        }
        if lattice.is_maximal(a) {
            tags.push("maximal");
        }
        let gens = if a.generators().is_empty() {
            "0".to_string()
        } else {
            ring.literal_list(a.generators())
        };
        writeln!(out, "({gens}) size={} {}", a.len(), tags.join(" "))?;
    }
    writeln!(out, "{} ideals", lattice.len())?;
    Ok(0)
}

fn load_corpus(path: Option<&PathBuf>) -> Result<CorpusSpec> {
    match path {
        Some(p) => parse_corpus(&fs::read_to_string(p)?, Limits::from_env()),
        None => Ok(default_corpus()),
    }
}

fn verify(
    theorems: Vec<String>,
    dropped: Vec<String>,
    args: &RunArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let corpus = load_corpus(args.corpus.as_ref())?;
    let opts = RunOptions {
        theorems,
        dropped,
        jobs: args.jobs,
        per_case: args.per_case,
        timings: args.timings,
    };
    let records = run(&corpus, &opts)?;
    let mut text = String::new();
    for r in &records {
        text.push_str(&r.to_json_line());
        text.push('\n');
    }
    match &args.json {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    let mut unexpected = 0;
    for (id, c, n) in summarize(&records) {
        unexpected += c.unexpected();
        writeln!(
            err,
            "{id:<10} records={n:<4} cases={:<7} verified={:<7} vacuous={:<7} violations={} (expected {})",
            c.total(),
            c.verified,
            c.vacuous,
            c.violation,
            c.expected_violation
        )?;
    }
    writeln!(err, "unexpected violations: {unexpected}")?;
    Ok(if unexpected > 0 { 1 } else { 0 })
}

fn poly(
    base: &str,
    kind: &str,
    args: &[String],
    mcs: Option<&str>,
    degree: Option<usize>,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<i32> {
    let ring = build_ring(base, limits)?;
    let pr = PolyRing::new(&ring, limits);
    let d = degree.unwrap_or(limits.degree);
    let s = MulClosedSet::generate(&ring, &finite_mcs_gens(&ring, mcs.unwrap_or("1"))?);
    let gens = |text: &str| -> Result<Ideal> {
        let g = ringlab_core::dsl::resolve_all(&ring, &ringlab_core::dsl::parse_lits(text)?)?;
        Ok(Ideal::generate(&ring, &g))
    };
    let arg = |k: usize| {
        args.get(k)
            .map(String::as_str)
            .ok_or_else(|| VerifierError::Usage(format!("`poly {kind}` needs more arguments")))
    };
    match kind {
        "content" => {
            let a = gens(arg(0)?)?;
            let v = decide_content_s_r(&pr, &a, &s, d)?;
            writeln!(out, "{}", v.describe(&pr))?;
        }
        "kernel" => {
            let point = ring.resolve(&ringlab_core::dsl::parse_lits(arg(0)?)?[0])?;
            let spec = PolyIdealSpec::EvalKernel {
                point,
                ideal: gens(arg(1)?)?,
            };
            let v = bounded_s_r_search(&pr, &spec, &s, d)?;
            writeln!(out, "{}", v.describe(&pr))?;
        }
        "unit" => {
            let f = pr.parse(arg(0)?)?;
            let line = match poly_s_unit_check(&pr, &f, &s, d)? {
                SUnitResult::Yes(g) => format!("yes, {} times {} lies in S", pr.display(&f), pr.display(&g)),
                SUnitResult::NoUpTo { degree, root } => match root {
                    Some(r) => format!(
                        "no up to degree {degree}; {} has the root {}, so every multiple vanishes there",
                        pr.display(&f),
                        ring.literal(r)
                    ),
                    None => format!("no up to degree {degree}"),
                },
                SUnitResult::AnalyticNo => format!(
                    "analytic_no: {} has zero constant term and 0 is not in S",
                    pr.display(&f)
                ),
            };
            writeln!(out, "{line}")?;
        }
        other => {
            return Err(VerifierError::Usage(format!(
                "unknown poly kind `{other}` (expected content, kernel or unit)"
            )))
        }
    }
    Ok(0)
}

fn localize_cmd(text: &str, mcs: &str, limits: &Limits, out: &mut dyn Write) -> Result<i32> {
    let ring = build_ring(text, limits)?;
    let s = MulClosedSet::generate(&ring, &finite_mcs_gens(&ring, mcs)?);
    let loc = localize(&s)?;
    writeln!(out, "mcs={}", s.display())?;
    writeln!(out, "localized={} size={}", loc.localized.recipe(), loc.localized.size())?;
    writeln!(out, "idempotent={}", ring.literal(loc.absorbing_idempotent))?;
    writeln!(out, "kernel=({})", ring.literal_list(loc.kernel.generators()))?;
    if ring.size() <= ORACLE_MAX {
        let oracle = localize_oracle(&s, limits)?;
        let iso = isomorphic(&loc.localized, &oracle, ORACLE_MAX);
        writeln!(out, "oracle={}", if iso { "isomorphic" } else { "not isomorphic" })?;
        return Ok(if iso { 0 } else { 1 });
    }
    writeln!(out, "oracle=skipped")?;
    Ok(0)
}

#[derive(serde::Deserialize)]
struct RecordKey {
    theorem: String,
    entry: String,
    annotations: std::collections::BTreeMap<String, String>,
    outcome: crate::report::RecordOutcome,
    dropped: Vec<String>,
}

fn replay(path: &PathBuf, degree: usize, limits: &Limits, out: &mut dyn Write) -> Result<i32> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        fs::read_to_string(path)?
    };
    let mut mismatches = 0;
    for (n, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let key: RecordKey = serde_json::from_str(line).map_err(|e| VerifierError::Corpus {
            line: n + 1,
            msg: e.to_string(),
        })?;
        let def = lookup(&key.theorem).ok_or_else(|| VerifierError::UnknownTheorem(key.theorem.clone()))?;
        let cases = run_entry(def, &key.entry, limits, degree, &key.dropped)?;
        let found = cases.iter().find(|c| c.annotations == key.annotations);
        let status = match found {
            Some(c) if c.outcome == key.outcome => "reproduced",
            Some(_) => "differs",
            None => "missing",
        };
        if status != "reproduced" {
            mismatches += 1;
        }
        let text = |o: crate::report::RecordOutcome| serde_json::to_value(o).expect("outcomes serialize");
        let now = found.map_or(serde_json::Value::from("NONE"), |c| text(c.outcome));
        writeln!(
            out,
            "{} [{}] {} recorded={} replayed={now} {status}",
            key.theorem,
            key.entry,
            serde_json::to_string(&key.annotations).expect("annotations serialize"),
            text(key.outcome)
        )?;
    }
    Ok(if mismatches > 0 { 1 } else { 0 })
}
