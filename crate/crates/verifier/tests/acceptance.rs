//! Acceptance checks. Prints one pass/fail line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringlab_core::arith::{arith_is_r_ideal, arith_oracle_check, ArithClaim, ArithIdeal, ArithRing};
use ringlab_core::classify::{is_r_ideal, is_uz_ring};
use ringlab_core::hom::find_isomorphism;
use ringlab_core::ideal::{Ideal, IdealLattice, MulClosedSet};
use ringlab_core::localize::{localize, localize_oracle};
use ringlab_core::poly::{bounded_s_r_search, dedekind_mertens_check, PolyIdealSpec, PolyOutcome, PolyRing};
use ringlab_core::Limits;
use ringlab_verifier::corpus::{default_corpus, EntryKind};
use ringlab_verifier::registry::{FinitePrep, DM_PAIRS, DM_SEED};
use serde_json::Value;

type Check = Result<String, String>;

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .output()
        .expect("ringlab binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("{what} took {:.2?}, limit {:.0?}", elapsed, limit),
    )
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
}

fn z12_ideals() -> Check {
    let start = Instant::now();
    let out = ringlab(&["ideals", "Z12"]);
    let text = stdout(&out);
    ensure(out.status.success(), "ideals exited with failure")?;
    ensure(text.lines().last() == Some("6 ideals"), format!("unexpected listing:\n{text}"))?;
    let gens: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with('(') && !l.contains("unit"))
        .map(|l| l[1..l.find(')').unwrap()].trim())
        .collect();
    ensure(gens.len() == 5, format!("expected 5 proper ideals, got {}", gens.len()))?;
    for g in &gens {
        let c = stdout(&ringlab(&["classify", "Z12", "--ideal", g]));
        ensure(field(&c, "r") == Some("yes"), format!("({g}) is not classified as an r-ideal:\n{c}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1), "listing and classification")?;
    Ok(format!("6 ideals, 5 proper r-ideals, {:.0?}", start.elapsed()))
}

fn z6_zero_ideal() -> Check {
    let c = stdout(&ringlab(&["classify", "Z6", "--ideal", "0"]));
    ensure(field(&c, "r") == Some("yes"), format!("(0) not an r-ideal:\n{c}"))?;
    ensure(
        field(&c, "prime") == Some("no counterexample=(2, 3)"),
        format!("prime line differs:\n{c}"),
    )?;
    Ok("(0) is r, not prime, counterexample (2, 3)".into())
}

fn arith_examples() -> Check {
    let c = stdout(&ringlab(&["classify", "Z", "--ideal", "3"]));
    ensure(field(&c, "prime") == Some("yes"), format!("3Z prime line:\n{c}"))?;
    ensure(field(&c, "r") == Some("no counterexample=(3, 1)"), format!("3Z r line:\n{c}"))?;
    ensure(field(&c, "oracle") == Some("agrees bound=10"), format!("3Z oracle:\n{c}"))?;
    let c = stdout(&ringlab(&["classify", "Z x Z", "--ideal", "0,2", "--mcs", "units,all"]));
    ensure(
        field(&c, "r").is_some_and(|v| v.starts_with("no ")),
        format!("0 x 2Z r line:\n{c}"),
    )?;
    ensure(field(&c, "s_r") == Some("yes witness=(1,0)"), format!("0 x 2Z s_r line:\n{c}"))?;
    ensure(field(&c, "oracle") == Some("agrees bound=10"), format!("0 x 2Z oracle:\n{c}"))?;
    Ok("3Z prime and not r via (3, 1); 0 x 2Z S-r with witness (1,0); oracle agrees".into())
}

fn poly_example() -> Check {
    let start = Instant::now();
    for base in ["Z2", "Z3"] {
        let k = stdout(&ringlab(&["poly", base, "kernel", "1", "0", "--mcs", "units", "--degree", "3"]));
        ensure(k.starts_with("NO at degree 1,"), format!("{base} kernel search:\n{k}"))?;
        let u = stdout(&ringlab(&["poly", base, "unit", "x", "--mcs", "units", "--degree", "3"]));
        ensure(u.starts_with("analytic_no"), format!("{base} S-unit check:\n{u}"))?;
        let limits = Limits::default();
        let ring = ringlab_core::dsl::build_ring(base, &limits).map_err(|e| e.to_string())?;
        let pr = PolyRing::new(&ring, &limits);
        let spec = PolyIdealSpec::EvalKernel {
            point: 1,
            ideal: Ideal::zero(&ring),
        };
        let v = bounded_s_r_search(&pr, &spec, &MulClosedSet::regulars(&ring), 3).map_err(|e| e.to_string())?;
        match v.outcome {
            PolyOutcome::No { degree, .. } => ensure(degree <= 1, format!("{base}: counterexample at degree {degree}"))?,
            other => return Err(format!("{base}: search returned {other:?}")),
        }
    }
    within(start.elapsed(), Duration::from_secs(5), "searches at D = 3")?;
    Ok(format!("NO at degree 1 over Z2 and Z3, x analytic_no, {:.0?}", start.elapsed()))
}

struct FullRun {
    bytes: Vec<u8>,
    elapsed: Duration,
}

fn full_verify(jobs: &str, path: &PathBuf) -> Result<FullRun, String> {
    let start = Instant::now();
    let out = ringlab(&["verify", "--jobs", jobs, "--json", path.to_str().unwrap()]);
    let elapsed = start.elapsed();
    ensure(
        out.status.code() == Some(0),
        format!("verify exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)),
    )?;
    let bytes = std::fs::read(path).map_err(|e| e.to_string())?;
    Ok(FullRun { bytes, elapsed })
}

fn records(bytes: &[u8]) -> Result<Vec<Value>, String> {
    String::from_utf8_lossy(bytes)
        .lines()
        .map(|l| serde_json::from_str(l).map_err(|e| e.to_string()))
        .collect()
}

const REQUIRED: &[&str] = &[
    "T2.3", "T2.5", "P2.6", "T2.7", "P2.8", "P2.10", "T2.11", "T2.12", "C-zd", "P-jac", "P-zero", "P-colon",
    "P-annsum", "P-minidem", "P-sidem", "P-suz", "P-suzmax", "L3.1", "P3.2", "P3.3", "T4.1", "T4.2", "DM", "DEGEN",
];
const NON_VACUOUS: &[&str] = &["T2.7", "T2.12", "P2.8", "P-suz", "L3.1", "DM", "DEGEN"];

fn theorem_suite(single: &FullRun, parallel: &FullRun) -> Check {
    let recs = records(&single.bytes)?;
    let unexpected: Vec<&Value> = recs
        .iter()
        .filter(|r| r["outcome"] == "VIOLATION" && r["expected"] == false)
        .collect();
    ensure(
        unexpected.is_empty(),
        format!("{} unexpected violations, first: {}", unexpected.len(), unexpected.first().map_or(String::new(), |r| r.to_string())),
    )?;
    let verified = |id: &str| -> u64 {
        recs.iter()
            .filter(|r| r["theorem"] == id)
            .map(|r| r["cases"]["verified"].as_u64().unwrap_or(0))
            .sum()
    };
    for id in REQUIRED {
        ensure(recs.iter().any(|r| r["theorem"] == *id), format!("no records for {id}"))?;
    }
    for id in NON_VACUOUS {
        ensure(verified(id) > 0, format!("{id} has no verified cases"))?;
    }
    within(single.elapsed, Duration::from_secs(600), "single-threaded run")?;
    within(parallel.elapsed, Duration::from_secs(180), "4-way run")?;
    Ok(format!(
        "{} records, 0 unexpected violations, {:.1?} with 1 job, {:.1?} with 4 jobs",
        recs.len(),
        single.elapsed,
        parallel.elapsed
    ))
}

fn localization_oracle() -> Check {
    let corpus = default_corpus();
    let mut pairs = 0;
    for entry in &corpus.entries {
        let (ring, ideal, mcs) = match &entry.kind {
            EntryKind::Finite { ring, ideal, mcs } | EntryKind::Poly { base: ring, ideal, mcs } => (ring, ideal, mcs),
            _ => continue,
        };
        if ring.size() > 24 {
            continue;
        }
        let prep = FinitePrep::new(ring, ideal.as_deref(), mcs.as_deref());
        for s in &prep.mcs {
            let loc = localize(s).map_err(|e| e.to_string())?;
            let oracle = localize_oracle(s, &corpus.limits).map_err(|e| e.to_string())?;
            ensure(
                find_isomorphism(&loc.localized, &oracle).is_some(),
                format!("{} at {}: constructions differ", entry.text, s.display()),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (ring, m.c.s.) pairs isomorphic"))
}

fn dedekind_mertens() -> Check {
    let start = Instant::now();
    let limits = Limits::default();
    for base in ["Z6", "Z12", "Z2 x Z2"] {
        let ring = ringlab_core::dsl::build_ring(base, &limits).map_err(|e| e.to_string())?;
        let pr = PolyRing::new(&ring, &limits);
        let mut rng = ChaCha8Rng::seed_from_u64(DM_SEED);
        let mut random = || {
            let d = rng.gen_range(0..=4);
            let coeffs: Vec<usize> = (0..=d).map(|_| rng.gen_range(0..ring.size())).collect();
            pr.poly(&coeffs)
        };
        for k in 0..DM_PAIRS {
            let (w, z) = (random().map_err(|e| e.to_string())?, random().map_err(|e| e.to_string())?);
            ensure(
                dedekind_mertens_check(&pr, &w, &z),
                format!("{base} pair {k}: {} and {}", pr.display(&w), pr.display(&z)),
            )?;
        }
    }
    within(start.elapsed(), Duration::from_secs(30), "Dedekind-Mertens pairs")?;
    Ok(format!("{DM_PAIRS} pairs each over Z6, Z12, Z2 x Z2, {:.0?}", start.elapsed()))
}

fn degeneracy() -> Check {
    let corpus = default_corpus();
    let (mut finite, mut arith_non_r, mut poly_non_r) = (0, 0, 0);
    for entry in &corpus.entries {
        match &entry.kind {
            EntryKind::Finite { ring, .. } => {
                ensure(is_uz_ring(ring).is_holds(), format!("{} is not a uz-ring", entry.text))?;
                for a in IdealLattice::new(ring).proper() {
                    ensure(
                        is_r_ideal(a).is_holds(),
                        format!("{}: {} is not an r-ideal", entry.text, a.display()),
                    )?;
                }
                finite += 1;
            }
            EntryKind::Arith { ring, .. } => {
                if has_non_r_ideal(ring)? {
                    arith_non_r += 1;
                }
            }
            EntryKind::Poly { base, .. } => {
                let pr = PolyRing::new(base, &corpus.limits);
                let spec = PolyIdealSpec::EvalKernel {
                    point: base.one(),
                    ideal: Ideal::zero(base),
                };
                let v = bounded_s_r_search(&pr, &spec, &MulClosedSet::trivial(base), corpus.degree)
                    .map_err(|e| e.to_string())?;
                if matches!(v.outcome, PolyOutcome::No { .. }) {
                    poly_non_r += 1;
                }
            }
            EntryKind::ZAmalg { .. } => {}
        }
    }
    ensure(arith_non_r > 0, "no arith entry has a non-r ideal")?;
    ensure(poly_non_r > 0, "no poly entry has a non-r ideal")?;
    Ok(format!(
        "{finite} finite rings uz with all proper ideals r; non-r ideals in {arith_non_r} arith and {poly_non_r} poly entries"
    ))
}

fn has_non_r_ideal(ring: &ArithRing) -> Result<bool, String> {
    let descriptors: Vec<u64> = ring
        .factors()
        .iter()
        .map(|f| match f {
            ringlab_core::arith::Factor::Int => 3,
            ringlab_core::arith::Factor::Mod(_) => 1,
        })
        .collect();
    let a = ArithIdeal::new(ring, &descriptors).map_err(|e| e.to_string())?;
    if !a.is_proper() {
        return Ok(false);
    }
    let v = arith_is_r_ideal(&a);
    Ok(v.is_fails() && arith_oracle_check(&a, &ArithClaim::RIdeal(v), 10))
}

fn hunts_and_determinism(first: &FullRun, second: &FullRun, dir: &Path) -> Check {
    let mut notes = Vec::new();
    for (theorem, drop) in [("T2.12", "prime"), ("P2.10", "reduced")] {
        let path = dir.join(format!("hunt-{theorem}.jsonl"));
        let out = ringlab(&["hunt", theorem, "--drop", drop, "--json", path.to_str().unwrap()]);
        ensure(
            out.status.code() == Some(0),
            format!("hunt {theorem} exited with {:?}", out.status.code()),
        )?;
        let recs = records(&std::fs::read(&path).map_err(|e| e.to_string())?)?;
        let violations: Vec<&Value> = recs.iter().filter(|r| r["outcome"] == "VIOLATION").collect();
        ensure(
            violations.iter().all(|r| r["expected"] == true),
            format!("hunt {theorem} has violations not flagged as expected"),
        )?;
        let cases: u64 = recs
            .iter()
            .map(|r| r["cases"]["expected_violation"].as_u64().unwrap_or(0))
            .sum();
        notes.push(format!("{theorem} without {drop}: {cases} expected violations"));
    }
    ensure(first.bytes == second.bytes, "consecutive full runs differ")?;
    notes.push(format!("full runs byte-identical ({} bytes)", first.bytes.len()));
    Ok(notes.join("; "))
}

fn main() {
    let dir = std::env::temp_dir().join(format!("ringlab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let runs = full_verify("1", &dir.join("run1.jsonl")).and_then(|a| Ok((a, full_verify("4", &dir.join("run2.jsonl"))?)));

    let mut results: Vec<(usize, &str, Check, Duration)> = Vec::new();
    let mut run = |n: usize, name: &'static str, f: &dyn Fn() -> Check| {
        let start = Instant::now();
        let r = f();
        results.push((n, name, r, start.elapsed()));
    };
    run(1, "Z12 ideals are r-ideals", &z12_ideals);
    run(2, "Z6 zero ideal", &z6_zero_ideal);
    run(3, "integer product examples", &arith_examples);
    run(4, "F[x] evaluation kernel", &poly_example);
    run(5, "theorem suite", &|| {
        let (a, b) = runs.as_ref().map_err(Clone::clone)?;
        theorem_suite(a, b)
    });
    run(6, "localization oracle", &localization_oracle);
    run(7, "Dedekind-Mertens", &dedekind_mertens);
    run(8, "degeneracy documentation", &degeneracy);
    run(9, "hypothesis hunts and determinism", &|| {
        let (a, b) = runs.as_ref().map_err(Clone::clone)?;
        hunts_and_determinism(a, b, &dir)
    });

    let mut failed = 0;
    for (n, name, r, t) in &results {
        match r {
            Ok(msg) => println!("criterion {n} PASS {name}: {msg} [{t:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n} FAIL {name}: {msg} [{t:.2?}]");
            }
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    if failed > 0 {
        println!("{failed} of {} criteria failed", results.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", results.len());
}
