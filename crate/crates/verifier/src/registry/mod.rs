//! The theorem registry: every proposition as an executable check with named
//! hypotheses that hunts can switch off.

mod finite;
mod layers;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ringlab_core::arith::{ArithIdeal, ArithMCS, ArithRing, Factor, McsFactor};
use ringlab_core::classify::{is_s_r_ideal, is_s_r_ideal_with, SOptions, Verdict};
use ringlab_core::ext::ZAmalg;
use ringlab_core::ideal::{Ideal, IdealLattice, MulClosedSet};
use ringlab_core::localize::{localize, LocalizationResult};
use ringlab_core::poly::{bounded_s_r_search, PolyIdealSpec, PolyRing, PolyVerdict};
use ringlab_core::{Elem, Limits, Ring};
use serde_json::Value;

use crate::corpus::{Entry, EntryKind, Scope};
use crate::report::{CaseResult, RecordOutcome};

pub type CoreResult<T> = ringlab_core::Result<T>;

/// Cap on (ideal, m.c.s.) annotation pairs per ring.
pub const PAIR_CAP: usize = 4096;
/// Seed for the deterministic subsample taken above [`PAIR_CAP`].
pub const SAMPLE_SEED: u64 = 0x5EED_0001;
/// Seed for the Dedekind–Mertens random pairs.
pub const DM_SEED: u64 = 0xD3D3_4E27;
/// Number of random Dedekind–Mertens pairs per ring.
pub const DM_PAIRS: usize = 1000;
/// Window bound for closed-form oracles and witness searches.
pub const ARITH_BOUND: i64 = 10;

/// Evaluation context shared by the cases of one work unit.
pub struct Ctx<'a> {
    pub dropped: &'a [String],
    pub limits: &'a Limits,
    pub degree: usize,
}

/// The result of evaluating a statement.
pub struct Finding {
    pub ok: bool,
    pub data: Value,
}

pub fn finding(ok: bool, data: Value) -> Finding {
    Finding { ok, data }
}

pub type Annotations = BTreeMap<String, String>;

pub fn ann(pairs: &[(&str, String)]) -> Annotations {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

impl Ctx<'_> {
    pub fn dropped(&self, name: &str) -> bool {
        self.dropped.iter().any(|d| d == name)
    }

    /// Classifier options: dropping any disjointness hypothesis lets the
    /// classifiers evaluate sets that meet the ideal.
    pub fn opts(&self) -> SOptions {
        SOptions {
            check_disjoint: !self.dropped.iter().any(|d| d.ends_with("disjoint")),
            ..SOptions::default()
        }
    }

    /// Evaluates `stmt` when every hypothesis holds or is dropped.
    pub fn case(
        &self,
        annotations: Annotations,
        hyps: &[(&str, bool)],
        stmt: impl FnOnce() -> CoreResult<Finding>,
    ) -> CoreResult<CaseResult> {
        let hypotheses = hyps.iter().map(|(n, v)| (n.to_string(), *v)).collect();
        if !hyps.iter().all(|(n, v)| *v || self.dropped(n)) {
            return Ok(CaseResult {
                annotations,
                hypotheses,
                outcome: RecordOutcome::Vacuous,
                expected: false,
                witness: Value::Null,
                counterexample: Value::Null,
            });
        }
        let f = stmt()?;
        let expected = !f.ok && hyps.iter().any(|(n, v)| !*v && self.dropped(n));
        Ok(CaseResult {
            annotations,
            hypotheses,
            outcome: if f.ok {
                RecordOutcome::Verified
            } else {
                RecordOutcome::Violation
            },
            expected,
            witness: if f.ok { f.data.clone() } else { Value::Null },
            counterexample: if f.ok { Value::Null } else { f.data },
        })
    }
}

/// Element labels, `0` for an empty generator list.
pub fn ideal_text(a: &Ideal) -> String {
    if a.generators().is_empty() {
        "0".into()
    } else {
        a.ring().literal_list(a.generators())
    }
}

/// Generator labels, `1` for the trivial set.
pub fn mcs_text(s: &MulClosedSet) -> String {
    if s.generators().is_empty() {
        "1".into()
    } else {
        s.ring().literal_list(s.generators())
    }
}

pub fn label(ring: &Ring, e: Elem) -> Value {
    Value::String(ring.label(e).to_string())
}

pub fn verdict_json(ring: &Ring, v: &Verdict) -> Value {
    serde_json::to_value(v.clone().map(|e| ring.label(e).to_string())).expect("verdicts serialize")
}

/// The m.c.s. candidates of a finite ring: `{1}`, the regular elements, every
/// `S<a>`, and every prime complement, deduplicated and sorted.
pub fn mcs_candidates(ring: &Ring, lattice: &IdealLattice) -> Vec<MulClosedSet> {
    let mut out = vec![MulClosedSet::trivial(ring), MulClosedSet::regulars(ring)];
    out.extend(ring.elements().map(|a| MulClosedSet::generate(ring, &[a])));
    out.extend(
        lattice
            .spec()
            .into_iter()
            .filter_map(|p| MulClosedSet::complement(p).ok()),
    );
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(s.mask().clone()));
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    out
}

/// All pairs up to [`PAIR_CAP`], else a seeded subsample in index order.
pub fn capped_pairs(n_ideals: usize, n_mcs: usize) -> (Vec<(usize, usize)>, Option<u64>) {
    let total = n_ideals * n_mcs;
    let all = |k: usize| (k / n_mcs, k % n_mcs);
    if total <= PAIR_CAP {
        return ((0..total).map(all).collect(), None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut picked = sample(&mut rng, total, PAIR_CAP).into_vec();
    picked.sort_unstable();
    (picked.into_iter().map(all).collect(), Some(SAMPLE_SEED))
}

/// A finite ring with its lattice, candidate sets and memoized S-r verdicts.
pub struct FinitePrep {
    pub ring: Ring,
    pub lattice: IdealLattice,
    /// Lattice positions of the ideals under test.
    pub ideals: Vec<usize>,
    pub mcs: Vec<MulClosedSet>,
    pub pairs: Vec<(usize, usize)>,
    pub sample_seed: Option<u64>,
    memo: Vec<OnceLock<Verdict>>,
    loc: Vec<OnceLock<Option<LocalizationResult>>>,
}

impl FinitePrep {
    pub fn new(ring: &Ring, ideal: Option<&[Elem]>, mcs: Option<&[Elem]>) -> FinitePrep {
        let lattice = IdealLattice::new(ring);
        let ideals = match ideal {
            Some(gens) => vec![lattice.position(&Ideal::generate(ring, gens))],
            None => (0..lattice.len()).filter(|&i| lattice.get(i).is_proper()).collect(),
        };
        let mcs = match mcs {
            Some(gens) => vec![MulClosedSet::generate(ring, gens)],
            None => mcs_candidates(ring, &lattice),
        };
        let (pairs, sample_seed) = capped_pairs(ideals.len(), mcs.len());
        let pairs = pairs.into_iter().map(|(i, s)| (ideals[i], s)).collect();
        let memo = (0..lattice.len() * mcs.len()).map(|_| OnceLock::new()).collect();
        let loc = (0..mcs.len()).map(|_| OnceLock::new()).collect();
        FinitePrep {
            ring: ring.clone(),
            lattice,
            ideals,
            mcs,
            pairs,
            sample_seed,
            memo,
            loc,
        }
    }

    /// The localization at candidate `s`, when it fits the size limits.
    pub fn localization(&self, s: usize) -> Option<&LocalizationResult> {
        self.loc[s].get_or_init(|| localize(&self.mcs[s]).ok()).as_ref()
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        self.lattice.get(i)
    }

    pub fn pos(&self, a: &Ideal) -> usize {
        self.lattice.position(a)
    }

    /// `is_s_r_ideal` for lattice ideal `i` and candidate set `s`.
    pub fn s_r(&self, ctx: &Ctx, i: usize, s: usize) -> Verdict {
        let opts = ctx.opts();
        if opts == SOptions::default() {
            self.memo[i * self.mcs.len() + s]
                .get_or_init(|| is_s_r_ideal(self.ideal(i), &self.mcs[s]))
                .clone()
        } else {
            is_s_r_ideal_with(self.ideal(i), &self.mcs[s], opts)
        }
    }

    pub fn annotations(&self, i: usize, s: usize) -> Annotations {
        ann(&[("ideal", ideal_text(self.ideal(i))), ("mcs", mcs_text(&self.mcs[s]))])
    }
}

pub struct ArithPrep {
    pub ring: ArithRing,
    pub ideals: Vec<ArithIdeal>,
    pub mcs: Vec<ArithMCS>,
}

fn cartesian<T: Clone>(slots: &[Vec<T>]) -> Vec<Vec<T>> {
    slots.iter().fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect()
    })
}

impl ArithPrep {
    pub fn new(ring: &ArithRing, ideal: Option<&ArithIdeal>, mcs: Option<&ArithMCS>) -> CoreResult<ArithPrep> {
        let ideals = match ideal {
            Some(a) => vec![a.clone()],
            None => {
                let slots: Vec<Vec<u64>> = ring
                    .factors()
                    .iter()
                    .map(|f| match f {
                        Factor::Int => vec![0, 1, 2, 3, 4, 6],
                        Factor::Mod(n) => (1..=*n).filter(|d| n % d == 0).collect(),
                    })
                    .collect();
                cartesian(&slots)
                    .iter()
                    .map(|ds| ArithIdeal::new(ring, ds))
                    .collect::<CoreResult<Vec<_>>>()?
                    .into_iter()
                    .filter(|a| a.is_proper())
                    .collect()
            }
        };
        let mcs = match mcs {
            Some(s) => vec![s.clone()],
            None => {
                let options = vec![McsFactor::FinSet(vec![1]), McsFactor::Units, McsFactor::All];
                let slots = vec![options; ring.factors().len()];
                cartesian(&slots)
                    .into_iter()
                    .filter_map(|fs| ArithMCS::new(ring, fs).ok())
                    .collect()
            }
        };
        Ok(ArithPrep {
            ring: ring.clone(),
            ideals,
            mcs,
        })
    }
}

pub fn arith_ideal_text(a: &ArithIdeal) -> String {
    a.descriptors().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

pub fn arith_mcs_text(s: &ArithMCS) -> String {
    s.factors().iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",")
}

pub struct PolyPrep {
    pub finite: FinitePrep,
    pub poly: PolyRing,
    search: Vec<OnceLock<PolyVerdict>>,
}

impl PolyPrep {
    fn new(base: &Ring, ideal: Option<&[Elem]>, mcs: Option<&[Elem]>, limits: &Limits) -> PolyPrep {
        let finite = FinitePrep::new(base, ideal, mcs);
        let search = (0..finite.lattice.len() * finite.mcs.len()).map(|_| OnceLock::new()).collect();
        PolyPrep {
            finite,
            poly: PolyRing::new(base, limits),
            search,
        }
    }

    /// The bounded content search for `A[x]` at degree `d`, memoized per pair.
    pub fn content_search(&self, i: usize, s: usize, d: usize) -> CoreResult<PolyVerdict> {
        let slot = &self.search[i * self.finite.mcs.len() + s];
        if let Some(v) = slot.get() {
            if v.requested_degree == d {
                return Ok(v.clone());
            }
        }
        let spec = PolyIdealSpec::Content(self.finite.ideal(i).clone());
        let v = bounded_s_r_search(&self.poly, &spec, &self.finite.mcs[s], d)?;
        let _ = slot.set(v.clone());
        Ok(v)
    }
}

pub struct ZAmalgPrep {
    pub amalg: ZAmalg,
    pub j: Ideal,
    pub mcs: Vec<ArithMCS>,
}

/// An entry with its shared, precomputed data.
pub enum Prepared {
    Finite(FinitePrep),
    Arith(ArithPrep),
    Poly(PolyPrep),
    ZAmalg(ZAmalgPrep),
}

pub fn prepare(entry: &Entry, limits: &Limits) -> CoreResult<Prepared> {
    Ok(match &entry.kind {
        EntryKind::Finite { ring, ideal, mcs } => {
            Prepared::Finite(FinitePrep::new(ring, ideal.as_deref(), mcs.as_deref()))
        }
        EntryKind::Arith { ring, ideal, mcs } => Prepared::Arith(ArithPrep::new(ring, ideal.as_ref(), mcs.as_ref())?),
        EntryKind::Poly { base, ideal, mcs } => {
            Prepared::Poly(PolyPrep::new(base, ideal.as_deref(), mcs.as_deref(), limits))
        }
        EntryKind::ZAmalg { zn, j, mcs } => {
            let z = ArithRing::parse("Z")?;
            let mcs = match mcs {
                Some(s) => vec![s.clone()],
                None => ["{1}", "units", "all"]
                    .iter()
                    .map(|t| ArithMCS::parse(&z, t))
                    .collect::<CoreResult<Vec<_>>>()?,
            };
            Prepared::ZAmalg(ZAmalgPrep {
                amalg: ZAmalg::new(zn, j)?,
                j: j.clone(),
                mcs,
            })
        }
    })
}

impl Prepared {
    pub fn sample_seed(&self) -> Option<u64> {
        match self {
            Prepared::Finite(p) => p.sample_seed,
            Prepared::Poly(p) => p.finite.sample_seed,
            _ => None,
        }
    }
}

pub type RunFn = fn(&Ctx, &Entry, &Prepared) -> CoreResult<Vec<CaseResult>>;

pub struct TheoremDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub hypotheses: &'static [&'static str],
    pub scopes: &'static [Scope],
    pub run: RunFn,
}

impl TheoremDef {
    pub fn applies_to(&self, entry: &Entry) -> bool {
        self.scopes.contains(&entry.scope())
    }
}

use Scope::{Arith, Extension, Finite, Poly};

/// Every registered theorem, in report order.
pub static REGISTRY: &[TheoremDef] = &[
    TheoremDef {
        id: "T2.3",
        summary: "S1-r with S1 ⊆ S2 and A ∩ S2 = ∅ gives S2-r",
        hypotheses: &["s1_subset_s2", "a_s1_r", "disjoint"],
        scopes: &[Finite],
        run: finite::t2_3,
    },
    TheoremDef {
        id: "T2.5",
        summary: "S finite, S ⊆ reg and S⁻¹A an r-ideal give A S-r",
        hypotheses: &["s_in_reg", "disjoint", "loc_r_ideal"],
        scopes: &[Finite],
        run: finite::t2_5,
    },
    TheoremDef {
        id: "P2.6",
        summary: "A ⊆ zd not S-r yields ideals B, K with B ∩ reg ≠ ∅, A ⊊ B, A ⊊ K, BK ⊆ A",
        hypotheses: &["a_in_zd", "not_s_r"],
        scopes: &[Finite, Arith],
        run: layers::p2_6,
    },
    TheoremDef {
        id: "T2.7",
        summary: "for S = reg: S-r ⇔ scaled intersections ⇔ colon condition ⇔ localization condition",
        hypotheses: &["s_is_regulars", "proper", "disjoint"],
        scopes: &[Finite],
        run: finite::t2_7,
    },
    TheoremDef {
        id: "P2.8",
        summary: "A S-r with S ⊆ reg: the witness s has (A:s) = (A:sⁿ)",
        hypotheses: &["a_s_r", "s_in_reg"],
        scopes: &[Finite],
        run: finite::p2_8,
    },
    TheoremDef {
        id: "P2.10",
        summary: "S-z⁰-ideals of reduced rings are S-r",
        hypotheses: &["reduced", "disjoint", "s_z0"],
        scopes: &[Finite],
        run: finite::p2_10,
    },
    TheoremDef {
        id: "T2.11",
        summary: "minimal primes over an S-r-ideal that miss S are S-r",
        hypotheses: &["a_s_r", "l_disjoint"],
        scopes: &[Finite],
        run: finite::t2_11,
    },
    TheoremDef {
        id: "T2.12",
        summary: "a prime A disjoint from S is S-r iff A ⊆ zd",
        hypotheses: &["prime", "disjoint"],
        scopes: &[Finite, Arith],
        run: layers::t2_12,
    },
    TheoremDef {
        id: "C-zd",
        summary: "S-r-ideals consist of zero divisors",
        hypotheses: &["a_s_r"],
        scopes: &[Finite, Arith],
        run: layers::c_zd,
    },
    TheoremDef {
        id: "P-jac",
        summary: "A ⊆ J(R): r-ideal iff (R∖M)-r for every maximal M",
        hypotheses: &["in_jacobson", "proper"],
        scopes: &[Finite],
        run: finite::p_jac,
    },
    TheoremDef {
        id: "P-zero",
        summary: "the zero ideal is S-r",
        hypotheses: &["proper", "disjoint"],
        scopes: &[Finite, Arith],
        run: layers::p_zero,
    },
    TheoremDef {
        id: "P-colon",
        summary: "(A:K) and Ann(K) are S-r when disjoint from S",
        hypotheses: &["a_s_r", "k_not_in_a", "disjoint"],
        scopes: &[Finite],
        run: finite::p_colon,
    },
    TheoremDef {
        id: "P-annsum",
        summary: "K1 + K2 = Rt with t ∈ S makes Ann(K1) + Ann(K2) S-r",
        hypotheses: &["sum_principal_in_s", "disjoint"],
        scopes: &[Finite],
        run: finite::p_annsum,
    },
    TheoremDef {
        id: "P-minidem",
        summary: "P + Ann(se) is S-r for reduced R, P minimal, e idempotent",
        hypotheses: &["reduced", "disjoint"],
        scopes: &[Finite],
        run: finite::p_minidem,
    },
    TheoremDef {
        id: "P-sidem",
        summary: "ideals generated by S-idempotents are S-r",
        hypotheses: &["gens_s_idempotent", "disjoint"],
        scopes: &[Finite],
        run: finite::p_sidem,
    },
    TheoremDef {
        id: "P-suz",
        summary: "finite S: every disjoint ideal is S-r iff R is S-uz",
        hypotheses: &["s_finite"],
        scopes: &[Finite],
        run: finite::p_suz,
    },
    TheoremDef {
        id: "P-suzmax",
        summary: "S missing every maximal ideal: S-uz ⇔ disjoint primes S-r ⇔ maximals S-r",
        hypotheses: &["s_misses_maximals"],
        scopes: &[Finite],
        run: finite::p_suzmax,
    },
    TheoremDef {
        id: "L3.1",
        summary: "an isomorphism f has f(Ann(w)) = Ann(f(w))",
        hypotheses: &["isomorphism"],
        scopes: &[Finite],
        run: finite::l3_1,
    },
    TheoremDef {
        id: "P3.2",
        summary: "S-r transfer between A and A ⋈ J in both directions",
        hypotheses: &["epimorphism", "domain", "j_in_zd", "isomorphism", "disjoint"],
        scopes: &[Finite, Extension],
        run: layers::p3_2,
    },
    TheoremDef {
        id: "P3.3",
        summary: "A S-r ⇔ A ∝ M (S ∝ 0)-r ⇔ A ∝ M (S ∝ M)-r",
        hypotheses: &["disjoint", "torsion_free", "union_condition"],
        scopes: &[Finite],
        run: layers::p3_3,
    },
    TheoremDef {
        id: "T4.1",
        summary: "Property A and S ⊆ reg: A S-r iff A[x] S-r",
        hypotheses: &["property_a", "s_in_reg", "disjoint"],
        scopes: &[Poly],
        run: layers::t4_1,
    },
    TheoremDef {
        id: "T4.2",
        summary: "f.a.c.: A S-r iff A[x] S-r",
        hypotheses: &["fac", "disjoint"],
        scopes: &[Poly],
        run: layers::t4_2,
    },
    TheoremDef {
        id: "DM",
        summary: "c(z)^{m+1} c(w) = c(z)^m c(wz) with m = deg w",
        hypotheses: &[],
        scopes: &[Finite, Poly],
        run: layers::dm,
    },
    TheoremDef {
        id: "DEGEN",
        summary: "finite rings are uz and all their proper ideals are r; the integer and polynomial layers are not",
        hypotheses: &["has_int_factor"],
        scopes: &[Finite, Arith, Poly],
        run: layers::degen,
    },
];

pub fn lookup(id: &str) -> Option<&'static TheoremDef> {
    REGISTRY.iter().find(|t| t.id.eq_ignore_ascii_case(id))
}
