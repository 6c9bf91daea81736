//! Exhaustive decision procedures for the annihilator-based ideal and ring
//! predicates over finite rings.
//!
//! Every S-indexed predicate uses one uniform `s ∈ S` for all pairs, and the
//! reported witness is the smallest such `s` by element index. Hypothesis
//! violations (an improper ideal, `S ∩ A ≠ ∅`, a non-reduced ring) produce
//! [`Outcome::NotApplicable`], never a counterexample.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::ideal::{s_units, Ideal, IdealLattice, MulClosedSet};
use crate::localize::{ideal_preimage, ideal_pushforward, localize};
use crate::ring::{Elem, Ring};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "yes",
            Outcome::Fails => "no",
            Outcome::NotApplicable => "n/a",
        })
    }
}

/// Why a predicate was not evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    DisjointnessViolated,
    NotProper,
    NotReduced,
    /// A generator fails `a² = sa`.
    NotSIdempotent,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::DisjointnessViolated => "DISJOINTNESS_VIOLATED",
            Reason::NotProper => "NOT_PROPER",
            Reason::NotReduced => "NOT_REDUCED",
            Reason::NotSIdempotent => "NOT_S_IDEMPOTENT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Counterexample<E = Elem> {
    Pair(E, E),
    Element(E),
    Set(Vec<E>),
}

impl<E> Counterexample<E> {
    pub fn map<F>(self, mut f: impl FnMut(E) -> F) -> Counterexample<F> {
        match self {
            Counterexample::Pair(w, z) => Counterexample::Pair(f(w), f(z)),
            Counterexample::Element(a) => Counterexample::Element(f(a)),
            Counterexample::Set(v) => Counterexample::Set(v.into_iter().map(f).collect()),
        }
    }
}

/// Three-valued classification result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict<E = Elem> {
    pub outcome: Outcome,
    pub witness: Option<E>,
    pub counterexample: Option<Counterexample<E>>,
    pub reason: Option<Reason>,
}

impl<E> Verdict<E> {
    pub fn holds(witness: Option<E>) -> Self {
        Verdict {
            outcome: Outcome::Holds,
            witness,
            counterexample: None,
            reason: None,
        }
    }

    pub fn fails(counterexample: Counterexample<E>) -> Self {
        Verdict {
            outcome: Outcome::Fails,
            witness: None,
            counterexample: Some(counterexample),
            reason: None,
        }
    }

    pub fn not_applicable(reason: Reason) -> Self {
        Verdict {
            outcome: Outcome::NotApplicable,
            witness: None,
            counterexample: None,
            reason: Some(reason),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.outcome == Outcome::Fails
    }

    pub fn is_not_applicable(&self) -> bool {
        self.outcome == Outcome::NotApplicable
    }

    pub fn map<F>(self, mut f: impl FnMut(E) -> F) -> Verdict<F> {
        Verdict {
            outcome: self.outcome,
            witness: self.witness.map(&mut f),
            counterexample: self.counterexample.map(|c| c.map(f)),
            reason: self.reason,
        }
    }

    /// Does `Holds` here imply `Holds` there? Non-`Holds` antecedents pass.
    pub fn implies(&self, other: &Verdict<E>) -> bool {
        !self.is_holds() || other.is_holds()
    }
}

/// Quantifier placement for S-indexed predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantifier {
    /// One `s` for every pair.
    #[default]
    Uniform,
    /// Nonstandard: an `s` may be chosen per pair.
    PerPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SOptions {
    pub quantifier: Quantifier,
    /// When false, `S ∩ A ≠ ∅` is not rejected (used by hypothesis hunts).
    pub check_disjoint: bool,
}

impl Default for SOptions {
    fn default() -> Self {
        SOptions {
            quantifier: Quantifier::Uniform,
            check_disjoint: true,
        }
    }
}

fn proper_and_disjoint<E>(a: &Ideal, s: &MulClosedSet, opts: SOptions) -> Option<Verdict<E>> {
    if !a.is_proper() {
        return Some(Verdict::not_applicable(Reason::NotProper));
    }
    if opts.check_disjoint && !s.is_disjoint_from(a) {
        return Some(Verdict::not_applicable(Reason::DisjointnessViolated));
    }
    None
}

/// Pairs `(w, z)` with `w` regular and `wz ∈ A`, keyed by `z`: for every `z`
/// the first such `w`.
fn regular_divisor_pairs(a: &Ideal) -> Vec<(Elem, Elem)> {
    let ring = a.ring();
    let regulars = ring.regulars();
    ring.elements()
        .filter_map(|z| {
            regulars
                .iter()
                .find(|&&w| a.contains(ring.mul(w, z)))
                .map(|&w| (w, z))
        })
        .collect()
}

/// Decides `∃s ∈ S ∀(w,z) ∈ pairs: s·z ∈ A`, reporting as the classifiers do.
fn uniform_over_pairs(
    a: &Ideal,
    s: &MulClosedSet,
    pairs: &[(Elem, Elem)],
    quantifier: Quantifier,
) -> Verdict {
    let ring = a.ring();
    let defeats = |x: Elem| pairs.iter().find(|&&(_, z)| !a.contains(ring.mul(x, z))).copied();
    match quantifier {
        Quantifier::Uniform => {
            let mut last = None;
            for x in s.members() {
                match defeats(x) {
                    None => return Verdict::holds(Some(x)),
                    Some(pair) => last = Some(pair),
                }
            }
            let (w, z) = last.expect("S contains 1");
            Verdict::fails(Counterexample::Pair(w, z))
        }
        Quantifier::PerPair => {
            // The product of per-pair choices is itself a uniform witness.
            let mut witness = ring.one();
            for &(w, z) in pairs {
                match s.members().find(|&x| a.contains(ring.mul(x, z))) {
                    Some(x) => witness = ring.mul(witness, x),
                    None => return Verdict::fails(Counterexample::Pair(w, z)),
                }
            }
            Verdict::holds(Some(witness))
        }
    }
}

/// `wz ∈ A` and `Ann(w) = 0` imply `z ∈ A`.
pub fn is_r_ideal(a: &Ideal) -> Verdict {
    if !a.is_proper() {
        return Verdict::not_applicable(Reason::NotProper);
    }
    let ring = a.ring();
    for w in ring.elements().filter(|&w| ring.is_regular(w)) {
        for z in ring.elements() {
            if a.contains(ring.mul(w, z)) && !a.contains(z) {
                return Verdict::fails(Counterexample::Pair(w, z));
            }
        }
    }
    Verdict::holds(None)
}

/// `wz ∈ A` and `Ann(w) = 0` imply `zⁿ ∈ A` for some `n ≥ 1`.
pub fn is_pr_ideal(a: &Ideal) -> Verdict {
    if !a.is_proper() {
        return Verdict::not_applicable(Reason::NotProper);
    }
    let ring = a.ring();
    let power_in = |z: Elem| {
        let mut p = z;
        for _ in 0..ring.size() {
            if a.contains(p) {
                return true;
            }
            p = ring.mul(p, z);
        }
        false
    };
    for w in ring.elements().filter(|&w| ring.is_regular(w)) {
        for z in ring.elements() {
            if a.contains(ring.mul(w, z)) && !power_in(z) {
                return Verdict::fails(Counterexample::Pair(w, z));
            }
        }
    }
    Verdict::holds(None)
}

/// `∃s ∈ S`: `wz ∈ A` and `Ann(w) = 0` imply `sz ∈ A`.
pub fn is_s_r_ideal(a: &Ideal, s: &MulClosedSet) -> Verdict {
    is_s_r_ideal_with(a, s, SOptions::default())
}

pub fn is_s_r_ideal_with(a: &Ideal, s: &MulClosedSet, opts: SOptions) -> Verdict {
    if let Some(v) = proper_and_disjoint(a, s, opts) {
        return v;
    }
    let pairs = regular_divisor_pairs(a);
    uniform_over_pairs(a, s, &pairs, opts.quantifier)
}

/// `∃s ∈ S ∀w,z`: `wz ∈ A` implies `sw ∈ A` or `sz ∈ A`.
pub fn is_s_prime(a: &Ideal, s: &MulClosedSet) -> Verdict {
    is_s_prime_with(a, s, SOptions::default())
}

pub fn is_s_prime_with(a: &Ideal, s: &MulClosedSet, opts: SOptions) -> Verdict {
    if let Some(v) = proper_and_disjoint(a, s, opts) {
        return v;
    }
    let ring = a.ring();
    let defeats = |x: Elem| {
        for w in ring.elements() {
            let sw = a.contains(ring.mul(x, w));
            for z in ring.elements() {
                if !sw && a.contains(ring.mul(w, z)) && !a.contains(ring.mul(x, z)) {
                    return Some((w, z));
                }
            }
        }
        None
    };
    let mut last = None;
    for x in s.members() {
        match defeats(x) {
            None => return Verdict::holds(Some(x)),
            Some(pair) => last = Some(pair),
        }
    }
    let (w, z) = last.expect("S contains 1");
    Verdict::fails(Counterexample::Pair(w, z))
}

/// Pairs `(w, z)` with `w ∈ A` and `Ann(w) = Ann(z)`, first `w` per `z`.
fn same_annihilator_pairs(a: &Ideal) -> Vec<(Elem, Elem)> {
    let ring = a.ring();
    let anns: Vec<FixedBitSet> = ring.elements().map(|x| ring.ann_mask(x)).collect();
    ring.elements()
        .filter_map(|z| a.members().find(|&w| anns[w] == anns[z]).map(|w| (w, z)))
        .collect()
}

/// In a reduced ring: `w ∈ A` and `Ann(w) = Ann(z)` imply `z ∈ A`.
pub fn is_z0_ideal(a: &Ideal) -> Verdict {
    let ring = a.ring();
    if !ring.is_reduced() {
        return Verdict::not_applicable(Reason::NotReduced);
    }
    match same_annihilator_pairs(a).into_iter().find(|&(_, z)| !a.contains(z)) {
        Some((w, z)) => Verdict::fails(Counterexample::Pair(w, z)),
        None => Verdict::holds(None),
    }
}

/// In a reduced ring: `∃s ∈ S`: `w ∈ A` and `Ann(w) = Ann(z)` imply `sz ∈ A`.
pub fn is_s_z0_ideal(a: &Ideal, s: &MulClosedSet) -> Verdict {
    is_s_z0_ideal_with(a, s, SOptions::default(), true)
}

/// `check_reduced = false` evaluates the statement on non-reduced rings too.
pub fn is_s_z0_ideal_with(
    a: &Ideal,
    s: &MulClosedSet,
    opts: SOptions,
    check_reduced: bool,
) -> Verdict {
    if check_reduced && !a.ring().is_reduced() {
        return Verdict::not_applicable(Reason::NotReduced);
    }
    if opts.check_disjoint && !s.is_disjoint_from(a) {
        return Verdict::not_applicable(Reason::DisjointnessViolated);
    }
    let pairs = same_annihilator_pairs(a);
    uniform_over_pairs(a, s, &pairs, opts.quantifier)
}

/// Every element is a unit or a zero divisor.
pub fn is_uz_ring(ring: &Ring) -> Verdict {
    match ring.elements().find(|&x| !ring.is_unit(x) && !ring.is_zero_divisor(x)) {
        Some(x) => Verdict::fails(Counterexample::Element(x)),
        None => Verdict::holds(None),
    }
}

/// Every element is an S-unit or a zero divisor.
pub fn is_s_uz_ring(ring: &Ring, s: &MulClosedSet) -> Verdict {
    let mut units = FixedBitSet::with_capacity(ring.size());
    units.extend(s_units(s));
    match ring.elements().find(|&x| !units.contains(x) && !ring.is_zero_divisor(x)) {
        Some(x) => Verdict::fails(Counterexample::Element(x)),
        None => Verdict::holds(None),
    }
}

fn zero_divisor_mask(ring: &Ring) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(ring.size());
    m.extend(ring.zero_divisors());
    m
}

/// Every ideal inside `zd(R)` has a nonzero annihilator.
pub fn has_property_a(ring: &Ring) -> Verdict {
    has_property_a_in(&IdealLattice::new(ring))
}

pub fn has_property_a_in(lattice: &IdealLattice) -> Verdict {
    let ring = lattice.ring();
    let zd = zero_divisor_mask(ring);
    for b in lattice.ideals() {
        if b.is_within(&zd) {
            let members: Vec<Elem> = b.members().collect();
            if crate::ideal::annihilator(ring, &members).is_zero() {
                return Verdict::fails(Counterexample::Set(b.generators().to_vec()));
            }
        }
    }
    Verdict::holds(None)
}

/// Every ideal `A` admits `z` with `Ann(A) = Ann(z)`.
pub fn has_ac(ring: &Ring) -> Verdict {
    has_ac_in(&IdealLattice::new(ring))
}

pub fn has_ac_in(lattice: &IdealLattice) -> Verdict {
    let ring = lattice.ring();
    let anns: Vec<FixedBitSet> = ring.elements().map(|x| ring.ann_mask(x)).collect();
    for a in lattice.ideals() {
        let members: Vec<Elem> = a.members().collect();
        let ann = crate::ideal::annihilator(ring, &members);
        if !anns.iter().any(|m| m == ann.mask()) {
            return Verdict::fails(Counterexample::Set(a.generators().to_vec()));
        }
    }
    Verdict::holds(None)
}

/// Every subset `T` with `|T| ≤ cap` contains `w` with `Ann(T) = Ann(w)`.
///
/// The condition for all finite subsets is equivalent to the annihilators
/// being pairwise comparable, so any `cap ≥ 2` decides it exactly.
pub fn has_fac(ring: &Ring, cap: usize) -> Verdict {
    let mut classes: Vec<(Elem, FixedBitSet)> = Vec::new();
    for x in ring.elements() {
        let m = ring.ann_mask(x);
        if !classes.iter().any(|(_, c)| *c == m) {
            classes.push((x, m));
        }
    }
    for k in 2..=cap.min(classes.len()) {
        let mut chosen: Vec<usize> = Vec::new();
        if let Some(set) = fac_sweep(&classes, k, 0, &mut chosen) {
            return Verdict::fails(Counterexample::Set(set));
        }
    }
    Verdict::holds(None)
}

/// First `k`-subset of annihilator classes whose joint annihilator is not
/// attained by a member.
fn fac_sweep(
    classes: &[(Elem, FixedBitSet)],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<Elem>> {
    if chosen.len() == k {
        let mut ann = classes[chosen[0]].1.clone();
        for &i in &chosen[1..] {
            ann.intersect_with(&classes[i].1);
        }
        if chosen.iter().any(|&i| classes[i].1 == ann) {
            return None;
        }
        return Some(chosen.iter().map(|&i| classes[i].0).collect());
    }
    for i in start..classes.len() {
        chosen.push(i);
        let found = fac_sweep(classes, k, i + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// For generators with `a² = sa` (`s` the product of all of `S`): is the
/// ideal they generate an S-r-ideal?
pub fn s_idempotent_ideal_check(ring: &Ring, s: &MulClosedSet, gens: &[Elem]) -> Verdict {
    let t = s.product_of_members();
    if gens.iter().any(|&g| ring.mul(g, g) != ring.mul(t, g)) {
        return Verdict::not_applicable(Reason::NotSIdempotent);
    }
    is_s_r_ideal(&Ideal::generate(ring, gens), s)
}

/// Smallest `s ∈ S` satisfying `ok`.
pub fn uniform_witness(s: &MulClosedSet, ok: impl Fn(Elem) -> bool) -> Option<Elem> {
    s.members().find(|&x| ok(x))
}

/// `∃s ∈ S ∀r ∈ R`: `s·(rR ∩ A) ⊆ rA`, with `r` ranging over `rs`.
pub fn scaled_intersection_condition(a: &Ideal, s: &MulClosedSet, rs: &[Elem]) -> Option<Elem> {
    let ring = a.ring();
    let checks: Vec<(FixedBitSet, FixedBitSet)> = rs
        .iter()
        .map(|&r| {
            let ra = a.scaled(r);
            let mut rr_a = FixedBitSet::with_capacity(ring.size());
            for x in ring.elements() {
                let y = ring.mul(r, x);
                if a.contains(y) {
                    rr_a.insert(y);
                }
            }
            (rr_a, ra)
        })
        .collect();
    uniform_witness(s, |x| {
        checks
            .iter()
            .all(|(inter, ra)| inter.ones().all(|y| ra.contains(ring.mul(x, y))))
    })
}

/// `∃s ∈ S ∀r`: `s·(A : r) ⊆ A`, with `r` ranging over `rs`.
pub fn colon_condition(a: &Ideal, s: &MulClosedSet, rs: &[Elem]) -> Option<Elem> {
    let ring = a.ring();
    let colons: Vec<Ideal> = rs.iter().map(|&r| crate::ideal::colon(a, &[r])).collect();
    uniform_witness(s, |x| {
        colons
            .iter()
            .all(|c| c.members().all(|y| a.contains(ring.mul(x, y))))
    })
}

/// `∃s ∈ S`: `s·π⁻¹(S⁻¹A) ⊆ A` for the natural map `π : R → S⁻¹R`.
pub fn localization_condition(a: &Ideal, s: &MulClosedSet) -> Result<Option<Elem>> {
    let ring = a.ring();
    let loc = localize(s)?;
    let pulled = ideal_preimage(&loc, &ideal_pushforward(&loc, a));
    Ok(uniform_witness(s, |x| {
        pulled.members().all(|y| a.contains(ring.mul(x, y)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_ring;
    use crate::ideal::{ideal_generate, mcs_generate};
    use crate::Limits;

    fn ring(text: &str) -> Ring {
        build_ring(text, &Limits::default()).unwrap()
    }

    #[test]
    fn z12_ideals_are_r_ideals() {
        let z12 = ring("Z12");
        for a in IdealLattice::new(&z12).proper() {
            assert!(is_r_ideal(a).is_holds());
            assert!(is_pr_ideal(a).is_holds());
        }
        assert_eq!(is_r_ideal(&Ideal::unit(&z12)).reason, Some(Reason::NotProper));
    }

    #[test]
    fn z6_zero_ideal() {
        let z6 = ring("Z6");
        let zero = Ideal::zero(&z6);
        assert!(is_r_ideal(&zero).is_holds());
        let one = MulClosedSet::trivial(&z6);
        let v = is_s_prime(&zero, &one);
        assert_eq!(v.counterexample, Some(Counterexample::Pair(2, 3)));
        assert!(is_s_r_ideal(&zero, &one).is_holds());
    }

    #[test]
    fn s_prime_examples() {
        let z12 = ring("Z12");
        let four = ideal_generate(&z12, &[4]);
        let one = MulClosedSet::trivial(&z12);
        assert_eq!(is_s_prime(&four, &one).counterexample, Some(Counterexample::Pair(2, 2)));
        let two = ideal_generate(&z12, &[2]);
        assert_eq!(is_s_prime(&two, &one).witness, Some(1));
        let s3 = mcs_generate(&z12, &[3]);
        assert!(is_s_prime(&four, &s3).is_fails());
    }

    #[test]
    fn disjointness_and_properness() {
        let z12 = ring("Z12");
        let four = ideal_generate(&z12, &[4]);
        let s = mcs_generate(&z12, &[4]);
        assert_eq!(is_s_r_ideal(&four, &s).reason, Some(Reason::DisjointnessViolated));
        let opts = SOptions {
            check_disjoint: false,
            ..SOptions::default()
        };
        assert!(is_s_r_ideal_with(&four, &s, opts).is_holds());
        assert_eq!(
            is_s_r_ideal(&Ideal::unit(&z12), &s).reason,
            Some(Reason::NotProper)
        );
    }

    #[test]
    fn z0_ideals() {
        let z6 = ring("Z6");
        assert!(is_z0_ideal(&ideal_generate(&z6, &[2])).is_holds());
        assert!(is_z0_ideal(&Ideal::zero(&z6)).is_holds());
        let z4 = ring("Z4");
        assert_eq!(is_z0_ideal(&Ideal::zero(&z4)).reason, Some(Reason::NotReduced));
        let z2z2 = ring("Z2 x Z2");
        let a = Ideal::generate(&z2z2, &[z2z2.resolve(&crate::dsl::parse_lits("(1,0)").unwrap()[0]).unwrap()]);
        assert!(is_z0_ideal(&a).is_holds());
    }

    #[test]
    fn ring_conditions() {
        for text in ["Z12", "Z7", "Z2 x Z2", "Z4 x Z6", "triv(Z2, free(1))"] {
            let r = ring(text);
            assert!(is_uz_ring(&r).is_holds(), "{text}");
            assert!(is_s_uz_ring(&r, &MulClosedSet::trivial(&r)).is_holds());
            assert!(has_property_a(&r).is_holds(), "{text}");
            assert!(has_ac(&r).is_holds(), "{text}");
        }
        assert!(has_fac(&ring("Z12"), 3).is_fails());
        assert!(has_fac(&ring("Z8"), 3).is_holds());
        assert!(has_fac(&ring("Z7"), 3).is_holds());
        let z2z2 = ring("Z2 x Z2");
        let v = has_fac(&z2z2, 3);
        assert!(v.is_fails());
        assert_eq!(v.counterexample, Some(Counterexample::Set(vec![1, 2])));
    }

    #[test]
    fn s_idempotent_gate() {
        let z6 = ring("Z6");
        assert!(s_idempotent_ideal_check(&z6, &MulClosedSet::trivial(&z6), &[3]).is_holds());
        assert!(s_idempotent_ideal_check(&z6, &MulClosedSet::trivial(&z6), &[0]).is_holds());
        let z12 = ring("Z12");
        let s = MulClosedSet::from_members(&z12, &[1, 4]).unwrap();
        assert_eq!(
            s_idempotent_ideal_check(&z12, &s, &[8]).reason,
            Some(Reason::NotSIdempotent)
        );
    }

    #[test]
    fn per_pair_witness_is_uniform() {
        let z12 = ring("Z12");
        let opts = SOptions {
            quantifier: Quantifier::PerPair,
            ..SOptions::default()
        };
        for a in IdealLattice::new(&z12).proper() {
            let s = mcs_generate(&z12, &[5]);
            let v = is_s_r_ideal_with(a, &s, opts);
            assert_eq!(v.outcome, is_s_r_ideal(a, &s).outcome);
        }
    }

    #[test]
    fn serialization_shape() {
        let v: Verdict = Verdict::fails(Counterexample::Pair(2, 3));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"outcome":"fails","witness":null,"counterexample":{"pair":[2,3]},"reason":null}"#
        );
    }
}
