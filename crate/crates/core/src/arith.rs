//! Closed-form decisions for finite products of `Z` and `Z_n`.
//!
//! Ideals and multiplicative sets are products of per-factor descriptors, so
//! membership, annihilators and the r-/S-r-conditions split coordinatewise.
//! A windowed brute force ([`arith_oracle_check`]) cross-checks every closed
//! form on the box `[-bound, bound]`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::classify::{Counterexample, Reason, Verdict};
use crate::ideal::{Ideal, MulClosedSet};
use crate::ring::{Elem, FiniteRing, Ring};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    Int,
    Mod(u64),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Int => f.write_str("Z"),
            Factor::Mod(n) => write!(f, "Z{n}"),
        }
    }
}

impl Factor {
    fn reduce(self, x: i64) -> i64 {
        match self {
            Factor::Int => x,
            Factor::Mod(n) => x.rem_euclid(n as i64),
        }
    }

    fn is_unit(self, x: i64) -> bool {
        match self {
            Factor::Int => x == 1 || x == -1,
            Factor::Mod(n) => gcd(x.unsigned_abs(), n) == 1,
        }
    }

    fn is_regular(self, x: i64) -> bool {
        match self {
            Factor::Int => x != 0,
            Factor::Mod(_) => self.is_unit(x),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_prime_number(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArithRing {
    factors: Vec<Factor>,
}

impl fmt::Display for ArithRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" x "))
    }
}

impl ArithRing {
    pub fn new(factors: Vec<Factor>) -> Result<ArithRing> {
        if factors.is_empty() {
            return Err(Error::InvalidConstruction("a product needs a factor".into()));
        }
        if factors.contains(&Factor::Mod(0)) {
            return Err(Error::InvalidConstruction("Z0 is not a modulus; write Z".into()));
        }
        Ok(ArithRing { factors })
    }

    /// Parses `Z x Z4 x Z`.
    pub fn parse(text: &str) -> Result<ArithRing> {
        let factors = text
            .split('x')
            .map(|part| {
                let part = part.trim();
                match part.strip_prefix('Z') {
                    Some("") => Ok(Factor::Int),
                    Some(n) => n.parse().map(Factor::Mod).map_err(|_| parse_err(part)),
                    None => Err(parse_err(part)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ArithRing::new(factors)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|f| matches!(f, Factor::Mod(_)))
    }

    pub fn element(&self, coords: &[i64]) -> Result<ArithElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::TypeMismatch(format!(
                "{} coordinates for a ring with {} factors",
                coords.len(),
                self.factors.len()
            )));
        }
        Ok(ArithElement {
            coords: coords.iter().zip(&self.factors).map(|(&x, f)| f.reduce(x)).collect(),
        })
    }

    pub fn one(&self) -> ArithElement {
        self.element(&vec![1; self.factors.len()]).expect("arity matches")
    }

    pub fn mul(&self, a: &ArithElement, b: &ArithElement) -> ArithElement {
        ArithElement {
            coords: self
                .factors
                .iter()
                .zip(a.coords.iter().zip(&b.coords))
                .map(|(f, (&x, &y))| f.reduce(x * y))
                .collect(),
        }
    }

    /// Every element with integer coordinates in `[-bound, bound]`; modular
    /// coordinates run over all residues.
    pub fn window(&self, bound: i64) -> Vec<ArithElement> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            let range: Vec<i64> = match f {
                Factor::Int => (-bound..=bound).collect(),
                Factor::Mod(n) => (0..*n as i64).collect(),
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    range.iter().map(move |&x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|coords| ArithElement { coords }).collect()
    }

    /// The isomorphic finite ring, when every factor is modular.
    pub fn to_finite(&self, limits: &Limits) -> Result<Ring> {
        let parts = self
            .factors
            .iter()
            .map(|f| match f {
                Factor::Mod(n) => FiniteRing::zn(*n),
                Factor::Int => Err(Error::NotApplicable(format!("{self} is infinite"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.len() == 1 {
            Ok(parts[0].clone())
        } else {
            FiniteRing::product_of(&parts, limits)
        }
    }

    /// Index of `a` in [`ArithRing::to_finite`].
    pub fn finite_index(&self, a: &ArithElement) -> Elem {
        self.factors
            .iter()
            .zip(&a.coords)
            .fold(0, |acc, (f, &x)| match f {
                Factor::Mod(n) => acc * *n as usize + x as usize,
                Factor::Int => acc,
            })
    }
}

fn parse_err(text: &str) -> Error {
    Error::Parse {
        pos: 0,
        msg: format!("unexpected `{text}`"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArithElement {
    pub coords: Vec<i64>,
}

impl fmt::Display for ArithElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [x] = self.coords[..] {
            return write!(f, "{x}");
        }
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for ArithElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A product of per-factor ideals: `mZ` (with `0` the zero ideal) or `dZ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArithIdeal {
    ring: ArithRing,
    descriptors: Vec<u64>,
}

impl fmt::Display for ArithIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ring
            .factors
            .iter()
            .zip(&self.descriptors)
            .map(|(fac, d)| match fac {
                Factor::Int => format!("{d}Z"),
                Factor::Mod(n) => format!("{d}Z{n}"),
            })
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

impl ArithIdeal {
    /// Modular descriptors are normalized to `gcd(d, n)`.
    pub fn new(ring: &ArithRing, descriptors: &[u64]) -> Result<ArithIdeal> {
        if descriptors.len() != ring.factors.len() {
            return Err(Error::TypeMismatch(format!(
                "{} descriptors for a ring with {} factors",
                descriptors.len(),
                ring.factors.len()
            )));
        }
        let descriptors = ring
            .factors
            .iter()
            .zip(descriptors)
            .map(|(f, &d)| match f {
                Factor::Int => d,
                Factor::Mod(n) => gcd(d, *n),
            })
            .collect();
        Ok(ArithIdeal {
            ring: ring.clone(),
            descriptors,
        })
    }

    /// Parses comma-separated descriptors, optionally parenthesized.
    pub fn parse(ring: &ArithRing, text: &str) -> Result<ArithIdeal> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        let ds = text
            .split(',')
            .map(|d| d.trim().parse::<u64>().map_err(|_| parse_err(d)))
            .collect::<Result<Vec<_>>>()?;
        ArithIdeal::new(ring, &ds)
    }

    pub fn ring(&self) -> &ArithRing {
        &self.ring
    }

    pub fn descriptors(&self) -> &[u64] {
        &self.descriptors
    }

    fn slot_contains(&self, i: usize, x: i64) -> bool {
        let d = self.descriptors[i];
        if d == 0 {
            x == 0
        } else {
            x.rem_euclid(d as i64) == 0
        }
    }

    fn slot_full(&self, i: usize) -> bool {
        self.descriptors[i] == 1
    }

    pub fn contains(&self, a: &ArithElement) -> bool {
        (0..self.descriptors.len()).all(|i| self.slot_contains(i, a.coords[i]))
    }

    pub fn is_proper(&self) -> bool {
        (0..self.descriptors.len()).any(|i| !self.slot_full(i))
    }

    pub fn is_subset(&self, other: &ArithIdeal) -> bool {
        self.descriptors.iter().zip(&other.descriptors).all(|(&a, &b)| {
            if b == 0 {
                a == 0
            } else {
                a % b == 0
            }
        })
    }

    fn with(&self, descriptors: Vec<u64>) -> ArithIdeal {
        ArithIdeal::new(&self.ring, &descriptors).expect("arity matches")
    }

    /// `(A : x)` for a single element.
    pub fn colon_element(&self, x: &ArithElement) -> ArithIdeal {
        self.with(
            self.descriptors
                .iter()
                .zip(&x.coords)
                .map(|(&m, &c)| colon_descriptor(m, c.unsigned_abs()))
                .collect(),
        )
    }

    /// `(A : B)`.
    pub fn colon(&self, b: &ArithIdeal) -> ArithIdeal {
        self.with(
            self.descriptors
                .iter()
                .zip(&b.descriptors)
                .map(|(&m, &d)| colon_descriptor(m, d))
                .collect(),
        )
    }

    pub fn product(&self, b: &ArithIdeal) -> ArithIdeal {
        self.with(
            self.descriptors
                .iter()
                .zip(&b.descriptors)
                .map(|(&m, &d)| m * d)
                .collect(),
        )
    }

    /// Does `A` contain a regular element?
    pub fn meets_regulars(&self) -> bool {
        (0..self.descriptors.len()).all(|i| match self.ring.factors[i] {
            Factor::Int => self.descriptors[i] != 0,
            Factor::Mod(_) => self.slot_full(i),
        })
    }
}

/// `(mZ : cZ)`, equally valid in `Z_n` with `m | n`, `0 ↦ n` handled by gcd.
fn colon_descriptor(m: u64, c: u64) -> u64 {
    match (m, c) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => m / gcd(m, c),
    }
}

/// Per-factor multiplicative set descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum McsFactor {
    Units,
    All,
    FinSet(Vec<i64>),
}

impl fmt::Display for McsFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McsFactor::Units => f.write_str("units"),
            McsFactor::All => f.write_str("all"),
            McsFactor::FinSet(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArithMCS {
    ring: ArithRing,
    factors: Vec<McsFactor>,
}

impl fmt::Display for ArithMCS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" x "))
    }
}

impl ArithMCS {
    /// Finite sets are reduced, sorted, and checked for `1` and closure.
    pub fn new(ring: &ArithRing, factors: Vec<McsFactor>) -> Result<ArithMCS> {
        if factors.len() != ring.factors.len() {
            return Err(Error::TypeMismatch("descriptor count differs from factor count".into()));
        }
        let factors = factors
            .into_iter()
            .zip(&ring.factors)
            .map(|(d, &f)| match d {
                McsFactor::FinSet(v) => {
                    let mut v: Vec<i64> = v.into_iter().map(|x| f.reduce(x)).collect();
                    v.sort_unstable();
                    v.dedup();
                    if !v.contains(&f.reduce(1)) {
                        return Err(Error::TypeMismatch(format!("{{..}} over {f} must contain 1")));
                    }
                    for &x in &v {
                        for &y in &v {
                            if v.binary_search(&f.reduce(x * y)).is_err() {
                                return Err(Error::TypeMismatch(format!(
                                    "set over {f} not closed: {x} * {y}"
                                )));
                            }
                        }
                    }
                    Ok(McsFactor::FinSet(v))
                }
                other => Ok(other),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ArithMCS {
            ring: ring.clone(),
            factors,
        })
    }

    /// Parses `units,all,{1,-1}`, one descriptor per factor.
    pub fn parse(ring: &ArithRing, text: &str) -> Result<ArithMCS> {
        let mut parts = Vec::new();
        let mut depth = 0;
        let mut current = String::new();
        for c in text.chars() {
            match c {
                '{' => depth += 1,
                '}' => depth -= 1,
                _ => {}
            }
            if c == ',' && depth == 0 {
                parts.push(std::mem::take(&mut current));
            } else {
                current.push(c);
            }
        }
        parts.push(current);
        let factors = parts
            .iter()
            .map(|p| {
                let p = p.trim();
                match p {
                    "units" => Ok(McsFactor::Units),
                    "all" => Ok(McsFactor::All),
                    _ if p.starts_with('{') && p.ends_with('}') => p[1..p.len() - 1]
                        .split(',')
                        .map(|x| x.trim().parse::<i64>().map_err(|_| parse_err(x)))
                        .collect::<Result<Vec<_>>>()
                        .map(McsFactor::FinSet),
                    _ => Err(parse_err(p)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ArithMCS::new(ring, factors)
    }

    pub fn ring(&self) -> &ArithRing {
        &self.ring
    }

    pub fn factors(&self) -> &[McsFactor] {
        &self.factors
    }

    fn slot_contains(&self, i: usize, x: i64) -> bool {
        let f = self.ring.factors[i];
        match &self.factors[i] {
            McsFactor::Units => f.is_unit(x),
            McsFactor::All => true,
            McsFactor::FinSet(v) => v.contains(&f.reduce(x)),
        }
    }

    pub fn contains(&self, a: &ArithElement) -> bool {
        (0..self.factors.len()).all(|i| self.slot_contains(i, a.coords[i]))
    }

    /// Slot candidates ordered by absolute value, positive first, capped at
    /// `bound` for unbounded integer slots.
    fn slot_candidates(&self, i: usize, bound: i64) -> Vec<i64> {
        let f = self.ring.factors[i];
        let mut out: Vec<i64> = match (&self.factors[i], f) {
            (McsFactor::FinSet(v), _) => v.clone(),
            (McsFactor::Units, Factor::Int) => vec![1, -1],
            (McsFactor::All, Factor::Int) => (-bound..=bound).collect(),
            (_, Factor::Mod(n)) => (0..n as i64).filter(|&x| self.slot_contains(i, x)).collect(),
        };
        out.sort_by_key(|&x| (x.abs(), x < 0));
        out
    }

    /// Is `S ∩ A = ∅`? The product sets meet iff every factor pair meets.
    pub fn is_disjoint_from(&self, a: &ArithIdeal) -> bool {
        (0..self.factors.len()).any(|i| {
            let f = self.ring.factors[i];
            match &self.factors[i] {
                McsFactor::All => false,
                McsFactor::Units => match f {
                    Factor::Int => !a.slot_full(i),
                    Factor::Mod(_) => !a.slot_full(i),
                },
                McsFactor::FinSet(v) => v.iter().all(|&x| !a.slot_contains(i, x)),
            }
        })
    }

    /// The finite subset of `S` inside the window.
    pub fn window(&self, bound: i64) -> Vec<ArithElement> {
        self.ring
            .window(bound)
            .into_iter()
            .filter(|a| self.contains(a))
            .collect()
    }
}

/// True iff every integer coordinate is nonzero and every modular one a unit.
pub fn arith_ann_is_zero(ring: &ArithRing, w: &ArithElement) -> bool {
    ring.factors.iter().zip(&w.coords).all(|(f, &x)| f.is_regular(x))
}

/// Exactly one factor carries a prime descriptor and every other is full.
pub fn arith_is_prime(a: &ArithIdeal) -> Result<bool> {
    if !a.is_proper() {
        return Err(Error::NotProper);
    }
    let nonfull: Vec<usize> = (0..a.descriptors.len()).filter(|&i| !a.slot_full(i)).collect();
    Ok(match nonfull[..] {
        [i] => {
            let d = a.descriptors[i];
            match a.ring.factors[i] {
                Factor::Int => d == 0 || is_prime_number(d),
                Factor::Mod(_) => is_prime_number(d),
            }
        }
        _ => false,
    })
}

/// The pair exhibiting an obstructing integer slot `i` with descriptor `m`:
/// `w = m` there and `1` elsewhere, `z = 1` there and `0` elsewhere.
fn obstruction_pair(ring: &ArithRing, i: usize, m: u64) -> (ArithElement, ArithElement) {
    let k = ring.factors.len();
    let mut w = vec![1; k];
    let mut z = vec![0; k];
    w[i] = m as i64;
    z[i] = 1;
    (ring.element(&w).unwrap(), ring.element(&z).unwrap())
}

/// Integer slots with descriptor `m ≥ 2`: exactly these obstruct.
fn obstructing_slots(a: &ArithIdeal) -> impl Iterator<Item = (usize, u64)> + '_ {
    (0..a.descriptors.len())
        .filter(|&i| a.ring.factors[i] == Factor::Int && a.descriptors[i] >= 2)
        .map(|i| (i, a.descriptors[i]))
}

pub fn arith_is_r_ideal(a: &ArithIdeal) -> Verdict<ArithElement> {
    if !a.is_proper() {
        return Verdict::not_applicable(Reason::NotProper);
    }
    match obstructing_slots(a).next() {
        None => Verdict::holds(None),
        Some((i, m)) => {
            let (w, z) = obstruction_pair(&a.ring, i, m);
            Verdict::fails(Counterexample::Pair(w, z))
        }
    }
}

/// `∃s ∈ S` with `m | sᵢ` for every obstructing slot.
pub fn arith_is_s_r_ideal(a: &ArithIdeal, s: &ArithMCS, witness_bound: i64) -> Verdict<ArithElement> {
    if !a.is_proper() {
        return Verdict::not_applicable(Reason::NotProper);
    }
    if !s.is_disjoint_from(a) {
        return Verdict::not_applicable(Reason::DisjointnessViolated);
    }
    let mut coords = Vec::with_capacity(a.descriptors.len());
    for i in 0..a.descriptors.len() {
        let need = match a.ring.factors[i] {
            Factor::Int if a.descriptors[i] >= 2 => a.descriptors[i] as i64,
            _ => 1,
        };
        match s.slot_candidates(i, witness_bound).into_iter().find(|x| x % need == 0) {
            Some(x) => coords.push(x),
            None => {
                let (w, z) = obstruction_pair(&a.ring, i, need as u64);
                return Verdict::fails(Counterexample::Pair(w, z));
            }
        }
    }
    Verdict::holds(Some(a.ring.element(&coords).unwrap()))
}

/// What the windowed oracle is asked to confirm.
#[derive(Debug, Clone)]
pub enum ArithClaim {
    RIdeal(Verdict<ArithElement>),
    SRIdeal(ArithMCS, Verdict<ArithElement>),
}

/// Brute force over the window `[-bound, bound]`: regularity by direct
/// annihilator search, pairs by direct multiplication. Returns false when the
/// window contradicts the claim.
pub fn arith_oracle_check(a: &ArithIdeal, claim: &ArithClaim, bound: i64) -> bool {
    let ring = &a.ring;
    let box_ = ring.window(bound);
    let zero = ring.element(&vec![0; ring.factors.len()]).unwrap();
    let regular = |w: &ArithElement| box_.iter().all(|y| *y == zero || ring.mul(w, y) != zero);
    let regulars: Vec<&ArithElement> = box_.iter().filter(|w| regular(w)).collect();
    // z values hit by some regular w with wz ∈ A
    let reachable: Vec<&ArithElement> = box_
        .iter()
        .filter(|z| regulars.iter().any(|w| a.contains(&ring.mul(w, z))))
        .collect();
    let violates = |w: &ArithElement, z: &ArithElement, s: &ArithElement| {
        arith_ann_is_zero_window(&regulars, w) && a.contains(&ring.mul(w, z)) && !a.contains(&ring.mul(s, z))
    };
    match claim {
        ArithClaim::RIdeal(v) => match &v.counterexample {
            None => v.is_holds() && reachable.iter().all(|z| a.contains(z)),
            Some(Counterexample::Pair(w, z)) => violates(w, z, &ring.one()),
            Some(_) => false,
        },
        ArithClaim::SRIdeal(s, v) => {
            if v.is_not_applicable() {
                return !a.is_proper() || box_.iter().any(|x| s.contains(x) && a.contains(x));
            }
            if let Some(w) = &v.witness {
                return s.contains(w) && reachable.iter().all(|z| a.contains(&ring.mul(w, z)));
            }
            let pair_ok = match &v.counterexample {
                Some(Counterexample::Pair(w, z)) => {
                    s.window(bound).iter().all(|x| violates(w, z, x))
                }
                _ => false,
            };
            pair_ok
                && s.window(bound)
                    .iter()
                    .all(|x| reachable.iter().any(|z| !a.contains(&ring.mul(x, z))))
        }
    }
}

fn arith_ann_is_zero_window(regulars: &[&ArithElement], w: &ArithElement) -> bool {
    regulars.contains(&w)
}

/// Outcome of the two-ideal construction from a failed S-r check.
#[derive(Debug, Clone, Serialize)]
pub struct IdealPairReport {
    pub s: ArithElement,
    pub x: ArithElement,
    pub b: String,
    pub k: String,
    pub b_meets_regulars: bool,
    pub a_strictly_in_b: bool,
    pub a_strictly_in_k: bool,
    pub bk_in_a: bool,
}

impl IdealPairReport {
    pub fn holds(&self) -> bool {
        self.b_meets_regulars && self.a_strictly_in_b && self.a_strictly_in_k && self.bk_in_a
    }
}

/// When `A ⊆ zd(R)` and `A` is not S-r, builds `B = (A : s·x)` and
/// `K = (A : B)` from the last candidate `s` and the counterexample's `z = x`.
/// Returns `None` when the antecedent does not hold.
pub fn ideal_pair_check(a: &ArithIdeal, s: &ArithMCS, bound: i64) -> Option<IdealPairReport> {
    let inside_zd = (0..a.descriptors.len()).any(|i| match a.ring.factors[i] {
        Factor::Int => a.descriptors[i] == 0,
        Factor::Mod(_) => !a.slot_full(i),
    });
    let v = arith_is_s_r_ideal(a, s, bound);
    if !inside_zd || !v.is_fails() {
        return None;
    }
    let x = match v.counterexample {
        Some(Counterexample::Pair(_, z)) => z,
        _ => return None,
    };
    let last_s = (0..a.descriptors.len())
        .map(|i| *s.slot_candidates(i, bound).last().expect("S contains 1"))
        .collect::<Vec<_>>();
    let last_s = a.ring.element(&last_s).unwrap();
    let b = a.colon_element(&a.ring.mul(&last_s, &x));
    let k = a.colon(&b);
    Some(IdealPairReport {
        b_meets_regulars: b.meets_regulars(),
        a_strictly_in_b: a.is_subset(&b) && !b.is_subset(a),
        a_strictly_in_k: a.is_subset(&k) && !k.is_subset(a),
        bk_in_a: b.product(&k).is_subset(a),
        b: b.to_string(),
        k: k.to_string(),
        s: last_s,
        x,
    })
}

/// The ideal of [`ArithRing::to_finite`] matching a modular descriptor list.
pub fn finite_ideal(a: &ArithIdeal, ring: &Ring) -> Ideal {
    let k = a.descriptors.len();
    let gens: Vec<Elem> = (0..k)
        .map(|i| {
            let mut coords = vec![0; k];
            coords[i] = a.descriptors[i] as i64;
            a.ring.finite_index(&a.ring.element(&coords).unwrap())
        })
        .collect();
    Ideal::generate(ring, &gens)
}

pub fn finite_mcs(s: &ArithMCS, ring: &Ring) -> MulClosedSet {
    let members: Vec<Elem> = s
        .window(0)
        .iter()
        .map(|x| s.ring.finite_index(x))
        .collect();
    MulClosedSet::from_members(ring, &members).expect("product of closed sets is closed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> ArithRing {
        ArithRing::parse("Z").unwrap()
    }

    fn zz() -> ArithRing {
        ArithRing::parse("Z x Z").unwrap()
    }

    fn el(r: &ArithRing, c: &[i64]) -> ArithElement {
        r.element(c).unwrap()
    }

    #[test]
    fn annihilators() {
        assert!(arith_ann_is_zero(&z(), &el(&z(), &[3])));
        assert!(arith_ann_is_zero(&zz(), &el(&zz(), &[1, 2])));
        assert!(!arith_ann_is_zero(&zz(), &el(&zz(), &[0, 5])));
        let mixed = ArithRing::parse("Z x Z4").unwrap();
        assert!(arith_ann_is_zero(&mixed, &el(&mixed, &[2, 3])));
        assert!(!arith_ann_is_zero(&mixed, &el(&mixed, &[2, 2])));
    }

    #[test]
    fn primes() {
        let three = ArithIdeal::parse(&z(), "3").unwrap();
        assert!(arith_is_prime(&three).unwrap());
        assert!(!arith_is_prime(&ArithIdeal::parse(&zz(), "0,2").unwrap()).unwrap());
        assert!(!arith_is_prime(&ArithIdeal::parse(&z(), "6").unwrap()).unwrap());
        assert!(arith_is_prime(&ArithIdeal::parse(&zz(), "0,1").unwrap()).unwrap());
        assert_eq!(arith_is_prime(&ArithIdeal::parse(&z(), "1").unwrap()), Err(Error::NotProper));
    }

    #[test]
    fn r_ideals() {
        let three = ArithIdeal::parse(&z(), "3").unwrap();
        let v = arith_is_r_ideal(&three);
        assert_eq!(
            v.counterexample,
            Some(Counterexample::Pair(el(&z(), &[3]), el(&z(), &[1])))
        );
        assert!(arith_is_r_ideal(&ArithIdeal::parse(&zz(), "0,2").unwrap()).is_fails());
        assert!(arith_is_r_ideal(&ArithIdeal::parse(&z(), "0").unwrap()).is_holds());
        assert!(arith_is_r_ideal(&ArithIdeal::parse(&ArithRing::parse("Z4 x Z").unwrap(), "2,0").unwrap()).is_holds());
    }

    #[test]
    fn s_r_ideals() {
        let a = ArithIdeal::parse(&zz(), "0,2").unwrap();
        let s = ArithMCS::parse(&zz(), "units,all").unwrap();
        let v = arith_is_s_r_ideal(&a, &s, 10);
        assert_eq!(v.witness, Some(el(&zz(), &[1, 0])));
        assert!(arith_oracle_check(&a, &ArithClaim::SRIdeal(s, v), 8));

        let three = ArithIdeal::parse(&z(), "3").unwrap();
        let units = ArithMCS::parse(&z(), "units").unwrap();
        let v = arith_is_s_r_ideal(&three, &units, 10);
        assert!(v.is_fails());
        assert!(arith_oracle_check(&three, &ArithClaim::SRIdeal(units.clone(), v), 6));

        let zero = ArithIdeal::parse(&z(), "0").unwrap();
        assert_eq!(arith_is_s_r_ideal(&zero, &units, 10).witness, Some(el(&z(), &[1])));
        let all = ArithMCS::parse(&z(), "all").unwrap();
        assert_eq!(
            arith_is_s_r_ideal(&zero, &all, 10).reason,
            Some(Reason::DisjointnessViolated)
        );
    }

    #[test]
    fn oracle_rejects_false_claims() {
        let three = ArithIdeal::parse(&z(), "3").unwrap();
        assert!(!arith_oracle_check(&three, &ArithClaim::RIdeal(Verdict::holds(None)), 8));
        let zero = ArithIdeal::parse(&z(), "0").unwrap();
        assert!(arith_oracle_check(&zero, &ArithClaim::RIdeal(arith_is_r_ideal(&zero)), 8));
    }

    #[test]
    fn finite_sets() {
        assert!(ArithMCS::parse(&z(), "{1,-1,0}").is_ok());
        assert!(ArithMCS::parse(&z(), "{1,2}").is_err());
        assert!(ArithMCS::parse(&z(), "{-1}").is_err());
        let m = ArithRing::parse("Z6").unwrap();
        assert!(ArithMCS::parse(&m, "{1,3}").is_ok());
    }

    #[test]
    fn ideal_pairs() {
        let a = ArithIdeal::parse(&zz(), "0,2").unwrap();
        let s = ArithMCS::parse(&zz(), "units,units").unwrap();
        let rep = ideal_pair_check(&a, &s, 10).unwrap();
        assert!(rep.holds(), "{rep:?}");
        assert_eq!(rep.b, "1Z x 2Z");
        assert_eq!(rep.k, "0Z x 1Z");
        let ok = ArithMCS::parse(&zz(), "units,all").unwrap();
        assert!(ideal_pair_check(&a, &ok, 10).is_none());
    }
}
