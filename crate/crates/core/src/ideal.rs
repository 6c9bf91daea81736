//! Ideals and multiplicatively closed sets of a finite ring.
//!
//! Both are stored as membership masks over the ring's element indices plus a
//! generator list. Member iteration is always in increasing index order, and
//! lattices are sorted by `(cardinality, member list)`, so every report built
//! on top of this module is reproducible.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::ring::{Elem, FiniteRing, Ring};
use crate::{Error, Result};

#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    mask: FixedBitSet,
    generators: Vec<Elem>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self.display())
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members().cmp(other.members()))
    }
}

/// Greedy generator extraction: keep each member not already generated.
fn extract_generators(ring: &FiniteRing, mask: &FixedBitSet) -> Vec<Elem> {
    let mut current = zero_mask(ring);
    let mut gens = Vec::new();
    for x in mask.ones() {
        if !current.contains(x) {
            gens.push(x);
            current = sum_masks(ring, &current, &principal_mask(ring, x));
        }
    }
    gens
}

fn zero_mask(ring: &FiniteRing) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(ring.size());
    m.insert(0);
    m
}

fn principal_mask(ring: &FiniteRing, g: Elem) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(ring.size());
    for r in ring.elements() {
        m.insert(ring.mul(r, g));
    }
    m
}

/// `I + J` for ideals given as masks.
fn sum_masks(ring: &FiniteRing, i: &FixedBitSet, j: &FixedBitSet) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(ring.size());
    for a in i.ones() {
        for b in j.ones() {
            m.insert(ring.add(a, b));
        }
    }
    m
}

fn is_ideal_mask(ring: &FiniteRing, mask: &FixedBitSet) -> bool {
    if !mask.contains(0) {
        return false;
    }
    for a in mask.ones() {
        for b in mask.ones() {
            if !mask.contains(ring.add(a, b)) {
                return false;
            }
        }
        if ring.elements().any(|r| !mask.contains(ring.mul(r, a))) {
            return false;
        }
    }
    true
}

impl Ideal {
    /// The smallest ideal containing `gens`.
    pub fn generate(ring: &Ring, gens: &[Elem]) -> Ideal {
        let mut mask = zero_mask(ring);
        for &g in gens {
            if !mask.contains(g) {
                mask = sum_masks(ring, &mask, &principal_mask(ring, g));
            }
        }
        Ideal {
            ring: ring.clone(),
            mask,
            generators: gens.to_vec(),
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Self::generate(ring, &[])
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Self::generate(ring, &[ring.one()])
    }

    /// Wraps an explicit member set, checking the ideal axioms.
    pub fn from_members(ring: &Ring, members: &[Elem]) -> Result<Ideal> {
        let mut mask = FixedBitSet::with_capacity(ring.size());
        for &m in members {
            if m >= ring.size() {
                return Err(Error::TypeMismatch(format!("{m} is not an element")));
            }
            mask.insert(m);
        }
        Self::from_mask(ring, mask)
    }

    pub fn from_mask(ring: &Ring, mask: FixedBitSet) -> Result<Ideal> {
        if !is_ideal_mask(ring, &mask) {
            return Err(Error::TypeMismatch("member set is not an ideal".into()));
        }
        Ok(Self::from_mask_unchecked(ring, mask))
    }

    fn from_mask_unchecked(ring: &Ring, mask: FixedBitSet) -> Ideal {
        let generators = extract_generators(ring, &mask);
        Ideal {
            ring: ring.clone(),
            mask,
            generators,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mask.ones()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.mask.contains(a)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.mask.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.mask.is_subset(&other.mask)
    }

    /// Does the ideal lie inside an arbitrary element set?
    pub fn is_within(&self, set: &FixedBitSet) -> bool {
        self.mask.is_subset(set)
    }

    pub fn meets(&self, set: &FixedBitSet) -> bool {
        !self.mask.is_disjoint(set)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mask = sum_masks(&self.ring, &self.mask, &other.mask);
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().copied());
        Ideal {
            ring: self.ring.clone(),
            mask,
            generators,
        }
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Self::from_mask_unchecked(&self.ring, mask)
    }

    /// The ideal generated by all pairwise products.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        let mut seen = FixedBitSet::with_capacity(self.ring.size());
        for a in self.generators_or_members() {
            for b in other.generators_or_members() {
                let p = self.ring.mul(a, b);
                if !seen.put(p) {
                    gens.push(p);
                }
            }
        }
        gens.sort_unstable();
        let mut ideal = Self::generate(&self.ring, &gens);
        ideal.generators = extract_generators(&self.ring, &ideal.mask);
        ideal
    }

    fn generators_or_members(&self) -> Vec<Elem> {
        if self.generators.is_empty() {
            vec![0]
        } else {
            self.generators.clone()
        }
    }

    pub fn pow(&self, k: u32) -> Ideal {
        (0..k).fold(Ideal::unit(&self.ring), |acc, _| acc.product(self))
    }

    /// `{s·a : a ∈ A}` as a member set (not necessarily an ideal in general,
    /// but always one here since `sA` is the image of an ideal under scaling).
    pub fn scaled(&self, s: Elem) -> FixedBitSet {
        let mut m = FixedBitSet::with_capacity(self.ring.size());
        for a in self.members() {
            m.insert(self.ring.mul(s, a));
        }
        m
    }

    /// Human-readable `(g1,g2)` using element literals.
    pub fn display(&self) -> String {
        format!("({})", self.ring.literal_list(&self.generators))
    }
}

/// A multiplicatively closed subset containing 1.
#[derive(Clone)]
pub struct MulClosedSet {
    ring: Ring,
    mask: FixedBitSet,
    generators: Vec<Elem>,
}

impl fmt::Debug for MulClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MulClosedSet({})", self.display())
    }
}

impl PartialEq for MulClosedSet {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for MulClosedSet {}

impl Hash for MulClosedSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

impl MulClosedSet {
    /// Multiplicative closure of `gens ∪ {1}`. May contain 0.
    pub fn generate(ring: &Ring, gens: &[Elem]) -> MulClosedSet {
        let mut mask = FixedBitSet::with_capacity(ring.size());
        mask.insert(ring.one());
        let mut queue: VecDeque<Elem> = VecDeque::from([ring.one()]);
        for &g in gens {
            if !mask.put(g) {
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            let current: Vec<Elem> = mask.ones().collect();
            for y in current {
                let p = ring.mul(x, y);
                if !mask.put(p) {
                    queue.push_back(p);
                }
            }
        }
        MulClosedSet {
            ring: ring.clone(),
            mask,
            generators: gens.to_vec(),
        }
    }

    /// `{1}`.
    pub fn trivial(ring: &Ring) -> MulClosedSet {
        Self::generate(ring, &[])
    }

    /// Wraps an explicit set, checking `1 ∈ S` and closure.
    pub fn from_members(ring: &Ring, members: &[Elem]) -> Result<MulClosedSet> {
        let mut mask = FixedBitSet::with_capacity(ring.size());
        for &m in members {
            if m >= ring.size() {
                return Err(Error::TypeMismatch(format!("{m} is not an element")));
            }
            mask.insert(m);
        }
        if !mask.contains(ring.one()) {
            return Err(Error::TypeMismatch("a multiplicative set must contain 1".into()));
        }
        for a in mask.ones() {
            for b in mask.ones() {
                if !mask.contains(ring.mul(a, b)) {
                    return Err(Error::TypeMismatch(format!(
                        "set not closed: {} * {}",
                        ring.label(a),
                        ring.label(b)
                    )));
                }
            }
        }
        let generators = mask.ones().filter(|&x| x != ring.one()).collect();
        Ok(MulClosedSet {
            ring: ring.clone(),
            mask,
            generators,
        })
    }

    /// `reg(R)`.
    pub fn regulars(ring: &Ring) -> MulClosedSet {
        Self::from_members(ring, &ring.regulars()).expect("regular elements are closed")
    }

    /// `R ∖ P` for a prime ideal `P`.
    pub fn complement(prime: &Ideal) -> Result<MulClosedSet> {
        let ring = prime.ring();
        let members: Vec<Elem> = ring.elements().filter(|&x| !prime.contains(x)).collect();
        Self::from_members(ring, &members).map_err(|_| {
            Error::NotApplicable(format!(
                "complement of {} is not multiplicatively closed",
                prime.display()
            ))
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mask.ones()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.mask.contains(a)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &MulClosedSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_disjoint_from(&self, ideal: &Ideal) -> bool {
        self.mask.is_disjoint(ideal.mask())
    }

    /// Product of every member: the `s = s₁⋯sₙ` of a finite set.
    pub fn product_of_members(&self) -> Elem {
        self.ring.product_all(self.members())
    }

    pub fn display(&self) -> String {
        format!("S<{}>", self.ring.literal_list(&self.generators))
    }
}

pub fn ideal_generate(ring: &Ring, gens: &[Elem]) -> Ideal {
    Ideal::generate(ring, gens)
}

pub fn mcs_generate(ring: &Ring, gens: &[Elem]) -> MulClosedSet {
    MulClosedSet::generate(ring, gens)
}

/// `Ann(T) = {y : yt = 0 for all t ∈ T}`.
pub fn annihilator(ring: &Ring, set: &[Elem]) -> Ideal {
    let mut mask = FixedBitSet::with_capacity(ring.size());
    mask.insert_range(..);
    for &t in set {
        mask.intersect_with(&ring.ann_mask(t));
    }
    Ideal::from_mask_unchecked(ring, mask)
}

/// `(A : K) = {w : wK ⊆ A}`.
pub fn colon(a: &Ideal, set: &[Elem]) -> Ideal {
    let ring = a.ring();
    let mut mask = FixedBitSet::with_capacity(ring.size());
    for w in ring.elements() {
        if set.iter().all(|&k| a.contains(ring.mul(w, k))) {
            mask.insert(w);
        }
    }
    Ideal::from_mask_unchecked(ring, mask)
}

/// `(A : B)` for an ideal `B`.
pub fn colon_ideal(a: &Ideal, b: &Ideal) -> Ideal {
    let gens: Vec<Elem> = b.members().collect();
    colon(a, &gens)
}

/// First pair `(w, z)` with `wz ∈ A`, `w ∉ A`, `z ∉ A`, or `None` if `A` is
/// prime. The improper ideal is reported as `Some((1, 1))`.
pub fn prime_counterexample(a: &Ideal) -> Option<(Elem, Elem)> {
    let ring = a.ring();
    if !a.is_proper() {
        return Some((ring.one(), ring.one()));
    }
    for w in ring.elements().filter(|&w| !a.contains(w)) {
        for z in ring.elements().filter(|&z| !a.contains(z)) {
            if a.contains(ring.mul(w, z)) {
                return Some((w, z));
            }
        }
    }
    None
}

pub fn is_prime(a: &Ideal) -> bool {
    prime_counterexample(a).is_none()
}

/// Every ideal of a ring, with prime and maximal ideals marked.
#[derive(Clone)]
pub struct IdealLattice {
    ring: Ring,
    ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    primes: Vec<usize>,
    maximals: Vec<usize>,
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.ideals.iter()).finish()
    }
}

impl IdealLattice {
    /// Closes the principal ideals under pairwise sums. Every ideal of a
    /// finite ring is a finite sum of principal ideals, so the fixpoint is
    /// the whole lattice.
    pub fn new(ring: &Ring) -> IdealLattice {
        let mut principals: Vec<FixedBitSet> = Vec::new();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        for g in ring.elements() {
            let m = principal_mask(ring, g);
            if seen.insert(m.clone()) {
                principals.push(m);
            }
        }
        let mut queue: VecDeque<FixedBitSet> = principals.iter().cloned().collect();
        while let Some(i) = queue.pop_front() {
            for p in &principals {
                if p.is_subset(&i) {
                    continue;
                }
                let s = sum_masks(ring, &i, p);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut ideals: Vec<Ideal> = seen
            .into_iter()
            .map(|mask| Ideal::from_mask_unchecked(ring, mask))
            .collect();
        ideals.sort();
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, id)| (id.mask.clone(), i))
            .collect();
        let primes: Vec<usize> = (0..ideals.len()).filter(|&i| is_prime(&ideals[i])).collect();
        let maximals = (0..ideals.len())
            .filter(|&i| {
                ideals[i].is_proper()
                    && !ideals.iter().any(|j| {
                        j.is_proper() && j.len() > ideals[i].len() && ideals[i].is_subset(j)
                    })
            })
            .collect();
        IdealLattice {
            ring: ring.clone(),
            ideals,
            index,
            primes,
            maximals,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    /// Position of an ideal of this ring in the sorted lattice.
    pub fn position(&self, ideal: &Ideal) -> usize {
        self.index[ideal.mask()]
    }

    pub fn proper(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| i.is_proper())
    }

    pub fn spec(&self) -> Vec<&Ideal> {
        self.primes.iter().map(|&i| &self.ideals[i]).collect()
    }

    pub fn max_ideals(&self) -> Vec<&Ideal> {
        self.maximals.iter().map(|&i| &self.ideals[i]).collect()
    }

    pub fn is_maximal(&self, ideal: &Ideal) -> bool {
        self.maximals.contains(&self.position(ideal))
    }

    pub fn is_prime(&self, ideal: &Ideal) -> bool {
        self.primes.contains(&self.position(ideal))
    }

    /// Minimal primes over a proper ideal.
    pub fn min_primes_over(&self, a: &Ideal) -> Result<Vec<&Ideal>> {
        if !a.is_proper() {
            return Err(Error::NotProper);
        }
        let over: Vec<&Ideal> = self.spec().into_iter().filter(|p| a.is_subset(p)).collect();
        Ok(over
            .iter()
            .filter(|p| !over.iter().any(|q| q.len() < p.len() && q.is_subset(p)))
            .copied()
            .collect())
    }

    /// `Min(R)`, the minimal primes over `(0)`.
    pub fn min_primes(&self) -> Vec<&Ideal> {
        if self.ring.size() == 1 {
            return Vec::new();
        }
        self.min_primes_over(&self.ideals[0])
            .expect("(0) is proper in a nonzero ring")
    }

    /// Intersection of all maximal ideals; the whole ring when there are none.
    pub fn jacobson_radical(&self) -> Ideal {
        self.max_ideals()
            .into_iter()
            .fold(Ideal::unit(&self.ring), |acc, m| acc.intersection(m))
    }
}

pub fn all_ideals(ring: &Ring) -> Vec<Ideal> {
    IdealLattice::new(ring).ideals
}

pub fn jacobson_radical(ring: &Ring) -> Ideal {
    IdealLattice::new(ring).jacobson_radical()
}

/// `{a : Ra ∩ S ≠ ∅}`.
pub fn s_units(s: &MulClosedSet) -> Vec<Elem> {
    let ring = s.ring();
    ring.elements()
        .filter(|&a| ring.elements().any(|r| s.contains(ring.mul(r, a))))
        .collect()
}
