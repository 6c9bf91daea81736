//! Amalgamations `H₁ ⋈^f J = {(w, f(w) + j)}` inside `H₁ × H₂`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{ArithMCS, Factor};
use crate::classify::{is_s_r_ideal, Verdict};
use crate::hom::{HomSpec, RingHom};
use crate::ideal::{Ideal, MulClosedSet};
use crate::ring::{same_ring, Construction, Elem, FiniteRing, Ring};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone)]
pub struct AmalgRing {
    f: RingHom,
    j: Ideal,
    carrier: Vec<(Elem, Elem)>,
    ring: Ring,
}

pub fn make_amalgamation(f: &RingHom, j: &Ideal, spec: HomSpec, limits: &Limits) -> Result<AmalgRing> {
    let (h1, h2) = (f.domain(), f.codomain());
    if !same_ring(h2, j.ring()) {
        return Err(Error::TypeMismatch("J must be an ideal of the codomain".into()));
    }
    limits.check_size(h1.size().saturating_mul(j.len()))?;
    let carrier: Vec<(Elem, Elem)> = h1
        .elements()
        .flat_map(|w| j.members().map(move |x| (w, x)))
        .map(|(w, x)| (w, h2.add(f.apply(w), x)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index = |p: (Elem, Elem)| {
        carrier
            .binary_search(&p)
            .map_err(|_| Error::ConstructionBug("amalgamation carrier is not closed".into()))
    };
    let n = carrier.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &(a, b) in &carrier {
        for &(c, d) in &carrier {
            add.push(index((h1.add(a, c), h2.add(b, d)))?);
            mul.push(index((h1.mul(a, c), h2.mul(b, d)))?);
        }
    }
    let labels = carrier
        .iter()
        .map(|&(w, v)| format!("({},{})", h1.literal(w), h2.literal(v)))
        .collect();
    let one = index((h1.one(), h2.one()))?;
    let ring = FiniteRing::from_tables(
        add,
        mul,
        one,
        labels,
        Construction::Amalgamation {
            h1: h1.clone(),
            h2: h2.clone(),
            hom: spec,
            j_gens: j.generators().to_vec(),
            carrier: carrier.clone(),
        },
    )?;
    Ok(AmalgRing {
        f: f.clone(),
        j: j.clone(),
        carrier,
        ring: Arc::new(ring),
    })
}

impl AmalgRing {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn hom(&self) -> &RingHom {
        &self.f
    }

    pub fn j(&self) -> &Ideal {
        &self.j
    }

    pub fn pair(&self, x: Elem) -> (Elem, Elem) {
        self.carrier[x]
    }

    fn lift(&self, base: impl Iterator<Item = Elem>) -> Vec<Elem> {
        let h2 = self.f.codomain();
        let mut out = Vec::new();
        for a in base {
            for x in self.j.members() {
                let p = (a, h2.add(self.f.apply(a), x));
                out.push(self.carrier.binary_search(&p).expect("lift stays in the carrier"));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `A ⋈^f J = {(a, f(a) + j)}`.
    pub fn lift_ideal(&self, a: &Ideal) -> Ideal {
        Ideal::from_members(&self.ring, &self.lift(a.members())).expect("A ⋈ J is an ideal")
    }

    /// `S ⋈^f J = {(s, f(s) + j)}`.
    pub fn lift_mcs(&self, s: &MulClosedSet) -> MulClosedSet {
        MulClosedSet::from_members(&self.ring, &self.lift(s.members())).expect("S ⋈ J is closed")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Direction {
    /// `A` S-r implies `A ⋈ J` is `S ⋈ J`-r.
    Forward,
    /// The converse.
    Backward,
}

#[derive(Debug, Clone, Serialize)]
pub struct AmalgTransferReport {
    pub direction: Direction,
    pub epimorphism: bool,
    pub isomorphism: bool,
    pub domain: bool,
    pub j_in_zd: bool,
    pub disjoint: bool,
    pub hypotheses_met: bool,
    pub base: Verdict,
    pub lifted: Verdict,
    /// `None` when the hypotheses gate the check out.
    pub implication_holds: Option<bool>,
}

fn is_domain(ring: &Ring) -> bool {
    ring.size() > 1 && ring.elements().skip(1).all(|x| ring.is_regular(x))
}

pub fn amalg_transfer_check(
    amalg: &AmalgRing,
    a: &Ideal,
    s: &MulClosedSet,
    direction: Direction,
) -> AmalgTransferReport {
    let f = amalg.hom();
    let h2 = f.codomain();
    let epimorphism = f.is_surjective();
    let isomorphism = f.is_isomorphism();
    let domain = is_domain(f.domain());
    let j_in_zd = amalg.j().members().all(|x| h2.is_zero_divisor(x));
    let disjoint = s.is_disjoint_from(a);
    let hypotheses_met = disjoint
        && match direction {
            Direction::Forward => epimorphism && domain && j_in_zd,
            Direction::Backward => isomorphism,
        };
    let base = is_s_r_ideal(a, s);
    let lifted = is_s_r_ideal(&amalg.lift_ideal(a), &amalg.lift_mcs(s));
    let implication_holds = hypotheses_met.then(|| match direction {
        Direction::Forward => base.implies(&lifted),
        Direction::Backward => lifted.implies(&base),
    });
    AmalgTransferReport {
        direction,
        epimorphism,
        isomorphism,
        domain,
        j_in_zd,
        disjoint,
        hypotheses_met,
        base,
        lifted,
        implication_holds,
    }
}

/// `Z ⋈^f J` for the canonical `f : Z → Z_n` and an ideal `J` of `Z_n`.
#[derive(Debug, Clone)]
pub struct ZAmalg {
    zn: Ring,
    j: Ideal,
}

/// Elements of `Z ⋈ J` as `(integer, residue)`.
pub type ZAmalgElement = (i64, Elem);

#[derive(Debug, Clone, Serialize)]
pub struct ZAmalgReport {
    pub j_in_zd: bool,
    pub disjoint: bool,
    pub hypotheses_met: bool,
    /// Closed form for `(0) ⋈ J` as an `S ⋈ J`-r-ideal; the witness is `(s, s̄)`.
    pub lifted_holds: bool,
    pub witness: Option<(i64, Elem)>,
    /// The window brute force agrees with the closed form.
    pub window_agrees: bool,
    pub bound: i64,
}

impl ZAmalg {
    pub fn new(zn: &Ring, j: &Ideal) -> Result<ZAmalg> {
        if !matches!(zn.construction(), Construction::Zn(_)) || !same_ring(zn, j.ring()) {
            return Err(Error::NotApplicable(
                "the integer amalgamation family needs J inside some Z_n".into(),
            ));
        }
        Ok(ZAmalg {
            zn: zn.clone(),
            j: j.clone(),
        })
    }

    fn bar(&self, w: i64) -> Elem {
        self.zn.from_int(w)
    }

    /// `(w, v)` is regular iff `w ≠ 0` and no nonzero `j ∈ J` kills `v`.
    pub fn is_regular(&self, (w, v): ZAmalgElement) -> bool {
        w != 0 && self.j.members().all(|x| x == 0 || self.zn.mul(x, v) != 0)
    }

    /// Elements with first coordinate in `[-bound, bound]`.
    pub fn window(&self, bound: i64) -> Vec<ZAmalgElement> {
        let mut out = Vec::new();
        for w in -bound..=bound {
            let mut seconds: Vec<Elem> = self
                .j
                .members()
                .map(|x| self.zn.add(self.bar(w), x))
                .collect();
            seconds.sort_unstable();
            seconds.dedup();
            out.extend(seconds.into_iter().map(|v| (w, v)));
        }
        out
    }

    fn mul(&self, (a, b): ZAmalgElement, (c, d): ZAmalgElement) -> ZAmalgElement {
        (a * c, self.zn.mul(b, d))
    }

    /// The zero-ideal case of the forward transfer: `(0)` is always S-r in `Z`,
    /// and `(0) ⋈ J = {(0, j)}` should be `S ⋈ J`-r.
    pub fn zero_forward_check(&self, s: &ArithMCS, bound: i64) -> Result<ZAmalgReport> {
        if s.ring().factors() != [Factor::Int] {
            return Err(Error::TypeMismatch("S must be a subset of Z".into()));
        }
        let zero = crate::arith::ArithIdeal::new(s.ring(), &[0])?;
        let disjoint = s.is_disjoint_from(&zero);
        let j_in_zd = self.j.members().all(|x| self.zn.is_zero_divisor(x));
        let hypotheses_met = disjoint && j_in_zd;
        let s_elems: Vec<i64> = s.window(bound).iter().map(|x| x.coords[0]).collect();
        let first = s_elems
            .iter()
            .copied()
            .min_by_key(|&x| (x.abs(), x < 0))
            .unwrap_or(1);
        let witness = disjoint.then(|| (first, self.bar(first)));

        // Window oracle: regularity by direct annihilator search, membership
        // in (0) ⋈ J by first coordinate 0 and second in J.
        let n = match self.zn.construction() {
            Construction::Zn(n) => *n as i64,
            _ => unreachable!(),
        };
        let box_ = self.window(bound.max(n));
        let in_a = |(w, v): ZAmalgElement| w == 0 && self.j.contains(v);
        let is_zero = |p: ZAmalgElement| p == (0, 0);
        let regular = |w: ZAmalgElement| box_.iter().all(|&y| is_zero(y) || !is_zero(self.mul(w, y)));
        let mut window_agrees = true;
        if let Some((s0, _)) = witness {
            let lifted_s: Vec<ZAmalgElement> = self
                .j
                .members()
                .map(|x| (s0, self.zn.add(self.bar(s0), x)))
                .collect();
            let inner = self.window(bound);
            window_agrees = inner.iter().all(|&w| regular(w) == self.is_regular(w));
            for &w in inner.iter().filter(|&&w| regular(w)) {
                for &z in &inner {
                    if in_a(self.mul(w, z)) && !lifted_s.iter().all(|&t| in_a(self.mul(t, z))) {
                        window_agrees = false;
                    }
                }
            }
        }
        Ok(ZAmalgReport {
            j_in_zd,
            disjoint,
            hypotheses_met,
            lifted_holds: disjoint,
            witness,
            window_agrees,
            bound,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ArithRing;
    use crate::dsl::build_ring;
    use crate::hom::find_isomorphism;

    fn ring(text: &str) -> Ring {
        build_ring(text, &Limits::default()).unwrap()
    }

    fn amalg(text: &str, j: &[Elem]) -> AmalgRing {
        let r = ring(text);
        let f = RingHom::identity(&r);
        make_amalgamation(&f, &Ideal::generate(&r, j), HomSpec::Identity, &Limits::default()).unwrap()
    }

    #[test]
    fn carriers() {
        let diag = amalg("Z4", &[]);
        assert!(find_isomorphism(diag.ring(), &ring("Z4")).is_some());
        assert_eq!(amalg("Z4", &[2]).ring().size(), 8);
        assert_eq!(amalg("Z2 x Z2", &[3]).ring().size(), 16);
    }

    #[test]
    fn transfer_directions() {
        let am = amalg("Z4", &[2]);
        let z4 = am.hom().domain().clone();
        let two = Ideal::generate(&z4, &[2]);
        let one = MulClosedSet::trivial(&z4);
        let back = amalg_transfer_check(&am, &two, &one, Direction::Backward);
        assert_eq!(back.implication_holds, Some(true));
        assert!(back.base.is_holds() && back.lifted.is_holds());
        let fwd = amalg_transfer_check(&am, &two, &one, Direction::Forward);
        assert!(!fwd.domain);
        assert_eq!(fwd.implication_holds, None);

        let am2 = amalg("Z2", &[]);
        let z2 = am2.hom().domain().clone();
        let rep = amalg_transfer_check(&am2, &Ideal::zero(&z2), &MulClosedSet::trivial(&z2), Direction::Forward);
        assert_eq!(rep.implication_holds, Some(true));
    }

    #[test]
    fn integer_family() {
        let z4 = ring("Z4");
        let zam = ZAmalg::new(&z4, &Ideal::generate(&z4, &[2])).unwrap();
        assert!(zam.is_regular((3, 1)));
        assert!(!zam.is_regular((2, 2)));
        assert!(!zam.is_regular((0, 2)));
        let z = ArithRing::parse("Z").unwrap();
        let units = ArithMCS::parse(&z, "units").unwrap();
        let rep = zam.zero_forward_check(&units, 6).unwrap();
        assert!(rep.hypotheses_met && rep.lifted_holds && rep.window_agrees);
        assert_eq!(rep.witness, Some((1, 1)));
    }
}
