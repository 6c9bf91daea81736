//! Ring homomorphisms between finite rings and exhaustive isomorphism search.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ideal::Ideal;
use crate::ring::{same_ring, Construction, Elem, FiniteRing, Ring};
use crate::{Error, Result};

/// A unital ring homomorphism, verified on construction.
#[derive(Clone)]
pub struct RingHom {
    domain: Ring,
    codomain: Ring,
    image: Vec<Elem>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingHom({} -> {}, {:?})",
            self.domain.recipe(),
            self.codomain.recipe(),
            self.image
        )
    }
}

impl RingHom {
    /// Checks the homomorphism laws over all pairs.
    pub fn new(domain: Ring, codomain: Ring, image: Vec<Elem>) -> Result<Self> {
        if image.len() != domain.size() || image.iter().any(|&x| x >= codomain.size()) {
            return Err(Error::TypeMismatch(format!(
                "image table does not map {} into {}",
                domain.recipe(),
                codomain.recipe()
            )));
        }
        let one = domain.one();
        if image[one] != codomain.one() {
            return Err(Error::NotAHomomorphism {
                law: "f(1) = 1",
                a: one,
                b: one,
            });
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if image[domain.add(a, b)] != codomain.add(image[a], image[b]) {
                    return Err(Error::NotAHomomorphism {
                        law: "f(a+b) = f(a)+f(b)",
                        a,
                        b,
                    });
                }
                if image[domain.mul(a, b)] != codomain.mul(image[a], image[b]) {
                    return Err(Error::NotAHomomorphism {
                        law: "f(ab) = f(a)f(b)",
                        a,
                        b,
                    });
                }
            }
        }
        Ok(Self {
            domain,
            codomain,
            image,
        })
    }

    pub fn identity(ring: &Ring) -> Self {
        Self {
            domain: ring.clone(),
            codomain: ring.clone(),
            image: ring.elements().collect(),
        }
    }

    pub fn domain(&self) -> &Ring {
        &self.domain
    }

    pub fn codomain(&self) -> &Ring {
        &self.codomain
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.image[a]
    }

    pub fn image_table(&self) -> &[Elem] {
        &self.image
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_members().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.size()];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.size() == self.codomain.size() && self.is_injective()
    }

    fn kernel_members(&self) -> Vec<Elem> {
        self.domain
            .elements()
            .filter(|&a| self.image[a] == 0)
            .collect()
    }

    pub fn kernel(&self) -> Ideal {
        Ideal::from_members(&self.domain, &self.kernel_members())
            .expect("the kernel of a homomorphism is an ideal")
    }

    pub fn inverse(&self) -> Option<RingHom> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut inv = vec![0; self.codomain.size()];
        for (a, &b) in self.image.iter().enumerate() {
            inv[b] = a;
        }
        Some(Self {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            image: inv,
        })
    }
}

/// Spells out [`RingHom::new`] under its operation name.
pub fn check_hom(domain: &Ring, codomain: &Ring, image: Vec<Elem>) -> Result<RingHom> {
    RingHom::new(domain.clone(), codomain.clone(), image)
}

pub fn is_isomorphism(h: &RingHom) -> bool {
    h.is_isomorphism()
}

/// Named homomorphisms of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomSpec {
    /// `H1 = H2`, the identity map.
    Identity,
    /// The canonical map `H1 -> H2`: a quotient projection, or `k ↦ k·1`
    /// out of `Z_n`.
    Projection,
}

impl fmt::Display for HomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomSpec::Identity => "id",
            HomSpec::Projection => "proj",
        })
    }
}

impl HomSpec {
    pub fn realize(&self, h1: &Ring, h2: &Ring) -> Result<RingHom> {
        match self {
            HomSpec::Identity => {
                if !same_ring(h1, h2) {
                    return Err(Error::TypeMismatch(format!(
                        "id needs equal rings, got {} and {}",
                        h1.recipe(),
                        h2.recipe()
                    )));
                }
                RingHom::new(h1.clone(), h2.clone(), h1.elements().collect())
            }
            HomSpec::Projection => {
                if let Construction::Quotient { base, proj, .. } = h2.construction() {
                    if same_ring(base, h1) {
                        return RingHom::new(h1.clone(), h2.clone(), proj.clone());
                    }
                }
                if let Construction::Zn(_) = h1.construction() {
                    let image = h1.elements().map(|k| h2.from_int(k as i64)).collect();
                    return RingHom::new(h1.clone(), h2.clone(), image);
                }
                Err(Error::TypeMismatch(format!(
                    "no canonical map {} -> {}",
                    h1.recipe(),
                    h2.recipe()
                )))
            }
        }
    }
}

/// Per-element invariants preserved by every isomorphism.
fn element_profile(ring: &FiniteRing) -> Vec<(usize, bool, bool, bool, usize, usize)> {
    ring.elements()
        .map(|a| {
            let ann = ring.ann_mask(a).count_ones(..);
            let mut principal = vec![false; ring.size()];
            for r in ring.elements() {
                principal[ring.mul(r, a)] = true;
            }
            (
                ring.additive_order(a),
                ring.is_unit(a),
                ring.is_idempotent(a),
                ring.is_nilpotent(a),
                ann,
                principal.iter().filter(|&&x| x).count(),
            )
        })
        .collect()
}

struct IsoSearch<'a> {
    a: &'a FiniteRing,
    b: &'a FiniteRing,
    prof_a: Vec<(usize, bool, bool, bool, usize, usize)>,
    prof_b: Vec<(usize, bool, bool, bool, usize, usize)>,
    found: Vec<Vec<Elem>>,
    cap: usize,
}

impl IsoSearch<'_> {
    /// Extends `map` to everything reachable from its assigned elements by
    /// sums and products. Returns false on a conflict.
    fn propagate(&self, map: &mut [Option<Elem>], used: &mut [bool], fresh: Vec<Elem>) -> bool {
        let mut assigned: Vec<Elem> = (0..map.len()).filter(|&x| map[x].is_some()).collect();
        let mut queue = fresh;
        while let Some(x) = queue.pop() {
            let fx = map[x].unwrap();
            let snapshot = assigned.clone();
            for &y in &snapshot {
                let fy = map[y].unwrap();
                for (src, dst) in [
                    (self.a.add(x, y), self.b.add(fx, fy)),
                    (self.a.mul(x, y), self.b.mul(fx, fy)),
                ] {
                    match map[src] {
                        Some(img) if img != dst => return false,
                        Some(_) => {}
                        None => {
                            if used[dst] || self.prof_a[src] != self.prof_b[dst] {
                                return false;
                            }
                            map[src] = Some(dst);
                            used[dst] = true;
                            assigned.push(src);
                            queue.push(src);
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, map: Vec<Option<Elem>>, used: Vec<bool>) {
        if self.found.len() >= self.cap {
            return;
        }
        let Some(next) = map.iter().position(|m| m.is_none()) else {
            self.found.push(map.into_iter().map(|m| m.unwrap()).collect());
            return;
        };
        for cand in self.b.elements() {
            if used[cand] || self.prof_a[next] != self.prof_b[cand] {
                continue;
            }
            let mut map2 = map.clone();
            let mut used2 = used.clone();
            map2[next] = Some(cand);
            used2[cand] = true;
            if self.propagate(&mut map2, &mut used2, vec![next]) {
                self.run(map2, used2);
                if self.found.len() >= self.cap {
                    return;
                }
            }
        }
    }
}

fn search(a: &Ring, b: &Ring, cap: usize) -> Vec<RingHom> {
    if a.fingerprint() != b.fingerprint() {
        return Vec::new();
    }
    let prof_a = element_profile(a);
    let mut sorted_a = prof_a.clone();
    let prof_b = element_profile(b);
    let mut sorted_b = prof_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Vec::new();
    }
    let mut st = IsoSearch {
        a,
        b,
        prof_a,
        prof_b,
        found: Vec::new(),
        cap,
    };
    let n = a.size();
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    map[0] = Some(0);
    used[0] = true;
    let mut seeds = vec![0];
    if a.one() != 0 {
        map[a.one()] = Some(b.one());
        used[b.one()] = true;
        seeds.push(a.one());
    }
    if st.propagate(&mut map, &mut used, seeds) {
        st.run(map, used);
    }
    st.found
        .into_iter()
        .map(|image| RingHom {
            domain: a.clone(),
            codomain: b.clone(),
            image,
        })
        .collect()
}

/// Exhaustive isomorphism search; `None` when the rings are not isomorphic.
pub fn find_isomorphism(a: &Ring, b: &Ring) -> Option<RingHom> {
    let hom = search(a, b, 1).pop()?;
    debug_assert!(RingHom::new(a.clone(), b.clone(), hom.image.clone()).is_ok());
    Some(hom)
}

/// Up to `cap` automorphisms, identity first.
pub fn automorphisms(ring: &Ring, cap: usize) -> Vec<RingHom> {
    search(ring, ring, cap)
}

/// Isomorphism test: exhaustive search up to `exhaustive_max` elements, the
/// invariant fingerprint above it.
pub fn isomorphic(a: &Ring, b: &Ring, exhaustive_max: usize) -> bool {
    if a.size() <= exhaustive_max {
        find_isomorphism(a, b).is_some()
    } else {
        a.fingerprint() == b.fingerprint()
    }
}

/// For an isomorphism `h`: does `h(Ann(w)) = Ann(h(w))` hold?
pub fn ann_pushforward_check(h: &RingHom, w: Elem) -> Result<bool> {
    if !h.is_isomorphism() {
        return Err(Error::NotApplicable(
            "annihilator transport needs an isomorphism".into(),
        ));
    }
    let (dom, cod) = (h.domain(), h.codomain());
    let mut pushed = fixedbitset::FixedBitSet::with_capacity(cod.size());
    for y in dom.ann_mask(w).ones() {
        pushed.insert(h.apply(y));
    }
    Ok(pushed == cod.ann_mask(h.apply(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_ring;
    use crate::ideal::Ideal;
    use crate::Limits;

    fn ring(text: &str) -> Ring {
        build_ring(text, &Limits::default()).unwrap()
    }

    #[test]
    fn identity_is_iso() {
        let z12 = ring("Z12");
        let id = RingHom::identity(&z12);
        assert!(id.is_isomorphism());
        for w in z12.elements() {
            assert!(ann_pushforward_check(&id, w).unwrap());
        }
    }

    #[test]
    fn projection_is_not_iso() {
        let z12 = ring("Z12");
        let (_, proj) = FiniteRing::quotient(&Ideal::generate(&z12, &[4])).unwrap();
        assert!(!proj.is_isomorphism());
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel().members().collect::<Vec<_>>(), vec![0, 4, 8]);
        assert!(matches!(
            ann_pushforward_check(&proj, 2),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn additive_order_obstruction() {
        let err = check_hom(&ring("Z3"), &ring("Z6"), vec![0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
    }

    #[test]
    fn crt_and_swap() {
        let z12 = ring("Z12");
        let z34 = ring("Z3 x Z4");
        let crt = find_isomorphism(&z12, &z34).expect("Z12 ≅ Z3 x Z4");
        assert!(ann_pushforward_check(&crt, 4).unwrap());
        assert!(find_isomorphism(&ring("Z2 x Z2"), &ring("Z4")).is_none());
        assert!(find_isomorphism(&ring("Z2 x Z4"), &ring("Z8")).is_none());

        let v4 = ring("Z2 x Z2");
        let autos = automorphisms(&v4, 10);
        assert_eq!(autos.len(), 2);
        let e1 = v4.resolve(&crate::dsl::parse_lits("(1,0)").unwrap()[0]).unwrap();
        for h in &autos {
            assert!(ann_pushforward_check(h, e1).unwrap());
        }
    }

    #[test]
    fn quotient_by_zero_and_by_one() {
        let z12 = ring("Z12");
        let (q0, p0) = FiniteRing::quotient(&Ideal::zero(&z12)).unwrap();
        assert!(p0.is_isomorphism());
        assert!(find_isomorphism(&z12, &q0).is_some());
        let (q1, _) = FiniteRing::quotient(&Ideal::unit(&z12)).unwrap();
        assert_eq!(q1.size(), 1);
        let (q4, _) = FiniteRing::quotient(&Ideal::generate(&z12, &[4])).unwrap();
        assert!(find_isomorphism(&q4, &ring("Z4")).is_some());
    }
}
