//! Localization of a finite ring at a multiplicatively closed set.
//!
//! In a finite ring the product `t` of all members of `S` has an idempotent
//! power `e = tᵏ`, and inverting `S` is the same as inverting `e`, so
//! `S⁻¹R ≅ eR` with identity `e` and natural map `a ↦ ea`. The formal-fraction
//! construction is kept alongside as an independent oracle.

use std::collections::HashMap;
use std::sync::Arc;

use crate::hom::RingHom;
use crate::ideal::{Ideal, MulClosedSet};
use crate::ring::{idempotent_power, Construction, Elem, FiniteRing, Ring};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone)]
pub struct LocalizationResult {
    pub localized: Ring,
    /// The natural map `π : R → S⁻¹R`.
    pub map: RingHom,
    pub kernel: Ideal,
    pub absorbing_idempotent: Elem,
}

pub fn localize(s: &MulClosedSet) -> Result<LocalizationResult> {
    let base = s.ring().clone();
    let t = s.product_of_members();
    let (e, _) = idempotent_power(&base, t);

    let mut carrier: Vec<Elem> = base.elements().map(|a| base.mul(e, a)).collect();
    carrier.sort_unstable();
    carrier.dedup();
    let mut index = vec![usize::MAX; base.size()];
    for (i, &x) in carrier.iter().enumerate() {
        index[x] = i;
    }
    let n = carrier.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &x in &carrier {
        for &y in &carrier {
            add.push(index[base.add(x, y)]);
            mul.push(index[base.mul(x, y)]);
        }
    }
    let labels = carrier.iter().map(|&x| base.label(x).to_string()).collect();
    let localized = Arc::new(FiniteRing::from_tables(
        add,
        mul,
        index[e],
        labels,
        Construction::Localization {
            base: base.clone(),
            s_gens: s.generators().to_vec(),
            idempotent: e,
            carrier: carrier.clone(),
        },
    )?);

    let image: Vec<Elem> = base.elements().map(|a| index[base.mul(e, a)]).collect();
    let map = RingHom::new(base.clone(), localized.clone(), image)?;
    if let Some(bad) = s.members().find(|&x| !localized.is_unit(map.apply(x))) {
        return Err(Error::ConstructionBug(format!(
            "image of {} is not a unit after localizing",
            base.label(bad)
        )));
    }
    let kernel = map.kernel();
    Ok(LocalizationResult {
        localized,
        map,
        kernel,
        absorbing_idempotent: e,
    })
}

/// Formal fractions `a/s` modulo `(a,s) ~ (b,u) ⇔ ∃v ∈ S: v(ua − sb) = 0`.
pub fn localize_oracle(s: &MulClosedSet, limits: &Limits) -> Result<Ring> {
    let ring = s.ring();
    let denoms: Vec<Elem> = s.members().collect();
    let pairs = ring.size() * denoms.len();
    if pairs > limits.size.saturating_mul(limits.size) {
        return Err(Error::SizeLimit {
            requested: pairs,
            limit: limits.size.saturating_mul(limits.size),
        });
    }
    let equivalent = |(a, x): (Elem, Elem), (b, u): (Elem, Elem)| {
        let d = ring.sub(ring.mul(u, a), ring.mul(x, b));
        denoms.iter().any(|&v| ring.mul(v, d) == 0)
    };

    let one = ring.one();
    let mut reps: Vec<(Elem, Elem)> = vec![(0, one)];
    let mut class: HashMap<(Elem, Elem), usize> = HashMap::new();
    let order = std::iter::once((0, one))
        .chain(ring.elements().flat_map(|a| denoms.iter().map(move |&x| (a, x))));
    for p in order {
        if class.contains_key(&p) {
            continue;
        }
        let c = match reps.iter().position(|&r| equivalent(r, p)) {
            Some(c) => c,
            None => {
                reps.push(p);
                reps.len() - 1
            }
        };
        class.insert(p, c);
    }

    let n = reps.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &(a, x) in &reps {
        for &(b, u) in &reps {
            let den = ring.mul(x, u);
            add.push(class[&(ring.add(ring.mul(u, a), ring.mul(x, b)), den)]);
            mul.push(class[&(ring.mul(a, b), den)]);
        }
    }
    let labels = reps
        .iter()
        .map(|&(a, x)| format!("{}/{}", ring.label(a), ring.label(x)))
        .collect();
    let name = format!("fractions({}, {})", ring.recipe(), s.display());
    let ring = FiniteRing::from_tables(add, mul, class[&(one, one)], labels, Construction::Table(name))?;
    Ok(Arc::new(ring))
}

/// `S⁻¹A`: the ideal of the localized ring generated by `π(A)`.
pub fn ideal_pushforward(loc: &LocalizationResult, a: &Ideal) -> Ideal {
    let gens: Vec<Elem> = a.generators().iter().map(|&g| loc.map.apply(g)).collect();
    Ideal::generate(&loc.localized, &gens)
}

/// `π⁻¹(B)` for an ideal `B` of the localized ring.
pub fn ideal_preimage(loc: &LocalizationResult, b: &Ideal) -> Ideal {
    let members: Vec<Elem> = loc
        .map
        .domain()
        .elements()
        .filter(|&x| b.contains(loc.map.apply(x)))
        .collect();
    Ideal::from_members(loc.map.domain(), &members).expect("preimage of an ideal is an ideal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_ring;
    use crate::hom::find_isomorphism;
    use crate::ideal::mcs_generate;

    fn ring(text: &str) -> Ring {
        build_ring(text, &Limits::default()).unwrap()
    }

    #[test]
    fn trivial_set_is_identity() {
        let z12 = ring("Z12");
        let loc = localize(&MulClosedSet::trivial(&z12)).unwrap();
        assert!(loc.map.is_isomorphism());
        assert_eq!(loc.absorbing_idempotent, 1);
        let four = Ideal::generate(&z12, &[4]);
        assert_eq!(ideal_pushforward(&loc, &four).len(), 3);
    }

    #[test]
    fn z6_at_three() {
        let z6 = ring("Z6");
        let s = mcs_generate(&z6, &[3]);
        let loc = localize(&s).unwrap();
        assert_eq!(loc.absorbing_idempotent, 3);
        assert_eq!(loc.localized.size(), 2);
        assert_eq!(loc.kernel.members().collect::<Vec<_>>(), vec![0, 2, 4]);
        let two = Ideal::generate(&z6, &[2]);
        assert!(ideal_pushforward(&loc, &two).is_zero());
        assert_eq!(localize_oracle(&s, &Limits::default()).unwrap().size(), 2);
    }

    #[test]
    fn z12_at_units_and_powers_of_two() {
        let z12 = ring("Z12");
        let five = localize(&mcs_generate(&z12, &[5])).unwrap();
        assert_eq!(five.absorbing_idempotent, 1);
        assert_eq!(five.localized.size(), 12);
        let four = Ideal::generate(&z12, &[4]);
        assert_eq!(ideal_pushforward(&five, &four).len(), 3);

        let s = mcs_generate(&z12, &[2]);
        let loc = localize(&s).unwrap();
        assert_eq!(loc.absorbing_idempotent, 4);
        let oracle = localize_oracle(&s, &Limits::default()).unwrap();
        let z3 = ring("Z3");
        assert!(find_isomorphism(&oracle, &z3).is_some());
        assert!(find_isomorphism(&loc.localized, &z3).is_some());
    }

    #[test]
    fn zero_in_the_set_collapses() {
        let z4 = ring("Z4");
        let s = mcs_generate(&z4, &[2]);
        let loc = localize(&s).unwrap();
        assert_eq!(loc.localized.size(), 1);
        assert_eq!(localize_oracle(&s, &Limits::default()).unwrap().size(), 1);
    }

    #[test]
    fn recipes_rebuild() {
        let z12 = ring("Z12");
        let loc = localize(&mcs_generate(&z12, &[2])).unwrap();
        let rebuilt = ring(&loc.localized.recipe());
        assert!(find_isomorphism(&rebuilt, &loc.localized).is_some());
        let preimage = ideal_preimage(&loc, &Ideal::zero(&loc.localized));
        assert_eq!(preimage, loc.kernel);
    }
}
