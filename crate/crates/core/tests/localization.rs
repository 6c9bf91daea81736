//! The idempotent localization against the formal-fraction construction.

use ringlab_core::dsl::build_ring;
use ringlab_core::hom::find_isomorphism;
use ringlab_core::ideal::{Ideal, MulClosedSet};
use ringlab_core::localize::{ideal_preimage, ideal_pushforward, localize, localize_oracle};
use ringlab_core::{Limits, Ring};

fn rings() -> Vec<Ring> {
    let limits = Limits::default();
    let mut recipes: Vec<String> = (1..=24).map(|n| format!("Z{n}")).collect();
    for a in 2..=4 {
        for b in a..=24 / a {
            recipes.push(format!("Z{a} x Z{b}"));
        }
    }
    recipes.extend(
        ["Z12/(4)", "Z18/(6)", "triv(Z2, free(1))", "triv(Z2, free(2))", "triv(Z3, free(1))", "triv(Z4, quot(2))", "amalg(Z4, Z4, id, (2))"]
            .map(String::from),
    );
    recipes.iter().map(|r| build_ring(r, &limits).expect("recipe builds")).collect()
}

/// Every m.c.s. generated by one element, plus the regular elements.
fn candidate_sets(ring: &Ring) -> Vec<MulClosedSet> {
    let mut out: Vec<MulClosedSet> = Vec::new();
    for x in ring.elements() {
        let s = MulClosedSet::generate(ring, &[x]);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    let reg = MulClosedSet::regulars(ring);
    if !out.contains(&reg) {
        out.push(reg);
    }
    out
}

#[test]
fn idempotent_localization_is_isomorphic_to_fractions() {
    let limits = Limits::default();
    let mut checked = 0;
    for ring in rings() {
        for s in candidate_sets(&ring) {
            let loc = localize(&s).unwrap();
            let oracle = localize_oracle(&s, &limits).unwrap();
            assert_eq!(loc.localized.size(), oracle.size(), "{} at {}", ring.recipe(), s.display());
            assert!(
                find_isomorphism(&loc.localized, &oracle).is_some(),
                "{} at {}",
                ring.recipe(),
                s.display()
            );
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn localization_map_kernel_and_ideal_transport() {
    for ring in rings() {
        for s in candidate_sets(&ring) {
            let loc = localize(&s).unwrap();
            let kernel: Vec<usize> = ring
                .elements()
                .filter(|&a| s.members().any(|t| ring.mul(t, a) == ring.zero()))
                .collect();
            assert_eq!(loc.kernel, Ideal::from_members(&ring, &kernel).unwrap());
            assert_eq!(loc.map.kernel(), loc.kernel);
            for t in s.members() {
                assert!(loc.localized.is_unit(loc.map.apply(t)));
            }
            let zero = Ideal::zero(&ring);
            let back = ideal_preimage(&loc, &ideal_pushforward(&loc, &zero));
            assert_eq!(back, loc.kernel);
        }
    }
}

#[test]
fn localizing_zero_and_regulars() {
    let limits = Limits::default();
    let z6 = build_ring("Z6", &limits).unwrap();
    let all = MulClosedSet::generate(&z6, &[0]);
    assert_eq!(localize(&all).unwrap().localized.size(), 1);
    let z12 = build_ring("Z12", &limits).unwrap();
    let reg = MulClosedSet::regulars(&z12);
    assert_eq!(localize(&reg).unwrap().localized.size(), 12);
    let three = MulClosedSet::generate(&z12, &[z12.from_int(3)]);
    assert_eq!(localize(&three).unwrap().localized.size(), 4);
}
