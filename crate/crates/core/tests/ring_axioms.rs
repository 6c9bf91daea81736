//! Property checks for the finite ring tables and ideal operations.

use proptest::prelude::*;
use ringlab_core::classify::{is_r_ideal, is_s_r_ideal};
use ringlab_core::dsl::build_ring;
use ringlab_core::ideal::{annihilator, colon, colon_ideal, Ideal, IdealLattice, MulClosedSet};
use ringlab_core::{Limits, Ring};

const RECIPES: &[&str] = &[
    "Z1",
    "Z2",
    "Z4",
    "Z6",
    "Z8",
    "Z9",
    "Z12",
    "Z30",
    "Z2 x Z2",
    "Z2 x Z4",
    "Z3 x Z6",
    "Z12/(4)",
    "triv(Z2, free(2))",
    "triv(Z4, quot(2))",
    "amalg(Z4, Z4, id, (2))",
];

fn ring(i: usize) -> Ring {
    build_ring(RECIPES[i % RECIPES.len()], &Limits::default()).expect("recipe builds")
}

fn pick(r: &Ring, k: usize) -> usize {
    k % r.size()
}

proptest! {
    #[test]
    fn tables_satisfy_commutative_ring_axioms(i in 0usize..64, a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let r = ring(i);
        let (a, b, c) = (pick(&r, a), pick(&r, b), pick(&r, c));
        prop_assert_eq!(r.add(a, b), r.add(b, a));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(a, r.zero()), a);
        prop_assert_eq!(r.mul(a, r.one()), a);
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
    }

    #[test]
    fn annihilator_matches_definition(i in 0usize..64, a in 0usize..1000) {
        let r = ring(i);
        let a = pick(&r, a);
        let ann = annihilator(&r, &[a]);
        for x in r.elements() {
            prop_assert_eq!(ann.contains(x), r.mul(a, x) == r.zero());
        }
        prop_assert_eq!(r.is_regular(a), ann.is_zero());
    }

    #[test]
    fn colon_is_monotone_and_contains_ideal(i in 0usize..64, g in 0usize..1000, h in 0usize..1000, x in 0usize..1000) {
        let r = ring(i);
        let a = Ideal::generate(&r, &[pick(&r, g)]);
        let b = a.sum(&Ideal::generate(&r, &[pick(&r, h)]));
        let x = pick(&r, x);
        let ca = colon(&a, &[x]);
        let cb = colon(&b, &[x]);
        prop_assert!(a.is_subset(&ca));
        prop_assert!(ca.is_subset(&cb));
        for y in r.elements() {
            prop_assert_eq!(ca.contains(y), a.contains(r.mul(x, y)));
        }
        let ideal_colon = colon_ideal(&a, &b);
        for y in r.elements() {
            prop_assert_eq!(ideal_colon.contains(y), b.members().all(|m| a.contains(r.mul(m, y))));
        }
    }

    #[test]
    fn generated_mcs_is_multiplicatively_closed(i in 0usize..64, g in 0usize..1000) {
        let r = ring(i);
        let s = MulClosedSet::generate(&r, &[pick(&r, g)]);
        prop_assert!(s.contains(r.one()));
        for a in s.members() {
            for b in s.members() {
                prop_assert!(s.contains(r.mul(a, b)));
            }
        }
    }
}

#[test]
fn lattice_ideals_are_closed_and_distinct() {
    for i in 0..RECIPES.len() {
        let r = ring(i);
        let lat = IdealLattice::new(&r);
        for (k, a) in lat.ideals().iter().enumerate() {
            for x in a.members() {
                for y in a.members() {
                    assert!(a.contains(r.add(x, y)));
                }
                for y in r.elements() {
                    assert!(a.contains(r.mul(x, y)));
                }
            }
            for b in &lat.ideals()[..k] {
                assert_ne!(a, b);
            }
        }
        for x in r.elements() {
            let p = Ideal::generate(&r, &[x]);
            assert!(lat.ideals().contains(&p), "principal ideal missing in {}", RECIPES[i]);
        }
    }
}

#[test]
fn disjoint_proper_ideals_of_finite_rings_are_r_and_s_r() {
    for i in 0..RECIPES.len() {
        let r = ring(i);
        let lat = IdealLattice::new(&r);
        let units = MulClosedSet::regulars(&r);
        for a in lat.proper() {
            let brute = r.elements().filter(|&w| r.is_regular(w)).all(|w| {
                r.elements().all(|z| !a.contains(r.mul(w, z)) || a.contains(z))
            });
            assert!(brute);
            assert!(is_r_ideal(a).is_holds(), "{} {}", RECIPES[i], a.display());
            if units.is_disjoint_from(a) {
                assert!(is_s_r_ideal(a, &units).is_holds());
            }
        }
    }
}
