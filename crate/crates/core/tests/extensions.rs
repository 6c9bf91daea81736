//! Trivial extensions and amalgamations: carrier sizes, embeddings and the
//! ideal correspondences.

use ringlab_core::classify::is_s_r_ideal;
use ringlab_core::dsl::build_ring;
use ringlab_core::ext::{
    make_amalgamation, make_module_free, make_module_quotient, make_trivial_extension, triv_equivalence_check, LiftMode,
};
use ringlab_core::hom::HomSpec;
use ringlab_core::ideal::{Ideal, IdealLattice, MulClosedSet};
use ringlab_core::{Limits, Ring};

fn ring(text: &str) -> Ring {
    build_ring(text, &Limits::default()).unwrap()
}

#[test]
fn amalgamation_carrier_has_size_of_base_times_j() {
    let limits = Limits::default();
    for (base, target) in [("Z4", "Z4"), ("Z6", "Z6"), ("Z2 x Z2", "Z2 x Z2"), ("Z8", "Z8"), ("Z12", "Z4")] {
        let (r1, r2) = (ring(base), ring(target));
        let spec = if base == target { HomSpec::Identity } else { HomSpec::Projection };
        let f = spec.realize(&r1, &r2).unwrap();
        for j in IdealLattice::new(&r2).ideals() {
            let am = make_amalgamation(&f, j, spec, &limits).unwrap();
            assert_eq!(am.ring().size(), r1.size() * j.len(), "{base} along {}", j.display());
            for x in am.ring().elements() {
                let (w, v) = am.pair(x);
                assert!(j.contains(r2.sub(v, f.apply(w))));
            }
            let (w, v) = am.pair(am.ring().one());
            assert_eq!((w, v), (r1.one(), r2.one()));
        }
    }
}

#[test]
fn amalgamation_along_zero_is_the_base_ring() {
    let limits = Limits::default();
    let r = ring("Z6");
    let f = HomSpec::Identity.realize(&r, &r).unwrap();
    let am = make_amalgamation(&f, &Ideal::zero(&r), HomSpec::Identity, &limits).unwrap();
    assert!(ringlab_core::hom::find_isomorphism(am.ring(), &r).is_some());
}

#[test]
fn trivial_extension_sizes_and_nilpotent_module_part() {
    let limits = Limits::default();
    for (base, k) in [("Z2", 1), ("Z2", 2), ("Z3", 1), ("Z4", 1), ("Z6", 1)] {
        let r = ring(base);
        let m = make_module_free(&r, k, &limits).unwrap();
        let ext = make_trivial_extension(&r, &m, &limits).unwrap();
        assert_eq!(ext.ring().size(), r.size() * m.size());
        let er = ext.ring();
        for x in er.elements() {
            let (a, n) = ext.split(x);
            assert_eq!(ext.pair(a, n), x);
            if a == r.zero() {
                assert_eq!(er.mul(x, x), er.zero());
            }
        }
    }
}

#[test]
fn trivial_extension_preserves_s_r_status_under_torsion_free_module() {
    let limits = Limits::default();
    for base in ["Z2", "Z3", "Z4", "Z6"] {
        let r = ring(base);
        let m = make_module_free(&r, 1, &limits).unwrap();
        let ext = make_trivial_extension(&r, &m, &limits).unwrap();
        for a in IdealLattice::new(&r).proper() {
            for g in r.elements() {
                let s = MulClosedSet::generate(&r, &[g]);
                if !s.is_disjoint_from(a) {
                    continue;
                }
                let report = triv_equivalence_check(&ext, a, &s);
                assert!(report.consistent(), "{base} {} {}", a.display(), s.display());
                let lifted = ext.triv_ideal_full(a);
                let lifted_s = ext.lift_mcs(&s, LiftMode::SZero);
                assert_eq!(is_s_r_ideal(a, &s).outcome, is_s_r_ideal(&lifted, &lifted_s).outcome);
            }
        }
    }
}

#[test]
fn quotient_module_has_expected_size() {
    let r = ring("Z4");
    let two = Ideal::generate(&r, &[r.from_int(2)]);
    let m = make_module_quotient(&two).unwrap();
    assert_eq!(m.size(), 2);
    let ext = make_trivial_extension(&r, &m, &Limits::default()).unwrap();
    assert_eq!(ext.ring().size(), 8);
}
