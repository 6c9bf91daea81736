//! Integer products: closed-form verdicts, the windowed oracle, and agreement
//! with the finite tables for purely modular products.

use ringlab_core::arith::{
    arith_is_prime, arith_is_r_ideal, arith_is_s_r_ideal, arith_oracle_check, finite_ideal, finite_mcs, ArithClaim,
    ArithIdeal, ArithMCS, ArithRing, Factor,
};
use ringlab_core::classify::{is_r_ideal, is_s_r_ideal, Counterexample};
use ringlab_core::ideal::is_prime;
use ringlab_core::Limits;

const BOUND: i64 = 10;

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[test]
fn three_z_is_prime_but_not_an_r_ideal() {
    let z = ArithRing::parse("Z").unwrap();
    let a = ArithIdeal::parse(&z, "3").unwrap();
    assert!(arith_is_prime(&a).unwrap());
    let v = arith_is_r_ideal(&a);
    assert!(v.is_fails());
    let three = z.element(&[3]).unwrap();
    let one = z.element(&[1]).unwrap();
    assert_eq!(v.counterexample, Some(Counterexample::Pair(three, one)));
    assert!(arith_oracle_check(&a, &ArithClaim::RIdeal(v), BOUND));
}

#[test]
fn zero_times_two_z_is_s_r_with_witness_one_zero() {
    let zz = ArithRing::parse("Z x Z").unwrap();
    let a = ArithIdeal::parse(&zz, "0,2").unwrap();
    let s = ArithMCS::parse(&zz, "units,all").unwrap();
    let r = arith_is_r_ideal(&a);
    assert!(r.is_fails());
    assert!(arith_oracle_check(&a, &ArithClaim::RIdeal(r), BOUND));
    let v = arith_is_s_r_ideal(&a, &s, BOUND);
    assert!(v.is_holds());
    assert_eq!(v.witness, Some(zz.element(&[1, 0]).unwrap()));
    assert!(arith_oracle_check(&a, &ArithClaim::SRIdeal(s, v), BOUND));
}

#[test]
fn oracle_agrees_on_every_small_integer_product_ideal() {
    for text in ["Z", "Z x Z", "Z x Z4", "Z x Z6", "Z4 x Z"] {
        let ring = ArithRing::parse(text).unwrap();
        let slots: Vec<Vec<u64>> = ring
            .factors()
            .iter()
            .map(|f| match f {
                Factor::Int => vec![0, 1, 2, 3, 4, 6],
                Factor::Mod(n) => divisors(*n),
            })
            .collect();
        let mut combos: Vec<Vec<u64>> = vec![vec![]];
        for slot in &slots {
            combos = combos
                .into_iter()
                .flat_map(|c| slot.iter().map(move |&d| [c.clone(), vec![d]].concat()))
                .collect();
        }
        let sets: Vec<ArithMCS> = ["units", "all"]
            .iter()
            .flat_map(|a| ["units", "all"].iter().map(move |b| (a, b)))
            .map(|(a, b)| {
                let text = if ring.factors().len() == 1 { a.to_string() } else { format!("{a},{b}") };
                ArithMCS::parse(&ring, &text).unwrap()
            })
            .collect();
        for ds in combos {
            let a = ArithIdeal::new(&ring, &ds).unwrap();
            if !a.is_proper() {
                continue;
            }
            let r = arith_is_r_ideal(&a);
            assert!(arith_oracle_check(&a, &ArithClaim::RIdeal(r.clone()), BOUND), "{text} {a}: {r:?}");
            for s in &sets {
                let v = arith_is_s_r_ideal(&a, s, BOUND);
                assert!(
                    arith_oracle_check(&a, &ArithClaim::SRIdeal(s.clone(), v.clone()), BOUND),
                    "{text} {a} {s}: {v:?}"
                );
            }
        }
    }
}

#[test]
fn modular_products_agree_with_their_finite_tables() {
    for text in ["Z4", "Z6", "Z12", "Z2 x Z4", "Z4 x Z6", "Z3 x Z3"] {
        let ring = ArithRing::parse(text).unwrap();
        let fin = ring.to_finite(&Limits::default()).unwrap();
        let slots: Vec<Vec<u64>> = ring
            .factors()
            .iter()
            .map(|f| match f {
                Factor::Mod(n) => divisors(*n),
                Factor::Int => unreachable!(),
            })
            .collect();
        let mut combos: Vec<Vec<u64>> = vec![vec![]];
        for slot in &slots {
            combos = combos
                .into_iter()
                .flat_map(|c| slot.iter().map(move |&d| [c.clone(), vec![d]].concat()))
                .collect();
        }
        let units = ArithMCS::parse(&ring, &vec!["units"; slots.len()].join(",")).unwrap();
        let all = ArithMCS::parse(&ring, &vec!["all"; slots.len()].join(",")).unwrap();
        for ds in combos {
            let a = ArithIdeal::new(&ring, &ds).unwrap();
            let fa = finite_ideal(&a, &fin);
            for x in ring.window(BOUND) {
                assert_eq!(a.contains(&x), fa.contains(ring.finite_index(&x)));
            }
            if !a.is_proper() {
                continue;
            }
            assert_eq!(arith_is_prime(&a).unwrap(), is_prime(&fa), "{text} {a}");
            assert_eq!(arith_is_r_ideal(&a).is_holds(), is_r_ideal(&fa).is_holds(), "{text} {a}");
            for s in [&units, &all] {
                let fs = finite_mcs(s, &fin);
                assert_eq!(
                    arith_is_s_r_ideal(&a, s, BOUND).outcome,
                    is_s_r_ideal(&fa, &fs).outcome,
                    "{text} {a} {s}"
                );
            }
        }
    }
}
