//! Statements spanning finite rings and the integer, extension and polynomial layers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringlab_core::arith::{
    arith_is_prime, arith_is_r_ideal, arith_is_s_r_ideal, arith_oracle_check, ideal_pair_check, ArithClaim,
    ArithIdeal, ArithMCS, Factor,
};
use ringlab_core::classify::{has_fac, has_property_a_in, is_r_ideal, is_uz_ring, Counterexample};
use ringlab_core::ext::{amalg_transfer_check, make_amalgamation, make_trivial_extension, triv_equivalence_check, Direction};
use ringlab_core::ideal::{colon, colon_ideal, Ideal, MulClosedSet};
use ringlab_core::poly::{
    bounded_s_r_search, content_product_bound, dedekind_mertens_check, poly_s_unit_check, Poly, PolyIdealSpec,
    PolyOutcome, PolyRing,
};
use ringlab_core::ring::Construction;
use serde_json::{json, Value};

use super::finite::{self, fin, in_regulars, in_zd};
use super::{
    ann, arith_ideal_text, arith_mcs_text, finding, ideal_text, label, mcs_text, verdict_json, ArithPrep, CoreResult,
    Ctx, FinitePrep, Prepared, ARITH_BOUND, DM_PAIRS, DM_SEED,
};
use crate::corpus::Entry;
use crate::report::CaseResult;

/// Largest degree of the random Dedekind–Mertens polynomials.
const DM_DEGREE: usize = 4;

/// `A ⊆ zd`: some slot ideal consists of zero divisors of its factor.
fn arith_in_zd(a: &ArithIdeal) -> bool {
    a.ring()
        .factors()
        .iter()
        .zip(a.descriptors())
        .any(|(f, &d)| match f {
            Factor::Int => d == 0,
            Factor::Mod(_) => d != 1,
        })
}

/// S-r, where a set meeting `A` counts only once disjointness is dropped.
fn arith_s_r(ctx: &Ctx, a: &ArithIdeal, s: &ArithMCS) -> bool {
    if !s.is_disjoint_from(a) {
        return !ctx.opts().check_disjoint;
    }
    arith_is_s_r_ideal(a, s, ARITH_BOUND).is_holds()
}

fn arith_ann(a: &ArithIdeal, s: &ArithMCS) -> super::Annotations {
    ann(&[("ideal", arith_ideal_text(a)), ("mcs", arith_mcs_text(s))])
}

fn arith_pairs(p: &ArithPrep) -> impl Iterator<Item = (&ArithIdeal, &ArithMCS)> {
    p.ideals.iter().flat_map(move |a| p.mcs.iter().map(move |s| (a, s)))
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

pub fn p2_6(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let mut out = Vec::new();
    match prep {
        Prepared::Arith(p) => {
            for (a, s) in arith_pairs(p) {
                let v = arith_is_s_r_ideal(a, s, ARITH_BOUND);
                let hyps = [("a_in_zd", arith_in_zd(a)), ("not_s_r", v.is_fails())];
                out.push(ctx.case(arith_ann(a, s), &hyps, || {
                    Ok(match ideal_pair_check(a, s, ARITH_BOUND) {
                        Some(r) => finding(r.holds(), to_json(&r)),
                        None => finding(false, json!({ "reason": "no failed witness to build B from" })),
                    })
                })?);
            }
        }
        _ => {
            let Some(p) = fin(prep) else { return Ok(out) };
            let ring = &p.ring;
            for &(i, s) in &p.pairs {
                let a = p.ideal(i);
                let v = p.s_r(ctx, i, s);
                let hyps = [("a_in_zd", in_zd(a)), ("not_s_r", v.is_fails())];
                out.push(ctx.case(p.annotations(i, s), &hyps, || {
                    let Some(Counterexample::Pair(_, z)) = v.counterexample else {
                        return Ok(finding(false, json!({ "reason": "no failed witness to build B from" })));
                    };
                    let last = p.mcs[s].members().last().expect("S contains 1");
                    let b = colon(a, &[ring.mul(last, z)]);
                    let k = colon_ideal(a, &b);
                    let checks = [
                        b.members().any(|x| ring.is_regular(x)),
                        a.is_subset(&b) && b != *a,
                        a.is_subset(&k) && k != *a,
                        b.product(&k).is_subset(a),
                    ];
                    Ok(finding(
                        checks.iter().all(|&c| c),
                        json!({ "s": label(ring, last), "x": label(ring, z), "b": ideal_text(&b), "k": ideal_text(&k), "checks": checks }),
                    ))
                })?);
            }
        }
    }
    Ok(out)
}

pub fn t2_12(ctx: &Ctx, e: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Prepared::Arith(p) = prep else {
        return fin(prep).map_or(Ok(vec![]), |p| finite::t2_12(ctx, e, p));
    };
    let mut out = Vec::new();
    for (a, s) in arith_pairs(p) {
        let hyps = [("prime", arith_is_prime(a)?), ("disjoint", s.is_disjoint_from(a))];
        out.push(ctx.case(arith_ann(a, s), &hyps, || {
            let s_r = arith_s_r(ctx, a, s);
            let zd = arith_in_zd(a);
            Ok(finding(s_r == zd, json!({ "s_r": s_r, "in_zd": zd })))
        })?);
    }
    Ok(out)
}

pub fn c_zd(ctx: &Ctx, e: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Prepared::Arith(p) = prep else {
        return fin(prep).map_or(Ok(vec![]), |p| finite::c_zd(ctx, e, p));
    };
    let mut out = Vec::new();
    for (a, s) in arith_pairs(p) {
        out.push(ctx.case(arith_ann(a, s), &[("a_s_r", arith_s_r(ctx, a, s))], || {
            let zd = arith_in_zd(a);
            Ok(finding(zd, json!({ "in_zd": zd })))
        })?);
    }
    Ok(out)
}

pub fn p_zero(ctx: &Ctx, e: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Prepared::Arith(p) = prep else {
        return fin(prep).map_or(Ok(vec![]), |p| finite::p_zero(ctx, e, p));
    };
    let zero = ArithIdeal::new(&p.ring, &vec![0; p.ring.factors().len()])?;
    let mut out = Vec::new();
    for s in &p.mcs {
        let hyps = [("proper", zero.is_proper()), ("disjoint", s.is_disjoint_from(&zero))];
        out.push(ctx.case(arith_ann(&zero, s), &hyps, || {
            let v = arith_is_s_r_ideal(&zero, s, ARITH_BOUND);
            let oracle = arith_oracle_check(&zero, &ArithClaim::SRIdeal(s.clone(), v.clone()), ARITH_BOUND);
            Ok(finding(
                arith_s_r(ctx, &zero, s) && oracle,
                json!({ "verdict": to_json(&v), "oracle_agrees": oracle }),
            ))
        })?);
    }
    Ok(out)
}

pub fn p3_2(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let mut out = Vec::new();
    if let Prepared::ZAmalg(p) = prep {
        for s in &p.mcs {
            let rep = p.amalg.zero_forward_check(s, ARITH_BOUND)?;
            let an = ann(&[
                ("ideal", "0".into()),
                ("mcs", arith_mcs_text(s)),
                ("j", ideal_text(&p.j)),
                ("direction", "forward".into()),
            ]);
            let hyps = [("j_in_zd", rep.j_in_zd), ("disjoint", rep.disjoint)];
            out.push(ctx.case(an, &hyps, || Ok(finding(rep.lifted_holds && rep.window_agrees, to_json(&rep))))?);
        }
        return Ok(out);
    }
    let Some(p) = fin(prep) else { return Ok(out) };
    let Construction::Amalgamation {
        h1, h2, hom, j_gens, ..
    } = p.ring.construction()
    else {
        return Ok(out);
    };
    let f = hom.realize(h1, h2)?;
    let j = Ideal::generate(h2, j_gens);
    let amalg = make_amalgamation(&f, &j, *hom, ctx.limits)?;
    let base = FinitePrep::new(h1, None, None);
    for &(i, s) in &base.pairs {
        let a = base.ideal(i);
        let set = &base.mcs[s];
        for direction in [Direction::Forward, Direction::Backward] {
            let rep = amalg_transfer_check(&amalg, a, set, direction);
            let mut an = base.annotations(i, s);
            an.insert("j".into(), ideal_text(&j));
            let (name, hyps) = match direction {
                Direction::Forward => (
                    "forward",
                    vec![
                        ("epimorphism", rep.epimorphism),
                        ("domain", rep.domain),
                        ("j_in_zd", rep.j_in_zd),
                        ("disjoint", rep.disjoint),
                    ],
                ),
                Direction::Backward => (
                    "backward",
                    vec![("isomorphism", rep.isomorphism), ("disjoint", rep.disjoint)],
                ),
            };
            an.insert("direction".into(), name.into());
            out.push(ctx.case(an, &hyps, || {
                let ok = match direction {
                    Direction::Forward => rep.base.implies(&rep.lifted),
                    Direction::Backward => rep.lifted.implies(&rep.base),
                };
                Ok(finding(
                    ok,
                    json!({ "base": verdict_json(h1, &rep.base), "lifted": verdict_json(amalg.ring(), &rep.lifted) }),
                ))
            })?);
        }
    }
    Ok(out)
}

pub fn p3_3(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let mut out = Vec::new();
    let Some(p) = fin(prep) else { return Ok(out) };
    let Construction::TrivialExtension { base, module } = p.ring.construction() else {
        return Ok(out);
    };
    let ext = make_trivial_extension(base, module, ctx.limits)?;
    let bp = FinitePrep::new(base, None, None);
    for &(i, s) in &bp.pairs {
        let rep = triv_equivalence_check(&ext, bp.ideal(i), &bp.mcs[s]);
        let mut an = bp.annotations(i, s);
        an.insert("union_condition_literal".into(), rep.union_condition_literal.to_string());
        let hyps = [
            ("disjoint", rep.disjoint),
            ("torsion_free", rep.torsion_free),
            ("union_condition", rep.union_condition_nonzero),
        ];
        out.push(ctx.case(an, &hyps, || {
            let ok = rep.pattern == "000" || rep.pattern == "111";
            Ok(finding(ok, json!({ "pattern": rep.pattern })))
        })?);
    }
    Ok(out)
}

/// Shared body of the two polynomial transfer theorems: the gate hypothesis
/// plus the base verdict against the bounded content search.
fn poly_transfer(ctx: &Ctx, prep: &Prepared, gate: (&str, bool), with_reg: bool) -> CoreResult<Vec<CaseResult>> {
    let Prepared::Poly(pp) = prep else { return Ok(vec![]) };
    let p = &pp.finite;
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let mut hyps = vec![gate];
        if with_reg {
            hyps.push(("s_in_reg", in_regulars(&p.mcs[s])));
        }
        hyps.push(("disjoint", p.mcs[s].is_disjoint_from(a)));
        out.push(ctx.case(p.annotations(i, s), &hyps, || {
            let base = p.s_r(ctx, i, s);
            let search = pp.content_search(i, s, ctx.degree)?;
            let clean = matches!(search.outcome, PolyOutcome::NoViolationUpTo(_));
            Ok(finding(
                base.is_holds() == clean,
                json!({ "base": verdict_json(&p.ring, &base), "search": search.describe(&pp.poly) }),
            ))
        })?);
    }
    Ok(out)
}

pub fn t4_1(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Prepared::Poly(pp) = prep else { return Ok(vec![]) };
    let property_a = has_property_a_in(&pp.finite.lattice).is_holds();
    poly_transfer(ctx, prep, ("property_a", property_a), true)
}

pub fn t4_2(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Prepared::Poly(pp) = prep else { return Ok(vec![]) };
    let fac = has_fac(&pp.finite.ring, ctx.limits.fac_cap).is_holds();
    poly_transfer(ctx, prep, ("fac", fac), false)
}

fn random_poly(ring: &PolyRing, rng: &mut ChaCha8Rng) -> CoreResult<Poly> {
    let n = ring.base().size();
    let d = rng.gen_range(0..=DM_DEGREE);
    let coeffs: Vec<usize> = (0..=d).map(|_| rng.gen_range(0..n)).collect();
    ring.poly(&coeffs)
}

/// Seeded random pairs `(w, z)` of degree at most four.
pub fn dm_pairs(ring: &PolyRing, count: usize) -> CoreResult<Vec<(Poly, Poly)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(DM_SEED);
    (0..count)
        .map(|_| Ok((random_poly(ring, &mut rng)?, random_poly(ring, &mut rng)?)))
        .collect()
}

pub fn dm(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let owned;
    let ring = match prep {
        Prepared::Poly(pp) => &pp.poly,
        _ => {
            let Some(p) = fin(prep) else { return Ok(vec![]) };
            owned = PolyRing::new(&p.ring, ctx.limits);
            &owned
        }
    };
    dm_pairs(ring, DM_PAIRS)?
        .into_iter()
        .map(|(w, z)| {
            let an = ann(&[("w", ring.display(&w)), ("z", ring.display(&z))]);
            ctx.case(an, &[], || {
                let identity = dedekind_mertens_check(ring, &w, &z);
                let bound = content_product_bound(ring, &w, &z);
                Ok(finding(
                    identity && bound,
                    json!({ "identity": identity, "content_bound": bound, "m": w.degree_or_zero() }),
                ))
            })
        })
        .collect()
}

pub fn degen(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    match prep {
        Prepared::Arith(p) => {
            let has_int = p.ring.factors().contains(&Factor::Int);
            let candidates = ArithPrep::new(&p.ring, None, None)?.ideals;
            let case = ctx.case(ann(&[]), &[("has_int_factor", has_int)], || {
                for a in &candidates {
                    let v = arith_is_r_ideal(a);
                    if v.is_fails() {
                        let oracle = arith_oracle_check(a, &ArithClaim::RIdeal(v.clone()), ARITH_BOUND);
                        return Ok(finding(
                            oracle,
                            json!({ "non_r_ideal": arith_ideal_text(a), "verdict": to_json(&v), "oracle_agrees": oracle }),
                        ));
                    }
                }
                Ok(finding(false, json!({ "reason": "every candidate ideal is an r-ideal" })))
            })?;
            Ok(vec![case])
        }
        Prepared::Poly(pp) => {
            let ring = &pp.poly;
            let base = ring.base();
            let kernel = PolyIdealSpec::EvalKernel {
                point: base.one(),
                ideal: Ideal::zero(base),
            };
            let mut sets = vec![MulClosedSet::trivial(base)];
            let is_field = base.size() > 1 && base.elements().skip(1).all(|x| base.is_unit(x));
            if is_field {
                sets.push(MulClosedSet::from_members(base, &base.units())?);
            }
            let mut out = Vec::new();
            for s in sets {
                let an = ann(&[("ideal", kernel.describe()), ("mcs", mcs_text(&s))]);
                out.push(ctx.case(an, &[], || {
                    let v = bounded_s_r_search(ring, &kernel, &s, ctx.degree)?;
                    let no = matches!(v.outcome, PolyOutcome::No { .. });
                    let mut data = json!({ "search": v.describe(ring) });
                    let mut ok = no;
                    if s.len() > 1 {
                        let unit = poly_s_unit_check(ring, &ring.x(), &s, ctx.degree)?;
                        ok &= unit == ringlab_core::poly::SUnitResult::AnalyticNo;
                        data["x_s_unit"] = to_json(&unit);
                    }
                    Ok(finding(ok, data))
                })?);
            }
            Ok(out)
        }
        _ => {
            let Some(p) = fin(prep) else { return Ok(vec![]) };
            let case = ctx.case(ann(&[]), &[], || {
                let uz = is_uz_ring(&p.ring);
                let non_r = p
                    .lattice
                    .proper()
                    .find(|a| !is_r_ideal(a).is_holds())
                    .map(ideal_text);
                Ok(finding(
                    uz.is_holds() && non_r.is_none(),
                    json!({ "uz": verdict_json(&p.ring, &uz), "non_r_ideal": non_r }),
                ))
            })?;
            Ok(vec![case])
        }
    }
}
