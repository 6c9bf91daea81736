//! Statements about S-r-ideals of finite rings.

use ringlab_core::classify::{
    colon_condition, is_r_ideal, is_s_r_ideal_with, is_s_uz_ring, is_s_z0_ideal_with, localization_condition,
    s_idempotent_ideal_check, scaled_intersection_condition,
};
use ringlab_core::hom::{ann_pushforward_check, automorphisms, RingHom};
use ringlab_core::ideal::{annihilator, colon, colon_ideal, Ideal, MulClosedSet};
use ringlab_core::localize::ideal_pushforward;
use ringlab_core::ring::make_quotient;
use serde_json::json;

use super::{ann, finding, ideal_text, label, mcs_text, verdict_json, CoreResult, Ctx, FinitePrep, Prepared};
use crate::corpus::Entry;
use crate::report::CaseResult;

/// Number of smallest candidate sets tried as `S1`.
const T2_3_S1: usize = 6;
/// Automorphisms examined per ring.
const AUTOMORPHISM_CAP: usize = 8;
/// Quotient projections examined per ring.
const PROJECTION_CAP: usize = 4;

pub(super) fn fin(prep: &Prepared) -> Option<&FinitePrep> {
    match prep {
        Prepared::Finite(p) => Some(p),
        Prepared::Poly(p) => Some(&p.finite),
        _ => None,
    }
}

pub(super) fn in_zd(a: &Ideal) -> bool {
    let ring = a.ring();
    a.members().all(|x| ring.is_zero_divisor(x))
}

pub(super) fn in_regulars(s: &MulClosedSet) -> bool {
    let ring = s.ring();
    s.members().all(|x| ring.is_regular(x))
}

fn members(a: &Ideal) -> Vec<usize> {
    a.members().collect()
}

pub fn t2_3(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let mut out = Vec::new();
    for &(i, s2) in &p.pairs {
        let a = p.ideal(i);
        for s1 in 0..p.mcs.len().min(T2_3_S1) {
            if s1 == s2 {
                continue;
            }
            let v1 = p.s_r(ctx, i, s1);
            let mut an = p.annotations(i, s2);
            an.insert("mcs1".into(), mcs_text(&p.mcs[s1]));
            let hyps = [
                ("s1_subset_s2", p.mcs[s1].is_subset(&p.mcs[s2])),
                ("a_s1_r", v1.is_holds()),
                ("disjoint", p.mcs[s2].is_disjoint_from(a)),
            ];
            out.push(ctx.case(an, &hyps, || {
                let v2 = p.s_r(ctx, i, s2);
                Ok(finding(v2.is_holds(), verdict_json(&p.ring, &v2)))
            })?);
        }
    }
    Ok(out)
}

pub fn t2_5(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let Some(loc) = p.localization(s) else { continue };
        let a = p.ideal(i);
        let pushed = ideal_pushforward(loc, a);
        let hyps = [
            ("s_in_reg", in_regulars(&p.mcs[s])),
            ("disjoint", p.mcs[s].is_disjoint_from(a)),
            ("loc_r_ideal", is_r_ideal(&pushed).is_holds()),
        ];
        out.push(ctx.case(p.annotations(i, s), &hyps, || {
            let v = p.s_r(ctx, i, s);
            Ok(finding(v.is_holds(), verdict_json(&p.ring, &v)))
        })?);
    }
    Ok(out)
}

pub fn t2_7(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let ring = &p.ring;
    let regulars = MulClosedSet::regulars(ring);
    let rs = ring.regulars();
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let set = &p.mcs[s];
        let hyps = [
            ("s_is_regulars", *set == regulars),
            ("proper", a.is_proper()),
            ("disjoint", set.is_disjoint_from(a)),
        ];
        out.push(ctx.case(p.annotations(i, s), &hyps, || {
            let cond_a = p.s_r(ctx, i, s).witness;
            let cond_b = scaled_intersection_condition(a, set, &rs);
            let cond_c = colon_condition(a, set, &rs);
            let cond_d = localization_condition(a, set)?;
            let flags = [cond_a, cond_b, cond_c, cond_d].map(|w| w.is_some());
            let lab = |w: Option<usize>| w.map(|x| label(ring, x));
            Ok(finding(
                flags.iter().all(|&f| f == flags[0]),
                json!({
                    "a": lab(cond_a),
                    "b": lab(cond_b),
                    "c": lab(cond_c),
                    "d": lab(cond_d),
                }),
            ))
        })?);
    }
    Ok(out)
}

pub fn p2_8(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let ring = &p.ring;
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let v = p.s_r(ctx, i, s);
        let hyps = [("a_s_r", v.is_holds()), ("s_in_reg", in_regulars(&p.mcs[s]))];
        out.push(ctx.case(p.annotations(i, s), &hyps, || {
            let w = v
                .witness
                .unwrap_or_else(|| p.mcs[s].members().last().expect("S contains 1"));
            let base = colon(a, &[w]);
            let bad = (1..=ring.size() as u64).find(|&n| colon(a, &[ring.pow(w, n)]) != base);
            Ok(finding(bad.is_none(), json!({ "s": label(ring, w), "n": bad })))
        })?);
    }
    Ok(out)
}

pub fn p2_10(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let reduced = p.ring.is_reduced();
    let check_reduced = !ctx.dropped("reduced");
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let sz0 = (reduced || !check_reduced)
            && is_s_z0_ideal_with(a, &p.mcs[s], ctx.opts(), check_reduced).is_holds();
        let hyps = [
            ("reduced", reduced),
            ("disjoint", p.mcs[s].is_disjoint_from(a)),
            ("s_z0", sz0),
        ];
        out.push(ctx.case(p.annotations(i, s), &hyps, || {
            let v = p.s_r(ctx, i, s);
            Ok(finding(v.is_holds(), verdict_json(&p.ring, &v)))
        })?);
    }
    Ok(out)
}

pub fn t2_11(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let a_s_r = p.s_r(ctx, i, s).is_holds();
        for l in p.lattice.min_primes_over(a)? {
            let li = p.pos(l);
            let mut an = p.annotations(i, s);
            an.insert("prime".into(), ideal_text(l));
            let hyps = [("a_s_r", a_s_r), ("l_disjoint", p.mcs[s].is_disjoint_from(l))];
            out.push(ctx.case(an, &hyps, || {
                let v = p.s_r(ctx, li, s);
                Ok(finding(v.is_holds(), verdict_json(&p.ring, &v)))
            })?);
        }
    }
    Ok(out)
}

pub fn t2_12(ctx: &Ctx, _: &Entry, p: &FinitePrep) -> CoreResult<Vec<CaseResult>> {
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let hyps = [
            ("prime", p.lattice.is_prime(a)),
            ("disjoint", p.mcs[s].is_disjoint_from(a)),
        ];
        out.push(ctx.case(p.annotations(i, s), &hyps, || {
            let v = p.s_r(ctx, i, s);
            let zd = in_zd(a);
            Ok(finding(
                v.is_holds() == zd,
                json!({ "s_r": verdict_json(&p.ring, &v), "in_zd": zd }),
            ))
        })?);
    }
    Ok(out)
}

pub fn c_zd(ctx: &Ctx, _: &Entry, p: &FinitePrep) -> CoreResult<Vec<CaseResult>> {
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let v = p.s_r(ctx, i, s);
        out.push(ctx.case(p.annotations(i, s), &[("a_s_r", v.is_holds())], || {
            let outside = a.members().find(|&x| !p.ring.is_zero_divisor(x));
            Ok(finding(
                outside.is_none(),
                json!({ "witness": verdict_json(&p.ring, &v), "non_zero_divisor": outside.map(|x| label(&p.ring, x)) }),
            ))
        })?);
    }
    Ok(out)
}

pub fn p_jac(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let jac = p.lattice.jacobson_radical();
    let maximals: Vec<MulClosedSet> = p
        .lattice
        .max_ideals()
        .into_iter()
        .map(MulClosedSet::complement)
        .collect::<CoreResult<_>>()?;
    let mut out = Vec::new();
    for &i in &p.ideals {
        let a = p.ideal(i);
        let hyps = [("in_jacobson", a.is_subset(&jac)), ("proper", a.is_proper())];
        out.push(ctx.case(ann(&[("ideal", ideal_text(a))]), &hyps, || {
            let r = is_r_ideal(a).is_holds();
            let failing = maximals
                .iter()
                .find(|m| !is_s_r_ideal_with(a, m, ctx.opts()).is_holds());
            Ok(finding(
                r == failing.is_none(),
                json!({ "r_ideal": r, "failing_complement": failing.map(mcs_text) }),
            ))
        })?);
    }
    Ok(out)
}

pub fn p_zero(ctx: &Ctx, _: &Entry, p: &FinitePrep) -> CoreResult<Vec<CaseResult>> {
    let zero = Ideal::zero(&p.ring);
    let z = p.pos(&zero);
    let mut out = Vec::new();
    for (s, set) in p.mcs.iter().enumerate() {
        let hyps = [("proper", zero.is_proper()), ("disjoint", set.is_disjoint_from(&zero))];
        out.push(ctx.case(ann(&[("mcs", mcs_text(set))]), &hyps, || {
            let v = p.s_r(ctx, z, s);
            Ok(finding(v.is_holds(), verdict_json(&p.ring, &v)))
        })?);
    }
    Ok(out)
}

pub fn p_colon(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let lat = &p.lattice;
    let n = lat.len();
    let mut colons = vec![Vec::new(); n];
    for &(i, _) in &p.pairs {
        if colons[i].is_empty() {
            colons[i] = (0..n).map(|k| p.pos(&colon_ideal(lat.get(i), lat.get(k)))).collect();
        }
    }
    let anns: Vec<usize> = (0..n)
        .map(|k| p.pos(&annihilator(&p.ring, &members(lat.get(k)))))
        .collect();
    let mut out = Vec::new();
    for &(i, s) in &p.pairs {
        let a = p.ideal(i);
        let a_s_r = p.s_r(ctx, i, s).is_holds();
        for k in 0..n {
            let kk = lat.get(k);
            let c = colons[i][k];
            let mut an = p.annotations(i, s);
            an.insert("k".into(), ideal_text(kk));
            an.insert("part".into(), "colon".into());
            let hyps = [
                ("a_s_r", a_s_r),
                ("k_not_in_a", !kk.is_subset(a)),
                ("disjoint", p.mcs[s].is_disjoint_from(lat.get(c))),
            ];
            out.push(ctx.case(an, &hyps, || {
                let v = p.s_r(ctx, c, s);
                Ok(finding(
                    v.is_holds(),
                    json!({ "colon": ideal_text(lat.get(c)), "verdict": verdict_json(&p.ring, &v) }),
                ))
            })?);
        }
    }
    for (s, set) in p.mcs.iter().enumerate() {
        for k in 0..n {
            let c = anns[k];
            let an = ann(&[
                ("mcs", mcs_text(set)),
                ("k", ideal_text(lat.get(k))),
                ("part", "annihilator".into()),
            ]);
            out.push(ctx.case(an, &[("disjoint", set.is_disjoint_from(lat.get(c)))], || {
                let v = p.s_r(ctx, c, s);
                Ok(finding(
                    v.is_holds(),
                    json!({ "annihilator": ideal_text(lat.get(c)), "verdict": verdict_json(&p.ring, &v) }),
                ))
            })?);
        }
    }
    Ok(out)
}

pub fn p_annsum(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let ring = &p.ring;
    let lat = &p.lattice;
    let n = lat.len();
    let principal: Vec<usize> = ring.elements().map(|t| p.pos(&Ideal::generate(ring, &[t]))).collect();
    let anns: Vec<Ideal> = (0..n).map(|k| annihilator(ring, &members(lat.get(k)))).collect();
    let mut out = Vec::new();
    for (s, set) in p.mcs.iter().enumerate() {
        for k1 in 0..n {
            for k2 in k1..n {
                let sum = p.pos(&lat.get(k1).sum(lat.get(k2)));
                let k = p.pos(&anns[k1].sum(&anns[k2]));
                let an = ann(&[
                    ("mcs", mcs_text(set)),
                    ("k1", ideal_text(lat.get(k1))),
                    ("k2", ideal_text(lat.get(k2))),
                ]);
                let hyps = [
                    ("sum_principal_in_s", set.members().any(|t| principal[t] == sum)),
                    ("disjoint", set.is_disjoint_from(lat.get(k))),
                ];
                out.push(ctx.case(an, &hyps, || {
                    let v = p.s_r(ctx, k, s);
                    Ok(finding(
                        v.is_holds(),
                        json!({ "ideal": ideal_text(lat.get(k)), "verdict": verdict_json(ring, &v) }),
                    ))
                })?);
            }
        }
    }
    Ok(out)
}

pub fn p_minidem(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let ring = &p.ring;
    let reduced = ring.is_reduced();
    let min_primes = p.lattice.min_primes();
    let idempotents = ring.idempotents();
    let mut out = Vec::new();
    for (s, set) in p.mcs.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for prime in &min_primes {
            for &e in &idempotents {
                for x in set.members() {
                    let a = prime.sum(&annihilator(ring, &[ring.mul(x, e)]));
                    let i = p.pos(&a);
                    if !seen.insert(i) {
                        continue;
                    }
                    let an = ann(&[
                        ("mcs", mcs_text(set)),
                        ("prime", ideal_text(prime)),
                        ("idempotent", ring.label(e).to_string()),
                        ("s", ring.label(x).to_string()),
                    ]);
                    let hyps = [("reduced", reduced), ("disjoint", set.is_disjoint_from(&a))];
                    out.push(ctx.case(an, &hyps, || {
                        let v = p.s_r(ctx, i, s);
                        Ok(finding(
                            v.is_holds(),
                            json!({ "ideal": ideal_text(&a), "verdict": verdict_json(ring, &v) }),
                        ))
                    })?);
                }
            }
        }
    }
    Ok(out)
}

pub fn p_sidem(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let ring = &p.ring;
    let mut out = Vec::new();
    for set in &p.mcs {
        let t = set.product_of_members();
        let s_idem = |g: usize| ring.mul(g, g) == ring.mul(t, g);
        let all: Vec<usize> = ring.elements().filter(|&g| s_idem(g)).collect();
        let mut gen_sets: Vec<Vec<usize>> = ring.elements().map(|g| vec![g]).collect();
        gen_sets.push(all);
        for gens in gen_sets {
            let a = Ideal::generate(ring, &gens);
            let an = ann(&[("mcs", mcs_text(set)), ("gens", ring.literal_list(&gens))]);
            let hyps = [
                ("gens_s_idempotent", gens.iter().all(|&g| s_idem(g))),
                ("disjoint", set.is_disjoint_from(&a)),
            ];
            out.push(ctx.case(an, &hyps, || {
                let v = s_idempotent_ideal_check(ring, set, &gens);
                let v = if v.is_not_applicable() {
                    is_s_r_ideal_with(&a, set, ctx.opts())
                } else {
                    v
                };
                Ok(finding(v.is_holds(), verdict_json(ring, &v)))
            })?);
        }
    }
    Ok(out)
}

pub fn p_suz(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let proper: Vec<usize> = (0..p.lattice.len()).filter(|&i| p.ideal(i).is_proper()).collect();
    let mut out = Vec::new();
    for (s, set) in p.mcs.iter().enumerate() {
        out.push(ctx.case(ann(&[("mcs", mcs_text(set))]), &[("s_finite", true)], || {
            let failing = proper
                .iter()
                .copied()
                .find(|&i| set.is_disjoint_from(p.ideal(i)) && !p.s_r(ctx, i, s).is_holds());
            let suz = is_s_uz_ring(&p.ring, set);
            Ok(finding(
                failing.is_none() == suz.is_holds(),
                json!({
                    "failing_ideal": failing.map(|i| ideal_text(p.ideal(i))),
                    "s_uz": verdict_json(&p.ring, &suz),
                }),
            ))
        })?);
    }
    Ok(out)
}

pub fn p_suzmax(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let maximals: Vec<usize> = p.lattice.max_ideals().into_iter().map(|m| p.pos(m)).collect();
    let primes: Vec<usize> = p.lattice.spec().into_iter().map(|q| p.pos(q)).collect();
    let mut out = Vec::new();
    for (s, set) in p.mcs.iter().enumerate() {
        let misses = maximals.iter().all(|&m| set.is_disjoint_from(p.ideal(m)));
        out.push(ctx.case(ann(&[("mcs", mcs_text(set))]), &[("s_misses_maximals", misses)], || {
            let cond_a = is_s_uz_ring(&p.ring, set).is_holds();
            let cond_b = primes
                .iter()
                .all(|&q| !set.is_disjoint_from(p.ideal(q)) || p.s_r(ctx, q, s).is_holds());
            let cond_c = maximals.iter().all(|&m| p.s_r(ctx, m, s).is_holds());
            Ok(finding(
                cond_a == cond_b && cond_b == cond_c,
                json!({ "s_uz": cond_a, "primes_s_r": cond_b, "maximals_s_r": cond_c }),
            ))
        })?);
    }
    Ok(out)
}

fn ann_case(ctx: &Ctx, name: String, h: &RingHom) -> CoreResult<CaseResult> {
    let hyps = [("isomorphism", h.is_isomorphism())];
    ctx.case(ann(&[("map", name)]), &hyps, || {
        let dom = h.domain();
        for w in dom.elements() {
            if !ann_pushforward_check(h, w)? {
                return Ok(finding(false, json!({ "w": label(dom, w) })));
            }
        }
        Ok(finding(true, json!({ "elements": dom.size() })))
    })
}

pub fn l3_1(ctx: &Ctx, _: &Entry, prep: &Prepared) -> CoreResult<Vec<CaseResult>> {
    let Some(p) = fin(prep) else { return Ok(vec![]) };
    let mut out = Vec::new();
    for (k, h) in automorphisms(&p.ring, AUTOMORPHISM_CAP).iter().enumerate() {
        out.push(ann_case(ctx, format!("automorphism {k}"), h)?);
    }
    let quotients = p
        .lattice
        .proper()
        .filter(|a| !a.is_zero())
        .take(PROJECTION_CAP)
        .cloned()
        .collect::<Vec<_>>();
    for a in quotients {
        let (_, h) = make_quotient(&p.ring, &a)?;
        out.push(ann_case(ctx, format!("projection mod ({})", ideal_text(&a)), &h)?);
    }
    Ok(out)
}
