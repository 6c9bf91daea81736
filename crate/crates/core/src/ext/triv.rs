//! Trivial extensions `R ∝ M`: pairs `(r, m)` with `(w,e)(z,f) = (wz, wf + ze)`.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::module::FiniteModule;
use crate::classify::{is_s_r_ideal, Verdict};
use crate::ideal::{Ideal, MulClosedSet};
use crate::ring::{same_ring, Construction, Elem, FiniteRing, Ring};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone)]
pub struct TrivExtRing {
    base: Ring,
    module: Arc<FiniteModule>,
    ring: Ring,
}

/// Which copy of `S` to lift into the extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LiftMode {
    /// `S ∝ 0 = {(s, 0)}`
    SZero,
    /// `S ∝ M = {(s, m)}`
    SFull,
}

pub fn make_trivial_extension(
    base: &Ring,
    module: &Arc<FiniteModule>,
    limits: &Limits,
) -> Result<TrivExtRing> {
    if !same_ring(base, module.ring()) {
        return Err(Error::TypeMismatch(format!(
            "module over {} used with {}",
            module.ring().recipe(),
            base.recipe()
        )));
    }
    let m = module.size();
    let n = base.size().saturating_mul(m);
    limits.check_size(n)?;
    let split = |x: Elem| (x / m, x % m);
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (w, e) = split(x);
        for y in 0..n {
            let (z, f) = split(y);
            add.push(base.add(w, z) * m + module.add(e, f));
            let cross = module.add(module.act(w, f), module.act(z, e));
            mul.push(base.mul(w, z) * m + cross);
        }
    }
    let labels = (0..n)
        .map(|x| {
            let (r, e) = split(x);
            format!("({},{})", base.literal(r), module.literal(e))
        })
        .collect();
    let ring = FiniteRing::from_tables(
        add,
        mul,
        base.one() * m,
        labels,
        Construction::TrivialExtension {
            base: base.clone(),
            module: module.clone(),
        },
    )?;
    Ok(TrivExtRing {
        base: base.clone(),
        module: module.clone(),
        ring: Arc::new(ring),
    })
}

impl TrivExtRing {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn pair(&self, r: Elem, m: Elem) -> Elem {
        r * self.module.size() + m
    }

    pub fn split(&self, x: Elem) -> (Elem, Elem) {
        (x / self.module.size(), x % self.module.size())
    }

    /// `A ∝ N = {(a, n)}`, an ideal exactly when `AM ⊆ N`.
    pub fn triv_ideal(&self, a: &Ideal, n: &FixedBitSet) -> Result<Ideal> {
        for x in a.members() {
            for m in self.module.elements() {
                if !n.contains(self.module.act(x, m)) {
                    return Err(Error::NotAnIdeal { a: x, m });
                }
            }
        }
        let members: Vec<Elem> = a
            .members()
            .flat_map(|x| n.ones().map(move |y| (x, y)))
            .map(|(x, y)| self.pair(x, y))
            .collect();
        Ideal::from_members(&self.ring, &members)
    }

    /// `A ∝ M`.
    pub fn triv_ideal_full(&self, a: &Ideal) -> Ideal {
        let mut all = FixedBitSet::with_capacity(self.module.size());
        all.insert_range(..);
        self.triv_ideal(a, &all).expect("AM ⊆ M always")
    }

    pub fn lift_mcs(&self, s: &MulClosedSet, mode: LiftMode) -> MulClosedSet {
        let members: Vec<Elem> = match mode {
            LiftMode::SZero => s.members().map(|x| self.pair(x, 0)).collect(),
            LiftMode::SFull => s
                .members()
                .flat_map(|x| self.module.elements().map(move |m| (x, m)))
                .map(|(x, m)| self.pair(x, m))
                .collect(),
        };
        MulClosedSet::from_members(&self.ring, &members)
            .expect("lifted multiplicative sets are closed")
    }
}

pub fn lift_mcs_triv(ext: &TrivExtRing, s: &MulClosedSet, mode: LiftMode) -> MulClosedSet {
    ext.lift_mcs(s, mode)
}

/// Hypothesis flags and the three statements for the idealization transfer.
#[derive(Debug, Clone, Serialize)]
pub struct TrivEquivalenceReport {
    pub disjoint: bool,
    pub torsion_free: bool,
    /// `⋃ Ann(a) ⊆ Ann(M)` over nonzero `a`; the reading used for gating.
    pub union_condition_nonzero: bool,
    /// The same union taken over every `a`, including `a = 0`.
    pub union_condition_literal: bool,
    pub hypotheses_met: bool,
    /// `A` is S-r, `A ∝ M` is `(S ∝ 0)`-r, `A ∝ M` is `(S ∝ M)`-r.
    pub statements: [Verdict; 3],
    pub pattern: String,
}

impl TrivEquivalenceReport {
    /// Under met hypotheses the three statements agree.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_met || self.pattern == "000" || self.pattern == "111"
    }
}

pub fn triv_equivalence_check(ext: &TrivExtRing, a: &Ideal, s: &MulClosedSet) -> TrivEquivalenceReport {
    let base = ext.base();
    let module = ext.module();
    let ann_m = module.annihilator();
    let union_over = |skip_zero: bool| {
        base.elements()
            .filter(|&x| !skip_zero || x != 0)
            .all(|x| base.ann_mask(x).is_subset(ann_m.mask()))
    };
    let disjoint = s.is_disjoint_from(a);
    let torsion_free = module.is_torsion_free();
    let union_condition_nonzero = union_over(true);
    let union_condition_literal = union_over(false);

    let lifted = ext.triv_ideal_full(a);
    let statements = [
        is_s_r_ideal(a, s),
        is_s_r_ideal(&lifted, &ext.lift_mcs(s, LiftMode::SZero)),
        is_s_r_ideal(&lifted, &ext.lift_mcs(s, LiftMode::SFull)),
    ];
    let pattern = statements
        .iter()
        .map(|v| if v.is_holds() { '1' } else { '0' })
        .collect();
    TrivEquivalenceReport {
        disjoint,
        torsion_free,
        union_condition_nonzero,
        union_condition_literal,
        hypotheses_met: disjoint && torsion_free && union_condition_nonzero,
        statements,
        pattern,
    }
}
