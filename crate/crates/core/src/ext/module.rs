//! Finite modules over a finite ring: free modules `Rᵏ` and cyclic quotients `R/J`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::dsl::Lit;
use crate::ideal::Ideal;
use crate::ring::{Elem, Ring};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone)]
enum ModuleKind {
    Free(usize),
    Quotient {
        gens: Vec<Elem>,
        /// ring element -> coset index
        proj: Vec<Elem>,
        /// coset index -> smallest representative
        reps: Vec<Elem>,
    },
}

/// A finite module with explicit addition and scalar action tables.
/// Element 0 is the zero vector.
pub struct FiniteModule {
    ring: Ring,
    size: usize,
    add: Vec<u32>,
    act: Vec<u32>,
    kind: ModuleKind,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteModule({} over {})", self.recipe(), self.ring.recipe())
    }
}

impl FiniteModule {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn add(&self, m: Elem, n: Elem) -> Elem {
        self.add[m * self.size + n] as Elem
    }

    /// Scalar action `r·m`.
    pub fn act(&self, r: Elem, m: Elem) -> Elem {
        self.act[r * self.size + m] as Elem
    }

    pub fn neg(&self, m: Elem) -> Elem {
        self.act(self.ring.neg(self.ring.one()), m)
    }

    /// DSL text: `free(k)` or `quot(gens)`.
    pub fn recipe(&self) -> String {
        match &self.kind {
            ModuleKind::Free(k) => format!("free({k})"),
            ModuleKind::Quotient { gens, .. } => format!("quot({})", self.ring.literal_list(gens)),
        }
    }

    pub fn literal(&self, m: Elem) -> Lit {
        match &self.kind {
            ModuleKind::Free(1) => self.ring.literal(m),
            ModuleKind::Free(k) => {
                let n = self.ring.size();
                let mut idx = m;
                let mut coords = vec![Lit::Int(0); *k];
                for slot in (0..*k).rev() {
                    coords[slot] = self.ring.literal(idx % n);
                    idx /= n;
                }
                Lit::Tuple(coords)
            }
            ModuleKind::Quotient { reps, .. } => self.ring.literal(reps[m]),
        }
    }

    pub fn label(&self, m: Elem) -> String {
        self.literal(m).to_string()
    }

    pub fn resolve(&self, lit: &Lit) -> Result<Elem> {
        match &self.kind {
            ModuleKind::Free(1) => self.ring.resolve(lit),
            ModuleKind::Free(k) => match lit {
                Lit::Int(0) => Ok(0),
                Lit::Tuple(items) if items.len() == *k => {
                    let n = self.ring.size();
                    let mut idx = 0;
                    for item in items {
                        idx = idx * n + self.ring.resolve(item)?;
                    }
                    Ok(idx)
                }
                _ => Err(Error::TypeMismatch(format!(
                    "literal {lit} is not an element of {}",
                    self.recipe()
                ))),
            },
            ModuleKind::Quotient { proj, .. } => Ok(proj[self.ring.resolve(lit)?]),
        }
    }

    /// Exhaustive check of the abelian group and module axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConstruction(format!("{}: {msg}", self.recipe())));
        let r = &self.ring;
        for m in self.elements() {
            if self.add(0, m) != m || self.act(r.one(), m) != m {
                return bad("identity law");
            }
            if self.add(m, self.neg(m)) != 0 {
                return bad("inverse law");
            }
            for n in self.elements() {
                if self.add(m, n) != self.add(n, m) {
                    return bad("commutativity");
                }
                for p in self.elements() {
                    if self.add(self.add(m, n), p) != self.add(m, self.add(n, p)) {
                        return bad("associativity");
                    }
                }
                for a in r.elements() {
                    if self.act(a, self.add(m, n)) != self.add(self.act(a, m), self.act(a, n)) {
                        return bad("distributivity over module addition");
                    }
                }
            }
            for a in r.elements() {
                for b in r.elements() {
                    if self.act(r.add(a, b), m) != self.add(self.act(a, m), self.act(b, m)) {
                        return bad("distributivity over ring addition");
                    }
                    if self.act(r.mul(a, b), m) != self.act(a, self.act(b, m)) {
                        return bad("compatibility");
                    }
                }
            }
        }
        Ok(())
    }

    /// `rm = 0` implies `r = 0` or `m = 0`.
    pub fn is_torsion_free(&self) -> bool {
        self.ring
            .elements()
            .skip(1)
            .all(|r| self.elements().skip(1).all(|m| self.act(r, m) != 0))
    }

    /// `{r : rM = 0}`.
    pub fn annihilator(&self) -> Ideal {
        let members: Vec<Elem> = self
            .ring
            .elements()
            .filter(|&r| self.elements().all(|m| self.act(r, m) == 0))
            .collect();
        Ideal::from_members(&self.ring, &members).expect("a module annihilator is an ideal")
    }

    fn cyclic(&self, m: Elem) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.size);
        for r in self.ring.elements() {
            mask.insert(self.act(r, m));
        }
        mask
    }

    fn sum(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.size);
        for x in a.ones() {
            for y in b.ones() {
                mask.insert(self.add(x, y));
            }
        }
        mask
    }

    /// Submodule generated by `gens`, as a membership mask.
    pub fn submodule(&self, gens: &[Elem]) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.size);
        mask.insert(0);
        for &g in gens {
            if !mask.contains(g) {
                mask = self.sum(&mask, &self.cyclic(g));
            }
        }
        mask
    }

    /// Every submodule, sorted by (cardinality, members).
    pub fn all_submodules(&self) -> Vec<FixedBitSet> {
        let mut cyclics: Vec<FixedBitSet> = Vec::new();
        for m in self.elements() {
            let c = self.cyclic(m);
            if !cyclics.contains(&c) {
                cyclics.push(c);
            }
        }
        let mut found = cyclics.clone();
        let mut queue: VecDeque<FixedBitSet> = cyclics.iter().cloned().collect();
        while let Some(n) = queue.pop_front() {
            for c in &cyclics {
                if c.is_subset(&n) {
                    continue;
                }
                let s = self.sum(&n, c);
                if !found.contains(&s) {
                    found.push(s.clone());
                    queue.push_back(s);
                }
            }
        }
        found.sort_by(|a, b| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| a.ones().cmp(b.ones()))
        });
        found
    }
}

/// `Rᵏ` with componentwise action.
pub fn make_module_free(ring: &Ring, k: usize, limits: &Limits) -> Result<Arc<FiniteModule>> {
    let n = ring.size();
    let size = u32::try_from(k)
        .ok()
        .and_then(|k| n.checked_pow(k))
        .unwrap_or(usize::MAX);
    limits.check_size(size)?;
    let digits = |mut x: Elem| {
        let mut out = vec![0; k];
        for slot in (0..k).rev() {
            out[slot] = x % n;
            x /= n;
        }
        out
    };
    let pack = |d: &[Elem]| d.iter().fold(0, |acc, &x| acc * n + x);
    let coords: Vec<Vec<Elem>> = (0..size).map(digits).collect();
    let mut add = Vec::with_capacity(size * size);
    for x in &coords {
        for y in &coords {
            let s: Vec<Elem> = x.iter().zip(y).map(|(&a, &b)| ring.add(a, b)).collect();
            add.push(pack(&s) as u32);
        }
    }
    let mut act = Vec::with_capacity(n * size);
    for r in ring.elements() {
        for y in &coords {
            let s: Vec<Elem> = y.iter().map(|&b| ring.mul(r, b)).collect();
            act.push(pack(&s) as u32);
        }
    }
    Ok(Arc::new(FiniteModule {
        ring: ring.clone(),
        size,
        add,
        act,
        kind: ModuleKind::Free(k),
    }))
}

/// `R/J` with the induced action.
pub fn make_module_quotient(j: &Ideal) -> Result<Arc<FiniteModule>> {
    let ring = j.ring();
    let mut proj = vec![usize::MAX; ring.size()];
    let mut reps = Vec::new();
    for x in ring.elements() {
        if proj[x] == usize::MAX {
            for i in j.members() {
                proj[ring.add(x, i)] = reps.len();
            }
            reps.push(x);
        }
    }
    let size = reps.len();
    let mut add = Vec::with_capacity(size * size);
    for &x in &reps {
        for &y in &reps {
            add.push(proj[ring.add(x, y)] as u32);
        }
    }
    let mut act = Vec::with_capacity(ring.size() * size);
    for r in ring.elements() {
        for &y in &reps {
            act.push(proj[ring.mul(r, y)] as u32);
        }
    }
    Ok(Arc::new(FiniteModule {
        ring: ring.clone(),
        size,
        add,
        act,
        kind: ModuleKind::Quotient {
            gens: j.generators().to_vec(),
            proj,
            reps,
        },
    }))
}

pub fn module_is_torsion_free(m: &FiniteModule) -> bool {
    m.is_torsion_free()
}

pub fn module_ann(m: &FiniteModule) -> Ideal {
    m.annihilator()
}
