//! Finite commutative rings with identity, stored as full operation tables.
//!
//! Elements are indices `0..size`; index 0 is always the additive identity.
//! Every constructor validates the ring axioms over all element triples before
//! handing out a [`Ring`], so downstream code never re-checks them.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::dsl::Lit;
use crate::ext::FiniteModule;
use crate::hom::{HomSpec, RingHom};
use crate::ideal::Ideal;
use crate::{Error, Limits, Result};

/// Index of an element in its ring's element table.
pub type Elem = usize;

/// Shared handle to an immutable finite ring.
pub type Ring = Arc<FiniteRing>;

/// How a ring was built. Drives element literals, labels and the recipe string.
#[derive(Debug, Clone)]
pub enum Construction {
    Zn(u64),
    Product(Vec<Ring>),
    Quotient {
        base: Ring,
        gens: Vec<Elem>,
        /// base element -> coset index
        proj: Vec<Elem>,
        /// coset index -> smallest base representative
        reps: Vec<Elem>,
    },
    TrivialExtension {
        base: Ring,
        module: Arc<FiniteModule>,
    },
    Amalgamation {
        h1: Ring,
        h2: Ring,
        hom: HomSpec,
        j_gens: Vec<Elem>,
        carrier: Vec<(Elem, Elem)>,
    },
    Localization {
        base: Ring,
        s_gens: Vec<Elem>,
        /// absorbing idempotent of the base ring; the local identity
        idempotent: Elem,
        /// local index -> base element `e·a`
        carrier: Vec<Elem>,
    },
    Table(String),
}

pub struct FiniteRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inverse: Vec<Option<u32>>,
    regular: Vec<bool>,
    one: Elem,
    labels: Vec<String>,
    construction: Construction,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, {} elements)", self.recipe(), self.size)
    }
}

/// The three-way split of a ring's elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementPartition {
    pub units: Vec<Elem>,
    pub regulars: Vec<Elem>,
    pub zero_divisors: Vec<Elem>,
}

impl FiniteRing {
    /// Builds a ring from raw row-major tables, validating every axiom.
    pub fn from_tables(
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
        labels: Vec<String>,
        construction: Construction,
    ) -> Result<FiniteRing> {
        let n = labels.len();
        let bad = |msg: String| Err(Error::InvalidConstruction(msg));
        if n == 0 {
            return bad("a ring needs at least one element".into());
        }
        if add.len() != n * n || mul.len() != n * n {
            return bad(format!("operation tables must have {} entries", n * n));
        }
        if one >= n || add.iter().chain(mul.iter()).any(|&x| x >= n) {
            return bad("table entry out of range".into());
        }
        let add: Vec<u32> = add.into_iter().map(|x| x as u32).collect();
        let mul: Vec<u32> = mul.into_iter().map(|x| x as u32).collect();
        let a = |x: usize, y: usize| add[x * n + y] as usize;
        let m = |x: usize, y: usize| mul[x * n + y] as usize;

        for x in 0..n {
            if a(0, x) != x {
                return bad(format!("element 0 is not an additive identity ({x})"));
            }
            if m(one, x) != x {
                return bad(format!("element {one} is not a multiplicative identity ({x})"));
            }
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return bad(format!("addition not commutative at ({x}, {y})"));
                }
                if m(x, y) != m(y, x) {
                    return bad(format!("multiplication not commutative at ({x}, {y})"));
                }
            }
        }
        let mut neg = vec![0u32; n];
        for x in 0..n {
            match (0..n).find(|&y| a(x, y) == 0) {
                Some(y) => neg[x] = y as u32,
                None => return bad(format!("element {x} has no additive inverse")),
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy_add = a(x, y);
                let xy_mul = m(x, y);
                for z in 0..n {
                    if a(xy_add, z) != a(x, a(y, z)) {
                        return bad(format!("addition not associative at ({x}, {y}, {z})"));
                    }
                    if m(xy_mul, z) != m(x, m(y, z)) {
                        return bad(format!(
                            "multiplication not associative at ({x}, {y}, {z})"
                        ));
                    }
                    if m(x, a(y, z)) != a(xy_mul, m(x, z)) {
                        return bad(format!("distributivity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }

        let mut inverse = vec![None; n];
        let mut regular = vec![true; n];
        for x in 0..n {
            inverse[x] = (0..n).find(|&y| m(x, y) == one).map(|y| y as u32);
            regular[x] = (1..n).all(|y| m(x, y) != 0);
        }
        // Multiplication by a regular element is injective on a finite set,
        // hence bijective: regulars and units must coincide.
        if let Some(x) = (0..n).find(|&x| regular[x] != inverse[x].is_some()) {
            return Err(Error::ConstructionBug(format!(
                "element {x}: regular = {}, unit = {}",
                regular[x],
                inverse[x].is_some()
            )));
        }

        Ok(FiniteRing {
            size: n,
            add,
            mul,
            neg,
            inverse,
            regular,
            one,
            labels,
            construction,
        })
    }

    /// `Z_n` with elements `0..n`.
    pub fn zn(n: u64) -> Result<Ring> {
        if n == 0 {
            return Err(Error::InvalidConstruction("Z0 is not a finite ring".into()));
        }
        let size = usize::try_from(n)
            .map_err(|_| Error::InvalidConstruction(format!("Z{n} is too large")))?;
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                add.push((x + y) % size);
                mul.push((x * y) % size);
            }
        }
        let labels = (0..size).map(|x| x.to_string()).collect();
        let one = 1 % size;
        Self::from_tables(add, mul, one, labels, Construction::Zn(n)).map(Arc::new)
    }

    /// Componentwise product of two rings.
    pub fn product(r1: &Ring, r2: &Ring, limits: &Limits) -> Result<Ring> {
        Self::product_of(&[r1.clone(), r2.clone()], limits)
    }

    /// Componentwise product of any number of rings; elements are tuples.
    pub fn product_of(factors: &[Ring], limits: &Limits) -> Result<Ring> {
        if factors.is_empty() {
            return Err(Error::InvalidConstruction("empty product".into()));
        }
        let size = factors
            .iter()
            .try_fold(1usize, |acc, r| acc.checked_mul(r.size))
            .unwrap_or(usize::MAX);
        limits.check_size(size)?;

        let decode = |mut idx: usize| -> Vec<Elem> {
            let mut coords = vec![0; factors.len()];
            for (slot, r) in factors.iter().enumerate().rev() {
                coords[slot] = idx % r.size;
                idx /= r.size;
            }
            coords
        };
        let encode = |coords: &[Elem]| -> Elem {
            coords
                .iter()
                .zip(factors)
                .fold(0, |acc, (&c, r)| acc * r.size + c)
        };
        let tuples: Vec<Vec<Elem>> = (0..size).map(decode).collect();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        let mut buf = vec![0; factors.len()];
        for x in &tuples {
            for y in &tuples {
                for (slot, r) in factors.iter().enumerate() {
                    buf[slot] = r.add(x[slot], y[slot]);
                }
                add.push(encode(&buf));
                for (slot, r) in factors.iter().enumerate() {
                    buf[slot] = r.mul(x[slot], y[slot]);
                }
                mul.push(encode(&buf));
            }
        }
        let one_coords: Vec<Elem> = factors.iter().map(|r| r.one).collect();
        let labels = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t
                    .iter()
                    .zip(factors)
                    .map(|(&c, r)| r.label(c))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Self::from_tables(
            add,
            mul,
            encode(&one_coords),
            labels,
            Construction::Product(factors.to_vec()),
        )
        .map(Arc::new)
    }

    /// `R/I` as a coset ring, together with the canonical projection.
    pub fn quotient(ideal: &Ideal) -> Result<(Ring, RingHom)> {
        let base = ideal.ring().clone();
        let n = base.size;
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if proj[x] != usize::MAX {
                continue;
            }
            let class = reps.len();
            reps.push(x);
            for i in ideal.members() {
                proj[base.add(x, i)] = class;
            }
        }
        let q = reps.len();
        let mut add = Vec::with_capacity(q * q);
        let mut mul = Vec::with_capacity(q * q);
        for &x in &reps {
            for &y in &reps {
                add.push(proj[base.add(x, y)]);
                mul.push(proj[base.mul(x, y)]);
            }
        }
        let gens = ideal.generators().to_vec();
        let gen_text = gens
            .iter()
            .map(|&g| base.literal(g).to_string())
            .collect::<Vec<_>>()
            .join(",");
        let labels = reps
            .iter()
            .map(|&r| format!("{}+({})", base.literal(r), gen_text))
            .collect();
        let one = proj[base.one];
        let ring = Arc::new(Self::from_tables(
            add,
            mul,
            one,
            labels,
            Construction::Quotient {
                base: base.clone(),
                gens,
                proj: proj.clone(),
                reps,
            },
        )?);
        let hom = RingHom::new(base, ring.clone(), proj)?;
        Ok((ring, hom))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `k·a` for an integer `k`.
    pub fn scale(&self, a: Elem, k: i64) -> Elem {
        let mut base = if k < 0 { self.neg(a) } else { a };
        let mut k = k.unsigned_abs();
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// The image of the integer `k` in the ring.
    pub fn from_int(&self, k: i64) -> Elem {
        self.scale(self.one, k)
    }

    pub fn product_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems.into_iter().fold(self.one, |acc, x| self.mul(acc, x))
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse[a].is_some()
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.inverse[a].map(|x| x as usize)
    }

    /// `Ann(a) = 0`.
    pub fn is_regular(&self, a: Elem) -> bool {
        self.regular[a]
    }

    pub fn is_zero_divisor(&self, a: Elem) -> bool {
        !self.regular[a]
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.pow(a, self.size as u64) == 0
    }

    /// No nonzero nilpotents.
    pub fn is_reduced(&self) -> bool {
        (1..self.size).all(|a| !self.is_nilpotent(a))
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn regulars(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_regular(a)).collect()
    }

    pub fn zero_divisors(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_zero_divisor(a)).collect()
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn additive_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut acc = a;
        while acc != 0 {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// `Ann(a)` as a membership mask.
    pub fn ann_mask(&self, a: Elem) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.size);
        for y in self.elements() {
            if self.mul(y, a) == 0 {
                mask.insert(y);
            }
        }
        mask
    }

    /// `(size, #units, #idempotents, characteristic)`; isomorphic rings agree.
    pub fn fingerprint(&self) -> (usize, usize, usize, usize) {
        (
            self.size,
            self.units().len(),
            self.idempotents().len(),
            self.characteristic(),
        )
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// Ring-expression string that rebuilds an isomorphic ring.
    pub fn recipe(&self) -> String {
        match &self.construction {
            Construction::Zn(n) => format!("Z{n}"),
            Construction::Product(factors) => factors
                .iter()
                .map(|r| match r.construction {
                    Construction::Product(_) => format!("({})", r.recipe()),
                    _ => r.recipe(),
                })
                .collect::<Vec<_>>()
                .join(" x "),
            Construction::Quotient { base, gens, .. } => {
                let base_text = match base.construction {
                    Construction::Product(_) => format!("({})", base.recipe()),
                    _ => base.recipe(),
                };
                format!("{}/({})", base_text, base.literal_list(gens))
            }
            Construction::TrivialExtension { base, module } => {
                format!("triv({}, {})", base.recipe(), module.recipe())
            }
            Construction::Amalgamation {
                h1, h2, hom, j_gens, ..
            } => format!(
                "amalg({}, {}, {}, ({}))",
                h1.recipe(),
                h2.recipe(),
                hom,
                h2.literal_list(j_gens)
            ),
            Construction::Localization { base, s_gens, .. } => {
                format!("loc({}, S<{}>)", base.recipe(), base.literal_list(s_gens))
            }
            Construction::Table(name) => name.clone(),
        }
    }

    pub fn literal_list(&self, elems: &[Elem]) -> String {
        elems
            .iter()
            .map(|&e| self.literal(e).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// The element literal that [`FiniteRing::resolve`] maps back to `a`.
    pub fn literal(&self, a: Elem) -> Lit {
        match &self.construction {
            Construction::Zn(_) | Construction::Table(_) => Lit::Int(a as i64),
            Construction::Product(factors) => {
                let mut idx = a;
                let mut coords = vec![Lit::Int(0); factors.len()];
                for (slot, r) in factors.iter().enumerate().rev() {
                    coords[slot] = r.literal(idx % r.size);
                    idx /= r.size;
                }
                Lit::Tuple(coords)
            }
            Construction::Quotient { base, reps, .. } => base.literal(reps[a]),
            Construction::TrivialExtension { base, module } => {
                let m = module.size();
                Lit::Tuple(vec![base.literal(a / m), module.literal(a % m)])
            }
            Construction::Amalgamation { h1, h2, carrier, .. } => {
                let (w, v) = carrier[a];
                Lit::Tuple(vec![h1.literal(w), h2.literal(v)])
            }
            Construction::Localization { base, carrier, .. } => base.literal(carrier[a]),
        }
    }

    /// Maps an element literal to an element. Integers denote `k·1`.
    pub fn resolve(&self, lit: &Lit) -> Result<Elem> {
        let items = match lit {
            Lit::Int(k) => return Ok(self.from_int(*k)),
            Lit::Tuple(items) => items,
        };
        let mismatch = || {
            Error::TypeMismatch(format!("literal {lit} is not an element of {}", self.recipe()))
        };
        match &self.construction {
            Construction::Zn(_) | Construction::Table(_) => Err(mismatch()),
            Construction::Product(factors) => {
                if items.len() != factors.len() {
                    return Err(mismatch());
                }
                let mut idx = 0;
                for (item, r) in items.iter().zip(factors) {
                    idx = idx * r.size + r.resolve(item)?;
                }
                Ok(idx)
            }
            Construction::Quotient { base, proj, .. } => Ok(proj[base.resolve(lit)?]),
            Construction::TrivialExtension { base, module } => {
                if items.len() != 2 {
                    return Err(mismatch());
                }
                let r = base.resolve(&items[0])?;
                let m = module.resolve(&items[1])?;
                Ok(r * module.size() + m)
            }
            Construction::Amalgamation { h1, h2, carrier, .. } => {
                if items.len() != 2 {
                    return Err(mismatch());
                }
                let pair = (h1.resolve(&items[0])?, h2.resolve(&items[1])?);
                carrier.binary_search(&pair).map_err(|_| mismatch())
            }
            Construction::Localization {
                base,
                carrier,
                idempotent,
                ..
            } => {
                let x = base.resolve(lit)?;
                carrier
                    .binary_search(&base.mul(*idempotent, x))
                    .map_err(|_| mismatch())
            }
        }
    }

    pub(crate) fn same_tables(&self, other: &FiniteRing) -> bool {
        self.size == other.size && self.add == other.add && self.mul == other.mul && self.one == other.one
    }
}

/// Identity of rings for type checks: same allocation or identical tables.
pub fn same_ring(a: &FiniteRing, b: &FiniteRing) -> bool {
    std::ptr::eq(a, b) || a.same_tables(b)
}

pub fn make_zn(n: u64) -> Result<Ring> {
    FiniteRing::zn(n)
}

pub fn make_product(r1: &Ring, r2: &Ring, limits: &Limits) -> Result<Ring> {
    FiniteRing::product(r1, r2, limits)
}

pub fn make_quotient(ring: &Ring, ideal: &Ideal) -> Result<(Ring, RingHom)> {
    if !same_ring(ring, ideal.ring()) {
        return Err(Error::TypeMismatch(format!(
            "ideal of {} used with {}",
            ideal.ring().recipe(),
            ring.recipe()
        )));
    }
    FiniteRing::quotient(ideal)
}

pub fn element_partition(ring: &FiniteRing) -> ElementPartition {
    ElementPartition {
        units: ring.units(),
        regulars: ring.regulars(),
        zero_divisors: ring.zero_divisors(),
    }
}

/// Smallest `k ≥ 1` with `t^k = t^{2k}`, and the idempotent `e = t^k`.
pub fn idempotent_power(ring: &FiniteRing, t: Elem) -> (Elem, u64) {
    let mut k = 1u64;
    let mut tk = t;
    loop {
        if ring.mul(tk, tk) == tk {
            return (tk, k);
        }
        tk = ring.mul(tk, t);
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_basics() {
        let z1 = make_zn(1).unwrap();
        assert_eq!(z1.size(), 1);
        assert_eq!(z1.zero(), z1.one());

        let z12 = make_zn(12).unwrap();
        assert_eq!(z12.mul(5, 5), 1);
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.mul(2, 3), 0);

        assert!(matches!(make_zn(0), Err(Error::InvalidConstruction(_))));
    }

    #[test]
    fn products() {
        let limits = Limits::default();
        let z2 = make_zn(2).unwrap();
        let v4 = make_product(&z2, &z2, &limits).unwrap();
        assert_eq!(v4.size(), 4);
        let e1 = v4.resolve(&Lit::Tuple(vec![Lit::Int(1), Lit::Int(0)])).unwrap();
        let e2 = v4.resolve(&Lit::Tuple(vec![Lit::Int(0), Lit::Int(1)])).unwrap();
        assert_eq!(v4.mul(e1, e2), 0);
        assert_eq!(v4.label(e1), "(1,0)");
        assert_eq!(v4.recipe(), "Z2 x Z2");

        let r = make_product(&make_zn(5).unwrap(), &make_zn(4).unwrap(), &limits).unwrap();
        assert_eq!(r.size(), 20);
        assert_eq!(r.units().len(), 8);

        let small = Limits { size: 10, ..Limits::default() };
        assert!(matches!(
            make_product(&make_zn(5).unwrap(), &make_zn(4).unwrap(), &small),
            Err(Error::SizeLimit { requested: 20, limit: 10 })
        ));
    }

    #[test]
    fn partition_of_z12_and_z6() {
        let z12 = make_zn(12).unwrap();
        let p = element_partition(&z12);
        assert_eq!(p.units, vec![1, 5, 7, 11]);
        assert_eq!(p.regulars, p.units);
        assert_eq!(p.zero_divisors, vec![0, 2, 3, 4, 6, 8, 9, 10]);

        let z6 = make_zn(6).unwrap();
        assert_eq!(element_partition(&z6).zero_divisors, vec![0, 2, 3, 4]);
    }

    #[test]
    fn idempotent_powers() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(idempotent_power(&z6, 1), (1, 1));
        assert_eq!(idempotent_power(&z6, 3), (3, 1));
        let z12 = make_zn(12).unwrap();
        assert_eq!(idempotent_power(&z12, 2), (4, 2));
    }

    #[test]
    fn rejects_broken_tables() {
        // "ring" on {0,1} where 1+1 = 1: no additive inverse for 1
        let err = FiniteRing::from_tables(
            vec![0, 1, 1, 1],
            vec![0, 0, 0, 1],
            1,
            vec!["0".into(), "1".into()],
            Construction::Table("broken".into()),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidConstruction(_)));
    }

    #[test]
    fn characteristic_and_reducedness() {
        let z12 = make_zn(12).unwrap();
        assert_eq!(z12.characteristic(), 12);
        assert!(!z12.is_reduced());
        assert!(make_zn(30).unwrap().is_reduced());
        assert_eq!(z12.from_int(-1), 11);
    }
}
