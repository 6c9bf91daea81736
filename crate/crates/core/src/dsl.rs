//! The ring-expression language.
//!
//! ```text
//! ring    := factor ('x' factor)*
//! factor  := atom ('/' '(' lits ')')*
//! atom    := 'Z' | 'Z'<n> | '(' ring ')'
//!          | 'triv' '(' ring ',' module ')'
//!          | 'amalg' '(' ring ',' ring ',' ('id' | 'proj') ',' '(' lits ')' ')'
//!          | 'loc' '(' ring ',' 'S<' lits '>' ')'
//! module  := 'free' '(' n ')' | 'quot' '(' lits ')'
//! lit     := ['-'] n | '(' lit (',' lit)* ')'
//! ```
//!
//! Whitespace is insignificant. An integer literal `k` denotes `k·1` in any
//! ring; tuples address product, trivial-extension and amalgamation elements.
//! Bare `Z` (the integers) parses but only the closed-form layer in
//! [`crate::arith`] can evaluate it.

use std::fmt;
use std::sync::Arc;

use crate::ext::{self, FiniteModule};
use crate::hom::HomSpec;
use crate::ideal::{Ideal, MulClosedSet};
use crate::localize::localize;
use crate::ring::{FiniteRing, Ring};
use crate::{Error, Limits, Result};

/// An element literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Lit {
    Int(i64),
    Tuple(Vec<Lit>),
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lit::Int(k) => write!(f, "{k}"),
            Lit::Tuple(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleExpr {
    Free(usize),
    Quot(Vec<Lit>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    /// The integers; not a finite ring.
    Integers,
    Zn(u64),
    Product(Vec<RingExpr>),
    Quotient(Box<RingExpr>, Vec<Lit>),
    Triv(Box<RingExpr>, ModuleExpr),
    Amalg(Box<RingExpr>, Box<RingExpr>, HomSpec, Vec<Lit>),
    Loc(Box<RingExpr>, Vec<Lit>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Word(String),
    /// `Z` immediately followed by digits
    Zn(u64),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse().map_err(|_| Error::Parse {
                pos: start,
                msg: format!("number {digits} out of range"),
            })?;
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            if c == 'Z' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[dstart..i].iter().collect();
                let n = digits.parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("modulus {digits} out of range"),
                })?;
                out.push((start, Tok::Zn(n)));
                continue;
            }
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Word(chars[start..i].iter().collect())));
        } else if "(),/<>-".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Self {
            toks: tokenize(text)?,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Word(x)) if x == w) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            self.err("trailing input")
        } else {
            Ok(())
        }
    }

    fn ring(&mut self) -> Result<RingExpr> {
        let mut factors = vec![self.factor()?];
        while self.eat_word("x") {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            RingExpr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<RingExpr> {
        let mut expr = self.atom()?;
        while self.eat_sym('/') {
            self.expect_sym('(')?;
            let gens = self.lits_until(')')?;
            expr = RingExpr::Quotient(Box::new(expr), gens);
        }
        Ok(expr)
    }

    fn atom(&mut self) -> Result<RingExpr> {
        match self.next() {
            Some(Tok::Zn(n)) => Ok(RingExpr::Zn(n)),
            Some(Tok::Word(w)) if w == "Z" => Ok(RingExpr::Integers),
            Some(Tok::Sym('(')) => {
                let inner = self.ring()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Some(Tok::Word(w)) if w == "triv" => {
                self.expect_sym('(')?;
                let base = self.ring()?;
                self.expect_sym(',')?;
                let module = if self.eat_word("free") {
                    self.expect_sym('(')?;
                    let k = match self.next() {
                        Some(Tok::Num(k)) => k as usize,
                        _ => {
                            self.pos -= 1;
                            return self.err("expected a rank");
                        }
                    };
                    self.expect_sym(')')?;
                    ModuleExpr::Free(k)
                } else if self.eat_word("quot") {
                    self.expect_sym('(')?;
                    ModuleExpr::Quot(self.lits_until(')')?)
                } else {
                    return self.err("expected free(k) or quot(gens)");
                };
                self.expect_sym(')')?;
                Ok(RingExpr::Triv(Box::new(base), module))
            }
            Some(Tok::Word(w)) if w == "amalg" => {
                self.expect_sym('(')?;
                let h1 = self.ring()?;
                self.expect_sym(',')?;
                let h2 = self.ring()?;
                self.expect_sym(',')?;
                let hom = if self.eat_word("id") {
                    HomSpec::Identity
                } else if self.eat_word("proj") {
                    HomSpec::Projection
                } else {
                    return self.err("expected id or proj");
                };
                self.expect_sym(',')?;
                self.expect_sym('(')?;
                let gens = self.lits_until(')')?;
                self.expect_sym(')')?;
                Ok(RingExpr::Amalg(Box::new(h1), Box::new(h2), hom, gens))
            }
            Some(Tok::Word(w)) if w == "loc" => {
                self.expect_sym('(')?;
                let base = self.ring()?;
                self.expect_sym(',')?;
                let gens = self.mcs_literal()?;
                self.expect_sym(')')?;
                Ok(RingExpr::Loc(Box::new(base), gens))
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                self.err("expected a ring expression")
            }
        }
    }

    fn mcs_literal(&mut self) -> Result<Vec<Lit>> {
        if !self.eat_word("S") {
            return self.err("expected S<...>");
        }
        self.expect_sym('<')?;
        self.lits_until('>')
    }

    /// Comma-separated literals terminated by `close` (consumed).
    fn lits_until(&mut self, close: char) -> Result<Vec<Lit>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(self.lit()?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            self.expect_sym(',')?;
        }
    }

    fn lit(&mut self) -> Result<Lit> {
        let negative = self.eat_sym('-');
        match self.next() {
            Some(Tok::Num(k)) => {
                let k = i64::try_from(k).or_else(|_| self.err("literal out of range"))?;
                Ok(Lit::Int(if negative { -k } else { k }))
            }
            Some(Tok::Sym('(')) if !negative => {
                let items = self.lits_until(')')?;
                if items.is_empty() {
                    return self.err("empty tuple");
                }
                Ok(Lit::Tuple(items))
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                self.err("expected an element literal")
            }
        }
    }
}

pub fn parse_ring(text: &str) -> Result<RingExpr> {
    let mut p = Parser::new(text)?;
    let expr = p.ring()?;
    p.finish()?;
    Ok(expr)
}

/// A bare comma-separated literal list such as `4,6` or `(1,0),(0,1)`.
pub fn parse_lits(text: &str) -> Result<Vec<Lit>> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    if p.peek().is_none() {
        return Ok(out);
    }
    loop {
        out.push(p.lit()?);
        if p.peek().is_none() {
            return Ok(out);
        }
        p.expect_sym(',')?;
    }
}

/// An ideal literal `(g1,...)` or a bare list `g1,...`.
pub fn parse_ideal_literal(text: &str) -> Result<Vec<Lit>> {
    let trimmed = text.trim();
    if let Some(inner) = trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        // `(g1,g2)` is a generator list only when the parentheses wrap the whole text
        if balanced(inner) {
            return parse_lits(inner);
        }
    }
    parse_lits(trimmed)
}

/// A multiplicative-set literal `S<g1,...>` or a bare list `g1,...`.
pub fn parse_mcs_literal(text: &str) -> Result<Vec<Lit>> {
    let mut p = Parser::new(text)?;
    if matches!(p.peek(), Some(Tok::Word(w)) if w == "S") {
        let lits = p.mcs_literal()?;
        p.finish()?;
        return Ok(lits);
    }
    parse_lits(text)
}

fn balanced(text: &str) -> bool {
    let mut depth = 0i32;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Builds a finite ring from an expression.
pub fn build(expr: &RingExpr, limits: &Limits) -> Result<Ring> {
    match expr {
        RingExpr::Integers => Err(Error::TypeMismatch(
            "Z is infinite; use the arithmetic layer".into(),
        )),
        RingExpr::Zn(n) => {
            limits.check_size(usize::try_from(*n).unwrap_or(usize::MAX))?;
            FiniteRing::zn(*n)
        }
        RingExpr::Product(factors) => {
            let rings = factors
                .iter()
                .map(|f| build(f, limits))
                .collect::<Result<Vec<_>>>()?;
            FiniteRing::product_of(&rings, limits)
        }
        RingExpr::Quotient(base, gens) => {
            let base = build(base, limits)?;
            let ideal = Ideal::generate(&base, &resolve_all(&base, gens)?);
            Ok(FiniteRing::quotient(&ideal)?.0)
        }
        RingExpr::Triv(base, module) => {
            let base = build(base, limits)?;
            let module = build_module(&base, module, limits)?;
            Ok(ext::make_trivial_extension(&base, &module, limits)?.ring().clone())
        }
        RingExpr::Amalg(h1, h2, hom, gens) => {
            let h1 = build(h1, limits)?;
            let h2 = build(h2, limits)?;
            let f = hom.realize(&h1, &h2)?;
            let j = Ideal::generate(&h2, &resolve_all(&h2, gens)?);
            Ok(ext::make_amalgamation(&f, &j, *hom, limits)?.ring().clone())
        }
        RingExpr::Loc(base, gens) => {
            let base = build(base, limits)?;
            let s = MulClosedSet::generate(&base, &resolve_all(&base, gens)?);
            Ok(localize(&s)?.localized)
        }
    }
}

pub fn build_module(base: &Ring, module: &ModuleExpr, limits: &Limits) -> Result<Arc<FiniteModule>> {
    match module {
        ModuleExpr::Free(k) => ext::make_module_free(base, *k, limits),
        ModuleExpr::Quot(gens) => {
            let j = Ideal::generate(base, &resolve_all(base, gens)?);
            ext::make_module_quotient(&j)
        }
    }
}

/// Parses and builds a finite ring.
pub fn build_ring(text: &str, limits: &Limits) -> Result<Ring> {
    build(&parse_ring(text)?, limits)
}

pub fn resolve_all(ring: &FiniteRing, lits: &[Lit]) -> Result<Vec<usize>> {
    lits.iter().map(|l| ring.resolve(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::find_isomorphism;

    #[test]
    fn parses_all_forms() {
        let e = parse_ring(" Z2 x Z3 / ( 2 ) ").unwrap();
        assert_eq!(
            e,
            RingExpr::Product(vec![
                RingExpr::Zn(2),
                RingExpr::Quotient(Box::new(RingExpr::Zn(3)), vec![Lit::Int(2)])
            ])
        );
        assert!(parse_ring("triv(Z4, quot(2))").is_ok());
        assert!(parse_ring("amalg(Z2 x Z2, Z2 x Z2, id, ((1,0)))").is_ok());
        assert!(parse_ring("loc(Z12, S<2>)").is_ok());
        assert_eq!(parse_ring("Z x Z").unwrap(), RingExpr::Product(vec![RingExpr::Integers, RingExpr::Integers]));
        assert!(matches!(parse_ring("Z2 x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ring("Q3"), Err(Error::Parse { .. })));
    }

    #[test]
    fn literal_lists() {
        assert_eq!(parse_ideal_literal("(4,6)").unwrap(), vec![Lit::Int(4), Lit::Int(6)]);
        assert_eq!(parse_ideal_literal("4, 6").unwrap(), vec![Lit::Int(4), Lit::Int(6)]);
        assert_eq!(
            parse_ideal_literal("(1,0),(0,1)").unwrap(),
            vec![
                Lit::Tuple(vec![Lit::Int(1), Lit::Int(0)]),
                Lit::Tuple(vec![Lit::Int(0), Lit::Int(1)])
            ]
        );
        assert_eq!(parse_mcs_literal("S<5>").unwrap(), vec![Lit::Int(5)]);
        assert_eq!(parse_mcs_literal("1,2").unwrap(), vec![Lit::Int(1), Lit::Int(2)]);
        assert_eq!(parse_lits("-1").unwrap(), vec![Lit::Int(-1)]);
    }

    #[test]
    fn recipes_round_trip() {
        let limits = Limits::default();
        for text in [
            "Z12",
            "Z3 x Z4",
            "Z2 x Z2 x Z3",
            "(Z2 x Z2) x Z3",
            "Z12/(4)",
            "(Z2 x Z4)/((0,2))",
            "triv(Z2, free(2))",
            "triv(Z4, quot(2))",
            "amalg(Z4, Z4, id, (2))",
            "amalg(Z8, Z4, proj, (2))",
            "loc(Z12, S<2>)",
        ] {
            let ring = build_ring(text, &limits).unwrap();
            let again = build_ring(&ring.recipe(), &limits).unwrap();
            assert!(
                find_isomorphism(&ring, &again).is_some(),
                "{text} -> {}",
                ring.recipe()
            );
            for e in ring.elements() {
                assert_eq!(ring.resolve(&ring.literal(e)).unwrap(), e, "{text} element {e}");
            }
        }
    }

    #[test]
    fn integers_are_not_finite() {
        assert!(matches!(
            build_ring("Z x Z", &Limits::default()),
            Err(Error::TypeMismatch(_))
        ));
    }
}
