//! Corpus entries: finite rings, integer products, polynomial bases and the
//! integer amalgamation family, each with optional ideal and m.c.s. annotations.

use std::fmt::Write as _;

use ringlab_core::arith::{ArithIdeal, ArithMCS, ArithRing};
use ringlab_core::dsl::{build_ring, parse_lits, parse_mcs_literal, resolve_all};
use ringlab_core::ideal::Ideal;
use ringlab_core::{Elem, Limits, Ring};

use crate::error::{Result, VerifierError};

#[derive(Debug, Clone)]
pub enum EntryKind {
    Finite {
        ring: Ring,
        ideal: Option<Vec<Elem>>,
        mcs: Option<Vec<Elem>>,
    },
    Arith {
        ring: ArithRing,
        ideal: Option<ArithIdeal>,
        mcs: Option<ArithMCS>,
    },
    /// `R[x]` over a finite base.
    Poly {
        base: Ring,
        ideal: Option<Vec<Elem>>,
        mcs: Option<Vec<Elem>>,
    },
    /// `Z ⋈ J` along the canonical map `Z → Z_n`.
    ZAmalg { zn: Ring, j: Ideal, mcs: Option<ArithMCS> },
}

#[derive(Debug, Clone)]
pub struct Entry {
    /// The corpus line this entry came from.
    pub text: String,
    pub recipe: String,
    pub kind: EntryKind,
}

impl Entry {
    pub fn scope(&self) -> Scope {
        match self.kind {
            EntryKind::Finite { .. } => Scope::Finite,
            EntryKind::Arith { .. } => Scope::Arith,
            EntryKind::Poly { .. } => Scope::Poly,
            EntryKind::ZAmalg { .. } => Scope::Extension,
        }
    }
}

/// Ring classes a theorem can apply to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Finite,
    Arith,
    Poly,
    Extension,
}

#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub entries: Vec<Entry>,
    pub limits: Limits,
    /// Degree bound for polynomial searches.
    pub degree: usize,
}

const DEFAULT_DEGREE: usize = 3;

/// Corpus text for [`default_corpus`].
pub fn default_corpus_text() -> String {
    let mut out = String::from("# finite cyclic rings\n");
    for n in 1..=30 {
        writeln!(out, "Z{n}").unwrap();
    }
    out.push_str("# products\n");
    for a in 2..=8u32 {
        for b in a..=64 / a {
            writeln!(out, "Z{a} x Z{b}").unwrap();
        }
    }
    out.push_str("# quotients\n");
    for (n, d) in [(12, 4), (12, 6), (18, 6), (18, 9), (24, 8), (30, 6), (30, 10), (8, 4)] {
        writeln!(out, "Z{n}/({d})").unwrap();
    }
    out.push_str("# extensions\n");
    for p in [2, 3] {
        for k in 1..=2 {
            writeln!(out, "triv(Z{p}, free({k}))").unwrap();
        }
    }
    out.push_str("triv(Z4, quot(2))\n");
    out.push_str("amalg(Z4, Z4, id, (2))\n");
    out.push_str("amalg(Z2 x Z2, Z2 x Z2, id, ((1,0)))\n");
    out.push_str("amalg(Z2, Z2, id, (0))\n");
    out.push_str("amalg(Z3, Z3, id, (0))\n");
    out.push_str("zamalg Z4 ; j=2\n");
    out.push_str("zamalg Z6 ; j=3\n");
    out.push_str("zamalg Z5 ; j=0\n");
    out.push_str("# integer products\n");
    out.push_str("arith Z ; ideal=3 ; mcs=units\n");
    out.push_str("arith Z ; ideal=0 ; mcs=units\n");
    out.push_str("arith Z\n");
    out.push_str("arith Z x Z ; ideal=0,2 ; mcs=units,all\n");
    out.push_str("arith Z x Z ; ideal=0,2 ; mcs={1},{1}\n");
    out.push_str("arith Z x Z\n");
    out.push_str("arith Z x Z4\n");
    out.push_str("arith Z4 x Z6\n");
    out.push_str("# polynomial bases\n");
    for base in ["Z2", "Z3", "Z6", "Z12"] {
        writeln!(out, "poly {base}").unwrap();
    }
    out
}

/// Z_n for n ≤ 30, Z_a × Z_b for ab ≤ 64, quotients, extensions, the integer
/// examples and the polynomial bases.
pub fn default_corpus() -> CorpusSpec {
    parse_corpus(&default_corpus_text(), Limits::from_env()).expect("default corpus parses")
}

/// Parses corpus text: one entry per line,
/// `[arith|poly|zamalg] <ring> [; ideal=<gens>] [; mcs=<gens>] [; j=<gens>]`.
/// Lines `@size N`, `@degree D` and `@fac K` set limits; `#` starts a comment.
pub fn parse_corpus(text: &str, mut limits: Limits) -> Result<CorpusSpec> {
    let mut degree = DEFAULT_DEGREE;
    let mut raw = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| VerifierError::Corpus { line: i + 1, msg };
        if let Some(rest) = line.strip_prefix('@') {
            let mut parts = rest.split_whitespace();
            let (key, value) = (parts.next().unwrap_or(""), parts.next().unwrap_or(""));
            let value: usize = value
                .parse()
                .map_err(|_| err(format!("bad number `{value}`")))?;
            match key {
                "size" => limits.size = value,
                "degree" => degree = value,
                "fac" => limits.fac_cap = value,
                _ => return Err(err(format!("unknown directive `@{key}`"))),
            }
            continue;
        }
        raw.push((i + 1, line.to_string()));
    }
    if degree > limits.degree_max {
        return Err(VerifierError::Usage(format!(
            "degree {degree} exceeds the hard cap {}",
            limits.degree_max
        )));
    }
    let entries = raw
        .into_iter()
        .map(|(n, line)| {
            parse_entry(&line, &limits).map_err(|e| VerifierError::Corpus {
                line: n,
                msg: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusSpec {
        entries,
        limits,
        degree,
    })
}

fn finite_elems(ring: &Ring, text: &str) -> Result<Vec<Elem>> {
    Ok(resolve_all(ring, &parse_lits(text)?)?)
}

/// Generators of an m.c.s. literal; `units` and `regulars` name those sets.
pub fn finite_mcs_gens(ring: &Ring, text: &str) -> Result<Vec<Elem>> {
    match text.trim() {
        "units" => return Ok(ring.units()),
        "regulars" => return Ok(ring.regulars()),
        _ => {}
    }
    Ok(resolve_all(ring, &parse_mcs_literal(text)?)?)
}

/// Parses one corpus line.
pub fn parse_entry(line: &str, limits: &Limits) -> Result<Entry> {
    let mut parts = line.split(';').map(str::trim);
    let head = parts.next().unwrap_or("");
    let mut annotations: Vec<(&str, &str)> = Vec::new();
    for part in parts {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| VerifierError::Usage(format!("annotation `{part}` needs key=value")))?;
        annotations.push((key.trim(), value.trim()));
    }
    let get = |key: &str| annotations.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
    for (key, _) in &annotations {
        if !["ideal", "mcs", "j"].contains(key) {
            return Err(VerifierError::Usage(format!("unknown annotation `{key}`")));
        }
    }
    let (tag, body) = match head.split_once(char::is_whitespace) {
        Some((t @ ("arith" | "poly" | "zamalg"), rest)) => (t, rest.trim()),
        _ => ("", head),
    };
    let kind = match tag {
        "arith" => {
            let ring = ArithRing::parse(body)?;
            let ideal = get("ideal").map(|t| ArithIdeal::parse(&ring, t)).transpose()?;
            let mcs = get("mcs").map(|t| ArithMCS::parse(&ring, t)).transpose()?;
            EntryKind::Arith { ring, ideal, mcs }
        }
        "poly" => {
            let base = build_ring(body, limits)?;
            let ideal = get("ideal").map(|t| finite_elems(&base, t)).transpose()?;
            let mcs = get("mcs").map(|t| finite_mcs_gens(&base, t)).transpose()?;
            EntryKind::Poly { base, ideal, mcs }
        }
        "zamalg" => {
            let zn = build_ring(body, limits)?;
            let j = Ideal::generate(&zn, &finite_elems(&zn, get("j").unwrap_or("0"))?);
            let z = ArithRing::parse("Z")?;
            let mcs = get("mcs").map(|t| ArithMCS::parse(&z, t)).transpose()?;
            EntryKind::ZAmalg { zn, j, mcs }
        }
        _ => {
            let ring = build_ring(body, limits)?;
            let ideal = get("ideal").map(|t| finite_elems(&ring, t)).transpose()?;
            let mcs = get("mcs").map(|t| finite_mcs_gens(&ring, t)).transpose()?;
            EntryKind::Finite { ring, ideal, mcs }
        }
    };
    let recipe = match &kind {
        EntryKind::Finite { ring, .. } => ring.recipe(),
        EntryKind::Arith { ring, .. } => ring.to_string(),
        EntryKind::Poly { base, .. } => format!("{}[x]", base.recipe()),
        EntryKind::ZAmalg { zn, j, .. } => {
            format!("Z amalg {} along ({})", zn.recipe(), zn.literal_list(j.generators()))
        }
    };
    Ok(Entry {
        text: line.to_string(),
        recipe,
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_contents() {
        let c = default_corpus();
        let texts: Vec<&str> = c.entries.iter().map(|e| e.text.as_str()).collect();
        assert!(texts.contains(&"Z12"));
        assert!(texts.contains(&"Z6"));
        assert!(texts.contains(&"arith Z x Z ; ideal=0,2 ; mcs=units,all"));
        assert!(texts.contains(&"Z8 x Z8"));
        assert!(!texts.contains(&"Z8 x Z9"));
        assert_eq!(c.degree, 3);
    }

    #[test]
    fn parse_errors() {
        let limits = Limits::default();
        assert!(parse_corpus("Z12 ; ideal=4 ; mcs=5", limits).is_ok());
        assert!(matches!(
            parse_corpus("Z12\nQ5", limits),
            Err(VerifierError::Corpus { line: 2, .. })
        ));
        assert!(parse_corpus("Z12 ; colour=4", limits).is_err());
        assert!(parse_corpus("@degree 2\nZ3", limits).unwrap().degree == 2);
    }
}
