//! Exact computational commutative algebra over small rings.
//!
//! The crate builds finite commutative rings from a small expression language
//! (`Z12`, `Z2 x Z4`, `Z12/(4)`, `triv(Z2, free(1))`, `amalg(Z4, Z4, id, (2))`),
//! enumerates their ideals and multiplicatively closed sets, and decides the
//! ideal predicates built on annihilators: r-ideals, pr-ideals, S-r-ideals,
//! S-prime ideals, z⁰-ideals, uz-rings, Property A and the annihilator
//! conditions.
//!
//! Finite rings are degenerate for most of these predicates (every regular
//! element is a unit), so two further layers carry infinite examples exactly:
//! [`arith`] decides products of `Z` and `Z_n` in closed form, and [`poly`]
//! works with bounded-degree polynomials over a finite base ring.

pub mod arith;
pub mod classify;
pub mod dsl;
mod error;
pub mod ext;
pub mod hom;
pub mod ideal;
mod limits;
pub mod localize;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use limits::Limits;
pub use ring::{Elem, FiniteRing, Ring};
