//! A workbench for finite Heyting algebras and the intermediate propositional
//! logics they generate.
//!
//! The crate is organized around a handful of interlocking pieces:
//!
//! * [`poset`] — finite partial orders, their upward-closed sets, and the
//!   open-set algebra construction `O(P)`, including the reverse-inclusion
//!   power-set families `P_n` and their punctured variants.
//! * [`lattice`] — bounded lattices presented by tables, relative
//!   pseudocomplements (Heyting implication) and their duals, intervals,
//!   order duals, irreducibility flags, and quotients by filters.
//! * [`filters`] — filters, prime filters, generated filters, prime
//!   separation, and the prime-filter representation embedding a finite
//!   Heyting algebra into the open-set algebra of its prime spectrum.
//! * [`syntax`] / [`semantics`] — propositional formulas, algebraic
//!   valuations, validity scanning, the positivization translation, and
//!   bounded checks against the named algebra families.
//! * [`kripke`] / [`prover`] — Kripke models over finite frames, forcing,
//!   and a terminating sequent-style decision procedure that produces either
//!   a proof trace or a verified finite countermodel.
//! * [`morphism`] — verified lattice homomorphisms, cone-covers between
//!   posets with the two explicit constructions, and valuation pullback.
//! * [`omega`] — the algebra of finitely generated upsets of the
//!   finite-or-cofinite subsets of the naturals, interval transport into it,
//!   and the disjoint-support identity checks built on top.
//! * [`stock`] — exhaustive and randomized test stock: poset and lattice
//!   enumeration up to isomorphism, random upset algebras, random formulas.
//! * [`acceptance`] — the runnable acceptance suite with one result per
//!   criterion.

pub mod acceptance;
pub mod bits;
pub mod error;
pub mod filters;
pub mod kripke;
pub mod lattice;
pub mod morphism;
pub mod omega;
pub mod poset;
pub mod prover;
pub mod semantics;
pub mod stock;
pub mod syntax;

pub use error::{Error, Result};
pub use filters::Filter;
pub use lattice::{FiniteLattice, HeytingAlgebra};
pub use poset::{Poset, Upset};
pub use syntax::Formula;
