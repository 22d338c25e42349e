//! Exact-arithmetic engine for weak (co)monad theory over finite-rank free
//! modules.
//!
//! Everything in this crate evaluates to a concrete matrix ([`LinMap`]) over
//! an exact ring (`Z_n` or the rationals).  Structures are given by structure
//! constants (products, units, coproducts, counits, entwining maps) and every
//! law is decided by exact matrix evaluation, never by symbolic rewriting.
//!
//! The layers, bottom up:
//!
//! * [`ring`] / [`linmap`] — exact scalars and dense matrices (compose,
//!   Kronecker tensor, idempotent splitting, exhaustive map enumeration);
//! * [`diagram`] — formal functor words and 2-cell expressions with an exact
//!   evaluator, used to decide commutativity of diagrams;
//! * [`monadics`] / [`comonadics`] — q-unital monads and q-counital comonads
//!   as (co)algebras, their law reports, repair constructions, dictionaries
//!   and brute-force pairing oracles;
//! * [`pairing`] — dual pairings of tensor functors, regularity/symmetry,
//!   related adjunctions, induced (co)monads and comparison functors;
//! * [`entwine`] — lifting of functors through (co)module categories and
//!   entwined weak (co)monad products;
//! * [`mixed`] — mixed distributive laws between a weak monad and a weak
//!   comonad on one category.

pub mod comonadics;
pub mod diagram;
pub mod entwine;
pub mod error;
pub mod fixtures;
pub mod linmap;
pub mod mixed;
pub mod monadics;
pub mod pairing;
pub mod ring;

pub use error::Error;
pub use linmap::LinMap;
pub use ring::{ExactRing, Scalar};
