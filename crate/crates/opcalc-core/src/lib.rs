//! Exact, finitary workbench for operad-flavoured algebra.
//!
//! The crate is organized around five independent but interlocking toolkits:
//!
//! - [`combinat`] — the skeletal category of finite sets and injections, its
//!   strict coproduct, symmetric groups, and partition/composition
//!   enumeration;
//! - [`symseq`] — symmetric sequences of finite pointed sets, the composition
//!   product over set partitions, and an operad-axiom checker;
//! - [`polyfun`] — a symbolic model of symmetric functor sequences as wedges
//!   of monomial multifunctors, with substitution, multilinearization at S⁰,
//!   and a chain-rule comparison oracle;
//! - [`sphere`] — the exact-rational simplex/sphere operad, its smash powers,
//!   the cube-model adjoint homeomorphism, and strictly associative
//!   stabilization maps;
//! - [`conncalc`] — integer connectivity calculus for stable first-order
//!   excision bounds and the colimit-comparison criterion.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads. Enumeration
//! orders are deterministic.

pub mod combinat;
pub mod conncalc;
pub mod polyfun;
pub mod sphere;
pub mod symseq;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
