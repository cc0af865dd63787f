//! Exact computation of non-acyclic Reidemeister torsions of closed
//! 3-manifolds given by a group presentation and an identity among
//! relations.
//!
//! The pipeline is: free-group calculus ([`foxcalc`]) produces the boundary
//! maps of the presentation complex ([`cellular`]); exact linear algebra
//! over an involutive field ([`scalars`], [`matrix`]) turns them into based
//! cochain complexes with torsion invariants ([`chainkit`]); Poincaré
//! duality pairings select cohomology bases ([`duality`]); the top-level
//! invariants and their canonical classes in `F^x / <N(F), units>` live in
//! [`refined`] and [`scalars::quotient`]. Built-in manifold families are in
//! [`catalog`].

pub mod catalog;
pub mod cellular;
pub mod chainkit;
pub mod duality;
pub mod foxcalc;
pub mod matrix;
pub mod refined;
pub mod scalars;

mod error;

pub use error::Error;

/// Library-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Default precision for numeric (embedded) payloads.
pub const DEFAULT_PRECISION: f64 = 1e-12;
