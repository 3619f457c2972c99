//! Exact computational combinatorics of non-crossing partitions, generalized
//! (r-)Dyck paths, chord diagrams, and the Temperley-Lieb / Fuss-Catalan
//! diagram algebras acting on them, together with exact verifiers for the
//! r=2 Yang-Baxter and reflection equations.
//!
//! Everything is exact: coefficients are multivariate Laurent polynomials
//! over the integers, arbitrary-precision rationals, or elements of a
//! quadratic extension of the rationals. There is no floating point
//! anywhere in this crate.
//!
//! The crate is `no_std` (it requires `alloc`); IO, CLI and file formats
//! live in the companion crate `fusscat-cli`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boundary;
pub mod chains;
pub mod chords;
pub mod diagram;
pub mod integrability;
pub mod lincomb;
pub mod noncrossing;
pub mod paths;
pub mod rings;

pub use rings::{BigRational, LaurentPoly, QuadExt};
