//! Exact combinatorics and hyperbolic volumes of Löbell polyhedra `R(n)`
//! and their towers `R_k(n)`, together with the two-sided volume bounds for
//! compact right-angled polyhedra in hyperbolic 3-space.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`] evaluates the Lobachevsky function and the constants
//!   `v3` (regular ideal tetrahedron) and `v8` (regular ideal octahedron).
//! * [`polyhedra`] builds and validates planar maps of `R(n)` and
//!   `R_k(n)`, and searches for proper four-colorings of their faces.
//! * [`volume`] evaluates the closed-form volume of `R(n)` and `R_k(n)`.
//! * [`bounds`] implements the linear volume bounds, the asymptotic bands
//!   and the crossover analysis.

pub mod bounds;
mod error;
pub mod numerics;
pub mod polyhedra;
pub mod volume;

pub use error::{Error, Result};
