//! Exact arithmetic for the Catalan-family number triangles: the ballot
//! triangle, Shapiro's Catalan triangle, the admissible triangle, and the
//! two-parameter weighted Motzkin triangle, together with the determinant,
//! permanent and product transforms built on top of them.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there are no floats and no tolerances anywhere. The [`identities`] module
//! verifies a catalogue of summation identities over finite parameter boxes,
//! the [`paths`] module provides brute-force lattice-path enumeration as an
//! independent oracle, and [`bijections`] implements the constructive
//! path correspondences behind two of those identities.

pub mod bijections;
pub mod exact;
pub mod identities;
pub mod paths;
pub mod render;
pub mod series;
pub mod transforms;
pub mod triangles;

pub use exact::{Int, Rat};
