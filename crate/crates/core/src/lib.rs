//! Hyperbolic volume as a quandle cocycle invariant.
//!
//! A hyperbolic knot's holonomy representation sends meridians to parabolic
//! Möbius maps. Coloring the arcs and regions of a diagram by meridians and
//! summing, over crossings, signed volumes of ideal tetrahedra spanned by
//! their fixed points yields a state sum that is always `-V`, `0` or `+V`
//! for the complete hyperbolic volume `V`. Which multiples occur, for the
//! knot quandle of `K` and of `-K`, detects invertibility and
//! amphicheirality.
//!
//! Modules, bottom up:
//! - [`hypgeom`]: boundary points, Möbius maps, Bloch–Wigner dilogarithm,
//!   ideal tetrahedra;
//! - [`diagram`]: PD-code diagrams, arcs, regions, crossing frames,
//!   Wirtinger relations;
//! - [`holquandle`]: holonomy representations and the knot quandle as
//!   conjugacy classes of parabolic matrices;
//! - [`invariant`]: the cocycle, shadow colorings, state sums and the
//!   symmetry report;
//! - [`fixtures`]: the figure-eight knot data embedded verbatim.

// Tolerance checks are written `!(r < tol)` so that a NaN residual fails.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod holquandle;
pub mod hypgeom;
pub mod invariant;

pub use error::{Error, Result};
