//! Biquandle coloring invariants of oriented virtual link diagrams.
//!
//! The crate counts and enumerates colorings of a [`diagram::SemiarcDiagram`]
//! by a [`algebra::FiniteBiquandle`], builds coloring quivers and their
//! in-degree polynomials, computes the column group enhancement, and bounds the
//! first and second virtual bridge indices from below (counting) and the first
//! one from above (Wirtinger seed saturation).

pub mod algebra;
pub mod bridge;
pub mod coloring;
pub mod diagram;
pub mod enhance;
pub mod exec;
pub mod poly;
pub mod quiver;
pub mod repro;
