//! A laboratory for edge-coloured cliques.
//!
//! An `s`-edge-colouring of the complete graph `K_n` assigns a colour in
//! `1..=s` to every unordered vertex pair. This crate provides:
//!
//! * the data model ([`Colouring`], colour classes, patterns, palettes) with
//!   a text serialisation and exact canonical forms ([`colouring`]),
//! * exact detection of forbidden colour patterns and palettes ([`detect`]),
//! * exact homogeneous numbers and colour-restricted clique sizes via
//!   branch-and-bound solvers, plus a cograph fast path ([`homog`]),
//! * the classic constructions: lexicographic products, colour merging,
//!   probabilistic extra-colour recolouring, Gallai-style products and
//!   K4-free host colourings ([`construct`]),
//! * exact computation of the extremal quantity `h_s(n, c')` by
//!   isomorph-reduced exhaustive enumeration and a simulated-annealing
//!   heuristic for upper bounds ([`search`]),
//! * closed-form calculators for the probabilistic failure bounds that
//!   accompany the constructions ([`analysis`]).
//!
//! Vertices are `0..n` in the API and printed 1-based; colours are 1-based
//! everywhere. All randomised operations take explicit 64-bit seeds and are
//! reproducible across platforms.

pub mod analysis;
pub mod bitgraph;
pub mod canon;
pub mod colouring;
pub mod construct;
pub mod detect;
pub mod homog;
pub mod patterns;
pub mod search;

mod error;

pub use bitgraph::BitGraph;
pub use colouring::{ColourClass, Colouring, Palette, Pattern};
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
