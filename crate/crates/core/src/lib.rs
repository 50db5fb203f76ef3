//! Dynamic rays, periodic orbits, fundamental tails and basic regions for
//! the exponential family `f(z) = e^z + c`, and a census of indifferent and
//! rationally invisible repelling cycles against the single singular orbit.
//!
//! The modules build on each other in order:
//!
//! * [`map`]: the family, its singular value and labelled inverse branches.
//! * [`symbolic`]: addresses, shift and projection.
//! * [`rays`]: ray tracing, pullbacks along addresses, landing.
//! * [`cycles`]: Newton search for periodic orbits and classification.
//! * [`regions`]: the graph of landed rays and its complementary regions.
//! * [`tails`]: fundamental tails and pieces around a repelling cycle.
//! * [`census`]: the audit itself.
//! * [`cli`]: the command-line front end.

pub mod census;
pub mod cli;
pub mod cycles;
pub mod geometry;
pub mod map;
pub mod precise;
pub mod rays;
pub mod regions;
pub mod report;
pub mod symbolic;
pub mod tails;

pub use map::{DomainLabel, MapError, MapModel};
pub use symbolic::{FiniteAddress, InfiniteAddress};

pub use num_complex::Complex64;
