//! Concrete flux models and benchmark problems.

pub mod advection;
pub mod data;
pub mod euler;
pub mod registry;
pub mod swe;

pub use advection::Advection;
pub use euler::Euler;
pub use registry::{lookup, registry, ProblemSpec};
pub use swe::{swe_source_average, ShallowWater};
