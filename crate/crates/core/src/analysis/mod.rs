//! Everything computed on top of a constructed code.

pub mod bounds;
pub mod distance;
pub mod minvec;
pub mod ms;
pub mod subspace;

pub use distance::DistanceReport;
