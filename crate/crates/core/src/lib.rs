//! Convex-set calculus: exact polytope arithmetic, Minkowski-Pontryagin
//! set differences, formal difference collections with minimal-element
//! extraction, and epsilon-subdifferential continuity probes.

pub mod collection;
pub mod error;
mod linalg;
pub mod polytope;
pub mod sampling;
pub mod scalar;
pub mod scenario;
pub mod set_difference;
pub mod subdiff;
pub mod suites;
pub mod svg;
pub mod vector;

pub use collection::{Collection, MinimalElementReport};
pub use error::{Error, Result};
pub use polytope::{ball_polygon, Halfspace, Polytope};
pub use scalar::{Arithmetic, Scalar};
pub use subdiff::PwlConvexFunction;
pub use vector::Vector;
