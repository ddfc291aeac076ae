//! Leja sequences on the complex unit disk and their Lebesgue constants.
//!
//! The crate builds the explicit disk Leja sequence from binary expansions,
//! greedy Leja sections on arbitrary point clouds, evaluates Lagrange bases and
//! both Lebesgue functions, computes their suprema over the unit circle, and
//! checks the known bounds on those constants, numerically and with exact dyadic
//! arithmetic.
//!
//! ```
//! use leja::{disk, extrema};
//!
//! let section = disk::explicit_section(4).unwrap();
//! assert_eq!(section.len(), 4);
//! let params = extrema::SearchParams::new(4096, 1e-12).unwrap();
//! let lambda = extrema::lebesgue_constant(3, &params).unwrap();
//! assert!((lambda.value - 3.0).abs() < 1e-6);
//! ```
//!
//! Data-parallel loops run on rayon when the `parallel` feature (on by default)
//! is enabled; see [`exec::Execution`].

pub mod angle;
pub mod binary;
pub mod disk;
pub mod dyadic;
pub mod error;
pub mod exec;
pub mod extrema;
pub mod greedy;
pub mod interp;
pub mod recursion;
pub mod section;
pub mod verify;

pub use angle::DyadicAngle;
pub use binary::{binary_expand, BinaryExpansion};
pub use dyadic::DyadicRational;
pub use error::{LejaError, Result};
pub use exec::Execution;
pub use extrema::{ExtremumReport, SearchParams};
pub use interp::LagrangeBasis;
pub use section::{LejaSection, Node, Origin};
