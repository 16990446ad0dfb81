//! Exact enumeration and reflection-group analysis of short-step lattice
//! walks confined to the quarter plane.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: lattice points, step sets and bivariate Laurent polynomials.
//! * [`enumerate`]: exact walk counts (dynamic programming, multinomial sums,
//!   brute force) and Pascal slices.
//! * [`isometry`]: integer affine isometries of the lattice, group closure,
//!   invariance checks and isometry search.
//! * [`chamber`]: reflection-line arrangements, chambers and the
//!   quarter-plane decomposition.
//! * [`orbitsum`]: signed orbit sums and the comparison harness.
//! * [`claims`]: the verification battery that aggregates everything above
//!   into a deterministic report.

pub mod chamber;
pub mod claims;
pub mod enumerate;
pub mod isometry;
pub mod lattice;
pub mod orbitsum;

mod error;

pub use error::{Error, Result};
pub use lattice::{LaurentPoly, ModelTag, Point, RationalPoint, StepSet};
