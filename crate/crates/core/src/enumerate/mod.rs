//! Exact walk counting.
//!
//! Three independent routes to the same numbers live here: the
//! slice-by-slice dynamic program ([`walk_slice`]), the multinomial sum over
//! step multiplicities ([`free_count_multinomial`]), and explicit enumeration
//! of step sequences ([`BruteForce`]). The Laurent-power route lives in
//! [`crate::lattice::free_gf_slice`].

mod brute;
mod dp;
mod multiplicity;
mod region;
mod table;

pub use brute::{BruteForce, Path, DEFAULT_BRUTE_FORCE_CAP};
pub use dp::{free_count, pascal_slice, region_count, walk_slice, walk_slices};
pub use multiplicity::{
    free_count_multinomial, multinomial, step_multiplicities, MultiplicitySystem,
    MultiplicityVector,
};
pub use region::{HalfPlane, Region};
pub use table::CountTable;
