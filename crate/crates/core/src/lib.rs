//! Colored permutation groups `G_{r,n}`, complex reflection groups `G_{r,s,n}`,
//! and the distribution of absolute fixed points, excedances and color sums
//! over the elements with `sigma^m = 1`.
//!
//! Every distribution is available two ways: by exhaustive enumeration
//! ([`oracle`]) and from exponential generating functions ([`formulas`]).
//! The [`verify`] module compares them over parameter grids.

pub mod cli;
pub mod error;
pub mod formulas;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{ColoredPermutation, GroupSpec, StatTriple};
pub use poly::{EgfSeries, MPoly, Monomial};
