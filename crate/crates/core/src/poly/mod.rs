//! Exact polynomials in `u, v, w` and truncated power series in `x` over them.

mod egf;
mod mpoly;

pub use egf::EgfSeries;
pub(crate) use egf::factorial;
pub use mpoly::{MPoly, Monomial};
