//! Exact computations for one-dimensional numerical semigroup rings `k[H]`:
//! relative ideals, traces, the h-invariant, canonical ideals and the
//! Gorenstein-type classifications built on them.
//!
//! ```
//! use std::sync::Arc;
//! use numsemi_core::{invariants, herzog, NumericalSemigroup};
//!
//! let h = Arc::new(NumericalSemigroup::build(&[7, 8, 9]).unwrap());
//! assert_eq!(invariants::h_omega(&h).unwrap(), 4);
//! assert_eq!(herzog::h_omega_formula(&h).unwrap(), 4);
//! ```

pub mod catalog;
pub mod error;
pub mod gorenstein_search;
pub mod herzog;
pub mod ideal;
pub mod interchange;
pub mod invariants;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
pub use gorenstein_search::{bg_upper_bound, bg_upper_bound_capped, BgSearchResult};
pub use herzog::HerzogData;
pub use ideal::RelativeIdeal;
pub use invariants::InvariantReport;
pub use semigroup::NumericalSemigroup;
