//! Nested set complexes of finite atomic lattices, the graded algebra
//! `D(L, G)` attached to a building set, and the toric fan of nested sets.
//!
//! The usual entry point is a [`lattice::Lattice`], built from cover
//! relations or taken from [`catalog`], together with a
//! [`building::BuildingSet`]:
//!
//! ```
//! use lattice_chow::algebra::hilbert_series_enumerated;
//! use lattice_chow::building::BuildingSet;
//! use lattice_chow::catalog::partition_lattice;
//!
//! let pi4 = partition_lattice(4).unwrap();
//! let g = BuildingSet::minimal(&pi4).unwrap();
//! assert_eq!(hilbert_series_enumerated(&g).unwrap().to_string(), "1 + 5t + t^2");
//! ```

pub mod algebra;
mod bigint_serde;
pub mod building;
pub mod catalog;
pub mod chow;
pub mod cli;
pub mod error;
pub mod fan;
pub mod hilbert;
pub mod lattice;
pub mod lp;
pub mod nested;
pub mod oracle;
pub mod poly;
pub mod series;

pub use building::BuildingSet;
pub use error::{Error, Result};
pub use lattice::Lattice;
pub use series::HilbertSeries;
