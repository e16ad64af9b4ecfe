//! Cohomology of moment-angle complexes, product-vanishing (Golod) checks and
//! the cluster-partition geometry behind co-H splittings of neighbourly
//! complexes.
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature spreads
//! the per-subset and per-pair loops over a rayon pool; results are identical
//! with or without it.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cluster;
pub mod complex;
pub mod error;
pub mod golod;
pub mod hochster;
pub mod homology;
pub mod linalg;
mod par;

pub use complex::{OrderedPartition, SimplicialComplex, VertexSet};
pub use error::Error;
pub use linalg::{Coeffs, Integer};
