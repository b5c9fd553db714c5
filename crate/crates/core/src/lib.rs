//! Combinatorics of pure `d`-dimensional simplicial complexes on labeled
//! vertices: tight and weak Hamiltonicity with verifiable certificates,
//! the labeling hierarchy from unit-interval down to weakly-closed,
//! constructive degree-condition theorems, and an exact Gröbner-basis
//! verifier for the maximal minors generating determinantal facet ideals.
//!
//! Vertices are labeled `1..=n` throughout and `n` is capped at 64 so a
//! vertex set fits in one machine word.

pub mod complex;
pub mod dfi;
pub mod error;
pub mod families;
pub mod hamiltonicity;
pub mod hierarchy;
pub mod oracle;
pub mod search;
pub mod theorems;

pub use complex::{Complex, DualGraph, Face, Labeling};
pub use error::Error;
pub use hamiltonicity::{CertKind, PathCertificate};
pub use hierarchy::{HierarchyProperty, HierarchyReport, Verdict, Violation};
pub use search::{HamProperty, SearchConfig};
