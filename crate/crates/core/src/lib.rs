//! Compact minimal rotational hypersurfaces `M^n(s, p)` in the unit sphere
//! `S^{n+1}`.
//!
//! The crate computes the period map `K(a)`, the area density `w(a)`, the
//! areas and cone entropies of the compact members, and checks the known area
//! bounds for this family by quadrature and sampling.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod numerics;
pub mod profile;
pub mod shrinker;

pub use error::{Error, Result};
pub use geometry::{GeometrySummary, RootPair, RotationSpec, ShapeParameter};
