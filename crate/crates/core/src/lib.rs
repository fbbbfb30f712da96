//! Consistent transformations of Dempster–Shafer belief functions.
//!
//! A belief function is *consistent* when its focal elements share a common
//! element. This crate computes the consistent belief functions closest to a
//! given one under the L1, L2 and L∞ norms, measured either on mass vectors
//! ([`mass_approx`]) or on belief vectors ([`belief_approx`]).
//!
//! The consistent functions form a simplicial complex with one maximal
//! simplex per element `x` of the frame (all functions whose focal elements
//! contain `x`). Each `partial_*` function solves the problem on one of those
//! simplices; each `global_*` function compares the partial solutions and
//! returns every optimal component.
//!
//! ```
//! use csbf::evidence::{Frame, MassFunction};
//! use csbf::mass_approx::global_l1_mass;
//!
//! let frame = Frame::new(["x", "y", "z"])?;
//! let m = MassFunction::from_labels(
//!     frame,
//!     &[("x", 0.2), ("y", 0.1), ("x,y", 0.4), ("y,z", 0.3)],
//! )?;
//! let global = global_l1_mass(&m)?;
//! assert_eq!(global.optima, vec![1]); // the element "y"
//! # Ok::<(), csbf::Error>(())
//! ```
//!
//! [`oracle`] re-derives every partial distance by direct numerical
//! minimization and is meant for verification on small frames.

pub mod belief_approx;
pub mod cli;
pub mod error;
pub mod evidence;
pub mod geometry;
pub mod mass_approx;
pub mod oracle;
pub mod sampling;
pub mod selection;

pub use error::{Error, Result};
pub use evidence::{
    belief_from_mass, contour, core_of, is_consistent, mass_from_belief, BeliefView, Frame,
    FrameSubset, MassAssignment, MassFunction, PseudoMassFunction,
};
pub use geometry::{EmbeddingSpace, Norm, PointVector, SpaceKind};
pub use selection::GlobalResult;
