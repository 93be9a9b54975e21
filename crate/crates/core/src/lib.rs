//! Exact harmonic analysis on Vilenkin groups with step functions.
//!
//! Elements of the group `G` and its dual `G*` are finite digit sequences
//! ([`GroupElement`]); square-integrable objects are step functions on a
//! finite window ([`StepFunction`]). On top of that the crate computes
//! Fourier transforms, periodizations and frame bounds of translate
//! systems, refinement filters and the frame-to-orthonormal lift, and the
//! binary frame wavelet.
//!
//! ```
//! use vilenkin::{instances, shift_invariant, Prime};
//!
//! let phi = instances::half_band(Prime::TWO);
//! let report = shift_invariant::frame_report(&phi).unwrap();
//! assert!(report.parseval && !report.orthonormal);
//! ```

pub mod error;
pub mod filter;
pub mod fmra;
pub mod group;
pub mod instances;
pub mod io;
pub mod periodic;
pub mod shift_invariant;
pub mod stepfn;
pub mod tol;
pub mod transform;
pub mod wavelet;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
pub use filter::FilterSpec;
pub use group::{character, walsh, CosetId, GroupElement, Prime, Side, Window};
pub use periodic::PeriodicSet;
pub use shift_invariant::{FrameReport, Lattice};
pub use stepfn::StepFunction;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/step_functions.md")]
    mod step_functions {}
    #[doc = include_str!("../../../book/src/fourier.md")]
    mod fourier {}
    #[doc = include_str!("../../../book/src/shift_invariant.md")]
    mod shift_invariant {}
    #[doc = include_str!("../../../book/src/refinement.md")]
    mod refinement {}
    #[doc = include_str!("../../../book/src/wavelets.md")]
    mod wavelets {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
