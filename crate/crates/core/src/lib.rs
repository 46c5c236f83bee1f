//! Semi-relativistic partial-wave scattering for two particles interacting via
//! the Varshni potential.
//!
//! The closed-form pipeline (wave number, wave parameters, gamma-function phase
//! shift, normalization, radial wavefunction) lives in [`scattering`], with
//! bound states from the S-matrix pole analysis in [`bound`]. A direct
//! Numerov integration of the same radial model, in [`oracle`], provides the
//! independent ground truth the validation commands compare against.

pub mod bound;
pub mod cli;
pub mod error;
pub mod kinematics;
pub mod oracle;
pub mod potential;
pub mod scattering;
pub mod specfun;

pub use error::{Error, Result};
