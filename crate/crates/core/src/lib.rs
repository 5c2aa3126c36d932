//! Frames, controlled frames and frame multipliers on finite-dimensional
//! left quaternionic Hilbert spaces.

pub mod cli;
pub mod controlled;
pub mod embed;
pub mod error;
pub mod frames;
pub mod harness;
pub mod hilbert;
pub mod io;
pub mod multiplier;
pub mod operator;
pub mod quaternion;
pub mod random;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use frames::{CoefficientSeq, Frame};
pub use hilbert::QVector;
pub use operator::QOperator;
pub use quaternion::Quaternion;
