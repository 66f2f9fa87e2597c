//! Exact screening-current (contour) representations of quantum
//! superalgebras, with machine verification of their Hopf structure and a
//! scanner for singular vectors at generic weight.

#![allow(clippy::needless_range_loop)]

pub mod contour;
pub mod commands;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod phase;
pub mod root_data;
pub mod serre;

pub use contour::{FaultInjection, Generator, ModuleContext, ModuleVector, ScreeningSequence};
pub use error::{Error, Result};
pub use phase::{q_number, PhaseScalar};
pub use root_data::{OmegaData, RootDatum, Weight};
