//! Exact computations with Hom-Hopf algebras, Hom-Long dimodules, their
//! braided monoidal categories and the Hom-Long equation.
//!
//! All structures are finite dimensional and given by structure constants in
//! a fixed basis; all arithmetic is exact over the rationals.

pub mod braidcat;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod homstruct;
pub mod io;
pub mod longeq;
pub mod linalg;
pub mod longdimod;
pub mod repmod;
pub mod report;

pub use error::{Error, Result};
pub use report::{AxiomCheck, AxiomReport, Witness};
