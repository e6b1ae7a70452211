//! Braid, pure braid and monomial braid group calculus, with machine
//! verification of automorphism group presentations.

pub mod autmono;
pub mod autpn;
pub mod braid;
pub mod endo;
pub mod error;
pub mod monomial;
pub mod purebraid;
pub mod report;
pub mod suites;
pub mod words;

pub use error::{Error, Result};
