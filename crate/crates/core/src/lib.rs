//! Small-sample likelihood inference for the Birnbaum–Saunders distribution.

pub mod datasets;
pub mod dist;
pub mod error;
pub mod harness;
pub mod estimators;
pub mod likelihood;
pub mod lrtest;
pub mod numeric;
pub mod profile;
pub mod sample;

pub use dist::{BsParams, RngStream};
pub use error::{Error, Result};
pub use sample::Sample;
