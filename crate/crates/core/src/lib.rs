//! Exact construction of symmetric functions from branching rules and
//! mechanical verification of the identities they satisfy.

pub mod error;
pub mod families;
pub mod identities;
pub mod macdonald;
mod memo;
pub mod operators;
pub mod partitions;
pub mod ring;

pub use error::{Error, Result};
