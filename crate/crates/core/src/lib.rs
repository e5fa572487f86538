//! Exact computations for parabolic gradings of split semisimple Lie algebras.

#![allow(clippy::needless_range_loop)]

pub mod chain;
pub mod components;
pub mod error;
pub mod grading;
pub mod hodge;
pub mod kostant;
pub mod lie_algebra;
pub mod linalg;
pub mod root_system;
pub mod scalar;
pub mod twistor;

pub use error::{Error, Result};
