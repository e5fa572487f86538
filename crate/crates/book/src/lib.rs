//! Code listings of the guide in `book/src`, compiled and run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/gradings.md")]
pub mod gradings {}

#[doc = include_str!("../../../book/src/chains.md")]
pub mod chains {}

#[doc = include_str!("../../../book/src/hasse.md")]
pub mod hasse {}

#[doc = include_str!("../../../book/src/components.md")]
pub mod components {}

#[doc = include_str!("../../../book/src/twistor.md")]
pub mod twistor {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
