//! Output formats and the verify runner behind the `groth` binary.

pub mod json;
pub mod render;
pub mod verify;
