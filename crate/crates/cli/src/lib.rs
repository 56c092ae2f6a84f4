//! Text formats, certificate files and the command implementations behind
//! the `pmat` binary.

pub mod commands;
pub mod format;
