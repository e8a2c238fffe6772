//! Library surface of the command-line tool, split out so integration
//! tests can drive the command layer directly.

pub mod commands;
pub mod output;
