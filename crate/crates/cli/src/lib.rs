//! Library surface of the `tiltcheck` tool: text formats and JSON reports.
//! The binary in `main.rs` wires these to the command line.

pub mod formats;
pub mod report;
