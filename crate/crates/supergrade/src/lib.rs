//! File formats and the command-line front end for `supergrade-core`.

pub mod cli;
pub mod report;
pub mod sca;
