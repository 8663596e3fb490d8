//! Command-line tools, report formats, result cache and the published-value
//! checks built on `milnor-core`.

pub mod cache;
pub mod cli;
pub mod grid;
pub mod json;
pub mod search;
pub mod svg;
pub mod verify;
