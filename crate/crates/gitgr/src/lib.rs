//! Reports, JSON/CSV encodings and the `gitgr` command line on top of
//! [`gitgr_core`].

pub mod analyze;
pub mod cli;
pub mod document;
pub mod render;

pub use analyze::{analyze, AnalyzeOptions};
pub use document::ReportDocument;
