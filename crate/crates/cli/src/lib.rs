//! Code files, reports, the worked-example corpus and the `acd` command.

pub mod app;
pub mod codefile;
pub mod corpus;
pub mod report;

pub use app::run;
pub use codefile::{CodeFile, ParseError};
pub use report::AnalysisReport;
