//! Definition documents, checks and constructions for `lmalg-core`.

pub mod check;
pub mod construct;
pub mod document;
pub mod json;
pub mod report;

pub use check::{run_check, CliError};
pub use construct::{render_document, run_construct, Construction};
pub use document::{parse_document, Diagnostic, DiagnosticKind, Document, Entity};
pub use report::{emit_report, parse_machine, Format};
