//! Canonical text documents, ascii and dot pictures, and the table
//! verification report.

mod convert;
mod document;
mod json;
mod render;
mod report;

pub use convert::{convert, from_hub, to_hub, Form};
pub use document::{deserialize, serialize, Document, Family};
pub use json::to_canonical_string;
pub use render::{render, render_chain_graph, render_grid_graph, Format};
pub use report::{verify_tables, Record, Source, Status, VerificationReport, VerifyOptions, TABLE1};
