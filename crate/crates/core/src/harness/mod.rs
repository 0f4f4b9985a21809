//! File parsing, verification campaigns and the command-line front end.

pub mod cli;
mod report;

pub use cli::run_cli;
pub use report::{
    emit_report, family_formula, verify_family, verify_graph, CampaignOptions, ReportFormat,
    Status, VerificationReport,
};

use crate::error::Result;
use crate::graph::Graph;
use crate::pebble::Configuration;

/// Parses the graph text format (`n m`, then `m` lines `u v`).
pub fn parse_graph_file(text: &str) -> Result<Graph> {
    Graph::from_text(text)
}

/// Parses one line of `n` pebble counts.
pub fn parse_config(text: &str, n: usize) -> Result<Configuration> {
    Configuration::parse(text, n)
}
