use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{self, bound_report};
use crate::graph::{generate, FamilySpec, Graph};
use crate::solver::{gamma_exact_with, SolverOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    BoundViolation,
    Ok,
    /// The oracle ran out of its state budget; no exact value.
    BudgetExceeded,
}

impl Status {
    pub fn is_success(self) -> bool {
        matches!(self, Status::Match | Status::Ok)
    }
}

/// One formula-versus-oracle comparison. Field order is the JSON and CSV
/// column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    pub gamma_formula: Option<u64>,
    pub gamma_oracle: Option<u64>,
    pub bound_lower: u64,
    pub bound_upper: u64,
    /// Unsolvable configuration of size `gamma_oracle - 1`, space separated.
    pub witness: Option<String>,
    pub configs_checked: u64,
    pub elapsed_ms: u64,
    pub status: Status,
}

impl VerificationReport {
    /// Derives the status from the other fields. An unequal formula wins
    /// over a bound violation.
    pub fn classify(
        gamma_formula: Option<u64>,
        gamma_oracle: Option<u64>,
        bound_lower: u64,
        bound_upper: u64,
    ) -> Status {
        match (gamma_formula, gamma_oracle) {
            (_, None) => Status::Ok,
            (Some(f), Some(o)) if f != o => Status::Mismatch,
            (_, Some(o)) if o < bound_lower || o > bound_upper => Status::BoundViolation,
            (Some(_), Some(_)) => Status::Match,
            (None, Some(_)) => Status::Ok,
        }
    }
}

/// Closed-form cover pebbling number for a family, where one is known.
pub fn family_formula(spec: &FamilySpec) -> Result<Option<u64>> {
    let value = match spec {
        FamilySpec::Multipartite(sizes) => formulas::phi_multipartite(sizes)?,
        FamilySpec::Wheel(n) => formulas::gamma_wheel(*n)?,
        FamilySpec::Fuse { n, d } => formulas::diameter_bound(*n as u64, *d as u32)?,
        FamilySpec::Path(_) => formulas::s_max(&generate(spec)?)?,
        FamilySpec::Star(leaves) => formulas::phi_multipartite(&[*leaves, 1])?,
    };
    Ok(Some(value))
}

#[derive(Debug, Clone, Copy)]
pub struct CampaignOptions {
    pub workers: usize,
    pub solver: SolverOptions,
    /// Report `elapsed_ms = 0` so output is byte-identical across runs.
    pub timing: bool,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions {
            workers: crate::solver::default_workers(),
            solver: SolverOptions::default(),
            timing: true,
        }
    }
}

pub fn verify_family(spec: &FamilySpec, options: &CampaignOptions) -> Result<VerificationReport> {
    let g = generate(spec)?;
    verify_graph(&spec.to_string(), &g, family_formula(spec)?, options)
}

/// Runs the oracle (upper hint: the diameter bound) and compares it with
/// `gamma_formula` and the stacked/diameter bounds. On trees without an
/// explicit formula, `max_v s(v)` is used.
pub fn verify_graph(
    name: &str,
    g: &Graph,
    gamma_formula: Option<u64>,
    options: &CampaignOptions,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let bounds = bound_report(g)?;
    let gamma_formula = match gamma_formula {
        Some(f) => Some(f),
        None if g.is_tree() => Some(bounds.lower_stacked),
        None => None,
    };
    let (gamma_oracle, witness, configs_checked, budget_hit) = match gamma_exact_with(
        g,
        Some(bounds.upper_diameter),
        options.workers,
        options.solver,
    ) {
        Ok(r) => (
            Some(r.gamma),
            Some(r.witness.to_string()),
            u64::try_from(r.configs_checked).unwrap_or(u64::MAX),
            false,
        ),
        Err(Error::BudgetExceeded { .. }) => (None, None, 0, true),
        Err(e) => return Err(e),
    };
    let status = if budget_hit {
        Status::BudgetExceeded
    } else {
        VerificationReport::classify(
            gamma_formula,
            gamma_oracle,
            bounds.lower_stacked,
            bounds.upper_diameter,
        )
    };
    let elapsed_ms = if options.timing {
        started.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(VerificationReport {
        graph: name.to_string(),
        gamma_formula,
        gamma_oracle,
        bound_lower: bounds.lower_stacked,
        bound_upper: bounds.upper_diameter,
        witness,
        configs_checked,
        elapsed_ms,
        status,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

/// One JSON object per line, or CSV with a header row and the same column
/// order.
pub fn emit_report(reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
            .collect(),
        ReportFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for r in reports {
                writer.serialize(r).expect("report serializes");
            }
            String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("utf-8 csv")
        }
    }
}
