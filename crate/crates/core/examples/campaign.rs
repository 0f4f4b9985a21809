//! Checks closed forms against the exhaustive search over a range of
//! families and writes the reports as CSV.
//!
//! ```text
//! cargo run --release --example campaign > reports.csv
//! ```

use cover_pebbling::formulas::nonincreasing_lists;
use cover_pebbling::harness::{emit_report, verify_family, CampaignOptions, ReportFormat};
use cover_pebbling::FamilySpec;

fn main() -> cover_pebbling::Result<()> {
    let mut specs: Vec<FamilySpec> = (3..=5).map(FamilySpec::Wheel).collect();
    specs.extend(
        nonincreasing_lists(5)
            .into_iter()
            .filter(|sizes| sizes.len() > 1)
            .map(FamilySpec::Multipartite),
    );
    specs.extend((2..=4).map(|d| FamilySpec::Fuse { n: 5, d }));

    let options = CampaignOptions {
        timing: false,
        ..Default::default()
    };
    let reports = specs
        .iter()
        .map(|s| verify_family(s, &options))
        .collect::<cover_pebbling::Result<Vec<_>>>()?;
    print!("{}", emit_report(&reports, ReportFormat::Csv));

    let failed = reports.iter().filter(|r| !r.status.is_success()).count();
    eprintln!("{} families, {failed} disagreements", reports.len());
    Ok(())
}
