//! Prints the stack lower bound and the diameter upper bound next to the
//! exact value for every connected graph on four vertices.
//!
//! ```text
//! cargo run --release --example bounds
//! ```

use std::collections::BTreeMap;

use cover_pebbling::formulas::{bound_report, s_vertex};
use cover_pebbling::graph::connected_graphs;
use cover_pebbling::solver::gamma_exact;
use cover_pebbling::{generate, FamilySpec};

fn main() -> cover_pebbling::Result<()> {
    let fuse = generate(&FamilySpec::Fuse { n: 6, d: 3 })?;
    for v in 0..fuse.order() {
        println!("fuse(6,3) s({v}) = {}", s_vertex(&fuse, v)?);
    }

    // (edges, lower, gamma, upper) -> number of labeled graphs
    let mut rows: BTreeMap<(usize, u64, u64, u64), usize> = BTreeMap::new();
    for g in connected_graphs(4) {
        let b = bound_report(&g)?;
        let gamma = gamma_exact(&g, Some(b.upper_diameter))?.gamma;
        assert!(b.lower_stacked <= gamma && gamma <= b.upper_diameter);
        *rows
            .entry((g.edges().len(), b.lower_stacked, gamma, b.upper_diameter))
            .or_default() += 1;
    }
    println!("\nedges  lower  gamma  upper  graphs");
    for ((edges, lower, gamma, upper), count) in rows {
        println!("{edges:>5}  {lower:>5}  {gamma:>5}  {upper:>5}  {count:>6}");
    }
    Ok(())
}
