//! Computes cover pebbling numbers exhaustively and prints the extremal
//! configuration found one pebble below each.
//!
//! ```text
//! cargo run --release --example gamma
//! ```

use std::time::Instant;

use cover_pebbling::solver::{
    default_workers, gamma_exact_with, verify_threshold, SolverOptions, Threshold,
};
use cover_pebbling::{generate, FamilySpec};

fn main() -> cover_pebbling::Result<()> {
    let workers = default_workers();
    for spec in [
        FamilySpec::Wheel(5),
        FamilySpec::Multipartite(vec![3, 1]),
        FamilySpec::Path(5),
        FamilySpec::Fuse { n: 5, d: 3 },
    ] {
        let g = generate(&spec)?;
        let started = Instant::now();
        let r = gamma_exact_with(&g, None, workers, SolverOptions::default())?;
        println!(
            "{spec:>18}  gamma={:<3} witness=[{}]  checked {} configurations in {:.0?}",
            r.gamma,
            r.witness,
            r.configs_checked,
            started.elapsed()
        );
    }

    // A single threshold check, as used by the search above.
    let c4 = generate(&FamilySpec::Multipartite(vec![2, 2]))?;
    for k in [8, 9] {
        match verify_threshold(&c4, k, workers)? {
            Threshold::Ok { checked } => {
                println!("K_2,2 at size {k}: all {checked} configurations solvable")
            }
            Threshold::Witness { config, index } => {
                println!("K_2,2 at size {k}: [{config}] (configuration #{index}) is unsolvable")
            }
        }
    }
    Ok(())
}
