//! Decides a few configurations exactly and replays the certificates.
//!
//! ```text
//! cargo run --example solve
//! ```

use cover_pebbling::solver::{solve, solve_with, Pruning, SolverOptions};
use cover_pebbling::{generate, validate_certificate, BinaryWeighting, Configuration, FamilySpec};

fn main() -> cover_pebbling::Result<()> {
    let w4 = generate(&FamilySpec::Wheel(4))?;

    // Ten pebbles on a rim vertex are one short.
    for counts in [
        vec![0, 10, 0, 0, 0],
        vec![0, 11, 0, 0, 0],
        vec![10, 0, 0, 0, 0],
    ] {
        let c = Configuration::new(counts);
        let out = solve(&w4, &c, None)?;
        println!(
            "W_4 from [{c}]: solvable={} after {} states",
            out.is_solvable(),
            out.states_explored
        );
        if let Some(cert) = out.certificate {
            let last = validate_certificate(&w4, &cert, None)?;
            println!("  {} moves, ends at [{last}]", cert.moves.len());
        }
    }

    // Only the two ends of a path need a pebble here.
    let p3 = generate(&FamilySpec::Path(3))?;
    let ends = BinaryWeighting::from_vertices(3, [0, 2]);
    let c = Configuration::new(vec![5, 0, 0]);
    let out = solve(&p3, &c, Some(&ends))?;
    print!(
        "\nP_3 ends from [{c}]:\n{}",
        out.certificate.expect("five pebbles suffice")
    );

    // A state budget turns a long search into an error instead of a hang.
    let w6 = generate(&FamilySpec::Wheel(6))?;
    let options = SolverOptions {
        budget: Some(50),
        pruning: Pruning::Baseline,
    };
    let res = solve_with(
        &w6,
        &Configuration::new(vec![0, 18, 0, 0, 0, 0, 0]),
        None,
        options,
    );
    println!("\nbudgeted search on W_6: {res:?}");
    Ok(())
}
