//! Runs the four constructive strategies and prints their move lists.
//! Each one checks its own certificate before returning it.
//!
//! ```text
//! cargo run --example certificates
//! ```

use cover_pebbling::constructive::{
    solve_multipartite, solve_pigeonhole_traced, solve_rst, solve_wheel_traced,
};
use cover_pebbling::{generate, BinaryWeighting, Configuration, FamilySpec};

fn main() -> cover_pebbling::Result<()> {
    let w5 = generate(&FamilySpec::Wheel(5))?;
    let c = Configuration::new(vec![0, 5, 0, 6, 0, 4]);
    let (cert, trace) = solve_wheel_traced(&w5, &c)?;
    println!(
        "wheel: {:?}, {} rim vertices covered by the sweep",
        trace.case, trace.covered_after_sweep
    );
    print!("{cert}");

    let k321 = generate(&FamilySpec::Multipartite(vec![3, 2, 1]))?;
    let c = Configuration::new(vec![0, 0, 0, 0, 17, 0]);
    println!("\nmultipartite(3,2,1):");
    print!("{}", solve_multipartite(&k321, &c)?);

    let fuse = generate(&FamilySpec::Fuse { n: 6, d: 3 })?;
    let c = Configuration::new(vec![9, 0, 4, 0, 12, 6]);
    let (cert, trace) = solve_rst(&fuse, &c)?;
    println!("\nfuse(6,3) recursion:\n{trace}");
    print!("{cert}");

    let marks = BinaryWeighting::from_vertices(6, [0, 3, 5]);
    let c = Configuration::new(vec![0, 0, 0, 12, 0, 5]);
    let (cert, steps) = solve_pigeonhole_traced(&fuse, &marks, &c)?;
    println!("\nmarked [{marks}]:");
    for s in &steps {
        println!("  {} -> {} delivers {}", s.source, s.target, s.delivered);
    }
    print!("{cert}");
    Ok(())
}
