//! Builds each graph family and prints its order, diameter and edge list.
//!
//! ```text
//! cargo run --example families
//! ```

use cover_pebbling::{generate, FamilySpec};

fn main() -> cover_pebbling::Result<()> {
    let specs = [
        FamilySpec::Path(4),
        FamilySpec::Star(3),
        FamilySpec::Wheel(5),
        FamilySpec::Multipartite(vec![3, 2, 1]),
        FamilySpec::Fuse { n: 6, d: 3 },
    ];
    for spec in &specs {
        let g = generate(spec)?;
        println!(
            "{spec}: {} vertices, {} edges, diameter {}, tree: {}",
            g.order(),
            g.edges().len(),
            g.diameter(),
            g.is_tree()
        );
    }

    // The text format round-trips, so generated graphs can be saved and
    // handed back to the command line tool.
    let fuse = generate(&FamilySpec::Fuse { n: 6, d: 3 })?;
    let text = fuse.to_text();
    print!("\n{text}");
    assert_eq!(cover_pebbling::Graph::from_text(&text)?, fuse);
    Ok(())
}
