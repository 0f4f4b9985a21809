//! Cover pebbling on small graphs.
//!
//! A pebbling move takes two pebbles off a vertex and puts one on a
//! neighbor. A configuration is cover-solvable when some sequence of moves
//! leaves a pebble on every vertex at once, and the cover pebbling number
//! `γ(G)` is the least size at which every configuration is.
//!
//! - [`graph`]: graphs with their hop metric, and family generators
//! - [`pebble`]: configurations, weightings, moves and certificates
//! - [`solver`]: exhaustive solvability search and exact `γ(G)`
//! - [`formulas`]: closed forms and bounds
//! - [`constructive`]: threshold cover-solving procedures with certificates
//! - [`harness`]: text formats, verification reports and the CLI
//!
//! ```
//! use cover_pebbling::solver::gamma_exact;
//! use cover_pebbling::{generate, FamilySpec};
//!
//! let w4 = generate(&FamilySpec::Wheel(4))?;
//! let r = gamma_exact(&w4, None)?;
//! assert_eq!(r.gamma, 11);
//! assert_eq!(r.witness.to_string(), "0 10 0 0 0");
//! # Ok::<(), cover_pebbling::Error>(())
//! ```

pub mod constructive;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod pebble;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{generate, FamilySpec, Graph};
pub use pebble::{validate_certificate, BinaryWeighting, Certificate, Configuration, PebblingMove};
