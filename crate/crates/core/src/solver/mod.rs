//! Exact cover-solvability decisions and cover pebbling numbers by
//! exhaustive search.

mod enumerate;
mod search;
mod threshold;

pub use enumerate::{
    binomial, config_at, config_count, config_rank, enumerate_configs, next_colex, random_config,
    Compositions,
};
pub use search::{solve, solve_with, Decision, Pruning, SolveOutcome, Solver, SolverOptions};
pub use threshold::{
    default_workers, gamma_exact, gamma_exact_with, verify_threshold, verify_threshold_with,
    GammaResult, Threshold,
};
