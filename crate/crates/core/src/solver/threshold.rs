//! Exhaustive threshold checks and the exact cover pebbling number.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use super::enumerate::{config_at, config_count, next_colex};
use super::search::{Solver, SolverOptions};
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::Graph;
use crate::pebble::{BinaryWeighting, Configuration};

const CHUNK: u64 = 64;
const WORKER_STACK: usize = 32 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    /// Every configuration of the size is solvable.
    Ok { checked: u128 },
    /// The colex-first unsolvable configuration and its enumeration index.
    Witness { config: Configuration, index: u128 },
}

impl Threshold {
    pub fn is_ok(&self) -> bool {
        matches!(self, Threshold::Ok { .. })
    }

    /// Configurations up to and including the decisive one. Independent of
    /// the worker count.
    pub fn configs_checked(&self) -> u128 {
        match self {
            Threshold::Ok { checked } => *checked,
            Threshold::Witness { index, .. } => index + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub gamma: u64,
    /// Unsolvable configuration of size `gamma - 1`.
    pub witness: Configuration,
    pub configs_checked: u128,
}

/// Checks every configuration of size `k` on `g` and returns either `Ok` or
/// the colex-first unsolvable configuration, whatever `workers` is.
pub fn verify_threshold(g: &Graph, k: u32, workers: usize) -> Result<Threshold> {
    verify_threshold_with(g, k, workers, None, SolverOptions::default())
}

pub fn verify_threshold_with(
    g: &Graph,
    k: u32,
    workers: usize,
    weighting: Option<&BinaryWeighting>,
    options: SolverOptions,
) -> Result<Threshold> {
    let n = g.order();
    let total = config_count(n, u64::from(k));
    let total = u64::try_from(total).map_err(|_| Error::Overflow("configuration count"))?;
    let chunks = total.div_ceil(CHUNK);
    let workers = workers.clamp(1, chunks.max(1) as usize);

    let next_chunk = AtomicU64::new(0);
    // Lowest index known to be unsolvable; also the cancellation signal for
    // every chunk starting above it.
    let best = AtomicU64::new(u64::MAX);
    let errors: Mutex<Vec<(u64, Error)>> = Mutex::new(Vec::new());

    let work = || {
        let mut solver = Solver::new(g, weighting, options);
        loop {
            let chunk = next_chunk.fetch_add(1, Ordering::Relaxed);
            let start = chunk * CHUNK;
            if start >= total || start >= best.load(Ordering::Acquire) {
                break;
            }
            let end = (start + CHUNK).min(total);
            let mut counts = config_at(n, k, u128::from(start)).into_counts();
            for index in start..end {
                if index >= best.load(Ordering::Acquire) {
                    break;
                }
                let config = Configuration::new(counts.clone());
                match solver.solve(&config) {
                    Ok(outcome) if !outcome.is_solvable() => {
                        best.fetch_min(index, Ordering::AcqRel);
                        break;
                    }
                    Ok(_) => {}
                    Err(e) => {
                        // Errors stop the run like a witness would.
                        best.fetch_min(index, Ordering::AcqRel);
                        errors.lock().expect("error list poisoned").push((index, e));
                        break;
                    }
                }
                next_colex(&mut counts);
            }
        }
    };

    if workers == 1 {
        work();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..workers {
                std::thread::Builder::new()
                    .stack_size(WORKER_STACK)
                    .spawn_scoped(scope, work)
                    .expect("failed to spawn verification worker");
            }
        });
    }

    let best = best.into_inner();
    let mut errors = errors.into_inner().expect("error list poisoned");
    errors.sort_by_key(|(index, _)| *index);
    if let Some((index, e)) = errors.into_iter().next() {
        if index == best {
            return Err(e);
        }
    }
    if best == u64::MAX {
        Ok(Threshold::Ok {
            checked: u128::from(total),
        })
    } else {
        Ok(Threshold::Witness {
            config: config_at(n, k, u128::from(best)),
            index: u128::from(best),
        })
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Exact cover pebbling number. Starts from `upper_hint` (default: the
/// diameter bound `2^d (n - d + 1) - 1`), doubles it until every
/// configuration of that size is solvable, then walks down while thresholds
/// remain ok. The walk is sound because solvable thresholds are monotone.
pub fn gamma_exact(g: &Graph, upper_hint: Option<u64>) -> Result<GammaResult> {
    gamma_exact_with(g, upper_hint, default_workers(), SolverOptions::default())
}

pub fn gamma_exact_with(
    g: &Graph,
    upper_hint: Option<u64>,
    workers: usize,
    options: SolverOptions,
) -> Result<GammaResult> {
    let mut hint = match upper_hint {
        Some(h) => h,
        None => formulas::diameter_bound(g.order() as u64, g.diameter())?,
    };
    let as_size = |k: u64| u32::try_from(k).map_err(|_| Error::Overflow("threshold size"));

    let mut checked = 0u128;
    loop {
        let t = verify_threshold_with(g, as_size(hint)?, workers, None, options)?;
        checked += t.configs_checked();
        if t.is_ok() {
            break;
        }
        hint = hint
            .checked_mul(2)
            .ok_or(Error::Overflow("threshold size"))?
            .max(1);
    }

    let mut gamma = hint;
    loop {
        // size 0 never covers a nonempty graph, so this terminates at gamma >= 1
        let t = verify_threshold_with(g, as_size(gamma - 1)?, workers, None, options)?;
        checked += t.configs_checked();
        match t {
            Threshold::Ok { .. } => gamma -= 1,
            Threshold::Witness { config, .. } => {
                return Ok(GammaResult {
                    gamma,
                    witness: config,
                    configs_checked: checked,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn wheel_three_thresholds() {
        let w3 = generate(&FamilySpec::Wheel(3)).unwrap();
        assert!(verify_threshold(&w3, 7, 2).unwrap().is_ok());
        match verify_threshold(&w3, 6, 2).unwrap() {
            Threshold::Witness { config, index } => {
                // stacked on the hub is colex-first and already unsolvable
                assert_eq!(config.counts(), &[6, 0, 0, 0]);
                assert_eq!(index, 0);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn k2_threshold_three() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            verify_threshold(&k2, 3, 1).unwrap(),
            Threshold::Ok { checked: 4 }
        );
    }

    #[test]
    fn gamma_small() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let r = gamma_exact(&k2, None).unwrap();
        assert_eq!((r.gamma, r.witness.counts()), (3, &[2u32, 0][..]));

        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(gamma_exact(&p3, None).unwrap().gamma, 7);

        let w4 = generate(&FamilySpec::Wheel(4)).unwrap();
        assert_eq!(gamma_exact(&w4, None).unwrap().gamma, 11);

        let k1 = Graph::new(1, &[]).unwrap();
        let r = gamma_exact(&k1, None).unwrap();
        assert_eq!((r.gamma, r.witness.counts()), (1, &[0u32][..]));
    }

    #[test]
    fn low_hint_is_doubled() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let r = gamma_exact_with(&p3, Some(2), 2, SolverOptions::default()).unwrap();
        assert_eq!(r.gamma, 7);
        assert_eq!(r.witness.size(), 6);
        let r = gamma_exact_with(&p3, Some(0), 1, SolverOptions::default()).unwrap();
        assert_eq!(r.gamma, 7);
    }

    #[test]
    fn worker_counts_agree() {
        let fuse = generate(&FamilySpec::Fuse { n: 5, d: 3 }).unwrap();
        for k in [10, 21, 22] {
            let one = verify_threshold(&fuse, k, 1).unwrap();
            assert_eq!(verify_threshold(&fuse, k, 2).unwrap(), one);
            assert_eq!(verify_threshold(&fuse, k, 8).unwrap(), one);
        }
    }
}
