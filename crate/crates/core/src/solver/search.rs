//! Depth-first cover-solvability search over the configuration graph.
//!
//! Every move removes one pebble from the board, so the states reachable from
//! a configuration form a finite DAG ordered by size. A state is recorded as
//! failed only after all of its successors have failed, which makes the
//! failure table valid across searches that share a graph and weighting.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebble::{BinaryWeighting, Certificate, Configuration, PebblingMove};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pruning {
    /// Reject states holding fewer pebbles than uncovered marked vertices.
    Baseline,
    /// Reject states that cannot keep one pebble on every marked vertex while
    /// paying at least one pebble per uncovered marked vertex.
    #[default]
    Counting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolverOptions {
    /// Maximum number of expanded states per `solve` call.
    pub budget: Option<u64>,
    pub pruning: Pruning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Solvable,
    Unsolvable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub decision: Decision,
    /// Present exactly when the decision is `Solvable`.
    pub certificate: Option<Certificate>,
    pub states_explored: u64,
}

impl SolveOutcome {
    pub fn is_solvable(&self) -> bool {
        self.decision == Decision::Solvable
    }
}

/// Reusable search context for one graph and one target weighting. The
/// failure table persists between calls.
#[derive(Debug)]
pub struct Solver<'g> {
    graph: &'g Graph,
    marks: Vec<bool>,
    marked_count: u64,
    options: SolverOptions,
    failed: HashSet<Box<[u32]>>,
    explored: u64,
}

impl<'g> Solver<'g> {
    pub fn new(
        graph: &'g Graph,
        weighting: Option<&BinaryWeighting>,
        options: SolverOptions,
    ) -> Self {
        let marks = match weighting {
            Some(b) => {
                assert_eq!(
                    b.len(),
                    graph.order(),
                    "weighting length must match graph order"
                );
                b.marks().to_vec()
            }
            None => vec![true; graph.order()],
        };
        let marked_count = marks.iter().filter(|&&m| m).count() as u64;
        Solver {
            graph,
            marks,
            marked_count,
            options,
            failed: HashSet::new(),
            explored: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Number of states currently recorded as unsolvable.
    pub fn memo_len(&self) -> usize {
        self.failed.len()
    }

    pub fn solve(&mut self, config: &Configuration) -> Result<SolveOutcome> {
        if config.len() != self.graph.order() {
            return Err(Error::LengthMismatch {
                expected: self.graph.order(),
                found: config.len(),
            });
        }
        self.explored = 0;
        let mut state = config.counts().to_vec();
        let mut path = Vec::new();
        let found = self.search(&mut state, config.size(), &mut path)?;
        let (decision, certificate) = if found {
            (
                Decision::Solvable,
                Some(Certificate::new(config.clone(), path)),
            )
        } else {
            (Decision::Unsolvable, None)
        };
        Ok(SolveOutcome {
            decision,
            certificate,
            states_explored: self.explored,
        })
    }

    fn search(
        &mut self,
        state: &mut [u32],
        size: u64,
        path: &mut Vec<PebblingMove>,
    ) -> Result<bool> {
        let uncovered = state
            .iter()
            .zip(&self.marks)
            .filter(|&(&c, &m)| m && c == 0)
            .count() as u64;
        if uncovered == 0 {
            return Ok(true);
        }
        let hopeless = match self.options.pruning {
            Pruning::Baseline => size < uncovered,
            Pruning::Counting => size < self.marked_count + uncovered,
        };
        if hopeless || self.failed.contains(&*state) {
            return Ok(false);
        }
        self.explored += 1;
        if let Some(budget) = self.options.budget {
            if self.explored > budget {
                return Err(Error::BudgetExceeded {
                    states: self.explored,
                });
            }
        }

        for mv in self.ordered_moves(state) {
            state[mv.from] -= 2;
            state[mv.to] += 1;
            path.push(mv);
            let found = self.search(state, size - 1, path);
            state[mv.from] += 2;
            state[mv.to] -= 1;
            if found? {
                return Ok(true);
            }
            path.pop();
        }
        self.failed.insert(state.to_vec().into_boxed_slice());
        Ok(false)
    }

    /// Legal moves, largest pile first, then toward the nearest uncovered
    /// marked vertex.
    fn ordered_moves(&self, state: &[u32]) -> Vec<PebblingMove> {
        let g = self.graph;
        let targets: Vec<usize> = (0..state.len())
            .filter(|&v| self.marks[v] && state[v] == 0)
            .collect();
        let nearest = |v: usize| targets.iter().map(|&t| g.dist(v, t)).min().unwrap_or(0);
        let mut keyed: Vec<(std::cmp::Reverse<u32>, u32, PebblingMove)> = Vec::new();
        for (from, &count) in state.iter().enumerate() {
            if count < 2 {
                continue;
            }
            for &to in g.neighbors(from) {
                keyed.push((
                    std::cmp::Reverse(count),
                    nearest(to),
                    PebblingMove::new(from, to),
                ));
            }
        }
        keyed.sort_unstable();
        keyed.into_iter().map(|(_, _, mv)| mv).collect()
    }
}

/// Decides whether `config` can reach a configuration covering every vertex
/// (or every marked vertex) and returns a certificate when it can.
pub fn solve(
    g: &Graph,
    config: &Configuration,
    weighting: Option<&BinaryWeighting>,
) -> Result<SolveOutcome> {
    solve_with(g, config, weighting, SolverOptions::default())
}

pub fn solve_with(
    g: &Graph,
    config: &Configuration,
    weighting: Option<&BinaryWeighting>,
    options: SolverOptions,
) -> Result<SolveOutcome> {
    if let Some(b) = weighting {
        if b.len() != g.order() {
            return Err(Error::LengthMismatch {
                expected: g.order(),
                found: b.len(),
            });
        }
    }
    Solver::new(g, weighting, options).solve(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn k2_examples() {
        let out = solve(&k2(), &Configuration::new(vec![2, 0]), None).unwrap();
        assert_eq!(out.decision, Decision::Unsolvable);
        assert!(out.certificate.is_none());

        let out = solve(&k2(), &Configuration::new(vec![3, 0]), None).unwrap();
        assert!(out.is_solvable());
        assert_eq!(
            out.certificate.unwrap().moves,
            vec![PebblingMove::new(0, 1)]
        );
    }

    #[test]
    fn wheel_three_stack_of_six_fails() {
        let w3 = generate(&FamilySpec::Wheel(3)).unwrap();
        let c = Configuration::stacked(&w3, 1, 6).unwrap();
        assert!(!solve(&w3, &c, None).unwrap().is_solvable());
        let c = Configuration::stacked(&w3, 1, 7).unwrap();
        let out = solve(&w3, &c, None).unwrap();
        out.certificate.unwrap().validate(&w3, None).unwrap();
    }

    #[test]
    fn weighted_target() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let b = BinaryWeighting::from_vertices(3, [0, 2]);
        let c = Configuration::new(vec![5, 0, 0]);
        let out = solve(&p3, &c, Some(&b)).unwrap();
        let fin = out.certificate.unwrap().validate(&p3, Some(&b)).unwrap();
        assert!(fin.get(0) >= 1 && fin.get(2) >= 1);
        assert!(!solve(&p3, &Configuration::new(vec![4, 0, 0]), Some(&b))
            .unwrap()
            .is_solvable());
    }

    #[test]
    fn budget_is_reported() {
        let fuse = generate(&FamilySpec::Fuse { n: 5, d: 3 }).unwrap();
        let c = Configuration::stacked(&fuse, 0, 22).unwrap();
        let options = SolverOptions {
            budget: Some(3),
            ..Default::default()
        };
        assert!(matches!(
            solve_with(&fuse, &c, None, options),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            solve(&k2(), &Configuration::new(vec![3]), None),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
