//! The R/S/T recursion: spend at most `2^(m+1)` pebbles per round to grow a
//! set `T` of vertices that stay covered, then hand the rest of the graph to
//! the pigeonhole procedure with `T` unmarked.
//!
//! `R` holds occupied vertices still available as donors, `S` the empty
//! vertices, `T` the vertices already settled. Round `m` picks the closest
//! pair `(r, s)` in `R x S`; every vertex strictly between them on a
//! shortest path lies in `T`, so their distance is at most `m + 1`.

use std::collections::BTreeSet;
use std::fmt;

use super::pigeonhole::cover_marked;
use super::{check_length, MoveLog};
use crate::error::{Error, Result};
use crate::formulas::{diameter_bound, weighted_bound};
use crate::graph::Graph;
use crate::pebble::{BinaryWeighting, Certificate, Configuration};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RstAction {
    /// `r` held at most `2^(m+1)` pebbles and moved to `T`.
    Retired { r: usize, s: usize },
    /// `sent` pebbles left `r`, `delivered` reached `s`, which moved to `T`.
    Moved {
        r: usize,
        s: usize,
        sent: u32,
        delivered: u32,
    },
}

/// State at the start of round `m` and what the round did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RstStep {
    pub m: usize,
    pub r_set: Vec<usize>,
    pub s_set: Vec<usize>,
    pub t_set: Vec<usize>,
    pub action: RstAction,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RstTrace {
    pub steps: Vec<RstStep>,
    /// True when `S` emptied before the pigeonhole handoff.
    pub stopped_covered: bool,
    /// Weighting (marks on `R ∪ S`) and residual configuration (zero on `T`)
    /// given to the pigeonhole procedure.
    pub handoff: Option<(BinaryWeighting, Configuration)>,
}

impl fmt::Display for RstTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            match step.action {
                RstAction::Retired { r, s } => {
                    writeln!(f, "step {} retired r={r} s={s} transferred=0", step.m)?
                }
                RstAction::Moved {
                    r,
                    s,
                    sent,
                    delivered,
                } => writeln!(
                    f,
                    "step {} moved r={r} s={s} transferred={sent} delivered={delivered}",
                    step.m
                )?,
            }
        }
        match &self.handoff {
            Some((b, residual)) => writeln!(f, "handoff marks=[{b}] residual=[{residual}]"),
            None => writeln!(f, "covered"),
        }
    }
}

struct Partition {
    r: BTreeSet<usize>,
    s: BTreeSet<usize>,
    t: BTreeSet<usize>,
}

impl Partition {
    fn check(&self, m: usize, log: &MoveLog<'_>, bound: u64) -> Result<()> {
        let n = log.graph.order();
        let fail = |what: String| Err(Error::InternalAssertion(format!("round {m}: {what}")));
        if self.t.len() != m {
            return fail(format!("|T| = {}, expected {m}", self.t.len()));
        }
        let covered = self.r.len() + self.s.len() + self.t.len();
        if covered != n
            || self
                .r
                .union(&self.s)
                .chain(&self.t)
                .collect::<BTreeSet<_>>()
                .len()
                != n
        {
            return fail("R, S, T do not partition the vertex set".into());
        }
        for v in 0..n {
            let positive = log.count(v) > 0;
            if positive == self.s.contains(&v) {
                return fail(format!("vertex {v} has {} pebbles", log.count(v)));
            }
        }
        if self.r.is_empty() {
            return fail("R is empty".into());
        }
        let on_r: u64 = self.r.iter().map(|&v| u64::from(log.count(v))).sum();
        let floor = (bound as i128) - ((1i128 << (m + 1)) - 2);
        if i128::from(on_r) < floor {
            return fail(format!("R holds {on_r} pebbles, fewer than {floor}"));
        }
        Ok(())
    }
}

/// Cover-solves any configuration with at least `2^d (n - d + 1) - 1`
/// pebbles, returning the certificate and the round-by-round trace.
pub fn solve_rst(g: &Graph, c: &Configuration) -> Result<(Certificate, RstTrace)> {
    check_length(g, c)?;
    let n = g.order();
    let d = g.diameter();
    let bound = diameter_bound(n as u64, d)?;
    if c.size() < bound {
        return Err(Error::PreconditionViolated(format!(
            "configuration has {} pebbles, the diameter bound is {bound}",
            c.size()
        )));
    }

    let mut log = MoveLog::new(g, c);
    let mut parts = Partition {
        r: (0..n).filter(|&v| c.get(v) > 0).collect(),
        s: (0..n).filter(|&v| c.get(v) == 0).collect(),
        t: BTreeSet::new(),
    };
    let mut trace = RstTrace::default();

    let rounds = (d as usize).saturating_sub(1);
    for m in 0..rounds {
        if parts.s.is_empty() {
            trace.stopped_covered = true;
            return Ok((log.finish(None, c)?, trace));
        }
        parts.check(m, &log, bound)?;

        let (distance, r, s) = parts
            .r
            .iter()
            .flat_map(|&r| parts.s.iter().map(move |&s| (g.dist(r, s), r, s)))
            .min()
            .expect("R and S are nonempty");
        if distance as usize > m + 1 {
            return Err(Error::InternalAssertion(format!(
                "round {m}: closest R-S pair ({r}, {s}) is {distance} apart"
            )));
        }

        let budget = 1u32 << (m + 1);
        let step_sets = (
            parts.r.iter().copied().collect(),
            parts.s.iter().copied().collect(),
            parts.t.iter().copied().collect(),
        );
        let action = if log.count(r) <= budget {
            parts.r.remove(&r);
            parts.t.insert(r);
            RstAction::Retired { r, s }
        } else {
            let delivered = log.transfer(r, s, budget)?;
            parts.s.remove(&s);
            parts.t.insert(s);
            RstAction::Moved {
                r,
                s,
                sent: budget,
                delivered,
            }
        };
        trace.steps.push(RstStep {
            m,
            r_set: step_sets.0,
            s_set: step_sets.1,
            t_set: step_sets.2,
            action,
        });
    }

    if parts.s.is_empty() {
        trace.stopped_covered = true;
        return Ok((log.finish(None, c)?, trace));
    }
    parts.check(rounds, &log, bound)?;

    let mut marks = vec![false; n];
    let mut residual = vec![0u32; n];
    for &v in parts.r.iter().chain(&parts.s) {
        marks[v] = true;
        residual[v] = log.count(v);
    }
    let weighting = BinaryWeighting::new(marks.clone());
    let residual_config = Configuration::new(residual.clone());
    let needed = weighted_bound(weighting.order() as u64, d)?;
    if (residual_config.size() as i128) < i128::from(needed) {
        return Err(Error::InternalAssertion(format!(
            "handoff has {} pebbles, the weighting needs {needed}",
            residual_config.size()
        )));
    }
    trace.handoff = Some((weighting, residual_config));

    cover_marked(&mut log, &mut marks, &mut residual)?;
    Ok((log.finish(None, c)?, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::pebble::PebblingMove;

    #[test]
    fn path_three_hand_simulation() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let (cert, trace) = solve_rst(&p3, &Configuration::new(vec![7, 0, 0])).unwrap();
        let expected: Vec<PebblingMove> = [(0, 1), (0, 1), (0, 1), (1, 2)]
            .iter()
            .map(|&(u, v)| PebblingMove::new(u, v))
            .collect();
        assert_eq!(cert.moves, expected);
        assert_eq!(cert.validate(&p3, None).unwrap().counts(), &[1, 1, 1]);

        assert_eq!(trace.steps.len(), 1);
        assert_eq!(
            trace.steps[0].action,
            RstAction::Moved {
                r: 0,
                s: 1,
                sent: 2,
                delivered: 1
            }
        );
        let (b, residual) = trace.handoff.clone().unwrap();
        assert_eq!(b.marked().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(residual.counts(), &[5, 0, 0]);
        assert_eq!(
            trace.to_string(),
            "step 0 moved r=0 s=1 transferred=2 delivered=1\nhandoff marks=[1 0 1] residual=[5 0 0]\n"
        );
    }

    #[test]
    fn already_covered() {
        let fuse = generate(&FamilySpec::Fuse { n: 5, d: 3 }).unwrap();
        let (cert, trace) = solve_rst(&fuse, &Configuration::new(vec![19, 1, 1, 1, 1])).unwrap();
        assert!(cert.moves.is_empty());
        assert!(trace.stopped_covered && trace.steps.is_empty() && trace.handoff.is_none());
    }

    #[test]
    fn fuse_stack() {
        let fuse = generate(&FamilySpec::Fuse { n: 5, d: 3 }).unwrap();
        let c = Configuration::stacked(&fuse, 0, 23).unwrap();
        let (cert, _) = solve_rst(&fuse, &c).unwrap();
        cert.validate(&fuse, None).unwrap();
        let short = Configuration::stacked(&fuse, 0, 22).unwrap();
        assert!(matches!(
            solve_rst(&fuse, &short),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn retirement_recorded() {
        // two pebbles on the free end cannot pay for round 0
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let (cert, trace) = solve_rst(&p4, &Configuration::new(vec![2, 0, 0, 13])).unwrap();
        cert.validate(&p4, None).unwrap();
        assert_eq!(trace.steps[0].action, RstAction::Retired { r: 0, s: 1 });
    }

    #[test]
    fn single_vertex() {
        let k1 = Graph::new(1, &[]).unwrap();
        let (cert, trace) = solve_rst(&k1, &Configuration::new(vec![1])).unwrap();
        assert!(cert.moves.is_empty() && trace.stopped_covered);
        assert!(solve_rst(&k1, &Configuration::new(vec![0])).is_err());
    }
}
