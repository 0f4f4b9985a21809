use std::ops::Range;

use super::{check_length, MoveLog};
use crate::error::{Error, Result};
use crate::formulas::weighted_bound;
use crate::graph::Graph;
use crate::pebble::{BinaryWeighting, Certificate, Configuration};

/// One round of the pigeonhole procedure: `2^d` pebbles from `source` cover
/// `target`, which is then frozen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PigeonholeStep {
    pub target: usize,
    pub source: usize,
    pub delivered: u32,
    /// Index range of this round's moves in the certificate.
    pub moves: Range<usize>,
}

/// Covers every marked vertex of a permissible configuration holding at
/// least `(|B| - 1) 2^d + 1` pebbles.
pub fn solve_pigeonhole(g: &Graph, b: &BinaryWeighting, c: &Configuration) -> Result<Certificate> {
    solve_pigeonhole_traced(g, b, c).map(|(cert, _)| cert)
}

pub fn solve_pigeonhole_traced(
    g: &Graph,
    b: &BinaryWeighting,
    c: &Configuration,
) -> Result<(Certificate, Vec<PigeonholeStep>)> {
    check_length(g, c)?;
    if b.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: b.len(),
        });
    }
    if !c.is_permissible(b) {
        return Err(Error::PreconditionViolated(
            "configuration places pebbles on unmarked vertices".into(),
        ));
    }
    let bound = weighted_bound(b.order() as u64, g.diameter())?;
    if (c.size() as i128) < i128::from(bound) {
        return Err(Error::PreconditionViolated(format!(
            "configuration has {} pebbles, the weighting needs {bound}",
            c.size()
        )));
    }

    let mut log = MoveLog::new(g, c);
    let mut marks = b.marks().to_vec();
    let mut residual = c.counts().to_vec();
    let steps = cover_marked(&mut log, &mut marks, &mut residual)?;
    Ok((log.finish(Some(b), c)?, steps))
}

/// The pigeonhole loop. `residual` is the bookkeeping configuration the
/// decisions are made on: pebbles the procedure has already committed
/// (frozen targets, and anything the caller zeroed out) are excluded from
/// it, while `log` tracks the real board.
pub(super) fn cover_marked(
    log: &mut MoveLog<'_>,
    marks: &mut [bool],
    residual: &mut [u32],
) -> Result<Vec<PigeonholeStep>> {
    let d = log.graph.diameter();
    let quota = 1u32
        .checked_shl(d)
        .filter(|_| d < 31)
        .ok_or(Error::Overflow("pigeonhole transfer size"))?;
    let mut frozen: Vec<(usize, u32)> = Vec::new();
    let mut steps = Vec::new();

    while let Some(target) = (0..marks.len()).find(|&v| marks[v] && residual[v] == 0) {
        let Some(source) = (0..residual.len()).find(|&v| residual[v] > quota) else {
            return Err(Error::InternalAssertion(format!(
                "no vertex holds more than {quota} pebbles while vertex {target} is uncovered"
            )));
        };
        let first_move = log.moves.len();
        let delivered = log.transfer(source, target, quota)?;
        residual[source] -= quota;
        marks[target] = false;

        // Earlier targets must keep what they were left with.
        for &(v, held) in &frozen {
            if log.count(v) < held {
                return Err(Error::InternalAssertion(format!(
                    "frozen vertex {v} dropped from {held} to {}",
                    log.count(v)
                )));
            }
        }
        frozen.push((target, log.count(target)));
        steps.push(PigeonholeStep {
            target,
            source,
            delivered,
            moves: first_move..log.moves.len(),
        });
    }
    Ok(steps)
}
