//! Cover-solving procedures that work above a known threshold: the
//! pigeonhole procedure for weighted targets, the R/S/T recursion behind the
//! diameter bound, the wheel hub strategy and the multipartite induction.
//!
//! Each procedure emits a [`Certificate`](crate::pebble::Certificate) and
//! replays it before returning, so a returned certificate is always valid.

mod multipartite;
mod pigeonhole;
mod rst;
mod wheel;

pub use multipartite::{infer_classes, solve_multipartite};
pub use pigeonhole::{solve_pigeonhole, solve_pigeonhole_traced, PigeonholeStep};
pub use rst::{solve_rst, RstAction, RstStep, RstTrace};
pub use wheel::{solve_wheel, solve_wheel_traced, WheelCase, WheelTrace};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebble::{BinaryWeighting, Certificate, Configuration, PebblingMove};

/// Records and applies unit moves, turning any illegal move into an
/// internal assertion failure.
struct MoveLog<'g> {
    graph: &'g Graph,
    current: Configuration,
    moves: Vec<PebblingMove>,
}

impl<'g> MoveLog<'g> {
    fn new(graph: &'g Graph, initial: &Configuration) -> Self {
        MoveLog {
            graph,
            current: initial.clone(),
            moves: Vec::new(),
        }
    }

    fn count(&self, v: usize) -> u32 {
        self.current.get(v)
    }

    fn push(&mut self, from: usize, to: usize) -> Result<()> {
        let mv = PebblingMove::new(from, to);
        self.current.apply(self.graph, mv).map_err(|e| {
            Error::InternalAssertion(format!("procedure produced illegal move {mv}: {e}"))
        })?;
        self.moves.push(mv);
        Ok(())
    }

    /// Sends `amount` pebbles from `from` along the least shortest path to
    /// `to`, halving per edge. `amount` must be divisible by 2^dist.
    /// Returns the number delivered.
    fn transfer(&mut self, from: usize, to: usize, amount: u32) -> Result<u32> {
        let path = self.graph.shortest_path(from, to);
        let hops = path.len() as u32 - 1;
        if hops >= 32 || !amount.is_multiple_of(1 << hops) || amount >> hops == 0 {
            return Err(Error::InternalAssertion(format!(
                "cannot send {amount} pebbles over {hops} edges"
            )));
        }
        let mut carried = amount;
        for hop in path.windows(2) {
            for _ in 0..carried / 2 {
                self.push(hop[0], hop[1])?;
            }
            carried /= 2;
        }
        Ok(carried)
    }

    fn finish(
        self,
        weighting: Option<&BinaryWeighting>,
        initial: &Configuration,
    ) -> Result<Certificate> {
        let cert = Certificate::new(initial.clone(), self.moves);
        cert.validate(self.graph, weighting).map_err(|e| {
            Error::InternalAssertion(format!("emitted certificate does not validate: {e}"))
        })?;
        Ok(cert)
    }
}

fn check_length(g: &Graph, c: &Configuration) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: c.len(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn transfer_halves_per_edge() {
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let start = Configuration::new(vec![9, 0, 0, 0]);
        let mut log = MoveLog::new(&p4, &start);
        assert_eq!(log.transfer(0, 3, 8).unwrap(), 1);
        assert_eq!(log.current.counts(), &[1, 0, 0, 1]);
        assert_eq!(log.moves.len(), 4 + 2 + 1);
        assert!(matches!(
            log.transfer(0, 3, 4),
            Err(Error::InternalAssertion(_))
        ));
    }
}
