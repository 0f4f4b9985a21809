use super::{check_length, MoveLog};
use crate::error::{Error, Result};
use crate::formulas::gamma_wheel;
use crate::graph::{generate, FamilySpec, Graph};
use crate::pebble::{Certificate, Configuration};

const HUB: usize = 0;

/// Which branch of the hub strategy applied, by the number `k` of rim
/// vertices covered after the neighbor sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WheelCase {
    /// `k = 0`: every pebble is on the hub.
    AllOnHub,
    /// `k` is 1 or 2.
    FewCovered,
    /// `k >= 3`.
    ManyCovered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WheelTrace {
    pub covered_after_sweep: usize,
    pub case: WheelCase,
}

pub fn solve_wheel(g: &Graph, c: &Configuration) -> Result<Certificate> {
    solve_wheel_traced(g, c).map(|(cert, _)| cert)
}

/// Hub strategy on `W_n` (hub 0, rim `1..=n`):
///
/// 1. sweep the rim in increasing order; a rim vertex with at least three
///    pebbles covers each empty rim neighbor while it keeps one;
/// 2. push surplus pairs from rim vertices to the hub;
/// 3. cover the remaining rim vertices from the hub, which keeps one.
pub fn solve_wheel_traced(g: &Graph, c: &Configuration) -> Result<(Certificate, WheelTrace)> {
    check_length(g, c)?;
    let n = g.order().saturating_sub(1);
    if n < 3 || generate(&FamilySpec::Wheel(n))?.edges() != g.edges() {
        return Err(Error::InvalidSpec(
            "graph is not a wheel in the hub-0 labeling".into(),
        ));
    }
    let threshold = gamma_wheel(n)?;
    if c.size() < threshold {
        return Err(Error::PreconditionViolated(format!(
            "configuration has {} pebbles, the wheel needs {threshold}",
            c.size()
        )));
    }

    let mut log = MoveLog::new(g, c);
    let prev = |v: usize| if v == 1 { n } else { v - 1 };
    let next = |v: usize| v % n + 1;

    for w in 1..=n {
        let mut neighbors = [prev(w), next(w)];
        neighbors.sort_unstable();
        for u in neighbors {
            if log.count(u) == 0 && log.count(w) >= 3 {
                log.push(w, u)?;
            }
        }
    }
    let k = (1..=n).filter(|&v| log.count(v) > 0).count();
    let case = match k {
        0 => WheelCase::AllOnHub,
        1 | 2 => WheelCase::FewCovered,
        _ => WheelCase::ManyCovered,
    };

    for w in 1..=n {
        while log.count(w) >= 3 {
            log.push(w, HUB)?;
        }
    }
    for v in 1..=n {
        if log.count(v) == 0 {
            if log.count(HUB) < 3 {
                return Err(Error::StrategyIncomplete(format!(
                    "hub holds {} pebbles with rim vertex {v} uncovered ({case:?}, k={k})",
                    log.count(HUB)
                )));
            }
            log.push(HUB, v)?;
        }
    }
    if log.count(HUB) == 0 {
        return Err(Error::StrategyIncomplete(format!(
            "hub left empty ({case:?}, k={k})"
        )));
    }

    let trace = WheelTrace {
        covered_after_sweep: k,
        case,
    };
    Ok((log.finish(None, c)?, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w3_outer_stack() {
        let w3 = generate(&FamilySpec::Wheel(3)).unwrap();
        let c = Configuration::stacked(&w3, 1, 7).unwrap();
        let cert = solve_wheel(&w3, &c).unwrap();
        assert!(cert.validate(&w3, None).unwrap().is_covered(None));
    }

    #[test]
    fn w4_all_on_hub() {
        let w4 = generate(&FamilySpec::Wheel(4)).unwrap();
        let (cert, trace) =
            solve_wheel_traced(&w4, &Configuration::new(vec![11, 0, 0, 0, 0])).unwrap();
        assert_eq!(trace.case, WheelCase::AllOnHub);
        assert_eq!(cert.moves.len(), 4);
        assert_eq!(cert.validate(&w4, None).unwrap().counts(), &[3, 1, 1, 1, 1]);
    }

    #[test]
    fn already_covered() {
        let w3 = generate(&FamilySpec::Wheel(3)).unwrap();
        let cert = solve_wheel(&w3, &Configuration::new(vec![1, 2, 2, 2])).unwrap();
        assert!(cert.moves.is_empty());
    }

    #[test]
    fn rejects_non_wheels_and_short_configs() {
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert!(matches!(
            solve_wheel(&p4, &Configuration::new(vec![20, 0, 0, 0])),
            Err(Error::InvalidSpec(_))
        ));
        let w4 = generate(&FamilySpec::Wheel(4)).unwrap();
        assert!(matches!(
            solve_wheel(&w4, &Configuration::new(vec![10, 0, 0, 0, 0])),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
