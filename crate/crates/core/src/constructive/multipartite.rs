use super::{check_length, MoveLog};
use crate::error::{Error, Result};
use crate::formulas::phi_multipartite;
use crate::graph::Graph;
use crate::pebble::{Certificate, Configuration};

/// Recovers the vertex classes of a complete multipartite graph: two
/// distinct vertices share a class iff they are not adjacent. Classes are
/// numbered by their lowest vertex.
pub fn infer_classes(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    let classes: Vec<usize> = (0..n)
        .map(|u| {
            (0..=u)
                .find(|&v| v == u || !g.is_adjacent(u, v))
                .unwrap_or(u)
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if g.is_adjacent(u, v) == (classes[u] == classes[v]) {
                return Err(Error::InvalidSpec(
                    "graph is not complete multipartite".into(),
                ));
            }
        }
    }
    Ok(classes)
}

/// Follows the induction on the order of the graph. While the live subgraph
/// is not a star:
///
/// - a vertex holding one or two pebbles is set aside as done;
/// - otherwise an empty vertex is covered from an occupied vertex of another
///   class and set aside;
/// - otherwise every pebble sits in that empty vertex's class, and one of
///   them covers a vertex of another class, which is set aside.
///
/// The star that remains is finished by pushing surplus pairs from the
/// leaves into the center and then feeding the empty leaves from it.
pub fn solve_multipartite(g: &Graph, c: &Configuration) -> Result<Certificate> {
    check_length(g, c)?;
    let classes = infer_classes(g)?;
    let n = g.order();
    let mut sizes = vec![0usize; n];
    for &class in &classes {
        sizes[class] += 1;
    }
    sizes.retain(|&s| s > 0);
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let threshold = phi_multipartite(&sizes)?;
    if c.size() < threshold {
        return Err(Error::PreconditionViolated(format!(
            "configuration has {} pebbles, the multipartite graph needs {threshold}",
            c.size()
        )));
    }

    let mut log = MoveLog::new(g, c);
    let mut alive = vec![true; n];
    loop {
        let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        if live.iter().all(|&v| log.count(v) > 0) {
            break;
        }
        if let Some((center, leaves)) = as_star(&live, &classes) {
            finish_star(&mut log, center, &leaves)?;
            break;
        }

        if let Some(&v) = live.iter().find(|&&v| matches!(log.count(v), 1 | 2)) {
            alive[v] = false;
            continue;
        }
        let empty = *live
            .iter()
            .find(|&&v| log.count(v) == 0)
            .expect("some live vertex is uncovered");
        let donor = live
            .iter()
            .copied()
            .find(|&v| classes[v] != classes[empty] && log.count(v) > 0);
        match donor {
            Some(donor) => {
                log.push(donor, empty)?;
                alive[empty] = false;
            }
            None => {
                let source = live
                    .iter()
                    .copied()
                    .find(|&v| classes[v] == classes[empty] && log.count(v) >= 2)
                    .ok_or_else(|| {
                        Error::StrategyIncomplete("no occupied vertex left to move from".into())
                    })?;
                let receiver = live
                    .iter()
                    .copied()
                    .find(|&v| classes[v] != classes[empty])
                    .ok_or_else(|| {
                        Error::StrategyIncomplete("live subgraph has a single class".into())
                    })?;
                log.push(source, receiver)?;
                alive[receiver] = false;
            }
        }
    }
    log.finish(None, c)
}

/// `Some((center, leaves))` when the live vertices form two classes, one of
/// them a single vertex (this includes `K_2`).
fn as_star(live: &[usize], classes: &[usize]) -> Option<(usize, Vec<usize>)> {
    let first = classes[live[0]];
    let (a, b): (Vec<usize>, Vec<usize>) = live.iter().partition(|&&v| classes[v] == first);
    if b.is_empty() || b.iter().any(|&v| classes[v] != classes[b[0]]) {
        return None;
    }
    match (a.len(), b.len()) {
        (1, _) => Some((a[0], b)),
        (_, 1) => Some((b[0], a)),
        _ => None,
    }
}

fn finish_star(log: &mut MoveLog<'_>, center: usize, leaves: &[usize]) -> Result<()> {
    for &leaf in leaves {
        while log.count(leaf) >= 3 {
            log.push(leaf, center)?;
        }
    }
    for &leaf in leaves {
        if log.count(leaf) == 0 {
            if log.count(center) < 3 {
                return Err(Error::StrategyIncomplete(format!(
                    "star center {center} holds {} pebbles with leaf {leaf} uncovered",
                    log.count(center)
                )));
            }
            log.push(center, leaf)?;
        }
    }
    if log.count(center) == 0 {
        return Err(Error::StrategyIncomplete(format!(
            "star center {center} left empty"
        )));
    }
    Ok(())
}
