//! Closed-form cover pebbling values and bounds.
//!
//! All arithmetic is checked; anything that would not fit reports
//! [`Error::Overflow`] instead of wrapping.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{check_sizes, Graph};

/// `4 s_1 + 2 (s_2 + ... + s_r) - 3`, the cover pebbling number of the
/// complete multipartite graph with nonincreasing class sizes `sizes`.
pub fn phi_multipartite(sizes: &[usize]) -> Result<u64> {
    check_sizes(sizes)?;
    let overflow = || Error::Overflow("phi_multipartite");
    let first = u64::try_from(sizes[0]).map_err(|_| overflow())?;
    let rest = sizes[1..]
        .iter()
        .try_fold(0u64, |acc, &s| acc.checked_add(u64::try_from(s).ok()?))
        .ok_or_else(overflow)?;
    first
        .checked_mul(4)
        .and_then(|a| a.checked_add(rest.checked_mul(2)?))
        .and_then(|a| a.checked_sub(3))
        .ok_or_else(overflow)
}

/// `4n - 5` for the wheel with `n >= 3` rim vertices.
pub fn gamma_wheel(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!("wheel needs n >= 3, got {n}")));
    }
    (n as u64)
        .checked_mul(4)
        .map(|x| x - 5)
        .ok_or(Error::Overflow("gamma_wheel"))
}

/// Sum over all vertices `u` of `2^dist(u, v)`: the number of pebbles a
/// stack on `v` needs to cover the graph.
pub fn s_vertex(g: &Graph, v: usize) -> Result<u64> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    (0..g.order()).try_fold(0u64, |acc, u| {
        1u64.checked_shl(g.dist(u, v))
            .filter(|_| g.dist(u, v) < 64)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("s_vertex"))
    })
}

/// `max_v s(v)`. On trees this is the cover pebbling number.
pub fn s_max(g: &Graph) -> Result<u64> {
    (0..g.order()).try_fold(0u64, |best, v| Ok(best.max(s_vertex(g, v)?)))
}

/// `2^d (n - d + 1) - 1`: every configuration at least this large on a
/// graph of order `n` and diameter `d` is cover-solvable.
pub fn diameter_bound(n: u64, d: u32) -> Result<u64> {
    let overflow = || Error::Overflow("diameter_bound");
    if n <= u64::from(d) {
        return Err(Error::InvalidSpec(format!(
            "a connected graph of order {n} cannot have diameter {d}"
        )));
    }
    let width = n - u64::from(d) + 1;
    1u64.checked_shl(d)
        .filter(|_| d < 64)
        .and_then(|p| p.checked_mul(width))
        .map(|x| x - 1)
        .ok_or_else(overflow)
}

/// `(|B| - 1) 2^d + 1`: permissible configurations at least this large are
/// solvable for the weighting. For `|B| = 0` the value is `1 - 2^d`, which
/// is nonpositive; with nothing marked every configuration is trivially
/// solvable.
pub fn weighted_bound(order_b: u64, d: u32) -> Result<i64> {
    let overflow = || Error::Overflow("weighted_bound");
    let power = 1i64
        .checked_shl(d)
        .filter(|_| d < 63)
        .ok_or_else(overflow)?;
    let marked = i64::try_from(order_b).map_err(|_| overflow())?;
    (marked - 1)
        .checked_mul(power)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(overflow)
}

/// Lower (stacked) and upper (diameter) bounds on the cover pebbling number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower_stacked: u64,
    pub upper_diameter: u64,
    pub per_vertex_s: Vec<u64>,
}

pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    let per_vertex_s = (0..g.order())
        .map(|v| s_vertex(g, v))
        .collect::<Result<Vec<u64>>>()?;
    let lower_stacked = per_vertex_s.iter().copied().max().unwrap_or(0);
    let upper_diameter = diameter_bound(g.order() as u64, g.diameter())?;
    Ok(BoundReport {
        lower_stacked,
        upper_diameter,
        per_vertex_s,
    })
}

/// All nonincreasing lists of positive integers summing to `total`
/// (integer partitions), largest first part first.
pub fn nonincreasing_lists(total: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(cap)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total > 0 {
        extend(total, total, &mut Vec::new(), &mut out);
    }
    out
}
