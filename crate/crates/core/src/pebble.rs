//! Configurations, binary weightings, pebbling moves and move certificates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pebble counts per vertex. Paired with a graph by length only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    counts: Vec<u32>,
    size: u64,
}

impl Configuration {
    pub fn new(counts: Vec<u32>) -> Self {
        let size = counts.iter().map(|&c| u64::from(c)).sum();
        Configuration { counts, size }
    }

    pub fn zeros(n: usize) -> Self {
        Configuration::new(vec![0; n])
    }

    /// `k` pebbles on `v`, none elsewhere.
    pub fn stacked(g: &Graph, v: usize, k: u32) -> Result<Self> {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        let mut counts = vec![0; g.order()];
        counts[v] = k;
        Ok(Configuration::new(counts))
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<u32> {
        self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of pebbles.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    /// True when every vertex, or every marked vertex if `weighting` is
    /// given, holds at least one pebble.
    pub fn is_covered(&self, weighting: Option<&BinaryWeighting>) -> bool {
        self.uncovered(weighting).next().is_none()
    }

    /// Vertices that still need a pebble.
    pub fn uncovered<'a>(
        &'a self,
        weighting: Option<&'a BinaryWeighting>,
    ) -> impl Iterator<Item = usize> + 'a {
        self.counts
            .iter()
            .enumerate()
            .filter(move |&(v, &c)| c == 0 && weighting.is_none_or(|b| b.is_marked(v)))
            .map(|(v, _)| v)
    }

    /// True when pebbles sit only on marked vertices.
    pub fn is_permissible(&self, weighting: &BinaryWeighting) -> bool {
        self.counts
            .iter()
            .zip(weighting.marks())
            .all(|(&c, &marked)| marked || c == 0)
    }

    /// Applies one pebbling move in place.
    pub fn apply(&mut self, g: &Graph, mv: PebblingMove) -> Result<()> {
        let PebblingMove { from, to } = mv;
        if !g.is_adjacent(from, to) {
            return Err(Error::NonAdjacentMove { from, to });
        }
        let available = self.counts[from];
        if available < 2 {
            return Err(Error::InsufficientPebbles {
                vertex: from,
                available,
            });
        }
        self.counts[from] -= 2;
        self.counts[to] += 1;
        self.size -= 1;
        Ok(())
    }

    /// Returns the configuration after one pebbling move.
    pub fn apply_move(&self, g: &Graph, mv: PebblingMove) -> Result<Self> {
        let mut next = self.clone();
        next.apply(g, mv)?;
        Ok(next)
    }

    /// Parses one line of whitespace-separated counts and checks its
    /// length against `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let config: Configuration = text.parse()?;
        if config.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: config.len(),
            });
        }
        Ok(config)
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let line = s
            .lines()
            .enumerate()
            .find(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let Some((index, line)) = line else {
            return Err(Error::Parse {
                line: 1,
                msg: "empty configuration".into(),
            });
        };
        let counts = line
            .split_whitespace()
            .map(|field| {
                field.parse::<u32>().map_err(|_| Error::Parse {
                    line: index + 1,
                    msg: format!("not a pebble count: {field:?}"),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Configuration::new(counts))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// 0/1 marks per vertex; only marked vertices need to be covered.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryWeighting {
    marks: Vec<bool>,
    order: usize,
}

impl BinaryWeighting {
    pub fn new(marks: Vec<bool>) -> Self {
        let order = marks.iter().filter(|&&m| m).count();
        BinaryWeighting { marks, order }
    }

    pub fn all_ones(n: usize) -> Self {
        BinaryWeighting::new(vec![true; n])
    }

    /// Marks exactly the listed vertices.
    pub fn from_vertices(n: usize, marked: impl IntoIterator<Item = usize>) -> Self {
        let mut marks = vec![false; n];
        for v in marked {
            marks[v] = true;
        }
        BinaryWeighting::new(marks)
    }

    pub fn marks(&self) -> &[bool] {
        &self.marks
    }

    pub fn is_marked(&self, v: usize) -> bool {
        self.marks[v]
    }

    /// Number of marked vertices, `|B|`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn marked(&self) -> impl Iterator<Item = usize> + '_ {
        self.marks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(v, _)| v)
    }

    /// Parses a line of `0`/`1` entries, checking its length against `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let marks = text
            .split_whitespace()
            .map(|field| match field {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(Error::Parse {
                    line: 1,
                    msg: format!("weighting entries must be 0 or 1, found {other:?}"),
                }),
            })
            .collect::<Result<Vec<bool>>>()?;
        if marks.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: marks.len(),
            });
        }
        Ok(BinaryWeighting::new(marks))
    }
}

impl fmt::Display for BinaryWeighting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .marks
            .iter()
            .map(|&m| if m { "1" } else { "0" })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Remove two pebbles from `from`, add one to the adjacent `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PebblingMove {
    pub from: usize,
    pub to: usize,
}

impl PebblingMove {
    pub fn new(from: usize, to: usize) -> Self {
        PebblingMove { from, to }
    }
}

impl fmt::Display for PebblingMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// A starting configuration and the unit moves that witness its
/// cover-solvability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub initial: Configuration,
    pub moves: Vec<PebblingMove>,
}

impl Certificate {
    pub fn new(initial: Configuration, moves: Vec<PebblingMove>) -> Self {
        Certificate { initial, moves }
    }

    /// Replays the moves and checks the end state covers every (marked)
    /// vertex. Returns the final configuration.
    pub fn validate(
        &self,
        g: &Graph,
        weighting: Option<&BinaryWeighting>,
    ) -> Result<Configuration> {
        validate_certificate(g, self, weighting)
    }

    /// `initial: ...` followed by one `from to` line per move.
    pub fn to_text(&self) -> String {
        let mut out = format!("initial: {}\n", self.initial);
        for mv in &self.moves {
            out.push_str(&format!("{} {}\n", mv.from, mv.to));
        }
        out
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn validate_certificate(
    g: &Graph,
    cert: &Certificate,
    weighting: Option<&BinaryWeighting>,
) -> Result<Configuration> {
    if cert.initial.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: cert.initial.len(),
        });
    }
    if let Some(b) = weighting {
        if b.len() != g.order() {
            return Err(Error::LengthMismatch {
                expected: g.order(),
                found: b.len(),
            });
        }
    }
    let mut current = cert.initial.clone();
    for (index, &mv) in cert.moves.iter().enumerate() {
        if mv.from >= g.order() || mv.to >= g.order() {
            return Err(Error::IllegalMoveAt {
                index,
                mv,
                reason: Box::new(Error::NonAdjacentMove {
                    from: mv.from,
                    to: mv.to,
                }),
            });
        }
        current
            .apply(g, mv)
            .map_err(|reason| Error::IllegalMoveAt {
                index,
                mv,
                reason: Box::new(reason),
            })?;
    }
    let uncovered: Vec<usize> = current.uncovered(weighting).collect();
    if !uncovered.is_empty() {
        return Err(Error::NotCoveredAtEnd { uncovered });
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cfg(counts: &[u32]) -> Configuration {
        Configuration::new(counts.to_vec())
    }

    #[test]
    fn apply_move_examples() {
        let g = k2();
        assert_eq!(
            cfg(&[3, 0])
                .apply_move(&g, PebblingMove::new(0, 1))
                .unwrap(),
            cfg(&[1, 1])
        );
        assert_eq!(
            cfg(&[1, 0]).apply_move(&g, PebblingMove::new(0, 1)),
            Err(Error::InsufficientPebbles {
                vertex: 0,
                available: 1
            })
        );
        assert_eq!(
            cfg(&[4, 0, 0]).apply_move(&p3(), PebblingMove::new(0, 2)),
            Err(Error::NonAdjacentMove { from: 0, to: 2 })
        );
    }

    #[test]
    fn covered_and_permissible() {
        let b10 = BinaryWeighting::new(vec![true, false]);
        let b11 = BinaryWeighting::all_ones(2);
        assert!(cfg(&[1, 1, 1]).is_covered(None));
        assert!(cfg(&[5, 0]).is_covered(Some(&b10)));
        assert!(!cfg(&[0, 3]).is_covered(Some(&b11)));

        assert!(cfg(&[3, 0]).is_permissible(&b10));
        assert!(!cfg(&[3, 1]).is_permissible(&b10));
        assert!(cfg(&[0, 0]).is_permissible(&b10));
        assert!(cfg(&[0, 0]).is_permissible(&BinaryWeighting::new(vec![false, false])));
    }

    #[test]
    fn certificate_examples() {
        let g = k2();
        let good = Certificate::new(cfg(&[3, 0]), vec![PebblingMove::new(0, 1)]);
        assert_eq!(good.validate(&g, None).unwrap(), cfg(&[1, 1]));

        let starved = Certificate::new(cfg(&[2, 0]), vec![PebblingMove::new(0, 1)]);
        assert_eq!(
            starved.validate(&g, None),
            Err(Error::NotCoveredAtEnd { uncovered: vec![0] })
        );

        let moves = [(0, 1), (0, 1), (0, 1), (1, 2)]
            .map(|(u, v)| PebblingMove::new(u, v))
            .to_vec();
        let replay = Certificate::new(cfg(&[7, 0, 0]), moves);
        assert_eq!(replay.validate(&p3(), None).unwrap(), cfg(&[1, 1, 1]));
    }

    #[test]
    fn certificate_reports_offending_move() {
        let moves = vec![PebblingMove::new(0, 1), PebblingMove::new(0, 1)];
        let err = Certificate::new(cfg(&[3, 0]), moves)
            .validate(&k2(), None)
            .unwrap_err();
        match err {
            Error::IllegalMoveAt { index, mv, reason } => {
                assert_eq!((index, mv), (1, PebblingMove::new(0, 1)));
                assert!(matches!(*reason, Error::InsufficientPebbles { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
        let bad_vertex = Certificate::new(cfg(&[3, 0]), vec![PebblingMove::new(0, 9)]);
        assert!(matches!(
            bad_vertex.validate(&k2(), None),
            Err(Error::IllegalMoveAt { index: 0, .. })
        ));
    }

    #[test]
    fn certificate_length_checked() {
        let cert = Certificate::new(cfg(&[3, 0, 0]), vec![]);
        assert_eq!(
            cert.validate(&k2(), None),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn stacked_examples() {
        let w3 = generate(&FamilySpec::Wheel(3)).unwrap();
        assert_eq!(
            Configuration::stacked(&w3, 1, 6).unwrap(),
            cfg(&[0, 6, 0, 0])
        );
        assert_eq!(
            Configuration::stacked(&w3, 2, 0).unwrap(),
            Configuration::zeros(4)
        );
        let fuse = generate(&FamilySpec::Fuse { n: 7, d: 4 }).unwrap();
        let witness = Configuration::stacked(&fuse, 0, 62).unwrap();
        assert_eq!((witness.size(), witness.get(0)), (62, 62));
        assert!(Configuration::stacked(&w3, 4, 1).is_err());
    }

    #[test]
    fn parse_configuration() {
        assert_eq!(Configuration::parse("7 0 0", 3).unwrap(), cfg(&[7, 0, 0]));
        assert_eq!(
            Configuration::parse("1 2", 3),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
        assert!(matches!(
            Configuration::parse("1 -2", 2),
            Err(Error::Parse { .. })
        ));
        let c = cfg(&[4, 0, 12]);
        assert_eq!(Configuration::parse(&c.to_string(), 3).unwrap(), c);
    }

    #[test]
    fn parse_weighting() {
        let b = BinaryWeighting::parse("1 0 1", 3).unwrap();
        assert_eq!(b.order(), 2);
        assert_eq!(b.marked().collect::<Vec<_>>(), vec![0, 2]);
        assert!(BinaryWeighting::parse("1 2 1", 3).is_err());
        assert!(BinaryWeighting::parse("1 1", 3).is_err());
    }
}
