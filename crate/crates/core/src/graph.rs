//! Simple connected undirected graphs with an eagerly computed hop metric,
//! plus generators for the graph families the cover pebbling results are
//! stated for.
//!
//! Vertex labels follow fixed conventions so that certificates and witnesses
//! are reproducible:
//!
//! - `Multipartite(sizes)`: classes are laid out consecutively, the first
//!   `sizes[0]` vertices form class 0 and so on.
//! - `Wheel(n)`: vertex 0 is the hub, `1..=n` is the rim cycle in order.
//! - `Fuse(n, d)`: vertices `0..d` form the path with 0 as the free end,
//!   vertex `d - 1` is the star center, `d..n` are the spokes. For `d = 1`
//!   that shape would be a star of diameter 2, so `Fuse(n, 1)` is the
//!   complete graph `K_n`, the diameter-1 graph meeting the same bound.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    dist: Vec<u32>,
    diameter: u32,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; loops and out-of-range endpoints are rejected.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(Error::InvalidEdge { u, v, order });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let mut dist = vec![u32::MAX; order * order];
        let mut queue = VecDeque::new();
        for source in 0..order {
            let row = &mut dist[source * order..(source + 1) * order];
            row[source] = 0;
            queue.push_back(source);
            while let Some(x) = queue.pop_front() {
                for &y in &adjacency[x] {
                    if row[y] == u32::MAX {
                        row[y] = row[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if let Some(v) = row.iter().position(|&d| d == u32::MAX) {
                return Err(Error::DisconnectedGraph { u: source, v });
            }
        }
        let diameter = dist.iter().copied().max().unwrap_or(0);

        Ok(Graph {
            order,
            edges: normalized,
            adjacency,
            dist,
            diameter,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.order
    }

    /// Per-vertex eccentricity; the maximum entry is the diameter.
    pub fn eccentricity_profile(&self) -> Vec<(usize, u32)> {
        (0..self.order)
            .map(|v| {
                let row = &self.dist[v * self.order..(v + 1) * self.order];
                (v, row.iter().copied().max().unwrap_or(0))
            })
            .collect()
    }

    /// The lexicographically least shortest path from `from` to `to`,
    /// both endpoints included.
    pub fn shortest_path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut path = vec![from];
        let mut x = from;
        while x != to {
            let remaining = self.dist(x, to);
            // Neighbor lists are sorted, so the first hit is the least label.
            x = *self.adjacency[x]
                .iter()
                .find(|&&y| self.dist(y, to) + 1 == remaining)
                .expect("connected graph has a descending neighbor");
            path.push(x);
        }
        path
    }

    /// Serializes to the `n m` / `u v` text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.order, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the `n m` / `u v` text format. Blank lines and lines starting
    /// with `#` are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `n m` header".into(),
        })?;
        let [n, m] = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than the declared {m} edge lines"),
                });
            }
            let [u, v] = parse_pair(line, l)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                msg: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, found {:?}", text),
        });
    }
    let mut out = [0usize; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a nonnegative integer: {field:?}"),
        })?;
    }
    Ok(out)
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// Complete multipartite graph, class sizes nonincreasing.
    Multipartite(Vec<usize>),
    /// Wheel with `n` rim vertices, `n + 1` vertices in total.
    Wheel(usize),
    /// Path of `d - 1` edges joined to a star with `n - d` spokes.
    Fuse {
        n: usize,
        d: usize,
    },
    Path(usize),
    /// Star with the given number of leaves.
    Star(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Multipartite(sizes) => check_sizes(sizes),
            FamilySpec::Wheel(n) if *n < 3 => Err(Error::InvalidSpec(format!(
                "wheel needs at least 3 rim vertices, got {n}"
            ))),
            FamilySpec::Fuse { n, d } if *d < 1 || d >= n => Err(Error::InvalidSpec(format!(
                "fuse needs 1 <= d <= n - 1, got n={n}, d={d}"
            ))),
            FamilySpec::Path(0) => Err(Error::InvalidSpec("path needs at least one vertex".into())),
            FamilySpec::Star(0) => Err(Error::InvalidSpec("star needs at least one leaf".into())),
            _ => Ok(()),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Multipartite(sizes) => sizes.iter().sum(),
            FamilySpec::Wheel(n) => n + 1,
            FamilySpec::Fuse { n, .. } | FamilySpec::Path(n) => *n,
            FamilySpec::Star(leaves) => leaves + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Multipartite(sizes) => {
                let joined: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                write!(f, "multipartite({})", joined.join(","))
            }
            FamilySpec::Wheel(n) => write!(f, "wheel({n})"),
            FamilySpec::Fuse { n, d } => write!(f, "fuse({n},{d})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Star(leaves) => write!(f, "star({leaves})"),
        }
    }
}

pub(crate) fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() {
        return Err(Error::InvalidSpec(
            "multipartite needs at least one class".into(),
        ));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidSpec("class sizes must be positive".into()));
    }
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidSpec(format!(
            "class sizes must be nonincreasing, got {sizes:?}"
        )));
    }
    Ok(())
}

/// Builds the graph for a family specification using the labeling
/// conventions described in the module docs.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Multipartite(sizes) => {
            let classes = multipartite_classes(sizes);
            let n = classes.len();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if classes[u] != classes[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges)
        }
        &FamilySpec::Wheel(n) => {
            let mut edges: Vec<(usize, usize)> = (1..=n).map(|v| (0, v)).collect();
            edges.extend((1..=n).map(|v| (v, v % n + 1)));
            Graph::new(n + 1, &edges)
        }
        &FamilySpec::Fuse { n, d: 1 } => generate(&FamilySpec::Multipartite(vec![1; n])),
        &FamilySpec::Fuse { n, d } => {
            let center = d - 1;
            let mut edges: Vec<(usize, usize)> = (0..center).map(|v| (v, v + 1)).collect();
            edges.extend((d..n).map(|spoke| (center, spoke)));
            Graph::new(n, &edges)
        }
        &FamilySpec::Path(1) => Graph::new(1, &[]),
        &FamilySpec::Path(n) => generate(&FamilySpec::Fuse { n, d: n - 1 }),
        &FamilySpec::Star(leaves) => generate(&FamilySpec::Multipartite(vec![leaves, 1])),
    }
}

/// Class index of each vertex under the consecutive multipartite layout.
pub fn multipartite_classes(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(class, &size)| std::iter::repeat_n(class, size))
        .collect()
}

/// Every connected graph on the labeled vertex set `0..n`, obtained by
/// filtering all edge subsets. Only sensible for small `n` (2^(n(n-1)/2)
/// subsets).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=6).contains(&n),
        "edge-subset enumeration is limited to n <= 6"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).ok()
        })
        .collect()
}

/// Every labeled tree on `0..n`, decoded from Prüfer sequences
/// (n^(n-2) trees).
pub fn labeled_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    if n <= 2 {
        let edges: Vec<(usize, usize)> = if n == 2 { vec![(0, 1)] } else { vec![] };
        return vec![Graph::new(n, &edges).expect("trivial tree")];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut trees = Vec::with_capacity(total);
    let mut seq = vec![0usize; len];
    for mut code in 0..total {
        for slot in seq.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        trees.push(Graph::new(n, &prufer_edges(n, &seq)).expect("Prüfer decoding yields a tree"));
    }
    trees
}

fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}
