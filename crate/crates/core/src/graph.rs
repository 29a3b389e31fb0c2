//! Immutable simple undirected graphs with bit-row adjacency and cached
//! all-pairs hop distances.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A set of vertices stored as a bit-row over `0..n`.
pub type VertexSet = FixedBitSet;

/// Default cap on the number of vertices accepted by the public constructors.
pub const DEFAULT_MAX_VERTICES: usize = 512;

/// Collects the members of a vertex set in increasing order.
pub fn members(set: &VertexSet) -> Vec<Vertex> {
    set.ones().collect()
}

/// Builds a vertex set of capacity `n` from a list of members.
pub fn vertex_set(n: usize, vertices: impl IntoIterator<Item = Vertex>) -> VertexSet {
    let mut set = FixedBitSet::with_capacity(n);
    for v in vertices {
        set.insert(v);
    }
    set
}

/// A connected, simple, undirected graph on the vertices `0..n`.
///
/// Adjacency is kept twice: as bit-rows for set algebra and as sorted
/// neighbor lists for traversal. All-pairs distances are computed lazily on
/// first use and cached.
#[derive(Clone, Debug)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
    lists: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
    dist: OnceLock<DistanceMatrix>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list, deduplicating repeated edges.
    ///
    /// Rejects loops, out-of-range ids, more than [`DEFAULT_MAX_VERTICES`]
    /// vertices and disconnected graphs.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::from_edge_list_with_cap(n, edges, DEFAULT_MAX_VERTICES)
    }

    pub fn from_edge_list_with_cap(
        n: usize,
        edges: &[(Vertex, Vertex)],
        cap: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > cap {
            return Err(Error::TooManyVertices { n, cap });
        }
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let g = Self::from_rows_unchecked(rows);
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Builds a graph from symmetric, loop-free bit-rows without checking the
    /// cap. Connectivity is the caller's responsibility.
    pub(crate) fn from_rows_unchecked(rows: Vec<FixedBitSet>) -> Self {
        let lists = rows.iter().map(|r| r.ones().collect()).collect();
        Graph {
            rows,
            lists,
            labels: None,
            dist: OnceLock::new(),
        }
    }

    /// Builds from symmetric rows, checking connectivity.
    pub(crate) fn from_rows(rows: Vec<FixedBitSet>) -> Result<Self> {
        let g = Self::from_rows_unchecked(rows);
        if g.is_connected() {
            Ok(g)
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Attaches display names to the vertices.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::MapLength {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.lists[v]
    }

    /// Open neighborhood `N(v)` as a bit-row.
    pub fn neighborhood(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut row = self.rows[v].clone();
        row.insert(v);
        row
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.lists[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, nbrs) in self.lists.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when present, otherwise its id.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_of_label(&self, label: &str) -> Option<Vertex> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn empty_set(&self) -> VertexSet {
        FixedBitSet::with_capacity(self.n())
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    fn is_connected(&self) -> bool {
        let all = self.full_set();
        component_of(self, 0, &all).count_ones(..) == self.n()
    }

    /// Hop distances, computed by one BFS per vertex on first use.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| DistanceMatrix::compute(self))
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> usize {
        self.distances().get(u, v)
    }

    /// Induced subgraph on `vertices` (relabelled `0..k` in the given order).
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let k = vertices.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    rows[i].insert(j);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Renders the graph as an undirected DOT graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", self.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Vertices reachable from `start` using only vertices of `allowed`.
pub(crate) fn component_of(g: &Graph, start: Vertex, allowed: &VertexSet) -> VertexSet {
    let mut seen = g.empty_set();
    if !allowed.contains(start) {
        return seen;
    }
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if allowed.contains(w) && !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen
}

/// Parses the edge-list text format: a header `n m`, then `m` lines `u v`
/// with 0-based ids. Everything after a `#` on a line is ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with_cap(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_edge_list_with_cap(text: &str, cap: usize) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two integers, found `{content}`"),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("`{s}` is not a non-negative integer"),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges but {} were listed", edges.len()),
        });
    }
    Graph::from_edge_list_with_cap(n, &edges, cap)
}

/// All-pairs hop distances with eccentricities, radius and diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    ecc: Vec<u32>,
    radius: u32,
    diameter: u32,
}

impl DistanceMatrix {
    fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == u32::MAX {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let ecc: Vec<u32> = (0..n)
            .map(|v| d[v * n..(v + 1) * n].iter().copied().max().unwrap_or(0))
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        DistanceMatrix {
            n,
            d,
            ecc,
            radius,
            diameter,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> usize {
        self.d[u * self.n + v] as usize
    }

    /// The distance vector `d_v` as a row slice.
    pub fn row(&self, v: Vertex) -> &[u32] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    pub fn ecc(&self, v: Vertex) -> usize {
        self.ecc[v] as usize
    }

    pub fn radius(&self) -> usize {
        self.radius as usize
    }

    pub fn diameter(&self) -> usize {
        self.diameter as usize
    }
}

/// Convenience wrapper returning the cached distance matrix of `g`.
pub fn distances(g: &Graph) -> &DistanceMatrix {
    g.distances()
}

/// The interval `I(x, y)`: vertices on some shortest `(x, y)`-path.
pub fn interval(g: &Graph, x: Vertex, y: Vertex) -> VertexSet {
    let dm = g.distances();
    let dxy = dm.get(x, y);
    let mut set = g.empty_set();
    for v in 0..g.n() {
        if dm.get(x, v) + dm.get(v, y) == dxy {
            set.insert(v);
        }
    }
    set
}

/// The slice `S_k(x, y)`: vertices of `I(x, y)` at distance `k` from `x`.
pub fn interval_slice(g: &Graph, x: Vertex, y: Vertex, k: usize) -> Result<VertexSet> {
    let dm = g.distances();
    let dxy = dm.get(x, y);
    if k > dxy {
        return Err(Error::SliceOutOfRange { k, distance: dxy });
    }
    let mut set = interval(g, x, y);
    for v in 0..g.n() {
        if dm.get(x, v) != k {
            set.set(v, false);
        }
    }
    Ok(set)
}

/// The disk `D(v, r)`.
pub fn disk(g: &Graph, v: Vertex, r: usize) -> VertexSet {
    let row = g.distances().row(v);
    let mut set = g.empty_set();
    for (u, &d) in row.iter().enumerate() {
        if d as usize <= r {
            set.insert(u);
        }
    }
    set
}

/// The `k`-th power `G^k`; `k = 0` is treated as `k = 1`.
pub fn power(g: &Graph, k: usize) -> Graph {
    let k = k.max(1);
    if k == 1 {
        return g.clone();
    }
    let dm = g.distances();
    let n = g.n();
    let rows = (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            for v in 0..n {
                let d = dm.get(u, v);
                if d >= 1 && d <= k {
                    row.insert(v);
                }
            }
            row
        })
        .collect();
    let mut p = Graph::from_rows_unchecked(rows);
    p.labels = g.labels.clone();
    p
}

/// Whether `sub`, mapped into `host` by `embed`, preserves all distances.
///
/// `embed` must be injective and every edge of `sub` must map to an edge of
/// `host`.
pub fn is_isometric_subgraph(sub: &Graph, host: &Graph, embed: &[Vertex]) -> Result<bool> {
    if embed.len() != sub.n() {
        return Err(Error::MapLength {
            expected: sub.n(),
            got: embed.len(),
        });
    }
    let mut used = host.empty_set();
    for &h in embed {
        if h >= host.n() {
            return Err(Error::VertexOutOfRange {
                vertex: h,
                n: host.n(),
            });
        }
        if used.put(h) {
            return Err(Error::NotInjective);
        }
    }
    for (u, v) in sub.edges() {
        if !host.has_edge(embed[u], embed[v]) {
            return Err(Error::MissingHostEdge(u, v));
        }
    }
    let ds = sub.distances();
    let dh = host.distances();
    for u in 0..sub.n() {
        for v in u + 1..sub.n() {
            if ds.get(u, v) != dh.get(embed[u], embed[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn construction_examples() {
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(c4().m(), 4);
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        assert_eq!(k4.m(), 6);
        let dup = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.m(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(0, 1)]), Err(Error::Disconnected));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(Error::EmptyGraph));
        assert!(matches!(
            Graph::from_edge_list(600, &[]),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn distance_examples() {
        let dm = c4().distances().clone();
        assert_eq!((dm.diameter(), dm.radius()), (2, 2));
        let p4 = path(4);
        assert_eq!((p4.distances().diameter(), p4.distances().radius()), (3, 2));
    }

    #[test]
    fn interval_examples() {
        let g = c4();
        assert_eq!(interval(&g, 0, 2).count_ones(..), 4);
        assert_eq!(members(&interval(&g, 1, 1)), vec![1]);
        let c5 = cycle(5);
        assert_eq!(members(&interval(&c5, 0, 2)), vec![0, 1, 2]);
        assert_eq!(members(&interval_slice(&c5, 0, 2, 1).unwrap()), vec![1]);
        assert_eq!(
            interval_slice(&c5, 0, 2, 3),
            Err(Error::SliceOutOfRange { k: 3, distance: 2 })
        );
    }

    #[test]
    fn disk_examples() {
        let g = c4();
        assert_eq!(members(&disk(&g, 0, 0)), vec![0]);
        assert_eq!(members(&disk(&g, 0, 1)), vec![0, 1, 3]);
        assert_eq!(disk(&cycle(5), 3, 2).count_ones(..), 5);
    }

    #[test]
    fn power_examples() {
        let c5 = cycle(5);
        assert_eq!(power(&c5, 1), c5);
        assert_eq!(power(&c5, 2).m(), 10);
        // C6 squared: every pair except the three antipodal pairs.
        let sq = power(&cycle(6), 2);
        assert_eq!(sq.m(), 12);
        for v in 0..6 {
            assert!(!sq.has_edge(v, (v + 3) % 6));
        }
    }

    #[test]
    fn isometry_examples() {
        let g = c4();
        assert!(is_isometric_subgraph(&g, &g, &[0, 1, 2, 3]).unwrap());
        let k4 = crate::generators::complete(4);
        assert!(!is_isometric_subgraph(&g, &k4, &[0, 1, 2, 3]).unwrap());
        let w4 = crate::generators::wheel(4);
        assert!(is_isometric_subgraph(&g, &w4, &[0, 1, 2, 3]).unwrap());
        assert_eq!(
            is_isometric_subgraph(&g, &w4, &[0, 1, 1, 3]),
            Err(Error::NotInjective)
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# a square\n4 4\n0 1\n1 2 # side\n2 3\n3 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, c4());
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_edge_list("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }
}
