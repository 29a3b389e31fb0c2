//! Exact injective hulls of small graphs.
//!
//! A hull vertex is an integer function `f` on `V(G)` with
//! `f(x) + f(y) >= d(x, y)` for all pairs and, for each `x`, some `y`
//! attaining equality. Two such functions are adjacent when their
//! Chebyshev distance is 1.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::dh::AddedVertex;
use crate::error::{Error, Result};
use crate::graph::{component_of, disk, interval, is_isometric_subgraph, Graph, Vertex, VertexSet};

/// An integer function on `V(G)`, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MetricFunction(pub Vec<u32>);

impl MetricFunction {
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// `max_x |f(x) - g(x)|`.
    pub fn chebyshev(&self, other: &MetricFunction) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.abs_diff(*b))
            .max()
            .unwrap_or(0)
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        let dm = g.distances();
        let f = &self.0;
        (0..f.len()).all(|x| (x..f.len()).all(|y| (f[x] + f[y]) as usize >= dm.get(x, y)))
    }

    /// Feasible, and lowering any single coordinate by one breaks feasibility.
    pub fn is_extremal(&self, g: &Graph) -> bool {
        let dm = g.distances();
        let f = &self.0;
        self.is_feasible(g)
            && (0..f.len()).all(|x| (0..f.len()).any(|y| (f[x] + f[y]) as usize == dm.get(x, y)))
    }
}

/// Limits for hull construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HullConfig {
    pub max_vertices: usize,
    pub node_budget: u64,
}

impl Default for HullConfig {
    fn default() -> Self {
        HullConfig {
            max_vertices: 14,
            node_budget: 10_000_000,
        }
    }
}

pub fn enumerate_extremal_functions(g: &Graph) -> Result<Vec<MetricFunction>> {
    enumerate_extremal_functions_with(g, &HullConfig::default())
}

/// All extremal functions of `g`, sorted lexicographically.
///
/// Depth-first assignment in BFS order from vertex 0. Each unassigned `y`
/// carries a lower bound `max(d(y, z) - f(z))` over assigned `z`; a branch
/// dies once some bound passes `ecc(y)` or some assigned vertex can no
/// longer reach equality with any other vertex.
pub fn enumerate_extremal_functions_with(
    g: &Graph,
    config: &HullConfig,
) -> Result<Vec<MetricFunction>> {
    let n = g.n();
    if n > config.max_vertices {
        return Err(Error::TooManyVertices {
            n,
            cap: config.max_vertices,
        });
    }
    let dm = g.distances();
    let d: Vec<Vec<i64>> = (0..n)
        .map(|x| (0..n).map(|y| dm.get(x, y) as i64).collect())
        .collect();
    let ecc: Vec<i64> = (0..n).map(|x| dm.ecc(x) as i64).collect();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    let mut search = Enumeration {
        n,
        d,
        ecc,
        order,
        f: vec![-1; n],
        nodes: 0,
        budget: config.node_budget,
        out: Vec::new(),
    };
    let lo = vec![0i64; n];
    search.descend(0, &lo)?;
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct Enumeration {
    n: usize,
    d: Vec<Vec<i64>>,
    ecc: Vec<i64>,
    order: Vec<Vertex>,
    /// Assigned values, `-1` when unassigned.
    f: Vec<i64>,
    nodes: u64,
    budget: u64,
    out: Vec<MetricFunction>,
}

impl Enumeration {
    fn descend(&mut self, depth: usize, lo: &[i64]) -> Result<()> {
        if depth == self.n {
            let f = MetricFunction(self.f.iter().map(|&v| v as u32).collect());
            self.out.push(f);
            return Ok(());
        }
        let x = self.order[depth];
        // Equality for x needs some other y with f(y) <= d(x, y) - f(x).
        let mut hi = 0;
        for y in (0..self.n).filter(|&y| y != x) {
            let bound = if self.f[y] >= 0 { self.f[y] } else { lo[y] };
            hi = hi.max(self.d[x][y] - bound);
        }
        let hi = hi.min(self.ecc[x]);
        let mut next = vec![0i64; self.n];
        for val in lo[x]..=hi {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    what: "extremal function enumeration",
                    budget: self.budget,
                });
            }
            self.f[x] = val;
            let mut ok = true;
            for y in 0..self.n {
                next[y] = if self.f[y] >= 0 {
                    lo[y]
                } else {
                    let b = lo[y].max(self.d[x][y] - val);
                    if b > self.ecc[y] {
                        ok = false;
                    }
                    b
                };
            }
            if ok && self.equality_still_reachable(&next) {
                self.descend(depth + 1, &next)?;
            }
        }
        self.f[x] = -1;
        Ok(())
    }

    fn equality_still_reachable(&self, lo: &[i64]) -> bool {
        (0..self.n).filter(|&a| self.f[a] >= 0).all(|a| {
            (0..self.n).any(|y| {
                let need = self.d[a][y] - self.f[a];
                if self.f[y] >= 0 {
                    self.f[y] == need
                } else {
                    lo[y] <= need && need <= self.ecc[y]
                }
            })
        })
    }
}

/// The hull graph together with its function model.
///
/// Vertex order: the real vertices `d_z` first, indexed by `z`, then the
/// Helly vertices in lexicographic order of their vectors.
#[derive(Clone, Debug)]
pub struct InjectiveHull {
    pub hull: Graph,
    pub vectors: Vec<MetricFunction>,
    /// `real_map[z]` is the hull vertex `d_z`.
    pub real_map: Vec<Vertex>,
    pub real: Vec<bool>,
}

impl InjectiveHull {
    pub fn n_real(&self) -> usize {
        self.real_map.len()
    }

    pub fn n_helly(&self) -> usize {
        self.hull.n() - self.n_real()
    }

    pub fn is_real(&self, v: Vertex) -> bool {
        self.real[v]
    }

    pub fn helly_vertices(&self) -> Vec<Vertex> {
        (0..self.hull.n()).filter(|&v| !self.real[v]).collect()
    }

    pub fn to_json(&self) -> String {
        hull_json(&self.hull, &self.real, &self.vectors, None)
    }

    pub fn to_dot(&self) -> String {
        hull_dot(&self.hull, &self.real)
    }
}

pub fn build_injective_hull(g: &Graph) -> Result<InjectiveHull> {
    build_injective_hull_with(g, &HullConfig::default())
}

pub fn build_injective_hull_with(g: &Graph, config: &HullConfig) -> Result<InjectiveHull> {
    let functions = enumerate_extremal_functions_with(g, config)?;
    let n = g.n();
    let dm = g.distances();
    let reals: Vec<MetricFunction> = (0..n)
        .map(|z| MetricFunction(dm.row(z).to_vec()))
        .collect();
    let mut vectors = reals.clone();
    vectors.extend(functions.into_iter().filter(|f| !reals.contains(f)));
    let size = vectors.len();
    let mut rows = vec![fixedbitset::FixedBitSet::with_capacity(size); size];
    for a in 0..size {
        for b in a + 1..size {
            if vectors[a].chebyshev(&vectors[b]) == 1 {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    let mut labels: Vec<String> = (0..n).map(|z| g.label(z)).collect();
    labels.extend((1..=size - n).map(|i| format!("h{i}")));
    let hull = Graph::from_rows(rows)
        .map_err(|_| Error::Inconsistent("hull graph is disconnected".into()))?
        .with_labels(labels)?;
    let real_map: Vec<Vertex> = (0..n).collect();
    if !is_isometric_subgraph(g, &hull, &real_map)? {
        return Err(Error::Inconsistent(
            "input graph is not isometric in its hull".into(),
        ));
    }
    let mut real = vec![false; size];
    real[..n].fill(true);
    Ok(InjectiveHull {
        hull,
        vectors,
        real_map,
        real,
    })
}

/// Largest hull distance from a Helly vertex to its nearest real vertex;
/// 0 when there are no Helly vertices.
pub fn helly_gap(h: &InjectiveHull) -> usize {
    nearest_real_distance(&h.hull, &h.real)
        .iter()
        .zip(&h.real)
        .filter(|(_, &r)| !r)
        .map(|(&d, _)| d)
        .max()
        .unwrap_or(0)
}

/// Multi-source BFS distances to the nearest vertex flagged in `real`.
pub fn nearest_real_distance(g: &Graph, real: &[bool]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in (0..g.n()).filter(|&v| real[v]) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// A peripheral vertex with the witness `y` for which no other `z` has
/// `I(y, x) ⊆ I(y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Peripheral {
    pub vertex: Vertex,
    pub witness: Vertex,
}

/// All peripheral vertices of `g` in increasing order, each with a witness
/// chosen farthest first, then by lowest id.
pub fn peripheral_vertices(g: &Graph) -> Vec<Peripheral> {
    let n = g.n();
    let dm = g.distances();
    let mut intervals: Vec<Option<Vec<VertexSet>>> = vec![None; n];
    let mut out = Vec::new();
    for x in 0..n {
        let mut candidates: Vec<Vertex> = (0..n).collect();
        candidates.sort_by_key(|&y| (std::cmp::Reverse(dm.get(x, y)), y));
        for y in candidates {
            let iv = intervals[y]
                .get_or_insert_with(|| (0..n).map(|z| interval(g, y, z)).collect());
            let blocked = (0..n).filter(|&z| z != x).any(|z| {
                dm.get(y, x) + dm.get(x, z) == dm.get(y, z) && iv[x].is_subset(&iv[z])
            });
            if !blocked {
                out.push(Peripheral { vertex: x, witness: y });
                break;
            }
        }
    }
    out
}

/// Whether removing `D(z, k)` disconnects `x` from `y`.
pub fn disk_separates(g: &Graph, z: Vertex, k: usize, x: Vertex, y: Vertex) -> Result<bool> {
    let removed = disk(g, z, k);
    for v in [x, y] {
        if removed.contains(v) {
            return Err(Error::InsideDisk(v));
        }
    }
    let mut allowed = removed;
    allowed.toggle_range(..);
    Ok(!component_of(g, x, &allowed).contains(y))
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: usize,
    real: bool,
    vector: &'a [u32],
}

#[derive(Serialize)]
struct JsonHull<'a> {
    n_real: usize,
    n_helly: usize,
    vertices: Vec<JsonVertex<'a>>,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    added: Option<&'a [AddedVertex]>,
}

/// Serializes a hull in the hull-JSON format.
pub fn hull_json(
    hull: &Graph,
    real: &[bool],
    vectors: &[MetricFunction],
    added: Option<&[AddedVertex]>,
) -> String {
    let n_real = real.iter().filter(|&&r| r).count();
    let doc = JsonHull {
        n_real,
        n_helly: hull.n() - n_real,
        vertices: (0..hull.n())
            .map(|id| JsonVertex {
                id,
                real: real[id],
                vector: vectors[id].values(),
            })
            .collect(),
        edges: hull.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        added,
    };
    serde_json::to_string_pretty(&doc).expect("hull JSON serializes") + "\n"
}

/// DOT rendering with real vertices as circles and Helly vertices as squares.
pub fn hull_dot(hull: &Graph, real: &[bool]) -> String {
    let mut out = String::from("graph H {\n");
    for v in 0..hull.n() {
        let shape = if real[v] { "circle" } else { "square" };
        let _ = writeln!(out, "  {v} [label=\"{}\", shape={shape}];", hull.label(v));
    }
    for (u, v) in hull.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
