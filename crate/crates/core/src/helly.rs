//! Direct Helly recognition: pseudo-modularity, maximal 2-sets and their
//! suspension, bounded-radius disk families, extended squares.

use fixedbitset::FixedBitSet;

use crate::classes::is_chordal;
use crate::error::{Error, Result};
use crate::graph::{members, power, Graph, Vertex, VertexSet};

/// Default number of Bron–Kerbosch calls before giving up.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 10_000_000;

/// A maximal 2-set: a maximal vertex set with pairwise distance at most 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSet {
    pub members: Vec<Vertex>,
    /// Lowest-id `v` whose closed neighborhood contains every member.
    pub suspended_by: Option<Vertex>,
}

impl TwoSet {
    pub fn is_suspended(&self) -> bool {
        self.suspended_by.is_some()
    }
}

/// Lowest-id vertex `v` with `set ⊆ N[v]`.
pub fn suspension_witness(g: &Graph, set: &VertexSet) -> Option<Vertex> {
    let mut common = g.full_set();
    for u in set.ones() {
        common.intersect_with(&g.closed_neighborhood(u));
        if common.is_clear() {
            return None;
        }
    }
    common.minimum()
}

/// Maximal cliques of the graph given by adjacency rows, each as a bit set,
/// sorted by member list. Pivoting Bron–Kerbosch.
pub fn maximal_cliques(rows: &[FixedBitSet], budget: u64) -> Result<Vec<FixedBitSet>> {
    let n = rows.len();
    let mut state = Cliques {
        rows,
        calls: 0,
        budget,
        out: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    state.expand(&mut FixedBitSet::with_capacity(n), all, FixedBitSet::with_capacity(n))?;
    let mut out = state.out;
    out.sort_by_key(|s| s.ones().collect::<Vec<_>>());
    Ok(out)
}

struct Cliques<'a> {
    rows: &'a [FixedBitSet],
    calls: u64,
    budget: u64,
    out: Vec<FixedBitSet>,
}

impl Cliques<'_> {
    fn expand(&mut self, r: &mut FixedBitSet, mut p: FixedBitSet, mut x: FixedBitSet) -> Result<()> {
        self.calls += 1;
        if self.calls > self.budget {
            return Err(Error::BudgetExceeded {
                what: "maximal clique enumeration",
                budget: self.budget,
            });
        }
        if p.is_clear() {
            if x.is_clear() {
                self.out.push(r.clone());
            }
            return Ok(());
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| (p.intersection_count(&self.rows[u]), std::cmp::Reverse(u)))
            .expect("P is nonempty");
        let mut candidates = p.clone();
        candidates.difference_with(&self.rows[pivot]);
        for v in candidates.ones() {
            let mut np = p.clone();
            np.intersect_with(&self.rows[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.rows[v]);
            r.insert(v);
            self.expand(r, np, nx)?;
            r.set(v, false);
            p.set(v, false);
            x.insert(v);
        }
        Ok(())
    }
}

pub fn maximal_two_sets(g: &Graph) -> Result<Vec<TwoSet>> {
    maximal_two_sets_with_budget(g, DEFAULT_CLIQUE_BUDGET)
}

/// All maximal 2-sets of `g` (the maximal cliques of `G²`), in
/// lexicographic order of their member lists.
pub fn maximal_two_sets_with_budget(g: &Graph, budget: u64) -> Result<Vec<TwoSet>> {
    let sq = power(g, 2);
    let rows: Vec<FixedBitSet> = (0..g.n()).map(|v| sq.neighborhood(v).clone()).collect();
    Ok(maximal_cliques(&rows, budget)?
        .into_iter()
        .map(|set| TwoSet {
            members: members(&set),
            suspended_by: suspension_witness(g, &set),
        })
        .collect())
}

pub fn unsuspended_two_sets(g: &Graph) -> Result<Vec<TwoSet>> {
    Ok(maximal_two_sets(g)?
        .into_iter()
        .filter(|s| !s.is_suspended())
        .collect())
}

pub fn is_neighborhood_helly(g: &Graph) -> Result<bool> {
    Ok(maximal_two_sets(g)?.iter().all(TwoSet::is_suspended))
}

/// First ordered triple `(u, v, w)` with `1 <= d(v, w) <= 2` and
/// `d(u, v) = d(u, w) = k >= 2` that has no common neighbor `x` of `v, w`
/// at distance `k - 1` from `u`.
pub fn pseudo_modular_violation(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    let n = g.n();
    let dm = g.distances();
    for u in 0..n {
        for v in 0..n {
            let k = dm.get(u, v);
            if k < 2 {
                continue;
            }
            for w in 0..n {
                let dvw = dm.get(v, w);
                if dvw == 0 || dvw > 2 || dm.get(u, w) != k {
                    continue;
                }
                let found = g
                    .neighborhood(v)
                    .intersection(g.neighborhood(w))
                    .any(|x| dm.get(u, x) == k - 1);
                if !found {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

pub fn is_pseudo_modular(g: &Graph) -> bool {
    pseudo_modular_violation(g).is_none()
}

/// Pseudo-modular and neighborhood-Helly.
pub fn is_helly(g: &Graph) -> Result<bool> {
    Ok(is_pseudo_modular(g) && is_neighborhood_helly(g)?)
}

pub fn disk_helly_up_to_radius(g: &Graph, r: usize) -> Result<bool> {
    disk_helly_up_to_radius_with_budget(g, r, DEFAULT_CLIQUE_BUDGET)
}

/// Whether every pairwise-intersecting family of disks with radii at most
/// `r` has a common vertex.
pub fn disk_helly_up_to_radius_with_budget(g: &Graph, r: usize, budget: u64) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    let n = g.n();
    let dm = g.distances();
    let per = r + 1;
    let count = n * per;
    let mut rows = vec![FixedBitSet::with_capacity(count); count];
    for a in 0..count {
        let (u, i) = (a / per, a % per);
        for b in a + 1..count {
            let (v, j) = (b / per, b % per);
            if dm.get(u, v) <= i + j {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    let disks: Vec<VertexSet> = (0..count)
        .map(|a| crate::graph::disk(g, a / per, a % per))
        .collect();
    for clique in maximal_cliques(&rows, budget)? {
        let mut common = g.full_set();
        for a in clique.ones() {
            common.intersect_with(&disks[a]);
        }
        if common.is_clear() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An induced 4-cycle `square` (in cyclic order) and every vertex adjacent
/// to at least three of its corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedSquare {
    pub square: [Vertex; 4],
    pub extension: Vec<Vertex>,
}

impl ExtendedSquare {
    /// Square corners and extension together, sorted.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.square.to_vec();
        all.extend(&self.extension);
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// One entry per induced C₄, keyed by its smallest corner `w` and the
/// neighbors `x < z` of `w` on the cycle.
pub fn extended_squares(g: &Graph) -> Vec<ExtendedSquare> {
    let n = g.n();
    let mut out = Vec::new();
    for w in 0..n {
        let nw = g.neighbors(w);
        for (i, &x) in nw.iter().enumerate() {
            for &z in &nw[i + 1..] {
                if x < w || z < w || g.has_edge(x, z) {
                    continue;
                }
                for y in g.neighborhood(x).intersection(g.neighborhood(z)) {
                    if y <= w || g.has_edge(w, y) {
                        continue;
                    }
                    let square = [w, x, y, z];
                    let extension = (0..n)
                        .filter(|v| !square.contains(v))
                        .filter(|&v| square.iter().filter(|&&c| g.has_edge(v, c)).count() >= 3)
                        .collect();
                    out.push(ExtendedSquare { square, extension });
                }
            }
        }
    }
    out
}

pub fn all_extended_squares_suspended(g: &Graph) -> bool {
    extended_squares(g)
        .iter()
        .all(|s| suspension_witness(g, &crate::graph::vertex_set(g.n(), s.vertices())).is_some())
}

/// Neighborhood-Helly with a chordal square.
pub fn is_dually_chordal(g: &Graph) -> Result<bool> {
    Ok(is_neighborhood_helly(g)? && is_chordal(&power(g, 2)))
}
