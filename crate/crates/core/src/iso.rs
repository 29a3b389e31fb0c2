//! Backtracking isomorphism test for small connected graphs.
//!
//! Candidates are filtered by a per-vertex invariant (degree, eccentricity
//! and the histogram of distances to all other vertices) and every partial
//! map must preserve pairwise distances. This is adequate for oracle
//! comparisons on graphs of a few dozen vertices and makes no attempt to
//! scale beyond that.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default vertex cap for [`are_isomorphic_small`].
pub const DEFAULT_ISO_CAP: usize = 16;

/// Returns a bijection `map` with `a.has_edge(u, v) == b.has_edge(map[u], map[v])`,
/// or `None` when the graphs are not isomorphic.
pub fn are_isomorphic_small(a: &Graph, b: &Graph) -> Result<Option<Vec<Vertex>>> {
    are_isomorphic_with_cap(a, b, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_with_cap(a: &Graph, b: &Graph, cap: usize) -> Result<Option<Vec<Vertex>>> {
    for g in [a, b] {
        if g.n() > cap {
            return Err(Error::TooManyVertices { n: g.n(), cap });
        }
    }
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(None);
    }
    let inv_a: Vec<Vec<usize>> = (0..a.n()).map(|v| invariant(a, v)).collect();
    let inv_b: Vec<Vec<usize>> = (0..b.n()).map(|v| invariant(b, v)).collect();
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }

    let order = search_order(a, &inv_a);
    let candidates: Vec<Vec<Vertex>> = (0..a.n())
        .map(|v| (0..b.n()).filter(|&w| inv_b[w] == inv_a[v]).collect())
        .collect();
    let mut state = Search {
        a,
        b,
        order: &order,
        candidates: &candidates,
        map: vec![usize::MAX; a.n()],
        used: vec![false; b.n()],
    };
    Ok(if state.extend(0) { Some(state.map) } else { None })
}

fn invariant(g: &Graph, v: Vertex) -> Vec<usize> {
    let dm = g.distances();
    let mut hist = vec![0; dm.diameter() + 1];
    for u in 0..g.n() {
        hist[dm.get(v, u)] += 1;
    }
    let mut key = vec![g.degree(v), dm.ecc(v)];
    key.extend(hist);
    key
}

/// Rarest invariant class first, then grow along edges so each new vertex
/// is constrained by an already-mapped neighbor.
fn search_order(g: &Graph, inv: &[Vec<usize>]) -> Vec<Vertex> {
    let n = g.n();
    let class_size = |v: Vertex| inv.iter().filter(|k| **k == inv[v]).count();
    let start = (0..n).min_by_key(|&v| (class_size(v), v)).unwrap_or(0);
    let mut order = vec![start];
    let mut placed = vec![false; n];
    placed[start] = true;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let links = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (usize::MAX - links, class_size(v), v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    a: &'a Graph,
    b: &'a Graph,
    order: &'a [Vertex],
    candidates: &'a [Vec<Vertex>],
    map: Vec<Vertex>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let da = self.a.distances();
        let db = self.b.distances();
        for &w in &self.candidates[v] {
            if self.used[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| da.get(u, v) == db.get(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
        }
        self.map[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    fn check_witness(a: &Graph, b: &Graph, map: &[Vertex]) {
        for u in 0..a.n() {
            for v in 0..a.n() {
                assert_eq!(a.has_edge(u, v), b.has_edge(map[u], map[v]));
            }
        }
    }

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c4 = cycle(4);
        let relabeled = Graph::from_edge_list(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let map = are_isomorphic_small(&c4, &relabeled).unwrap().unwrap();
        check_witness(&c4, &relabeled, &map);
    }

    #[test]
    fn cycle_and_path_differ() {
        assert_eq!(are_isomorphic_small(&cycle(4), &path(4)).unwrap(), None);
    }

    #[test]
    fn cap_is_enforced() {
        let big = cycle(20);
        assert!(matches!(
            are_isomorphic_small(&big, &big),
            Err(Error::TooManyVertices { .. })
        ));
        assert!(are_isomorphic_with_cap(&big, &big, 32).unwrap().is_some());
    }

    #[test]
    fn same_invariants_but_not_isomorphic() {
        // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
        let prism = Graph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let k33 = Graph::from_edge_list(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(are_isomorphic_small(&prism, &k33).unwrap(), None);
    }
}
