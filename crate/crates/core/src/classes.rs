//! Recognizers for chordal, bipartite, split, AT-free, distance-hereditary
//! and square-chordal graphs, and cocomparability-ordering verification.

use std::collections::VecDeque;

use crate::dh::pruning_sequence;
use crate::error::{Error, Result};
use crate::graph::{component_of, power, Graph, Vertex};

/// Maximum cardinality search order, ties broken by lowest id.
pub fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("vertices remain");
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// The reverse of an MCS order is a perfect elimination ordering iff `g`
/// is chordal; equivalently, each vertex's earlier-visited neighbors form
/// a clique.
pub fn is_chordal(g: &Graph) -> bool {
    let order = mcs_order(g);
    let mut visited = g.empty_set();
    for &v in &order {
        let mut earlier = g.neighborhood(v).clone();
        earlier.intersect_with(&visited);
        for u in earlier.ones() {
            let mut rest = earlier.clone();
            rest.set(u, false);
            if !rest.is_subset(g.neighborhood(u)) {
                return false;
            }
        }
        visited.insert(v);
    }
    true
}

/// An induced cycle of length at least 4, or `None` for chordal graphs.
///
/// For each `v` and non-adjacent `a, b ∈ N(v)`, a shortest `a`–`b` path
/// avoiding the rest of `N[v]` closes an induced cycle through `v`.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    for v in 0..g.n() {
        let nv = g.neighbors(v);
        for (i, &a) in nv.iter().enumerate() {
            for &b in &nv[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut allowed = g.closed_neighborhood(v);
                allowed.toggle_range(..);
                allowed.insert(a);
                allowed.insert(b);
                if let Some(path) = shortest_path_within(g, a, b, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_within(
    g: &Graph,
    from: Vertex,
    to: Vertex,
    allowed: &crate::graph::VertexSet,
) -> Option<Vec<Vertex>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if allowed.contains(w) && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn is_square_chordal(g: &Graph) -> bool {
    is_chordal(&power(g, 2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    /// The side containing vertex 0.
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

/// BFS 2-coloring from vertex 0.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let (color, _) = bfs_coloring(g);
    if odd_edge(g, &color).is_some() {
        return None;
    }
    let (left, right) = (0..g.n()).partition(|&v| color[v] == 0);
    Some(Bipartition { left, right })
}

fn bfs_coloring(g: &Graph) -> (Vec<u8>, Vec<Vertex>) {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![0; n];
    color[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if color[w] == u8::MAX {
                color[w] = 1 - color[u];
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (color, parent)
}

fn odd_edge(g: &Graph, color: &[u8]) -> Option<(Vertex, Vertex)> {
    g.edges().into_iter().find(|&(u, v)| color[u] == color[v])
}

/// An odd cycle through a monochromatic BFS edge, or `None` if bipartite.
pub fn odd_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let (color, parent) = bfs_coloring(g);
    let (u, v) = odd_edge(g, &color)?;
    let dm = g.distances();
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    // Same color means same BFS depth from 0.
    while a != b {
        debug_assert_eq!(dm.get(0, a), dm.get(0, b));
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    Some(left)
}

/// A split partition `(clique, independent)` from the degree sequence, or
/// `None` when `g` is not split.
pub fn is_split(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let n = g.n();
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut clique = by_degree[..m].to_vec();
    let mut independent = by_degree[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    Some((clique, independent))
}

/// Lexicographically least asteroidal triple, if any.
pub fn asteroidal_triple(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    let n = g.n();
    const NONE: usize = usize::MAX;
    // comp[v][u]: component of u in G - N[v].
    let comp: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut allowed = g.closed_neighborhood(v);
            allowed.toggle_range(..);
            let mut label = vec![NONE; n];
            let mut next = 0;
            for s in 0..n {
                if allowed.contains(s) && label[s] == NONE {
                    for u in component_of(g, s, &allowed).ones() {
                        label[u] = next;
                    }
                    next += 1;
                }
            }
            label
        })
        .collect();
    let same = |v: Vertex, a: Vertex, b: Vertex| comp[v][a] != NONE && comp[v][a] == comp[v][b];
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !g.has_edge(a, c)
                    && !g.has_edge(b, c)
                    && same(a, b, c)
                    && same(b, a, c)
                    && same(c, a, b)
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_at_free(g: &Graph) -> bool {
    asteroidal_triple(g).is_none()
}

pub fn is_distance_hereditary(g: &Graph) -> bool {
    pruning_sequence(g).is_some()
}

/// First triple `(x, y, z)` in ordering positions with `xz ∈ E` but neither
/// `xy` nor `yz`.
pub fn cocomparability_violation(
    g: &Graph,
    order: &[Vertex],
) -> Result<Option<(Vertex, Vertex, Vertex)>> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::NotPermutation);
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotPermutation);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (order[i], order[j], order[k]);
                if g.has_edge(x, z) && !g.has_edge(x, y) && !g.has_edge(y, z) {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

pub fn verify_cocomparability_ordering(g: &Graph, order: &[Vertex]) -> Result<bool> {
    Ok(cocomparability_violation(g, order)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        cocomparability_family, complete, crown_family, cycle, path, split_family,
    };

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&path(6)));
        assert!(!is_chordal(&cycle(4)));
        let w = chordless_cycle(&cycle(4)).unwrap();
        assert_eq!(w.len(), 4);
        assert!(chordless_cycle(&complete(4)).is_none());
        let c7 = chordless_cycle(&cycle(7)).unwrap();
        assert_eq!(c7.len(), 7);
    }

    #[test]
    fn square_chordal_examples() {
        assert!(is_square_chordal(&cycle(5)));
        assert!(!is_square_chordal(&cycle(8)));
    }

    #[test]
    fn bipartite_examples() {
        let c4 = is_bipartite(&cycle(4)).unwrap();
        assert_eq!((c4.left, c4.right), (vec![0, 2], vec![1, 3]));
        assert!(is_bipartite(&cycle(5)).is_none());
        let odd = odd_cycle(&cycle(5)).unwrap();
        assert_eq!(odd.len(), 5);
        for i in 0..odd.len() {
            assert!(cycle(5).has_edge(odd[i], odd[(i + 1) % odd.len()]));
        }
        let crown = is_bipartite(&crown_family(4).unwrap()).unwrap();
        assert_eq!(crown.left, vec![0, 1, 2, 3]);
        assert_eq!(crown.right, vec![4, 5, 6, 7]);
    }

    #[test]
    fn split_examples() {
        assert_eq!(is_split(&complete(3)), Some((vec![0, 1, 2], vec![])));
        assert!(is_split(&cycle(4)).is_none());
        let (clique, independent) = is_split(&split_family(3).unwrap()).unwrap();
        assert_eq!(clique, (6..18).collect::<Vec<_>>());
        assert_eq!(independent, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn at_free_examples() {
        assert!(is_at_free(&complete(5)));
        assert_eq!(asteroidal_triple(&cycle(6)), Some((0, 2, 4)));
        assert!(is_at_free(&cocomparability_family(3).unwrap().0));
    }

    #[test]
    fn cocomparability_examples() {
        assert!(verify_cocomparability_ordering(&complete(4), &[2, 0, 3, 1]).unwrap());
        assert!(verify_cocomparability_ordering(&cycle(4), &[0, 2, 1, 3]).unwrap());
        assert_eq!(
            cocomparability_violation(&path(4), &[0, 3, 1, 2]).unwrap(),
            Some((0, 3, 1))
        );
        let (g, order) = cocomparability_family(3).unwrap();
        assert!(verify_cocomparability_ordering(&g, &order).unwrap());
        assert_eq!(
            verify_cocomparability_ordering(&cycle(4), &[0, 0, 1, 2]),
            Err(Error::NotPermutation)
        );
    }
}
