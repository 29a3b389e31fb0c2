//! Graph families with exponentially large hulls, seeded random instances
//! and named fixtures.
//!
//! The three two-sided families share one vertex numbering: `x_1..x_k` are
//! `0..k`, `y_1..y_k` are `k..2k`, and for the split and cocomparability
//! families the clique block `u_i, v_i, w_i, z_i` occupies
//! `2k + 4(i-1) .. 2k + 4i`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::dh::{replay, PruningSequence, PruningStep, StepKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Vertex ids of the two-sided families, with 0-based block index `i`.
#[derive(Clone, Copy, Debug)]
pub struct FamilyLayout {
    pub k: usize,
}

impl FamilyLayout {
    pub fn x(&self, i: usize) -> Vertex {
        i
    }
    pub fn y(&self, i: usize) -> Vertex {
        self.k + i
    }
    pub fn u(&self, i: usize) -> Vertex {
        2 * self.k + 4 * i
    }
    pub fn v(&self, i: usize) -> Vertex {
        2 * self.k + 4 * i + 1
    }
    pub fn w(&self, i: usize) -> Vertex {
        2 * self.k + 4 * i + 2
    }
    pub fn z(&self, i: usize) -> Vertex {
        2 * self.k + 4 * i + 3
    }
    pub fn clique(&self) -> Vec<Vertex> {
        (2 * self.k..6 * self.k).collect()
    }

    fn labels(&self, with_clique: bool) -> Vec<String> {
        let mut labels: Vec<String> = (1..=self.k).map(|i| format!("x{i}")).collect();
        labels.extend((1..=self.k).map(|i| format!("y{i}")));
        if with_clique {
            for i in 1..=self.k {
                labels.extend(["u", "v", "w", "z"].iter().map(|p| format!("{p}{i}")));
            }
        }
        labels
    }
}

fn two_sided_family(k: usize, sides_are_cliques: bool) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("family needs k >= 2, got {k}")));
    }
    let l = FamilyLayout { k };
    let clique = l.clique();
    let mut edges = Vec::new();
    for (a, &p) in clique.iter().enumerate() {
        edges.extend(clique[a + 1..].iter().map(|&q| (p, q)));
    }
    for i in 0..k {
        edges.extend([(l.x(i), l.u(i)), (l.x(i), l.v(i))]);
        edges.extend([(l.y(i), l.w(i)), (l.y(i), l.z(i))]);
        for j in (0..k).filter(|&j| j != i) {
            edges.extend([(l.x(i), l.u(j)), (l.x(i), l.z(j))]);
            edges.extend([(l.y(i), l.w(j)), (l.y(i), l.v(j))]);
            if sides_are_cliques && i < j {
                edges.extend([(l.x(i), l.x(j)), (l.y(i), l.y(j))]);
            }
        }
    }
    Graph::from_edge_list_with_cap(6 * k, &edges, usize::MAX)?.with_labels(l.labels(true))
}

/// Split graph on `6k` vertices: independent `X`, `Y` and a clique of `k`
/// blocks `K_4`, with `d(x_i, y_i) = 3`.
pub fn split_family(k: usize) -> Result<Graph> {
    two_sided_family(k, false)
}

/// The split construction with `X` and `Y` turned into cliques, together
/// with its cocomparability ordering (`X`, then the clique, then `Y`).
pub fn cocomparability_family(k: usize) -> Result<(Graph, Vec<Vertex>)> {
    let g = two_sided_family(k, true)?;
    let l = FamilyLayout { k };
    let mut order: Vec<Vertex> = (0..k).map(|i| l.x(i)).collect();
    order.extend(l.clique());
    order.extend((0..k).map(|i| l.y(i)));
    Ok((g, order))
}

/// Complete bipartite graph `K_{k,k}` minus a perfect matching.
pub fn crown_family(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("crown needs k >= 3, got {k}")));
    }
    let l = FamilyLayout { k };
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (0..k).filter(|&j| j != i) {
            edges.push((l.x(i), l.y(j)));
        }
    }
    Graph::from_edge_list_with_cap(2 * k, &edges, usize::MAX)?.with_labels(l.labels(false))
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list_with_cap(n.max(1), &edges, usize::MAX).expect("paths are connected")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list_with_cap(n, &edges, usize::MAX).expect("cycles are connected")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Graph::from_edge_list_with_cap(n.max(1), &edges, usize::MAX).expect("cliques are connected")
}

/// `W_k`: the cycle `0..k` plus a hub `k` adjacent to all of it.
pub fn wheel(k: usize) -> Graph {
    assert!(k >= 3, "wheels need a rim of at least 3 vertices");
    let mut edges: Vec<_> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    edges.extend((0..k).map(|v| (v, k)));
    Graph::from_edge_list_with_cap(k + 1, &edges, usize::MAX).expect("wheels are connected")
}

/// Permutation graph on `a..f` whose hull gains exactly two vertices, one of
/// them (`h1`) adjacent to every real vertex except `e`.
///
/// Inversion graph of [`FIG4_PERMUTATION`]: `i < j` are adjacent when
/// `π(i) > π(j)`. Among 6-vertex permutation graphs with those hull
/// properties and an AT-free hull there are two isomorphism classes; this
/// is the one without twins, i.e. the one with an essentially unique
/// permutation model.
pub const FIG4_LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub const FIG4_PERMUTATION: [usize; 6] = [3, 1, 5, 0, 4, 2];

const FIG4_EDGES: &[(Vertex, Vertex)] = &[
    (0, 1),
    (0, 3),
    (0, 5),
    (1, 3),
    (2, 3),
    (2, 4),
    (2, 5),
    (4, 5),
];

fn fig4_permutation() -> Graph {
    Graph::from_edge_list(6, FIG4_EDGES)
        .expect("fixture is connected")
        .with_labels(FIG4_LABELS.iter().map(|s| s.to_string()).collect())
        .expect("six labels")
}

/// Looks up a named fixture: `house`, `domino`, `gem`, `fig4-permutation`,
/// `C<k>`, `W<k>`, `K<n>` or `P<n>`.
pub fn fixture(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let g = match name {
        "house" => Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])?,
        "domino" => Graph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)],
        )?,
        "gem" => Graph::from_edge_list(
            5,
            &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        )?,
        "fig4-permutation" => fig4_permutation(),
        _ => {
            let (prefix, rest) = name.split_at(1.min(name.len()));
            let k: usize = rest.parse().map_err(|_| unknown())?;
            match prefix {
                "C" if k >= 3 => cycle(k),
                "W" if k >= 3 => wheel(k),
                "K" if k >= 1 => complete(k),
                "P" if k >= 1 => path(k),
                _ => return Err(unknown()),
            }
        }
    };
    Ok(g)
}

fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// with probability `p`, under a random relabelling.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let n = n.max(1);
    let mut rng = rng(seed);
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.push((perm[u], perm[v]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((perm[u], perm[v]));
            }
        }
    }
    Graph::from_edge_list_with_cap(n, &edges, usize::MAX).expect("spanning tree keeps it connected")
}

/// Random chordal graph: each new vertex is attached to a random clique of
/// the current graph, so every vertex is simplicial when added.
pub fn random_chordal(n: usize, seed: u64) -> Graph {
    let n = n.max(1);
    let mut rng = rng(seed);
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let anchor = rng.random_range(0..v);
        let mut clique = vec![anchor];
        let mut others: Vec<Vertex> = (0..v).filter(|&u| adj[anchor][u]).collect();
        others.shuffle(&mut rng);
        for u in others {
            if rng.random_bool(0.5) && clique.iter().all(|&c| adj[c][u]) {
                clique.push(u);
            }
        }
        for c in clique {
            adj[c][v] = true;
            adj[v][c] = true;
            edges.push((c, v));
        }
    }
    Graph::from_edge_list_with_cap(n, &edges, usize::MAX).expect("each vertex attaches to a clique")
}

/// Random pruning sequence on `n` vertices: kind and anchor drawn uniformly
/// (the second vertex is always a pendant, the only connected option).
pub fn random_dh_sequence(n: usize, seed: u64) -> PruningSequence {
    let mut rng = rng(seed);
    let steps = (1..n.max(1))
        .map(|v| {
            let kind = if v == 1 {
                StepKind::Pendant
            } else {
                StepKind::ALL[rng.random_range(0..3)]
            };
            PruningStep {
                vertex: v,
                kind,
                anchor: rng.random_range(0..v),
            }
        })
        .collect();
    PruningSequence { root: 0, steps }
}

/// Random distance-hereditary graph replayed from [`random_dh_sequence`].
pub fn random_dh(n: usize, seed: u64) -> Graph {
    replay(&random_dh_sequence(n, seed)).expect("random sequences are valid by construction")
}
