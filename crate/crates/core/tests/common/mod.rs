//! Corpus and brute-force oracles shared by the integration tests. Every
//! oracle here is written against definitions only and shares no code with
//! the library algorithms it checks.

#![allow(dead_code)]

use hellify_core::generators::{cycle, fixture, path, random_connected, wheel};
use hellify_core::Graph;

/// Cycles C3–C8, paths P1–P8, wheels up to 8 vertices, house, domino, gem
/// and 200 seeded random connected graphs with at most 8 vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 3..=8 {
        out.push((format!("C{k}"), cycle(k)));
    }
    for k in 1..=8 {
        out.push((format!("P{k}"), path(k)));
    }
    for k in 3..=7 {
        out.push((format!("W{k}"), wheel(k)));
    }
    for name in ["house", "domino", "gem"] {
        out.push((name.to_string(), fixture(name).unwrap()));
    }
    for seed in 0..200u64 {
        let n = 2 + (seed % 7) as usize;
        let p = 0.1 + 0.1 * ((seed / 7) % 6) as f64;
        out.push((format!("random-{seed}"), random_connected(n, p, seed)));
    }
    out
}

/// All-pairs distances by Floyd–Warshall on the adjacency matrix.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every vector with `0 <= f(x) <= ecc(x)` that is feasible and extremal,
/// in lexicographic order.
pub fn brute_force_extremal(g: &Graph) -> Vec<Vec<u32>> {
    let d = floyd(g);
    let n = g.n();
    let ecc: Vec<u32> = d.iter().map(|row| *row.iter().max().unwrap() as u32).collect();
    let mut f = vec![0u32; n];
    let mut out = Vec::new();
    loop {
        let feasible = (0..n).all(|x| (0..n).all(|y| (f[x] + f[y]) as usize >= d[x][y]));
        let extremal = (0..n).all(|x| (0..n).any(|y| (f[x] + f[y]) as usize == d[x][y]));
        if feasible && extremal {
            out.push(f.clone());
        }
        // Odometer increment with per-coordinate limits.
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if f[i] < ecc[i] {
                f[i] += 1;
                for c in &mut f[i + 1..] {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// Direct Helly check: every family of pairwise intersecting disks of radius
/// at most `max_r` has a common vertex. Exponential; n ≤ 6 only.
pub fn brute_force_disk_helly(g: &Graph, max_r: usize) -> bool {
    let d = floyd(g);
    let n = g.n();
    let disks: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..=max_r).map(move |r| (v, r))).collect();
    // Only maximal families matter, but checking all families through a
    // recursive extension is simpler to trust.
    fn grow(
        d: &[Vec<usize>],
        disks: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        let n = d.len();
        if !chosen.is_empty() {
            let common = (0..n).any(|w| chosen.iter().all(|&(c, r)| d[c][w] <= r));
            if !common {
                return false;
            }
        }
        for i in start..disks.len() {
            let (c, r) = disks[i];
            if chosen.iter().all(|&(c2, r2)| d[c][c2] <= r + r2) {
                chosen.push((c, r));
                let ok = grow(d, disks, i + 1, chosen);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    grow(&d, &disks, 0, &mut Vec::new())
}

/// Pseudo-modularity by its disk form: any three pairwise intersecting disks
/// share a vertex, over all radius triples up to the diameter.
pub fn brute_force_three_disk_helly(g: &Graph) -> bool {
    let d = floyd(g);
    let n = g.n();
    let diam = d.iter().flatten().copied().max().unwrap();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for ra in 0..=diam {
                    for rb in 0..=diam {
                        for rc in 0..=diam {
                            if d[a][b] > ra + rb || d[a][c] > ra + rc || d[b][c] > rb + rc {
                                continue;
                            }
                            if !(0..n).any(|w| d[a][w] <= ra && d[b][w] <= rb && d[c][w] <= rc) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Subsets given as bit masks, vertex `i` at bit `i`.
pub fn induced_edges(g: &Graph, mask: u32) -> (Vec<usize>, usize) {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
    let mut m = 0;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) {
                m += 1;
            }
        }
    }
    (vs, m)
}

/// Whether the vertices of `mask` induce a cycle of length at least `min_len`.
pub fn induces_cycle(g: &Graph, mask: u32, min_len: usize) -> bool {
    let (vs, m) = induced_edges(g, mask);
    if vs.len() < min_len || m != vs.len() {
        return false;
    }
    if vs.iter().any(|&v| vs.iter().filter(|&&u| g.has_edge(u, v)).count() != 2) {
        return false;
    }
    // 2-regular with |E| = |V|: a single cycle iff connected.
    let mut seen = vec![vs[0]];
    let mut stack = vec![vs[0]];
    while let Some(u) = stack.pop() {
        for &w in &vs {
            if g.has_edge(u, w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == vs.len()
}

/// Whether some vertex subset induces a graph isomorphic to `pattern`, by
/// trying every injective map.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    fn extend(g: &Graph, p: &Graph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == p.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..k).all(|i| p.has_edge(i, k) == g.has_edge(map[i], v)) {
                map.push(v);
                if extend(g, p, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, pattern, &mut Vec::new())
}

pub fn is_chordal_brute(g: &Graph) -> bool {
    let n = g.n();
    !(0u32..(1 << n)).any(|mask| induces_cycle(g, mask, 4))
}

/// No induced house, domino, gem or cycle of length at least 5.
pub fn is_dh_brute(g: &Graph) -> bool {
    let n = g.n();
    let forbidden = ["house", "domino", "gem"].map(|name| fixture(name).unwrap());
    !forbidden.iter().any(|f| contains_induced(g, f))
        && !(0u32..(1 << n)).any(|mask| induces_cycle(g, mask, 5))
}

/// Maximal vertex sets with pairwise distance at most 2, by subset scan.
pub fn brute_force_two_sets(g: &Graph) -> Vec<Vec<usize>> {
    let d = floyd(g);
    let n = g.n();
    let ok = |mask: u32| {
        (0..n).all(|a| {
            mask & (1 << a) == 0 || (0..n).all(|b| mask & (1 << b) == 0 || d[a][b] <= 2)
        })
    };
    let mut out: Vec<Vec<usize>> = (1u32..(1 << n))
        .filter(|&mask| ok(mask) && (0..n).all(|v| mask & (1 << v) != 0 || !ok(mask | (1 << v))))
        .map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
        .collect();
    out.sort();
    out
}
