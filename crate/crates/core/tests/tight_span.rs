mod common;

use common::{brute_force_extremal, floyd};
use hellify_core::generators::{random_connected, split_family};
use hellify_core::graph::Graph;
use hellify_core::helly::is_helly;
use hellify_core::tight_span::{
    build_injective_hull, disk_separates, enumerate_extremal_functions, helly_gap,
    peripheral_vertices, InjectiveHull,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..0.8, any::<u64>()).prop_map(|(n, p, seed)| random_connected(n, p, seed))
}

fn hull_vertex_of_real(h: &InjectiveHull, z: usize) -> usize {
    h.real_map[z]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumeration_matches_brute_force(g in graph_strategy(7)) {
        let fast: Vec<Vec<u32>> = enumerate_extremal_functions(&g)
            .unwrap()
            .into_iter()
            .map(|f| f.0)
            .collect();
        prop_assert_eq!(fast, brute_force_extremal(&g));
    }

    #[test]
    fn every_function_is_minimal(g in graph_strategy(7)) {
        let d = floyd(&g);
        for f in enumerate_extremal_functions(&g).unwrap() {
            let f = f.0;
            for x in 0..g.n() {
                // Lowering f(x) must break feasibility somewhere.
                let broken = f[x] == 0
                    || (0..g.n()).any(|y| {
                        let fy = if y == x { f[y] - 1 } else { f[y] };
                        ((f[x] - 1 + fy) as usize) < d[x][y]
                    });
                prop_assert!(broken);
            }
        }
    }

    #[test]
    fn hull_metric_is_chebyshev_and_embeds_g(g in graph_strategy(7)) {
        let h = build_injective_hull(&g).unwrap();
        let dh = floyd(&h.hull);
        for a in 0..h.hull.n() {
            for b in 0..h.hull.n() {
                prop_assert_eq!(dh[a][b] as u32, h.vectors[a].chebyshev(&h.vectors[b]));
            }
        }
        let dg = floyd(&g);
        for z in 0..g.n() {
            for w in 0..g.n() {
                prop_assert_eq!(dh[hull_vertex_of_real(&h, z)][hull_vertex_of_real(&h, w)], dg[z][w]);
            }
            prop_assert_eq!(&h.vectors[h.real_map[z]].0, &dg[z].iter().map(|&x| x as u32).collect::<Vec<_>>());
        }
        // Real tags match the distance vectors exactly.
        for v in 0..h.hull.n() {
            let is_dz = (0..g.n()).any(|z| h.vectors[v].0.iter().zip(&dg[z]).all(|(&a, &b)| a as usize == b));
            prop_assert_eq!(h.is_real(v), is_dz);
        }
    }

    #[test]
    fn hull_is_helly(g in graph_strategy(7)) {
        let h = build_injective_hull(&g).unwrap();
        prop_assert!(is_helly(&h.hull).unwrap());
        let again = build_injective_hull(&h.hull).unwrap();
        prop_assert_eq!(again.n_helly(), 0);
    }

    #[test]
    fn peripheral_hull_vertices_are_real(g in graph_strategy(7)) {
        let h = build_injective_hull(&g).unwrap();
        for p in peripheral_vertices(&h.hull) {
            prop_assert!(h.is_real(p.vertex), "peripheral Helly vertex {}", p.vertex);
        }
    }

    #[test]
    fn hull_geodesics_extend_to_real_endpoints(g in graph_strategy(6)) {
        // For every hull pair x, y there are peripheral a, b with x and y on
        // one a-b geodesic; peripheral vertices are real, so a, b come from G.
        let h = build_injective_hull(&g).unwrap();
        let d = floyd(&h.hull);
        let per: Vec<usize> = peripheral_vertices(&h.hull).iter().map(|p| p.vertex).collect();
        for x in 0..h.hull.n() {
            for y in 0..h.hull.n() {
                let found = per.iter().any(|&a| {
                    per.iter().any(|&b| d[a][b] == d[a][x] + d[x][y] + d[y][b])
                });
                prop_assert!(found, "no peripheral extension for ({}, {})", x, y);
            }
        }
    }

    #[test]
    fn disk_separation_transfers_to_hull(g in graph_strategy(7)) {
        let h = build_injective_hull(&g).unwrap();
        let d = floyd(&g);
        let n = g.n();
        for z in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let reach = d[z][x].min(d[z][y]);
                    for k in 0..reach {
                        prop_assert_eq!(
                            disk_separates(&g, z, k, x, y).unwrap(),
                            disk_separates(&h.hull, h.real_map[z], k, h.real_map[x], h.real_map[y]).unwrap(),
                            "z={} k={} x={} y={}", z, k, x, y
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn helly_gap_matches_chebyshev_distance(g in graph_strategy(7)) {
        let h = build_injective_hull(&g).unwrap();
        let expected = (0..h.hull.n())
            .filter(|&v| !h.is_real(v))
            .map(|v| {
                (0..g.n())
                    .map(|z| h.vectors[v].chebyshev(&h.vectors[h.real_map[z]]))
                    .min()
                    .unwrap()
            })
            .max()
            .unwrap_or(0);
        prop_assert_eq!(helly_gap(&h) as u32, expected);
    }
}

#[test]
fn output_is_deterministic() {
    let g = random_connected(8, 0.3, 7);
    let a = build_injective_hull(&g).unwrap();
    let b = build_injective_hull(&g).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_dot(), b.to_dot());
}

#[test]
fn clique_disks_do_not_separate_split_pairs() {
    let g = split_family(4).unwrap();
    let k = 4;
    for m in 2 * k..6 * k {
        for i in 0..k {
            assert!(!disk_separates(&g, m, 0, i, k + i).unwrap());
        }
    }
}
