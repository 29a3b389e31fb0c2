//! Exact Gromov hyperbolicity by the four-point condition.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};

/// A non-negative half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfInteger {
    pub doubled: u64,
}

impl HalfInteger {
    pub fn from_doubled(doubled: u64) -> Self {
        HalfInteger { doubled }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn ceil(self) -> u64 {
        self.doubled.div_ceil(2)
    }

    pub fn as_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.doubled)
    }
}

/// Half the gap between the two largest of
/// `d(u,v)+d(w,x)`, `d(u,x)+d(v,w)`, `d(u,w)+d(v,x)`.
pub fn four_point_hb(dm: &DistanceMatrix, u: Vertex, v: Vertex, w: Vertex, x: Vertex) -> HalfInteger {
    let mut sums = [
        dm.get(u, v) + dm.get(w, x),
        dm.get(u, x) + dm.get(v, w),
        dm.get(u, w) + dm.get(v, x),
    ];
    sums.sort_unstable();
    HalfInteger::from_doubled((sums[2] - sums[1]) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HyperbolicityReport {
    pub delta: HalfInteger,
    /// Lexicographically least quadruple attaining `delta`.
    pub witness: (Vertex, Vertex, Vertex, Vertex),
}

impl fmt::Display for HyperbolicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v, w, x) = self.witness;
        write!(f, "delta={} witness=({u},{v},{w},{x})", self.delta)
    }
}

/// Default cap on the number of quadruples examined.
pub const DEFAULT_QUADRUPLE_BUDGET: u64 = 5_000_000_000;

pub fn delta(g: &Graph) -> Result<HyperbolicityReport> {
    delta_with_budget(g, DEFAULT_QUADRUPLE_BUDGET)
}

pub fn delta_with_budget(g: &Graph, budget: u64) -> Result<HyperbolicityReport> {
    let n = g.n() as u64;
    // Multisets of size 4 from n vertices.
    let quadruples = n * (n + 1) * (n + 2) * (n + 3) / 24;
    if quadruples > budget {
        return Err(Error::BudgetExceeded {
            what: "four-point quadruple scan",
            budget,
        });
    }
    let dm = g.distances();
    let n = g.n();
    let mut best = HyperbolicityReport {
        delta: HalfInteger::default(),
        witness: (0, 0, 0, 0),
    };
    for u in 0..n {
        for v in u..n {
            let duv = dm.get(u, v);
            for w in v..n {
                let (duw, dvw) = (dm.get(u, w), dm.get(v, w));
                for x in w..n {
                    let mut sums = [duv + dm.get(w, x), dm.get(u, x) + dvw, duw + dm.get(v, x)];
                    sums.sort_unstable();
                    let doubled = (sums[2] - sums[1]) as u64;
                    if doubled > best.delta.doubled {
                        best = HyperbolicityReport {
                            delta: HalfInteger::from_doubled(doubled),
                            witness: (u, v, w, x),
                        };
                    }
                }
            }
        }
    }
    Ok(best)
}

/// First `(x, y, z, v)` with `zy ∈ E`, `z ∈ I(x, y)`, `y ∈ I(z, v)` and
/// `d(x, v) < d(x, y) + d(y, v) - 1`.
pub fn alpha1_violation(g: &Graph) -> Option<(Vertex, Vertex, Vertex, Vertex)> {
    let n = g.n();
    let dm = g.distances();
    for x in 0..n {
        for y in 0..n {
            let dxy = dm.get(x, y);
            for &z in g.neighbors(y) {
                if dm.get(x, z) + 1 != dxy {
                    continue;
                }
                for v in 0..n {
                    let dyv = dm.get(y, v);
                    if dm.get(z, v) == dyv + 1 && dm.get(x, v) + 1 < dxy + dyv {
                        return Some((x, y, z, v));
                    }
                }
            }
        }
    }
    None
}

pub fn is_alpha1_metric(g: &Graph) -> bool {
    alpha1_violation(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, split_family};

    #[test]
    fn hb_examples() {
        let t = Graph::from_edge_list(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let dm = t.distances();
        for q in [(0, 2, 4, 5), (0, 1, 2, 3), (2, 4, 0, 5)] {
            assert_eq!(four_point_hb(dm, q.0, q.1, q.2, q.3).doubled, 0);
        }
        assert_eq!(four_point_hb(cycle(4).distances(), 0, 1, 2, 3).doubled, 2);
        assert_eq!(four_point_hb(cycle(5).distances(), 0, 1, 2, 3).doubled, 1);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&path(7)).unwrap().delta.doubled, 0);
        assert_eq!(delta(&complete(5)).unwrap().delta.doubled, 0);
        let c4 = delta(&cycle(4)).unwrap();
        assert_eq!(c4.delta.doubled, 2);
        assert_eq!(c4.witness, (0, 1, 2, 3));
        assert_eq!(c4.to_string(), "delta=2/2 witness=(0,1,2,3)");
        assert!(delta(&split_family(4).unwrap()).unwrap().delta.doubled <= 2);
        assert_eq!(delta(&complete(2)).unwrap().witness, (0, 0, 0, 0));
        assert!(matches!(delta_with_budget(&cycle(10), 10), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn half_integer_rounding() {
        assert_eq!(HalfInteger::from_doubled(3).ceil(), 2);
        assert_eq!(HalfInteger::from_doubled(4).ceil(), 2);
        assert!(!HalfInteger::from_doubled(1).is_integer());
    }

    #[test]
    fn alpha1_examples() {
        assert!(is_alpha1_metric(&path(6)));
        assert!(is_alpha1_metric(&complete(4)));
        assert!(!is_alpha1_metric(&cycle(6)));
    }
}
