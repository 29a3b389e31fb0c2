//! Distance-hereditary graphs: pruning sequences, the twin-class
//! containment structure, and construction of the injective hull by
//! replaying a pruning sequence into a growing Helly host.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Pendant,
    TrueTwin,
    FalseTwin,
}

impl StepKind {
    pub const ALL: [StepKind; 3] = [StepKind::Pendant, StepKind::TrueTwin, StepKind::FalseTwin];
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Pendant => "pendant",
            StepKind::TrueTwin => "true_twin",
            StepKind::FalseTwin => "false_twin",
        })
    }
}

/// One extension: `vertex` joins as a pendant or twin of the earlier `anchor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PruningStep {
    pub vertex: Vertex,
    pub kind: StepKind,
    pub anchor: Vertex,
}

/// A build order from the single vertex `root` by one-vertex extensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PruningSequence {
    pub root: Vertex,
    pub steps: Vec<PruningStep>,
}

impl PruningSequence {
    pub fn len(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices in insertion order, root first.
    pub fn order(&self) -> Vec<Vertex> {
        std::iter::once(self.root)
            .chain(self.steps.iter().map(|s| s.vertex))
            .collect()
    }
}

/// Finds a pruning sequence of `g`, or `None` when `g` is not
/// distance-hereditary.
///
/// Vertices are pruned greedily: each round removes the lowest-id vertex
/// that is pendant or has a twin among the remaining vertices, classifying
/// it as pendant before true twin before false twin and choosing the
/// lowest-id anchor. The returned sequence is the reverse of the removals.
pub fn pruning_sequence(g: &Graph) -> Option<PruningSequence> {
    let n = g.n();
    let mut alive = g.full_set();
    let mut removed = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let step = prune_one(g, &alive)?;
        alive.set(step.vertex, false);
        removed.push(step);
    }
    let root = alive.ones().next().expect("one vertex remains");
    removed.reverse();
    Some(PruningSequence {
        root,
        steps: removed,
    })
}

fn prune_one(g: &Graph, alive: &FixedBitSet) -> Option<PruningStep> {
    // Group alive vertices by open and by closed neighborhood restricted to
    // the alive set; equal open rows are false twins, equal closed rows
    // true twins.
    let mut open_groups: HashMap<Vec<usize>, Vec<Vertex>> = HashMap::new();
    let mut closed_groups: HashMap<Vec<usize>, Vec<Vertex>> = HashMap::new();
    let mut open_key = Vec::with_capacity(alive.len());
    let mut closed_key = Vec::with_capacity(alive.len());
    for v in alive.ones() {
        let mut row = g.neighborhood(v).clone();
        row.intersect_with(alive);
        open_key.push(row.as_slice().to_vec());
        row.insert(v);
        closed_key.push(row.as_slice().to_vec());
    }
    for (idx, v) in alive.ones().enumerate() {
        open_groups.entry(open_key[idx].clone()).or_default().push(v);
        closed_groups.entry(closed_key[idx].clone()).or_default().push(v);
    }
    for (idx, v) in alive.ones().enumerate() {
        let mut nbrs = g.neighborhood(v).clone();
        nbrs.intersect_with(alive);
        if nbrs.count_ones(..) == 1 {
            let anchor = nbrs.ones().next().expect("one neighbor");
            return Some(PruningStep {
                vertex: v,
                kind: StepKind::Pendant,
                anchor,
            });
        }
        let twin_of = |group: &Vec<Vertex>| group.iter().copied().find(|&u| u != v);
        if let Some(anchor) = twin_of(&closed_groups[&closed_key[idx]]) {
            return Some(PruningStep {
                vertex: v,
                kind: StepKind::TrueTwin,
                anchor,
            });
        }
        if let Some(anchor) = twin_of(&open_groups[&open_key[idx]]) {
            return Some(PruningStep {
                vertex: v,
                kind: StepKind::FalseTwin,
                anchor,
            });
        }
    }
    None
}

/// Sparse adjacency grown one extension at a time.
#[derive(Clone, Debug, Default)]
struct SparseGraph {
    adj: Vec<Vec<Vertex>>,
    present: Vec<bool>,
}

impl SparseGraph {
    fn ensure(&mut self, v: Vertex) {
        if v >= self.adj.len() {
            self.adj.resize_with(v + 1, Vec::new);
            self.present.resize(v + 1, false);
        }
    }

    fn contains(&self, v: Vertex) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    fn add_root(&mut self, v: Vertex) {
        self.ensure(v);
        self.present[v] = true;
    }

    fn extend(&mut self, position: usize, step: &PruningStep) -> Result<()> {
        let invalid = |reason: String| Error::InvalidStep { position, reason };
        if self.contains(step.vertex) {
            return Err(invalid(format!("vertex {} already present", step.vertex)));
        }
        if !self.contains(step.anchor) {
            return Err(invalid(format!("anchor {} not yet present", step.anchor)));
        }
        let (w, v) = (step.vertex, step.anchor);
        self.ensure(w);
        let mut nbrs = match step.kind {
            StepKind::Pendant => vec![v],
            StepKind::TrueTwin => {
                let mut n = self.adj[v].clone();
                n.push(v);
                n
            }
            StepKind::FalseTwin => {
                if self.adj[v].is_empty() {
                    return Err(invalid(format!(
                        "false twin of isolated vertex {v} would disconnect the graph"
                    )));
                }
                self.adj[v].clone()
            }
        };
        nbrs.sort_unstable();
        for &u in &nbrs {
            self.adj[u].push(w);
        }
        self.adj[w] = nbrs;
        self.present[w] = true;
        Ok(())
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn into_graph(self) -> Result<Graph> {
        let n = self.adj.len();
        if self.present.iter().any(|p| !p) {
            return Err(Error::InvalidParameter(
                "vertex ids of the sequence must be exactly 0..n".into(),
            ));
        }
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                rows[u].insert(v);
            }
        }
        Graph::from_rows(rows)
    }
}

/// Rebuilds the graph described by a pruning sequence. Vertex ids must be
/// exactly `0..seq.len()`.
pub fn replay(seq: &PruningSequence) -> Result<Graph> {
    let mut g = SparseGraph::default();
    g.add_root(seq.root);
    for (i, step) in seq.steps.iter().enumerate() {
        g.extend(i + 1, step)?;
    }
    g.into_graph()
}

pub type SetId = usize;

#[derive(Clone, Debug, Default)]
struct TwinSet {
    members: BTreeSet<Vertex>,
    out: BTreeSet<SetId>,
    inc: BTreeSet<SetId>,
}

/// Partition of the current vertices into true-twin classes, with a directed
/// edge `A -> B` whenever `N[a]` is a proper subset of `N[b]` for `a` in
/// `A`, `b` in `B`.
///
/// Maintained incrementally along a pruning sequence; it never looks at
/// the graph itself.
#[derive(Clone, Debug)]
pub struct TwinClassPoset {
    set_of: Vec<Option<SetId>>,
    sets: Vec<Option<TwinSet>>,
    vertex_count: usize,
}

impl TwinClassPoset {
    pub fn new(root: Vertex) -> Self {
        let mut p = TwinClassPoset {
            set_of: Vec::new(),
            sets: Vec::new(),
            vertex_count: 1,
        };
        let s = p.new_set(root);
        p.assign(root, s);
        p
    }

    fn new_set(&mut self, v: Vertex) -> SetId {
        let mut set = TwinSet::default();
        set.members.insert(v);
        self.sets.push(Some(set));
        self.sets.len() - 1
    }

    fn assign(&mut self, v: Vertex, s: SetId) {
        if v >= self.set_of.len() {
            self.set_of.resize(v + 1, None);
        }
        self.set_of[v] = Some(s);
    }

    fn set(&self, s: SetId) -> &TwinSet {
        self.sets[s].as_ref().expect("live set")
    }

    fn set_mut(&mut self, s: SetId) -> &mut TwinSet {
        self.sets[s].as_mut().expect("live set")
    }

    fn link(&mut self, from: SetId, to: SetId) {
        self.set_mut(from).out.insert(to);
        self.set_mut(to).inc.insert(from);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.set_of.get(v).copied().flatten().is_some()
    }

    fn set_id(&self, v: Vertex) -> Option<SetId> {
        self.set_of.get(v).copied().flatten()
    }

    /// Applies one extension step, following the three update rules; the
    /// second vertex overall is always handled as a true twin of the first.
    pub fn apply(&mut self, step: &PruningStep) -> Result<()> {
        let position = self.vertex_count;
        let (w, v) = (step.vertex, step.anchor);
        if self.contains(w) {
            return Err(Error::InvalidStep {
                position,
                reason: format!("vertex {w} already present"),
            });
        }
        let s = self.set_id(v).ok_or_else(|| Error::InvalidStep {
            position,
            reason: format!("anchor {v} not present"),
        })?;
        let kind = if self.vertex_count == 1 {
            StepKind::TrueTwin
        } else {
            step.kind
        };
        let singleton = self.set(s).members.len() == 1;
        match kind {
            StepKind::TrueTwin => {
                self.set_mut(s).members.insert(w);
                self.assign(w, s);
            }
            StepKind::Pendant => {
                let sv = if singleton {
                    // S becomes S_v: drop its outgoing edges.
                    let outs = std::mem::take(&mut self.set_mut(s).out);
                    for t in outs {
                        self.set_mut(t).inc.remove(&s);
                    }
                    s
                } else {
                    self.set_mut(s).members.remove(&v);
                    let sv = self.new_set(v);
                    self.assign(v, sv);
                    let preds: Vec<SetId> = self.set(s).inc.iter().copied().collect();
                    for x in preds {
                        self.link(x, sv);
                    }
                    self.link(s, sv);
                    sv
                };
                let sw = self.new_set(w);
                self.assign(w, sw);
                self.link(sw, sv);
            }
            StepKind::FalseTwin => {
                let succs: Vec<SetId> = self.set(s).out.iter().copied().collect();
                let sw = self.new_set(w);
                self.assign(w, sw);
                if singleton {
                    // S becomes S_v: drop its incoming edges.
                    let ins = std::mem::take(&mut self.set_mut(s).inc);
                    for t in ins {
                        self.set_mut(t).out.remove(&s);
                    }
                } else {
                    self.set_mut(s).members.remove(&v);
                    let sv = self.new_set(v);
                    self.assign(v, sv);
                    self.link(sv, s);
                    for &y in &succs {
                        self.link(sv, y);
                    }
                    self.link(sw, s);
                }
                for &y in &succs {
                    self.link(sw, y);
                }
            }
        }
        self.vertex_count += 1;
        Ok(())
    }

    /// Whether some `y != v` has `N[v] ⊆ N[y]`: the class of `v` has another
    /// member or an outgoing edge.
    pub fn has_dominator(&self, v: Vertex) -> bool {
        match self.set_id(v) {
            Some(s) => {
                let set = self.set(s);
                set.members.len() > 1 || !set.out.is_empty()
            }
            None => false,
        }
    }

    /// The true-twin classes, each sorted, in lexicographic order.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self
            .sets
            .iter()
            .flatten()
            .filter(|s| !s.members.is_empty())
            .map(|s| s.members.iter().copied().collect())
            .collect();
        out.sort();
        out
    }

    /// Containment edges as pairs of classes, sorted.
    pub fn edges(&self) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
        let members = |s: SetId| -> Vec<Vertex> { self.set(s).members.iter().copied().collect() };
        let mut out = Vec::new();
        for (id, set) in self.sets.iter().enumerate() {
            if let Some(set) = set {
                for &t in &set.out {
                    out.push((members(id), members(t)));
                }
            }
        }
        out.sort();
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }
}

/// Functional form of [`TwinClassPoset::apply`].
pub fn poset_apply(mut p: TwinClassPoset, step: &PruningStep) -> Result<TwinClassPoset> {
    p.apply(step)?;
    Ok(p)
}

pub fn has_dominator(p: &TwinClassPoset, v: Vertex) -> bool {
    p.has_dominator(v)
}

/// A Helly vertex inserted as a true twin of `anchor` ahead of a false-twin
/// step on that anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AddedVertex {
    pub vertex: Vertex,
    pub anchor: Vertex,
}

/// Hull produced from a pruning sequence, stored sparsely. Real vertices
/// keep their ids `0..n`; added vertices are numbered from `n` upwards.
#[derive(Clone, Debug)]
pub struct SparseHellification {
    pub adjacency: Vec<Vec<Vertex>>,
    pub added: Vec<AddedVertex>,
    pub sequence: PruningSequence,
    pub input_edges: usize,
}

impl SparseHellification {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Replays `seq` into a Helly host: pendant and true-twin steps are copied,
/// and a false-twin step on an anchor without a dominator is preceded by a
/// new true twin of that anchor.
pub fn hellify_sequence(seq: &PruningSequence) -> Result<SparseHellification> {
    let n = seq.len();
    let mut input = SparseGraph::default();
    input.add_root(seq.root);
    let mut host = SparseGraph::default();
    host.add_root(seq.root);
    let mut poset = TwinClassPoset::new(seq.root);
    let mut steps = Vec::with_capacity(n);
    let mut added = Vec::new();
    let mut next_id = n;

    let push = |host: &mut SparseGraph,
                    poset: &mut TwinClassPoset,
                    steps: &mut Vec<PruningStep>,
                    step: PruningStep|
     -> Result<()> {
        host.extend(steps.len() + 1, &step)?;
        poset.apply(&step)?;
        steps.push(step);
        Ok(())
    };

    for (i, step) in seq.steps.iter().enumerate() {
        if step.vertex >= n || step.anchor >= n {
            return Err(Error::InvalidStep {
                position: i + 1,
                reason: "vertex ids of the sequence must be exactly 0..n".into(),
            });
        }
        input.extend(i + 1, step)?;
        if step.kind == StepKind::FalseTwin && !poset.has_dominator(step.anchor) {
            let y = next_id;
            next_id += 1;
            added.push(AddedVertex {
                vertex: y,
                anchor: step.anchor,
            });
            let twin = PruningStep {
                vertex: y,
                kind: StepKind::TrueTwin,
                anchor: step.anchor,
            };
            push(&mut host, &mut poset, &mut steps, twin)?;
        }
        push(&mut host, &mut poset, &mut steps, *step)?;
    }
    Ok(SparseHellification {
        adjacency: host.adj,
        added,
        sequence: PruningSequence {
            root: seq.root,
            steps,
        },
        input_edges: input.edge_count(),
    })
}

/// Injective hull of a distance-hereditary graph.
#[derive(Clone, Debug)]
pub struct HellificationResult {
    pub hull: Graph,
    /// `real_map[v]` is the hull vertex of input vertex `v`.
    pub real_map: Vec<Vertex>,
    pub added: Vec<AddedVertex>,
    /// Pruning sequence of the hull, in hull ids.
    pub sequence: PruningSequence,
    pub input_vertices: usize,
    pub input_edges: usize,
}

impl HellificationResult {
    /// `|V(hull)| <= 2n` and `|E(hull)| <= 4m`.
    pub fn within_size_bounds(&self) -> bool {
        self.hull.n() <= 2 * self.input_vertices && self.hull.m() <= 4 * self.input_edges
    }

    pub fn bound_report(&self) -> String {
        format!(
            "vertices {} <= {} and edges {} <= {}: {}",
            self.hull.n(),
            2 * self.input_vertices,
            self.hull.m(),
            4 * self.input_edges,
            if self.within_size_bounds() { "ok" } else { "VIOLATED" }
        )
    }
}

/// Builds the injective hull of a distance-hereditary graph.
pub fn hellify_dh(g: &Graph) -> Result<HellificationResult> {
    let seq = pruning_sequence(g).ok_or(Error::NotDistanceHereditary)?;
    let sparse = hellify_sequence(&seq)?;
    let n = g.n();
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    let mut per_anchor: HashMap<Vertex, usize> = HashMap::new();
    for a in &sparse.added {
        let count = per_anchor.entry(a.anchor).or_insert(0);
        *count += 1;
        let base = format!("h{}", g.label(a.anchor));
        labels.push(if *count == 1 {
            base
        } else {
            format!("{base}.{count}")
        });
    }
    let host = SparseGraph {
        present: vec![true; sparse.adjacency.len()],
        adj: sparse.adjacency,
    };
    let hull = host.into_graph()?.with_labels(labels)?;
    Ok(HellificationResult {
        hull,
        real_map: (0..n).collect(),
        added: sparse.added,
        sequence: sparse.sequence,
        input_vertices: n,
        input_edges: g.m(),
    })
}
