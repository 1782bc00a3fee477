//! Induced `P2 ∪ kP1` detection.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// An induced copy of `P2 ∪ kP1`: the edge `(z, w)` plus `k` vertices that
/// are pairwise non-adjacent and non-adjacent to `z` and `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub edge: (usize, usize),
    pub independent: VertexSet,
}

impl ForbiddenWitness {
    pub fn vertices(&self) -> VertexSet {
        let mut all = self.independent;
        all.insert(self.edge.0);
        all.insert(self.edge.1);
        all
    }
}

/// First witness in edge order, anchoring on each edge `(z, w)` and looking
/// for `k` independent vertices outside `N[z] ∪ N[w]`.
pub fn find_induced_p2_plus_kp1(g: &Graph, k: usize) -> Option<ForbiddenWitness> {
    g.edges().find_map(|(z, w)| {
        independent_outside_edge(g, z, w, k).map(|independent| ForbiddenWitness {
            edge: (z, w),
            independent,
        })
    })
}

/// A lexicographically first `k`-element independent set avoiding the
/// closed neighborhoods of `z` and `w`.
pub fn independent_outside_edge(g: &Graph, z: usize, w: usize, k: usize) -> Option<VertexSet> {
    let candidates = g.vertices()
        - g.neighbors(z)
        - g.neighbors(w)
        - VertexSet::singleton(z)
        - VertexSet::singleton(w);
    independent_subset(g, candidates, k)
}

/// A lexicographically first independent `k`-subset of `candidates`.
pub fn independent_subset(g: &Graph, candidates: VertexSet, k: usize) -> Option<VertexSet> {
    fn go(g: &Graph, cand: VertexSet, k: usize, chosen: VertexSet) -> Option<VertexSet> {
        if k == 0 {
            return Some(chosen);
        }
        if cand.len() < k {
            return None;
        }
        let v = cand.min()?;
        let mut with = chosen;
        with.insert(v);
        let rest = cand - VertexSet::singleton(v);
        go(g, rest - g.neighbors(v), k - 1, with).or_else(|| go(g, rest, k, chosen))
    }
    go(g, candidates, k, VertexSet::EMPTY)
}
