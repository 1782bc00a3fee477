use serde::Serialize;

use crate::graph::{Graph, VertexSet};

use super::path::OrientedPath;

/// Where the off-path component `H` attaches to the path `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathContext {
    /// `H`, a component of `G - V(P)`.
    pub component: VertexSet,
    /// The vertex `x` when `H = {x}`.
    pub isolated: Option<usize>,
    /// `N_P(H) = (x_1, ..., x_t)` in path order.
    pub neighbors: Vec<usize>,
    /// `N_P(H)^+` in path order; the path's last vertex has no successor.
    pub successors: Vec<usize>,
    /// Segment structure, built only when `H` is a single vertex.
    pub segments: Option<Segments>,
}

/// The stretches of `P` between consecutive neighbors of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segments {
    /// `S_0 .. S_t`, each in path order. `S_0 = P[u, x_1^-]`,
    /// `S_i = P[x_i^+, x_{i+1}^-]`, `S_t = P[x_t^+, v]`.
    pub parts: Vec<Vec<usize>>,
    /// `S_i'`: members at odd distance from `x_i` (from `x_1`, backwards,
    /// for `S_0`).
    pub odd: Vec<VertexSet>,
    /// `S' = ∪ S_i'`.
    pub odd_union: VertexSet,
    /// `S* = V(P) - S'`.
    pub kept: VertexSet,
    /// `I = V(G) - V(P)`.
    pub outside: VertexSet,
    /// The default reference set `X`: the `2k - 1` earliest members of
    /// `N_P(x)^+`, absent when there are fewer.
    pub reference: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Hamilton,
    Context(PathContext),
}

/// Picks the component of `G - V(P)` holding the lowest-index off-path
/// vertex and describes how it attaches to `P`.
pub fn decompose(g: &Graph, k: usize, p: &OrientedPath) -> Decomposition {
    let off = g.vertices() - p.vertices();
    match off.min() {
        None => Decomposition::Hamilton,
        Some(v) => Decomposition::Context(context_for(g, k, p, g.reach_within(off, v))),
    }
}

/// Attachment data for a given off-path component.
pub fn context_for(g: &Graph, k: usize, p: &OrientedPath, component: VertexSet) -> PathContext {
    let attach = g.neighbors_of_set(component) & p.vertices();
    let neighbors = p.in_path_order(attach);
    let successors: Vec<usize> = neighbors.iter().filter_map(|&x| p.succ(x)).collect();
    let isolated = (component.len() == 1).then(|| component.min().unwrap());
    let segments = isolated.map(|_| segments(g, k, p, &neighbors, &successors));
    PathContext {
        component,
        isolated,
        neighbors,
        successors,
        segments,
    }
}

fn segments(
    g: &Graph,
    k: usize,
    p: &OrientedPath,
    neighbors: &[usize],
    successors: &[usize],
) -> Segments {
    let seq = p.as_slice();
    let mut parts = Vec::with_capacity(neighbors.len() + 1);
    let mut odd = Vec::with_capacity(neighbors.len() + 1);
    let positions: Vec<usize> = neighbors.iter().map(|&x| p.position(x).unwrap()).collect();

    match positions.first() {
        None => {
            // x has no neighbor on P: the whole path is S_0.
            parts.push(seq.to_vec());
            odd.push(odd_from_end(seq));
        }
        Some(&first) => {
            let s0 = &seq[..first];
            parts.push(s0.to_vec());
            odd.push(odd_from_end(s0));
            for (i, &start) in positions.iter().enumerate() {
                let stop = positions.get(i + 1).copied().unwrap_or(seq.len());
                let part = &seq[start + 1..stop];
                parts.push(part.to_vec());
                odd.push(part.iter().step_by(2).collect());
            }
        }
    }
    let odd_union = odd.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
    let size = 2 * k - 1;
    Segments {
        parts,
        odd,
        odd_union,
        kept: p.vertices() - odd_union,
        outside: g.vertices() - p.vertices(),
        reference: (successors.len() >= size).then(|| successors[..size].to_vec()),
    }
}

fn odd_from_end(part: &[usize]) -> VertexSet {
    part.iter().rev().step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete_bipartite, cycle};

    #[test]
    fn k44_same_part_path() {
        // a_i = i - 1, b_i = i + 3.
        let g = complete_bipartite(4, 4);
        let p = OrientedPath::new(&g, vec![0, 4, 1, 5, 2, 6, 3]).unwrap();
        let Decomposition::Context(ctx) = decompose(&g, 2, &p) else {
            panic!("not hamilton");
        };
        assert_eq!(ctx.component, VertexSet::singleton(7));
        assert_eq!(ctx.isolated, Some(7));
        assert_eq!(ctx.neighbors, vec![0, 1, 2, 3]);
        assert_eq!(ctx.successors, vec![4, 5, 6]);
        let s = ctx.segments.unwrap();
        assert_eq!(s.parts, vec![vec![], vec![4], vec![5], vec![6], vec![]]);
        assert_eq!(s.odd_union.to_vec(), vec![4, 5, 6]);
        assert_eq!(s.kept.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(s.outside.to_vec(), vec![7]);
        assert_eq!(s.reference, Some(vec![4, 5, 6]));
    }

    #[test]
    fn hamilton_path_is_reported() {
        let g = cycle(4);
        let p = OrientedPath::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(decompose(&g, 1, &p), Decomposition::Hamilton);
    }

    #[test]
    fn edge_component_has_no_segments() {
        let g = cycle(6);
        let p = OrientedPath::new(&g, vec![0, 1, 2, 3]).unwrap();
        let Decomposition::Context(ctx) = decompose(&g, 1, &p) else {
            panic!()
        };
        assert_eq!(ctx.component.to_vec(), vec![4, 5]);
        assert_eq!(ctx.isolated, None);
        assert_eq!(ctx.neighbors, vec![0, 3]);
        assert_eq!(ctx.successors, vec![1]);
        assert!(ctx.segments.is_none());
    }

    #[test]
    fn odd_positions_count_outward_from_neighbors() {
        // Path 0..=8 with x = 9 adjacent to 3 and 6.
        let mut edges: Vec<_> = (0..8).map(|i| (i, i + 1)).collect();
        edges.extend([(9, 3), (9, 6)]);
        let g = Graph::new(10, &edges).unwrap();
        let p = OrientedPath::new(&g, (0..9).collect()).unwrap();
        let Decomposition::Context(ctx) = decompose(&g, 1, &p) else {
            panic!()
        };
        let s = ctx.segments.unwrap();
        assert_eq!(s.parts, vec![vec![0, 1, 2], vec![4, 5], vec![7, 8]]);
        assert_eq!(s.odd[0].to_vec(), vec![0, 2]);
        assert_eq!(s.odd[1].to_vec(), vec![4]);
        assert_eq!(s.odd[2].to_vec(), vec![7]);
    }
}
