//! Vertex connectivity by unit-capacity max-flow on the vertex-split graph.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Orders above this are refused by [`vertex_connectivity_brute_force`].
pub const BRUTE_FORCE_CEILING: usize = 12;

/// `κ(G)`, with the convention `κ(K_n) = n - 1`.
///
/// Uses Even's scheme: some vertex among the first `κ + 1` lies outside a
/// minimum separator, so only pairs `(v_i, v_j)` with `i <= κ` and `v_i`,
/// `v_j` non-adjacent need a flow computation.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        let others = g.vertices() - g.neighbors(i) - VertexSet::full(i + 1);
        for j in others.iter() {
            best = best.min(local_connectivity(g, i, j, best));
            if best == 0 {
                return 0;
            }
        }
        i += 1;
    }
    best
}

/// Maximum number of internally disjoint `s`-`t` paths for non-adjacent
/// `s` and `t`, stopping early once `cap` paths are found.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.order();
    // through[v]: one unit uses v (v_in -> v_out).
    // sent[a] ∋ b: one unit uses the arc a_out -> b_in.
    let mut through = VertexSet::EMPTY;
    let mut sent = vec![VertexSet::EMPTY; n];
    let mut flow = 0;

    // BFS node encoding: 2v = v_in, 2v + 1 = v_out.
    let mut parent = vec![usize::MAX; 2 * n];
    let mut queue = Vec::with_capacity(2 * n);
    while flow < cap {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        let source = 2 * s + 1;
        let sink = 2 * t;
        parent[source] = source;
        queue.clear();
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let node = queue[head];
            head += 1;
            let v = node / 2;
            let mut visit = |next: usize, queue: &mut Vec<usize>| {
                if parent[next] == usize::MAX {
                    parent[next] = node;
                    queue.push(next);
                }
            };
            if node % 2 == 1 {
                // v_out: forward to w_in along unused arcs, backward to v_in.
                for w in g.neighbors(v) - sent[v] {
                    if w != s {
                        visit(2 * w, &mut queue);
                    }
                }
                if v != s && through.contains(v) {
                    visit(2 * v, &mut queue);
                }
            } else {
                // v_in: forward through v, backward along arcs into v.
                if v == t {
                    break;
                }
                if !through.contains(v) {
                    visit(2 * v + 1, &mut queue);
                }
                for a in g.neighbors(v) {
                    if sent[a].contains(v) {
                        visit(2 * a + 1, &mut queue);
                    }
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut node = sink;
        while node != source {
            let prev = parent[node];
            let (pv, v) = (prev / 2, node / 2);
            match (prev % 2, node % 2) {
                (1, 0) if pv != v => {
                    // a_out -> b_in: forward arc, or cancels b_out -> a_in.
                    if sent[v].contains(pv) {
                        sent[v].remove(pv);
                    } else {
                        sent[pv].insert(v);
                    }
                }
                (0, 1) if pv == v => through.insert(v),
                (1, 0) => through.remove(v),
                (0, 1) => {
                    // b_in -> a_out along a reversed arc a_out -> b_in.
                    sent[v].remove(pv);
                }
                _ => unreachable!("split-graph arcs alternate in/out"),
            }
            node = prev;
        }
        flow += 1;
    }
    flow
}

/// Minimum separator size by subset enumeration; the independent check for
/// [`vertex_connectivity`].
pub fn vertex_connectivity_brute_force(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_CEILING {
        return Err(Error::Capacity(format!(
            "brute-force connectivity is limited to n <= {BRUTE_FORCE_CEILING}"
        )));
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    for size in 0..n {
        for cut in VertexSet::subsets_of_size(n, size) {
            let rest = g.vertices() - cut;
            if rest.len() >= 2 && !g.is_connected_within(rest) {
                return Ok(size);
            }
        }
    }
    unreachable!("a non-complete graph has a separator of size n - 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, complete_bipartite, cycle, path_graph};

    #[test]
    fn known_values() {
        assert_eq!(vertex_connectivity(&cycle(5)), 2);
        assert_eq!(vertex_connectivity(&complete_bipartite(4, 4)), 4);
        assert_eq!(vertex_connectivity(&complete(5)), 4);
        assert_eq!(vertex_connectivity(&complete(1)), 0);
        assert_eq!(vertex_connectivity(&path_graph(4)), 1);
        assert_eq!(
            vertex_connectivity(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()),
            0
        );
    }

    #[test]
    fn complete_bipartite_is_min_part() {
        for s in 1..5 {
            for t in 1..5 {
                let g = complete_bipartite(s, t);
                let expect = if s + t == 2 { 1 } else { s.min(t) };
                assert_eq!(vertex_connectivity(&g), expect, "K_{s},{t}");
            }
        }
    }

    #[test]
    fn local_connectivity_respects_cap() {
        let g = complete_bipartite(4, 4);
        assert_eq!(local_connectivity(&g, 0, 1, 10), 4);
        assert_eq!(local_connectivity(&g, 0, 1, 2), 2);
    }

    #[test]
    fn brute_force_matches_on_small_families() {
        for g in [
            cycle(6),
            complete_bipartite(2, 3),
            path_graph(5),
            complete(4),
        ] {
            assert_eq!(
                vertex_connectivity(&g),
                vertex_connectivity_brute_force(&g).unwrap()
            );
        }
    }
}
