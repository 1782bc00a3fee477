//! Exact Hamilton-path search between two prescribed endpoints.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A Hamilton `(u, v)`-path, or `None` if the graph has none.
///
/// Depth-first search, lowest-index neighbor first. A partial path ending at
/// `cur` is abandoned when the unvisited vertices together with `cur` do not
/// induce a connected graph, when some unvisited vertex other than `v` has
/// fewer than two neighbors among them, or when `v` has none.
pub fn hamilton_path_between(g: &Graph, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(Error::InvalidInput(format!(
            "endpoints ({u},{v}) outside 0..{n}"
        )));
    }
    if u == v {
        return Err(Error::InvalidInput("endpoints must be distinct".into()));
    }
    hamilton_path_within(g, g.vertices(), u, v)
}

/// A `(u, v)`-path through exactly the vertices of `within`, which must
/// contain both endpoints.
pub fn hamilton_path_within(
    g: &Graph,
    within: VertexSet,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>> {
    if u == v {
        return Err(Error::InvalidInput("endpoints must be distinct".into()));
    }
    if !within.contains(u) || !within.contains(v) || !within.is_subset(g.vertices()) {
        return Err(Error::InvalidInput(format!(
            "endpoints ({u},{v}) must lie in the vertex subset"
        )));
    }
    let mut path = Vec::with_capacity(within.len());
    path.push(u);
    let rest = within - VertexSet::singleton(u);
    Ok(extend(g, v, &mut path, rest).then_some(path))
}

fn extend(g: &Graph, target: usize, path: &mut Vec<usize>, unvisited: VertexSet) -> bool {
    let cur = *path.last().unwrap();
    if unvisited.is_empty() {
        return cur == target;
    }
    let alive = unvisited | VertexSet::singleton(cur);
    if !g.is_connected_within(alive) {
        return false;
    }
    for w in unvisited {
        let need = if w == target { 1 } else { 2 };
        if (g.neighbors(w) & alive).len() < need {
            return false;
        }
    }
    for next in g.neighbors(cur) & unvisited {
        if next == target && unvisited.len() > 1 {
            continue;
        }
        path.push(next);
        if extend(g, target, path, unvisited - VertexSet::singleton(next)) {
            return true;
        }
        path.pop();
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairPath {
    pub u: usize,
    pub v: usize,
    pub path: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonConnectivity {
    pub hamiltonian_connected: bool,
    /// One entry per unordered pair `u < v`.
    pub pairs: Vec<PairPath>,
    pub failing_pair: Option<(usize, usize)>,
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() < 3 {
        return Err(Error::InvalidInput(format!(
            "hamiltonian-connectivity needs n >= 3, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// Full per-pair table. Existence is symmetric in the endpoints, so only
/// pairs `u < v` are searched.
pub fn is_hamiltonian_connected(g: &Graph) -> Result<HamiltonConnectivity> {
    check_order(g)?;
    let n = g.order();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push(PairPath {
                u,
                v,
                path: hamilton_path_between(g, u, v)?,
            });
        }
    }
    let failing_pair = pairs.iter().find(|p| p.path.is_none()).map(|p| (p.u, p.v));
    Ok(HamiltonConnectivity {
        hamiltonian_connected: failing_pair.is_none(),
        pairs,
        failing_pair,
    })
}

/// The first pair (in `u < v` order) with no Hamilton path, stopping there.
pub fn first_non_hamiltonian_pair(g: &Graph) -> Result<Option<(usize, usize)>> {
    check_order(g)?;
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if hamilton_path_between(g, u, v)?.is_none() {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, complete_bipartite, cycle};

    fn is_hamilton_path(g: &Graph, path: &[usize], u: usize, v: usize) -> bool {
        let set: VertexSet = path.iter().collect();
        path.len() == g.order()
            && set == g.vertices()
            && path.first() == Some(&u)
            && path.last() == Some(&v)
            && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    #[test]
    fn cycle_adjacent_pair() {
        let c5 = cycle(5);
        assert_eq!(
            hamilton_path_between(&c5, 0, 1).unwrap(),
            Some(vec![0, 4, 3, 2, 1])
        );
    }

    #[test]
    fn k44_parity_obstruction() {
        let g = complete_bipartite(4, 4);
        assert_eq!(hamilton_path_between(&g, 0, 1).unwrap(), None);
        let p = hamilton_path_between(&g, 0, 4).unwrap().unwrap();
        assert!(is_hamilton_path(&g, &p, 0, 4));
    }

    #[test]
    fn equal_endpoints_are_rejected() {
        assert!(hamilton_path_between(&complete(3), 1, 1).is_err());
        assert!(hamilton_path_between(&complete(3), 0, 3).is_err());
    }

    #[test]
    fn hamiltonian_connectivity_examples() {
        assert!(
            is_hamiltonian_connected(&complete(4))
                .unwrap()
                .hamiltonian_connected
        );

        let k44 = is_hamiltonian_connected(&complete_bipartite(4, 4)).unwrap();
        assert!(!k44.hamiltonian_connected);
        let (a, b) = k44.failing_pair.unwrap();
        assert_eq!((a < 4), (b < 4), "failing pair lies in one part");

        let c5 = is_hamiltonian_connected(&cycle(5)).unwrap();
        assert!(!c5.hamiltonian_connected);
        assert_eq!(c5.failing_pair, Some((0, 2)));
        assert_eq!(first_non_hamiltonian_pair(&cycle(5)).unwrap(), Some((0, 2)));

        assert!(is_hamiltonian_connected(&complete(2)).is_err());
    }

    #[test]
    fn disconnected_graph_fails_first_pair_search() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(first_non_hamiltonian_pair(&g).unwrap(), Some((0, 1)));
    }

    #[test]
    fn existence_is_symmetric_on_small_graphs() {
        for g in crate::family::generate(&crate::family::FamilySpec::Exhaustive(5)).unwrap() {
            for u in 0..5 {
                for v in u + 1..5 {
                    let a = hamilton_path_between(&g, u, v).unwrap();
                    let b = hamilton_path_between(&g, v, u).unwrap();
                    assert_eq!(a.is_some(), b.is_some());
                    if let Some(p) = a {
                        assert!(is_hamilton_path(&g, &p, u, v));
                    }
                }
            }
        }
    }
}
