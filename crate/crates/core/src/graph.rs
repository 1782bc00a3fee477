//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the dense integers `0..n`. Adjacency is stored as one
//! 64-bit [`VertexSet`] per vertex, which keeps every neighborhood query a
//! handful of word operations.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest order accepted anywhere in the crate (short-form graph6).
pub const MAX_ORDER: usize = 62;

/// A subset of `0..64`, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `size`-element subsets of `{0..n}` in colexicographic order.
    pub fn subsets_of_size(n: usize, size: usize) -> SubsetsOfSize {
        debug_assert!(n <= 63);
        SubsetsOfSize {
            next: if size > n {
                None
            } else {
                Some((1u64 << size) - 1)
            },
            limit: 1u64 << n,
        }
    }
}

/// Gosper's-hack iterator behind [`VertexSet::subsets_of_size`].
pub struct SubsetsOfSize {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;

    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(VertexSet(cur))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} does not fit a vertex set"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `0..n` from an edge list. Duplicate edges coalesce.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "a graph needs at least one vertex".into(),
            ));
        }
        if n > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "order {n} exceeds the supported maximum of {MAX_ORDER}"
            )));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        Graph::empty(n)?;
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if !row.is_subset(all) {
                return Err(Error::InvalidInput(format!(
                    "row {v} names a vertex outside 0..{n}"
                )));
            }
            if row.contains(v) {
                return Err(Error::InvalidInput(format!("loop at vertex {v}")));
            }
            for w in row.iter() {
                if !adj[w].contains(v) {
                    return Err(Error::InvalidInput(format!(
                        "adjacency is not symmetric at ({v},{w})"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    // Internal constructor for generators that produce symmetric rows by
    // construction.
    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, row)| {
            let above = *row - VertexSet::full(a + 1);
            above.iter().map(move |b| (a, b))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|r| r.len() == n - 1)
    }

    /// Union of the neighborhoods of `set`, minus `set` itself.
    pub fn neighbors_of_set(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set.iter() {
            out |= self.adj[v];
        }
        out - set
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// All vertices of `within` reachable from `start` inside `G[within]`.
    #[inline]
    pub fn reach_within(&self, within: VertexSet, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start) & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach_within(rest, v);
            out.push(comp);
            rest = rest - comp;
        }
        out
    }

    /// Number of components of `G[within]`, stopping once `cap` is reached.
    #[inline]
    pub fn count_components_within(&self, within: VertexSet, cap: usize) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.min() {
            count += 1;
            if count >= cap {
                return count;
            }
            rest = rest - self.reach_within(rest, v);
        }
        count
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.min() {
            None => true,
            Some(v) => self.reach_within(within, v) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Components of `G - removed`: the operation behind `c(G - S)`.
    pub fn components_after_removal(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices() - removed)
    }

    /// Shortest path from `from` to `to` inside `G[within]`.
    ///
    /// Breadth-first; neighbors are explored in increasing index order and the
    /// first discoverer becomes the parent, so ties break toward low indices.
    pub fn shortest_path_within(
        &self,
        within: VertexSet,
        from: usize,
        to: usize,
    ) -> Option<Vec<usize>> {
        if !within.contains(from) || !within.contains(to) {
            return None;
        }
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut seen = VertexSet::singleton(from);
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            if a == to {
                break;
            }
            for b in (self.adj[a] & within) - seen {
                seen.insert(b);
                parent[b] = a;
                queue.push_back(b);
            }
        }
        if !seen.contains(to) {
            return None;
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// The graph obtained by adding one edge.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((a, b));
        Graph::new(self.order(), &edges)
    }
}
