use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A `(u, v)`-path with a position index for O(1) successor and
/// predecessor queries.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedPath {
    seq: Vec<usize>,
    pos: Vec<usize>,
    set: VertexSet,
}

const OFF: usize = usize::MAX;

impl OrientedPath {
    /// Checks that `seq` is a path of `g`: at least two vertices, no
    /// repeats, consecutive vertices adjacent.
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<OrientedPath> {
        let n = g.order();
        if seq.len() < 2 {
            return Err(Error::InvalidInput("a path needs two endpoints".into()));
        }
        let mut pos = vec![OFF; n];
        let mut set = VertexSet::EMPTY;
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidInput(format!("vertex {v} outside 0..{n}")));
            }
            if set.contains(v) {
                return Err(Error::InvalidInput(format!("vertex {v} repeats")));
            }
            set.insert(v);
            pos[v] = i;
        }
        if let Some(w) = seq.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::InvalidInput(format!(
                "{} and {} are not adjacent",
                w[0], w[1]
            )));
        }
        Ok(OrientedPath { seq, pos, set })
    }

    #[inline]
    pub fn start(&self) -> usize {
        self.seq[0]
    }

    #[inline]
    pub fn end(&self) -> usize {
        *self.seq.last().unwrap()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.set
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.seq
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.set.contains(v)
    }

    /// Index of `v` along the path.
    #[inline]
    pub fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(v).copied().filter(|&p| p != OFF)
    }

    #[inline]
    pub fn at(&self, index: usize) -> usize {
        self.seq[index]
    }

    /// `v^{+steps}` (or `v^{-steps}` for negative `steps`).
    pub fn step(&self, v: usize, steps: isize) -> Option<usize> {
        let p = self.position(v)? as isize + steps;
        (0..self.seq.len() as isize)
            .contains(&p)
            .then(|| self.seq[p as usize])
    }

    #[inline]
    pub fn succ(&self, v: usize) -> Option<usize> {
        self.step(v, 1)
    }

    #[inline]
    pub fn pred(&self, v: usize) -> Option<usize> {
        self.step(v, -1)
    }

    /// The same vertices traversed from `v` to `u`.
    pub fn reversed(&self) -> OrientedPath {
        let seq: Vec<usize> = self.seq.iter().rev().copied().collect();
        let mut pos = vec![OFF; self.pos.len()];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        OrientedPath {
            seq,
            pos,
            set: self.set,
        }
    }

    /// Vertices sorted by position.
    pub fn in_path_order(&self, set: VertexSet) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().filter(|&v| self.contains(v)).collect();
        out.sort_unstable_by_key(|&v| self.pos[v]);
        out
    }
}

impl fmt::Debug for OrientedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.seq).finish()
    }
}
