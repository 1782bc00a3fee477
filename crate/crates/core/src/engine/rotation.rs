//! The path-lengthening constructions.
//!
//! Each template rebuilds a `(u, v)`-path from forward and reversed pieces
//! of `P` plus off-path vertices. Positions refer to the input path; `a^+`
//! is the successor of `a` on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::path::OrientedPath;

/// Which side of the anchor pair `(a, b)` the two common neighbors'
/// predecessors `x_p`, `x_q` lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeCase {
    /// `x_p` at or after `b`.
    Beyond,
    /// `x_q` before `a`.
    Before,
    /// `x_p` before `a`, `x_q` at or after `b`.
    Straddle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "template", rename_all = "snake_case")]
pub enum RotationPlan {
    /// `H` sees both `at` and `at^+`: splice `through` (a path in `H`)
    /// between them.
    InsertAtConsecutive { at: usize, through: Vec<usize> },
    /// `from^+ ~ to^+`:
    /// `P[u, from], through, P[to, from^+] (reversed), P[to^+, v]`.
    ViaComponentPath {
        from: usize,
        to: usize,
        through: Vec<usize>,
    },
    /// `x` sees `low` and `high`; `low^+` and `high^+` are both adjacent to
    /// both `anchor` and `anchor^+`.
    ThreeCase {
        case: ThreeCase,
        anchor: usize,
        x: usize,
        low: usize,
        high: usize,
    },
    /// `x` sees `low` and `high`, the off-path vertex `y` sees `low^+` and
    /// `high^+`: `P[u, low], x, P[high, low^+] (reversed), y, P[high^+, v]`.
    OutsideTwoNeighbors {
        y: usize,
        x: usize,
        low: usize,
        high: usize,
    },
}

impl RotationPlan {
    /// Vertices the plan brings onto the path.
    pub fn inserted(&self) -> Vec<usize> {
        match self {
            RotationPlan::InsertAtConsecutive { through, .. }
            | RotationPlan::ViaComponentPath { through, .. } => through.clone(),
            RotationPlan::ThreeCase { x, .. } => vec![*x],
            RotationPlan::OutsideTwoNeighbors { y, x, .. } => vec![*x, *y],
        }
    }

    /// Classifies the anchor pair against `(low, high)` for a three-case plan.
    pub fn classify(p: &OrientedPath, anchor: usize, low: usize, high: usize) -> Option<ThreeCase> {
        let pa = p.position(anchor)?;
        let pl = p.position(low)?;
        let ph = p.position(high)?;
        if pl >= ph || pl == pa || ph == pa {
            return None;
        }
        Some(if pl > pa {
            ThreeCase::Beyond
        } else if ph < pa {
            ThreeCase::Before
        } else {
            ThreeCase::Straddle
        })
    }
}

fn pos(p: &OrientedPath, v: usize, role: &str) -> Result<usize> {
    p.position(v)
        .ok_or_else(|| Error::InternalLogic(format!("{role} {v} is not on the path")))
}

/// Builds the new path for `plan` and checks it edge by edge.
pub fn apply_rotation(g: &Graph, p: &OrientedPath, plan: &RotationPlan) -> Result<OrientedPath> {
    let s = p.as_slice();
    let rev = |lo: usize, hi: usize| s[lo..=hi].iter().rev().copied();
    let mut seq: Vec<usize> = Vec::with_capacity(s.len() + plan.inserted().len());
    match plan {
        RotationPlan::InsertAtConsecutive { at, through } => {
            let i = pos(p, *at, "insertion point")?;
            if i + 1 >= s.len() {
                return Err(Error::InternalLogic(format!("{at} has no successor")));
            }
            seq.extend(&s[..=i]);
            seq.extend(through);
            seq.extend(&s[i + 1..]);
        }
        RotationPlan::ViaComponentPath { from, to, through } => {
            let i = pos(p, *from, "x_i")?;
            let j = pos(p, *to, "x_j")?;
            if i >= j || j + 1 >= s.len() {
                return Err(Error::InternalLogic(format!(
                    "bad successor-edge anchors {from} -> {to}"
                )));
            }
            seq.extend(&s[..=i]);
            seq.extend(through);
            seq.extend(rev(i + 1, j));
            seq.extend(&s[j + 1..]);
        }
        RotationPlan::ThreeCase {
            case,
            anchor,
            x,
            low,
            high,
        } => {
            let a = pos(p, *anchor, "anchor")?;
            let lo = pos(p, *low, "x_p")?;
            let hi = pos(p, *high, "x_q")?;
            if RotationPlan::classify(p, *anchor, *low, *high) != Some(*case)
                || a + 1 >= s.len()
                || hi + 1 >= s.len()
            {
                return Err(Error::InternalLogic(format!(
                    "three-case plan {case:?} does not match positions a={a}, p={lo}, q={hi}"
                )));
            }
            match case {
                ThreeCase::Beyond => {
                    seq.extend(&s[..=a]);
                    seq.extend(&s[lo + 1..=hi]);
                    seq.push(*x);
                    seq.extend(rev(a + 1, lo));
                    seq.extend(&s[hi + 1..]);
                }
                ThreeCase::Before => {
                    seq.extend(&s[..=lo]);
                    seq.push(*x);
                    seq.extend(rev(lo + 1, hi));
                    seq.extend(rev(hi + 1, a));
                    seq.extend(&s[a + 1..]);
                }
                ThreeCase::Straddle => {
                    seq.extend(&s[..=lo]);
                    seq.push(*x);
                    seq.extend(rev(a + 1, hi));
                    seq.extend(&s[lo + 1..=a]);
                    seq.extend(&s[hi + 1..]);
                }
            }
        }
        RotationPlan::OutsideTwoNeighbors { y, x, low, high } => {
            let lo = pos(p, *low, "x_p")?;
            let hi = pos(p, *high, "x_q")?;
            if lo >= hi || hi + 1 >= s.len() {
                return Err(Error::InternalLogic(format!(
                    "bad outside-vertex anchors {low}, {high}"
                )));
            }
            seq.extend(&s[..=lo]);
            seq.push(*x);
            seq.extend(rev(lo + 1, hi));
            seq.push(*y);
            seq.extend(&s[hi + 1..]);
        }
    }
    check_extension(g, p, seq)
}

fn check_extension(g: &Graph, p: &OrientedPath, seq: Vec<usize>) -> Result<OrientedPath> {
    let new = OrientedPath::new(g, seq.clone())
        .map_err(|e| Error::InternalLogic(format!("rotation produced {seq:?}: {e}")))?;
    let grew = p.vertices().is_subset(new.vertices()) && new.len() > p.len();
    if new.start() != p.start() || new.end() != p.end() || !grew {
        return Err(Error::InternalLogic(format!(
            "rotation produced {seq:?}, which does not extend {p:?}"
        )));
    }
    debug_assert_eq!(new.vertices() - p.vertices(), {
        let s: VertexSet = seq.iter().filter(|&&v| !p.contains(v)).collect();
        s
    });
    Ok(new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn insert_between_consecutive_neighbors() {
        let g = graph(6, &[(1, 2), (2, 3), (5, 1), (5, 2)]);
        let p = OrientedPath::new(&g, vec![1, 2, 3]).unwrap();
        let plan = RotationPlan::InsertAtConsecutive {
            at: 1,
            through: vec![5],
        };
        assert_eq!(
            apply_rotation(&g, &p, &plan).unwrap().as_slice(),
            &[1, 5, 2, 3]
        );
    }

    #[test]
    fn via_component_path() {
        // P = 1 2 3 4, x = 5 sees 1 and 3, successors 2 and 4 adjacent.
        let g = graph(6, &[(1, 2), (2, 3), (3, 4), (5, 1), (5, 3), (2, 4)]);
        let p = OrientedPath::new(&g, vec![1, 2, 3, 4]).unwrap();
        let plan = RotationPlan::ViaComponentPath {
            from: 1,
            to: 3,
            through: vec![5],
        };
        assert_eq!(
            apply_rotation(&g, &p, &plan).unwrap().as_slice(),
            &[1, 5, 3, 2, 4]
        );
    }

    #[test]
    fn missing_adjacency_is_an_engine_bug() {
        let g = graph(6, &[(1, 2), (2, 3), (3, 4), (5, 1), (5, 3)]);
        let p = OrientedPath::new(&g, vec![1, 2, 3, 4]).unwrap();
        let plan = RotationPlan::ViaComponentPath {
            from: 1,
            to: 3,
            through: vec![5],
        };
        assert!(matches!(
            apply_rotation(&g, &p, &plan),
            Err(Error::InternalLogic(_))
        ));
    }

    fn path_with(n: usize, len: usize, extra: &[(usize, usize)]) -> (Graph, OrientedPath) {
        let mut edges: Vec<_> = (0..len - 1).map(|i| (i, i + 1)).collect();
        edges.extend_from_slice(extra);
        let g = graph(n, &edges);
        let p = OrientedPath::new(&g, (0..len).collect()).unwrap();
        (g, p)
    }

    fn three_case(
        p: &OrientedPath,
        anchor: usize,
        x: usize,
        low: usize,
        high: usize,
    ) -> RotationPlan {
        RotationPlan::ThreeCase {
            case: RotationPlan::classify(p, anchor, low, high).unwrap(),
            anchor,
            x,
            low,
            high,
        }
    }

    #[test]
    fn straddle() {
        let (g, p) = path_with(10, 9, &[(9, 1), (9, 6), (3, 7), (4, 2), (4, 7)]);
        assert_eq!(
            RotationPlan::classify(&p, 3, 1, 6),
            Some(ThreeCase::Straddle)
        );
        let new = apply_rotation(&g, &p, &three_case(&p, 3, 9, 1, 6)).unwrap();
        assert_eq!(new.as_slice(), &[0, 1, 9, 6, 5, 4, 2, 3, 7, 8]);
    }

    #[test]
    fn beyond() {
        let (g, p) = path_with(11, 10, &[(10, 4), (10, 7), (1, 5), (2, 8)]);
        assert_eq!(RotationPlan::classify(&p, 1, 4, 7), Some(ThreeCase::Beyond));
        let new = apply_rotation(&g, &p, &three_case(&p, 1, 10, 4, 7)).unwrap();
        assert_eq!(new.as_slice(), &[0, 1, 5, 6, 7, 10, 4, 3, 2, 8, 9]);
    }

    #[test]
    fn before() {
        let (g, p) = path_with(11, 10, &[(10, 1), (10, 4), (2, 7), (5, 8)]);
        assert_eq!(RotationPlan::classify(&p, 7, 1, 4), Some(ThreeCase::Before));
        let new = apply_rotation(&g, &p, &three_case(&p, 7, 10, 1, 4)).unwrap();
        assert_eq!(new.as_slice(), &[0, 1, 10, 4, 3, 2, 7, 6, 5, 8, 9]);
    }

    #[test]
    fn outside_two_neighbors() {
        let (g, p) = path_with(8, 6, &[(6, 1), (6, 3), (7, 2), (7, 4)]);
        let plan = RotationPlan::OutsideTwoNeighbors {
            y: 7,
            x: 6,
            low: 1,
            high: 3,
        };
        let new = apply_rotation(&g, &p, &plan).unwrap();
        assert_eq!(new.as_slice(), &[0, 1, 6, 3, 2, 7, 4, 5]);
    }
}
