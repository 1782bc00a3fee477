//! The extraction engine: grow a `(u, v)`-path one rule at a time until it
//! is Hamiltonian or a certificate explains why it cannot be.

mod context;
mod path;
mod rotation;
mod step;

pub use context::{context_for, decompose, Decomposition, PathContext, Segments};
pub use path::OrientedPath;
pub use rotation::{apply_rotation, RotationPlan, ThreeCase};
pub use step::{extend_or_certify, Rule, StallReport, StepOutcome};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::outcome::{Certificate, ExtractionOutcome};

/// What one iteration did.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Event {
    Extended,
    Certified,
    Hamilton,
    Stalled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub event: Event,
    /// Path length after the step.
    pub path_len: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plan: Option<RotationPlan>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub result: std::result::Result<ExtractionOutcome, Box<StallReport>>,
    pub trace: Vec<TraceStep>,
    /// Length of the starting shortest path, 0 when none exists.
    pub initial_len: usize,
}

impl Extraction {
    pub fn extended_steps(&self) -> usize {
        self.trace
            .iter()
            .filter(|s| s.event == Event::Extended)
            .count()
    }

    /// Whether the exhaustive insertion search had to step in.
    pub fn used_search(&self) -> bool {
        self.trace.iter().any(|s| s.rule == Rule::InsertionSearch)
    }
}

/// Shortest `(u, v)`-path, ties broken toward low indices.
pub fn initial_path(g: &Graph, u: usize, v: usize) -> Option<OrientedPath> {
    let seq = g.shortest_path_within(g.vertices(), u, v)?;
    Some(OrientedPath::new(g, seq).expect("a BFS path is a path"))
}

/// Runs the engine from a shortest `(u, v)`-path to a final outcome.
pub fn extract(g: &Graph, k: usize, u: usize, v: usize) -> Result<Extraction> {
    let n = g.order();
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    if u >= n || v >= n {
        return Err(Error::InvalidInput(format!(
            "endpoints ({u},{v}) outside 0..{n}"
        )));
    }
    if u == v {
        return Err(Error::InvalidInput("endpoints must be distinct".into()));
    }

    let Some(mut path) = initial_path(g, u, v) else {
        let components = g.components_after_removal(VertexSet::EMPTY);
        return Ok(Extraction {
            result: Ok(ExtractionOutcome::Certificate(Certificate::SmallCut {
                cut: VertexSet::EMPTY,
                components,
            })),
            trace: vec![TraceStep {
                rule: Rule::Disconnected,
                event: Event::Certified,
                path_len: 0,
                plan: None,
                reversed: false,
            }],
            initial_len: 0,
        });
    };
    let initial_len = path.len();
    let mut trace = Vec::new();
    // Each extension adds a vertex, so at most n - initial_len of them.
    for _ in 0..=n {
        let step = extend_or_certify(g, k, &path)?;
        let (rule, event, plan, reversed, len) = match &step {
            StepOutcome::Extended {
                path: next,
                rule,
                plan,
                reversed,
            } => (*rule, Event::Extended, plan.clone(), *reversed, next.len()),
            StepOutcome::Hamilton(p) => (Rule::Covered, Event::Hamilton, None, false, p.len()),
            StepOutcome::Certified { rule, .. } => {
                (*rule, Event::Certified, None, false, path.len())
            }
            StepOutcome::Stalled(_) => (Rule::Covered, Event::Stalled, None, false, path.len()),
        };
        trace.push(TraceStep {
            rule,
            event,
            path_len: len,
            plan,
            reversed,
        });
        let result = match step {
            StepOutcome::Extended { path: next, .. } => {
                if next.len() <= path.len()
                    || next.start() != u
                    || next.end() != v
                    || !path.vertices().is_subset(next.vertices())
                {
                    return Err(Error::InternalLogic(format!(
                        "{} did not lengthen the path",
                        rule.name()
                    )));
                }
                path = next;
                continue;
            }
            StepOutcome::Hamilton(p) => Ok(ExtractionOutcome::HamiltonPath(p.into_vec())),
            StepOutcome::Certified { certificate, .. } => {
                Ok(ExtractionOutcome::Certificate(certificate))
            }
            StepOutcome::Stalled(report) => Err(report),
        };
        return Ok(Extraction {
            result,
            trace,
            initial_len,
        });
    }
    Err(Error::InternalLogic(
        "extension loop exceeded n iterations".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, complete_bipartite, cycle};

    #[test]
    fn k44_same_side_pair_ends_in_a_toughness_witness() {
        let g = complete_bipartite(4, 4);
        let e = extract(&g, 2, 0, 1).unwrap();
        let lens: Vec<_> = e.trace.iter().map(|s| s.path_len).collect();
        assert_eq!(e.initial_len, 3);
        assert_eq!(lens, vec![5, 7, 7]);
        assert_eq!(e.trace.last().unwrap().rule, Rule::ToughnessEndgame);
        let Ok(ExtractionOutcome::Certificate(Certificate::ToughnessWitness {
            cut,
            independent,
            components,
        })) = e.result
        else {
            panic!("unexpected {:?}", e.result)
        };
        assert_eq!(cut.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(independent.to_vec(), vec![4, 5, 6, 7]);
        assert_eq!(components.len(), 4);
    }

    #[test]
    fn k44_growth_sequence() {
        let g = complete_bipartite(4, 4);
        let mut p = initial_path(&g, 0, 1).unwrap();
        assert_eq!(p.as_slice(), &[0, 4, 1]);
        let mut seen = Vec::new();
        while let StepOutcome::Extended { path, .. } = extend_or_certify(&g, 2, &p).unwrap() {
            seen.push(path.as_slice().to_vec());
            p = path;
        }
        assert_eq!(seen, vec![vec![0, 5, 2, 4, 1], vec![0, 6, 3, 5, 2, 4, 1]]);
    }

    #[test]
    fn edge_off_the_path_gives_forbidden_subgraph() {
        let g = cycle(6);
        let p = OrientedPath::new(&g, vec![0, 1, 2, 3]).unwrap();
        let out = extend_or_certify(&g, 1, &p).unwrap();
        assert_eq!(
            out,
            StepOutcome::Certified {
                certificate: Certificate::ForbiddenInduced {
                    edge: (4, 5),
                    independent: VertexSet::singleton(1),
                },
                rule: Rule::ComponentEdge,
            }
        );
    }

    #[test]
    fn complete_graph_reaches_hamilton_paths() {
        let g = complete(6);
        for v in 1..6 {
            let e = extract(&g, 1, 0, v).unwrap();
            let Ok(ExtractionOutcome::HamiltonPath(ref path)) = e.result else {
                panic!()
            };
            assert_eq!(path.len(), 6);
            assert_eq!((path[0], path[5]), (0, v));
            assert!(e.extended_steps() <= 4);
        }
    }

    #[test]
    fn disconnected_endpoints() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let e = extract(&g, 1, 0, 3).unwrap();
        assert_eq!(e.trace[0].rule, Rule::Disconnected);
        assert!(matches!(
            e.result,
            Ok(ExtractionOutcome::Certificate(Certificate::SmallCut { cut, ref components }))
                if cut.is_empty() && components.len() == 2
        ));
    }

    #[test]
    fn bad_arguments() {
        let g = complete(4);
        assert!(matches!(extract(&g, 0, 0, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(extract(&g, 1, 2, 2), Err(Error::InvalidInput(_))));
        assert!(matches!(extract(&g, 1, 0, 9), Err(Error::InvalidInput(_))));
        assert!(matches!(
            extract(&complete(2), 1, 0, 1),
            Err(Error::InvalidInput(_))
        ));
    }
}
