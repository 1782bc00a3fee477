//! Extraction outcomes and their JSON form.
//!
//! Certificates serialize as flat objects tagged by `kind`:
//!
//! ```json
//! {"kind":"hamilton_path","path":[0,4,1,5,2,6,3,7]}
//! {"kind":"small_cut","cut":[2],"components":[[0,1],[3,4]]}
//! {"kind":"forbidden_induced","edge":[4,5],"independent":[1]}
//! {"kind":"toughness_witness","cut":[0,1,2,3],"independent":[4,5,6,7],"components":[[4],[5],[6],[7]]}
//! ```
//!
//! A [`CertificateRecord`] adds `k`, `u` and `v` to the same object.

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;

/// Evidence that one hypothesis of the theorem fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `|cut| < 2k` and `G - cut` has the listed (at least two) components.
    SmallCut {
        cut: VertexSet,
        components: Vec<VertexSet>,
    },
    /// `edge` plus `independent` induce `P2 ∪ kP1`.
    ForbiddenInduced {
        edge: (usize, usize),
        independent: VertexSet,
    },
    /// `independent = V(G) - cut` is independent and at least as large as
    /// `cut`, so `c(G - cut) >= |cut|` and `τ(G) <= 1`.
    ToughnessWitness {
        cut: VertexSet,
        independent: VertexSet,
        components: Vec<VertexSet>,
    },
}

impl Certificate {
    pub fn kind(&self) -> OutcomeKind {
        match self {
            Certificate::SmallCut { .. } => OutcomeKind::SmallCut,
            Certificate::ForbiddenInduced { .. } => OutcomeKind::ForbiddenInduced,
            Certificate::ToughnessWitness { .. } => OutcomeKind::ToughnessWitness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Wire", from = "Wire")]
pub enum ExtractionOutcome {
    HamiltonPath(Vec<usize>),
    Certificate(Certificate),
}

impl ExtractionOutcome {
    pub fn kind(&self) -> OutcomeKind {
        match self {
            ExtractionOutcome::HamiltonPath(_) => OutcomeKind::HamiltonPath,
            ExtractionOutcome::Certificate(c) => c.kind(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeKind {
    HamiltonPath,
    SmallCut,
    ForbiddenInduced,
    ToughnessWitness,
}

impl OutcomeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OutcomeKind::HamiltonPath => "hamilton_path",
            OutcomeKind::SmallCut => "small_cut",
            OutcomeKind::ForbiddenInduced => "forbidden_induced",
            OutcomeKind::ToughnessWitness => "toughness_witness",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Wire {
    HamiltonPath {
        path: Vec<usize>,
    },
    SmallCut {
        cut: VertexSet,
        components: Vec<VertexSet>,
    },
    ForbiddenInduced {
        edge: (usize, usize),
        independent: VertexSet,
    },
    ToughnessWitness {
        cut: VertexSet,
        independent: VertexSet,
        components: Vec<VertexSet>,
    },
}

impl From<ExtractionOutcome> for Wire {
    fn from(o: ExtractionOutcome) -> Wire {
        match o {
            ExtractionOutcome::HamiltonPath(path) => Wire::HamiltonPath { path },
            ExtractionOutcome::Certificate(Certificate::SmallCut { cut, components }) => {
                Wire::SmallCut { cut, components }
            }
            ExtractionOutcome::Certificate(Certificate::ForbiddenInduced { edge, independent }) => {
                Wire::ForbiddenInduced { edge, independent }
            }
            ExtractionOutcome::Certificate(Certificate::ToughnessWitness {
                cut,
                independent,
                components,
            }) => Wire::ToughnessWitness {
                cut,
                independent,
                components,
            },
        }
    }
}

impl From<Wire> for ExtractionOutcome {
    fn from(w: Wire) -> ExtractionOutcome {
        match w {
            Wire::HamiltonPath { path } => ExtractionOutcome::HamiltonPath(path),
            Wire::SmallCut { cut, components } => {
                ExtractionOutcome::Certificate(Certificate::SmallCut { cut, components })
            }
            Wire::ForbiddenInduced { edge, independent } => {
                ExtractionOutcome::Certificate(Certificate::ForbiddenInduced { edge, independent })
            }
            Wire::ToughnessWitness {
                cut,
                independent,
                components,
            } => ExtractionOutcome::Certificate(Certificate::ToughnessWitness {
                cut,
                independent,
                components,
            }),
        }
    }
}

/// One line of the certificate interchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub k: usize,
    pub u: usize,
    pub v: usize,
    #[serde(flatten)]
    pub outcome: ExtractionOutcome,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let rec = CertificateRecord {
            k: 1,
            u: 0,
            v: 3,
            outcome: ExtractionOutcome::Certificate(Certificate::ForbiddenInduced {
                edge: (4, 5),
                independent: VertexSet::singleton(1),
            }),
        };
        let text = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            text,
            r#"{"k":1,"u":0,"v":3,"kind":"forbidden_induced","edge":[4,5],"independent":[1]}"#
        );
        let back: CertificateRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn hamilton_path_json() {
        let rec: CertificateRecord =
            serde_json::from_str(r#"{"kind":"hamilton_path","k":1,"u":0,"v":1,"path":[0,2,1]}"#)
                .unwrap();
        assert_eq!(rec.outcome, ExtractionOutcome::HamiltonPath(vec![0, 2, 1]));
        assert!(
            serde_json::from_str::<CertificateRecord>(r#"{"kind":"nope","k":1,"u":0,"v":1}"#)
                .is_err()
        );
    }
}
