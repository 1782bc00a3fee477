//! Independent re-validation of extraction outcomes.
//!
//! Only graph primitives are used here. Nothing in this module calls into
//! the engine, so an accepted certificate is evidence on its own.

use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::outcome::{Certificate, ExtractionOutcome, OutcomeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Accept,
    Reject,
}

/// The first failed condition of a checklist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationCode {
    /// `k = 0`, `u = v`, or an endpoint outside the graph.
    BadParameters,
    VertexOutOfRange,
    WrongStart,
    WrongEnd,
    RepeatedVertex,
    MissingVertex,
    NonAdjacentStep,
    CutTooLarge,
    TooFewComponents,
    ComponentsMismatch,
    EdgeAbsent,
    WrongIndependentSize,
    VerticesNotDistinct,
    ExtraEdge,
    NotComplement,
    NotIndependent,
    CutExceedsComponents,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::BadParameters => "bad_parameters",
            ViolationCode::VertexOutOfRange => "vertex_out_of_range",
            ViolationCode::WrongStart => "wrong_start",
            ViolationCode::WrongEnd => "wrong_end",
            ViolationCode::RepeatedVertex => "repeated_vertex",
            ViolationCode::MissingVertex => "missing_vertex",
            ViolationCode::NonAdjacentStep => "non_adjacent_step",
            ViolationCode::CutTooLarge => "cut_too_large",
            ViolationCode::TooFewComponents => "too_few_components",
            ViolationCode::ComponentsMismatch => "components_mismatch",
            ViolationCode::EdgeAbsent => "edge_absent",
            ViolationCode::WrongIndependentSize => "wrong_independent_size",
            ViolationCode::VerticesNotDistinct => "vertices_not_distinct",
            ViolationCode::ExtraEdge => "extra_edge",
            ViolationCode::NotComplement => "not_complement",
            ViolationCode::NotIndependent => "not_independent",
            ViolationCode::CutExceedsComponents => "cut_exceeds_components",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub kind: OutcomeKind,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accept
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "accept {}", self.kind.as_str()),
            Some(v) => write!(
                f,
                "reject {}: {} [{}]",
                self.kind.as_str(),
                v.message,
                v.code.as_str()
            ),
        }
    }
}

type Check = Result<(), Violation>;

fn fail(code: ViolationCode, message: impl Into<String>) -> Check {
    Err(Violation {
        code,
        message: message.into(),
    })
}

/// Checks `outcome` against `(G, k, u, v)`. Rejection is a verdict, never
/// an error.
pub fn validate_outcome(
    g: &Graph,
    k: usize,
    u: usize,
    v: usize,
    outcome: &ExtractionOutcome,
) -> ValidationReport {
    let result = parameters(g, k, u, v).and_then(|()| match outcome {
        ExtractionOutcome::HamiltonPath(path) => hamilton_path(g, u, v, path),
        ExtractionOutcome::Certificate(c) => validate_certificate(g, k, c),
    });
    ValidationReport {
        kind: outcome.kind(),
        verdict: if result.is_ok() {
            Verdict::Accept
        } else {
            Verdict::Reject
        },
        violation: result.err(),
    }
}

fn parameters(g: &Graph, k: usize, u: usize, v: usize) -> Check {
    let n = g.order();
    if k == 0 {
        return fail(ViolationCode::BadParameters, "k must be at least 1");
    }
    if u >= n || v >= n || u == v {
        return fail(
            ViolationCode::BadParameters,
            format!("endpoints ({u},{v}) must be distinct vertices of a {n}-vertex graph"),
        );
    }
    Ok(())
}

fn hamilton_path(g: &Graph, u: usize, v: usize, path: &[usize]) -> Check {
    let n = g.order();
    if let Some(&bad) = path.iter().find(|&&w| w >= n) {
        return fail(
            ViolationCode::VertexOutOfRange,
            format!("vertex {bad} is not in G"),
        );
    }
    if path.first() != Some(&u) {
        return fail(
            ViolationCode::WrongStart,
            format!("path does not start at {u}"),
        );
    }
    if path.last() != Some(&v) {
        return fail(ViolationCode::WrongEnd, format!("path does not end at {v}"));
    }
    let mut seen = vec![false; n];
    for &w in path {
        if std::mem::replace(&mut seen[w], true) {
            return fail(
                ViolationCode::RepeatedVertex,
                format!("vertex {w} appears twice"),
            );
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return fail(
            ViolationCode::MissingVertex,
            format!("vertex {missing} is not covered"),
        );
    }
    for pair in path.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return fail(
                ViolationCode::NonAdjacentStep,
                format!("{} and {} are not adjacent", pair[0], pair[1]),
            );
        }
    }
    Ok(())
}

fn validate_certificate(g: &Graph, k: usize, cert: &Certificate) -> Check {
    match cert {
        Certificate::SmallCut { cut, components } => small_cut(g, k, *cut, components),
        Certificate::ForbiddenInduced { edge, independent } => {
            forbidden_induced(g, k, *edge, *independent)
        }
        Certificate::ToughnessWitness {
            cut,
            independent,
            components,
        } => toughness_witness(g, *cut, *independent, components),
    }
}

fn in_range(g: &Graph, sets: &[VertexSet]) -> Check {
    for &s in sets {
        if !s.is_subset(g.vertices()) {
            return fail(
                ViolationCode::VertexOutOfRange,
                format!("{s:?} has a vertex outside G"),
            );
        }
    }
    Ok(())
}

/// Components of `G - cut`, recomputed here by plain graph search.
fn components_without(g: &Graph, cut: VertexSet) -> Vec<VertexSet> {
    let mut left = g.vertices() - cut;
    let mut out = Vec::new();
    while let Some(start) = left.min() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next |= g.neighbors(w);
            }
            frontier = (next & left) - comp;
            comp |= frontier;
        }
        left = left - comp;
        out.push(comp);
    }
    out
}

fn same_partition(listed: &[VertexSet], actual: &[VertexSet]) -> bool {
    let mut a: Vec<u64> = listed.iter().map(|s| s.bits()).collect();
    let mut b: Vec<u64> = actual.iter().map(|s| s.bits()).collect();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn small_cut(g: &Graph, k: usize, cut: VertexSet, components: &[VertexSet]) -> Check {
    in_range(g, &[cut])?;
    in_range(g, components)?;
    if cut.len() >= 2 * k {
        return fail(
            ViolationCode::CutTooLarge,
            format!("|S| = {} is not below 2k = {}", cut.len(), 2 * k),
        );
    }
    let actual = components_without(g, cut);
    if actual.len() < 2 {
        return fail(
            ViolationCode::TooFewComponents,
            format!("G - S has {} component(s)", actual.len()),
        );
    }
    if !same_partition(components, &actual) {
        return fail(
            ViolationCode::ComponentsMismatch,
            "listed components differ from those of G - S",
        );
    }
    Ok(())
}

fn forbidden_induced(g: &Graph, k: usize, (z, w): (usize, usize), ind: VertexSet) -> Check {
    let n = g.order();
    if z >= n || w >= n {
        return fail(
            ViolationCode::VertexOutOfRange,
            format!("edge ({z},{w}) leaves G"),
        );
    }
    in_range(g, &[ind])?;
    if z == w || ind.contains(z) || ind.contains(w) {
        return fail(
            ViolationCode::VerticesNotDistinct,
            "the edge and the independent vertices overlap",
        );
    }
    if !g.has_edge(z, w) {
        return fail(
            ViolationCode::EdgeAbsent,
            format!("{z} and {w} are not adjacent"),
        );
    }
    if ind.len() != k {
        return fail(
            ViolationCode::WrongIndependentSize,
            format!("{} independent vertices given, k = {k}", ind.len()),
        );
    }
    let all = ind | VertexSet::singleton(z) | VertexSet::singleton(w);
    for a in all {
        for b in all {
            if a < b && (a, b) != (z.min(w), z.max(w)) && g.has_edge(a, b) {
                return fail(
                    ViolationCode::ExtraEdge,
                    format!("{a}-{b} is an edge of the induced subgraph"),
                );
            }
        }
    }
    Ok(())
}

fn toughness_witness(g: &Graph, cut: VertexSet, ind: VertexSet, components: &[VertexSet]) -> Check {
    in_range(g, &[cut, ind])?;
    in_range(g, components)?;
    if ind != g.vertices() - cut {
        return fail(ViolationCode::NotComplement, "W is not V(G) - S*");
    }
    for a in ind {
        if let Some(b) = (g.neighbors(a) & ind).min() {
            return fail(
                ViolationCode::NotIndependent,
                format!("{a}-{b} lies inside W"),
            );
        }
    }
    let actual = components_without(g, cut);
    if actual.len() < 2 {
        return fail(
            ViolationCode::TooFewComponents,
            format!("G - S* has {} component(s)", actual.len()),
        );
    }
    if cut.len() > actual.len() {
        return fail(
            ViolationCode::CutExceedsComponents,
            format!("|S*| = {} exceeds c(G - S*) = {}", cut.len(), actual.len()),
        );
    }
    if !same_partition(components, &actual) {
        return fail(
            ViolationCode::ComponentsMismatch,
            "listed components differ from those of G - S*",
        );
    }
    Ok(())
}
