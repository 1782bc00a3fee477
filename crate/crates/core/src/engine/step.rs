//! One extension step: lengthen `P` or explain why no longer path exists.
//!
//! Rules are tried in a fixed order. The first four look at the whole
//! off-path component `H`; the rest assume `H = {x}` and walk the segments
//! between consecutive neighbors of `x`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{hamilton_path_within, independent_outside_edge};
use crate::outcome::Certificate;

use super::context::{context_for, decompose, Decomposition, PathContext, Segments};
use super::path::OrientedPath;
use super::rotation::{apply_rotation, RotationPlan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `u` and `v` lie in different components; no initial path exists.
    Disconnected,
    /// The path already covers every vertex.
    Covered,
    ConsecutiveNeighbors,
    SuccessorEdge,
    SmallCut,
    ComponentEdge,
    ParityScan,
    EvenSegment,
    OddSetEdge,
    OutsideVertex,
    ToughnessEndgame,
    /// Exhaustive search for a path through `V(P)` plus one more vertex.
    InsertionSearch,
}

impl Rule {
    /// Position in the cascade, `1..=9` for the structural rules.
    pub fn number(self) -> Option<u8> {
        Some(match self {
            Rule::ConsecutiveNeighbors => 1,
            Rule::SuccessorEdge => 2,
            Rule::SmallCut => 3,
            Rule::ComponentEdge => 4,
            Rule::ParityScan => 5,
            Rule::EvenSegment => 6,
            Rule::OddSetEdge => 7,
            Rule::OutsideVertex => 8,
            Rule::ToughnessEndgame => 9,
            Rule::Disconnected | Rule::Covered | Rule::InsertionSearch => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::Disconnected => "disconnected",
            Rule::Covered => "covered",
            Rule::ConsecutiveNeighbors => "consecutive_neighbors",
            Rule::SuccessorEdge => "successor_edge",
            Rule::SmallCut => "small_cut",
            Rule::ComponentEdge => "component_edge",
            Rule::ParityScan => "parity_scan",
            Rule::EvenSegment => "even_segment",
            Rule::OddSetEdge => "odd_set_edge",
            Rule::OutsideVertex => "outside_vertex",
            Rule::ToughnessEndgame => "toughness_endgame",
            Rule::InsertionSearch => "insertion_search",
        }
    }
}

/// State handed back when no rule applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StallReport {
    pub path: Vec<usize>,
    pub context: PathContext,
    /// Why each rule that could have fired did not.
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    /// `path` is a longer `(u, v)`-path. `plan` is `None` for the insertion
    /// search. `reversed` means the plan refers to the reversed input path.
    Extended {
        path: OrientedPath,
        rule: Rule,
        plan: Option<RotationPlan>,
        reversed: bool,
    },
    Hamilton(OrientedPath),
    Certified {
        certificate: Certificate,
        rule: Rule,
    },
    Stalled(Box<StallReport>),
}

enum Action {
    Rotate { plan: RotationPlan, reversed: bool },
    Certify(Certificate),
    Replace(OrientedPath),
}

struct Found {
    rule: Rule,
    action: Action,
}

fn rotate(rule: Rule, plan: RotationPlan, reversed: bool) -> Option<Found> {
    Some(Found {
        rule,
        action: Action::Rotate { plan, reversed },
    })
}

fn certify(rule: Rule, certificate: Certificate) -> Option<Found> {
    Some(Found {
        rule,
        action: Action::Certify(certificate),
    })
}

fn logic(msg: impl Into<String>) -> Error {
    Error::InternalLogic(msg.into())
}

/// Runs the rule cascade once on `p`.
pub fn extend_or_certify(g: &Graph, k: usize, p: &OrientedPath) -> Result<StepOutcome> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let ctx = match decompose(g, k, p) {
        Decomposition::Hamilton => return Ok(StepOutcome::Hamilton(p.clone())),
        Decomposition::Context(ctx) => ctx,
    };
    let mut step = Step {
        g,
        k,
        reasons: Vec::new(),
    };
    let found = match step.structural(p, &ctx)? {
        Some(f) => Some(f),
        None => step.insertion_search(p, &ctx)?,
    };
    let Some(Found { rule, action }) = found else {
        return Ok(StepOutcome::Stalled(Box::new(StallReport {
            path: p.as_slice().to_vec(),
            context: ctx,
            reasons: step.reasons,
        })));
    };
    match action {
        Action::Certify(certificate) => {
            if !self_check(g, k, &certificate) {
                return Err(logic(format!(
                    "{} produced a certificate that fails its own check: {certificate:?}",
                    rule.name()
                )));
            }
            Ok(StepOutcome::Certified { certificate, rule })
        }
        Action::Rotate { plan, reversed } => {
            let path = if reversed {
                apply_rotation(g, &p.reversed(), &plan)?.reversed()
            } else {
                apply_rotation(g, p, &plan)?
            };
            Ok(StepOutcome::Extended {
                path,
                rule,
                plan: Some(plan),
                reversed,
            })
        }
        Action::Replace(path) => Ok(StepOutcome::Extended {
            path,
            rule,
            plan: None,
            reversed: false,
        }),
    }
}

struct Step<'g> {
    g: &'g Graph,
    k: usize,
    reasons: Vec<String>,
}

impl Step<'_> {
    fn structural(&mut self, p: &OrientedPath, ctx: &PathContext) -> Result<Option<Found>> {
        if let Some(f) = self.component_rules(p, ctx)? {
            return Ok(Some(f));
        }
        let (Some(x), Some(segs)) = (ctx.isolated, ctx.segments.as_ref()) else {
            return Err(logic(
                "a component with an internal edge slipped past rule 4",
            ));
        };
        // From here N_P(x) has at least 2k members and N_P(x)^+ is an
        // independent set of non-neighbors of x.
        if let Some(f) = self.parity_rules(p, x, ctx, segs)? {
            return Ok(Some(f));
        }
        if let Some(f) = self.even_segments(p, ctx, segs)? {
            return Ok(Some(f));
        }
        if let Some(f) = self.odd_set_edge(p, x, ctx, segs)? {
            return Ok(Some(f));
        }
        if let Some(f) = self.outside_vertices(p, x, ctx, segs)? {
            return Ok(Some(f));
        }
        Ok(self.endgame(segs))
    }

    /// Rules 1 to 4, valid for any component `H`.
    fn component_rules(&mut self, p: &OrientedPath, ctx: &PathContext) -> Result<Option<Found>> {
        let g = self.g;
        let h = ctx.component;
        let attach: VertexSet = ctx.neighbors.iter().collect();

        for &xi in &ctx.neighbors {
            if let Some(next) = p.succ(xi) {
                if attach.contains(next) {
                    let through = self.path_through(h, xi, next)?;
                    return Ok(rotate(
                        Rule::ConsecutiveNeighbors,
                        RotationPlan::InsertAtConsecutive { at: xi, through },
                        false,
                    ));
                }
            }
        }

        for (i, &si) in ctx.successors.iter().enumerate() {
            for &sj in &ctx.successors[i + 1..] {
                if g.has_edge(si, sj) {
                    let from = p.pred(si).expect("successor has a predecessor");
                    let to = p.pred(sj).expect("successor has a predecessor");
                    let through = self.path_through(h, from, to)?;
                    return Ok(rotate(
                        Rule::SuccessorEdge,
                        RotationPlan::ViaComponentPath { from, to, through },
                        false,
                    ));
                }
            }
        }

        if ctx.neighbors.len() < 2 * self.k {
            let components = g.components_after_removal(attach);
            if components.len() < 2 {
                return Err(logic("N_P(H) is not a cut although H lies off the path"));
            }
            return Ok(certify(
                Rule::SmallCut,
                Certificate::SmallCut {
                    cut: attach,
                    components,
                },
            ));
        }

        if h.len() >= 2 {
            let (z, w) =
                first_edge_within(g, h).ok_or_else(|| logic("component without an edge"))?;
            let cert = self
                .forbidden_from_pool(z, w, &ctx.successors)
                .ok_or_else(|| logic("N_P(H)^+ does not complete an edge of H"))?;
            return Ok(certify(Rule::ComponentEdge, cert));
        }
        Ok(None)
    }

    /// A path inside `H` from a neighbor of `a` to a neighbor of `b`, using
    /// two distinct attachment vertices when `H` offers them.
    fn path_through(&self, h: VertexSet, a: usize, b: usize) -> Result<Vec<usize>> {
        let g = self.g;
        let start = (g.neighbors(a) & h)
            .min()
            .ok_or_else(|| logic(format!("{a} has no neighbor in H")))?;
        let ends = g.neighbors(b) & h;
        let end = (ends - VertexSet::singleton(start))
            .min()
            .or(ends.min())
            .ok_or_else(|| logic(format!("{b} has no neighbor in H")))?;
        g.shortest_path_within(h, start, end)
            .ok_or_else(|| logic("H is not connected"))
    }

    /// Rule 5: parity scans of `S_1 .. S_t` forward, then of `S_0` on the
    /// reversed path.
    fn parity_rules(
        &mut self,
        p: &OrientedPath,
        x: usize,
        ctx: &PathContext,
        segs: &Segments,
    ) -> Result<Option<Found>> {
        for seg in &segs.parts[1..] {
            if seg.is_empty() {
                continue;
            }
            if let Some(action) = self.scan_segment(p, x, &ctx.successors, seg)? {
                return Ok(Some(Found {
                    rule: Rule::ParityScan,
                    action,
                }));
            }
        }

        if segs.parts[0].is_empty() {
            return Ok(None);
        }
        // Reversing P turns S_0 into the last segment and N_P(x)^- into the
        // successor set, so the forward argument applies verbatim provided
        // that set is independent too.
        let rp = p.reversed();
        let rctx = context_for(self.g, self.k, &rp, VertexSet::singleton(x));
        for (i, &si) in rctx.successors.iter().enumerate() {
            for &sj in &rctx.successors[i + 1..] {
                if self.g.has_edge(si, sj) {
                    let from = rp.pred(si).expect("successor has a predecessor");
                    let to = rp.pred(sj).expect("successor has a predecessor");
                    return Ok(rotate(
                        Rule::SuccessorEdge,
                        RotationPlan::ViaComponentPath {
                            from,
                            to,
                            through: vec![x],
                        },
                        true,
                    ));
                }
            }
        }
        let rsegs = rctx
            .segments
            .as_ref()
            .expect("singleton component has segments");
        let last = rsegs.parts.last().expect("at least one segment");
        Ok(self
            .scan_segment(&rp, x, &rctx.successors, last)?
            .map(|action| {
                let action = match action {
                    Action::Rotate { plan, .. } => Action::Rotate {
                        plan,
                        reversed: true,
                    },
                    c => c,
                };
                Found {
                    rule: Rule::ParityScan,
                    action,
                }
            }))
    }

    /// Scans `seg = S_i` (which starts at `x_i^+`) against the default
    /// reference set, then against sets chosen to contain a successor seen
    /// from an odd position.
    fn scan_segment(
        &mut self,
        q: &OrientedPath,
        x: usize,
        succs: &[usize],
        seg: &[usize],
    ) -> Result<Option<Action>> {
        let anchor = seg[0];
        let Some(base) = self.reference(q, succs, anchor, None) else {
            self.reasons.push(format!(
                "too few successors for a reference set at {anchor}"
            ));
            return Ok(None);
        };
        if let Some(a) = self.parity_scan(q, x, &base, seg, seg.len())? {
            return Ok(Some(a));
        }
        let all: VertexSet = succs.iter().collect();
        for j in (3..=seg.len()).step_by(2) {
            let hits = self.g.neighbors(seg[j - 1]) & all;
            let Some(&r) = q.in_path_order(hits).first() else {
                continue;
            };
            let Some(set) = self.reference(q, succs, anchor, Some(r)) else {
                self.reasons.push(format!(
                    "no reference set holds both {anchor} and {r} (2k - 1 < 2)"
                ));
                continue;
            };
            if let Some(a) = self.parity_scan(q, x, &set, seg, j)? {
                return Ok(Some(a));
            }
            return Err(logic(format!(
                "odd-position vertex {} sees successor {r} but the scan found nothing",
                seg[j - 1]
            )));
        }
        Ok(None)
    }

    /// `2k - 1` members of `succs` in path order, always including `anchor`
    /// and `extra`, otherwise the earliest.
    fn reference(
        &self,
        q: &OrientedPath,
        succs: &[usize],
        anchor: usize,
        extra: Option<usize>,
    ) -> Option<Vec<usize>> {
        let size = 2 * self.k - 1;
        let mut set = VertexSet::singleton(anchor);
        if let Some(r) = extra {
            set.insert(r);
        }
        if set.len() > size || succs.len() < size {
            return None;
        }
        for &s in succs {
            if set.len() == size {
                break;
            }
            set.insert(s);
        }
        Some(q.in_path_order(set))
    }

    /// Walks `w_1 .. w_upto` of `seg` checking that even positions see more
    /// than `k` members of `reference` and odd positions see none.
    fn parity_scan(
        &self,
        q: &OrientedPath,
        x: usize,
        reference: &[usize],
        seg: &[usize],
        upto: usize,
    ) -> Result<Option<Action>> {
        let g = self.g;
        let k = self.k;
        let set: VertexSet = reference.iter().collect();
        let pool_without = |hits: VertexSet| -> Vec<usize> {
            let mut pool = q.in_path_order(set - hits);
            pool.push(x);
            pool
        };
        for j in 1..=upto {
            let w = seg[j - 1];
            let hits = g.neighbors(w) & set;
            if j == 1 {
                if !hits.is_empty() {
                    return Err(logic("N_P(x)^+ is not independent after rule 2"));
                }
                continue;
            }
            let prev = seg[j - 2];
            if j % 2 == 0 {
                if hits.len() <= k {
                    let cert = self
                        .forbidden_from_pool(prev, w, &pool_without(hits))
                        .ok_or_else(|| logic("even-position witness did not assemble"))?;
                    return Ok(Some(Action::Certify(cert)));
                }
            } else if !hits.is_empty() {
                let r = q.in_path_order(hits)[0];
                if hits.len() <= k {
                    let cert = self
                        .forbidden_from_pool(w, r, &pool_without(hits))
                        .ok_or_else(|| logic("odd-position witness did not assemble"))?;
                    return Ok(Some(Action::Certify(cert)));
                }
                let common = q.in_path_order(g.neighbors(prev) & hits);
                if common.len() < 2 {
                    return Err(logic("fewer than two common reference neighbors"));
                }
                return Ok(Some(self.three_case(q, x, prev, common[0], common[1])?));
            }
        }
        Ok(None)
    }

    fn three_case(
        &self,
        q: &OrientedPath,
        x: usize,
        anchor: usize,
        first: usize,
        second: usize,
    ) -> Result<Action> {
        let low = q.pred(first).expect("successor has a predecessor");
        let high = q.pred(second).expect("successor has a predecessor");
        let case = RotationPlan::classify(q, anchor, low, high)
            .ok_or_else(|| logic("three-case anchor coincides with a neighbor of x"))?;
        Ok(Action::Rotate {
            plan: RotationPlan::ThreeCase {
                case,
                anchor,
                x,
                low,
                high,
            },
            reversed: false,
        })
    }

    /// Rule 6: the last pair `(x_{i+1}^-, x_{i+1})` of an even inner segment.
    fn even_segments(
        &mut self,
        p: &OrientedPath,
        ctx: &PathContext,
        segs: &Segments,
    ) -> Result<Option<Found>> {
        let g = self.g;
        let k = self.k;
        let x = ctx.isolated.expect("singleton component");
        let t = ctx.neighbors.len();
        for i in 1..t {
            let seg = &segs.parts[i];
            if seg.is_empty() || seg.len() % 2 == 1 {
                continue;
            }
            let a = *seg.last().unwrap();
            let b = ctx.neighbors[i];
            let Some(reference) = self.reference(p, &ctx.successors, seg[0], None) else {
                continue;
            };
            let set: VertexSet = reference.iter().collect();
            let hits = g.neighbors(b) & set;
            if hits.len() < k {
                let pool = p.in_path_order(set - hits);
                let cert = self
                    .forbidden_from_pool(x, b, &pool)
                    .ok_or_else(|| logic("even-segment witness did not assemble"))?;
                return Ok(certify(Rule::EvenSegment, cert));
            }
            let common = p.in_path_order(g.neighbors(a) & hits);
            if common.len() < 2 {
                return Err(logic("even segment end shares too few reference neighbors"));
            }
            let action = self.three_case(p, x, a, common[0], common[1])?;
            return Ok(Some(Found {
                rule: Rule::EvenSegment,
                action,
            }));
        }
        Ok(None)
    }

    /// Rule 7: an edge inside `S'`.
    fn odd_set_edge(
        &mut self,
        p: &OrientedPath,
        x: usize,
        ctx: &PathContext,
        segs: &Segments,
    ) -> Result<Option<Found>> {
        let Some((z, w)) = first_edge_within(self.g, segs.odd_union) else {
            return Ok(None);
        };
        let pools = self.pools(p, x, ctx, segs.odd[0], &[z, w]);
        if let Some(cert) = pools
            .iter()
            .find_map(|pool| self.forbidden_from_pool(z, w, pool))
            .or_else(|| self.forbidden_by_search(z, w))
        {
            return Ok(certify(Rule::OddSetEdge, cert));
        }
        self.reasons.push(format!(
            "edge {z}-{w} inside S' has no k independent non-neighbors"
        ));
        Ok(None)
    }

    /// Candidate pools for completing an edge touching `touched`: the
    /// successor or predecessor set of `N_P(x)` plus `x`, the side matching
    /// the orientation of the touched segments first.
    fn pools(
        &self,
        p: &OrientedPath,
        x: usize,
        ctx: &PathContext,
        first_odd: VertexSet,
        touched: &[usize],
    ) -> [Vec<usize>; 2] {
        let mut succ = ctx.successors.clone();
        succ.push(x);
        let mut pred: Vec<usize> = ctx.neighbors.iter().filter_map(|&v| p.pred(v)).collect();
        pred.push(x);
        if touched.iter().all(|&v| first_odd.contains(v)) {
            [pred, succ]
        } else {
            [succ, pred]
        }
    }

    /// Rule 8: vertices of `I` other than `x`.
    fn outside_vertices(
        &mut self,
        p: &OrientedPath,
        x: usize,
        ctx: &PathContext,
        segs: &Segments,
    ) -> Result<Option<Found>> {
        let g = self.g;
        let others = segs.outside - VertexSet::singleton(x);
        // Each non-trivial component of G - V(P) other than {x} gets rules
        // 1 to 4, which always settle a component with an edge.
        for comp in g.components_within(others) {
            if comp.len() < 2 {
                continue;
            }
            let cctx = context_for(g, self.k, p, comp);
            return match self.component_rules(p, &cctx)? {
                Some(f) => Ok(Some(Found {
                    rule: Rule::OutsideVertex,
                    action: f.action,
                })),
                None => Err(logic("rules 1-4 left a component with an edge unresolved")),
            };
        }

        let rp = p.reversed();
        let preds: Vec<usize> = ctx.neighbors.iter().filter_map(|&v| p.pred(v)).collect();
        for y in others {
            for (q, side, reversed) in [(p, &ctx.successors, false), (&rp, &preds, true)] {
                let side_set: VertexSet = side.iter().collect();
                let hits = q.in_path_order(g.neighbors(y) & side_set);
                match hits.len() {
                    0 => {}
                    1 => {
                        let r = hits[0];
                        let mut pool: Vec<usize> =
                            side.iter().copied().filter(|&s| s != r).collect();
                        pool.push(x);
                        let cert = self
                            .forbidden_from_pool(y, r, &pool)
                            .ok_or_else(|| logic("outside-vertex witness did not assemble"))?;
                        return Ok(certify(Rule::OutsideVertex, cert));
                    }
                    _ => {
                        let low = q.pred(hits[0]).expect("successor has a predecessor");
                        let high = q.pred(hits[1]).expect("successor has a predecessor");
                        return Ok(rotate(
                            Rule::OutsideVertex,
                            RotationPlan::OutsideTwoNeighbors { y, x, low, high },
                            reversed,
                        ));
                    }
                }
            }
            if let Some(z) = (g.neighbors(y) & segs.odd_union).min() {
                let pools = self.pools(p, x, ctx, segs.odd[0], &[z]);
                if let Some(cert) = pools
                    .iter()
                    .find_map(|pool| self.forbidden_from_pool(y, z, pool))
                    .or_else(|| self.forbidden_by_search(y, z))
                {
                    return Ok(certify(Rule::OutsideVertex, cert));
                }
                self.reasons
                    .push(format!("edge {y}-{z} from I into S' has no witness"));
            }
        }
        Ok(None)
    }

    /// Rule 9: `W = I ∪ S'` independent and at least as large as `S*`.
    fn endgame(&mut self, segs: &Segments) -> Option<Found> {
        let g = self.g;
        let w = segs.outside | segs.odd_union;
        let cut = segs.kept;
        if !g.is_independent(w) {
            self.reasons.push("I ∪ S' is not independent".into());
            return None;
        }
        if w.len() < cut.len() || w.len() < 2 {
            self.reasons.push(format!(
                "counting failed: |I ∪ S'| = {} against |S*| = {}",
                w.len(),
                cut.len()
            ));
            return None;
        }
        certify(
            Rule::ToughnessEndgame,
            Certificate::ToughnessWitness {
                cut,
                independent: w,
                components: w.iter().map(VertexSet::singleton).collect(),
            },
        )
    }

    /// Last resort: a `(u, v)`-path through `V(P)` and one more vertex.
    fn insertion_search(&mut self, p: &OrientedPath, ctx: &PathContext) -> Result<Option<Found>> {
        let g = self.g;
        let off = g.vertices() - p.vertices();
        let order =
            std::iter::once(ctx.component.min().expect("nonempty component")).chain(off.iter());
        let mut tried = VertexSet::EMPTY;
        for y in order {
            if tried.contains(y) {
                continue;
            }
            tried.insert(y);
            let within = p.vertices() | VertexSet::singleton(y);
            if let Some(seq) = hamilton_path_within(g, within, p.start(), p.end())? {
                let path = OrientedPath::new(g, seq)?;
                return Ok(Some(Found {
                    rule: Rule::InsertionSearch,
                    action: Action::Replace(path),
                }));
            }
        }
        self.reasons
            .push("no single off-path vertex can be absorbed".into());
        Ok(None)
    }

    /// Greedily picks `k` mutually non-adjacent pool members that avoid
    /// `N[z] ∪ N[w]`.
    fn forbidden_from_pool(&self, z: usize, w: usize, pool: &[usize]) -> Option<Certificate> {
        let g = self.g;
        let blocked =
            g.neighbors(z) | g.neighbors(w) | VertexSet::singleton(z) | VertexSet::singleton(w);
        let mut chosen = VertexSet::EMPTY;
        for &c in pool {
            if chosen.len() == self.k {
                break;
            }
            if blocked.contains(c) || chosen.contains(c) || !g.neighbors(c).is_disjoint(chosen) {
                continue;
            }
            chosen.insert(c);
        }
        (chosen.len() == self.k).then(|| Certificate::ForbiddenInduced {
            edge: (z.min(w), z.max(w)),
            independent: chosen,
        })
    }

    fn forbidden_by_search(&self, z: usize, w: usize) -> Option<Certificate> {
        independent_outside_edge(self.g, z, w, self.k).map(|independent| {
            Certificate::ForbiddenInduced {
                edge: (z.min(w), z.max(w)),
                independent,
            }
        })
    }
}

fn first_edge_within(g: &Graph, set: VertexSet) -> Option<(usize, usize)> {
    set.iter().find_map(|a| {
        (g.neighbors(a) & set)
            .iter()
            .find(|&b| b > a)
            .map(|b| (a, b))
    })
}

/// Structural sanity check of a freshly built certificate. This guards the
/// engine's own reasoning; independent validation lives elsewhere.
fn self_check(g: &Graph, k: usize, cert: &Certificate) -> bool {
    match cert {
        Certificate::SmallCut { cut, components } => cut.len() < 2 * k && components.len() >= 2,
        Certificate::ForbiddenInduced { edge, independent } => {
            let (z, w) = *edge;
            let ends = VertexSet::singleton(z) | VertexSet::singleton(w);
            g.has_edge(z, w)
                && independent.len() == k
                && independent.is_disjoint(ends)
                && g.is_independent(*independent)
                && independent.is_disjoint(g.neighbors(z) | g.neighbors(w))
        }
        Certificate::ToughnessWitness {
            cut, independent, ..
        } => {
            *cut | *independent == g.vertices()
                && cut.is_disjoint(*independent)
                && g.is_independent(*independent)
                && independent.len() >= cut.len().max(2)
        }
    }
}
