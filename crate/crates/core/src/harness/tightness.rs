//! `K_{n/2,n/2}` shows the toughness hypothesis cannot be weakened to
//! `τ >= 1`: it is 1-tough, `n/2`-connected and `(P2 ∪ (n/4)P1)`-free, yet
//! has no Hamilton path between two vertices of the same part.

use serde::Serialize;

use crate::certificates::{validate_outcome, ValidationReport};
use crate::engine::{extract, Rule};
use crate::error::{Error, Result};
use crate::family::complete_bipartite;
use crate::graph::VertexSet;
use crate::invariants::{first_non_hamiltonian_pair, GraphInvariants, Toughness};
use crate::outcome::{Certificate, ExtractionOutcome};

/// Largest `n` for which the hamiltonian-connectivity check is run.
pub const TIGHTNESS_CEILING: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub n: usize,
    /// `⌊n/4⌋`.
    pub k: usize,
    /// Set when `4` does not divide `n`, so `n/4` was rounded down.
    pub k_rounded: bool,
    pub toughness: Toughness,
    pub connectivity: usize,
    pub forbidden_free: bool,
    pub hamiltonian_connected: bool,
    pub failing_pair: Option<(usize, usize)>,
    /// The same-part pair handed to the engine.
    pub pair: (usize, usize),
    pub outcome: ExtractionOutcome,
    pub trace: Vec<Rule>,
    pub validation: ValidationReport,
    /// Whether the certificate's cut is exactly one part.
    pub cut_is_part: bool,
}

pub fn tightness(n: usize) -> Result<TightnessReport> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "n must be even and at least 4, got {n}"
        )));
    }
    if n > TIGHTNESS_CEILING {
        return Err(Error::Capacity(format!(
            "the hamiltonian-connectivity check is limited to n <= {TIGHTNESS_CEILING}"
        )));
    }
    let half = n / 2;
    let g = complete_bipartite(half, half);
    let k = n / 4;
    let inv = GraphInvariants::compute(&g)?;
    let report = inv.report(&g, k)?;
    let failing_pair = first_non_hamiltonian_pair(&g)?;
    let pair = (0, 1);
    let ex = extract(&g, k, pair.0, pair.1)?;
    let outcome = ex.result.map_err(|stall| {
        Error::InternalLogic(format!(
            "engine stalled on K_{{{half},{half}}}: {:?}",
            stall.reasons
        ))
    })?;
    let validation = validate_outcome(&g, k, pair.0, pair.1, &outcome);
    let parts = [
        VertexSet::full(half),
        VertexSet::full(n) - VertexSet::full(half),
    ];
    let cut_is_part = matches!(
        &outcome,
        ExtractionOutcome::Certificate(Certificate::ToughnessWitness { cut, .. }) if parts.contains(cut)
    );
    Ok(TightnessReport {
        n,
        k,
        k_rounded: !n.is_multiple_of(4),
        toughness: inv.toughness,
        connectivity: inv.connectivity,
        forbidden_free: report.forbidden_free,
        hamiltonian_connected: failing_pair.is_none(),
        failing_pair,
        pair,
        outcome,
        trace: ex.trace.iter().map(|s| s.rule).collect(),
        validation,
        cut_is_part,
    })
}
