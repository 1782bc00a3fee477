//! Exact oracles for the hypotheses and the conclusion of the
//! hamiltonian-connectivity theorem: connectivity, toughness,
//! `(P2 ∪ kP1)`-freeness and Hamilton paths.

mod connectivity;
mod forbidden;
mod hamilton;
mod toughness;

pub use connectivity::{
    local_connectivity, vertex_connectivity, vertex_connectivity_brute_force, BRUTE_FORCE_CEILING,
};
pub use forbidden::{
    find_induced_p2_plus_kp1, independent_outside_edge, independent_subset, ForbiddenWitness,
};
pub use hamilton::{
    first_non_hamiltonian_pair, hamilton_path_between, hamilton_path_within,
    is_hamiltonian_connected, HamiltonConnectivity, PairPath,
};
pub use toughness::{is_t_tough, toughness, toughness_exceeds, Toughness, TOUGHNESS_CEILING};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The `k`-independent invariants of a graph, computed once and reused
/// across every `k` of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub connectivity: usize,
    pub toughness: Toughness,
}

impl GraphInvariants {
    pub fn compute(g: &Graph) -> Result<GraphInvariants> {
        Ok(GraphInvariants {
            connectivity: vertex_connectivity(g),
            toughness: toughness(g)?,
        })
    }

    pub fn report(&self, g: &Graph, k: usize) -> Result<HypothesisReport> {
        if k == 0 {
            return Err(Error::InvalidInput("k must be at least 1".into()));
        }
        let witness = find_induced_p2_plus_kp1(g, k);
        let is_2k_connected = self.connectivity >= 2 * k;
        let toughness_exceeds_one = self.toughness.exceeds(Ratio::from_integer(1));
        Ok(HypothesisReport {
            k,
            connectivity: self.connectivity,
            is_2k_connected,
            forbidden_free: witness.is_none(),
            forbidden_witness: witness,
            toughness: self.toughness,
            toughness_exceeds_one,
            all_hypotheses: is_2k_connected && witness.is_none() && toughness_exceeds_one,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub k: usize,
    pub connectivity: usize,
    pub is_2k_connected: bool,
    pub forbidden_free: bool,
    pub forbidden_witness: Option<ForbiddenWitness>,
    pub toughness: Toughness,
    pub toughness_exceeds_one: bool,
    pub all_hypotheses: bool,
}

/// Evaluates all three hypotheses for `(G, k)`.
pub fn hypothesis_check(g: &Graph, k: usize) -> Result<HypothesisReport> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    GraphInvariants::compute(g)?.report(g, k)
}

/// Short-circuiting form of `hypothesis_check(g, k)?.all_hypotheses`,
/// cheapest test first.
pub fn hypotheses_hold(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    Ok(g.min_degree() >= 2 * k
        && find_induced_p2_plus_kp1(g, k).is_none()
        && vertex_connectivity(g) >= 2 * k
        && toughness_exceeds(g, Ratio::from_integer(1))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, complete_bipartite, path_graph};

    #[test]
    fn complete_seven_satisfies_everything() {
        let r = hypothesis_check(&complete(7), 1).unwrap();
        assert_eq!(r.connectivity, 6);
        assert!(r.forbidden_free && r.toughness_exceeds_one && r.all_hypotheses);
        assert_eq!(r.toughness, Toughness::Infinite);
    }

    #[test]
    fn k44_fails_only_toughness() {
        let r = hypothesis_check(&complete_bipartite(4, 4), 2).unwrap();
        assert_eq!(r.connectivity, 4);
        assert!(r.is_2k_connected);
        assert!(r.forbidden_free);
        assert!(!r.toughness_exceeds_one);
        assert!(!r.all_hypotheses);
    }

    #[test]
    fn p4_fails_connectivity_and_freeness() {
        let r = hypothesis_check(&path_graph(4), 1).unwrap();
        assert!(!r.is_2k_connected);
        assert!(!r.forbidden_free);
        assert!(r.forbidden_witness.is_some());
        assert!(!r.all_hypotheses);
    }

    #[test]
    fn fast_filter_agrees_with_report() {
        for g in crate::family::generate(&crate::family::FamilySpec::Exhaustive(5)).unwrap() {
            for k in 1..=2 {
                assert_eq!(
                    hypotheses_hold(&g, k).unwrap(),
                    hypothesis_check(&g, k).unwrap().all_hypotheses
                );
            }
        }
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(hypothesis_check(&complete(3), 0).is_err());
    }
}
