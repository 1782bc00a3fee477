mod common;

use common::Dense;
use hamcert::certificates::validate_outcome;
use hamcert::engine::{extend_or_certify, extract, OrientedPath, Rule, StepOutcome};
use hamcert::family::{complete, complete_bipartite};
use hamcert::invariants::hypothesis_check;
use hamcert::outcome::{Certificate, ExtractionOutcome};
use hamcert::Graph;
use proptest::prelude::*;

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (proptest::collection::vec(0u8..8, n * (n - 1) / 2), 2u8..8).prop_map(move |(bits, cut)| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() < cut {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    /// Every outcome validates, certificates name a hypothesis that really
    /// fails, and graphs meeting all hypotheses always yield paths.
    #[test]
    fn outcomes_are_sound(g in graph(3, 10), k in 1usize..4) {
        let d = Dense::new(&g);
        let report = hypothesis_check(&g, k).unwrap();
        let table = common::hamilton_table(&d);
        for u in 0..d.n {
            for v in u + 1..d.n {
                let ex = extract(&g, k, u, v).unwrap();
                prop_assert!(ex.extended_steps() <= d.n - 2);
                let outcome = ex.result.expect("no stalls expected at this scale");
                prop_assert!(validate_outcome(&g, k, u, v, &outcome).accepted());
                prop_assert!(common::outcome_holds(&d, k, u, v, &outcome));
                match outcome {
                    ExtractionOutcome::HamiltonPath(_) => prop_assert!(table[u][v]),
                    ExtractionOutcome::Certificate(c) => {
                        prop_assert!(!report.all_hypotheses);
                        match c {
                            Certificate::SmallCut { .. } => prop_assert!(!report.is_2k_connected),
                            Certificate::ForbiddenInduced { .. } => prop_assert!(!report.forbidden_free),
                            Certificate::ToughnessWitness { .. } => {
                                prop_assert!(!report.toughness_exceeds_one)
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn extraction_is_deterministic(g in graph(3, 9), k in 1usize..3) {
        let a = extract(&g, k, 0, 1).unwrap();
        let b = extract(&g, k, 0, 1).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn k5_short_path_extends_by_insertion() {
    let g = complete(5);
    let p = OrientedPath::new(&g, vec![0, 4]).unwrap();
    match extend_or_certify(&g, 1, &p).unwrap() {
        StepOutcome::Extended { path, rule, .. } => {
            assert_eq!(rule, Rule::ConsecutiveNeighbors);
            // A path through H = {1, 2, 3} from a neighbor of 0 to a
            // different neighbor of 4.
            assert_eq!(path.as_slice(), &[0, 1, 2, 4]);
            assert_eq!((path.start(), path.end()), (0, 4));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn k7_gives_a_hamilton_path() {
    let ex = extract(&complete(7), 1, 0, 1).unwrap();
    let Ok(ExtractionOutcome::HamiltonPath(p)) = ex.result else {
        panic!("{:?}", ex.result)
    };
    assert_eq!(p.len(), 7);
}

#[test]
fn k23_same_side_pair_still_gets_a_path() {
    // τ(K_{2,3}) = 2/3, yet the three-vertex side has Hamilton paths between
    // any two of its members.
    let g = complete_bipartite(2, 3);
    let ex = extract(&g, 1, 2, 3).unwrap();
    let Ok(ExtractionOutcome::HamiltonPath(p)) = ex.result else {
        panic!("{:?}", ex.result)
    };
    assert_eq!(p.len(), 5);
    assert!(validate_outcome(&g, 1, 2, 3, &ExtractionOutcome::HamiltonPath(p)).accepted());
}

#[test]
fn k44_opposite_parts_alternate() {
    let g = complete_bipartite(4, 4);
    let ex = extract(&g, 2, 0, 4).unwrap();
    let Ok(ExtractionOutcome::HamiltonPath(p)) = ex.result else {
        panic!("{:?}", ex.result)
    };
    assert_eq!(p.len(), 8);
    assert!(p.windows(2).all(|w| (w[0] < 4) != (w[1] < 4)));
}
