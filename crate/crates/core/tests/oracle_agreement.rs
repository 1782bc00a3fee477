mod common;

use common::Dense;
use hamcert::invariants::{
    find_induced_p2_plus_kp1, hamilton_path_between, hypothesis_check, toughness,
    vertex_connectivity, vertex_connectivity_brute_force, Toughness,
};
use hamcert::Graph;
use num_rational::Ratio;
use proptest::prelude::*;

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (proptest::collection::vec(0u8..4, n * (n - 1) / 2), 1u8..4).prop_map(move |(bits, cut)| {
            // `cut` tunes the density between sparse and nearly complete.
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
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn connectivity_matches(g in graph(1, 9)) {
        let d = Dense::new(&g);
        prop_assert_eq!(vertex_connectivity(&g), common::connectivity(&d));
        prop_assert_eq!(vertex_connectivity_brute_force(&g).unwrap(), common::connectivity(&d));
    }

    #[test]
    fn toughness_matches(g in graph(1, 9)) {
        let d = Dense::new(&g);
        match (toughness(&g).unwrap(), common::toughness(&d)) {
            (Toughness::Infinite, None) => {}
            (Toughness::Finite { value, cut, components }, Some((a, b))) => {
                prop_assert_eq!(value, Ratio::new(a, b));
                let actual = d.components(d.full() & !(cut.bits() as u32)).len();
                prop_assert_eq!(actual, components);
                prop_assert_eq!(value, Ratio::new(cut.len() as u64, actual as u64));
            }
            (lib, oracle) => prop_assert!(false, "{:?} vs {:?}", lib, oracle),
        }
    }

    #[test]
    fn forbidden_search_matches(g in graph(2, 9), k in 1usize..4) {
        let d = Dense::new(&g);
        let found = find_induced_p2_plus_kp1(&g, k);
        prop_assert_eq!(found.is_none(), common::forbidden_free(&d, k));
        if let Some(w) = found {
            let all = w.vertices().bits() as u32;
            prop_assert_eq!(all.count_ones() as usize, k + 2);
            prop_assert_eq!(d.edges_within(all), 1);
            prop_assert!(d.adjacent(w.edge.0, w.edge.1));
        }
    }

    #[test]
    fn hamilton_search_matches(g in graph(3, 8)) {
        let d = Dense::new(&g);
        let table = common::hamilton_table(&d);
        for u in 0..d.n {
            for v in u + 1..d.n {
                let path = hamilton_path_between(&g, u, v).unwrap();
                prop_assert_eq!(path.is_some(), table[u][v]);
                if let Some(p) = path {
                    prop_assert_eq!(p.len(), d.n);
                    prop_assert!(p.windows(2).all(|w| d.adjacent(w[0], w[1])));
                }
            }
        }
    }

    #[test]
    fn hypothesis_report_matches(g in graph(2, 8), k in 1usize..3) {
        let d = Dense::new(&g);
        prop_assert_eq!(hypothesis_check(&g, k).unwrap().all_hypotheses, common::hypotheses(&d, k));
    }
}
