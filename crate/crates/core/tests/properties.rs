use proptest::prelude::*;

use turanlab::combinatorics::{canonical_form, clique_number};
use turanlab::graph::{emit_graph6, parse_graph6};
use turanlab::partition::{edit_distance_to_turan, min_edges_to_r_partite, Mode};
use turanlab::spectral::{lambda, q};
use turanlab::verifier::{check, BoundId, BoundParams, Status};
use turanlab::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

const UNCONDITIONAL: [BoundId; 4] = [
    BoundId::RayleighSandwich,
    BoundId::Eq6,
    BoundId::NikiforovCliqueBound,
    BoundId::QVsLambda,
];

const TURAN_TYPE: [BoundId; 7] = [
    BoundId::TuranEdges,
    BoundId::SpectralTuran,
    BoundId::EdgeFromSpectralChain,
    BoundId::ZykovCliques,
    BoundId::CliqueChain,
    BoundId::QTuran,
    BoundId::DegreeTuran,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph6_round_trips(g in graph(40)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), text);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn registry_never_violated(g in graph(8)) {
        let params = BoundParams::default();
        for id in UNCONDITIONAL {
            let rep = check(id, &g, &params).unwrap();
            prop_assert_ne!(rep.status, Status::Violated, "{}", rep.to_json_line());
        }
        // r = ω makes every graph K_{r+1}-free
        let params = BoundParams::with_r(clique_number(&g));
        for id in TURAN_TYPE {
            let rep = check(id, &g, &params).unwrap();
            prop_assert_ne!(rep.status, Status::Violated, "{}", rep.to_json_line());
            prop_assert_ne!(rep.status, Status::Indeterminate, "{}", rep.to_json_line());
        }
    }

    #[test]
    fn spectral_sandwich(g in graph(30)) {
        let (l, qq) = (lambda(&g), q(&g));
        let (n, m) = (g.n() as f64, g.m() as f64);
        prop_assert!(2.0 * m / n <= l + 1e-9);
        prop_assert!(l <= (2.0 * m).sqrt() + 1e-9);
        prop_assert!(2.0 * l <= qq + 1e-9);
        prop_assert!(qq <= 2.0 * g.max_degree() as f64 + 1e-9);
    }

    #[test]
    fn partition_identities(g in graph(9), r in 2usize..4) {
        prop_assume!(r <= g.n());
        let d = min_edges_to_r_partite(&g, r, Mode::Exact).unwrap();
        let e = edit_distance_to_turan(&g, r, Mode::Exact).unwrap();
        let turan_m = turanlab::verifier::turan(r, g.n()).m() as i64;
        // balanced witness: edit = 2·internal + e(T) − m
        prop_assert_eq!(e.value as i64, 2 * e.assignment.internal_edges as i64 + turan_m - g.m() as i64);
        prop_assert!(d.value <= e.assignment.internal_edges);
        prop_assert_eq!(d.value == 0, turanlab::combinatorics::is_colorable(&g, r));
    }
}
