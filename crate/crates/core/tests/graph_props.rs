mod common;

use critgraph::generators::random_gnp;
use critgraph::{parse_graph6, to_graph6, Diameter, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| {
        random_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn handshake(g in arb_graph(48)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(g.edges().count(), g.edge_count());
    }

    #[test]
    fn layers_partition_vertices(g in arb_graph(40)) {
        for v in g.vertices() {
            let layers = g.distance_layers(v).unwrap();
            prop_assert_eq!(layers.layer_sizes.iter().sum::<usize>() + layers.unreachable_count, g.order());
            prop_assert_eq!(layers.layer(0), 1);
            prop_assert_eq!(layers.layer(1), g.degree(v));
        }
    }

    #[test]
    fn residual_order(g in arb_graph(40)) {
        for v in g.vertices() {
            let r = g.residual(v).unwrap();
            prop_assert_eq!(r.graph.order(), g.order() - 1 - g.degree(v));
            for (a, b) in r.graph.edges() {
                prop_assert!(g.has_edge(r.original[a], r.original[b]));
            }
        }
    }

    #[test]
    fn diameter_matches_floyd(g in arb_graph(24)) {
        let expected = match common::brute_diameter(&g) {
            Some(d) => Diameter::Finite(d),
            None => Diameter::Infinite,
        };
        prop_assert_eq!(g.diameter().unwrap(), expected);
    }

    #[test]
    fn complement_is_involution(g in arb_graph(30)) {
        let c = g.complement();
        let n = g.order();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }
}
