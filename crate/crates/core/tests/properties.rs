use proptest::prelude::*;

use indram::arrow::{brute_force_arrowing, decide_arrowing, verify_coloring, BruteVerdict, Outcome, DEFAULT_BUDGET};
use indram::canon::canonical_key;
use indram::coloring::EdgeColoring;
use indram::family::graph;
use indram::graph::Graph;
use indram::graph6::{decode, encode};
use indram::params::{clique_number, independence_number};

const PATTERNS: &[&str] = &["K2", "P3", "2K2", "K3", "P4", "K1+K2", "C4", "S3"];

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_pattern() -> impl Strategy<Value = Graph> {
    proptest::sample::select(PATTERNS).prop_map(|e| graph(e).unwrap())
}

/// Independence and clique numbers by trying every vertex subset.
fn alpha_omega(g: &Graph) -> (usize, usize) {
    let n = g.order();
    let (mut a, mut w) = (0, 0);
    for set in 0u64..1 << n {
        let vs: Vec<usize> = (0..n).filter(|v| set >> v & 1 == 1).collect();
        let pairs = || vs.iter().enumerate().flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)));
        if pairs().all(|(u, v)| !g.has_edge(u, v)) {
            a = a.max(vs.len());
        }
        if pairs().all(|(u, v)| g.has_edge(u, v)) {
            w = w.max(vs.len());
        }
    }
    (a, w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_key_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_key(&g), canonical_key(&g.permuted(&perm)));
    }

    #[test]
    fn alpha_omega_match_subsets(g in arb_graph(9)) {
        prop_assert_eq!((independence_number(&g), clique_number(&g)), alpha_omega(&g));
    }

    #[test]
    fn alpha_adds_and_omega_maxes_over_unions(a in arb_graph(7), b in arb_graph(7)) {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(independence_number(&u), independence_number(&a) + independence_number(&b));
        prop_assert_eq!(clique_number(&u), clique_number(&a).max(clique_number(&b)));
    }

    #[test]
    fn engine_matches_brute_force(f in arb_graph(6), g in arb_pattern(), h in arb_pattern()) {
        let engine = decide_arrowing(&f, &g, &h, DEFAULT_BUDGET).outcome;
        let brute = brute_force_arrowing(&f, &g, &h).unwrap();
        match (&engine, &brute) {
            (Outcome::Arrows, BruteVerdict::Arrows) => {}
            (Outcome::NotArrows(c), BruteVerdict::NotArrows(_)) => {
                prop_assert!(verify_coloring(&f, c, &g, &h).unwrap().is_good());
            }
            _ => prop_assert!(false, "engine {} on {}", engine.label(), encode(&f)),
        }
    }

    /// Swapping the colours of a good colouring for (G, H) gives one for (H, G).
    #[test]
    fn colour_symmetry(f in arb_graph(7), g in arb_pattern(), h in arb_pattern()) {
        let gh = decide_arrowing(&f, &g, &h, DEFAULT_BUDGET).outcome;
        let hg = decide_arrowing(&f, &h, &g, DEFAULT_BUDGET).outcome;
        prop_assert_eq!(gh == Outcome::Arrows, hg == Outcome::Arrows);
        if let Outcome::NotArrows(c) = gh {
            prop_assert!(verify_coloring(&f, &c.swapped(), &h, &g).unwrap().is_good());
        }
    }

    /// A host stays arrowing when a vertex with any neighbourhood is added,
    /// since it remains an induced subgraph.
    #[test]
    fn adding_a_vertex_keeps_arrowing(
        f in arb_graph(6),
        nbrs in any::<u64>(),
        g in arb_pattern(),
        h in arb_pattern(),
    ) {
        if decide_arrowing(&f, &g, &h, DEFAULT_BUDGET).outcome == Outcome::Arrows {
            let mut big = f.clone();
            big.push_vertex(nbrs & f.vertex_mask());
            prop_assert_eq!(decide_arrowing(&big, &g, &h, DEFAULT_BUDGET).outcome, Outcome::Arrows);
        }
    }

    /// If F arrows (G, H) then 2F arrows (2G, H) and (G, 2H).
    #[test]
    fn copies_of_an_arrowing_host(f in arb_graph(6), g in arb_pattern(), h in arb_pattern()) {
        if decide_arrowing(&f, &g, &h, DEFAULT_BUDGET).outcome == Outcome::Arrows {
            let two = f.copies(2);
            for (r, b) in [(g.copies(2), h.clone()), (g.clone(), h.copies(2))] {
                let v = decide_arrowing(&two, &r, &b, DEFAULT_BUDGET).outcome;
                prop_assert!(matches!(v, Outcome::Arrows | Outcome::Unknown), "{}", encode(&two));
            }
        }
    }

    #[test]
    fn witness_text_round_trip(f in arb_graph(10), bits in any::<u64>()) {
        let colors = (0..f.edge_count())
            .map(|i| if bits >> (i % 64) & 1 == 1 { indram::coloring::Color::Red } else { indram::coloring::Color::Blue })
            .collect();
        let c = EdgeColoring::from_colors(&f, colors).unwrap();
        let (g, d) = EdgeColoring::parse_witness(&c.to_witness(&f)).unwrap();
        prop_assert_eq!(g, f);
        prop_assert_eq!(d, c);
    }
}
