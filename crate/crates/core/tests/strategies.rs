use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use indram::arrow::{decide_arrowing, verify_coloring, Outcome, DEFAULT_BUDGET};
use indram::coloring::{Color, EdgeColoring};
use indram::embed::find_induced;
use indram::enumerate::all_graphs;
use indram::family::graph;
use indram::graph::Graph;
use indram::graph6::encode;
use indram::params::{clique_number, independence_number};
use indram::ramsey::{ir_exact, IrConfig, IrValue};
use indram::strategies::{
    avoid_2k2_coloring, chromatic_partition_coloring, gorgol_lower_bound, matching_partition, triangle_coloring,
    MATCHING_EXHAUSTIVE_MAX,
};
use indram::Error;

fn g(expr: &str) -> Graph {
    graph(expr).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut f = Graph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                f.add_edge(u, v);
            }
        }
    }
    f
}

/// Largest count of within-part edges over induced matchings, by listing
/// every set of pairwise far-apart edges.
fn oracle(f: &Graph, v1: u64) -> usize {
    let edges: Vec<(usize, usize)> = f.edges().collect();
    let far = |a: (usize, usize), b: (usize, usize)| {
        [a.0, a.1].iter().all(|&x| [b.0, b.1].iter().all(|&y| x != y && !f.has_edge(x, y)))
    };
    fn walk(edges: &[(usize, usize)], i: usize, chosen: &mut Vec<usize>, v1: u64, far: &dyn Fn((usize, usize), (usize, usize)) -> bool) -> usize {
        let inside = chosen.iter().filter(|&&k| (v1 >> edges[k].0 & 1) == (v1 >> edges[k].1 & 1)).count();
        let mut best = inside;
        for k in i..edges.len() {
            if chosen.iter().all(|&j| far(edges[j], edges[k])) {
                chosen.push(k);
                best = best.max(walk(edges, k + 1, chosen, v1, far));
                chosen.pop();
            }
        }
        best
    }
    walk(&edges, 0, &mut Vec::new(), v1, &far)
}

#[test]
fn avoid_2k2_on_every_host() {
    let two_k2 = g("2K2");
    for p in ["K2", "P3", "2K2", "P4", "K3", "C4", "K4", "S3", "K1,3", "P5", "C5", "K2+K3", "K2,3"] {
        let pat = g(p);
        for f in all_graphs(pat.order() + 1).unwrap().iter() {
            let c = avoid_2k2_coloring(f, &pat).unwrap();
            assert_eq!(c.is_none(), find_induced(f, &pat).is_none());
            let c = c.unwrap_or_else(|| EdgeColoring::uniform(f, Color::Red));
            assert!(verify_coloring(f, &c, &pat, &two_k2).unwrap().is_good(), "{p} on {}", encode(f));
        }
    }
}

#[test]
fn avoid_2k2_preconditions() {
    let host = g("P5");
    assert!(matches!(avoid_2k2_coloring(&host, &g("P3")), Err(Error::Precondition(_))));
    assert!(matches!(avoid_2k2_coloring(&host, &g("K1+K3")), Err(Error::Precondition(_))));
}

#[test]
fn matching_partition_against_oracle() {
    for n in 1..=8 {
        for f in all_graphs(n).unwrap().iter() {
            let part = matching_partition(f).unwrap();
            assert_eq!(part.v1 | part.v2, f.vertex_mask());
            assert_eq!(part.v1 & part.v2, 0);
            let worst = oracle(f, part.v1);
            assert_eq!(part.within_part_matching(f), worst, "{}", encode(f));
            assert!(3 * worst <= n, "{}", encode(f));
        }
    }
}

#[test]
fn matching_partition_above_the_exhaustive_range() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(MATCHING_EXHAUSTIVE_MAX + 1..=18);
        let p = rng.gen_range(0.1..0.5);
        let f = random_graph(&mut rng, n, p);
        match matching_partition(&f) {
            Ok(part) => assert!(3 * oracle(&f, part.v1) <= n, "{}", encode(&f)),
            Err(Error::PartitionNotCertified(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn triangle_colourings_on_planted_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in 1..=3 {
        let blue = g("K3").copies(t);
        for _ in 0..60 {
            // the construction only promises hosts below 6t vertices
            let n = 3 * t + rng.gen_range(0..3 * t);
            let p = rng.gen_range(0.25..0.75);
            let mut f = random_graph(&mut rng, n, p);
            for a in 0..3 * t {
                for b in a + 1..3 * t {
                    if a / 3 == b / 3 {
                        f.add_edge(a, b);
                    } else {
                        f.remove_edge(a, b);
                    }
                }
            }
            let c = triangle_coloring(&f, t).unwrap().expect("planted tK3");
            assert!(verify_coloring(&f, &c, &g("K3"), &blue).unwrap().is_good(), "{}", encode(&f));
        }
    }
}

#[test]
fn triangle_colouring_without_a_copy() {
    assert_eq!(triangle_coloring(&g("C5"), 1).unwrap(), None);
}

#[test]
fn chromatic_partition_is_good_when_found() {
    for (red, blue, k) in [("P3", "K3", 3), ("2K2", "K3", 3), ("K2", "C5", 3), ("P3", "K4", 4)] {
        let (pr, pb) = (g(red), g(blue));
        for n in 1..=6 {
            for f in all_graphs(n).unwrap().iter() {
                if let Some(c) = chromatic_partition_coloring(f, &pr, k).unwrap() {
                    assert!(verify_coloring(f, &c, &pr, &pb).unwrap().is_good(), "({red}, {blue}) on {}", encode(f));
                    assert_ne!(decide_arrowing(f, &pr, &pb, DEFAULT_BUDGET).outcome, Outcome::Arrows);
                }
            }
        }
    }
}

#[test]
fn gorgol_bound_below_every_exact_value() {
    let connected = ["K2", "P3", "K3", "P4", "S3", "C4"];
    let blue = ["K2", "K3", "P3", "2K2", "K1+K2", "K1+K3"];
    let config = IrConfig { cap: 7, ..Default::default() };
    for red in connected {
        for b in blue {
            let (pr, pb) = (g(red), g(b));
            let bound = gorgol_lower_bound(independence_number(&pr), clique_number(&pb));
            if let IrValue::Exact(v) = ir_exact(&pr, &pb, &config).unwrap().value {
                assert!(bound <= v, "IR({red}, {b}) = {v} < {bound}");
            }
        }
    }
}
