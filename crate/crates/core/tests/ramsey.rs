use indram::arrow::{brute_force_arrowing, decide_arrowing, BruteVerdict, Outcome, DEFAULT_BUDGET};
use indram::family::graph;
use indram::graph::Graph;
use indram::ramsey::{ir_exact, ir_lower, ir_upper_by_construction, IrConfig, IrValue};

fn g(expr: &str) -> Graph {
    graph(expr).unwrap()
}

/// Least order of a labelled host that arrows by brute force, up to `max`.
fn definition(red: &Graph, blue: &Graph, max: usize) -> Option<usize> {
    for n in 1..=max {
        let m = n * (n - 1) / 2;
        for code in 0u64..1 << m {
            let mut f = Graph::new(n);
            let mut bit = 0;
            for v in 1..n {
                for u in 0..v {
                    if code >> bit & 1 == 1 {
                        f.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            if brute_force_arrowing(&f, red, blue).unwrap() == BruteVerdict::Arrows {
                return Some(n);
            }
        }
    }
    None
}

#[test]
fn small_values_match_the_definition() {
    let patterns = ["K1", "K2", "P3", "K3", "2K1", "K1+K2"];
    let config = IrConfig::default();
    for r in patterns {
        for b in patterns {
            let (red, blue) = (g(r), g(b));
            let Some(want) = definition(&red, &blue, 5) else { continue };
            assert_eq!(ir_exact(&red, &blue, &config).unwrap().value, IrValue::Exact(want), "IR({r}, {b})");
        }
    }
}

#[test]
fn swapping_colours_swaps_the_pair() {
    let patterns = ["K2", "P3", "K3", "2K2", "P4", "K1+K2", "S3", "C4"];
    let config = IrConfig { cap: 7, ..Default::default() };
    for (i, r) in patterns.iter().enumerate() {
        for b in &patterns[i..] {
            let one = ir_exact(&g(r), &g(b), &config).unwrap();
            let two = ir_exact(&g(b), &g(r), &config).unwrap();
            if let (Some(x), Some(y)) = (one.value.exact(), two.value.exact()) {
                assert_eq!(x, y, "IR({r}, {b})");
            }
            assert!(one.value.lo() >= ir_lower(&g(r), &g(b)));
        }
    }
}

#[test]
fn constructions_arrow_and_respect_the_lower_bound() {
    let config = IrConfig::default();
    for (r, b) in [("P4", "2K2"), ("2P3", "2K2"), ("P3", "2P3"), ("K3", "K3"), ("P5", "3K2"), ("2P4", "2K2")] {
        let (red, blue) = (g(r), g(b));
        let cert = ir_upper_by_construction(&red, &blue, &config).unwrap_or_else(|| panic!("no construction for ({r}, {b})"));
        assert_eq!(decide_arrowing(&cert.host, &red, &blue, DEFAULT_BUDGET).outcome, Outcome::Arrows);
        assert!(cert.host.order() >= ir_lower(&red, &blue));
    }
}

#[test]
fn exact_results_carry_complete_evidence() {
    let r = ir_exact(&g("P3"), &g("K3"), &IrConfig::default()).unwrap();
    assert_eq!(r.value, IrValue::Exact(6));
    assert_eq!(r.witness_order, Some(5));
    assert_eq!(r.witnesses.len(), 34);
    assert_eq!(r.arrow_certificate.unwrap().host.order(), 6);
}

#[test]
fn small_cap_gives_an_interval() {
    let r = ir_exact(&g("P3"), &g("2P3"), &IrConfig { cap: 5, ..Default::default() }).unwrap();
    match r.value {
        IrValue::Interval { lo, hi } => {
            assert!(lo <= 8);
            assert!(hi.is_none_or(|h| h >= 8));
        }
        IrValue::Exact(v) => panic!("exact {v} with cap 5"),
    }
}

#[test]
fn tiny_budget_never_claims_a_value() {
    let r = ir_exact(&g("P4"), &g("2K2"), &IrConfig { cap: 8, budget: 1 }).unwrap();
    if let IrValue::Exact(v) = r.value {
        assert_eq!(v, 7);
    }
}
