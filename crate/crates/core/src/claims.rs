//! The table of statements checked by [`crate::verify`]. Parametric
//! statements are instantiated at small parameters; each instance names the
//! check that is run and the profile that runs it.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Feasibility {
    /// Exhaustive sweeps up to order 8.
    ExactDesk,
    /// Confirmation of single explicit hosts.
    ConstructionOnly,
    /// Only consistency with computable bounds.
    BoundsOnly,
    OutOfScope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl std::str::FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(format!("unknown profile {other:?} (expected quick or full)")),
        }
    }
}

/// A host given directly, or as copies of the host found for a pair.
#[derive(Clone, Debug)]
pub enum HostSpec {
    Expr(&'static str),
    CopiesOfIrHost { red: &'static str, blue: &'static str, copies: usize },
}

#[derive(Clone, Debug)]
pub enum Check {
    /// `IR(red, blue)` computed by sweeps equals `value`.
    Exact { red: &'static str, blue: &'static str, value: usize },
    /// `IR(red, t·base)` by the connected reduction equals `value`.
    Multicopy { red: &'static str, base: &'static str, t: usize, value: usize },
    /// The host arrows (or does not arrow) the pair.
    Arrows {
        host: HostSpec,
        red: &'static str,
        blue: &'static str,
        expect: bool,
        weak: bool,
        /// Order the host must have, when the statement fixes it.
        order: Option<usize>,
        budget: Option<u64>,
    },
    /// The claimed interval is not contradicted by the computed lower bound,
    /// by confirmed constructions, or by a capped exact computation.
    Bounds { red: &'static str, blue: &'static str, lo: f64, hi: Option<f64>, exact_cap: Option<usize> },
    /// `IR(red, ∪ parts) = Σ IR(red, part)`.
    Additive { red: &'static str, parts: &'static [&'static str] },
    /// The explicit colouring for `(G, 2K2)` is good on every host with one
    /// vertex more than `G`.
    Avoid2K2 { patterns: &'static [&'static str] },
    /// Every graph up to the order has a certified matching partition.
    MatchingPartition { max_order: usize },
    /// The explicit `(K3, tK3)` colouring is good on random hosts with a
    /// planted induced `tK3`.
    TriangleSamples { t: usize, order: usize, samples: usize },
    /// Random hosts of the order do not arrow the pair.
    SampledNotArrows { red: &'static str, blue: &'static str, order: usize, samples: usize },
    /// Every host of the order that arrows the pair is connected.
    ConnectedArrowers { red: &'static str, blue: &'static str, order: usize },
    /// The α/ω lower-bound formula does not exceed the computed value.
    LowerFormula { red: &'static str, blue: &'static str },
    OutOfScope { reason: &'static str },
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub profile: Profile,
    pub check: Check,
}

#[derive(Clone, Debug)]
pub struct ClaimRecord {
    pub id: &'static str,
    pub statement: &'static str,
    pub citation: &'static str,
    pub feasibility: Feasibility,
    pub instances: Vec<Instance>,
}

fn quick(label: impl Into<String>, check: Check) -> Instance {
    Instance { label: label.into(), profile: Profile::Quick, check }
}

fn full(label: impl Into<String>, check: Check) -> Instance {
    Instance { label: label.into(), profile: Profile::Full, check }
}

fn exact(red: &'static str, blue: &'static str, value: usize) -> Instance {
    quick(format!("IR({red}, {blue}) = {value}"), Check::Exact { red, blue, value })
}

fn exact_full(red: &'static str, blue: &'static str, value: usize) -> Instance {
    full(format!("IR({red}, {blue}) = {value}"), Check::Exact { red, blue, value })
}

fn multicopy(red: &'static str, base: &'static str, t: usize, value: usize, profile: Profile) -> Instance {
    Instance {
        label: format!("IR({red}, {t}{base}) = {value} (connected reduction)"),
        profile,
        check: Check::Multicopy { red, base, t, value },
    }
}

fn arrows(host: &'static str, red: &'static str, blue: &'static str, order: Option<usize>) -> Instance {
    quick(
        format!("{host} -> ({red}, {blue})"),
        Check::Arrows { host: HostSpec::Expr(host), red, blue, expect: true, weak: false, order, budget: None },
    )
}

fn ir_copies(copies: usize, of: (&'static str, &'static str), red: &'static str, blue: &'static str) -> Instance {
    quick(
        format!("{copies} x host of ({}, {}) -> ({red}, {blue})", of.0, of.1),
        Check::Arrows {
            host: HostSpec::CopiesOfIrHost { red: of.0, blue: of.1, copies },
            red,
            blue,
            expect: true,
            weak: false,
            order: None,
            budget: None,
        },
    )
}

fn weak(host: &'static str, red: &'static str, blue: &'static str, expect: bool, profile: Profile) -> Instance {
    let arrow = if expect { "->" } else { "-/->" };
    Instance {
        label: format!("{host} {arrow} ({red}, {blue}) weakly"),
        profile,
        check: Check::Arrows { host: HostSpec::Expr(host), red, blue, expect, weak: true, order: None, budget: None },
    }
}

fn bounds(red: &'static str, blue: &'static str, lo: f64, hi: Option<f64>, exact_cap: Option<usize>) -> Instance {
    let hi_text = hi.map_or("inf".to_string(), |h| h.to_string());
    quick(format!("IR({red}, {blue}) in [{lo}, {hi_text}]"), Check::Bounds { red, blue, lo, hi, exact_cap })
}

fn out_of_scope(reason: &'static str) -> Vec<Instance> {
    vec![quick("not checked", Check::OutOfScope { reason })]
}

/// Every statement, in report order.
pub fn claims_table() -> Vec<ClaimRecord> {
    use Feasibility::*;
    vec![
        ClaimRecord {
            id: "disjoint-copies-upper-bound",
            statement: "If F -> (G, H) then (s+t-1)F -> (sG, tH); hence IR(sG, tH) <= (s+t-1) IR(G, H)",
            citation: "new",
            feasibility: ConstructionOnly,
            instances: vec![
                arrows("3P3", "2P3", "2K2", Some(9)),
                arrows("2P3", "P3", "2K2", Some(6)),
                arrows("2C7", "2P4", "2K2", Some(14)),
                arrows("2C7", "P4", "4K2", Some(14)),
                ir_copies(2, ("P3", "P3"), "P3", "2P3"),
            ],
        },
        ClaimRecord {
            id: "edge-versus-any",
            statement: "IR(K2, G) = |V(G)| and IR(G, K2) = |V(G)|",
            citation: "folklore",
            feasibility: ExactDesk,
            instances: vec![
                exact("K2", "P4", 4),
                exact("K2", "C5", 5),
                exact("K2", "K1+K3", 4),
                exact("P4", "K2", 4),
                exact("K3+K2", "K2", 5),
            ],
        },
        ClaimRecord {
            id: "matching-versus-clique",
            statement: "IR(sK2, Kn) = sn for s >= 1, n >= 2",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![
                exact("K2", "K2", 2),
                exact("K2", "K3", 3),
                exact("2K2", "K2", 4),
                exact("2K2", "K3", 6),
                exact("3K2", "K2", 6),
                exact("2K2", "K4", 8),
                exact_full("3K2", "K3", 9),
            ],
        },
        ClaimRecord {
            id: "matching-versus-matching",
            statement: "IR(sK2, tK2) = 2(s+t-1) for s, t >= 1",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![
                exact("K2", "K2", 2),
                exact("K2", "2K2", 4),
                exact("2K2", "2K2", 6),
                exact("K2", "3K2", 6),
                exact("2K2", "3K2", 8),
                exact("3K2", "2K2", 8),
                exact("K2", "4K2", 8),
            ],
        },
        ClaimRecord {
            id: "p3-versus-union-of-cliques",
            statement: "IR(P3, K_n1 + ... + K_nm) = sum of binom(n_i + 1, 2) = sum of IR(P3, K_ni)",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![
                exact("P3", "K2", 3),
                exact("P3", "K3", 6),
                exact("P3", "K1+K2", 4),
                exact("P3", "2K2", 6),
                exact("P3", "K1+K3", 7),
                exact_full("P3", "K2+K3", 9),
                bounds("P3", "K4", 10.0, Some(10.0), None),
            ],
        },
        ClaimRecord {
            id: "p3-versus-copies-of-clique",
            statement: "IR(P3, tKn) = t IR(P3, Kn) = t(binom(n, 2) + n)",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![
                exact("P3", "2K1", 2),
                multicopy("P3", "K2", 2, 6, Profile::Quick),
                multicopy("P3", "K2", 3, 9, Profile::Full),
                ir_copies(2, ("P3", "K3"), "P3", "2K3"),
                bounds("P3", "2K3", 12.0, Some(12.0), None),
            ],
        },
        ClaimRecord {
            id: "p3-versus-union-of-multipartite",
            statement: "IR(P3, H_1 + ... + H_m) = sum of IR(P3, H_i) for complete multipartite H_i",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![
                quick("IR(P3, P3+K2) = IR(P3, P3) + IR(P3, K2)", Check::Additive { red: "P3", parts: &["P3", "K2"] }),
                quick("IR(P3, P3+K1) = IR(P3, P3) + IR(P3, K1)", Check::Additive { red: "P3", parts: &["P3", "K1"] }),
                quick("IR(P3, K2+K1) = IR(P3, K2) + IR(P3, K1)", Check::Additive { red: "P3", parts: &["K2", "K1"] }),
            ],
        },
        ClaimRecord {
            id: "p3-versus-copies-of-multipartite",
            statement: "IR(P3, tH) = t IR(P3, H) for complete multipartite H",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![exact("P3", "2P3", 8), exact("P3", "2K2", 6)],
        },
        ClaimRecord {
            id: "p3-versus-copies-of-p4",
            statement: "7s >= IR(P3, sP4) >= 6.1s",
            citation: "cited",
            feasibility: BoundsOnly,
            instances: vec![bounds("P3", "P4", 6.1, Some(7.0), Some(7))],
        },
        ClaimRecord {
            id: "many-copies-versus-2k2",
            statement: "IR(sG, 2K2) = (s+1)|V(G)| for connected G and s >= |V(G)|",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                exact("2K2", "2K2", 6),
                exact("3K2", "2K2", 8),
                arrows("4P3", "3P3", "2K2", Some(12)),
                bounds("3P3", "2K2", 12.0, Some(12.0), None),
            ],
        },
        ClaimRecord {
            id: "2k2-lower-bound",
            statement: "IR(G, 2K2) >= |V(G)| + 2 for G without isolated vertices",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                quick(
                    "explicit colouring on all hosts of order |V(G)| + 1",
                    Check::Avoid2K2 { patterns: &["P3", "2K2", "P4", "K3", "C4", "K4", "P5", "C5"] },
                ),
                exact("P3", "2K2", 6),
            ],
        },
        ClaimRecord {
            id: "2k2-range",
            statement: "n + 2 <= IR(G, 2K2) <= 2n for G on n vertices without isolated vertices; both bounds are attained",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                exact("K2", "2K2", 4),
                exact("P5", "2K2", 7),
                exact("K3", "2K2", 6),
                bounds("C4", "2K2", 6.0, Some(8.0), Some(7)),
                bounds("P3+K2", "2K2", 7.0, Some(10.0), Some(7)),
            ],
        },
        ClaimRecord {
            id: "path-versus-2k2",
            statement: "IR(Pn, 2K2) = n + 3 for n = 3, 4 and n + 2 for n >= 5",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                exact("P3", "2K2", 6),
                exact("P4", "2K2", 7),
                exact("P5", "2K2", 7),
                exact("P6", "2K2", 8),
                arrows("C7", "P4", "2K2", Some(7)),
                arrows("C7", "P5", "2K2", Some(7)),
                arrows("C8", "P6", "2K2", Some(8)),
                arrows("C9", "P7", "2K2", Some(9)),
                arrows("C10", "P8", "2K2", Some(10)),
                arrows("C11", "P9", "2K2", Some(11)),
            ],
        },
        ClaimRecord {
            id: "copies-of-path-versus-2k2-upper",
            statement: "IR(sPn, 2K2) <= sn + s + 1 for 2 <= s <= n - 1, n >= 4",
            citation: "new",
            feasibility: ConstructionOnly,
            instances: vec![
                arrows("C11", "2P4", "2K2", Some(11)),
                arrows("C13", "2P5", "2K2", Some(13)),
                arrows("C16", "3P4", "2K2", Some(16)),
            ],
        },
        ClaimRecord {
            id: "copies-of-path-versus-2k2-small-s",
            statement: "IR(sPn, 2K2) = sn + s + 1 for s = 2, 3 and n >= 4",
            citation: "new",
            feasibility: BoundsOnly,
            instances: vec![
                arrows("C11", "2P4", "2K2", Some(11)),
                bounds("2P4", "2K2", 11.0, Some(11.0), None),
                quick(
                    "random hosts of order 10 do not arrow (2P4, 2K2)",
                    Check::SampledNotArrows { red: "2P4", blue: "2K2", order: 10, samples: 30 },
                ),
                bounds("3P4", "2K2", 16.0, Some(16.0), None),
            ],
        },
        ClaimRecord {
            id: "copies-of-path-versus-2k2-large-s",
            statement: "IR(sPn, 2K2) = (s+1)n for s >= n, n >= 4",
            citation: "new",
            feasibility: ConstructionOnly,
            instances: vec![arrows("5P4", "4P4", "2K2", Some(20)), bounds("4P4", "2K2", 20.0, Some(20.0), None)],
        },
        ClaimRecord {
            id: "copies-of-p3-versus-2k2",
            statement: "IR(sP3, 2K2) = 3s + 3 = (s+1) IR(P3, K2) for s >= 1",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                exact("P3", "2K2", 6),
                exact_full("2P3", "2K2", 9),
                arrows("3P3", "2P3", "2K2", Some(9)),
                arrows("4P3", "3P3", "2K2", Some(12)),
            ],
        },
        ClaimRecord {
            id: "p3-versus-matching",
            statement: "IR(P3, tK2) = 3t for t >= 1",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                multicopy("P3", "K2", 1, 3, Profile::Quick),
                multicopy("P3", "K2", 2, 6, Profile::Quick),
                multicopy("P3", "K2", 3, 9, Profile::Full),
            ],
        },
        ClaimRecord {
            id: "p4-versus-matching",
            statement: "3t + 1 <= IR(P4, tK2) <= 7 floor(t/2) + 4 rem(t, 2) for t >= 1",
            citation: "new",
            feasibility: BoundsOnly,
            instances: vec![
                exact("P4", "K2", 4),
                exact("P4", "2K2", 7),
                arrows("C7+P4", "P4", "3K2", Some(11)),
                arrows("2C7", "P4", "4K2", Some(14)),
                bounds("P4", "3K2", 10.0, Some(11.0), None),
            ],
        },
        ClaimRecord {
            id: "long-path-versus-matching",
            statement: "IR(Pn, tK2) <= ceil(t/2) n + t - rem(t, 2) for n >= 5, t >= 1",
            citation: "new",
            feasibility: ConstructionOnly,
            instances: vec![
                arrows("P5", "P5", "K2", Some(5)),
                arrows("C7", "P5", "2K2", Some(7)),
                arrows("C7+P5", "P5", "3K2", Some(12)),
                arrows("2C7", "P5", "4K2", Some(14)),
                arrows("C8+P6", "P6", "3K2", Some(14)),
            ],
        },
        ClaimRecord {
            id: "p3-versus-copies-of-p3",
            statement: "IR(P3, tP3) = 4t for t >= 1",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                exact("P3", "P3", 4),
                exact("P3", "2P3", 8),
                ir_copies(3, ("P3", "P3"), "P3", "3P3"),
            ],
        },
        ClaimRecord {
            id: "copies-of-p3-versus-clique",
            statement: "binom(n+1, 2) + (2s-2)(n-1) <= IR(sP3, Kn) <= s IR(P3, Kn) = s binom(n, 2) + sn for s >= 1, n >= 3",
            citation: "new",
            feasibility: BoundsOnly,
            instances: vec![
                exact("P3", "K3", 6),
                bounds("2P3", "K3", 10.0, Some(12.0), None),
                ir_copies(2, ("P3", "K3"), "2P3", "K3"),
                bounds("P3", "K4", 10.0, Some(10.0), None),
            ],
        },
        ClaimRecord {
            id: "two-p3-versus-triangle",
            statement: "IR(2P3, K3) >= 11",
            citation: "new",
            feasibility: BoundsOnly,
            instances: vec![
                bounds("2P3", "K3", 11.0, None, None),
                quick(
                    "random hosts of order 10 do not arrow (2P3, K3)",
                    Check::SampledNotArrows { red: "2P3", blue: "K3", order: 10, samples: 20 },
                ),
            ],
        },
        ClaimRecord {
            id: "copies-of-triangles-classical",
            statement: "R(sK3, tK3) = 2s + 3t for t >= s >= 1, t >= 2",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![
                weak("K8", "K3", "2K3", true, Profile::Quick),
                weak("K7", "K3", "2K3", false, Profile::Quick),
                weak("K10", "2K3", "2K3", true, Profile::Full),
                weak("K9", "2K3", "2K3", false, Profile::Full),
            ],
        },
        ClaimRecord {
            id: "triangle-versus-copies-of-triangle",
            statement: "IR(K3, tK3) = 6t for every positive integer t",
            citation: "new",
            feasibility: ConstructionOnly,
            instances: vec![
                exact("K3", "K3", 6),
                quick(
                    "2K6 -> (K3, 2K3)",
                    Check::Arrows {
                        host: HostSpec::Expr("2K6"),
                        red: "K3",
                        blue: "2K3",
                        expect: true,
                        weak: false,
                        order: Some(12),
                        budget: Some(100_000_000),
                    },
                ),
                quick(
                    "explicit colouring on 100 random 11-vertex hosts with an induced 2K3",
                    Check::TriangleSamples { t: 2, order: 11, samples: 100 },
                ),
                quick("matching partitions for all graphs up to order 7", Check::MatchingPartition { max_order: 7 }),
            ],
        },
        ClaimRecord {
            id: "matching-partition",
            statement: "Every graph on n vertices has a vertex bipartition such that every induced matching has at most n/3 edges inside the parts",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                quick("all graphs up to order 7", Check::MatchingPartition { max_order: 7 }),
                full("all graphs up to order 9", Check::MatchingPartition { max_order: 9 }),
            ],
        },
        ClaimRecord {
            id: "small-hosts-are-connected",
            statement: "For connected G, H: if IR(G, tH) < min over splits t = t_1 + ... + t_m of the sum of IR(G, t_i H), every minimum host is connected",
            citation: "new",
            feasibility: ExactDesk,
            instances: vec![
                quick(
                    "every 7-vertex host arrowing (P5, 2K2) is connected",
                    Check::ConnectedArrowers { red: "P5", blue: "2K2", order: 7 },
                ),
                quick(
                    "every 7-vertex host arrowing (P4, 2K2) is connected",
                    Check::ConnectedArrowers { red: "P4", blue: "2K2", order: 7 },
                ),
                multicopy("P5", "K2", 2, 7, Profile::Quick),
            ],
        },
        ClaimRecord {
            id: "cliques",
            statement: "IR(Km, Kn) = R(Km, Kn)",
            citation: "folklore",
            feasibility: ExactDesk,
            instances: vec![
                exact("K3", "K3", 6),
                exact("K2", "K4", 4),
                weak("K6", "K3", "K3", true, Profile::Quick),
                weak("K5", "K3", "K3", false, Profile::Quick),
            ],
        },
        ClaimRecord {
            id: "alpha-omega-lower-bound",
            statement: "IR(G, H) >= (alpha(G) - 1) omega(H)(omega(H) - 1)/2 + omega(H) for connected G",
            citation: "cited",
            feasibility: ExactDesk,
            instances: vec![
                quick("(P3, K3)", Check::LowerFormula { red: "P3", blue: "K3" }),
                quick("(P4, P3)", Check::LowerFormula { red: "P4", blue: "P3" }),
                quick("(C5, K2)", Check::LowerFormula { red: "C5", blue: "K2" }),
                quick("(P4, 2K2)", Check::LowerFormula { red: "P4", blue: "2K2" }),
            ],
        },
        ClaimRecord {
            id: "induced-ramsey-existence",
            statement: "IR(G, H) is finite for all graphs G, H",
            citation: "cited",
            feasibility: OutOfScope,
            instances: out_of_scope("existence theorem for all pairs"),
        },
        ClaimRecord {
            id: "diagonal-upper-bound",
            statement: "IR(G, G) <= 2^(cn log n) for every n-vertex G",
            citation: "cited",
            feasibility: OutOfScope,
            instances: out_of_scope("asymptotic bound"),
        },
    ]
}

/// Statements that must each appear in the table exactly once.
pub const STATEMENT_INDEX: &[&str] = &[
    "IR(sG, tH) <= (s+t-1) IR(G, H)",
    "IR(K2, G) = |V(G)|",
    "IR(sK2, Kn) = sn",
    "IR(sK2, tK2) = 2(s+t-1)",
    "sum of IR(P3, K_ni)",
    "IR(P3, tKn) = t IR(P3, Kn)",
    "sum of IR(P3, H_i)",
    "IR(P3, tH) = t IR(P3, H)",
    "7s >= IR(P3, sP4) >= 6.1s",
    "IR(sG, 2K2) = (s+1)|V(G)|",
    "IR(G, 2K2) >= |V(G)| + 2",
    "n + 2 <= IR(G, 2K2) <= 2n",
    "IR(Pn, 2K2) = n + 3 for n = 3, 4 and n + 2 for n >= 5",
    "IR(sPn, 2K2) <= sn + s + 1",
    "IR(sPn, 2K2) = sn + s + 1",
    "IR(sPn, 2K2) = (s+1)n",
    "IR(sP3, 2K2) = 3s + 3",
    "IR(P3, tK2) = 3t",
    "IR(P4, tK2) <= 7 floor(t/2) + 4 rem(t, 2)",
    "IR(Pn, tK2) <= ceil(t/2) n + t - rem(t, 2)",
    "IR(P3, tP3) = 4t",
    "binom(n+1, 2) + (2s-2)(n-1) <= IR(sP3, Kn)",
    "IR(2P3, K3) >= 11",
    "R(sK3, tK3) = 2s + 3t",
    "IR(K3, tK3) = 6t",
    "at most n/3 edges inside the parts",
    "every minimum host is connected",
    "IR(Km, Kn) = R(Km, Kn)",
    "(alpha(G) - 1) omega(H)(omega(H) - 1)/2 + omega(H)",
    "IR(G, H) is finite",
    "IR(G, G) <= 2^(cn log n)",
];
