//! Runs the claims table and reports one status per statement.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrow::{decide, verify_coloring, CopyKind, Outcome, DEFAULT_BUDGET};
use crate::bundle::write_bundle;
use crate::claims::{claims_table, Check, ClaimRecord, Feasibility, HostSpec, Instance, Profile};
use crate::coloring::{Color, EdgeColoring};
use crate::enumerate::all_graphs;
use crate::error::{Error, Result};
use crate::family::{complete, graph};
use crate::graph::Graph;
use crate::params::{clique_number, independence_number};
use crate::ramsey::{ir_exact, ir_exact_multicopy, ir_lower, ir_upper_by_construction, IrConfig, IrResult, IrValue};
use crate::strategies::{avoid_2k2_coloring, gorgol_lower_bound, matching_partition, triangle_coloring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Verified,
    ConstructionVerified,
    BoundsConsistent,
    Skipped,
    #[serde(rename = "FAILED")]
    Failed,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Verified => "Verified",
            Status::ConstructionVerified => "ConstructionVerified",
            Status::BoundsConsistent => "BoundsConsistent",
            Status::Skipped => "Skipped",
            Status::Failed => "FAILED",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub label: String,
    pub status: InstanceStatus,
    pub detail: String,
    pub nodes: u64,
    pub evidence: Option<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub statement: String,
    pub feasibility: Feasibility,
    pub status: Status,
    pub instances: Vec<InstanceReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub profile: Profile,
    pub budget: u64,
    pub seed: u64,
    pub claims: Vec<ClaimReport>,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub profile: Profile,
    pub budget: u64,
    pub seed: u64,
    /// Where certificate bundles of exact instances are written.
    pub evidence_dir: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { profile: Profile::Quick, budget: DEFAULT_BUDGET, seed: 0, evidence_dir: None }
    }
}

impl VerificationReport {
    pub fn failed(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Failed)
    }

    /// Plain-text report; timing is appended only when asked for, so two runs
    /// agree byte for byte without it.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "profile {:?}, budget {}, seed {}", self.profile, self.budget, self.seed);
        for c in &self.claims {
            let _ = writeln!(out, "{:<22} {}  {}", c.status.label(), c.id, c.statement);
            for i in &c.instances {
                let status = match i.status {
                    InstanceStatus::Pass => "ok  ",
                    InstanceStatus::Fail => "FAIL",
                    InstanceStatus::Skip => "skip",
                };
                let _ = write!(out, "    {status} {}: {}", i.label, i.detail);
                if timing {
                    let _ = write!(out, " ({} ms)", i.elapsed_ms);
                }
                out.push('\n');
            }
        }
        let count = |s: Status| self.claims.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "summary: {} verified, {} construction verified, {} bounds consistent, {} skipped, {} failed",
            count(Status::Verified),
            count(Status::ConstructionVerified),
            count(Status::BoundsConsistent),
            count(Status::Skipped),
            count(Status::Failed),
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }
}

pub fn verify_all(opts: &VerifyOptions) -> VerificationReport {
    let table = claims_table();
    let claims = table.par_iter().map(|r| verify_claim(r, opts)).collect();
    VerificationReport { profile: opts.profile, budget: opts.budget, seed: opts.seed, claims }
}

pub fn verify_claim(record: &ClaimRecord, opts: &VerifyOptions) -> ClaimReport {
    let instances: Vec<InstanceReport> = record
        .instances
        .iter()
        .enumerate()
        .map(|(k, inst)| run_instance(record, k, inst, opts))
        .collect();
    let status = if instances.iter().any(|i| i.status == InstanceStatus::Fail) {
        Status::Failed
    } else if record.feasibility == Feasibility::OutOfScope || instances.iter().all(|i| i.status == InstanceStatus::Skip) {
        Status::Skipped
    } else {
        match record.feasibility {
            Feasibility::ExactDesk => Status::Verified,
            Feasibility::ConstructionOnly => Status::ConstructionVerified,
            Feasibility::BoundsOnly | Feasibility::OutOfScope => Status::BoundsConsistent,
        }
    };
    ClaimReport {
        id: record.id.to_string(),
        statement: record.statement.to_string(),
        feasibility: record.feasibility,
        status,
        instances,
    }
}

struct Outcome2 {
    status: InstanceStatus,
    detail: String,
    nodes: u64,
    evidence: Option<String>,
}

fn pass(detail: impl Into<String>) -> Outcome2 {
    Outcome2 { status: InstanceStatus::Pass, detail: detail.into(), nodes: 0, evidence: None }
}

fn fail(detail: impl Into<String>) -> Outcome2 {
    Outcome2 { status: InstanceStatus::Fail, detail: detail.into(), nodes: 0, evidence: None }
}

fn skip(detail: impl Into<String>) -> Outcome2 {
    Outcome2 { status: InstanceStatus::Skip, detail: detail.into(), nodes: 0, evidence: None }
}

fn run_instance(record: &ClaimRecord, k: usize, inst: &Instance, opts: &VerifyOptions) -> InstanceReport {
    let start = Instant::now();
    let out = if inst.profile > opts.profile {
        skip("full profile only")
    } else {
        let seed = opts.seed ^ fnv(record.id) ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let evidence = opts.evidence_dir.as_ref().map(|d| d.join(format!("{}-{k}", record.id)));
        match run_check(&inst.check, opts.budget, seed, evidence.as_deref()) {
            Ok(o) => o,
            Err(e) => fail(format!("error: {e}")),
        }
    };
    InstanceReport {
        label: inst.label.clone(),
        status: out.status,
        detail: out.detail,
        nodes: out.nodes,
        evidence: out.evidence,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn parse(expr: &str) -> Result<Graph> {
    graph(expr)
}

fn total_nodes(r: &IrResult) -> u64 {
    r.orders.iter().map(|o| o.nodes).sum::<u64>() + r.arrow_certificate.as_ref().map_or(0, |c| c.stats.nodes)
}

fn judge_exact(r: &IrResult, value: usize, evidence: Option<&Path>) -> Result<Outcome2> {
    let mut out = match r.value {
        IrValue::Exact(v) if v == value => pass(format!(
            "exact {v}; {} hosts of order {} have good colourings",
            r.witness_count,
            v - 1
        )),
        IrValue::Exact(v) => fail(format!("computed {v}")),
        IrValue::Interval { lo, hi } if lo <= value && hi.is_none_or(|h| value <= h) => {
            skip(format!("budget or cap left the interval {}", r.value))
        }
        _ => fail(format!("computed {} excludes {value}", r.value)),
    };
    out.nodes = total_nodes(r);
    if let (Some(dir), InstanceStatus::Pass) = (evidence, out.status) {
        write_bundle(r, dir)?;
        out.evidence = Some(dir.display().to_string());
    }
    Ok(out)
}

fn build_host(spec: &HostSpec, budget: u64) -> Result<Option<Graph>> {
    match spec {
        HostSpec::Expr(e) => parse(e).map(Some),
        HostSpec::CopiesOfIrHost { red, blue, copies } => {
            let cfg = IrConfig { cap: 8, budget };
            let r = ir_exact(&parse(red)?, &parse(blue)?, &cfg)?;
            Ok(r.value.exact().and(r.arrow_certificate).map(|c| c.host.copies(*copies)))
        }
    }
}

fn run_check(check: &Check, budget: u64, seed: u64, evidence: Option<&Path>) -> Result<Outcome2> {
    let cfg = |value: usize| IrConfig { cap: value.min(crate::enumerate::MAX_GEN_ORDER), budget };
    match check {
        Check::Exact { red, blue, value } => {
            let r = ir_exact(&parse(red)?, &parse(blue)?, &cfg(*value))?;
            judge_exact(&r, *value, evidence)
        }
        Check::Multicopy { red, base, t, value } => {
            let r = ir_exact_multicopy(&parse(red)?, &parse(base)?, *t, &cfg(*value))?;
            judge_exact(&r, *value, evidence)
        }
        Check::Arrows { host, red, blue, expect, weak, order, budget: own } => {
            let budget = own.unwrap_or(budget);
            let Some(f) = build_host(host, budget)? else {
                return Ok(skip("base host not found within the cap"));
            };
            if let Some(n) = order {
                if f.order() != *n {
                    return Ok(fail(format!("host has {} vertices, statement gives {n}", f.order())));
                }
            }
            let kind = if *weak { CopyKind::Weak } else { CopyKind::Induced };
            let v = decide(&f, &parse(red)?, &parse(blue)?, budget, kind);
            let mut out = match (&v.outcome, expect) {
                (Outcome::Arrows, true) => pass(format!("arrows ({} nodes)", v.stats.nodes)),
                (Outcome::NotArrows(_), false) => pass("good colouring found and verified"),
                (Outcome::Unknown, _) => skip(format!("budget of {budget} nodes exhausted")),
                (Outcome::Arrows, false) => fail("arrows"),
                (Outcome::NotArrows(_), true) => fail("good colouring found"),
            };
            out.nodes = v.stats.nodes;
            Ok(out)
        }
        Check::Bounds { red, blue, lo, hi, exact_cap } => check_bounds(red, blue, *lo, *hi, *exact_cap, budget),
        Check::Additive { red, parts } => {
            let g = parse(red)?;
            let union = parts.iter().try_fold(Graph::new(0), |acc, p| parse(p).map(|x| acc.disjoint_union(&x)))?;
            let cfg = IrConfig { cap: 8, budget };
            let whole = ir_exact(&g, &union, &cfg)?;
            let mut sum = 0;
            for p in parts.iter() {
                match ir_exact(&g, &parse(p)?, &cfg)?.value {
                    IrValue::Exact(v) => sum += v,
                    other => return Ok(skip(format!("IR({red}, {p}) only known as {other}"))),
                }
            }
            Ok(match whole.value {
                IrValue::Exact(v) if v == sum => pass(format!("{v} = sum of parts")),
                IrValue::Exact(v) => fail(format!("union gives {v}, parts sum to {sum}")),
                other => skip(format!("union only known as {other}")),
            })
        }
        Check::Avoid2K2 { patterns } => {
            let two_k2 = complete(2).copies(2);
            let mut hosts = 0;
            for p in patterns.iter() {
                let g = parse(p)?;
                for f in all_graphs(g.order() + 1)?.iter() {
                    let c = match avoid_2k2_coloring(f, &g)? {
                        Some(c) => c,
                        None => EdgeColoring::uniform(f, Color::Red),
                    };
                    if !verify_coloring(f, &c, &g, &two_k2)?.is_good() {
                        return Ok(fail(format!("bad colouring for {p} on {}", crate::graph6::encode(f))));
                    }
                    hosts += 1;
                }
            }
            Ok(pass(format!("{hosts} hosts coloured")))
        }
        Check::MatchingPartition { max_order } => {
            let mut checked = 0;
            for n in 1..=*max_order {
                for g in all_graphs(n)?.iter() {
                    let p = matching_partition(g)?;
                    let worst = within_part_matching_oracle(g, p.v1);
                    if 3 * worst > n {
                        return Ok(fail(format!("{}: {worst} edges inside the parts", crate::graph6::encode(g))));
                    }
                    checked += 1;
                }
            }
            Ok(pass(format!("{checked} graphs certified")))
        }
        Check::TriangleSamples { t, order, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..*samples {
                let f = planted_host(&mut rng, *order, *t);
                if triangle_coloring(&f, *t)?.is_none() {
                    return Ok(fail(format!("no induced {t}K3 in a planted host {}", crate::graph6::encode(&f))));
                }
            }
            Ok(pass(format!("{samples} hosts coloured (seed {seed})")))
        }
        Check::SampledNotArrows { red, blue, order, samples } => {
            let (g, h) = (parse(red)?, parse(blue)?);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let hosts: Vec<Graph> = (0..*samples).map(|_| random_graph(&mut rng, *order)).collect();
            let verdicts: Vec<_> = hosts.par_iter().map(|f| decide(f, &g, &h, budget, CopyKind::Induced)).collect();
            let mut unknown = 0;
            let mut nodes = 0;
            for (f, v) in hosts.iter().zip(&verdicts) {
                nodes += v.stats.nodes;
                match v.outcome {
                    Outcome::Arrows => return Ok(fail(format!("{} arrows", crate::graph6::encode(f)))),
                    Outcome::Unknown => unknown += 1,
                    Outcome::NotArrows(_) => {}
                }
            }
            let mut out = if unknown == *samples {
                skip("every sample ran out of budget")
            } else {
                pass(format!("{} of {samples} hosts have good colourings, {unknown} undecided (seed {seed})", samples - unknown))
            };
            out.nodes = nodes;
            Ok(out)
        }
        Check::ConnectedArrowers { red, blue, order } => {
            let (g, h) = (parse(red)?, parse(blue)?);
            let hosts = all_graphs(*order)?;
            let verdicts: Vec<_> = hosts.par_iter().map(|f| decide(f, &g, &h, budget, CopyKind::Induced)).collect();
            let mut arrowing = 0;
            for (f, v) in hosts.iter().zip(&verdicts) {
                match v.outcome {
                    Outcome::Arrows if !f.is_connected() => {
                        return Ok(fail(format!("disconnected arrowing host {}", crate::graph6::encode(f))))
                    }
                    Outcome::Arrows => arrowing += 1,
                    Outcome::Unknown => return Ok(skip("budget exhausted")),
                    Outcome::NotArrows(_) => {}
                }
            }
            if arrowing == 0 {
                return Ok(fail(format!("no host of order {order} arrows")));
            }
            Ok(pass(format!("{arrowing} arrowing hosts, all connected")))
        }
        Check::LowerFormula { red, blue } => {
            let (g, h) = (parse(red)?, parse(blue)?);
            let bound = gorgol_lower_bound(independence_number(&g), clique_number(&h));
            let r = ir_exact(&g, &h, &IrConfig { cap: 8, budget })?;
            Ok(match r.value {
                IrValue::Exact(v) if bound <= v => pass(format!("bound {bound} <= {v}")),
                IrValue::Exact(v) => fail(format!("bound {bound} exceeds {v}")),
                other => skip(format!("value only known as {other}")),
            })
        }
        Check::OutOfScope { reason } => Ok(skip(*reason)),
    }
}

fn check_bounds(red: &str, blue: &str, lo: f64, hi: Option<f64>, exact_cap: Option<usize>, budget: u64) -> Result<Outcome2> {
    let (g, h) = (parse(red)?, parse(blue)?);
    let mut c_lo = ir_lower(&g, &h);
    let mut c_hi: Option<usize> = None;
    let mut nodes = 0;
    if let Some(cert) = ir_upper_by_construction(&g, &h, &IrConfig { cap: 7, budget }) {
        nodes += cert.stats.nodes;
        c_hi = Some(cert.host.order());
    }
    if let Some(cap) = exact_cap {
        let r = ir_exact(&g, &h, &IrConfig { cap, budget })?;
        nodes += total_nodes(&r);
        c_lo = c_lo.max(r.value.lo());
        c_hi = match (c_hi, r.value.hi()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    // the value is an integer in both intervals
    let low = (lo.ceil() as usize).max(c_lo);
    let high = match (hi.map(|x| x.floor() as usize), c_hi) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let computed = match c_hi {
        Some(u) => format!("[{c_lo}, {u}]"),
        None => format!("[{c_lo}, ?]"),
    };
    let mut out = if high.is_none_or(|hh| low <= hh) {
        pass(format!("computed {computed} meets the claim"))
    } else {
        fail(format!("computed {computed} contradicts the claim"))
    };
    out.nodes = nodes;
    Ok(out)
}

/// Largest number of within-part edges over all induced matchings, found by
/// listing every matching and testing it for inducedness.
pub fn within_part_matching_oracle(g: &Graph, v1: u64) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let same_side = |u: usize, v: usize| (v1 >> u & 1) == (v1 >> v & 1);
    let mut best = 0;
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn walk(
        g: &Graph,
        edges: &[(usize, usize)],
        i: usize,
        used: u64,
        chosen: &mut Vec<(usize, usize)>,
        best: &mut usize,
        same_side: &dyn Fn(usize, usize) -> bool,
    ) {
        if i == edges.len() {
            let induced = chosen.iter().enumerate().all(|(a, &(u, v))| {
                chosen[a + 1..].iter().all(|&(x, y)| !g.has_edge(u, x) && !g.has_edge(u, y) && !g.has_edge(v, x) && !g.has_edge(v, y))
            });
            if induced {
                *best = (*best).max(chosen.iter().filter(|&&(u, v)| same_side(u, v)).count());
            }
            return;
        }
        walk(g, edges, i + 1, used, chosen, best, same_side);
        let (u, v) = edges[i];
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            chosen.push((u, v));
            walk(g, edges, i + 1, used | 1 << u | 1 << v, chosen, best, same_side);
            chosen.pop();
        }
    }
    walk(g, &edges, 0, 0, &mut chosen, &mut best, &same_side);
    best
}

/// Edge probability drawn per host from `[0.2, 0.8)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.8);
    let mut g = Graph::new(n);
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random host of order `n` in which a random vertex set induces `tK3`.
pub fn planted_host(rng: &mut ChaCha8Rng, n: usize, t: usize) -> Graph {
    assert!(3 * t <= n);
    let mut g = random_graph(rng, n);
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..3 * t {
        let j = rng.gen_range(i..n);
        verts.swap(i, j);
    }
    let planted = &verts[..3 * t];
    for (a, &u) in planted.iter().enumerate() {
        for (b, &v) in planted.iter().enumerate().skip(a + 1) {
            if a / 3 == b / 3 {
                g.add_edge(u, v);
            } else {
                g.remove_edge(u, v);
            }
        }
    }
    g
}

/// Shorthand used by the command line.
pub fn profile_from_str(s: &str) -> Result<Profile> {
    s.parse().map_err(|e: String| Error::Parse { input: s.to_string(), reason: e })
}
