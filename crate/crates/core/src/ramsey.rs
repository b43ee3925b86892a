//! Induced Ramsey numbers: closed-form lower bounds, explicit arrowing
//! hosts, and exact values from exhaustive sweeps over host orders.
//!
//! An exact value `v` is reported only with an arrowing host of order `v`
//! and a good colouring for every host of order `v - 1`. Adding an isolated
//! (or dominating) vertex preserves arrowing, so order `v - 1` alone covers
//! all smaller hosts.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrow::{decide_arrowing, Outcome, SearchStats, DEFAULT_BUDGET};
use crate::canon::{canonical_key, CanonicalKey};
use crate::coloring::EdgeColoring;
use crate::enumerate::{collect, GenFilter, MAX_GEN_ORDER};
use crate::error::{Error, Result};
use crate::family::{complete, cycle};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::{encode, serde_graph6};
use crate::params::{clique_number, independence_number};
use crate::strategies::gorgol_lower_bound;

/// Orders used when a base pair has to be solved to build a larger host.
const FALLBACK_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrConfig {
    /// Largest host order that may be swept.
    pub cap: usize,
    /// Node budget per host decision.
    pub budget: u64,
}

impl Default for IrConfig {
    fn default() -> Self {
        IrConfig { cap: 8, budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IrValue {
    Exact(usize),
    Interval { lo: usize, hi: Option<usize> },
}

impl IrValue {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            IrValue::Exact(v) => Some(v),
            IrValue::Interval { .. } => None,
        }
    }

    pub fn lo(&self) -> usize {
        match *self {
            IrValue::Exact(v) | IrValue::Interval { lo: v, .. } => v,
        }
    }

    pub fn hi(&self) -> Option<usize> {
        match *self {
            IrValue::Exact(v) => Some(v),
            IrValue::Interval { hi, .. } => hi,
        }
    }
}

impl fmt::Display for IrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IrValue::Exact(v) => write!(f, "{v}"),
            IrValue::Interval { lo, hi: Some(hi) } => write!(f, "[{lo}, {hi}]"),
            IrValue::Interval { lo, hi: None } => write!(f, "[{lo}, ?]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertSource {
    /// Found while sweeping all hosts of one order.
    Sweep,
    /// A host built from known smaller hosts.
    Construction,
    /// Disjoint union of hosts for a split of the copies.
    Decomposition,
}

/// An arrowing host together with the search that confirmed it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowCertificate {
    #[serde(with = "serde_graph6")]
    pub host: Graph,
    pub source: CertSource,
    pub description: String,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Every host of the witness order was decided.
    SweepAll,
    /// Only connected hosts were decided; disconnected hosts below the bound
    /// cannot arrow (see [`ir_exact_multicopy`]).
    ConnectedReduction { decomposition_bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub order: usize,
    pub connected_only: bool,
    pub hosts: usize,
    /// Hosts decided before the sweep stopped at the first arrowing one.
    pub decided: usize,
    pub not_arrows: usize,
    pub unknown: usize,
    pub arrows: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrResult {
    #[serde(with = "serde_graph6")]
    pub red: Graph,
    #[serde(with = "serde_graph6")]
    pub blue: Graph,
    pub lower_bound: usize,
    pub value: IrValue,
    pub method: Method,
    pub arrow_certificate: Option<ArrowCertificate>,
    /// Order whose hosts all received good colourings.
    pub witness_order: Option<usize>,
    pub witness_count: usize,
    #[serde(skip)]
    pub witnesses: Vec<(Graph, EdgeColoring)>,
    pub orders: Vec<OrderReport>,
    pub budget: u64,
}

/// Largest of the lower bounds that hold for the pair:
/// * `max(|G|, |H|)` when both have an edge (colour everything red, then
///   everything blue), otherwise `min(|G|, |H|)`;
/// * `(α(G) - 1)·ω(H)·(ω(H) - 1)/2 + ω(H)` for connected `G` with an edge;
/// * `|G| + 2` when `H = 2K2` and `G` has an edge and no isolated vertex.
pub fn ir_lower(g: &Graph, h: &Graph) -> usize {
    let (ng, nh) = (g.order(), h.order());
    let mut lo = if g.edge_count() > 0 && h.edge_count() > 0 { ng.max(nh) } else { ng.min(nh) };
    if g.order() >= 2 && g.is_connected() && h.order() > 0 {
        lo = lo.max(gorgol_lower_bound(independence_number(g), clique_number(h)));
    }
    if g.edge_count() > 0 && g.isolated_vertices() == 0 && is_two_k2(h) {
        lo = lo.max(ng + 2);
    }
    lo
}

fn is_two_k2(h: &Graph) -> bool {
    canonical_key(h) == canonical_key(&complete(2).copies(2))
}

fn same(a: &Graph, b: &Graph) -> bool {
    canonical_key(a) == canonical_key(b)
}

/// Number of vertices if `g` is a path.
fn path_order(g: &Graph) -> Option<usize> {
    let n = g.order();
    (n >= 1 && g.is_connected() && g.edge_count() + 1 == n && (0..n).all(|v| g.degree(v) <= 2)).then_some(n)
}

/// All ways to write `g = s·g0`, including `s = 1`.
pub fn decompose(g: &Graph) -> Vec<(usize, Graph)> {
    let mut classes: BTreeMap<CanonicalKey, (Graph, usize)> = BTreeMap::new();
    for comp in g.components() {
        let c = g.induced(comp);
        classes.entry(canonical_key(&c)).or_insert((c, 0)).1 += 1;
    }
    let d = classes.values().fold(0, |acc, &(_, k)| gcd(acc, k));
    if d == 0 {
        return vec![(1, g.clone())];
    }
    (1..=d)
        .filter(|s| d % s == 0)
        .map(|s| {
            let g0 = classes
                .values()
                .fold(Graph::new(0), |acc, (c, k)| acc.disjoint_union(&c.copies(k / s)));
            (s, g0)
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Hosts known to arrow small base pairs.
fn known_host(g0: &Graph, h0: &Graph) -> Option<Graph> {
    let k2 = complete(2);
    if same(g0, &k2) {
        return Some(h0.clone());
    }
    if same(h0, &k2) {
        return Some(g0.clone());
    }
    if is_two_k2(h0) {
        match path_order(g0) {
            Some(4) => return Some(cycle(7)),
            Some(n) if n >= 5 => return Some(cycle(n + 2)),
            _ => {}
        }
    }
    let k3 = complete(3);
    if same(g0, &k3) && same(h0, &k3) {
        return Some(complete(6));
    }
    None
}

/// A candidate arrowing host with a one-line account of where it comes from.
#[derive(Clone, Debug)]
pub struct Construction {
    pub host: Graph,
    pub description: String,
}

/// Hosts built from the table of known hosts, smallest first:
/// * `(s+t-1)·F0` when `G = s·G0`, `H = t·H0` and `F0` arrows `(G0, H0)`;
/// * `q·B2 ∪ r·B1` for connected `G` and `H = t·H0` with `t = 2q + r`,
///   where `B1` arrows `(G, H0)` and `B2` arrows `(G, 2H0)`.
pub fn construction_candidates(g: &Graph, h: &Graph) -> Vec<Construction> {
    let mut out = Vec::new();
    let gs = decompose(g);
    let hs = decompose(h);
    for (s, g0) in &gs {
        for (t, h0) in &hs {
            if let Some(f0) = known_host(g0, h0) {
                out.push(copies_of(&f0, s + t - 1));
            }
        }
    }
    if g.is_connected() {
        for (t, h0) in &hs {
            if *t < 2 || !h0.is_connected() {
                continue;
            }
            let (q, r) = (t / 2, t % 2);
            let b2 = known_host(g, &h0.copies(2));
            let b1 = if r == 1 { known_host(g, h0) } else { Some(Graph::new(0)) };
            if let (Some(b2), Some(b1)) = (b2, b1) {
                let host = b2.copies(q).disjoint_union(&b1);
                let mut description = format!("{q} x {}", encode(&b2));
                if r == 1 {
                    description.push_str(&format!(" + {}", encode(&b1)));
                }
                out.push(Construction { host, description });
            }
        }
    }
    finish(out)
}

fn copies_of(f0: &Graph, k: usize) -> Construction {
    Construction { host: f0.copies(k), description: format!("{k} x {}", encode(f0)) }
}

fn finish(mut out: Vec<Construction>) -> Vec<Construction> {
    out.retain(|c| c.host.order() <= MAX_ORDER);
    out.sort_by_key(|c| (c.host.order(), c.host.edge_count()));
    let mut seen = std::collections::HashSet::new();
    out.retain(|c| seen.insert(canonical_key(&c.host)));
    out
}

/// Smallest constructed host confirmed to arrow `(g, h)` by the search.
/// When the table has nothing, base pairs `(G0, H0)` of nontrivial splits
/// are solved exactly (up to order 7) and their hosts multiplied.
pub fn ir_upper_by_construction(g: &Graph, h: &Graph, config: &IrConfig) -> Option<ArrowCertificate> {
    let confirm = |cands: Vec<Construction>| {
        cands.into_iter().find_map(|c| {
            let v = decide_arrowing(&c.host, g, h, config.budget);
            (v.outcome == Outcome::Arrows).then_some(ArrowCertificate {
                host: c.host,
                source: CertSource::Construction,
                description: c.description,
                stats: v.stats,
            })
        })
    };
    if let Some(cert) = confirm(construction_candidates(g, h)) {
        return Some(cert);
    }
    let mut fallback = Vec::new();
    let sub = IrConfig { cap: config.cap.min(FALLBACK_CAP), budget: config.budget };
    let solved = |g0: &Graph, h0: &Graph| -> Option<Graph> {
        known_host(g0, h0).or_else(|| {
            let r = ir_exact(g0, h0, &sub).ok()?;
            r.value.exact()?;
            r.arrow_certificate.map(|c| c.host)
        })
    };
    for (s, g0) in decompose(g) {
        for (t, h0) in decompose(h) {
            if s * t == 1 {
                continue;
            }
            if let Some(f0) = solved(&g0, &h0) {
                fallback.push(copies_of(&f0, s + t - 1));
            }
        }
    }
    // a red copy of a connected G lies inside one part, so a union of hosts
    // for the components of H arrows (G, H)
    let comps = h.components();
    if g.is_connected() && comps.len() >= 2 {
        let parts: Option<Vec<Graph>> = comps.iter().map(|&c| solved(g, &h.induced(c))).collect();
        if let Some(parts) = parts {
            let host = parts.iter().fold(Graph::new(0), |acc, p| acc.disjoint_union(p));
            let description = parts.iter().map(encode).collect::<Vec<_>>().join(" + ");
            fallback.push(Construction { host, description });
        }
    }
    confirm(finish(fallback))
}

enum Sweep {
    AllNotArrows(Vec<(Graph, EdgeColoring)>),
    Arrows { host: Graph, stats: SearchStats },
    Tainted,
}

/// Decides every host of order `n` (densest first) until one arrows.
fn sweep(g: &Graph, h: &Graph, n: usize, connected_only: bool, budget: u64) -> Result<(Sweep, OrderReport)> {
    let mut hosts = if n == 0 {
        vec![Graph::new(0)]
    } else {
        let filter = GenFilter { connected_only, ..Default::default() };
        collect(n, &filter)?
    };
    hosts.sort_by_key(|f| std::cmp::Reverse(f.edge_count()));
    let first = AtomicUsize::new(usize::MAX);
    let verdicts: Vec<_> = hosts
        .par_iter()
        .enumerate()
        .map(|(i, f)| {
            if i > first.load(Ordering::Relaxed) {
                return None;
            }
            let v = decide_arrowing(f, g, h, budget);
            if v.outcome == Outcome::Arrows {
                first.fetch_min(i, Ordering::Relaxed);
            }
            Some(v)
        })
        .collect();
    let stop = first.into_inner();
    let decided = if stop == usize::MAX { hosts.len() } else { stop + 1 };
    let mut report = OrderReport {
        order: n,
        connected_only,
        hosts: hosts.len(),
        decided,
        not_arrows: 0,
        unknown: 0,
        arrows: stop != usize::MAX,
        nodes: 0,
    };
    let mut witnesses = Vec::new();
    for (f, v) in hosts.iter().zip(&verdicts).take(decided) {
        let v = v.as_ref().expect("hosts before the first arrowing one are decided");
        report.nodes += v.stats.nodes;
        match &v.outcome {
            Outcome::NotArrows(c) => {
                report.not_arrows += 1;
                witnesses.push((f.clone(), c.clone()));
            }
            Outcome::Unknown => report.unknown += 1,
            Outcome::Arrows => {}
        }
    }
    let outcome = if report.arrows {
        let v = verdicts[stop].as_ref().expect("decided");
        Sweep::Arrows { host: hosts[stop].clone(), stats: v.stats }
    } else if report.unknown > 0 {
        Sweep::Tainted
    } else {
        Sweep::AllNotArrows(witnesses)
    };
    Ok((outcome, report))
}

struct Run<'a> {
    g: &'a Graph,
    h: &'a Graph,
    lo: usize,
    config: &'a IrConfig,
    connected_only: bool,
    method: Method,
    orders: Vec<OrderReport>,
}

impl Run<'_> {
    fn result(
        self,
        value: IrValue,
        arrow_certificate: Option<ArrowCertificate>,
        witnesses: Option<(usize, Vec<(Graph, EdgeColoring)>)>,
    ) -> IrResult {
        let (witness_order, witnesses) = match witnesses {
            Some((n, w)) => (Some(n), w),
            None => (None, Vec::new()),
        };
        IrResult {
            red: self.g.clone(),
            blue: self.h.clone(),
            lower_bound: self.lo,
            value,
            method: self.method,
            arrow_certificate,
            witness_order,
            witness_count: witnesses.len(),
            witnesses,
            orders: self.orders,
            budget: self.config.budget,
        }
    }

    fn sweep(&mut self, n: usize) -> Result<Sweep> {
        let (outcome, report) = sweep(self.g, self.h, n, self.connected_only, self.config.budget)?;
        self.orders.push(report);
        if matches!(outcome, Sweep::Arrows { .. }) && n < self.lo {
            return Err(Error::LowerBoundViolated { bound: self.lo, order: n });
        }
        Ok(outcome)
    }

    /// Walks down from just below a known arrowing host until an order
    /// where nothing arrows.
    fn descend(mut self, mut best: ArrowCertificate) -> Result<IrResult> {
        let mut n = best.host.order() - 1;
        loop {
            match self.sweep(n)? {
                Sweep::AllNotArrows(w) => return Ok(self.result(IrValue::Exact(n + 1), Some(best), Some((n, w)))),
                Sweep::Arrows { host, stats } => {
                    best = ArrowCertificate {
                        host,
                        source: CertSource::Sweep,
                        description: format!("first arrowing host of order {n}"),
                        stats,
                    };
                    n -= 1;
                }
                Sweep::Tainted => {
                    let lo = self.lo;
                    return Ok(self.result(IrValue::Interval { lo, hi: Some(n + 1) }, Some(best), None));
                }
            }
        }
    }

    /// Walks up from just below the lower bound to the cap.
    fn ascend(mut self, upper: Option<ArrowCertificate>) -> Result<IrResult> {
        let mut lo = self.lo;
        let mut last: Option<(usize, Vec<(Graph, EdgeColoring)>)> = None;
        let top = match &upper {
            Some(c) => self.config.cap.min(c.host.order() - 1),
            None => self.config.cap,
        };
        for n in self.lo.saturating_sub(1)..=top {
            match self.sweep(n)? {
                Sweep::AllNotArrows(w) => {
                    lo = lo.max(n + 1);
                    last = Some((n, w));
                }
                Sweep::Arrows { host, stats } => {
                    let cert = ArrowCertificate {
                        host,
                        source: CertSource::Sweep,
                        description: format!("first arrowing host of order {n}"),
                        stats,
                    };
                    let witnessed = last.filter(|(m, _)| m + 1 == n);
                    let value = if witnessed.is_some() { IrValue::Exact(n) } else { IrValue::Interval { lo, hi: Some(n) } };
                    return Ok(self.result(value, Some(cert), witnessed));
                }
                Sweep::Tainted => last = None,
            }
        }
        let hi = upper.as_ref().map(|c| c.host.order());
        let value = if hi == Some(lo) && last.as_ref().is_some_and(|(m, _)| m + 1 == lo) {
            IrValue::Exact(lo)
        } else {
            last = None;
            IrValue::Interval { lo, hi }
        };
        Ok(self.result(value, upper, last))
    }
}

fn check_pair(g: &Graph, h: &Graph, config: &IrConfig) -> Result<()> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::Precondition("patterns must have at least one vertex".into()));
    }
    if config.cap > MAX_GEN_ORDER {
        return Err(Error::OrderOutOfRange(config.cap, MAX_GEN_ORDER));
    }
    Ok(())
}

/// `IR(g, h)` by exhaustive sweeps.
///
/// With a confirmed construction of order `u` and `u - 1 <= cap`, orders are
/// swept downwards from `u - 1` until one has no arrowing host. Otherwise
/// orders go upwards from `ir_lower - 1` to the cap. Hosts whose decision
/// runs out of budget make the answer an interval.
pub fn ir_exact(g: &Graph, h: &Graph, config: &IrConfig) -> Result<IrResult> {
    check_pair(g, h, config)?;
    let lo = ir_lower(g, h);
    let upper = ir_upper_by_construction(g, h, config);
    if let Some(c) = &upper {
        if c.host.order() < lo {
            return Err(Error::LowerBoundViolated { bound: lo, order: c.host.order() });
        }
    }
    let run = Run { g, h, lo, config, connected_only: false, method: Method::SweepAll, orders: Vec::new() };
    match upper {
        Some(c) if c.host.order() - 1 <= config.cap => run.descend(c),
        other => run.ascend(other),
    }
}

/// `IR(g, t·h_base)` for connected `g` and `h_base`.
///
/// Let `f_i = IR(g, i·h_base)` and `D = min f_a + f_{t-a}` over `0 < a < t`.
/// A disconnected arrowing host of minimum order splits into parts arrowing
/// `(g, a·h_base)` and `(g, (t-a)·h_base)`, so it has at least `D` vertices.
/// Hence `f_t` is `D` or the least order of a connected arrowing host below
/// `D`, and only connected hosts need to be swept.
pub fn ir_exact_multicopy(g: &Graph, h_base: &Graph, t: usize, config: &IrConfig) -> Result<IrResult> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    check_pair(g, h_base, config)?;
    if !g.is_connected() || !h_base.is_connected() {
        return Err(Error::Precondition("both patterns must be connected".into()));
    }
    let mut memo: Vec<IrResult> = Vec::new();
    for i in 1..=t {
        let r = multicopy_step(g, h_base, i, &memo, config)?;
        memo.push(r);
    }
    Ok(memo.pop().expect("t >= 1"))
}

fn multicopy_step(g: &Graph, h_base: &Graph, t: usize, memo: &[IrResult], config: &IrConfig) -> Result<IrResult> {
    if t == 1 {
        return ir_exact(g, h_base, config);
    }
    let h = h_base.copies(t);
    let lo = ir_lower(g, &h);
    let mut best: Option<(usize, usize)> = None;
    for a in 1..=t / 2 {
        let (fa, fb) = (memo[a - 1].value.exact(), memo[t - a - 1].value.exact());
        if let (Some(fa), Some(fb)) = (fa, fb) {
            if best.is_none_or(|(d, _)| fa + fb < d) {
                best = Some((fa + fb, a));
            }
        }
    }
    let method_for = |d| Method::ConnectedReduction { decomposition_bound: d };
    let Some((d, a)) = best else {
        let run = Run { g, h: &h, lo, config, connected_only: true, method: Method::SweepAll, orders: Vec::new() };
        return Ok(run.result(IrValue::Interval { lo, hi: None }, None, None));
    };
    let run = Run { g, h: &h, lo, config, connected_only: true, method: method_for(d), orders: Vec::new() };
    let part = |i: usize| memo[i - 1].arrow_certificate.as_ref().expect("exact results carry a host").host.clone();
    let host = part(a).disjoint_union(&part(t - a));
    let v = decide_arrowing(&host, g, &h, config.budget);
    if v.outcome != Outcome::Arrows {
        return Ok(run.result(IrValue::Interval { lo, hi: None }, None, None));
    }
    if d < lo {
        return Err(Error::LowerBoundViolated { bound: lo, order: d });
    }
    let cert = ArrowCertificate {
        host,
        source: CertSource::Decomposition,
        description: format!("hosts for {a} and {} copies side by side", t - a),
        stats: v.stats,
    };
    // a connected host below D shortens the descent; the reduction still
    // lets every order below D be settled by connected hosts alone
    let cert = match ir_upper_by_construction(g, &h, config) {
        Some(c) if c.host.order() < d => c,
        _ => cert,
    };
    let top = cert.host.order();
    if top - 1 > config.cap {
        return Ok(run.result(IrValue::Interval { lo, hi: Some(top) }, Some(cert), None));
    }
    run.descend(cert)
}
