//! Deciding `F → (G, H)`: does every red/blue colouring of the edges of the
//! host `F` contain a red copy of `G` or a blue copy of `H`?
//!
//! In the strong (induced) version the copies must be induced subgraphs of
//! `F`; in the weak version any subgraph will do. Both run the same engine:
//!
//! 1. enumerate every copy of `G` and of `H` in `F` once, as sets of host edges;
//! 2. colour edges in a fixed order (most-constrained first), keeping for each
//!    copy the number of red and blue edges it already has;
//! 3. backtrack when a `G`-copy turns fully red or an `H`-copy fully blue, and
//!    force the last open edge of a copy to the colour that keeps it alive;
//! 4. a complete colouring without a violated copy is a good colouring.
//!
//! At the root the first edge `e` is coloured red, or else its whole
//! automorphism orbit is coloured blue: a good colouring with some red edge in
//! that orbit maps onto one with `e` red. When `G ≅ H` swapping colours makes
//! the blue branch redundant as well.

use serde::{Deserialize, Serialize};

use crate::canon::{automorphism_generators, canonical_key};
use crate::coloring::{Color, EdgeColoring, EdgeIndex};
use crate::embed::{
    find_mono_induced, find_mono_subgraph, induced_copies, subgraph_copies, Embedding,
};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Default node budget for a single decision.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Largest edge count accepted by the brute-force oracle.
pub const BRUTE_FORCE_MAX_EDGES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CopyKind {
    /// Copies must be induced subgraphs of the host.
    Induced,
    /// Classical Ramsey copies: any subgraph.
    Weak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Goodness {
    Good,
    Bad { color: Color, embedding: Embedding },
}

impl Goodness {
    pub fn is_good(&self) -> bool {
        matches!(self, Goodness::Good)
    }
}

/// Checks a colouring directly with the embedding search, independent of the
/// copy lists used by the engine.
pub fn verify_coloring(host: &Graph, c: &EdgeColoring, g: &Graph, h: &Graph) -> Result<Goodness> {
    verify_with(host, c, g, h, CopyKind::Induced)
}

pub fn verify_coloring_weak(host: &Graph, c: &EdgeColoring, g: &Graph, h: &Graph) -> Result<Goodness> {
    verify_with(host, c, g, h, CopyKind::Weak)
}

fn verify_with(host: &Graph, c: &EdgeColoring, g: &Graph, h: &Graph, kind: CopyKind) -> Result<Goodness> {
    if c.len() != host.edge_count() {
        return Err(Error::PartialColoring { expected: host.edge_count(), found: c.len() });
    }
    let find = match kind {
        CopyKind::Induced => find_mono_induced,
        CopyKind::Weak => find_mono_subgraph,
    };
    if let Some(embedding) = find(host, c, Color::Red, g) {
        return Ok(Goodness::Bad { color: Color::Red, embedding });
    }
    if let Some(embedding) = find(host, c, Color::Blue, h) {
        return Ok(Goodness::Bad { color: Color::Blue, embedding });
    }
    Ok(Goodness::Good)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Arrows,
    NotArrows(EdgeColoring),
    Unknown,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Arrows => "Arrows",
            Outcome::NotArrows(_) => "NotArrows",
            Outcome::Unknown => "Unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Branching decisions made (the budget unit).
    pub nodes: u64,
    /// Edges coloured by propagation.
    pub propagations: u64,
    pub red_copies: usize,
    pub blue_copies: usize,
    pub budget: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowingVerdict {
    pub outcome: Outcome,
    pub stats: SearchStats,
}

pub fn decide_arrowing(host: &Graph, g: &Graph, h: &Graph, budget: u64) -> ArrowingVerdict {
    decide(host, g, h, budget, CopyKind::Induced)
}

pub fn decide_weak_arrowing(host: &Graph, g: &Graph, h: &Graph, budget: u64) -> ArrowingVerdict {
    decide(host, g, h, budget, CopyKind::Weak)
}

pub fn decide(host: &Graph, g: &Graph, h: &Graph, budget: u64, kind: CopyKind) -> ArrowingVerdict {
    let index = EdgeIndex::new(host);
    let copies = |p: &Graph| -> Vec<Vec<u32>> {
        match kind {
            CopyKind::Induced => induced_copies(host, p)
                .into_iter()
                .map(|mask| {
                    let mut es = Vec::new();
                    for u in Bits(mask) {
                        for v in Bits(host.neighbors(u) & mask & !((2u64 << u) - 1)) {
                            es.push(index.get(u, v).expect("edge") as u32);
                        }
                    }
                    es.sort_unstable();
                    es
                })
                .collect(),
            CopyKind::Weak => subgraph_copies(host, p),
        }
    };
    let red = copies(g);
    let blue = copies(h);
    let mut stats = SearchStats {
        red_copies: red.len(),
        blue_copies: blue.len(),
        budget,
        ..Default::default()
    };
    // an edgeless copy is monochromatic in every colouring
    if red.iter().chain(&blue).any(|c| c.is_empty()) {
        return ArrowingVerdict { outcome: Outcome::Arrows, stats };
    }
    let swap_symmetric = canonical_key(g) == canonical_key(h);
    let mut engine = Engine::new(host.edge_count(), red, blue, budget);
    let roots = engine.root_branches(host, swap_symmetric);
    let mut result = Search::Exhausted;
    for branch in roots {
        engine.nodes += 1;
        if engine.nodes > budget {
            result = Search::OutOfBudget;
            break;
        }
        let mark = engine.trail.len();
        let mut ok = true;
        for &(e, c) in &branch {
            engine.queue.push((e, c));
        }
        ok &= engine.propagate();
        if ok {
            result = engine.dfs(0);
            if !matches!(result, Search::Exhausted) {
                break;
            }
        }
        engine.undo(mark);
    }
    stats.nodes = engine.nodes.min(budget);
    stats.propagations = engine.propagations;
    let outcome = match result {
        Search::Exhausted => Outcome::Arrows,
        Search::OutOfBudget => Outcome::Unknown,
        Search::Found => {
            let colors = engine
                .color
                .iter()
                .map(|&c| if c == RED { Color::Red } else { Color::Blue })
                .collect();
            let witness = EdgeColoring::from_colors(host, colors).expect("total colouring");
            let check = verify_with(host, &witness, g, h, kind).expect("total colouring");
            assert!(check.is_good(), "engine produced a bad witness: {check:?}");
            Outcome::NotArrows(witness)
        }
    };
    ArrowingVerdict { outcome, stats }
}

const UNSET: u8 = 0;
const RED: u8 = 1;
const BLUE: u8 = 2;

#[derive(Clone, Copy, Debug)]
enum Search {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Engine {
    red_copies: Vec<Vec<u32>>,
    blue_copies: Vec<Vec<u32>>,
    red_of_edge: Vec<Vec<u32>>,
    blue_of_edge: Vec<Vec<u32>>,
    order: Vec<u32>,
    color: Vec<u8>,
    /// Red and blue edge counts of each red-pattern copy.
    rr: Vec<u16>,
    rb: Vec<u16>,
    /// Red and blue edge counts of each blue-pattern copy.
    br: Vec<u16>,
    bb: Vec<u16>,
    trail: Vec<u32>,
    queue: Vec<(u32, u8)>,
    nodes: u64,
    propagations: u64,
    budget: u64,
}

impl Engine {
    fn new(m: usize, red_copies: Vec<Vec<u32>>, blue_copies: Vec<Vec<u32>>, budget: u64) -> Self {
        let mut red_of_edge = vec![Vec::new(); m];
        let mut blue_of_edge = vec![Vec::new(); m];
        for (k, c) in red_copies.iter().enumerate() {
            for &e in c {
                red_of_edge[e as usize].push(k as u32);
            }
        }
        for (k, c) in blue_copies.iter().enumerate() {
            for &e in c {
                blue_of_edge[e as usize].push(k as u32);
            }
        }
        let mut order: Vec<u32> = (0..m as u32).collect();
        order.sort_by_key(|&e| {
            std::cmp::Reverse(red_of_edge[e as usize].len() + blue_of_edge[e as usize].len())
        });
        Engine {
            rr: vec![0; red_copies.len()],
            rb: vec![0; red_copies.len()],
            br: vec![0; blue_copies.len()],
            bb: vec![0; blue_copies.len()],
            red_copies,
            blue_copies,
            red_of_edge,
            blue_of_edge,
            order,
            color: vec![UNSET; m],
            trail: Vec::with_capacity(m),
            queue: Vec::new(),
            nodes: 0,
            propagations: 0,
            budget,
        }
    }

    /// Initial assignments, one list per root branch.
    fn root_branches(&self, host: &Graph, swap_symmetric: bool) -> Vec<Vec<(u32, u8)>> {
        let Some(&e0) = self.order.first() else {
            return vec![Vec::new()];
        };
        if swap_symmetric {
            return vec![vec![(e0, RED)]];
        }
        let orbit = edge_orbit(host, e0 as usize);
        vec![vec![(e0, RED)], orbit.into_iter().map(|e| (e as u32, BLUE)).collect()]
    }

    fn dfs(&mut self, mut pos: usize) -> Search {
        while pos < self.order.len() && self.color[self.order[pos] as usize] != UNSET {
            pos += 1;
        }
        if pos == self.order.len() {
            return Search::Found;
        }
        let e = self.order[pos];
        for c in [RED, BLUE] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Search::OutOfBudget;
            }
            let mark = self.trail.len();
            self.queue.push((e, c));
            if self.propagate() {
                match self.dfs(pos + 1) {
                    Search::Exhausted => {}
                    done => return done,
                }
            }
            self.undo(mark);
        }
        Search::Exhausted
    }

    fn propagate(&mut self) -> bool {
        let mut first = true;
        while let Some((e, c)) = self.queue.pop() {
            let cur = self.color[e as usize];
            if cur == c {
                continue;
            }
            if cur != UNSET || !self.assign(e, c) {
                self.queue.clear();
                return false;
            }
            if !first {
                self.propagations += 1;
            }
            first = false;
        }
        true
    }

    /// Colours `e` and updates the copy counters; queues forced edges.
    /// Returns false if some copy became monochromatic in its forbidden colour.
    fn assign(&mut self, e: u32, c: u8) -> bool {
        let ei = e as usize;
        self.color[ei] = c;
        self.trail.push(e);
        let mut ok = true;
        if c == RED {
            for &k in &self.red_of_edge[ei] {
                let k = k as usize;
                self.rr[k] += 1;
                if self.rb[k] == 0 {
                    let len = self.red_copies[k].len() as u16;
                    if self.rr[k] == len {
                        ok = false;
                    } else if self.rr[k] + 1 == len {
                        if let Some(&f) = self.red_copies[k].iter().find(|&&f| self.color[f as usize] == UNSET) {
                            self.queue.push((f, BLUE));
                        }
                    }
                }
            }
            for &k in &self.blue_of_edge[ei] {
                self.br[k as usize] += 1;
            }
        } else {
            for &k in &self.blue_of_edge[ei] {
                let k = k as usize;
                self.bb[k] += 1;
                if self.br[k] == 0 {
                    let len = self.blue_copies[k].len() as u16;
                    if self.bb[k] == len {
                        ok = false;
                    } else if self.bb[k] + 1 == len {
                        if let Some(&f) = self.blue_copies[k].iter().find(|&&f| self.color[f as usize] == UNSET) {
                            self.queue.push((f, RED));
                        }
                    }
                }
            }
            for &k in &self.red_of_edge[ei] {
                self.rb[k as usize] += 1;
            }
        }
        ok
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("above mark") as usize;
            if self.color[e] == RED {
                for &k in &self.red_of_edge[e] {
                    self.rr[k as usize] -= 1;
                }
                for &k in &self.blue_of_edge[e] {
                    self.br[k as usize] -= 1;
                }
            } else {
                for &k in &self.blue_of_edge[e] {
                    self.bb[k as usize] -= 1;
                }
                for &k in &self.red_of_edge[e] {
                    self.rb[k as usize] -= 1;
                }
            }
            self.color[e] = UNSET;
        }
    }
}

/// Orbit of edge `e` under the automorphisms found by the canonical search.
/// The group may be a subgroup of the full automorphism group, which only
/// makes the orbit smaller.
pub fn edge_orbit(host: &Graph, e: usize) -> Vec<usize> {
    let index = EdgeIndex::new(host);
    let edges: Vec<(usize, usize)> = host.edges().collect();
    let gens = automorphism_generators(host);
    let mut seen = vec![false; edges.len()];
    let mut stack = vec![e];
    seen[e] = true;
    while let Some(x) = stack.pop() {
        let (u, v) = edges[x];
        for p in &gens {
            let y = index.get(p[u], p[v]).expect("automorphisms map edges to edges");
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..edges.len()).filter(|&i| seen[i]).collect()
}

/// Result of the exhaustive oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BruteVerdict {
    Arrows,
    NotArrows(EdgeColoring),
}

/// Tries all `2^|E|` colourings through [`verify_coloring`].
pub fn brute_force_arrowing(host: &Graph, g: &Graph, h: &Graph) -> Result<BruteVerdict> {
    brute_force(host, g, h, CopyKind::Induced)
}

pub fn brute_force_weak_arrowing(host: &Graph, g: &Graph, h: &Graph) -> Result<BruteVerdict> {
    brute_force(host, g, h, CopyKind::Weak)
}

fn brute_force(host: &Graph, g: &Graph, h: &Graph, kind: CopyKind) -> Result<BruteVerdict> {
    let m = host.edge_count();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooManyEdges(m));
    }
    for mask in 0u32..1 << m {
        let colors = (0..m)
            .map(|i| if mask >> i & 1 == 1 { Color::Blue } else { Color::Red })
            .collect();
        let c = EdgeColoring::from_colors(host, colors)?;
        if verify_with(host, &c, g, h, kind)?.is_good() {
            return Ok(BruteVerdict::NotArrows(c));
        }
    }
    Ok(BruteVerdict::Arrows)
}
