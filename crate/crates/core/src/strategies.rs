//! Explicit colourings and closed-form bounds.
//!
//! Every colouring produced here is checked with
//! [`verify_coloring`](crate::arrow::verify_coloring) before it is returned;
//! none of the constructions is trusted structurally.

use serde::Serialize;

use crate::arrow::verify_coloring;
use crate::coloring::{Color, EdgeColoring};
use crate::embed::{find_induced, find_mono_induced};
use crate::error::{Error, Result};
use crate::family::complete;
use crate::graph::{low_bits, Bits, Graph};

/// Orders up to this value get an exhaustive [`matching_partition`] search.
pub const MATCHING_EXHAUSTIVE_MAX: usize = 12;

/// `(α - 1)·ω·(ω - 1)/2 + ω`.
pub fn gorgol_lower_bound(alpha: usize, omega: usize) -> usize {
    assert!(alpha >= 1 && omega >= 1);
    (alpha - 1) * omega * (omega - 1) / 2 + omega
}

fn two_k2() -> Graph {
    complete(2).copies(2)
}

/// Good colouring for `(g, 2K2)` on a host with one vertex more than `g`.
///
/// Takes an induced copy `G'` and the vertex `v` outside it, picks `u` in
/// `G'` adjacent to `v` (any vertex if there is none), and colours blue every
/// edge at `v` plus one edge of `G'` at `u`. Returns `None` when the host
/// has no induced `g`; then the all-red colouring is already good.
pub fn avoid_2k2_coloring(host: &Graph, g: &Graph) -> Result<Option<EdgeColoring>> {
    if host.order() != g.order() + 1 {
        return Err(Error::Precondition(format!(
            "host has {} vertices, expected {}",
            host.order(),
            g.order() + 1
        )));
    }
    if g.order() == 0 || g.isolated_vertices() > 0 {
        return Err(Error::Precondition("pattern must have no isolated vertices".into()));
    }
    let Some(copy) = find_induced(host, g) else {
        return Ok(None);
    };
    let inside = copy.image_mask();
    let v = (!inside & host.vertex_mask()).trailing_zeros() as usize;
    let u = match host.neighbors(v) & inside {
        0 => inside.trailing_zeros() as usize,
        nb => nb.trailing_zeros() as usize,
    };
    let x = (host.neighbors(u) & inside).trailing_zeros() as usize;
    let mut blue: Vec<(usize, usize)> = Bits(host.neighbors(v)).map(|w| (v.min(w), v.max(w))).collect();
    blue.push((u.min(x), u.max(x)));
    let c = EdgeColoring::with_set(host, Color::Blue, blue);
    assert!(verify_coloring(host, &c, g, &two_k2())?.is_good(), "avoid-2K2 colouring is not good");
    Ok(Some(c))
}

/// Splits the host into `k - 1` parts so that no induced `g` is red when
/// edges inside parts are red and edges across parts are blue. The blue graph
/// is then `(k-1)`-partite and contains no graph of chromatic number `k`.
/// Returns `None` when no such partition exists.
pub fn chromatic_partition_coloring(host: &Graph, g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    if k < 2 {
        return Err(Error::Precondition("k must be at least 2".into()));
    }
    let n = host.order();
    let mut part = vec![usize::MAX; n];
    if !place(host, g, k - 1, 0, 0, &mut part) {
        return Ok(None);
    }
    let colors = host
        .edges()
        .map(|(u, v)| if part[u] == part[v] { Color::Red } else { Color::Blue })
        .collect();
    let c = EdgeColoring::from_colors(host, colors)?;
    assert!(find_mono_induced(host, &c, Color::Red, g).is_none());
    Ok(Some(c))
}

fn place(host: &Graph, g: &Graph, parts: usize, v: usize, used: usize, part: &mut [usize]) -> bool {
    if v == host.order() {
        return true;
    }
    for p in 0..parts.min(used + 1) {
        part[v] = p;
        if !red_copy_through(host, g, v, part) && place(host, g, parts, v + 1, used.max(p + 1), part) {
            return true;
        }
    }
    part[v] = usize::MAX;
    false
}

/// Whether the vertices placed so far (`0..=v`) carry a red induced `g`.
fn red_copy_through(host: &Graph, g: &Graph, v: usize, part: &[usize]) -> bool {
    let sub = host.induced(low_bits(v + 1));
    let colors = sub
        .edges()
        .map(|(a, b)| if part[a] == part[b] { Color::Red } else { Color::Blue })
        .collect();
    let c = EdgeColoring::from_colors(&sub, colors).expect("edge count");
    find_mono_induced(&sub, &c, Color::Red, g).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub v1: u64,
    pub v2: u64,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> u64 {
        if self.v1 >> v & 1 == 1 {
            self.v1
        } else {
            self.v2
        }
    }

    /// Largest number of edges with both ends on one side in an induced
    /// matching of `g`.
    pub fn within_part_matching(&self, g: &Graph) -> usize {
        let within: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(u, v)| self.side(u) >> v & 1 == 1)
            .collect();
        max_induced_matching(g, &within)
    }
}

/// Maximum induced matching of `g` using only `edges` (branch on the first
/// edge: take it and block the closed neighbourhoods of its ends, or drop it).
pub fn max_induced_matching(g: &Graph, edges: &[(usize, usize)]) -> usize {
    fn go(g: &Graph, edges: &[(usize, usize)], free: u64, size: usize, best: &mut usize) {
        let mut rest = edges.iter().filter(|&&(u, v)| free >> u & 1 == 1 && free >> v & 1 == 1);
        let Some(&(u, v)) = rest.next() else {
            *best = (*best).max(size);
            return;
        };
        let remaining = 1 + rest.count();
        if size + remaining <= *best {
            return;
        }
        let blocked = g.neighbors(u) | g.neighbors(v) | 1 << u | 1 << v;
        let i = edges.iter().position(|&e| e == (u, v)).expect("present");
        go(g, &edges[i + 1..], free & !blocked, size + 1, best);
        go(g, &edges[i + 1..], free, size, best);
    }
    let mut best = 0;
    go(g, edges, g.vertex_mask(), 0, &mut best);
    best
}

/// A bipartition in which every induced matching has at most `n/3` edges
/// inside the parts. Exhaustive up to [`MATCHING_EXHAUSTIVE_MAX`] vertices;
/// beyond that, repeatedly moves one end of an offending matching edge to the
/// other side, at most `10·n` times.
pub fn matching_partition(g: &Graph) -> Result<Bipartition> {
    let n = g.order();
    let all = g.vertex_mask();
    let ok = |p: &Bipartition| 3 * p.within_part_matching(g) <= n;
    if n <= MATCHING_EXHAUSTIVE_MAX {
        if n == 0 {
            return Ok(Bipartition { v1: 0, v2: 0 });
        }
        // vertex 0 stays in v1
        for half in 0u64..1 << (n - 1) {
            let v1 = 1 | half << 1;
            let p = Bipartition { v1, v2: all & !v1 };
            if ok(&p) {
                return Ok(p);
            }
        }
        return Err(Error::PartitionNotCertified(0));
    }
    let mut p = Bipartition { v1: 0x5555_5555_5555_5555 & all, v2: 0xaaaa_aaaa_aaaa_aaaa & all };
    let cap = 10 * n;
    for step in 0..cap {
        let within: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| p.side(u) >> v & 1 == 1).collect();
        if 3 * max_induced_matching(g, &within) <= n {
            return Ok(p);
        }
        let (u, v) = within[step % within.len()];
        let w = if step % 2 == 0 { v } else { u };
        p.v1 ^= 1 << w;
        p.v2 ^= 1 << w;
    }
    if ok(&p) {
        Ok(p)
    } else {
        Err(Error::PartitionNotCertified(cap))
    }
}

/// Good colouring for `(K3, tK3)` built around an induced `tK3` with
/// triangles `a_i b_i c_i`: red are `a_i b_i`, `b_i c_i`, the edges from `a_i`
/// to `X'`, from `c_i` to `X''` and between `X'` and `X''`, where `(X', X'')`
/// is a [`matching_partition`] of the remaining vertices. Returns `None`
/// when the host has no induced `tK3` (all blue is then good).
///
/// The colouring is good on every host with fewer than `6t` vertices. Larger
/// hosts may fail, which is reported as [`Error::Certificate`].
pub fn triangle_coloring(host: &Graph, t: usize) -> Result<Option<EdgeColoring>> {
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let k3 = complete(3);
    let bundle = k3.copies(t);
    let Some(copy) = find_induced(host, &bundle) else {
        return Ok(None);
    };
    let rest: Vec<usize> = Bits(host.vertex_mask() & !copy.image_mask()).collect();
    let part = matching_partition(&host.induced_by(&rest))?;
    let lift = |mask: u64| Bits(mask).fold(0u64, |m, i| m | 1 << rest[i]);
    let (x1, x2) = (lift(part.v1), lift(part.v2));
    let mut red = Vec::new();
    let mut add = |a: usize, b: usize| red.push((a.min(b), a.max(b)));
    for i in 0..t {
        let (a, b, c) = (copy.map[3 * i], copy.map[3 * i + 1], copy.map[3 * i + 2]);
        add(a, b);
        add(b, c);
        Bits(host.neighbors(a) & x1).for_each(|x| add(a, x));
        Bits(host.neighbors(c) & x2).for_each(|x| add(c, x));
    }
    for x in Bits(x1) {
        Bits(host.neighbors(x) & x2).for_each(|y| add(x, y));
    }
    let c = EdgeColoring::with_set(host, Color::Red, red);
    if !verify_coloring(host, &c, &k3, &bundle)?.is_good() {
        return Err(Error::Certificate(format!(
            "triangle colouring of a {}-vertex host is not good for (K3, {t}K3)",
            host.order()
        )));
    }
    Ok(Some(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{cycle, graph, path};

    #[test]
    fn gorgol_values() {
        assert_eq!(gorgol_lower_bound(1, 1), 1);
        assert_eq!(gorgol_lower_bound(2, 3), 6);
        assert_eq!(gorgol_lower_bound(3, 3), 9);
    }

    #[test]
    fn avoid_2k2_examples() {
        assert!(avoid_2k2_coloring(&cycle(5), &path(4)).unwrap().is_some());
        let k4k1 = graph("K4+K1").unwrap();
        assert!(avoid_2k2_coloring(&k4k1, &complete(4)).unwrap().is_some());
        assert_eq!(avoid_2k2_coloring(&complete(5), &path(4)).unwrap(), None);
        assert!(avoid_2k2_coloring(&cycle(6), &path(4)).is_err());
        assert!(avoid_2k2_coloring(&cycle(3), &graph("K1+K1").unwrap()).is_err());
    }

    #[test]
    fn chromatic_partition_examples() {
        assert_eq!(chromatic_partition_coloring(&cycle(5), &complete(2), 3).unwrap(), None);
        assert_eq!(chromatic_partition_coloring(&complete(5), &complete(3), 3).unwrap(), None);
        let two_p3 = graph("2P3").unwrap();
        assert_eq!(chromatic_partition_coloring(&two_p3, &path(3), 2).unwrap(), None);
        let c = chromatic_partition_coloring(&two_p3, &path(3), 3).unwrap().unwrap();
        assert!(verify_coloring(&two_p3, &c, &path(3), &complete(3)).unwrap().is_good());
    }

    #[test]
    fn matching_examples() {
        let m3 = graph("3K2").unwrap();
        let p = matching_partition(&m3).unwrap();
        assert!(3 * p.within_part_matching(&m3) <= 6);
        let c6 = cycle(6);
        assert_eq!(max_induced_matching(&c6, &c6.edges().collect::<Vec<_>>()), 2);
        let k1 = matching_partition(&Graph::new(1)).unwrap();
        assert_eq!((k1.v1, k1.v2), (1, 0));
    }

    #[test]
    fn triangle_examples() {
        for t in 1..=3 {
            let host = complete(3).copies(t);
            assert!(triangle_coloring(&host, t).unwrap().is_some());
        }
        assert_eq!(triangle_coloring(&cycle(5), 1).unwrap(), None);
    }
}
