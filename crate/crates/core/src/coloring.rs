//! Red/blue edge colourings and their text serialisation.
//!
//! A witness file is a header line `c <graph6-of-host>` followed by one line
//! `e u v red|blue` per host edge, edges in lexicographic `(u, v)` order with
//! `u < v`, each line terminated by `\n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Total assignment of colours to the edges of a host, indexed by the
/// position of the edge in [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn uniform(host: &Graph, c: Color) -> Self {
        EdgeColoring { colors: vec![c; host.edge_count()] }
    }

    pub fn from_colors(host: &Graph, colors: Vec<Color>) -> Result<Self> {
        let expected = host.edge_count();
        if colors.len() != expected {
            return Err(Error::PartialColoring { expected, found: colors.len() });
        }
        Ok(EdgeColoring { colors })
    }

    /// Rejects any assignment that leaves an edge uncoloured.
    pub fn from_partial(host: &Graph, colors: &[Option<Color>]) -> Result<Self> {
        let expected = host.edge_count();
        let found = colors.iter().filter(|c| c.is_some()).count();
        if colors.len() != expected || found != expected {
            return Err(Error::PartialColoring { expected, found });
        }
        Ok(EdgeColoring { colors: colors.iter().map(|c| c.expect("checked")).collect() })
    }

    /// Colours the listed edges with `c` and everything else with `c.other()`.
    pub fn with_set(host: &Graph, c: Color, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let index = EdgeIndex::new(host);
        let mut colors = vec![c.other(); host.edge_count()];
        for (u, v) in edges {
            let i = index.get(u, v).expect("edge of the host");
            colors[i] = c;
        }
        EdgeColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn get(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn swapped(&self) -> Self {
        EdgeColoring { colors: self.colors.iter().map(|c| c.other()).collect() }
    }

    /// Adjacency bitsets of the spanning subgraph with edges of colour `c`.
    pub fn color_adjacency(&self, host: &Graph, c: Color) -> Vec<u64> {
        let mut adj = vec![0u64; host.order()];
        for ((u, v), &col) in host.edges().zip(&self.colors) {
            if col == c {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    pub fn to_witness(&self, host: &Graph) -> String {
        let mut out = format!("c {}\n", graph6::encode(host));
        for ((u, v), c) in host.edges().zip(&self.colors) {
            out.push_str(&format!("e {u} {v} {c}\n"));
        }
        out
    }

    /// Parses a witness file; the colouring must cover every host edge exactly once.
    pub fn parse_witness(text: &str) -> Result<(Graph, EdgeColoring)> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Witness("empty witness".into()))?;
        let g6 = header
            .strip_prefix("c ")
            .ok_or_else(|| Error::Witness(format!("bad header {header:?}")))?;
        let host = graph6::decode(g6)?;
        let index = EdgeIndex::new(&host);
        let mut colors: Vec<Option<Color>> = vec![None; host.edge_count()];
        let mut last: Option<usize> = None;
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split(' ').collect();
            let [tag, u, v, c] = parts.as_slice() else {
                return Err(Error::Witness(format!("bad line {line:?}")));
            };
            if *tag != "e" {
                return Err(Error::Witness(format!("bad line {line:?}")));
            }
            let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::Witness(format!("bad vertex {s:?}")));
            let (u, v) = (parse(u)?, parse(v)?);
            let c = match *c {
                "red" => Color::Red,
                "blue" => Color::Blue,
                other => return Err(Error::Witness(format!("bad colour {other:?}"))),
            };
            let i = (u < v && v < host.order())
                .then(|| index.get(u, v))
                .flatten()
                .ok_or_else(|| Error::Witness(format!("({u},{v}) is not a host edge")))?;
            if last.is_some_and(|l| i <= l) {
                return Err(Error::Witness(format!("edge ({u},{v}) out of lexicographic order")));
            }
            last = Some(i);
            colors[i] = Some(c);
        }
        let coloring = EdgeColoring::from_partial(&host, &colors)?;
        Ok((host, coloring))
    }
}

/// Maps host edges `(u, v)` to their index in [`Graph::edges`].
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    n: usize,
    table: Vec<u32>,
}

impl EdgeIndex {
    const NONE: u32 = u32::MAX;

    pub fn new(host: &Graph) -> Self {
        let n = host.order();
        let mut table = vec![Self::NONE; n * n];
        for (i, (u, v)) in host.edges().enumerate() {
            table[u * n + v] = i as u32;
            table[v * n + u] = i as u32;
        }
        EdgeIndex { n, table }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.table[u * self.n + v] {
            Self::NONE => None,
            i => Some(i as usize),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{cycle, path};

    #[test]
    fn witness_format_is_exact() {
        let p3 = path(3);
        let c = EdgeColoring::from_colors(&p3, vec![Color::Red, Color::Blue]).unwrap();
        assert_eq!(c.to_witness(&p3), "c Bg\ne 0 1 red\ne 1 2 blue\n");
        let (h, d) = EdgeColoring::parse_witness(&c.to_witness(&p3)).unwrap();
        assert_eq!(h, p3);
        assert_eq!(d, c);
    }

    #[test]
    fn partial_rejected() {
        let p3 = path(3);
        assert!(matches!(
            EdgeColoring::from_colors(&p3, vec![Color::Red]),
            Err(Error::PartialColoring { expected: 2, found: 1 })
        ));
        assert!(EdgeColoring::from_partial(&p3, &[Some(Color::Red), None]).is_err());
        assert!(EdgeColoring::parse_witness("c Bg\ne 0 1 red\n").is_err());
        assert!(EdgeColoring::parse_witness("c Bg\ne 1 2 red\ne 0 1 red\n").is_err());
        assert!(EdgeColoring::parse_witness("c Bg\ne 0 2 red\ne 1 2 red\n").is_err());
        assert!(EdgeColoring::parse_witness("c Bg\ne 0 1 green\ne 1 2 red\n").is_err());
    }

    #[test]
    fn color_set_helper() {
        let c7 = cycle(7);
        let c = EdgeColoring::with_set(&c7, Color::Blue, [(0, 1), (3, 4)]);
        assert_eq!(c.colors().iter().filter(|&&x| x == Color::Blue).count(), 2);
        let blue = c.color_adjacency(&c7, Color::Blue);
        assert_eq!(blue[0], 0b10);
        assert_eq!(blue[4], 0b1000);
    }
}
