//! Standard graph families and the textual family expressions used on the
//! command line (`P5`, `C7`, `K3,3,2`, `2K2`, `K3+2K2`, or a `g6:` literal).
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := [multiplier] family
//! family := ('P' | 'C' | 'K' | 'S') int (',' int)*
//! ```
//!
//! `K` with several parameters is a complete multipartite graph; the other
//! letters take exactly one. A bare graph6 string is also accepted (graph6
//! never contains digits, `+` or `,`, so the two syntaxes cannot collide).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star with `n` edges (and `n + 1` vertices).
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    Empty(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        let order = match self {
            Family::Path(n) | Family::Complete(n) | Family::Empty(n) | Family::Cycle(n) => *n,
            Family::Star(n) => n + 1,
            Family::CompleteMultipartite(parts) => parts.iter().sum(),
        };
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        match *self {
            Family::Path(0) | Family::Complete(0) | Family::Empty(0) | Family::Star(0) => {
                return bad(format!("{self:?}: parameter must be at least 1"))
            }
            Family::Cycle(n) if n < 3 => return bad(format!("cycle length {n} is below 3")),
            Family::CompleteMultipartite(ref p) if p.is_empty() || p.contains(&0) => {
                return bad("multipartite part sizes must be positive".into())
            }
            _ => {}
        }
        let mut g = Graph::new(order);
        match self {
            Family::Path(n) => (1..*n).for_each(|v| g.add_edge(v - 1, v)),
            Family::Cycle(n) => (0..*n).for_each(|v| g.add_edge(v, (v + 1) % n)),
            Family::Complete(n) => {
                for u in 0..*n {
                    for v in u + 1..*n {
                        g.add_edge(u, v);
                    }
                }
            }
            Family::Star(n) => (1..=*n).for_each(|v| g.add_edge(0, v)),
            Family::CompleteMultipartite(parts) => {
                let mut start = 0;
                let mut part_of = Vec::with_capacity(order);
                for (i, &p) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, p));
                    start += p;
                }
                debug_assert_eq!(start, order);
                for u in 0..order {
                    for v in u + 1..order {
                        if part_of[u] != part_of[v] {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
            Family::Empty(_) => {}
        }
        Ok(g)
    }
}

pub fn path(n: usize) -> Graph {
    Family::Path(n).build().expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    Family::Cycle(n).build().expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Family::Complete(n).build().expect("valid clique")
}

pub fn star(n: usize) -> Graph {
    Family::Star(n).build().expect("valid star")
}

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// One `[multiplier] family` term of an expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub copies: usize,
    pub letter: char,
    pub params: Vec<usize>,
}

impl Term {
    fn family(&self) -> Result<Family> {
        let single = || -> Result<usize> {
            match self.params.as_slice() {
                [n] => Ok(*n),
                _ => Err(Error::InvalidFamily(format!(
                    "{} takes exactly one parameter",
                    self.letter
                ))),
            }
        };
        Ok(match self.letter {
            'P' => Family::Path(single()?),
            'C' => Family::Cycle(single()?),
            'S' => Family::Star(single()?),
            'K' if self.params.len() == 1 => Family::Complete(self.params[0]),
            'K' => Family::CompleteMultipartite(self.params.clone()),
            c => return Err(Error::InvalidFamily(format!("unknown family letter {c:?}"))),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        if self.copies == 0 {
            return Err(Error::InvalidFamily("multiplier must be at least 1".into()));
        }
        let base = self.family()?.build()?;
        if base.order() * self.copies > MAX_ORDER {
            return Err(Error::OrderTooLarge(base.order() * self.copies));
        }
        Ok(base.copies(self.copies))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copies != 1 {
            write!(f, "{}", self.copies)?;
        }
        write!(f, "{}", self.letter)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A parsed graph expression: a union of family terms, or a graph6 literal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    Union(Vec<Term>),
    Graph6(String),
}

impl GraphExpr {
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        if let Some(lit) = s.strip_prefix("g6:") {
            graph6::decode(lit)?;
            return Ok(GraphExpr::Graph6(lit.to_string()));
        }
        match parse_union(s) {
            Ok(terms) => Ok(GraphExpr::Union(terms)),
            Err(reason) => {
                if !s.is_empty() && graph6::decode(s).is_ok() {
                    Ok(GraphExpr::Graph6(s.to_string()))
                } else {
                    Err(Error::Parse { input: input.to_string(), reason })
                }
            }
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphExpr::Graph6(s) => graph6::decode(s),
            GraphExpr::Union(terms) => {
                let total: usize = terms
                    .iter()
                    .map(|t| t.copies.saturating_mul(t.family().map_or(0, |f| family_order(&f))))
                    .sum();
                if total > MAX_ORDER {
                    return Err(Error::OrderTooLarge(total));
                }
                let mut g = Graph::new(0);
                for t in terms {
                    g = g.disjoint_union(&t.build()?);
                }
                Ok(g)
            }
        }
    }

    /// Expression for a graph given only by its adjacency.
    pub fn literal(g: &Graph) -> Self {
        GraphExpr::Graph6(graph6::encode(g))
    }
}

fn family_order(f: &Family) -> usize {
    match f {
        Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Empty(n) => *n,
        Family::Star(n) => n + 1,
        Family::CompleteMultipartite(p) => p.iter().sum(),
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Graph6(s) => write!(f, "g6:{s}"),
            GraphExpr::Union(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GraphExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphExpr::parse(s)
    }
}

/// Parses and builds in one step.
pub fn graph(expr: &str) -> Result<Graph> {
    GraphExpr::parse(expr)?.build()
}

fn parse_union(s: &str) -> std::result::Result<Vec<Term>, String> {
    if s.is_empty() {
        return Err("empty expression".into());
    }
    s.split('+').map(|t| parse_term(t.trim())).collect()
}

fn parse_term(t: &str) -> std::result::Result<Term, String> {
    let digits = t.chars().take_while(|c| c.is_ascii_digit()).count();
    let copies = if digits == 0 {
        1
    } else {
        t[..digits].parse::<usize>().map_err(|e| e.to_string())?
    };
    let rest = &t[digits..];
    let mut chars = rest.chars();
    let letter = chars.next().ok_or_else(|| format!("term {t:?} has no family letter"))?;
    if !matches!(letter, 'P' | 'C' | 'K' | 'S') {
        return Err(format!("unknown family letter {letter:?} in {t:?}"));
    }
    let params = chars.as_str();
    if params.is_empty() {
        return Err(format!("family {letter} in {t:?} needs a size"));
    }
    let params = params
        .split(',')
        .map(|p| {
            if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                Err(format!("bad parameter {p:?} in {t:?}"))
            } else {
                p.parse::<usize>().map_err(|e| e.to_string())
            }
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if letter != 'K' && params.len() != 1 {
        return Err(format!("family {letter} takes one parameter"));
    }
    Ok(Term { copies, letter, params })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;

    #[test]
    fn family_sizes() {
        assert_eq!(path(1).order(), 1);
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(7).edge_count(), 7);
        assert_eq!(complete(3).edge_count(), 3);
        let s = star(3);
        assert_eq!((s.order(), s.edge_count()), (4, 3));
        assert_eq!(empty(4).edge_count(), 0);
    }

    #[test]
    fn family_errors() {
        assert!(Family::Path(0).build().is_err());
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::Complete(0).build().is_err());
        assert!(Family::CompleteMultipartite(vec![2, 0]).build().is_err());
        assert!(Family::Path(63).build().is_err());
    }

    #[test]
    fn k21_is_p3() {
        let k21 = Family::CompleteMultipartite(vec![2, 1]).build().unwrap();
        assert_eq!(canonical_key(&k21), canonical_key(&path(3)));
    }

    #[test]
    fn parses_examples() {
        assert_eq!(graph("P5").unwrap().edge_count(), 4);
        assert_eq!(graph("C7").unwrap().order(), 7);
        assert_eq!(graph("K4").unwrap().edge_count(), 6);
        assert_eq!(graph("S3").unwrap().order(), 4);
        let k332 = graph("K3,3,2").unwrap();
        assert_eq!((k332.order(), k332.edge_count()), (8, 9 + 6 + 6));
        let m = graph("2K2").unwrap();
        assert_eq!((m.order(), m.edge_count()), (4, 2));
        let p = graph("3P3").unwrap();
        assert_eq!((p.order(), p.edge_count(), p.components().len()), (9, 6, 3));
        let u = graph("K3+2K2").unwrap();
        assert_eq!((u.order(), u.edge_count()), (7, 5));
        assert_eq!(graph("g6:Bw").unwrap().edge_count(), 3);
        assert_eq!(graph("Bg").unwrap().edge_count(), 2);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "Q3", "P", "2", "P3,4", "K3,,2", "C2", "0K2", "P3+", "33P3"] {
            assert!(graph(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn print_round_trip() {
        for s in ["P5", "2K2", "K3,3,2", "K3+2K2", "3P3+S4", "g6:Bw"] {
            let e = GraphExpr::parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(GraphExpr::parse(&e.to_string()).unwrap(), e);
        }
    }
}
