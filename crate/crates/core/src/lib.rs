//! Exact search for induced Ramsey arrowing on small graphs.
//!
//! A host `F` arrows `(G, H)` when every red/blue colouring of its edges has
//! a red induced copy of `G` or a blue induced copy of `H`. The induced
//! Ramsey number `IR(G, H)` is the least order of such a host. This crate
//! decides arrowing by a propagating backtracking search, enumerates hosts up
//! to isomorphism, and computes `IR(G, H)` with certificates that can be
//! checked independently.
//!
//! ```
//! use indram::arrow::{decide_arrowing, Outcome, DEFAULT_BUDGET};
//! use indram::family::graph;
//!
//! let host = graph("C7").unwrap();
//! let v = decide_arrowing(&host, &graph("P4").unwrap(), &graph("2K2").unwrap(), DEFAULT_BUDGET);
//! assert_eq!(v.outcome, Outcome::Arrows);
//! ```

pub mod arrow;
pub mod bundle;
pub mod canon;
pub mod claims;
pub mod coloring;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod params;
pub mod ramsey;
pub mod strategies;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/canonical.md")]
    mod canonical {}
    #[doc = include_str!("../../../book/src/embeddings.md")]
    mod embeddings {}
    #[doc = include_str!("../../../book/src/arrowing.md")]
    mod arrowing {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/strategies.md")]
    mod strategies {}
    #[doc = include_str!("../../../book/src/ramsey.md")]
    mod ramsey {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/claims.md")]
    mod claims {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
