//! Combinatorics of unavoidable sets of words and word patterns.
//!
//! A *pattern* is a word over the ordered alphabet `[m] = {1, 2, ..., m}`
//! whose set of letters is exactly `{1, ..., k}` for some `k`: every letter
//! up to its maximum occurs. This crate decides whether prohibition sets of
//! words or patterns are avoidable, evaluates the exact counting formulas
//! that govern minimal unavoidable sets (necklace counts, rotation-class
//! counts, extremal free-word lengths), builds the de Bruijn graph and its
//! pattern-overlap subgraph, and constructs Hamiltonian circuits of the
//! pattern-overlap graph to produce universal cycles for patterns.
//!
//! All counting is done in exact arbitrary-precision arithmetic, and every
//! algorithm breaks ties lexicographically, so results are deterministic.
//!
//! ```
//! use patternal::{ucycle, Limits};
//!
//! let u = ucycle::build_ucycle(3, 3, &Limits::default()).unwrap();
//! assert!(ucycle::validate_ucycle(&u));
//! assert_eq!(u.len(), 13); // one window per length-3 pattern over {1,2,3}
//! ```

pub mod avoidability;
mod error;
pub mod formulas;
pub mod graph;
pub mod ucycle;
pub mod words;

pub use error::{Error, Result};
pub use words::{Letter, Params, Word};

/// Resource caps for graph construction and exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Maximum number of vertices a graph (or enumeration) may have.
    pub max_vertices: usize,
    /// Maximum number of node expansions an exhaustive path search may spend.
    pub max_expansions: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 1_000_000,
            max_expansions: 100_000_000,
        }
    }
}
