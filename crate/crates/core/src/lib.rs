//! Yao and Theta graphs, greedy forwarding, and void-freeness checking.
//!
//! ```
//! use conegraph::{construction, corpus, voidcheck};
//!
//! let v1 = corpus::corpus_entry(corpus::CorpusName::V1);
//! let y4 = construction::yao(&v1.nodes, 4).unwrap();
//! let verdict = voidcheck::check_void_free(&y4).unwrap();
//! assert!(verdict.contains_pair(v1.index("u"), v1.index("v")));
//! ```

pub mod construction;
pub mod corpus;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod render;
pub mod routing;
pub mod voidcheck;

pub use error::{Error, Result};
pub use geometry::{ConeIndex, Point};
pub use graph::{graphs_equal, Directedness, Family, GeometricGraph, NodeSet};
pub use routing::RouteResult;
pub use voidcheck::{VoidVerdict, VoidWitness};
