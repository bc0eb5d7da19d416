//! Thompson's group V as tree-pair diagrams with leaf permutations.
//!
//! The crate computes the caret count `N(x)` and cluster count `B(x)` of an
//! element, the two word-metric upper bounds `N log N` and `N + B log B`, the
//! cluster-collapsing factorisation through F, explicit words over the
//! generators {x0, x1, c, pi}, and exact word lengths by Cayley-graph search.
//!
//! ```
//! use thompson_core::Element;
//!
//! let y1: Element = "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]".parse().unwrap();
//! assert_eq!(y1.caret_count(), 3);
//! assert_eq!(y1.cluster_count(), 4);
//! assert!(y1.multiply(&y1).is_identity());
//! ```
//!
//! The `parallel` feature (on by default) lets the search oracle and the
//! surveys spread work over a rayon pool; results are identical without it.

pub mod bounds;
pub mod collapse;
pub mod element;
pub mod error;
pub mod experiments;
pub mod interval;
pub mod oracle;
pub mod par;
pub mod perm;
pub mod synthesis;
pub mod text;
pub mod tree;
pub mod word;

pub use bounds::{birget_upper, new_upper};
pub use collapse::{collapse_clusters, CollapseResult};
pub use element::Element;
pub use error::{Error, ResourceError, Result};
pub use interval::{DyadicInterval, Piece, PiecewiseMap};
pub use oracle::{exact_word_length, CayleyBall, LengthResult, MemoryBudget};
pub use par::Exec;
pub use perm::{ClusterPartition, Permutation};
pub use synthesis::{f_normal_form_word, synthesize_word};
pub use tree::Tree;
pub use word::{standard_generators, Generator, Letter, Word};
