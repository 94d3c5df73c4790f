//! Bipolar fuzzy hypergraphs.
//!
//! Every vertex of a bipolar fuzzy edge carries a pair `(p, n)`: `p` in `[0, 1]` says how
//! far the vertex has a property, `n` in `[-1, 0]` how far it has the counter-property.
//! This crate builds such hypergraphs from incidence matrices and analyses them:
//!
//! * structural predicates (elementary, simple, support simple, ordered, ...),
//! * level cuts, the fundamental sequence of levels and its core hypergraphs,
//! * duals and edge strength,
//! * tempered hypergraphs and their recognition,
//! * bipolar fuzzy partitions with strength-ranked clustering,
//! * a plain-text matrix format and deterministic reports.
//!
//! ```
//! use bipolar_hypergraph::{format, BipolarValue, Structure};
//!
//! let doc = format::parse(
//!     "   E1          E2
//!      x  (0.4,-0.2)  -
//!      y  (0.5,-0.3)  (0.6,-0.2)
//!      z  -           (0.2,-0.05)",
//! )
//! .unwrap();
//! let Structure::Bipolar(h) = doc.structure() else { unreachable!() };
//! let cut = h.partition_cut(BipolarValue::new(0.3, -0.1).unwrap());
//! assert_eq!(cut.edge_count(), 3); // E1={x,y}, E2={y}, remainder E3={z}
//! ```

pub mod crisp;
pub mod error;
pub mod format;
pub mod fuzzy_set;
pub mod hypergraph;
pub mod levels;
pub mod partition;
pub mod reference;
pub mod report;
pub mod strength;
pub mod tempered;
pub mod value;

pub use crisp::{absorbs, strictly_absorbs, CrispHypergraph, HypergraphSequence};
pub use error::{Error, Result};
pub use format::{Document, Structure};
pub use fuzzy_set::{BipolarFuzzySet, VertexSet};
pub use hypergraph::{BFHypergraph, BipolarMatrix};
pub use levels::{FundamentalSequence, LevelPair};
pub use partition::{classify, BipolarPartition, ClassReport, PartitionKind};
pub use strength::Strength;
pub use tempered::{
    gen_elementary_simple_full, gen_unbounded_simple, is_tempered, temper, tempered_membership,
    theorem_witness, TemperingWitness,
};
pub use value::{BipolarValue, Label, VertexId};
