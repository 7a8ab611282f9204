//! Exhaustive generation of k-vertex-critical graphs in hereditary classes,
//! together with the structural tooling around 5-vertex-critical
//! (P6, bull)-free graphs and a certifying 4-colourability check.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitset graphs, named graphs and graph6 I/O
//! * [`canon`]: canonical labelling and the isomorph-rejection store
//! * [`detect`]: induced-subgraph search, perfection test
//! * [`colour`]: exact colouring, chromatic and clique number
//! * [`critical`]: vertex-criticality and its structural necessary conditions
//! * [`structure`]: homogeneous sets, substitution, five-cycle decompositions
//! * [`generate`]: the seeded generator and an independent brute-force oracle
//! * [`certify`]: certificates for 4-colourability of (P6, bull)-free graphs

pub mod canon;
pub mod certify;
pub mod colour;
pub mod critical;
pub mod detect;
pub mod error;
pub mod generate;
pub mod graph;
pub mod structure;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm, SeenStore};
pub use error::{Error, Result};
pub use graph::{decode_graph6, encode_graph6, Graph, NamedGraph, VertexSet};
