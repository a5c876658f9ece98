//! Clique graphs, iterated clique graph dynamics, Helly recognition, and
//! executable checks of the low-degree convergence structure theory.

pub mod cliques;
pub mod dynamics;
pub mod error;
pub mod generator;
pub mod graph;
pub mod graph6;
pub mod helly;
pub mod iso;
pub mod lemmas;
pub mod structure;
pub mod vertex_set;

pub use cliques::{clique_graph, iterate, maximal_cliques, CliqueFamily};
pub use dynamics::{classify_behavior, Behavior, Budgets};
pub use error::{Error, Result};
pub use generator::{enumerate_connected_bounded, CorpusSpec};
pub use graph::{Graph, InducedSubgraph, Named};
pub use graph6::{parse_graph6, to_graph6};
pub use helly::{hajos_compatible, is_clique_helly, HajosEmbedding};
pub use iso::{canonical_form, is_isomorphic, CanonicalCert};
pub use lemmas::{LemmaId, LemmaReport, LemmaVerdict};
pub use structure::{K2Structure, Triangle};
pub use vertex_set::VertexSet;
