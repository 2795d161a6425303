//! Ramsey dichotomies for paths versus generalized Jahangir graphs.

pub mod embedding;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod suite;
pub mod witness;

pub use embedding::{Embedding, PathWitness, SearchOutcome};
pub use families::PatternSpec;
pub use graph::{Graph, VertexSet};
pub use witness::{Dichotomy, DichotomyWitness, ExtractOptions, WitnessError};
