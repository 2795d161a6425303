//! Containment engines and the verifier every other module relies on.
//!
//! All searches are budgeted in node expansions. Running out of budget is a
//! distinct outcome ([`SearchOutcome::Unknown`]), never a silent "absent".

mod paths;
mod subgraph;

use serde::{Deserialize, Serialize};

use crate::families::{FamilyError, PatternSpec};
use crate::graph::Graph;

pub use paths::{find_disjoint_paths, find_path_at_least, longest_path, DP_COMPONENT_CAP};
pub use subgraph::{find_pattern, find_subgraph};

/// Default node-expansion budget used by the higher-level modules.
pub const DEFAULT_BUDGET: u64 = 1 << 36;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// Exhaustive search proved there is nothing to find.
    Absent,
    /// The budget ran out before the search finished.
    Unknown,
}

impl<T> SearchOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Absent => SearchOutcome::Absent,
            SearchOutcome::Unknown => SearchOutcome::Unknown,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("search budget of {limit} node expansions exhausted")]
pub struct BudgetExhausted {
    pub limit: u64,
}

/// Node-expansion counter shared by one search (and its nested searches).
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    limit: u64,
    used: std::cell::Cell<u64>,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Self {
            limit,
            used: std::cell::Cell::new(0),
        }
    }

    /// Charges `nodes` expansions; false once the limit is exceeded.
    #[inline]
    pub(crate) fn spend(&self, nodes: u64) -> bool {
        let used = self.used.get().saturating_add(nodes);
        self.used.set(used);
        used <= self.limit
    }

    pub(crate) fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used.get())
    }

    pub(crate) fn exhausted(&self) -> BudgetExhausted {
        BudgetExhausted { limit: self.limit }
    }
}

/// Injective vertex map from a pattern graph into a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern: PatternSpec,
    pub host_order: usize,
    /// `map[i]` is the host vertex playing pattern vertex `i`.
    pub map: Vec<usize>,
}

impl Embedding {
    /// Re-expresses the images through `lift` (e.g. residual index -> original index).
    pub fn lifted(&self, lift: &[usize], host_order: usize) -> Embedding {
        Embedding {
            pattern: self.pattern.clone(),
            host_order,
            map: self.map.iter().map(|&v| lift[v]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingDefect {
    #[error("invalid pattern: {0}")]
    Pattern(#[from] FamilyError),
    #[error("embedding declares host order {declared}, host has {actual}")]
    HostOrder { declared: usize, actual: usize },
    #[error("map has {found} entries, pattern has {expected} vertices")]
    Length { expected: usize, found: usize },
    #[error("pattern vertex {pattern_vertex} mapped to {image}, outside the host")]
    OutOfRange { pattern_vertex: usize, image: usize },
    #[error("host vertex {image} is used twice")]
    NotInjective { image: usize },
    #[error("pattern edge {u}-{v} maps to non-edge {image_u}-{image_v}")]
    MissingEdge {
        u: usize,
        v: usize,
        image_u: usize,
        image_v: usize,
    },
}

/// Checks every embedding invariant against `host`, reporting the first defect.
pub fn check_embedding(host: &Graph, emb: &Embedding) -> Result<(), EmbeddingDefect> {
    let pattern = emb.pattern.build()?;
    if emb.host_order != host.order() {
        return Err(EmbeddingDefect::HostOrder {
            declared: emb.host_order,
            actual: host.order(),
        });
    }
    check_map(host, &pattern, &emb.map)
}

pub(crate) fn check_map(
    host: &Graph,
    pattern: &Graph,
    map: &[usize],
) -> Result<(), EmbeddingDefect> {
    if map.len() != pattern.order() {
        return Err(EmbeddingDefect::Length {
            expected: pattern.order(),
            found: map.len(),
        });
    }
    let mut used = vec![false; host.order()];
    for (pattern_vertex, &image) in map.iter().enumerate() {
        if image >= host.order() {
            return Err(EmbeddingDefect::OutOfRange {
                pattern_vertex,
                image,
            });
        }
        if std::mem::replace(&mut used[image], true) {
            return Err(EmbeddingDefect::NotInjective { image });
        }
    }
    for (u, v) in pattern.edges() {
        if !host.has_edge(map[u], map[v]) {
            return Err(EmbeddingDefect::MissingEdge {
                u,
                v,
                image_u: map[u],
                image_v: map[v],
            });
        }
    }
    Ok(())
}

pub fn verify_embedding(host: &Graph, emb: &Embedding) -> bool {
    check_embedding(host, emb).is_ok()
}

/// Ordered vertex list of a path in some host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// 1-based position access mirroring `l_1, ..., l_k`.
    pub fn at(&self, position: usize) -> usize {
        self.0[position - 1]
    }

    pub fn truncated(&self, len: usize) -> PathWitness {
        PathWitness(self.0[..len.min(self.0.len())].to_vec())
    }

    pub fn lifted(&self, lift: &[usize]) -> PathWitness {
        PathWitness(self.0.iter().map(|&v| lift[v]).collect())
    }

    /// The path as an embedding of `P_len`.
    pub fn as_embedding(&self, host_order: usize) -> Embedding {
        Embedding {
            pattern: PatternSpec::Path(self.len()),
            host_order,
            map: self.0.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathDefect {
    #[error("vertex {0} outside the host")]
    OutOfRange(usize),
    #[error("vertex {0} repeated")]
    Repeated(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

pub fn check_path(host: &Graph, path: &PathWitness) -> Result<(), PathDefect> {
    let mut used = vec![false; host.order()];
    for &v in path.vertices() {
        if v >= host.order() {
            return Err(PathDefect::OutOfRange(v));
        }
        if std::mem::replace(&mut used[v], true) {
            return Err(PathDefect::Repeated(v));
        }
    }
    for w in path.vertices().windows(2) {
        if !host.has_edge(w[0], w[1]) {
            return Err(PathDefect::NotAdjacent(w[0], w[1]));
        }
    }
    Ok(())
}

/// Checks `paths` are valid, pairwise vertex-disjoint, each with at least `min_len` vertices.
pub fn check_disjoint_paths(
    host: &Graph,
    paths: &[PathWitness],
    min_len: usize,
) -> Result<(), String> {
    let mut used = vec![false; host.order()];
    for (i, path) in paths.iter().enumerate() {
        check_path(host, path).map_err(|e| format!("path {i}: {e}"))?;
        if path.len() < min_len {
            return Err(format!("path {i} has {} < {min_len} vertices", path.len()));
        }
        for &v in path.vertices() {
            if std::mem::replace(&mut used[v], true) {
                return Err(format!("vertex {v} shared between paths"));
            }
        }
    }
    Ok(())
}
