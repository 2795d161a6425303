use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::embedding::PathWitness;

/// Which branch of which construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseId {
    Pending,
    Thm1PathInF,
    Thm1Edgeless,
    Thm1Case1,
    Thm1Case2,
    Thm2PathInF,
    Thm2EvenM,
    Thm2OddMEdgeless,
    Thm2OddMCase1,
    Thm2OddMCase2,
    Thm2OddMCase3,
    /// Jahangir found while extracting the i-th path (1-based).
    Thm3Step(usize),
    Thm3Paths,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::Pending => f.write_str("pending"),
            CaseId::Thm1PathInF => f.write_str("Thm1-PathInF"),
            CaseId::Thm1Edgeless => f.write_str("Thm1-Edgeless"),
            CaseId::Thm1Case1 => f.write_str("Thm1-Case1"),
            CaseId::Thm1Case2 => f.write_str("Thm1-Case2"),
            CaseId::Thm2PathInF => f.write_str("Thm2-PathInF"),
            CaseId::Thm2EvenM => f.write_str("Thm2-EvenM"),
            CaseId::Thm2OddMEdgeless => f.write_str("Thm2-OddM-Edgeless"),
            CaseId::Thm2OddMCase1 => f.write_str("Thm2-OddM-Case1"),
            CaseId::Thm2OddMCase2 => f.write_str("Thm2-OddM-Case2"),
            CaseId::Thm2OddMCase3 => f.write_str("Thm2-OddM-Case3"),
            CaseId::Thm3Step(i) => write!(f, "Thm3-step{i}"),
            CaseId::Thm3Paths => f.write_str("Thm3-Paths"),
        }
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// How the final rim arrangement was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Assembly {
    /// The fixed arrangement passed verification.
    Direct,
    /// The fixed arrangement failed; a bounded search over the selected vertices succeeded.
    Searched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub s: usize,
    pub m: usize,
    pub t: usize,
}

/// Replayable record of an extraction. Vertex indices refer to the host the
/// extractor was called on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionTrace {
    pub theorem: u8,
    pub case: CaseId,
    pub params: Params,
    pub forced: bool,
    /// Number of vertices of the longest path `L_1`, when computed.
    pub k: Option<usize>,
    /// `L_1, L_2, ...` in order.
    pub paths: Vec<PathWitness>,
    pub augmented_edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub remainder: Vec<usize>,
    /// `C_1, C_2, ...` (four consecutive vertices of `L_1` each).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub quadruples: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub couples_a: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub couples_b: Vec<Vec<usize>>,
    /// Chosen vertices by role (`hub`, `x`, `y_1`, `c_2`, ...).
    pub selections: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assembly: Option<Assembly>,
    /// Per-step traces of the iterated extraction.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<ExtractionTrace>,
}

impl ExtractionTrace {
    pub(crate) const EMPTY: ExtractionTrace = ExtractionTrace {
        theorem: 0,
        case: CaseId::Pending,
        params: Params {
            n: 0,
            s: 0,
            m: 0,
            t: 0,
        },
        forced: false,
        k: None,
        paths: Vec::new(),
        augmented_edges: Vec::new(),
        remainder: Vec::new(),
        quadruples: Vec::new(),
        couples_a: Vec::new(),
        couples_b: Vec::new(),
        selections: BTreeMap::new(),
        assembly: None,
        steps: Vec::new(),
    };

    pub fn new(theorem: u8, params: Params, forced: bool) -> Self {
        Self {
            theorem,
            params,
            forced,
            ..Self::EMPTY
        }
    }

    pub(crate) fn select(&mut self, role: impl Into<String>, vertex: usize) {
        self.selections.insert(role.into(), vertex);
    }

    /// Every vertex index mentioned anywhere in the trace.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .paths
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .chain(self.augmented_edges.iter().flat_map(|&(u, v)| [u, v]))
            .chain(self.remainder.iter().copied())
            .chain(self.quadruples.iter().flatten().copied())
            .chain(self.couples_a.iter().flatten().copied())
            .chain(self.couples_b.iter().flatten().copied())
            .chain(self.selections.values().copied())
            .collect();
        out.extend(self.steps.iter().flat_map(|s| s.vertices()));
        out
    }

    /// Rewrites every vertex `v` as `lift[v]`.
    pub fn lifted(&self, lift: &[usize]) -> ExtractionTrace {
        let all = |vs: &[Vec<usize>]| -> Vec<Vec<usize>> {
            vs.iter()
                .map(|g| g.iter().map(|&v| lift[v]).collect())
                .collect()
        };
        ExtractionTrace {
            theorem: self.theorem,
            case: self.case,
            params: self.params,
            forced: self.forced,
            k: self.k,
            paths: self.paths.iter().map(|p| p.lifted(lift)).collect(),
            augmented_edges: self
                .augmented_edges
                .iter()
                .map(|&(u, v)| (lift[u], lift[v]))
                .collect(),
            remainder: self.remainder.iter().map(|&v| lift[v]).collect(),
            quadruples: all(&self.quadruples),
            couples_a: all(&self.couples_a),
            couples_b: all(&self.couples_b),
            selections: self
                .selections
                .iter()
                .map(|(role, &v)| (role.clone(), lift[v]))
                .collect(),
            assembly: self.assembly,
            steps: self.steps.iter().map(|s| s.lifted(lift)).collect(),
        }
    }
}
