//! Constructive extractors for the path / Jahangir dichotomies.
//!
//! Given a host `F` in one of the supported parameter regimes, each extractor
//! returns either the required path structure inside `F` or an embedding of
//! `J_{s,m}` into the complement of `F`, together with an [`ExtractionTrace`]
//! recording every selection it made. Witnesses are always re-verified before
//! they are returned.

mod assemble;
mod extremal;
mod path_system;
mod theorem1;
mod theorem2;
mod theorem3;
mod trace;

use serde::Serialize;

use crate::embedding::{
    check_disjoint_paths, check_embedding, BudgetExhausted, Embedding, PathWitness, DEFAULT_BUDGET,
};
use crate::families::PatternSpec;
use crate::graph::Graph;

pub use extremal::{verify_extremal, verify_extremal_graph, ExtremalCheck, ExtremalReport};
pub use path_system::{build_path_system, build_path_system_within, PathSystem};
pub use theorem1::extract_theorem1;
pub use theorem2::{extract_theorem2, wheel_to_jahangir};
pub use theorem3::extract_t_paths;
pub use trace::{Assembly, CaseId, ExtractionTrace, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractOptions {
    pub budget: u64,
    /// Run outside the proven parameter bounds; results are diagnostics only.
    pub force: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            force: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("path system exhausted the residual after {built} of {requested} paths")]
    ResidualExhausted { built: usize, requested: usize },
    #[error("maximality violation: {step}")]
    MaximalityViolation {
        step: String,
        trace: Box<ExtractionTrace>,
    },
    #[error("no wheel W{rim} in the complement")]
    WheelNotFound {
        rim: usize,
        trace: Box<ExtractionTrace>,
    },
    #[error("expected a wheel embedding with rim {expected}, got pattern {found}")]
    WheelShape { expected: usize, found: String },
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

impl WitnessError {
    pub fn trace(&self) -> Option<&ExtractionTrace> {
        match self {
            WitnessError::MaximalityViolation { trace, .. }
            | WitnessError::WheelNotFound { trace, .. } => Some(trace),
            _ => None,
        }
    }

    fn lifted(self, lift: &[usize]) -> Self {
        match self {
            WitnessError::MaximalityViolation { step, trace } => {
                WitnessError::MaximalityViolation {
                    step,
                    trace: Box::new(trace.lifted(lift)),
                }
            }
            WitnessError::WheelNotFound { rim, trace } => WitnessError::WheelNotFound {
                rim,
                trace: Box::new(trace.lifted(lift)),
            },
            other => other,
        }
    }
}

/// Which side of the dichotomy was certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// Pairwise disjoint paths in `F`, each with the required number of vertices.
    PathsInF(Vec<PathWitness>),
    /// `J_{s,m}` inside the complement of `F`.
    JahangirInComplement(Embedding),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyWitness {
    pub outcome: Dichotomy,
    pub trace: ExtractionTrace,
}

impl DichotomyWitness {
    /// Independent re-check against the original host.
    pub fn verify(&self, f: &Graph) -> Result<(), String> {
        match &self.outcome {
            Dichotomy::PathsInF(paths) => {
                let want = self.trace.params.t;
                if paths.len() != want {
                    return Err(format!("{} paths, expected {want}", paths.len()));
                }
                check_disjoint_paths(f, paths, self.trace.params.n)
            }
            Dichotomy::JahangirInComplement(emb) => {
                let expected = PatternSpec::jahangir(self.trace.params.s, self.trace.params.m);
                if emb.pattern != expected {
                    return Err(format!("pattern {} is not {expected}", emb.pattern));
                }
                check_embedding(&f.complement(), emb).map_err(|e| e.to_string())
            }
        }
    }

    pub fn is_jahangir(&self) -> bool {
        matches!(self.outcome, Dichotomy::JahangirInComplement(_))
    }

    /// Single JSON document describing the extraction, keys in a fixed order.
    pub fn to_json(&self, f: &Graph) -> String {
        let witness = match &self.outcome {
            Dichotomy::PathsInF(paths) => WitnessDoc::PathsInF {
                pattern: path_pattern(paths.len(), self.trace.params.n),
                paths,
            },
            Dichotomy::JahangirInComplement(emb) => WitnessDoc::JahangirInComplement {
                pattern: &emb.pattern,
                map: &emb.map,
            },
        };
        let doc = TraceDocument {
            trace: &self.trace,
            witness: Some(witness),
            verified: self.verify(f).is_ok(),
            error: None,
        };
        serde_json::to_string(&doc).expect("trace serializes")
    }
}

/// JSON document for a failed extraction.
pub fn error_json(err: &WitnessError) -> String {
    let empty = ExtractionTrace::EMPTY;
    let doc = TraceDocument {
        trace: err.trace().unwrap_or(&empty),
        witness: None,
        verified: false,
        error: Some(err.to_string()),
    };
    serde_json::to_string(&doc).expect("trace serializes")
}

fn path_pattern(t: usize, n: usize) -> PatternSpec {
    if t == 1 {
        PatternSpec::Path(n)
    } else {
        PatternSpec::DisjointPaths { t, n }
    }
}

#[derive(Serialize)]
struct TraceDocument<'a> {
    #[serde(flatten)]
    trace: &'a ExtractionTrace,
    witness: Option<WitnessDoc<'a>>,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WitnessDoc<'a> {
    PathsInF {
        pattern: PatternSpec,
        paths: &'a [PathWitness],
    },
    JahangirInComplement {
        pattern: &'a PatternSpec,
        map: &'a [usize],
    },
}

/// Wraps a rim/hub map as a `J_{s,m}` embedding and verifies it against the
/// complement of `f`.
pub(crate) fn finish_jahangir(
    f: &Graph,
    map: Vec<usize>,
    s: usize,
    m: usize,
    trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let emb = Embedding {
        pattern: PatternSpec::jahangir(s, m),
        host_order: f.order(),
        map,
    };
    match check_embedding(&f.complement(), &emb) {
        Ok(()) => Ok(DichotomyWitness {
            outcome: Dichotomy::JahangirInComplement(emb),
            trace,
        }),
        Err(defect) => Err(WitnessError::MaximalityViolation {
            step: format!("final verification failed: {defect}"),
            trace: Box::new(trace),
        }),
    }
}

/// `J_{s,m}` on the first `sm + 1` vertices of an edgeless host.
pub(crate) fn edgeless_witness(
    f: &Graph,
    s: usize,
    m: usize,
    mut trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let need = s * m + 1;
    if f.order() < need {
        return Err(WitnessError::Precondition(format!(
            "edgeless host of order {} cannot hold J{s},{m}",
            f.order()
        )));
    }
    trace.selections.insert("hub".into(), s * m);
    finish_jahangir(f, (0..need).collect(), s, m, trace)
}

pub(crate) fn precondition(
    ok: bool,
    forced: bool,
    message: impl FnOnce() -> String,
) -> Result<(), WitnessError> {
    if ok || forced {
        Ok(())
    } else {
        Err(WitnessError::Precondition(message()))
    }
}
