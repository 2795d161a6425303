//! Exhaustive ground truth at small orders: isomorph-free enumeration,
//! arrowing checks and exact Ramsey values with re-checkable certificates.

mod canonical;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::embedding::{find_subgraph, SearchOutcome};
use crate::families::{FamilyError, PatternSpec};
use crate::graph::Graph;

pub use canonical::{canonical_form, canonical_labeling, CanonicalForm, CANONICAL_CAP};

/// Largest order enumerated without an explicit override.
pub const ENUMERATION_CAP: usize = 9;
/// Node budget for each pattern search inside [`arrows`].
pub const ARROWS_BUDGET: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("pattern search exhausted its budget on {graph6}")]
    Budget { graph6: String },
    #[error(transparent)]
    Pattern(#[from] FamilyError),
    #[error("certificate rejected: {0}")]
    Certificate(String),
}

/// One representative per isomorphism class of order `n`, sorted by
/// canonical form. Refuses `n > ENUMERATION_CAP`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    enumerate_graphs_with_cap(n, ENUMERATION_CAP)
}

/// As [`enumerate_graphs`] with an explicit cap (at most the canonical-form cap).
pub fn enumerate_graphs_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>, OracleError> {
    Ok(enumerate_forms(n, cap)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// Canonical forms of every class of order `n`, sorted.
pub fn enumerate_forms(n: usize, cap: usize) -> Result<Vec<CanonicalForm>, OracleError> {
    let cap = cap.min(CANONICAL_CAP);
    if n > cap {
        return Err(OracleError::CapExceeded { order: n, cap });
    }
    let mut level = vec![canonical_form(&Graph::empty(0))?];
    for k in 0..n {
        // every class of order k + 1 arises from one of order k plus a vertex
        let next: BTreeSet<CanonicalForm> = level
            .par_iter()
            .fold(BTreeSet::new, |mut acc, parent| {
                let base = parent.to_graph().disjoint_union(&Graph::empty(1));
                for mask in 0u32..1 << k {
                    let edges = (0..k).filter(|&u| mask & (1 << u) != 0).map(|u| (u, k));
                    let g = edges.fold(base.clone(), |g, (u, v)| g.add_edge(u, v).expect("valid"));
                    acc.insert(canonical_form(&g).expect("within cap"));
                }
                acc
            })
            .reduce(BTreeSet::new, |mut a, mut b| {
                a.append(&mut b);
                a
            });
        level = next.into_iter().collect();
    }
    Ok(level)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arrowing {
    /// Every graph of the order contains `g` or has `h` in its complement.
    Arrows,
    /// First failing class in enumeration order.
    Counterexample(Graph),
}

impl Arrowing {
    pub fn holds(&self) -> bool {
        matches!(self, Arrowing::Arrows)
    }
}

/// Whether every graph of the given order contains `g` or has `h` in its complement.
pub fn arrows(order: usize, g: &PatternSpec, h: &PatternSpec) -> Result<Arrowing, OracleError> {
    let classes = enumerate_graphs(order)?;
    arrows_over(&classes, g, h)
}

fn contains(host: &Graph, pattern: &PatternSpec) -> Result<bool, OracleError> {
    match find_subgraph(host, pattern, ARROWS_BUDGET) {
        SearchOutcome::Found(_) => Ok(true),
        SearchOutcome::Absent => Ok(false),
        SearchOutcome::Unknown => Err(OracleError::Budget {
            graph6: host.to_graph6(),
        }),
    }
}

/// Whether `f` satisfies the dichotomy for `(g, h)`.
pub fn satisfies(f: &Graph, g: &PatternSpec, h: &PatternSpec) -> Result<bool, OracleError> {
    Ok(contains(f, g)? || contains(&f.complement(), h)?)
}

fn arrows_over(
    classes: &[Graph],
    g: &PatternSpec,
    h: &PatternSpec,
) -> Result<Arrowing, OracleError> {
    g.validate()?;
    h.validate()?;
    let verdicts: Vec<Result<bool, OracleError>> =
        classes.par_iter().map(|f| satisfies(f, g, h)).collect();
    for (f, verdict) in classes.iter().zip(verdicts) {
        if !verdict? {
            return Ok(Arrowing::Counterexample(f.clone()));
        }
    }
    Ok(Arrowing::Arrows)
}

/// Exhaustive evidence that order `order` arrows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperRecord {
    pub order: usize,
    pub classes: usize,
    /// SHA-256 of the sorted canonical-form stream (order byte then code, per class).
    pub checksum: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyCertificate {
    pub g: PatternSpec,
    pub h: PatternSpec,
    /// Exact value, or `None` when no order below `cap` arrows.
    pub value: Option<usize>,
    pub cap: usize,
    /// `value`, or `cap` when indeterminate: the value is at least this.
    pub at_least: usize,
    /// graph6 of a graph of order `at_least - 1` containing no `g` whose
    /// complement contains no `h`.
    pub lower_witness: Option<String>,
    pub upper_record: Option<UpperRecord>,
}

impl RamseyCertificate {
    pub fn is_exact(&self) -> bool {
        self.value.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, OracleError> {
        serde_json::from_str(text).map_err(|e| OracleError::Certificate(e.to_string()))
    }
}

fn checksum(forms: &[CanonicalForm]) -> String {
    let mut hasher = Sha256::new();
    for form in forms {
        hasher.update(form.bytes().collect::<Vec<u8>>());
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Smallest order below `cap` that arrows, found by scanning orders upwards.
///
/// Arrowing is monotone in the order (add an isolated vertex to a
/// counterexample), so the first arrowing order is the Ramsey number.
pub fn ramsey(
    g: &PatternSpec,
    h: &PatternSpec,
    cap: usize,
) -> Result<RamseyCertificate, OracleError> {
    g.validate()?;
    h.validate()?;
    if cap > ENUMERATION_CAP + 1 {
        return Err(OracleError::CapExceeded {
            order: cap,
            cap: ENUMERATION_CAP + 1,
        });
    }
    let mut lower_witness = (cap > 0).then(|| Graph::empty(0).to_graph6());
    for order in 1..cap {
        let forms = enumerate_forms(order, ENUMERATION_CAP)?;
        let classes: Vec<Graph> = forms.iter().map(CanonicalForm::to_graph).collect();
        match arrows_over(&classes, g, h)? {
            Arrowing::Counterexample(f) => lower_witness = Some(f.to_graph6()),
            Arrowing::Arrows => {
                return Ok(RamseyCertificate {
                    g: g.clone(),
                    h: h.clone(),
                    value: Some(order),
                    cap,
                    at_least: order,
                    lower_witness,
                    upper_record: Some(UpperRecord {
                        order,
                        classes: forms.len(),
                        checksum: checksum(&forms),
                    }),
                });
            }
        }
    }
    Ok(RamseyCertificate {
        g: g.clone(),
        h: h.clone(),
        value: None,
        cap,
        at_least: cap,
        lower_witness,
        upper_record: None,
    })
}

/// Re-checks a certificate from scratch.
pub fn reverify(cert: &RamseyCertificate) -> Result<(), OracleError> {
    let fail = |msg: String| Err(OracleError::Certificate(msg));
    let expected_at_least = cert.value.unwrap_or(cert.cap);
    if cert.at_least != expected_at_least {
        return fail(format!("at_least {} disagrees with value", cert.at_least));
    }
    if cert.at_least >= 1 {
        let Some(text) = &cert.lower_witness else {
            return fail("missing lower witness".into());
        };
        let w = Graph::from_graph6(text).map_err(|e| OracleError::Certificate(e.to_string()))?;
        if w.order() + 1 != cert.at_least {
            return fail(format!(
                "lower witness has order {}, expected {}",
                w.order(),
                cert.at_least - 1
            ));
        }
        if satisfies(&w, &cert.g, &cert.h)? {
            return fail("lower witness satisfies the dichotomy".into());
        }
    }
    match (cert.value, &cert.upper_record) {
        (Some(value), Some(record)) => {
            if record.order != value {
                return fail(format!(
                    "upper record order {} is not the value {value}",
                    record.order
                ));
            }
            let forms = enumerate_forms(value, ENUMERATION_CAP)?;
            if forms.len() != record.classes {
                return fail(format!(
                    "{} classes recorded, {} enumerated",
                    record.classes,
                    forms.len()
                ));
            }
            if checksum(&forms) != record.checksum {
                return fail("canonical-form checksum mismatch".into());
            }
            let classes: Vec<Graph> = forms.iter().map(CanonicalForm::to_graph).collect();
            if !arrows_over(&classes, &cert.g, &cert.h)?.holds() {
                return fail(format!("order {value} does not arrow"));
            }
            Ok(())
        }
        (None, None) => Ok(()),
        _ => fail("value and upper record must both be present or both absent".into()),
    }
}
