use crate::embedding::{find_subgraph, SearchOutcome};
use crate::families::PatternSpec;
use crate::graph::{Graph, VertexSet};

use super::{
    finish_jahangir, Assembly, DichotomyWitness, ExtractionTrace, PathSystem, WitnessError,
};

/// Rim of length `rim_len` with `fixed` vertices at given positions and the
/// path endpoints `e_1..e_q, f_1..f_q` filling the free slots, starting just
/// after the last fixed position and wrapping around.
///
/// With `q >= 2` the two endpoints of one path are never rim neighbours.
pub(crate) fn endpoint_rim(
    pairs: &[(usize, usize)],
    fixed: &[(usize, usize)],
    rim_len: usize,
) -> Vec<usize> {
    let fill: Vec<usize> = pairs
        .iter()
        .map(|p| p.0)
        .chain(pairs.iter().map(|p| p.1))
        .collect();
    assert_eq!(
        fill.len() + fixed.len(),
        rim_len,
        "rim slots must match supplied vertices"
    );
    let mut rim = vec![None; rim_len];
    for &(pos, v) in fixed {
        rim[pos] = Some(v);
    }
    let start = fixed.iter().map(|f| f.0 + 1).max().unwrap_or(0);
    let mut next = fill.into_iter();
    for step in 0..rim_len {
        let pos = (start + step) % rim_len;
        if rim[pos].is_none() {
            rim[pos] = next.next();
        }
    }
    rim.into_iter()
        .map(|v| v.expect("every slot filled"))
        .collect()
}

/// Case-1 style assembly: endpoint rim plus fixed extras, verified; on
/// failure, a bounded search for `J_{s,m}` in the complement restricted to
/// the same vertices.
#[allow(clippy::too_many_arguments)]
pub(crate) fn assemble_from_system(
    f: &Graph,
    system: &PathSystem,
    fixed: &[(usize, usize)],
    hub: usize,
    s: usize,
    m: usize,
    budget: u64,
    mut trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let rim = endpoint_rim(&system.endpoints(), fixed, s * m);
    let mut map = rim;
    map.push(hub);
    trace.assembly = Some(Assembly::Direct);
    match finish_jahangir(f, map.clone(), s, m, trace.clone()) {
        Ok(w) => Ok(w),
        Err(WitnessError::MaximalityViolation { step, .. }) => {
            let chosen = VertexSet::from_vertices(f.order(), map.iter().copied());
            let (local, lift) = f.induced(&chosen).expect("chosen vertices lie in the host");
            match find_subgraph(&local.complement(), &PatternSpec::jahangir(s, m), budget) {
                SearchOutcome::Found(emb) => {
                    trace.assembly = Some(Assembly::Searched);
                    let lifted = emb.lifted(&lift, f.order());
                    finish_jahangir(f, lifted.map, s, m, trace)
                }
                SearchOutcome::Absent => Err(WitnessError::MaximalityViolation {
                    step: format!("{step}; no arrangement of the selected vertices works"),
                    trace: Box::new(trace),
                }),
                SearchOutcome::Unknown => {
                    Err(WitnessError::Budget(crate::embedding::BudgetExhausted {
                        limit: budget,
                    }))
                }
            }
        }
        Err(other) => Err(other),
    }
}
