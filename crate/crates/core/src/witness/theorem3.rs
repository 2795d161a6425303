use crate::graph::Graph;

use super::theorem1::{check_even_s, theorem1_threshold};
use super::{
    extract_theorem1, precondition, CaseId, Dichotomy, DichotomyWitness, ExtractOptions,
    ExtractionTrace, Params, WitnessError,
};

/// Either `t` disjoint copies of `P_n` in `f` or `J_{s,m}` in its complement.
///
/// Runs the single-path extractor on the graph left after removing the paths
/// found so far; a Jahangir found there is lifted back to `f`.
pub fn extract_t_paths(
    f: &Graph,
    t: usize,
    n: usize,
    s: usize,
    m: usize,
    opts: ExtractOptions,
) -> Result<DichotomyWitness, WitnessError> {
    check_even_s(s, m)?;
    if t < 1 {
        return Err(WitnessError::Precondition("t must be >= 1".into()));
    }
    let threshold = theorem1_threshold(s, m);
    precondition(n >= threshold, opts.force, || {
        format!("n = {n} is below the threshold {threshold} for s = {s}, m = {m}")
    })?;
    let need = t * n + s * m / 2 - 1;
    precondition(f.order() >= need, opts.force, || {
        format!("host order {} is below tn + sm/2 - 1 = {need}", f.order())
    })?;

    let mut trace = ExtractionTrace::new(3, Params { n, s, m, t }, opts.force);
    let mut alive = f.vertices();
    let mut paths = Vec::with_capacity(t);
    for step in 1..=t {
        let (residual, lift) = f.induced(&alive).expect("residual lies in the host");
        let inner = extract_theorem1(&residual, n, s, m, opts).map_err(|e| e.lifted(&lift))?;
        trace.steps.push(inner.trace.lifted(&lift));
        match inner.outcome {
            Dichotomy::PathsInF(found) => {
                let path = found[0].lifted(&lift);
                for &v in path.vertices() {
                    alive.remove(v);
                }
                paths.push(path);
            }
            Dichotomy::JahangirInComplement(emb) => {
                trace.case = CaseId::Thm3Step(step);
                trace.paths = paths;
                let emb = emb.lifted(&lift, f.order());
                return super::finish_jahangir(f, emb.map, s, m, trace);
            }
        }
    }
    trace.case = CaseId::Thm3Paths;
    trace.paths = paths.clone();
    let witness = DichotomyWitness {
        outcome: Dichotomy::PathsInF(paths),
        trace,
    };
    witness
        .verify(f)
        .map_err(|defect| WitnessError::MaximalityViolation {
            step: format!("path verification failed: {defect}"),
            trace: Box::new(witness.trace.clone()),
        })?;
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cliques_give_two_paths() {
        let f = Graph::complete(23)
            .disjoint_union(&Graph::complete(23))
            .disjoint_union(&Graph::empty(2));
        let w = extract_t_paths(&f, 2, 23, 2, 3, ExtractOptions::default()).unwrap();
        assert_eq!(w.trace.case, CaseId::Thm3Paths);
        match &w.outcome {
            Dichotomy::PathsInF(p) => {
                assert_eq!(p.len(), 2);
                assert_eq!(p[0].vertices(), &(0..23).collect::<Vec<_>>()[..]);
                assert_eq!(p[1].vertices(), &(23..46).collect::<Vec<_>>()[..]);
            }
            other => panic!("{other:?}"),
        }
        w.verify(&f).unwrap();
    }

    #[test]
    fn jahangir_in_second_step_is_lifted() {
        // one P_23 available, then only short components
        let f = Graph::complete(23)
            .disjoint_union(&Graph::complete(10))
            .disjoint_union(&Graph::complete(10))
            .disjoint_union(&Graph::complete(5));
        let w = extract_t_paths(&f, 2, 23, 2, 3, ExtractOptions::default()).unwrap();
        assert_eq!(w.trace.case, CaseId::Thm3Step(2));
        assert_eq!(w.trace.steps.len(), 2);
        w.verify(&f).unwrap();
    }

    #[test]
    fn single_path_matches_theorem1() {
        let f = Graph::complete(11)
            .disjoint_union(&Graph::complete(10))
            .disjoint_union(&Graph::complete(4));
        let a = extract_t_paths(&f, 1, 23, 2, 3, ExtractOptions::default()).unwrap();
        let b = extract_theorem1(&f, 23, 2, 3, ExtractOptions::default()).unwrap();
        assert_eq!(a.outcome, b.outcome);
    }
}
