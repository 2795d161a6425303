use crate::embedding::{
    find_path_at_least, longest_path, BudgetExhausted, PathWitness, SearchOutcome,
};
use crate::graph::{Graph, VertexSet};

use super::assemble::assemble_from_system;
use super::{
    build_path_system_within, edgeless_witness, finish_jahangir, precondition, CaseId, Dichotomy,
    DichotomyWitness, ExtractOptions, ExtractionTrace, Params, WitnessError,
};

/// Smallest `n` covered by the even-`s` construction.
pub(crate) fn theorem1_threshold(s: usize, m: usize) -> usize {
    (2 * s * m - 1) * (s * m / 2 - 1) + 1
}

pub(crate) fn check_even_s(s: usize, m: usize) -> Result<(), WitnessError> {
    if s < 2 || !s.is_multiple_of(2) || m < 3 {
        return Err(WitnessError::Precondition(format!(
            "need s even >= 2 and m >= 3, got s = {s}, m = {m}"
        )));
    }
    Ok(())
}

/// Either a `P_n` in `f` or `J_{s,m}` in its complement, for even `s`.
pub fn extract_theorem1(
    f: &Graph,
    n: usize,
    s: usize,
    m: usize,
    opts: ExtractOptions,
) -> Result<DichotomyWitness, WitnessError> {
    check_even_s(s, m)?;
    let threshold = theorem1_threshold(s, m);
    precondition(n >= threshold, opts.force, || {
        format!("n = {n} is below the threshold {threshold} for s = {s}, m = {m}")
    })?;
    let need = n + s * m / 2 - 1;
    precondition(f.order() >= need, opts.force, || {
        format!("host order {} is below n + sm/2 - 1 = {need}", f.order())
    })?;

    let mut trace = ExtractionTrace::new(1, Params { n, s, m, t: 1 }, opts.force);
    match find_path_at_least(f, n, opts.budget) {
        SearchOutcome::Found(path) => {
            trace.case = CaseId::Thm1PathInF;
            trace.paths = vec![path.clone()];
            return Ok(DichotomyWitness {
                outcome: Dichotomy::PathsInF(vec![path]),
                trace,
            });
        }
        SearchOutcome::Unknown => return Err(BudgetExhausted { limit: opts.budget }.into()),
        SearchOutcome::Absent => {}
    }

    let l1 = longest_path(f, opts.budget)?;
    let k = l1.len();
    trace.k = Some(k);
    if k <= 1 {
        trace.case = CaseId::Thm1Edgeless;
        return edgeless_witness(f, s, m, trace);
    }
    if k < 2 * s * m {
        trace.case = CaseId::Thm1Case1;
        case1(f, l1, s, m, opts, trace)
    } else {
        trace.case = CaseId::Thm1Case2;
        case2(f, l1, s, m, trace)
    }
}

fn case1(
    f: &Graph,
    l1: PathWitness,
    s: usize,
    m: usize,
    opts: ExtractOptions,
    mut trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let q = s * m / 2 - 1;
    let system = build_path_system_within(f, &f.vertices(), Some(l1), q, opts.budget)?;
    trace.paths = system.paths.clone();
    trace.augmented_edges = system.augmented_edges.clone();
    trace.remainder = system.remainder.to_vec();
    let rest = &trace.remainder;
    if rest.len() < 3 {
        return Err(WitnessError::Precondition(format!(
            "only {} vertices remain outside the path system, need 3",
            rest.len()
        )));
    }
    let (x, y, z) = (rest[0], rest[1], rest[2]);
    trace.select("x", x);
    trace.select("y", y);
    trace.select("z", z);
    trace.select("hub", z);
    assemble_from_system(
        f,
        &system,
        &[(1, x), (1 + s, y)],
        z,
        s,
        m,
        opts.budget,
        trace,
    )
}

fn case2(
    f: &Graph,
    l1: PathWitness,
    s: usize,
    m: usize,
    mut trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let q = s * m / 2 - 1;
    let k = l1.len();
    let quadruples: Vec<Vec<usize>> = (1..=q)
        .map(|i| (4 * i - 2..=4 * i + 1).map(|p| l1.at(p)).collect())
        .collect();
    let on_path = VertexSet::from_vertices(f.order(), l1.vertices().iter().copied());
    let ys: Vec<usize> = (0..f.order())
        .filter(|&v| !on_path.contains(v))
        .take(q + 1)
        .collect();
    trace.paths = vec![l1.clone()];
    trace.quadruples = quadruples.clone();
    for (i, &y) in ys.iter().enumerate() {
        trace.select(format!("y_{}", i + 1), y);
    }
    if ys.len() < q + 1 {
        return Err(WitnessError::Precondition(format!(
            "only {} vertices lie outside L_1, need {}",
            ys.len(),
            q + 1
        )));
    }
    let mut rim = Vec::with_capacity(s * m);
    for (i, quad) in quadruples.iter().enumerate() {
        let (ya, yb) = (ys[i], ys[i + 1]);
        let Some(&c) = quad
            .iter()
            .filter(|&&c| !f.has_edge(c, ya) && !f.has_edge(c, yb))
            .min()
        else {
            return Err(WitnessError::MaximalityViolation {
                step: format!("every vertex of C_{} is adjacent to Y_{}", i + 1, i + 1),
                trace: Box::new(trace),
            });
        };
        trace.select(format!("c_{}", i + 1), c);
        rim.push(ya);
        rim.push(c);
    }
    rim.push(ys[q]);
    rim.push(l1.at(k));
    let hub = l1.at(1);
    trace.select("hub", hub);
    trace.select("end", l1.at(k));
    rim.push(hub);
    finish_jahangir(f, rim, s, m, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::PatternSpec;

    fn opts() -> ExtractOptions {
        ExtractOptions::default()
    }

    #[test]
    fn long_path_host_gives_prefix() {
        let f = PatternSpec::Path(25).build().unwrap();
        let w = extract_theorem1(&f, 23, 2, 3, opts()).unwrap();
        assert_eq!(w.trace.case, CaseId::Thm1PathInF);
        match &w.outcome {
            Dichotomy::PathsInF(p) => assert_eq!(p[0].vertices(), &(0..23).collect::<Vec<_>>()[..]),
            other => panic!("{other:?}"),
        }
        w.verify(&f).unwrap();
    }

    #[test]
    fn edgeless_host() {
        let f = Graph::empty(25);
        let w = extract_theorem1(&f, 23, 2, 3, opts()).unwrap();
        assert_eq!(w.trace.case, CaseId::Thm1Edgeless);
        assert!(w.is_jahangir());
        w.verify(&f).unwrap();
        // order 24 is one short of n + sm/2 - 1 and needs the diagnostic mode
        let f = Graph::empty(24);
        assert!(extract_theorem1(&f, 23, 2, 3, opts()).is_err());
        let forced = ExtractOptions {
            force: true,
            ..opts()
        };
        let w = extract_theorem1(&f, 23, 2, 3, forced).unwrap();
        assert_eq!(w.trace.case, CaseId::Thm1Edgeless);
        w.verify(&f).unwrap();
    }

    #[test]
    fn extremal_host_below_order_is_rejected() {
        let f = Graph::complete(22).disjoint_union(&Graph::complete(1));
        assert!(matches!(
            extract_theorem1(&f, 23, 2, 3, opts()),
            Err(WitnessError::Precondition(_))
        ));
        assert!(matches!(
            extract_theorem1(&Graph::empty(30), 10, 2, 3, opts()),
            Err(WitnessError::Precondition(_))
        ));
        assert!(matches!(
            extract_theorem1(&Graph::empty(30), 23, 3, 3, opts()),
            Err(WitnessError::Precondition(_))
        ));
    }

    #[test]
    fn case1_on_cliques() {
        // components of order <= 11 keep k <= 11, so Case 1 applies
        let f = Graph::complete(11)
            .disjoint_union(&Graph::complete(10))
            .disjoint_union(&Graph::complete(4));
        let w = extract_theorem1(&f, 23, 2, 3, opts()).unwrap();
        assert_eq!(w.trace.case, CaseId::Thm1Case1);
        w.verify(&f).unwrap();
    }

    #[test]
    fn case2_on_long_path() {
        // a 22-vertex path plus isolated vertices: k = 22 > 2sm - 1
        let f = PatternSpec::Path(22)
            .build()
            .unwrap()
            .disjoint_union(&Graph::empty(3));
        let w = extract_theorem1(&f, 23, 2, 3, opts()).unwrap();
        assert_eq!(w.trace.case, CaseId::Thm1Case2);
        assert_eq!(w.trace.quadruples[0], vec![1, 2, 3, 4]);
        assert_eq!(w.trace.quadruples[1], vec![5, 6, 7, 8]);
        w.verify(&f).unwrap();
    }

    #[test]
    fn forced_run_is_marked() {
        let f = Graph::complete(5)
            .disjoint_union(&Graph::complete(5))
            .disjoint_union(&Graph::empty(3));
        let forced = ExtractOptions {
            force: true,
            ..opts()
        };
        let w = extract_theorem1(&f, 8, 2, 3, forced).unwrap();
        assert!(w.trace.forced);
        w.verify(&f).unwrap();
    }
}
