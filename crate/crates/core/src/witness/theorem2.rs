use crate::embedding::{
    find_path_at_least, find_subgraph, longest_path, BudgetExhausted, Embedding, PathWitness,
    SearchOutcome,
};
use crate::families::PatternSpec;
use crate::graph::{Graph, VertexSet};

use super::assemble::assemble_from_system;
use super::{
    build_path_system_within, edgeless_witness, finish_jahangir, precondition, CaseId, Dichotomy,
    DichotomyWitness, ExtractOptions, ExtractionTrace, Params, WitnessError,
};

pub(crate) fn theorem2_threshold(s: usize, m: usize) -> usize {
    let sm = s * m;
    if m.is_multiple_of(2) {
        sm / 2 * (sm - 2)
    } else {
        (sm - 1) / 2 * (sm - 1)
    }
}

/// Either a `P_n` in `f` or `J_{s,m}` in its complement, for odd `s`.
pub fn extract_theorem2(
    f: &Graph,
    n: usize,
    s: usize,
    m: usize,
    opts: ExtractOptions,
) -> Result<DichotomyWitness, WitnessError> {
    if s < 3 || s.is_multiple_of(2) || m < 2 {
        return Err(WitnessError::Precondition(format!(
            "need s odd >= 3 and m >= 2, got s = {s}, m = {m}"
        )));
    }
    let even = m.is_multiple_of(2);
    let threshold = theorem2_threshold(s, m);
    precondition(n >= threshold, opts.force, || {
        format!("n = {n} is below the threshold {threshold} for s = {s}, m = {m}")
    })?;
    let need = if even { 2 * n - 1 } else { 2 * n };
    precondition(f.order() >= need, opts.force, || {
        format!("host order {} is below {need}", f.order())
    })?;

    let mut trace = ExtractionTrace::new(2, Params { n, s, m, t: 1 }, opts.force);
    match find_path_at_least(f, n, opts.budget) {
        SearchOutcome::Found(path) => {
            trace.case = CaseId::Thm2PathInF;
            trace.paths = vec![path.clone()];
            return Ok(DichotomyWitness {
                outcome: Dichotomy::PathsInF(vec![path]),
                trace,
            });
        }
        SearchOutcome::Unknown => return Err(BudgetExhausted { limit: opts.budget }.into()),
        SearchOutcome::Absent => {}
    }

    if even {
        trace.case = CaseId::Thm2EvenM;
        return even_m(f, s, m, opts, trace);
    }

    let l1 = longest_path(f, opts.budget)?;
    let k = l1.len();
    trace.k = Some(k);
    let sm = s * m;
    if k <= 1 {
        trace.case = CaseId::Thm2OddMEdgeless;
        return edgeless_witness(f, s, m, trace);
    }
    if k < sm - 1 {
        trace.case = CaseId::Thm2OddMCase1;
        return odd_case1(f, &f.vertices(), l1, Vec::new(), s, m, opts, trace);
    }
    let mut outside = f.vertices();
    for &v in l1.vertices() {
        outside.remove(v);
    }
    let (local, lift) = f.induced(&outside).expect("residual lies in the host");
    let l2 = longest_path(&local, opts.budget)?.lifted(&lift);
    if l2.len() >= sm - 1 {
        trace.case = CaseId::Thm2OddMCase2;
        odd_case2(f, l1, l2, s, m, trace)
    } else {
        trace.case = CaseId::Thm2OddMCase3;
        if l2.len() <= 1 {
            // V_1 is edgeless: the system starts from a fabricated edge.
            return odd_case1_fresh(f, &outside, vec![l1], s, m, opts, trace);
        }
        odd_case1(f, &outside, l2, vec![l1], s, m, opts, trace)
    }
}

fn even_m(
    f: &Graph,
    s: usize,
    m: usize,
    opts: ExtractOptions,
    mut trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let rim = s * m;
    match find_subgraph(&f.complement(), &PatternSpec::Wheel(rim), opts.budget) {
        SearchOutcome::Found(wheel) => {
            trace.select("hub", wheel.map[rim]);
            let j = wheel_to_jahangir(&wheel, s, m)?;
            finish_jahangir(f, j.map, s, m, trace)
        }
        SearchOutcome::Absent => Err(WitnessError::WheelNotFound {
            rim,
            trace: Box::new(trace),
        }),
        SearchOutcome::Unknown => Err(BudgetExhausted { limit: opts.budget }.into()),
    }
}

/// Reinterprets a `W_{sm}` embedding as `J_{s,m}`: same images, only the
/// spokes at rim positions divisible by `s` are kept.
pub fn wheel_to_jahangir(wheel: &Embedding, s: usize, m: usize) -> Result<Embedding, WitnessError> {
    let shape = || WitnessError::WheelShape {
        expected: s * m,
        found: wheel.pattern.to_string(),
    };
    match wheel.pattern {
        PatternSpec::Wheel(k) if k == s * m && wheel.map.len() == k + 1 => {}
        _ => return Err(shape()),
    }
    PatternSpec::jahangir(s, m)
        .validate()
        .map_err(|_| shape())?;
    Ok(Embedding {
        pattern: PatternSpec::jahangir(s, m),
        host_order: wheel.host_order,
        map: wheel.map.clone(),
    })
}

#[allow(clippy::too_many_arguments)]
fn odd_case1(
    f: &Graph,
    within: &VertexSet,
    first: PathWitness,
    earlier: Vec<PathWitness>,
    s: usize,
    m: usize,
    opts: ExtractOptions,
    trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let q = (s * m - 1) / 2;
    let system = build_path_system_within(f, within, Some(first), q, opts.budget)?;
    assemble_odd(f, system, earlier, s, m, opts, trace)
}

fn odd_case1_fresh(
    f: &Graph,
    within: &VertexSet,
    earlier: Vec<PathWitness>,
    s: usize,
    m: usize,
    opts: ExtractOptions,
    trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let q = (s * m - 1) / 2;
    let system = build_path_system_within(f, within, None, q, opts.budget)?;
    assemble_odd(f, system, earlier, s, m, opts, trace)
}

fn assemble_odd(
    f: &Graph,
    system: super::PathSystem,
    earlier: Vec<PathWitness>,
    s: usize,
    m: usize,
    opts: ExtractOptions,
    mut trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    trace.paths = earlier
        .into_iter()
        .chain(system.paths.iter().cloned())
        .collect();
    trace.augmented_edges = system.augmented_edges.clone();
    trace.remainder = system.remainder.to_vec();
    if trace.remainder.len() < 2 {
        return Err(WitnessError::Precondition(format!(
            "only {} vertices remain outside the path system, need 2",
            trace.remainder.len()
        )));
    }
    let (x, y) = (trace.remainder[0], trace.remainder[1]);
    trace.select("x", x);
    trace.select("y", y);
    trace.select("hub", x);
    assemble_from_system(f, &system, &[(1, y)], x, s, m, opts.budget, trace)
}

/// Couples of consecutive path vertices: odd `i` from the front, even `i`
/// from the back.
fn couples(path: &PathWitness, r: usize) -> Vec<Vec<usize>> {
    let len = path.len();
    (1..=r)
        .map(|i| {
            if i % 2 == 1 {
                vec![path.at(i + 1), path.at(i + 2)]
            } else {
                vec![path.at(len - i), path.at(len - i + 1)]
            }
        })
        .collect()
}

fn odd_case2(
    f: &Graph,
    l1: PathWitness,
    l2: PathWitness,
    s: usize,
    m: usize,
    mut trace: ExtractionTrace,
) -> Result<DichotomyWitness, WitnessError> {
    let r = (s * m - 3) / 2;
    let a = couples(&l1, r);
    let b = couples(&l2, r);
    trace.paths = vec![l1.clone(), l2.clone()];
    trace.couples_a = a.clone();
    trace.couples_b = b.clone();
    let used = VertexSet::from_vertices(
        f.order(),
        l1.vertices().iter().chain(l2.vertices()).copied(),
    );
    let rest: Vec<usize> = (0..f.order())
        .filter(|&v| !used.contains(v))
        .take(2)
        .collect();
    if rest.len() < 2 {
        return Err(WitnessError::Precondition(format!(
            "only {} vertices lie outside L_1 and L_2, need 2",
            rest.len()
        )));
    }
    let (x, y) = (rest[0], rest[1]);
    trace.select("x", x);
    trace.select("y", y);
    trace.select("hub", x);
    let mut rim = vec![l1.at(1)];
    for i in 0..r {
        let mut pick = |couple: &[usize], name: &str| -> Result<usize, WitnessError> {
            match couple.iter().copied().filter(|&v| !f.has_edge(v, x)).min() {
                Some(v) => {
                    trace.select(format!("{name}_{}", i + 1), v);
                    Ok(v)
                }
                None => Err(WitnessError::MaximalityViolation {
                    step: format!(
                        "both vertices of {}_{} are adjacent to x",
                        name.to_uppercase(),
                        i + 1
                    ),
                    trace: Box::new(trace.clone()),
                }),
            }
        };
        let bi = pick(&b[i], "b")?;
        let ai = pick(&a[i], "a")?;
        rim.push(bi);
        rim.push(ai);
    }
    rim.push(l2.at(l2.len()));
    rim.push(y);
    rim.push(x);
    finish_jahangir(f, rim, s, m, trace)
}
