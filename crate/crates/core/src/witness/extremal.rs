use serde::Serialize;

use crate::embedding::{find_disjoint_paths, find_path_at_least, find_subgraph, SearchOutcome};
use crate::families::{
    extremal_graph, multipartite_admits, multipartite_contains_even_cycle, TheoremCase,
};
use crate::graph::Graph;

/// Orders up to which the path side is cross-checked by explicit search.
const PATH_CROSS_CHECK: usize = 30;
/// Orders up to which the Jahangir side is cross-checked by explicit search.
const SUBGRAPH_CROSS_CHECK: usize = 24;
const CROSS_CHECK_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub case: TheoremCase,
    pub order: usize,
    pub holds: bool,
    pub checks: Vec<ExtremalCheck>,
}

impl ExtremalReport {
    pub fn failures(&self) -> impl Iterator<Item = &ExtremalCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Builds the lower-bound graph of `case` and checks that it avoids the path
/// target and that its complement avoids `J_{s,m}`.
pub fn verify_extremal(case: TheoremCase, budget: u64) -> ExtremalReport {
    match extremal_graph(case) {
        Ok(g) => verify_extremal_graph(case, &g, budget),
        Err(e) => ExtremalReport {
            case,
            order: 0,
            holds: false,
            checks: vec![ExtremalCheck {
                name: "hypotheses",
                passed: false,
                detail: e.to_string(),
            }],
        },
    }
}

/// Same checks on an arbitrary graph claimed to be extremal for `case`.
pub fn verify_extremal_graph(case: TheoremCase, g: &Graph, budget: u64) -> ExtremalReport {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| {
        checks.push(ExtremalCheck {
            name,
            passed,
            detail,
        })
    };

    match case.check() {
        Ok(()) => push("hypotheses", true, "structural parameters valid".into()),
        Err(e) => push("hypotheses", false, e.to_string()),
    }
    let expected: usize = case.clique_sizes().iter().sum();
    push(
        "order",
        g.order() == expected,
        format!(
            "order {} (one below the Ramsey value {})",
            g.order(),
            expected + 1
        ),
    );

    let (passed, detail) = path_side(case, g, budget);
    push("path target absent", passed, detail);
    let (passed, detail) = jahangir_side(case, g, budget);
    push("jahangir absent from complement", passed, detail);

    if let TheoremCase::Thm1 { s, m, .. } | TheoremCase::Thm3 { s, m, .. } = case {
        // two cliques: the complement is bipartite with a small side
        let comps = g.components();
        if comps.len() == 2 && comps.iter().all(|c| g.is_clique(c)) {
            let parts: Vec<usize> = comps.iter().map(Vec::len).collect();
            match multipartite_contains_even_cycle(&parts, s * m) {
                Ok(has) => push(
                    "rim cycle absent from complement",
                    !has,
                    format!("C{} in K{},{}: {has}", s * m, parts[0], parts[1]),
                ),
                Err(e) => push("rim cycle absent from complement", false, e.to_string()),
            }
        }
    }

    let holds = checks.iter().all(|c| c.passed);
    ExtremalReport {
        case,
        order: g.order(),
        holds,
        checks,
    }
}

fn path_side(case: TheoremCase, g: &Graph, budget: u64) -> (bool, String) {
    let comps = g.components();
    let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    let (t, n) = match case {
        TheoremCase::Thm3 { t, n, .. } => (t, n),
        TheoremCase::Thm1 { n, .. }
        | TheoremCase::Thm2EvenM { n, .. }
        | TheoremCase::Thm2OddM { n, .. } => (1, n),
    };
    // each component hosts at most floor(|C| / n) disjoint copies of P_n
    let capacity: usize = sizes.iter().map(|&c| c / n).sum();
    let mut detail = format!("component sizes {sizes:?}, capacity {capacity} < {t}");
    let by_size = capacity < t;
    let searched = if by_size && g.order() > PATH_CROSS_CHECK {
        None
    } else if t == 1 {
        Some(find_path_at_least(g, n, budget).map(|p| vec![p]))
    } else {
        Some(find_disjoint_paths(g, t, n, budget))
    };
    match searched {
        None => (true, detail),
        Some(SearchOutcome::Absent) => {
            detail.push_str("; search confirms absence");
            (true, detail)
        }
        Some(SearchOutcome::Found(paths)) => {
            let shown: Vec<_> = paths.iter().map(|p| p.vertices().to_vec()).collect();
            (false, format!("found {t}P{n}: {shown:?}"))
        }
        Some(SearchOutcome::Unknown) => (false, format!("{detail}; search exhausted its budget")),
    }
}

fn jahangir_side(case: TheoremCase, g: &Graph, budget: u64) -> (bool, String) {
    let pattern_spec = case.jahangir();
    let pattern = pattern_spec.build().expect("valid jahangir parameters");
    let comps = g.components();
    let complement = g.complement();
    let mut result = if comps.iter().all(|c| g.is_clique(c)) {
        let parts: Vec<usize> = comps.iter().map(Vec::len).collect();
        let admits = multipartite_admits(&parts, &pattern);
        (
            !admits,
            format!(
                "complement is complete multipartite {parts:?}; {pattern_spec} admitted: {admits}"
            ),
        )
    } else {
        match find_subgraph(&complement, &pattern_spec, budget) {
            SearchOutcome::Absent => (true, format!("search finds no {pattern_spec}")),
            SearchOutcome::Found(e) => (
                false,
                format!("{pattern_spec} in complement at {:?}", e.map),
            ),
            SearchOutcome::Unknown => (false, "search exhausted its budget".into()),
        }
    };
    if result.0 && g.order() <= SUBGRAPH_CROSS_CHECK {
        match find_subgraph(&complement, &pattern_spec, CROSS_CHECK_BUDGET.min(budget)) {
            SearchOutcome::Absent => result.1.push_str("; search confirms absence"),
            SearchOutcome::Found(e) => {
                result = (false, format!("search found {pattern_spec} at {:?}", e.map));
            }
            SearchOutcome::Unknown => result.1.push_str("; search cross-check inconclusive"),
        }
    }
    result
}
