//! Seeded random extraction suites.
//!
//! Generator: `ChaCha8Rng::seed_from_u64(seed)` with the stream set to the
//! case index, so each case is reproducible on its own. A path-free host of
//! order `N` is a disjoint union of blocks whose sizes are drawn uniformly
//! from `[3, cap]` (the last block trimmed to fit), each block a `G(k, 1/2)`
//! draw over its vertex pairs in lexicographic order; finally the vertex
//! labels are shuffled. With `cap < n` no block can hold `P_n`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::embedding::DEFAULT_BUDGET;
use crate::graph::{Graph, GraphBuilder};
use crate::witness::{
    error_json, extract_t_paths, extract_theorem1, extract_theorem2, Dichotomy, ExtractOptions,
    WitnessError,
};

/// Largest block of a random path-free host.
pub const COMPONENT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Jahangir,
    Paths,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HostFamily {
    /// Random blocks of size at most `min(COMPONENT_CAP, n - 1)`.
    PathFree,
    /// `t` cliques `K_n` plus isolated vertices, labels shuffled.
    PaddedCliques,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteSpec {
    pub name: &'static str,
    pub theorem: u8,
    pub t: usize,
    pub n: usize,
    pub s: usize,
    pub m: usize,
    pub order: usize,
    pub host: HostFamily,
    pub expect: Expect,
}

pub const SUITES: [SuiteSpec; 5] = [
    SuiteSpec {
        name: "thm1-s2m3",
        theorem: 1,
        t: 1,
        n: 23,
        s: 2,
        m: 3,
        order: 25,
        host: HostFamily::PathFree,
        expect: Expect::Jahangir,
    },
    SuiteSpec {
        name: "thm2-s3m2",
        theorem: 2,
        t: 1,
        n: 12,
        s: 3,
        m: 2,
        order: 23,
        host: HostFamily::PathFree,
        expect: Expect::Jahangir,
    },
    SuiteSpec {
        name: "thm2-s3m3",
        theorem: 2,
        t: 1,
        n: 32,
        s: 3,
        m: 3,
        order: 64,
        host: HostFamily::PathFree,
        expect: Expect::Jahangir,
    },
    SuiteSpec {
        name: "thm3-t2s2m3",
        theorem: 3,
        t: 2,
        n: 23,
        s: 2,
        m: 3,
        order: 48,
        host: HostFamily::PathFree,
        expect: Expect::Jahangir,
    },
    SuiteSpec {
        name: "thm3-t2s2m3-paths",
        theorem: 3,
        t: 2,
        n: 23,
        s: 2,
        m: 3,
        order: 48,
        host: HostFamily::PaddedCliques,
        expect: Expect::Paths,
    },
];

pub fn suite(name: &str) -> Option<SuiteSpec> {
    SUITES.iter().copied().find(|s| s.name == name)
}

fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permute(&perm).expect("a permutation of the vertex set")
}

/// Random host of the given order whose components have at most `cap`
/// vertices (`cap >= 3`).
pub fn random_bounded_components(order: usize, cap: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(cap >= 3, "component cap must be at least 3");
    let mut builder = GraphBuilder::new(order);
    let mut start = 0;
    while start < order {
        let size = rng.gen_range(3..=cap).min(order - start);
        for v in start + 1..start + size {
            for u in start..v {
                if rng.gen_bool(0.5) {
                    builder.add_edge(u, v).expect("block vertices are in range");
                }
            }
        }
        start += size;
    }
    shuffled(&builder.build(), rng)
}

/// `t` copies of `K_n` padded with isolated vertices to `order`, shuffled.
pub fn padded_cliques(t: usize, n: usize, order: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(t * n <= order, "cliques must fit in the order");
    let g = (0..t)
        .fold(Graph::empty(0), |g, _| {
            g.disjoint_union(&Graph::complete(n))
        })
        .disjoint_union(&Graph::empty(order - t * n));
    shuffled(&g, rng)
}

/// The host graph of case `index` of `spec`.
pub fn case_graph(spec: &SuiteSpec, seed: u64, index: u64) -> Graph {
    let mut rng = case_rng(seed, index);
    match spec.host {
        HostFamily::PathFree => {
            random_bounded_components(spec.order, COMPONENT_CAP.min(spec.n - 1), &mut rng)
        }
        HostFamily::PaddedCliques => padded_cliques(spec.t, spec.n, spec.order, &mut rng),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub index: u64,
    pub graph6: String,
    pub case: Option<String>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Whether the error was a maximality violation.
    pub maximality_violation: bool,
    #[serde(skip)]
    pub trace_json: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub count: u64,
    pub verified: u64,
    pub maximality_violations: u64,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verified == self.count
    }

    /// Concatenated per-case trace documents, one per line, in case order.
    pub fn traces(&self) -> String {
        self.cases
            .iter()
            .map(|c| format!("{}\n", c.trace_json))
            .collect()
    }
}

pub fn run_case(spec: &SuiteSpec, seed: u64, index: u64, budget: u64) -> CaseReport {
    let f = case_graph(spec, seed, index);
    let opts = ExtractOptions {
        budget,
        force: false,
    };
    let result = match spec.theorem {
        1 => extract_theorem1(&f, spec.n, spec.s, spec.m, opts),
        2 => extract_theorem2(&f, spec.n, spec.s, spec.m, opts),
        _ => extract_t_paths(&f, spec.t, spec.n, spec.s, spec.m, opts),
    };
    let graph6 = f.to_graph6();
    match result {
        Ok(w) => {
            let kind_ok = matches!(
                (&w.outcome, spec.expect),
                (Dichotomy::JahangirInComplement(_), Expect::Jahangir)
                    | (Dichotomy::PathsInF(_), Expect::Paths)
            );
            let check = w.verify(&f);
            let error = match (&check, kind_ok) {
                (Err(e), _) => Some(format!("verification failed: {e}")),
                (Ok(()), false) => Some("witness of the unexpected kind".to_string()),
                (Ok(()), true) => None,
            };
            CaseReport {
                index,
                graph6,
                case: Some(w.trace.case.to_string()),
                verified: error.is_none(),
                error,
                maximality_violation: false,
                trace_json: w.to_json(&f),
            }
        }
        Err(e) => CaseReport {
            index,
            graph6,
            case: e.trace().map(|t| t.case.to_string()),
            verified: false,
            maximality_violation: matches!(e, WitnessError::MaximalityViolation { .. }),
            error: Some(e.to_string()),
            trace_json: error_json(&e),
        },
    }
}

/// Runs cases `0..count` in parallel; the report lists them in case order.
pub fn run_suite(spec: &SuiteSpec, seed: u64, count: u64, budget: u64) -> SuiteReport {
    let cases: Vec<CaseReport> = (0..count)
        .into_par_iter()
        .map(|i| run_case(spec, seed, i, budget))
        .collect();
    SuiteReport {
        suite: spec.name,
        seed,
        count,
        verified: cases.iter().filter(|c| c.verified).count() as u64,
        maximality_violations: cases.iter().filter(|c| c.maximality_violation).count() as u64,
        cases,
    }
}

pub fn run_named(name: &str, seed: u64, count: u64) -> Option<SuiteReport> {
    suite(name).map(|spec| run_suite(&spec, seed, count, DEFAULT_BUDGET))
}
