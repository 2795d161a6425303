//! Named graph families and the lower-bound constructions built from them.
//!
//! Canonical layouts: paths and cycles are numbered in traversal order; a
//! wheel `W_k` has rim `0..k` and hub `k`; a Jahangir graph `J_{s,m}` has rim
//! cycle `0..sm` in cyclic order, hub `sm`, and spokes to the rim vertices
//! `0, s, 2s, ..., (m-1)s`. Unions place their blocks consecutively.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::embedding::{find_subgraph, SearchOutcome};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("cannot parse pattern `{0}`")]
    Syntax(String),
    #[error("{family}: {constraint}")]
    Invalid {
        family: &'static str,
        constraint: &'static str,
    },
    #[error("{0}")]
    Hypothesis(String),
    #[error(
        "complete multipartite cycle test unsupported for {parts} parts of total order {order}"
    )]
    Unsupported { parts: usize, order: usize },
}

/// Parametric family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PatternSpec {
    Path(usize),
    Cycle(usize),
    /// Wheel with `k` rim vertices (order `k + 1`).
    Wheel(usize),
    Jahangir {
        s: usize,
        m: usize,
    },
    DisjointPaths {
        t: usize,
        n: usize,
    },
    Complete(usize),
    CliqueUnion(Vec<usize>),
}

impl PatternSpec {
    pub fn jahangir(s: usize, m: usize) -> Self {
        PatternSpec::Jahangir { s, m }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |family, constraint| Err(FamilyError::Invalid { family, constraint });
        match *self {
            PatternSpec::Path(n) if n < 1 => bad("path", "requires n >= 1"),
            PatternSpec::Cycle(n) if n < 3 => bad("cycle", "requires n >= 3"),
            PatternSpec::Wheel(k) if k < 3 => bad("wheel", "requires k >= 3"),
            PatternSpec::Jahangir { s, .. } if s < 2 => bad("jahangir", "requires s >= 2"),
            PatternSpec::Jahangir { m, .. } if m < 2 => bad("jahangir", "requires m >= 2"),
            PatternSpec::DisjointPaths { t, n } if t < 1 || n < 1 => {
                bad("disjoint paths", "requires t >= 1 and n >= 1")
            }
            PatternSpec::Complete(n) if n < 1 => bad("complete", "requires n >= 1"),
            PatternSpec::CliqueUnion(ref sizes) if sizes.is_empty() || sizes.contains(&0) => {
                bad("clique union", "requires a nonempty list of positive sizes")
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices of the built graph.
    pub fn order(&self) -> usize {
        match self {
            PatternSpec::Path(n) | PatternSpec::Cycle(n) | PatternSpec::Complete(n) => *n,
            PatternSpec::Wheel(k) => k + 1,
            PatternSpec::Jahangir { s, m } => s * m + 1,
            PatternSpec::DisjointPaths { t, n } => t * n,
            PatternSpec::CliqueUnion(sizes) => sizes.iter().sum(),
        }
    }

    /// Builds the canonical representative.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let edges: Vec<(usize, usize)> = match *self {
            PatternSpec::Path(n) => (1..n).map(|i| (i - 1, i)).collect(),
            PatternSpec::Cycle(n) => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            PatternSpec::Wheel(k) => (0..k)
                .map(|i| (i, (i + 1) % k))
                .chain((0..k).map(|i| (i, k)))
                .collect(),
            PatternSpec::Jahangir { s, m } => {
                let rim = s * m;
                (0..rim)
                    .map(|i| (i, (i + 1) % rim))
                    .chain((0..m).map(|j| (j * s, rim)))
                    .collect()
            }
            PatternSpec::DisjointPaths { t, n } => (0..t)
                .flat_map(|b| (1..n).map(move |i| (b * n + i - 1, b * n + i)))
                .collect(),
            PatternSpec::Complete(n) => return Ok(Graph::complete(n)),
            PatternSpec::CliqueUnion(ref sizes) => return Ok(clique_union(sizes)),
        };
        Ok(Graph::from_edges(self.order(), edges).expect("family edges are valid"))
    }
}

pub fn clique_union(sizes: &[usize]) -> Graph {
    sizes.iter().fold(Graph::empty(0), |g, &k| {
        g.disjoint_union(&Graph::complete(k))
    })
}

/// Complete multipartite graph with the given part sizes, parts consecutive.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    clique_union(parts).complement()
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Path(n) => write!(f, "P{n}"),
            PatternSpec::Cycle(n) => write!(f, "C{n}"),
            PatternSpec::Wheel(k) => write!(f, "W{k}"),
            PatternSpec::Jahangir { s, m } => write!(f, "J{s},{m}"),
            PatternSpec::DisjointPaths { t, n } => write!(f, "{t}P{n}"),
            PatternSpec::Complete(n) => write!(f, "K{n}"),
            PatternSpec::CliqueUnion(sizes) => {
                let parts: Vec<String> = sizes.iter().map(|k| format!("K{k}")).collect();
                f.write_str(&parts.join("+"))
            }
        }
    }
}

fn number(text: &str, whole: &str) -> Result<usize, FamilyError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FamilyError::Syntax(whole.to_string()));
    }
    text.parse()
        .map_err(|_| FamilyError::Syntax(whole.to_string()))
}

impl FromStr for PatternSpec {
    type Err = FamilyError;

    /// Accepts `P23`, `C6`, `W6`, `J2,3`, `2P23`, `K5`, `K3+K1`; case-insensitive.
    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let upper = text.to_ascii_uppercase();
        let syntax = || FamilyError::Syntax(text.to_string());
        if upper.is_empty() || upper.chars().any(char::is_whitespace) {
            return Err(syntax());
        }
        let spec = if upper.contains('+') {
            let sizes = upper
                .split('+')
                .map(|part| {
                    part.strip_prefix('K')
                        .ok_or_else(syntax)
                        .and_then(|k| number(k, text))
                })
                .collect::<Result<Vec<_>, _>>()?;
            PatternSpec::CliqueUnion(sizes)
        } else if let Some(rest) = upper.strip_prefix('J') {
            let (s, m) = rest.split_once(',').ok_or_else(syntax)?;
            PatternSpec::Jahangir {
                s: number(s, text)?,
                m: number(m, text)?,
            }
        } else if let Some(rest) = upper.strip_prefix('C') {
            PatternSpec::Cycle(number(rest, text)?)
        } else if let Some(rest) = upper.strip_prefix('W') {
            PatternSpec::Wheel(number(rest, text)?)
        } else if let Some(rest) = upper.strip_prefix('K') {
            PatternSpec::Complete(number(rest, text)?)
        } else if let Some(rest) = upper.strip_prefix('P') {
            PatternSpec::Path(number(rest, text)?)
        } else if let Some((t, n)) = upper.split_once('P') {
            PatternSpec::DisjointPaths {
                t: number(t, text)?,
                n: number(n, text)?,
            }
        } else {
            return Err(syntax());
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<PatternSpec> for String {
    fn from(spec: PatternSpec) -> String {
        spec.to_string()
    }
}

impl TryFrom<String> for PatternSpec {
    type Error = FamilyError;

    fn try_from(text: String) -> Result<Self, FamilyError> {
        text.parse()
    }
}

/// Which lower-bound construction to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum TheoremCase {
    /// `K_{n-1} ∪ K_{sm/2-1}`, s even.
    Thm1 { n: usize, s: usize, m: usize },
    /// `2K_{n-1}`, s odd, m even.
    Thm2EvenM { n: usize, s: usize, m: usize },
    /// `K_1 ∪ 2K_{n-1}`, s odd, m odd.
    Thm2OddM { n: usize, s: usize, m: usize },
    /// `K_{sm/2-1} ∪ K_{tn-1}`, s even.
    Thm3 {
        t: usize,
        n: usize,
        s: usize,
        m: usize,
    },
}

impl TheoremCase {
    pub fn jahangir(&self) -> PatternSpec {
        match *self {
            TheoremCase::Thm1 { s, m, .. }
            | TheoremCase::Thm2EvenM { s, m, .. }
            | TheoremCase::Thm2OddM { s, m, .. }
            | TheoremCase::Thm3 { s, m, .. } => PatternSpec::Jahangir { s, m },
        }
    }

    /// The path structure the lower-bound graph must avoid.
    pub fn path_target(&self) -> PatternSpec {
        match *self {
            TheoremCase::Thm3 { t, n, .. } => PatternSpec::DisjointPaths { t, n },
            TheoremCase::Thm1 { n, .. }
            | TheoremCase::Thm2EvenM { n, .. }
            | TheoremCase::Thm2OddM { n, .. } => PatternSpec::Path(n),
        }
    }

    /// Structural hypotheses only (parities and ranges); the lower bound
    /// construction is valid for every `n >= 1`.
    pub fn check(&self) -> Result<(), FamilyError> {
        let fail = |msg: String| Err(FamilyError::Hypothesis(msg));
        match *self {
            TheoremCase::Thm1 { n, s, m } | TheoremCase::Thm3 { n, s, m, .. } => {
                if s < 2 || s % 2 != 0 {
                    return fail(format!("s = {s} must be even and >= 2"));
                }
                if m < 3 {
                    return fail(format!("m = {m} must be >= 3"));
                }
                if n < 1 {
                    return fail("n must be >= 1".into());
                }
                if let TheoremCase::Thm3 { t, .. } = *self {
                    if t < 1 {
                        return fail("t must be >= 1".into());
                    }
                }
                Ok(())
            }
            TheoremCase::Thm2EvenM { n, s, m } => {
                if s < 3 || s % 2 == 0 {
                    return fail(format!("s = {s} must be odd and >= 3"));
                }
                if m < 2 || m % 2 != 0 {
                    return fail(format!("m = {m} must be even and >= 2"));
                }
                if n < 2 {
                    return fail("n must be >= 2".into());
                }
                Ok(())
            }
            TheoremCase::Thm2OddM { n, s, m } => {
                if s < 3 || s % 2 == 0 {
                    return fail(format!("s = {s} must be odd and >= 3"));
                }
                if m < 3 || m % 2 == 0 {
                    return fail(format!("m = {m} must be odd and >= 3"));
                }
                if n < 2 {
                    return fail("n must be >= 2".into());
                }
                Ok(())
            }
        }
    }

    /// Clique sizes of the construction, in layout order.
    pub fn clique_sizes(&self) -> Vec<usize> {
        match *self {
            TheoremCase::Thm1 { n, s, m } => vec![n - 1, s * m / 2 - 1],
            TheoremCase::Thm2EvenM { n, .. } => vec![n - 1, n - 1],
            TheoremCase::Thm2OddM { n, .. } => vec![1, n - 1, n - 1],
            TheoremCase::Thm3 { t, n, s, m } => vec![s * m / 2 - 1, t * n - 1],
        }
    }
}

/// The lower-bound graph of the given case.
pub fn extremal_graph(case: TheoremCase) -> Result<Graph, FamilyError> {
    case.check()?;
    Ok(clique_union(&case.clique_sizes()))
}

const MULTIPARTITE_SEARCH_CAP: usize = 24;

/// Whether `K_{p_1,...,p_r}` contains `C_len`.
///
/// Two parts: exact rule (`len` even and the smaller part has at least
/// `len / 2` vertices). Three or more parts: explicit search, only while the
/// total order is at most 24.
pub fn multipartite_contains_even_cycle(
    part_sizes: &[usize],
    cycle_len: usize,
) -> Result<bool, FamilyError> {
    assert!(!part_sizes.is_empty(), "part list must be nonempty");
    assert!(cycle_len >= 3, "cycle length must be >= 3");
    let parts: Vec<usize> = part_sizes.iter().copied().filter(|&p| p > 0).collect();
    match parts.len() {
        0 | 1 => Ok(false),
        2 => Ok(cycle_len.is_multiple_of(2) && parts[0].min(parts[1]) >= cycle_len / 2),
        r => {
            let order: usize = parts.iter().sum();
            if order > MULTIPARTITE_SEARCH_CAP {
                return Err(FamilyError::Unsupported { parts: r, order });
            }
            let host = complete_multipartite(&parts);
            match find_subgraph(&host, &PatternSpec::Cycle(cycle_len), u64::MAX) {
                SearchOutcome::Found(_) => Ok(true),
                SearchOutcome::Absent => Ok(false),
                SearchOutcome::Unknown => unreachable!("unbounded search cannot exhaust"),
            }
        }
    }
}

/// Whether the complete multipartite graph with the given part sizes contains
/// `pattern` as a subgraph.
///
/// Exact: such an embedding exists iff the pattern's vertices split into
/// independent sets, one per part, each no larger than its part.
pub fn multipartite_admits(part_sizes: &[usize], pattern: &Graph) -> bool {
    fn assign(v: usize, pattern: &Graph, colour: &mut Vec<usize>, room: &mut [usize]) -> bool {
        if v == pattern.order() {
            return true;
        }
        for c in 0..room.len() {
            if room[c] == 0 || (0..v).any(|u| colour[u] == c && pattern.has_edge(u, v)) {
                continue;
            }
            // parts of equal remaining room are interchangeable for unused colours
            let first_use = !colour.contains(&c);
            if first_use && (0..c).any(|d| !colour.contains(&d) && room[d] == room[c]) {
                continue;
            }
            room[c] -= 1;
            colour.push(c);
            if assign(v + 1, pattern, colour, room) {
                return true;
            }
            colour.pop();
            room[c] += 1;
        }
        false
    }
    let mut room = part_sizes.to_vec();
    assign(
        0,
        pattern,
        &mut Vec::with_capacity(pattern.order()),
        &mut room,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> PatternSpec {
        text.parse().unwrap()
    }

    #[test]
    fn jahangir_and_wheel_sizes() {
        let j = PatternSpec::jahangir(2, 3).build().unwrap();
        assert_eq!((j.order(), j.edge_count()), (7, 9));
        let w = PatternSpec::Wheel(4).build().unwrap();
        assert_eq!((w.order(), w.edge_count()), (5, 8));
        let u = spec("K3+K1").build().unwrap();
        assert_eq!((u.order(), u.edge_count()), (4, 3));
    }

    #[test]
    fn jahangir_degrees_for_small_parameters() {
        for s in 2..=5 {
            for m in 2..=5 {
                let j = PatternSpec::jahangir(s, m).build().unwrap();
                let rim = s * m;
                assert_eq!(j.order(), rim + 1);
                assert_eq!(j.edge_count(), rim + m, "J{s},{m}");
                assert_eq!(j.degree(rim), m);
                for v in 0..rim {
                    let expected = if v % s == 0 { 3 } else { 2 };
                    assert_eq!(j.degree(v), expected, "J{s},{m} rim vertex {v}");
                }
            }
        }
    }

    #[test]
    fn jahangir_is_spanning_subgraph_of_wheel() {
        for s in 2..=5 {
            for m in 2..=5 {
                let j = PatternSpec::jahangir(s, m).build().unwrap();
                let w = PatternSpec::Wheel(s * m).build().unwrap();
                assert!(j.edges().all(|(u, v)| w.has_edge(u, v)));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for text in ["P23", "C6", "W6", "J2,3", "2P23", "K5", "K3+K1"] {
            assert_eq!(spec(text).to_string(), text);
        }
        assert_eq!(spec("j2,3"), PatternSpec::jahangir(2, 3));
        assert_eq!(spec("2p23"), PatternSpec::DisjointPaths { t: 2, n: 23 });
        assert_eq!(spec("k3+k1"), PatternSpec::CliqueUnion(vec![3, 1]));
        assert!(matches!(
            "J1,3".parse::<PatternSpec>(),
            Err(FamilyError::Invalid {
                constraint: "requires s >= 2",
                ..
            })
        ));
        for bad in [
            "", "P 3", "X4", "J2", "C2", "W2", "K3+", "P", "J2,3,4", "-P3",
        ] {
            assert!(bad.parse::<PatternSpec>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn extremal_constructions() {
        let g = extremal_graph(TheoremCase::Thm1 { n: 23, s: 2, m: 3 }).unwrap();
        assert_eq!(g.order(), 24);
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![22, 2]);

        let g = extremal_graph(TheoremCase::Thm2OddM { n: 32, s: 3, m: 3 }).unwrap();
        assert_eq!(g.order(), 63);
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 31, 31]);

        let g = extremal_graph(TheoremCase::Thm3 {
            t: 2,
            n: 23,
            s: 2,
            m: 3,
        })
        .unwrap();
        assert_eq!(g.order(), 47);
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 45]);

        assert!(extremal_graph(TheoremCase::Thm1 { n: 23, s: 3, m: 3 }).is_err());
        assert!(extremal_graph(TheoremCase::Thm2EvenM { n: 12, s: 2, m: 2 }).is_err());
        assert!(extremal_graph(TheoremCase::Thm2OddM { n: 12, s: 3, m: 2 }).is_err());
    }

    #[test]
    fn even_cycle_rule() {
        assert_eq!(multipartite_contains_even_cycle(&[2, 2], 4), Ok(true));
        assert_eq!(multipartite_contains_even_cycle(&[22, 2], 6), Ok(false));
        assert_eq!(multipartite_contains_even_cycle(&[3, 3], 6), Ok(true));
        assert_eq!(multipartite_contains_even_cycle(&[3, 3], 5), Ok(false));
        assert_eq!(multipartite_contains_even_cycle(&[1, 1, 1], 3), Ok(true));
        assert_eq!(multipartite_contains_even_cycle(&[1, 2, 2], 5), Ok(true));
        assert!(matches!(
            multipartite_contains_even_cycle(&[10, 10, 10], 6),
            Err(FamilyError::Unsupported {
                parts: 3,
                order: 30
            })
        ));
    }

    #[test]
    fn multipartite_admits_matches_search() {
        let patterns = ["C4", "C5", "C6", "J2,2", "W4", "P5", "K3"];
        let part_lists: [&[usize]; 6] = [
            &[2, 2],
            &[3, 3],
            &[1, 2, 2],
            &[1, 3, 3],
            &[2, 2, 2],
            &[5, 1],
        ];
        for p in patterns {
            let pattern = spec(p).build().unwrap();
            for parts in part_lists {
                let host = complete_multipartite(parts);
                let searched = find_subgraph(&host, &spec(p), u64::MAX).is_found();
                assert_eq!(
                    multipartite_admits(parts, &pattern),
                    searched,
                    "{p} in {parts:?}"
                );
            }
        }
    }
}
