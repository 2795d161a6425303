use crate::embedding::{longest_path, PathWitness};
use crate::graph::{Graph, VertexSet};

use super::WitnessError;

/// Greedy sequence of vertex-disjoint maximum paths `L_1, L_2, ...`.
///
/// `L_i` is a longest path of `F` restricted to the vertices not used by
/// `L_1..L_{i-1}`. When that residual has no edges, `L_i` is made of its two
/// least vertices and the pair is recorded as an augmented edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<PathWitness>,
    pub augmented_edges: Vec<(usize, usize)>,
    pub remainder: VertexSet,
}

impl PathSystem {
    /// `(first, last)` of every path.
    pub fn endpoints(&self) -> Vec<(usize, usize)> {
        self.paths
            .iter()
            .map(|p| {
                (
                    p.first().expect("paths are nonempty"),
                    p.last().expect("paths are nonempty"),
                )
            })
            .collect()
    }

    /// `F` plus the augmented edges.
    pub fn augmented_host(&self, f: &Graph) -> Graph {
        self.augmented_edges.iter().fold(f.clone(), |g, &(u, v)| {
            g.add_edge(u, v).expect("augmented edge is valid")
        })
    }

    /// Re-derives every structural invariant, including maximality of each
    /// path in its residual, against `f` restricted to `within`.
    pub fn check(&self, f: &Graph, within: &VertexSet, budget: u64) -> Result<(), String> {
        let aug = self.augmented_host(f);
        let mut residual = within.clone();
        for (i, path) in self.paths.iter().enumerate() {
            let label = i + 1;
            for &v in path.vertices() {
                if !residual.contains(v) {
                    return Err(format!("L_{label} uses vertex {v} outside its residual"));
                }
                residual.remove(v);
            }
            if path
                .vertices()
                .windows(2)
                .any(|w| !aug.has_edge(w[0], w[1]))
            {
                return Err(format!("L_{label} is not a path of the augmented host"));
            }
            let mut before = residual.clone();
            for &v in path.vertices() {
                before.insert(v);
            }
            let (local, _) = f.induced(&before).map_err(|e| e.to_string())?;
            let fabricated = path.len() == 2 && !f.has_edge(path.at(1), path.at(2));
            if fabricated {
                if !local.is_edgeless() {
                    return Err(format!(
                        "L_{label} is fabricated but its residual has edges"
                    ));
                }
                let pair = (path.at(1), path.at(2));
                if !self.augmented_edges.contains(&pair) {
                    return Err(format!("L_{label} is fabricated but not recorded"));
                }
            } else {
                let best = longest_path(&local, budget).map_err(|e| e.to_string())?;
                if best.len() != path.len() {
                    return Err(format!(
                        "L_{label} has {} vertices, residual maximum is {}",
                        path.len(),
                        best.len()
                    ));
                }
            }
        }
        if residual != self.remainder {
            return Err("remainder does not match the unused vertices".into());
        }
        Ok(())
    }
}

/// Path system over all of `f`.
pub fn build_path_system(f: &Graph, count: usize, budget: u64) -> Result<PathSystem, WitnessError> {
    build_path_system_within(f, &f.vertices(), None, count, budget)
}

/// Path system over `f` restricted to `within`; `first` (if given) must be a
/// longest path of that restriction and is used as `L_1`.
pub fn build_path_system_within(
    f: &Graph,
    within: &VertexSet,
    first: Option<PathWitness>,
    count: usize,
    budget: u64,
) -> Result<PathSystem, WitnessError> {
    if count == 0 {
        return Err(WitnessError::Precondition(
            "path system needs count >= 1".into(),
        ));
    }
    let mut residual = within.clone();
    let mut paths = Vec::with_capacity(count);
    let mut augmented_edges = Vec::new();
    let mut first = first;
    while paths.len() < count {
        let exhausted = WitnessError::ResidualExhausted {
            built: paths.len(),
            requested: count,
        };
        let path = match first.take() {
            Some(p) => p,
            None => {
                let (local, lift) = f.induced(&residual).expect("residual lies in the host");
                if local.is_edgeless() {
                    if local.order() < 2 {
                        return Err(exhausted);
                    }
                    augmented_edges.push((lift[0], lift[1]));
                    PathWitness(vec![lift[0], lift[1]])
                } else {
                    longest_path(&local, budget)?.lifted(&lift)
                }
            }
        };
        if path.is_empty() {
            return Err(exhausted);
        }
        for &v in path.vertices() {
            residual.remove(v);
        }
        paths.push(path);
    }
    Ok(PathSystem {
        paths,
        augmented_edges,
        remainder: residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::DEFAULT_BUDGET;
    use crate::families::PatternSpec;

    #[test]
    fn cliques_then_fabricated_edge() {
        let f = Graph::complete(5)
            .disjoint_union(&Graph::complete(5))
            .disjoint_union(&Graph::empty(4));
        let sys = build_path_system(&f, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(sys.paths[0].vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(sys.paths[1].vertices(), &[5, 6, 7, 8, 9]);
        assert_eq!(sys.paths[2].vertices(), &[10, 11]);
        assert_eq!(sys.augmented_edges, vec![(10, 11)]);
        assert_eq!(sys.remainder.to_vec(), vec![12, 13]);
        sys.check(&f, &f.vertices(), DEFAULT_BUDGET).unwrap();
    }

    #[test]
    fn single_path_host() {
        let f = PatternSpec::Path(9).build().unwrap();
        let sys = build_path_system(&f, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(sys.paths[0].vertices(), &(0..9).collect::<Vec<_>>()[..]);
        assert!(sys.remainder.is_empty());
    }

    #[test]
    fn edgeless_host() {
        let f = Graph::empty(6);
        let sys = build_path_system(&f, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(sys.augmented_edges, vec![(0, 1), (2, 3)]);
        assert_eq!(sys.remainder.to_vec(), vec![4, 5]);
        assert_eq!(sys.endpoints(), vec![(0, 1), (2, 3)]);
        sys.check(&f, &f.vertices(), DEFAULT_BUDGET).unwrap();
    }

    #[test]
    fn exhaustion() {
        let f = Graph::empty(3);
        assert_eq!(
            build_path_system(&f, 2, DEFAULT_BUDGET),
            Err(WitnessError::ResidualExhausted {
                built: 1,
                requested: 2
            })
        );
    }

    #[test]
    fn check_rejects_short_path() {
        let f = PatternSpec::Path(5).build().unwrap();
        let sys = PathSystem {
            paths: vec![PathWitness(vec![0, 1, 2])],
            augmented_edges: vec![],
            remainder: VertexSet::from_vertices(5, [3, 4]),
        };
        assert!(sys.check(&f, &f.vertices(), DEFAULT_BUDGET).is_err());
    }
}
