use crate::families::PatternSpec;
use crate::graph::{Graph, VertexSet};

use super::{check_map, Budget, Embedding, SearchOutcome};

/// Searches `host` for a (not necessarily induced) copy of `spec`.
///
/// Wheels and Jahangir graphs are searched hub first, then around the rim, so
/// that spoke positions are drawn from the hub's neighbourhood.
pub fn find_subgraph(host: &Graph, spec: &PatternSpec, budget: u64) -> SearchOutcome<Embedding> {
    let pattern = match spec.build() {
        Ok(p) => p,
        Err(_) => return SearchOutcome::Absent,
    };
    let order = match *spec {
        PatternSpec::Wheel(k) => hub_first(k),
        PatternSpec::Jahangir { s, m } => hub_first(s * m),
        _ => connectivity_order(&pattern),
    };
    search(host, &pattern, &order, budget).map(|map| {
        let emb = Embedding {
            pattern: spec.clone(),
            host_order: host.order(),
            map,
        };
        debug_assert!(super::verify_embedding(host, &emb));
        emb
    })
}

/// Same search for an arbitrary pattern graph; returns the raw vertex map.
pub fn find_pattern(host: &Graph, pattern: &Graph, budget: u64) -> SearchOutcome<Vec<usize>> {
    search(host, pattern, &connectivity_order(pattern), budget)
}

fn hub_first(rim: usize) -> Vec<usize> {
    std::iter::once(rim).chain(0..rim).collect()
}

/// Greedy order: next is the vertex with most already-placed neighbours,
/// then highest degree, then lowest index.
fn connectivity_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    order: &'a [usize],
    /// For each position, earlier positions holding pattern neighbours.
    back: Vec<Vec<usize>>,
    host_degree: Vec<usize>,
    pattern_degree: Vec<usize>,
    images: Vec<usize>,
    used: VertexSet,
    budget: Budget,
}

fn search(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    budget: u64,
) -> SearchOutcome<Vec<usize>> {
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return SearchOutcome::Absent;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| (0..i).filter(|&j| pattern.has_edge(order[j], v)).collect())
        .collect();
    let mut state = Search {
        host,
        order,
        back,
        host_degree: (0..host.order()).map(|v| host.degree(v)).collect(),
        pattern_degree: (0..pattern.order()).map(|v| pattern.degree(v)).collect(),
        images: Vec::with_capacity(order.len()),
        used: VertexSet::empty(host.order()),
        budget: Budget::new(budget),
    };
    match state.extend() {
        Some(true) => {
            let mut map = vec![0; pattern.order()];
            for (i, &v) in order.iter().enumerate() {
                map[v] = state.images[i];
            }
            debug_assert!(check_map(host, pattern, &map).is_ok());
            SearchOutcome::Found(map)
        }
        Some(false) => SearchOutcome::Absent,
        None => SearchOutcome::Unknown,
    }
}

impl Search<'_> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn extend(&mut self) -> Option<bool> {
        let depth = self.images.len();
        if depth == self.order.len() {
            return Some(true);
        }
        let mut candidates = match self.back[depth].first() {
            Some(&j) => self.host.neighbors(self.images[j]),
            None => self.host.vertices(),
        };
        for &j in self.back[depth].iter().skip(1) {
            candidates.intersect_with(self.host.row(self.images[j]));
        }
        candidates.difference_with(self.used.words());
        let need = self.pattern_degree[self.order[depth]];
        for c in candidates.iter() {
            if self.host_degree[c] < need {
                continue;
            }
            if !self.budget.spend(1) {
                return None;
            }
            self.images.push(c);
            self.used.insert(c);
            let found = self.extend();
            self.used.remove(c);
            if found != Some(false) {
                return found;
            }
            self.images.pop();
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_embedding;

    fn spec(text: &str) -> PatternSpec {
        text.parse().unwrap()
    }

    #[test]
    fn clique_contains_jahangir() {
        let found = find_subgraph(&Graph::complete(7), &spec("J2,3"), 1_000);
        let emb = found.found().unwrap();
        assert!(verify_embedding(&Graph::complete(7), &emb));
    }

    #[test]
    fn bipartite_complement_lacks_jahangir() {
        let host = Graph::complete(22)
            .disjoint_union(&Graph::complete(2))
            .complement();
        assert_eq!(
            find_subgraph(&host, &spec("J2,3"), 1 << 30),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn too_small_host() {
        let c6 = spec("C6").build().unwrap();
        assert_eq!(find_subgraph(&c6, &spec("P7"), 10), SearchOutcome::Absent);
        assert!(find_subgraph(&c6, &spec("P6"), 100).is_found());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // K_{5,5} has no triangle but the search must work to prove it.
        let host = crate::families::complete_multipartite(&[5, 5]);
        assert_eq!(find_subgraph(&host, &spec("K3"), 3), SearchOutcome::Unknown);
        assert_eq!(
            find_subgraph(&host, &spec("K3"), 1 << 20),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn wheel_found_in_dense_host() {
        let host = Graph::complete(9).add_edge(0, 1).unwrap();
        let emb = find_subgraph(&host, &spec("W6"), 1 << 20).found().unwrap();
        assert_eq!(emb.map.len(), 7);
        assert!(verify_embedding(&host, &emb));
    }
}
