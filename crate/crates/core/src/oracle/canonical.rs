use std::fmt;

use crate::graph::Graph;

use super::OracleError;

pub const CANONICAL_CAP: usize = 16;

/// Isomorphism-invariant encoding: the order plus the packed upper triangle
/// of the canonically relabelled adjacency matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code[bit / 8] & (0x80 >> (bit % 8)) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edges(n, edges).expect("code describes a simple graph")
    }

    /// Order byte followed by the code, for checksumming.
    pub(crate) fn bytes(&self) -> impl Iterator<Item = u8> + '_ {
        std::iter::once(self.order as u8).chain(self.code.iter().copied())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({}:", self.order)?;
        for b in &self.code {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, OracleError> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form together with the labelling: `labeling[i]` is the vertex
/// of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), OracleError> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return Err(OracleError::CapExceeded {
            order: n,
            cap: CANONICAL_CAP,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let mut search = Search {
        adj: &adj,
        best: None,
    };
    search.descend(vec![(0..n).collect()]);
    let (code, labeling) = search.best.unwrap_or_default();
    Ok((CanonicalForm { order: n, code }, labeling))
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    adj: &'a [u32],
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, partition: Partition) {
        let partition = refine(self.adj, partition);
        let Some(target) = partition.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = partition.into_iter().flatten().collect();
            let code = encode(self.adj, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = &partition[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            // swapping twins is an automorphism fixing everything individualized so far
            if tried.iter().any(|&u| twins(self.adj, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(partition.len() + 1);
            next.extend(partition[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend(partition[target + 1..].iter().cloned());
            self.descend(next);
        }
    }
}

fn twins(adj: &[u32], u: usize, v: usize) -> bool {
    let strip = !((1u32 << u) | (1u32 << v));
    adj[u] & strip == adj[v] & strip
}

/// Splits cells by neighbour counts into other cells until stable. Sub-cells
/// are ordered by count, so the result depends only on the structure.
fn refine(adj: &[u32], mut partition: Partition) -> Partition {
    'outer: loop {
        for w in 0..partition.len() {
            let mask = partition[w].iter().fold(0u32, |acc, &v| acc | 1 << v);
            for x in 0..partition.len() {
                if partition[x].len() < 2 {
                    continue;
                }
                let count = |v: usize| (adj[v] & mask).count_ones();
                let first = count(partition[x][0]);
                if partition[x].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut cell = std::mem::take(&mut partition[x]);
                cell.sort_by_key(|&v| (count(v), v));
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for v in cell {
                    if last != Some(count(v)) {
                        pieces.push(Vec::new());
                        last = Some(count(v));
                    }
                    pieces.last_mut().expect("piece pushed").push(v);
                }
                partition.splice(x..=x, pieces);
                continue 'outer;
            }
        }
        return partition;
    }
}

fn encode(adj: &[u32], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u8; bits.div_ceil(8)];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if adj[order[i]] & (1 << order[j]) != 0 {
                code[bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::PatternSpec;

    fn build(text: &str) -> Graph {
        text.parse::<PatternSpec>().unwrap().build().unwrap()
    }

    #[test]
    fn relabelling_invariance() {
        let c5 = build("C5");
        let form = canonical_form(&c5).unwrap();
        let relabelled = c5.permute(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(canonical_form(&relabelled).unwrap(), form);
        assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }

    #[test]
    fn distinguishes_small_trees() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(
            canonical_form(&build("P4")).unwrap(),
            canonical_form(&star).unwrap()
        );
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for n in [0, 1, 16] {
            let form = canonical_form(&Graph::complete(n)).unwrap();
            assert_eq!(form.to_graph().edge_count(), n * n.saturating_sub(1) / 2);
            canonical_form(&Graph::empty(n)).unwrap();
        }
        assert!(canonical_form(&Graph::empty(17)).is_err());
    }

    #[test]
    fn labeling_maps_onto_form() {
        let g = build("J2,3");
        let (form, labeling) = canonical_labeling(&g).unwrap();
        let mut perm = vec![0; g.order()];
        for (pos, &v) in labeling.iter().enumerate() {
            perm[v] = pos;
        }
        assert_eq!(g.permute(&perm).unwrap(), form.to_graph());
    }
}
