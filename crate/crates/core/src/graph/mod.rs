//! Dense simple undirected graphs.
//!
//! A [`Graph`] stores one bitset row per vertex. Values are immutable once
//! built: operations such as [`Graph::add_edge`] return a new graph, so a host
//! and its augmented copy can be kept side by side.

mod graph6;
mod set;

use std::collections::VecDeque;
use std::fmt;

pub use graph6::Graph6Error;
pub use set::VertexSet;

use set::word_count;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0} is not allowed")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex set has universe {found}, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// Finite simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
}

/// Mutable staging area for building a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        Self {
            graph: Graph::empty(order),
        }
    }

    pub fn from_graph(graph: Graph) -> Self {
        Self { graph }
    }

    pub fn order(&self) -> usize {
        self.graph.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.graph.set(u, v, true);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u != v {
            self.graph.set(u, v, false);
        }
        Ok(self)
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        let stride = word_count(order);
        Self {
            order,
            stride,
            rows: vec![0; stride * order],
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.set(u, v, true);
            }
        }
        g
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = GraphBuilder::new(order);
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    fn set(&mut self, u: usize, v: usize, present: bool) {
        let (ru, rv) = (u * self.stride + v / 64, v * self.stride + u / 64);
        if present {
            self.rows[ru] |= 1 << (v % 64);
            self.rows[rv] |= 1 << (u % 64);
        } else {
            self.rows[ru] &= !(1 << (v % 64));
            self.rows[rv] &= !(1 << (u % 64));
        }
    }

    /// Raw bitset row of `v`.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Adjacency test. Out-of-range vertices are never adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.order, self.row(v).to_vec())
    }

    /// Neighbours of `x` inside `within`.
    pub fn neighbors_in(&self, x: usize, within: &VertexSet) -> VertexSet {
        let mut set = self.neighbors(x);
        set.intersect_with(within.words());
        set
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// Places `other` after `self`, shifting its vertices by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let mut g = Graph::empty(self.order + other.order);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(u + shift, v + shift, true);
        }
        g
    }

    /// Induced subgraph on `subset`. Returns the subgraph and the map from its
    /// vertex indices back to `self` (ascending, so local order matches global order).
    pub fn induced(&self, subset: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if subset.universe() != self.order {
            return Err(GraphError::UniverseMismatch {
                expected: self.order,
                found: subset.universe(),
            });
        }
        let map = subset.to_vec();
        Ok((self.induced_by(&map)?, map))
    }

    /// Induced subgraph with local vertex `i` standing for `vertices[i]`.
    pub fn induced_by(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(GraphError::Loop(u));
                }
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Returns a copy with the edge `uv` present.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut builder = GraphBuilder::from_graph(self.clone());
        builder.add_edge(u, v)?;
        Ok(builder.build())
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(
            perm.len(),
            self.order,
            "permutation length must equal order"
        );
        let mut g = Graph::empty(self.order);
        for &p in perm {
            g.check_vertex(p)?;
        }
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        Ok(g)
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u).iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether every vertex in `vertices` is adjacent to every other one.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        Ok(graph6::decode(text)?)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn complement_of_clique_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        assert_eq!(Graph::empty(0).complement(), Graph::empty(0));
    }

    #[test]
    fn complement_of_clique_union_is_complete_bipartite() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        let c = g.complement();
        assert_eq!(c.edge_count(), 6);
        for u in 0..3 {
            for v in 3..5 {
                assert!(c.has_edge(u, v));
            }
        }
        assert!(!c.has_edge(0, 1) && !c.has_edge(3, 4));
    }

    #[test]
    fn disjoint_union_counts() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        assert_eq!((g.order(), g.edge_count()), (5, 4));
        assert_eq!(
            Graph::empty(2).disjoint_union(&Graph::empty(3)),
            Graph::empty(5)
        );
        let pp = path(4).disjoint_union(&path(4));
        assert_eq!((pp.order(), pp.edge_count()), (8, 6));
        assert_eq!(pp.components().len(), 2);
    }

    #[test]
    fn induced_arc_of_cycle_is_path() {
        let set = VertexSet::from_vertices(5, [0, 1, 2]);
        let (g, map) = cycle(5).induced(&set).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let c5 = cycle(5);
        assert_eq!(c5.induced(&c5.vertices()).unwrap().0, c5);
        let k = Graph::complete(5)
            .induced(&VertexSet::from_vertices(5, [0, 2, 4]))
            .unwrap()
            .0;
        assert_eq!(k, Graph::complete(3));
    }

    #[test]
    fn induced_rejects_foreign_vertices() {
        assert!(matches!(
            path(3).induced_by(&[0, 5]),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(path(3).induced(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn add_edge_is_persistent_and_idempotent() {
        let e = Graph::empty(2);
        let k2 = e.add_edge(0, 1).unwrap();
        assert_eq!(k2, Graph::complete(2));
        assert!(e.is_edgeless());
        assert_eq!(k2.add_edge(0, 1).unwrap(), k2);
        assert_eq!(e.add_edge(0, 0), Err(GraphError::Loop(0)));
        assert!(e.add_edge(0, 2).is_err());
    }

    #[test]
    fn large_orders_cross_word_boundaries() {
        let g = Graph::complete(70);
        assert_eq!(g.edge_count(), 70 * 69 / 2);
        assert_eq!(g.degree(65), 69);
        assert!(g.complement().is_edgeless());
    }
}
