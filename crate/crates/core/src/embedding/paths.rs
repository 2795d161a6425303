//! Exact longest paths and path packings.
//!
//! Ties are broken towards the lexicographically least vertex sequence, which
//! always starts at the lower-indexed endpoint. Each connected component is
//! handled separately: up to [`DP_COMPONENT_CAP`] vertices by a dynamic
//! programme over (vertex subset, endpoint) states, above that by a
//! depth-first branch and bound in lexicographic order.

use crate::graph::{Graph, VertexSet};

use super::{Budget, BudgetExhausted, PathWitness, SearchOutcome};

pub const DP_COMPONENT_CAP: usize = 24;

/// Node budget for the depth-first attempt tried before the dynamic programme.
const QUICK_DFS_NODES: u64 = 50_000;

/// An exact maximum-length path of `g` (empty for the order-0 graph).
pub fn longest_path(g: &Graph, budget: u64) -> Result<PathWitness, BudgetExhausted> {
    let budget = Budget::new(budget);
    let mut best: Vec<usize> = Vec::new();
    for comp in g.components() {
        if comp.len() < best.len() {
            continue;
        }
        let local = g.induced_by(&comp).expect("component vertices are valid");
        let path = if comp.len() <= DP_COMPONENT_CAP {
            let adj = masks(&local);
            let table = endpoint_table(&adj, &budget)?;
            let len = (1..table.len())
                .filter(|&m| table[m] != 0)
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap_or(0);
            lex_least_of_len(&adj, &table, len).expect("a path of the maximum length exists")
        } else {
            branch_and_bound(&local, &budget)?
        };
        let path: Vec<usize> = path.into_iter().map(|v| comp[v]).collect();
        if path.len() > best.len() || (path.len() == best.len() && path < best) {
            best = path;
        }
    }
    Ok(PathWitness(best))
}

/// The lexicographically least path on exactly `n` vertices, if any path has
/// at least `n` vertices.
pub fn find_path_at_least(g: &Graph, n: usize, budget: u64) -> SearchOutcome<PathWitness> {
    if n == 0 {
        return SearchOutcome::Found(PathWitness(Vec::new()));
    }
    let budget = Budget::new(budget);
    let mut best: Option<Vec<usize>> = None;
    let mut unknown = false;
    for comp in g.components() {
        if comp.len() < n || best.as_ref().is_some_and(|b| b[0] < comp[0]) {
            continue;
        }
        let local = g.induced_by(&comp).expect("component vertices are valid");
        match n_path_in_component(&local, n, &budget) {
            SearchOutcome::Found(p) => {
                let p: Vec<usize> = p.into_iter().map(|v| comp[v]).collect();
                if best.as_ref().is_none_or(|b| p < *b) {
                    best = Some(p);
                }
            }
            SearchOutcome::Absent => {}
            SearchOutcome::Unknown => unknown = true,
        }
    }
    match best {
        Some(p) => SearchOutcome::Found(PathWitness(p)),
        None if unknown => SearchOutcome::Unknown,
        None => SearchOutcome::Absent,
    }
}

/// `t` pairwise vertex-disjoint paths of exactly `n` vertices each.
///
/// Greedy with backtracking: take the next `n`-vertex path in lexicographic
/// order, delete it, recurse; a component of size `c` can host at most
/// `c / n` of the paths, which prunes hopeless branches.
pub fn find_disjoint_paths(
    g: &Graph,
    t: usize,
    n: usize,
    budget: u64,
) -> SearchOutcome<Vec<PathWitness>> {
    assert!(n >= 1, "path length must be >= 1");
    let budget = Budget::new(budget);
    match pack(g, g.vertices(), t, n, &budget) {
        Ok(Some(paths)) => SearchOutcome::Found(paths),
        Ok(None) => SearchOutcome::Absent,
        Err(_) => SearchOutcome::Unknown,
    }
}

fn pack(
    g: &Graph,
    alive: VertexSet,
    t: usize,
    n: usize,
    budget: &Budget,
) -> Result<Option<Vec<PathWitness>>, BudgetExhausted> {
    if t == 0 {
        return Ok(Some(Vec::new()));
    }
    let (sub, map) = g.induced(&alive).expect("alive set belongs to g");
    let capacity: usize = sub.components().iter().map(|c| c.len() / n).sum();
    if capacity < t {
        return Ok(None);
    }
    let mut outcome = Ok(None);
    let mut path = Vec::with_capacity(n);
    let mut visited = VertexSet::empty(sub.order());
    for start in 0..sub.order() {
        let stop = walk(
            &sub,
            start,
            n,
            &mut path,
            &mut visited,
            budget,
            &mut |p: &[usize]| {
                if p[0] > p[n - 1] {
                    return None;
                }
                let global: Vec<usize> = p.iter().map(|&v| map[v]).collect();
                let mut rest = alive.clone();
                for &v in &global {
                    rest.remove(v);
                }
                match pack(g, rest, t - 1, n, budget) {
                    Ok(Some(mut others)) => {
                        others.insert(0, PathWitness(global));
                        Some(Ok(Some(others)))
                    }
                    Ok(None) => None,
                    Err(e) => Some(Err(e)),
                }
            },
        );
        match stop {
            Ok(Some(result)) => {
                outcome = result;
                break;
            }
            Ok(None) => {}
            Err(e) => return Err(e),
        }
    }
    outcome
}

/// Depth-first enumeration of `n`-vertex paths starting at `start`, in
/// lexicographic order. `visit` returns `Some` to stop the walk.
fn walk<R>(
    g: &Graph,
    start: usize,
    n: usize,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
    budget: &Budget,
    visit: &mut dyn FnMut(&[usize]) -> Option<R>,
) -> Result<Option<R>, BudgetExhausted> {
    if !budget.spend(1) {
        return Err(budget.exhausted());
    }
    path.push(start);
    visited.insert(start);
    let result = if path.len() == n {
        Ok(visit(path))
    } else if path.len() + reach(g, start, visited) < n {
        Ok(None)
    } else {
        let mut result = Ok(None);
        for v in g.neighbors(start).difference(visited).iter() {
            match walk(g, v, n, path, visited, budget, visit) {
                Ok(None) => {}
                other => {
                    result = other;
                    break;
                }
            }
        }
        result
    };
    path.pop();
    visited.remove(start);
    result
}

/// Number of unvisited vertices reachable from `u` through unvisited vertices.
fn reach(g: &Graph, u: usize, visited: &VertexSet) -> usize {
    let mut seen = g.neighbors(u).difference(visited);
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = VertexSet::empty(g.order());
        for v in frontier.iter() {
            next.union_with(g.neighbors(v).words());
        }
        next.difference_with(visited.words());
        next.difference_with(seen.words());
        seen.union_with(next.words());
        frontier = next;
    }
    seen.len()
}

fn n_path_in_component(g: &Graph, n: usize, budget: &Budget) -> SearchOutcome<Vec<usize>> {
    let dfs = |limit: &Budget| -> Result<Option<Vec<usize>>, BudgetExhausted> {
        let mut path = Vec::with_capacity(n);
        let mut visited = VertexSet::empty(g.order());
        for start in 0..g.order() {
            let found = walk(
                g,
                start,
                n,
                &mut path,
                &mut visited,
                limit,
                &mut |p: &[usize]| Some(p.to_vec()),
            )?;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    };
    if g.order() <= DP_COMPONENT_CAP {
        let quick = Budget::new(QUICK_DFS_NODES.min(budget.remaining()));
        let attempt = dfs(&quick);
        budget.spend(quick.used.get());
        match attempt {
            Ok(Some(p)) => return SearchOutcome::Found(p),
            Ok(None) => return SearchOutcome::Absent,
            Err(_) => {}
        }
        let adj = masks(g);
        match endpoint_table(&adj, budget) {
            Ok(table) => match lex_least_of_len(&adj, &table, n) {
                Some(p) => SearchOutcome::Found(p),
                None => SearchOutcome::Absent,
            },
            Err(_) => SearchOutcome::Unknown,
        }
    } else {
        match dfs(budget) {
            Ok(Some(p)) => SearchOutcome::Found(p),
            Ok(None) => SearchOutcome::Absent,
            Err(_) => SearchOutcome::Unknown,
        }
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    debug_assert!(g.order() <= 32);
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect()
}

/// `table[mask]` = set of vertices at which some Hamiltonian path of the
/// subgraph induced by `mask` ends (paths are reversible, so also starts).
fn endpoint_table(adj: &[u32], budget: &Budget) -> Result<Vec<u32>, BudgetExhausted> {
    let size = 1usize << adj.len();
    if !budget.spend(size as u64) {
        return Err(budget.exhausted());
    }
    let mut table = vec![0u32; size];
    for mask in 1..size {
        if mask & (mask - 1) == 0 {
            table[mask] = mask as u32;
            continue;
        }
        let mut ends = 0u32;
        let mut rest = mask as u32;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if table[mask ^ (1 << v)] & adj[v as usize] != 0 {
                ends |= 1 << v;
            }
        }
        table[mask] = ends;
    }
    Ok(table)
}

/// Lexicographically least path with exactly `len` vertices, rebuilt greedily
/// from the endpoint table.
fn lex_least_of_len(adj: &[u32], table: &[u32], len: usize) -> Option<Vec<usize>> {
    if len == 0 {
        return Some(Vec::new());
    }
    // Invariant: each kept mask M admits a path that follows the current
    // prefix and then covers the rest of M.
    let mut kept: Vec<u32> = (1..table.len())
        .filter(|&m| m.count_ones() as usize == len && table[m] != 0)
        .map(|m| m as u32)
        .collect();
    let first = kept
        .iter()
        .map(|&m| table[m as usize].trailing_zeros())
        .min()?;
    kept.retain(|&m| table[m as usize] >> first & 1 == 1);
    let mut prefix = 1u32 << first;
    let mut path = vec![first as usize];
    let mut u = first as usize;
    while path.len() < len {
        let continues =
            |m: u32, v: u32| m >> v & 1 == 1 && table[(m & !prefix) as usize] >> v & 1 == 1;
        let mut options = adj[u] & !prefix;
        let mut chosen = None;
        while options != 0 {
            let v = options.trailing_zeros();
            options &= options - 1;
            if kept.iter().any(|&m| continues(m, v)) {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("kept masks guarantee a continuation");
        kept.retain(|&m| continues(m, v));
        prefix |= 1 << v;
        path.push(v as usize);
        u = v as usize;
    }
    Some(path)
}

fn branch_and_bound(g: &Graph, budget: &Budget) -> Result<Vec<usize>, BudgetExhausted> {
    struct Dfs<'a> {
        g: &'a Graph,
        budget: &'a Budget,
        path: Vec<usize>,
        visited: VertexSet,
        best: Vec<usize>,
    }
    impl Dfs<'_> {
        fn go(&mut self, u: usize) -> Result<(), BudgetExhausted> {
            if !self.budget.spend(1) {
                return Err(self.budget.exhausted());
            }
            self.path.push(u);
            self.visited.insert(u);
            if self.path.len() > self.best.len() {
                self.best = self.path.clone();
            }
            let full = self.g.order();
            if self.best.len() < full
                && self.path.len() + reach(self.g, u, &self.visited) > self.best.len()
            {
                for v in self.g.neighbors(u).difference(&self.visited).iter() {
                    self.go(v)?;
                    if self.best.len() == full {
                        break;
                    }
                }
            }
            self.path.pop();
            self.visited.remove(u);
            Ok(())
        }
    }
    let mut dfs = Dfs {
        g,
        budget,
        path: Vec::new(),
        visited: VertexSet::empty(g.order()),
        best: Vec::new(),
    };
    for start in 0..g.order() {
        if dfs.best.len() == g.order() {
            break;
        }
        dfs.go(start)?;
    }
    Ok(dfs.best)
}
