//! Slow, obviously-correct reference implementations used as test oracles.
#![allow(dead_code)]

use jramsey::Graph;

/// Heap's algorithm over `0..n`, calling `visit` on every permutation.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..g.order() {
        for u in 0..v {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Tries every injective map of the pattern's vertices and checks all edges
/// at the leaves.
pub fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, edges: &[(usize, usize)], k: usize, map: &mut Vec<usize>) -> bool {
        if map.len() == k {
            return edges.iter().all(|&(u, v)| host.has_edge(map[u], map[v]));
        }
        for x in 0..host.order() {
            if map.contains(&x) {
                continue;
            }
            map.push(x);
            if go(host, edges, k, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    if pattern.order() > host.order() {
        return false;
    }
    go(host, &edge_list(pattern), pattern.order(), &mut Vec::new())
}

/// Longest path by scanning every vertex permutation for its longest path
/// prefix; ties go to the lexicographically least vertex sequence.
pub fn brute_longest_path(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for_each_permutation(g.order(), |perm| {
        let mut len = if perm.is_empty() { 0 } else { 1 };
        while len < perm.len() && g.has_edge(perm[len - 1], perm[len]) {
            len += 1;
        }
        for l in 1..=len {
            let cand = &perm[..l];
            if cand.len() > best.len() || (cand.len() == best.len() && cand < &best[..]) {
                best = cand.to_vec();
            }
        }
    });
    best
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let edges = edge_list(a);
    let mut found = false;
    for_each_permutation(a.order(), |p| {
        if !found && edges.iter().all(|&(u, v)| b.has_edge(p[u], p[v])) {
            found = true;
        }
    });
    found
}

#[allow(clippy::needless_range_loop)]
fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            idx[u][v] = k;
            idx[v][u] = k;
            k += 1;
        }
    }
    idx
}

/// Number of isomorphism classes of order `n` by orbit marking: walk all
/// labelled graphs, and for each unmarked one count a class and mark its
/// whole orbit under every permutation.
pub fn orbit_count(n: usize) -> usize {
    let pairs = n * n.saturating_sub(1) / 2;
    let idx = pair_index(n);
    let total = 1usize << pairs;
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for_each_permutation(n, |p| perms.push(p.to_vec()));
    // image of each pair bit under each permutation
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut m = vec![0; pairs];
            for v in 1..n {
                for u in 0..v {
                    m[idx[u][v]] = idx[p[u]][p[v]];
                }
            }
            m
        })
        .collect();
    let mut seen = vec![false; total];
    let mut classes = 0;
    for code in 0..total {
        if seen[code] {
            continue;
        }
        classes += 1;
        for m in &maps {
            let mut image = 0usize;
            for (bit, &to) in m.iter().enumerate() {
                if code >> bit & 1 == 1 {
                    image |= 1 << to;
                }
            }
            seen[image] = true;
        }
    }
    classes
}

/// Number of isomorphism classes of order `n` by Burnside's lemma: the
/// average over permutations of `2^(cycles on vertex pairs)`.
pub fn burnside_count(n: usize) -> u128 {
    let idx = pair_index(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut sum: u128 = 0;
    let mut count: u128 = 0;
    for_each_permutation(n, |p| {
        let mut image = vec![0; pairs];
        for v in 1..n {
            for u in 0..v {
                image[idx[u][v]] = idx[p[u]][p[v]];
            }
        }
        let mut seen = vec![false; pairs];
        let mut cycles = 0;
        for start in 0..pairs {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = image[x];
            }
        }
        sum += 1u128 << cycles;
        count += 1;
    });
    sum / count
}

/// Edges of `J_{s,m}` in the canonical layout, built from the definition.
pub fn jahangir_edges(s: usize, m: usize) -> Vec<(usize, usize)> {
    let rim = s * m;
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..m).map(|j| (j * s, rim)));
    edges
}

/// Checks that `map` places `J_{s,m}` inside the complement of `f`.
pub fn jahangir_in_complement(f: &Graph, s: usize, m: usize, map: &[usize]) -> Result<(), String> {
    if map.len() != s * m + 1 {
        return Err(format!("map has {} entries", map.len()));
    }
    let mut sorted = map.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != map.len() || sorted.last().is_some_and(|&v| v >= f.order()) {
        return Err("map is not injective into the host".into());
    }
    for (u, v) in jahangir_edges(s, m) {
        if f.has_edge(map[u], map[v]) {
            return Err(format!("pattern edge {u}-{v} lands on an edge of F"));
        }
    }
    Ok(())
}

/// Checks disjoint paths of `f`, each with at least `n` vertices.
pub fn disjoint_paths_in(f: &Graph, paths: &[Vec<usize>], n: usize) -> Result<(), String> {
    let mut used = vec![false; f.order()];
    for p in paths {
        if p.len() < n {
            return Err(format!("path of {} < {n} vertices", p.len()));
        }
        for &v in p {
            if v >= f.order() || std::mem::replace(&mut used[v], true) {
                return Err(format!("vertex {v} reused or out of range"));
            }
        }
        if p.windows(2).any(|w| !f.has_edge(w[0], w[1])) {
            return Err("consecutive vertices not adjacent".into());
        }
    }
    Ok(())
}

/// Deterministic small random graph from a seed (SplitMix64), independent of
/// the library generator.
pub fn seeded_graph(order: usize, density_percent: u64, seed: u64) -> Graph {
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    let mut edges = Vec::new();
    for v in 1..order {
        for u in 0..v {
            if next() % 100 < density_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, edges).unwrap()
}
