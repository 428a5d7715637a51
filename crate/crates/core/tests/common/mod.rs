//! Test-only oracles, independent of the library's algorithms.
#![allow(dead_code)]

use std::collections::HashSet;

use hosoya::Graph;
use proptest::prelude::*;

/// All-pairs distances by Floyd–Warshall; `u64::MAX` when unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Distance distribution from the Floyd–Warshall matrix, unordered pairs.
pub fn naive_alpha(g: &Graph) -> Vec<u64> {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    let mut alpha = vec![0u64; n.max(1)];
    alpha[0] = n as u64;
    for i in 0..n {
        for j in i + 1..n {
            alpha[d[i][j] as usize] += 1;
        }
    }
    while alpha.len() > 1 && *alpha.last().unwrap() == 0 {
        alpha.pop();
    }
    alpha
}

/// Decodes a Prüfer sequence over `0..n` into the edges of a labeled tree.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Canonical form of an unlabeled free tree given as adjacency lists.
///
/// The tree is rooted at each center in turn; a rooted subtree is encoded as
/// `1 (children's codes in decreasing order) 0`, and the larger of the center
/// encodings is returned. Valid for up to 32 vertices.
pub fn canonical_free_tree(adj: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    assert!(n <= 32);
    if n == 1 {
        return 0b10;
    }
    centers(adj)
        .into_iter()
        .map(|c| rooted_code(adj, c))
        .max()
        .unwrap()
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in &adj[leaf] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

/// Left-aligned 64-bit parenthesis code; no code is a prefix of another, so
/// integer order is string order.
fn rooted_code(adj: &[Vec<usize>], root: usize) -> u64 {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    order.push(root);
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in &adj[u] {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut code = vec![(0u64, 0u32); n];
    let mut kids: Vec<Vec<(u64, u32)>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut children = std::mem::take(&mut kids[u]);
        children.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut bits = 1u64 << 63;
        let mut len = 1u32;
        for (c, l) in children {
            bits |= c >> len;
            len += l;
        }
        len += 1;
        code[u] = (bits, len);
        if u != root {
            kids[parent[u]].push(code[u]);
        }
    }
    code[root].0
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn canonical_of_graph(g: &Graph) -> u64 {
    let adj: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    canonical_free_tree(&adj)
}

/// Number of unlabeled free trees on `n` vertices by generating every
/// labeled tree from its Prüfer sequence and deduplicating canonical forms.
pub fn prufer_tree_count_full(n: usize) -> usize {
    prufer_count(n, false)
}

/// Same count, visiting only Prüfer sequences that start with 0.
///
/// For `n >= 3` every tree has such a labeling: give label 0 to a vertex
/// adjacent to a leaf and label 1 to that leaf. Then 1 is the smallest leaf
/// and its neighbor 0 is the first sequence entry.
pub fn prufer_tree_count(n: usize) -> usize {
    prufer_count(n, true)
}

fn prufer_count(n: usize, lead_zero: bool) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let first_free = usize::from(lead_zero);
    let mut seq = vec![0usize; len];
    let mut seen = HashSet::new();
    loop {
        let edges = prufer_edges(&seq, n);
        seen.insert(canonical_free_tree(&adjacency(n, &edges)));
        // odometer increment
        let mut i = first_free;
        loop {
            if i == len {
                return seen.len();
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Connected graphs on 1..=max_n vertices: a random spanning tree plus
/// random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: HashSet<(usize, usize)> =
                parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] {
                        edges.insert((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}

/// Connected bipartite graphs: a random spanning tree plus random edges
/// between its two color classes.
pub fn bipartite_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut color = vec![0u8; n];
            let mut edges: HashSet<(usize, usize)> = HashSet::new();
            for (i, &p) in parents.iter().enumerate() {
                color[i + 1] = 1 - color[p];
                edges.insert((p, i + 1));
            }
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && color[u] != color[v] {
                        edges.insert((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}
