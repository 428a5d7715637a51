//! Undirected simple graphs and the edge-list text format.
//!
//! A [`Graph`] stores sorted neighbor lists over 0-based vertex indices. It may
//! be disconnected (so that parsing pipelines can report the problem), but every
//! distance computation in this crate rejects disconnected input.

use std::collections::VecDeque;

use crate::error::GraphError;

/// Undirected graph without loops or multiple edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    connected: bool,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are unordered pairs.
    ///
    /// Loops, duplicate edges and out-of-range endpoints are rejected; the
    /// reported line number is the 1-based position of the edge in `edges`.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = Builder::new(vertex_count);
        for (i, (u, v)) in edges.into_iter().enumerate() {
            builder.add(i + 1, u, v)?;
        }
        Ok(builder.finish())
    }

    /// Builds a tree (or forest) from a parent array, `parent[i] == None` for roots.
    pub(crate) fn from_parents(parents: &[Option<usize>]) -> Self {
        let n = parents.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (child, parent) in parents.iter().enumerate() {
            if let Some(p) = *parent {
                adjacency[child].push(p);
                adjacency[p].push(child);
                edge_count += 1;
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let connected = is_connected(&adjacency);
        Graph {
            adjacency,
            edge_count,
            connected,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.edge_count + 1 == self.vertex_count()
    }

    /// Writes the graph in edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Two-colors the graph if it is bipartite.
    ///
    /// The part containing vertex 0 comes first. Returns `None` for graphs
    /// with an odd cycle. Disconnected graphs are rejected because the
    /// coloring would not be unique.
    pub fn bipartition(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>, GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        if !self.connected {
            return Err(GraphError::Disconnected);
        }
        let dist = self.bfs_distances(0);
        for (u, list) in self.adjacency.iter().enumerate() {
            if list.iter().any(|&v| dist[u] % 2 == dist[v] % 2) {
                return Ok(None);
            }
        }
        let (first, second) = (0..self.vertex_count()).partition(|&v| dist[v] % 2 == 0);
        Ok(Some((first, second)))
    }
}

struct Builder {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Builder {
    fn new(vertex_count: usize) -> Self {
        Builder {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    fn add(&mut self, line: usize, u: usize, v: usize) -> Result<(), GraphError> {
        let vertex_count = self.adjacency.len();
        for vertex in [u, v] {
            if vertex >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    line,
                    vertex,
                    vertex_count,
                });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge { line, vertex: u });
        }
        if self.adjacency[u].contains(&v) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    fn finish(mut self) -> Graph {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
        let connected = is_connected(&self.adjacency);
        Graph {
            adjacency: self.adjacency,
            edge_count: self.edge_count,
            connected,
        }
    }
}

fn is_connected(adjacency: &[Vec<usize>]) -> bool {
    let n = adjacency.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in &adjacency[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

/// Parses the edge-list format.
///
/// The first significant line is `n m`; exactly `m` lines `u v` follow.
/// Blank lines and lines starting with `#` are skipped. Diagnostics carry
/// 1-based line numbers of the input text.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut builder = Builder::new(n);
    let mut found = 0;
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        builder.add(line, u, v)?;
        found += 1;
    }
    if found != m {
        return Err(GraphError::EdgeCountMismatch { expected: m, found });
    }
    Ok(builder.finish())
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let field = fields.next().ok_or_else(|| GraphError::Malformed {
            line,
            message: "expected two integers".into(),
        })?;
        field.parse().map_err(|_| GraphError::Malformed {
            line,
            message: format!("not a non-negative integer: {field:?}"),
        })
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(GraphError::Malformed {
            line,
            message: "trailing fields".into(),
        });
    }
    Ok(pair)
}
