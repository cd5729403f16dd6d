//! Simple undirected graphs on dense vertex ids, trees, and metric queries.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree ({n} vertices, {m} edges)")]
    NotATree { n: usize, m: usize },
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            normalized.push(e);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        normalized.sort_unstable();
        Ok(Graph { n, adjacency, edges: normalized })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, &[])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Copy of this graph with the edge `u-v` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::from_edge_list(self.n, &edges)
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<_> =
            self.edges.iter().filter(|&&(a, b)| a != v && b != v).map(|&(a, b)| (relabel(a), relabel(b))).collect();
        Graph::from_edge_list(self.n - 1, &edges)
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edge_list(self.n, &edges)
    }

    /// BFS hop counts from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs(source).0
    }

    fn bfs(&self, source: usize) -> (Vec<Option<usize>>, Vec<usize>, Vec<usize>) {
        let mut dist = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let du = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent, order)
    }

    /// Vertices in BFS order from `source` together with BFS parents
    /// (`usize::MAX` for the source and unreached vertices).
    pub fn bfs_order(&self, source: usize) -> (Vec<usize>, Vec<usize>) {
        let (_, parent, order) = self.bfs(source);
        (order, parent)
    }

    /// Shortest-path hop count, `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let (_, _, order) = self.bfs(s);
            for v in order {
                seen[v] = true;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_count() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Largest eccentricity, by BFS from every vertex.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                best = best.max(d.ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Degree-one vertices in increasing order.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Number of vertices adjacent to at least one pendant vertex.
    pub fn quasi_pendant_count(&self) -> usize {
        (0..self.n).filter(|&v| self.adjacency[v].iter().any(|&w| self.degree(w) == 1)).count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A connected graph with `n - 1` edges.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tree(Graph);

impl Tree {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        if graph.edges.len() + 1 != graph.n {
            return Err(GraphError::NotATree { n: graph.n, m: graph.edges.len() });
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Tree(graph))
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Tree::new(Graph::from_edge_list(n, edges)?)
    }

    /// Tree from a parent array; `parents[v]` is the parent of vertex `v + 1`.
    pub(crate) fn from_parents_unchecked(parents: &[usize]) -> Tree {
        let n = parents.len() + 1;
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(n - 1);
        for (i, &p) in parents.iter().enumerate() {
            let v = i + 1;
            adjacency[p].push(v);
            adjacency[v].push(p);
            edges.push((p.min(v), p.max(v)));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        edges.sort_unstable();
        Tree(Graph { n, adjacency, edges })
    }

    pub fn as_graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// Diameter by double BFS.
    pub fn diameter(&self) -> usize {
        self.diameter_path().len() - 1
    }

    /// One longest path, found by BFS to the farthest vertex `u` from vertex 0
    /// and then BFS from `u` to its farthest vertex `w`. Ties go to the smaller id.
    pub fn diameter_path(&self) -> PathTrace {
        let u = farthest(&self.0.bfs_distances(0));
        let (dist, parent, _) = self.0.bfs(u);
        let w = farthest(&dist);
        let mut vertices = vec![w];
        let mut cur = w;
        while cur != u {
            cur = parent[cur];
            vertices.push(cur);
        }
        vertices.reverse();
        PathTrace(vertices)
    }
}

fn farthest(dist: &[Option<usize>]) -> usize {
    let mut best = 0;
    for (v, d) in dist.iter().enumerate() {
        if d.unwrap_or(0) > dist[best].unwrap_or(0) {
            best = v;
        }
    }
    best
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl AsRef<Graph> for Tree {
    fn as_ref(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for Tree {
    type Error = GraphError;

    fn try_from(graph: Graph) -> Result<Self, GraphError> {
        Tree::new(graph)
    }
}

/// Ordered vertex sequence of a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTrace(Vec<usize>);

impl PathTrace {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when consecutive vertices are adjacent in `graph` and no vertex repeats.
    pub fn is_path_in(&self, graph: &Graph) -> bool {
        let distinct: BTreeSet<_> = self.0.iter().collect();
        distinct.len() == self.0.len()
            && self.0.iter().all(|&v| v < graph.order())
            && self.0.windows(2).all(|w| graph.has_edge(w[0], w[1]))
    }
}
