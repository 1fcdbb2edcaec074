use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported order. A [`VertexSet`] is one machine word.
pub const N_MAX: usize = 64;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is one bitmask per vertex. Closed neighbourhoods are cached since
/// every domination test is phrased in terms of `N[v]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    closed: Vec<u64>,
    edge_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub isolated_present: bool,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edge_list(n, &[])
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > N_MAX {
            return Err(Error::Input(format!(
                "graph order {n} exceeds the supported maximum of {N_MAX}"
            )));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Builds a graph from symmetric, loop-free adjacency masks.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= N_MAX);
        debug_assert!((0..n).all(|v| adj[v] & (1 << v) == 0));
        debug_assert!((0..n).all(|v| VertexSet::from_bits(adj[v])
            .iter()
            .all(|u| u < n && adj[u] & (1 << v) != 0)));
        let closed = adj.iter().enumerate().map(|(v, &a)| a | (1 << v)).collect();
        let edge_count = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Graph {
            n,
            adj,
            closed,
            edge_count,
        }
    }

    /// Order of the graph.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// Closed neighbourhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.closed[v])
    }

    /// Raw closed-neighbourhood masks, indexed by vertex.
    pub(crate) fn closed_masks(&self) -> &[u64] {
        &self.closed
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 bit order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn contains_set(&self, s: VertexSet) -> bool {
        s.is_subset(self.vertices())
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::Input("degree statistics of the empty graph".into()));
        }
        let (min_degree, max_degree) = (0..self.n)
            .map(|v| self.degree(v))
            .fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        Ok(DegreeStats {
            min_degree,
            max_degree,
            isolated_present: min_degree == 0,
        })
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v] == 0)
    }

    /// Minimum degree, or 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
