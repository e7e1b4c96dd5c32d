//! Simple undirected graphs: graph6 I/O, canonical forms, isomorph-free
//! enumeration, and the 10-vertex 15-edge optimality verification pipeline.

mod canon;
mod enumerate;
mod g6;
mod prop_te;

pub use canon::{canonical_cert, canonical_form, CanonicalCert, MAX_CANON_VERTICES};
pub use enumerate::{connected_cubic_count, cubic_count, enumerate_connected, enumerate_graphs};
pub use g6::{decode_graph6, encode_graph6};
pub use prop_te::{verify_prop_te, verify_prop_te_par, PropTeReport};

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold (single-byte graph6 sizes).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6 decode error: {0}")]
    Graph6(String),
    #[error("graph has {n} vertices, operation supports at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("invalid enumeration parameters: n={n}, m={m}: {reason}")]
    BadParameters { n: usize, m: usize, reason: String },
}

/// Simple undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Adjacency is kept as one bitmask per vertex; no loops or multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, in colex order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            let mut below = self.adj[v] & ((1u64 << v) - 1);
            while below != 0 {
                let u = below.trailing_zeros() as usize;
                out.push((u, v));
                below &= below - 1;
            }
        }
        out
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == degree)
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut seen = 0u64;
        let mut components = 0;
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            components += 1;
            let mut frontier = 1u64 << start;
            let mut reached = frontier;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    next |= self.adj[v];
                    f &= f - 1;
                }
                frontier = next & !reached;
                reached |= next;
            }
            seen |= reached;
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Laplacian matrix D - A, row-major n x n.
    pub fn laplacian(&self) -> Vec<i64> {
        let n = self.n;
        let mut l = vec![0i64; n * n];
        for u in 0..n {
            l[u * n + u] = self.degree(u) as i64;
            let mut nb = self.adj[u];
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                l[u * n + v] = -1;
                nb &= nb - 1;
            }
        }
        l
    }
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}
