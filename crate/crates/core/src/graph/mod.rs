//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.

mod canon;
mod edgelist;
mod generate;
mod graph6;
mod vertex_set;

pub use canon::{canonical_form, try_canonical_form, CanonOrderError, CANON_MAX_ORDER};
pub use edgelist::{from_edge_list, to_edge_list, EdgeListError};
pub use generate::{
    enumerate_all_nonisomorphic, enumerate_connected_nonisomorphic, GeneratorOrderError, GENERATOR_MAX_ORDER,
};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use vertex_set::VertexSet;

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the limit of {MAX_ORDER} vertices")]
    OrderOverflow(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_ORDER {
        Err(GraphError::OrderOverflow(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph {
            order: n,
            adj: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let full = low_mask(n);
        let adj = (0..n).map(|i| full & !(1u64 << i)).collect();
        Ok(Graph { order: n, adj })
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n ≥ 3` vertices; smaller orders give the path.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Graph::from_edges(n, &edges)
    }

    /// Star with one center (vertex 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, restoring symmetry and
    /// clearing loops and stray bits.
    pub(crate) fn from_rows_symmetrized(n: usize, rows: &[u64]) -> Graph {
        let mut g = Graph {
            order: n,
            adj: vec![0; n],
        };
        let full = low_mask(n);
        for (i, &row) in rows.iter().enumerate().take(n) {
            let row = row & full & !(1u64 << i);
            for j in VertexSet::from_bits(row).iter() {
                g.adj[i] |= 1 << j;
                g.adj[j] |= 1 << i;
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.order && v < self.order {
            self.adj[u] &= !(1u64 << v);
            self.adj[v] &= !(1u64 << u);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            VertexSet::from_bits(self.adj[u] & !low_mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (self.adj[v] | 1 << v) & s.bits() == s.bits())
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet::from_bits(frontier).iter() {
                next |= self.adj[v];
            }
            next &= within.bits() & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet::from_bits(seen)
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, within);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.order);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & full & !(1u64 << i))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    fn juxtapose(&self, other: &Graph, connect: bool) -> Result<Graph, GraphError> {
        let n1 = self.order;
        let n = n1 + other.order;
        check_order(n)?;
        let first = low_mask(n1);
        let second = low_mask(n) & !first;
        let mut adj = Vec::with_capacity(n);
        for &r in &self.adj {
            adj.push(if connect { r | second } else { r });
        }
        for &r in &other.adj {
            let shifted = r << n1;
            adj.push(if connect { shifted | first } else { shifted });
        }
        Ok(Graph { order: n, adj })
    }

    /// Join: vertex-disjoint union plus every edge between the two sides.
    /// `self` occupies `0..n1`, `other` occupies `n1..n1+n2`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.juxtapose(other, true)
    }

    /// Vertex-disjoint union with the same relabeling as [`Graph::join`].
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.juxtapose(other, false)
    }

    /// Attaches a pendant vertex `n + i` to every vertex `i`.
    pub fn corona(&self) -> Result<Graph, GraphError> {
        let n = self.order;
        check_order(2 * n)?;
        let mut g = Graph::empty(2 * n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for i in 0..n {
            g.add_edge(i, n + i)?;
        }
        Ok(g)
    }

    /// Complete multipartite graph with consecutive parts of the given sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
        let n: usize = parts.iter().sum();
        check_order(n)?;
        let full = low_mask(n);
        let mut adj = vec![0u64; n];
        let mut start = 0;
        for &p in parts {
            let part = low_mask(start + p) & !low_mask(start);
            for row in adj.iter_mut().skip(start).take(p) {
                *row = full & !part;
            }
            start += p;
        }
        Ok(Graph { order: n, adj })
    }

    /// Subgraph induced by `s`, relabeled in increasing vertex order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.iter().filter(|&v| v < self.order).collect();
        let mut adj = vec![0u64; verts.len()];
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[a] |= 1 << b;
                }
            }
        }
        Graph {
            order: verts.len(),
            adj,
        }
    }

    /// Relabels so that old vertex `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.order];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Checks the representation invariants: symmetry, no loops, no stray bits.
    pub fn is_valid(&self) -> bool {
        let full = low_mask(self.order);
        self.adj.len() == self.order
            && (0..self.order).all(|i| {
                let r = self.adj[i];
                r & !full == 0
                    && r >> i & 1 == 0
                    && VertexSet::from_bits(r).iter().all(|j| self.adj[j] >> i & 1 == 1)
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}: ", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
