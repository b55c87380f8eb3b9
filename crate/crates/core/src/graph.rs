//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is kept twice: as sorted neighbour lists for traversal and as one
//! [`VertexSet`] row per vertex for constant-time membership and bulk set
//! algebra. The enumeration-heavy solvers lean on the bitmask rows.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

/// Largest shortest-path distance, or `Infinite` for a disconnected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// An induced subgraph together with its vertex relabelling.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[local]` is the id of `local` in the parent graph.
    pub original: Vec<usize>,
    local: Vec<Option<usize>>,
}

impl InducedSubgraph {
    /// Local id of a parent vertex, if it was kept.
    pub fn local_of(&self, v: usize) -> Option<usize> {
        self.local.get(v).copied().flatten()
    }
}

impl Graph {
    /// Builds a graph from a list of vertex pairs, dropping duplicates.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = vec![VertexSet::new(n); n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Self {
        let adj: Vec<Vec<usize>> = rows.iter().map(VertexSet::to_vec).collect();
        let edges = adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        Self { adj, rows, edges }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Self {
        let rows = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn cycle(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &pairs).expect("cycle needs at least 3 vertices")
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &pairs).expect("valid path")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbour_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Copy of the graph with the given edges removed. Pairs that are not edges are ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let mut rows = self.rows.clone();
        for &(u, v) in removed {
            rows[u].remove(v);
            rows[v].remove(u);
        }
        Self::from_rows(rows)
    }

    /// Shortest-path distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Eccentricity of `source`, computed with bitset frontiers; `None` if the
    /// graph is disconnected.
    pub fn eccentricity(&self, source: usize) -> Option<usize> {
        let n = self.n();
        let mut visited = VertexSet::new(n);
        visited.insert(source);
        let mut frontier = visited.clone();
        let mut seen = 1;
        let mut depth = 0;
        while seen < n {
            let mut next = VertexSet::new(n);
            for w in frontier.iter() {
                next.union_with(&self.rows[w]);
            }
            next.difference_with(&visited);
            if next.is_empty() {
                return None;
            }
            seen += next.len();
            visited.union_with(&next);
            frontier = next;
            depth += 1;
        }
        Some(depth)
    }

    /// Graphs on at most one vertex have diameter 0.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in 0..self.n() {
            match self.eccentricity(v) {
                Some(e) => best = best.max(e),
                None => return Diameter::Infinite,
            }
        }
        Diameter::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.eccentricity(0).is_some()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertex_set())
    }

    /// Components of the subgraph induced by `within`, each sorted, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in within.iter() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if within.contains(w) && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Proper 2-colouring witness, or `None` if the graph has an odd cycle.
    ///
    /// The smallest vertex of every component goes to the first class, so an
    /// edgeless graph puts everything in the first class.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        self.bipartition_within(&self.vertex_set())
    }

    /// Bipartition of the subgraph induced by `within`, in parent ids.
    pub fn bipartition_within(&self, within: &VertexSet) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in within.iter() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &w in &self.adj[v] {
                    if !within.contains(w) {
                        continue;
                    }
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut first = VertexSet::new(n);
        let mut second = VertexSet::new(n);
        for v in within.iter() {
            if side[v] == Some(false) {
                first.insert(v);
            } else {
                second.insert(v);
            }
        }
        Some((first, second))
    }

    pub fn is_forest(&self) -> bool {
        self.induces_forest(&self.vertex_set())
    }

    /// True iff no edge has both endpoints in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    /// True iff the subgraph induced by `set` is acyclic.
    pub fn induces_forest(&self, set: &VertexSet) -> bool {
        let mut dsu = UnionFind::new(self.n());
        for &(u, v) in &self.edges {
            if set.contains(u) && set.contains(v) && !dsu.union(u, v) {
                return false;
            }
        }
        true
    }

    /// The 2-neighbour set: vertices outside `x` with at least two neighbours in `x`.
    pub fn two_neighbour_set(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in 0..self.n() {
            if !x.contains(v) && self.rows[v].intersection_len(x) >= 2 {
                out.insert(v);
            }
        }
        out
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> InducedSubgraph {
        let original = s.to_vec();
        let mut local = vec![None; self.n()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = Some(i);
        }
        let mut rows = vec![VertexSet::new(original.len()); original.len()];
        for (i, &v) in original.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(j) = local[w] {
                    rows[i].insert(j);
                }
            }
        }
        InducedSubgraph {
            graph: Self::from_rows(rows),
            original,
            local,
        }
    }

    /// True iff deleting `v` leaves a bipartite graph.
    pub fn is_bipartite_without(&self, v: usize) -> bool {
        let mut rest = self.vertex_set();
        rest.remove(v);
        self.bipartition_within(&rest).is_some()
    }

    /// True iff some edge `uv` has a common neighbour.
    pub fn has_triangle(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| !self.rows[u].is_disjoint(&self.rows[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn edge_list_construction() {
        let all: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edge_list(4, &all).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4, Graph::complete(4));

        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);

        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edge_list(5, &[(0, 3), (4, 1), (2, 3)]).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                assert_eq!(g.has_edge(u, v), g.neighbours(u).contains(&v));
            }
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::complete(4).diameter(), Diameter::Finite(1));
        assert_eq!(Graph::path(4).diameter(), Diameter::Finite(3));
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), Diameter::Infinite);
        assert_eq!(Graph::empty(0).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::empty(1).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::cycle(5).diameter(), Diameter::Finite(2));
    }

    #[test]
    fn bipartiteness() {
        let (a, b) = Graph::cycle(4).is_bipartite().unwrap();
        assert_eq!((a.len(), b.len()), (2, 2));
        assert!(Graph::cycle(5).is_bipartite().is_none());
        let (a, b) = Graph::empty(3).is_bipartite().unwrap();
        assert_eq!((a.len(), b.len()), (3, 0));
    }

    #[test]
    fn bipartite_witness_crosses_every_edge() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 4), (0, 3)])
            .unwrap();
        assert!(g.is_bipartite().is_none());
        let h = g.without_edges(&[(6, 4)]);
        let (a, b) = h.is_bipartite().unwrap();
        assert!(a.is_disjoint(&b));
        assert_eq!(a.union(&b), h.vertex_set());
        for &(u, v) in h.edges() {
            assert_ne!(a.contains(u), a.contains(v));
        }
    }

    #[test]
    fn forests() {
        assert!(Graph::path(4).is_forest());
        assert!(!Graph::cycle(3).is_forest());
        assert!(Graph::empty(0).is_forest());
    }

    #[test]
    fn two_neighbour_sets() {
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.two_neighbour_set(&set(4, &[1, 2, 3])), set(4, &[0]));
        assert!(star.two_neighbour_set(&star.vertex_set()).is_empty());
        let c4 = Graph::cycle(4);
        assert_eq!(c4.two_neighbour_set(&set(4, &[0, 2])), set(4, &[1, 3]));
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = Graph::complete(4).induced_subgraph(&set(4, &[0, 2, 3]));
        assert_eq!(k3.graph, Graph::complete(3));
        assert_eq!(k3.original, vec![0, 2, 3]);
        assert_eq!(k3.local_of(2), Some(1));
        assert_eq!(k3.local_of(1), None);

        let empty = Graph::cycle(5).induced_subgraph(&VertexSet::new(5));
        assert_eq!(empty.graph.n(), 0);

        let p3 = Graph::cycle(5).induced_subgraph(&set(5, &[1, 2, 3]));
        assert_eq!(p3.graph, Graph::path(3));
    }

    #[test]
    fn triangles() {
        assert!(Graph::complete(3).has_triangle());
        assert!(!Graph::cycle(4).has_triangle());
    }
}
