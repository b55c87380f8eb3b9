//! Near-bipartite decompositions `(A, B = V ∖ A)` and good 2-colourings.
//!
//! A decomposition is valid when `A` is independent and `B` induces a forest.
//! Validation returns a witness for the first violation found so callers can
//! print something a human can check by hand.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, UnionFind};
use crate::vertex_set::VertexSet;

/// Candidate independent feedback vertex set `A`; `B` is its complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NbDecomposition {
    a: VertexSet,
}

impl NbDecomposition {
    pub fn new(a: VertexSet) -> Self {
        Self { a }
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> VertexSet {
        self.a.complement()
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn into_set(self) -> VertexSet {
        self.a
    }

    pub fn validate(&self, g: &Graph) -> Verdict {
        validate_decomposition(g, &self.a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// An edge with both endpoints in `A`.
    IndependenceViolation(usize, usize),
    /// Vertices of a cycle inside `B`, in cycle order.
    CycleInB(Vec<usize>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

pub fn validate_decomposition(g: &Graph, a: &VertexSet) -> Verdict {
    for &(u, v) in g.edges() {
        if a.contains(u) && a.contains(v) {
            return Verdict::IndependenceViolation(u, v);
        }
    }
    match find_cycle_within(g, &a.complement()) {
        Some(cycle) => Verdict::CycleInB(cycle),
        None => Verdict::Valid,
    }
}

/// Boolean form of [`validate_decomposition`] for hot loops.
#[inline]
pub fn is_valid_decomposition(g: &Graph, a: &VertexSet) -> bool {
    if !g.is_independent(a) {
        return false;
    }
    let mut dsu = UnionFind::new(g.n());
    for &(u, v) in g.edges() {
        if !a.contains(u) && !a.contains(v) && !dsu.union(u, v) {
            return false;
        }
    }
    true
}

/// A cycle in the subgraph induced by `within`, if one exists.
pub fn find_cycle_within(g: &Graph, within: &VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    let mut dsu = UnionFind::new(n);
    let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if !within.contains(u) || !within.contains(v) {
            continue;
        }
        if dsu.union(u, v) {
            forest[u].push(v);
            forest[v].push(u);
            continue;
        }
        // u and v are already joined in the forest: the tree path plus uv closes a cycle.
        let mut parent = vec![usize::MAX; n];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in &forest[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut cycle = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            cycle.push(x);
        }
        return Some(cycle);
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    One,
    Two,
}

/// A total 2-colouring; the colour-1 class is the candidate `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodTwoColouring {
    colours: Vec<Colour>,
}

impl GoodTwoColouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        Self { colours }
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn ones(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.colours.len(),
            self.colours
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == Colour::One)
                .map(|(v, _)| v),
        )
    }

    /// No 1-edge and no 2-cycle.
    pub fn is_good(&self, g: &Graph) -> bool {
        is_valid_decomposition(g, &self.ones())
    }
}

pub fn colouring_to_decomposition(c: &GoodTwoColouring) -> NbDecomposition {
    NbDecomposition::new(c.ones())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("not a near-bipartite decomposition: {0:?}")]
    InvalidDecomposition(Verdict),
}

/// Proper colouring with colours `1..=3`: `A` gets 3, the forest on `B` is
/// 2-coloured with the smallest vertex of each tree coloured 1.
pub fn decomposition_to_three_colouring(
    g: &Graph,
    a: &VertexSet,
) -> Result<Vec<u8>, DecompositionError> {
    let verdict = validate_decomposition(g, a);
    if !verdict.is_valid() {
        return Err(DecompositionError::InvalidDecomposition(verdict));
    }
    let (first, _) = g
        .bipartition_within(&a.complement())
        .expect("a forest is bipartite");
    Ok((0..g.n())
        .map(|v| {
            if a.contains(v) {
                3
            } else if first.contains(v) {
                1
            } else {
                2
            }
        })
        .collect())
}

/// True iff no edge joins two vertices of the same colour.
pub fn is_proper_colouring(g: &Graph, colours: &[u8]) -> bool {
    colours.len() == g.n() && g.edges().iter().all(|&(u, v)| colours[u] != colours[v])
}
