use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::{require_diameter_two, Property, SolveError};

/// `V ∖ {u}` split by bipartition class of `G - u` and by adjacency to `u`.
///
/// `S1`, `T1` are the neighbours of `u` in each class; `S2`, `T2` the
/// non-neighbours. `Z` holds the isolated vertices of `G[S1 ∪ T1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPartition {
    pub u: usize,
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub t1: VertexSet,
    pub t2: VertexSet,
    pub z: VertexSet,
}

impl UPartition {
    pub fn s(&self) -> VertexSet {
        self.s1.union(&self.s2)
    }

    pub fn t(&self) -> VertexSet {
        self.t1.union(&self.t2)
    }

    /// `S1 ∖ Z`
    pub fn s1_prime(&self) -> VertexSet {
        self.s1.difference(&self.z)
    }

    /// `T1 ∖ Z`
    pub fn t1_prime(&self) -> VertexSet {
        self.t1.difference(&self.z)
    }

    /// `S2`, `T2`, `Z ∩ S1`, `Z ∩ T1`, in that order.
    pub fn twin_sets(&self) -> [VertexSet; 4] {
        [
            self.s2.clone(),
            self.t2.clone(),
            self.z.intersection(&self.s1),
            self.z.intersection(&self.t1),
        ]
    }
}

/// Partitions `V ∖ {u}` for a connected diameter-2 graph with `G - u` bipartite.
///
/// Any proper 2-colouring of `G - u` works: two vertices of opposite classes
/// have no common neighbour other than `u`, so diameter 2 makes `S2` and `T2`
/// complete to the opposite class whichever way each component is oriented.
pub fn partition_around_u(g: &Graph, u: usize) -> Result<UPartition, SolveError> {
    if u >= g.n() {
        return Err(SolveError::VertexOutOfRange(u));
    }
    require_diameter_two(g)?;
    partition_unchecked(g, u)
}

pub(crate) fn partition_unchecked(g: &Graph, u: usize) -> Result<UPartition, SolveError> {
    let n = g.n();
    let mut rest = g.vertex_set();
    rest.remove(u);
    let (s, t) = g
        .bipartition_within(&rest)
        .ok_or(SolveError::NotDeletionBipartite(u))?;

    let nu = g.neighbour_set(u);
    let s1 = s.intersection(nu);
    let s2 = s.difference(nu);
    let t1 = t.intersection(nu);
    let t2 = t.difference(nu);

    for class in [&s, &t] {
        if let Some(&(a, b)) = g
            .edges()
            .iter()
            .find(|&&(a, b)| class.contains(a) && class.contains(b))
        {
            return Err(SolveError::StructureViolation {
                property: Property::ClassesIndependent,
                witness: (a, b),
            });
        }
    }
    for (far, opposite) in [(&s2, &t), (&t2, &s)] {
        for x in far.iter() {
            if let Some(y) = opposite.difference(g.neighbour_set(x)).first() {
                return Err(SolveError::StructureViolation {
                    property: Property::CompleteToOppositeClass,
                    witness: (x.min(y), x.max(y)),
                });
            }
        }
    }

    let near = s1.union(&t1);
    let z = VertexSet::from_vertices(
        n,
        near.iter()
            .filter(|&v| g.neighbour_set(v).is_disjoint(&near)),
    );
    Ok(UPartition {
        u,
        s1,
        s2,
        t1,
        t2,
        z,
    })
}
