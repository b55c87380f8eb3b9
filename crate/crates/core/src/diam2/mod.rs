//! Minimum independent feedback vertex sets of diameter-2 graphs.
//!
//! Two cases, decided by whether some vertex `u` leaves a bipartite graph
//! when deleted:
//!
//! * such a `u` exists: [`lemma1_min_ifvs`] partitions `V ∖ {u}` around `u`
//!   and branches over a bounded number of good 2-colourings;
//! * no such `u`: every minimum `A` is the 2-neighbour set `A_X` of some
//!   `X` with `4 ≤ |X| ≤ 5`, so [`lemma2_min_ifvs`] enumerates those.
//!
//! [`solve_min_ifvs_diam2`] dispatches between the two.

mod lemma1;
mod lemma2;
mod partition;

use std::fmt;

use thiserror::Error;

use crate::decomposition::NbDecomposition;
use crate::graph::{Diameter, Graph};
use crate::vertex_set::VertexSet;

pub use lemma1::{lemma1_min_ifvs, lemma1_min_ifvs_with_stats, BranchStats};
pub use lemma2::{lemma2_min_ifvs, min_two_neighbour_decomposition, TwoNeighbourCandidates};
pub use partition::{partition_around_u, UPartition};

/// The structural properties of a [`UPartition`] that can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// `S1 ∪ S2` and `T1 ∪ T2` are independent.
    ClassesIndependent,
    /// `S2` is complete to `T1 ∪ T2` and `T2` is complete to `S1 ∪ S2`.
    CompleteToOppositeClass,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::ClassesIndependent => f.write_str("(i) bipartition classes independent"),
            Property::CompleteToOppositeClass => {
                f.write_str("(iv) S2/T2 complete to the opposite class")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has diameter {0}, expected 2")]
    DiameterNotTwo(Diameter),
    #[error("deleting vertex {0} does not leave a bipartite graph")]
    NotDeletionBipartite(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("deleting vertex {0} leaves a bipartite graph; use the branching solver")]
    DeletionBipartiteVertexExists(usize),
    #[error("partition property {property} fails at ({}, {})", witness.0, witness.1)]
    StructureViolation {
        property: Property,
        witness: (usize, usize),
    },
}

/// How a minimum set was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    DeletionBipartite { u: usize },
    TwoNeighbourSet { x: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub decomposition: NbDecomposition,
    pub method: Method,
}

impl Solution {
    pub fn size(&self) -> usize {
        self.decomposition.size()
    }
}

/// Which condition of the diameter-2 characterisation holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Characterization {
    /// Condition (i): `G - u` is bipartite.
    DeletionBipartite {
        u: usize,
    },
    /// Condition (ii): `(A_X, V ∖ A_X)` is a near-bipartite decomposition.
    TwoNeighbourSet {
        x: VertexSet,
        a: VertexSet,
    },
    NotNearBipartite,
}

impl Characterization {
    pub fn is_near_bipartite(&self) -> bool {
        !matches!(self, Characterization::NotNearBipartite)
    }
}

pub(crate) fn require_diameter_two(g: &Graph) -> Result<(), SolveError> {
    match g.diameter() {
        Diameter::Finite(2) => Ok(()),
        d => Err(SolveError::DiameterNotTwo(d)),
    }
}

/// Smallest `u` such that `G - u` is bipartite.
pub fn find_deletion_bipartite_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&u| g.is_bipartite_without(u))
}

/// Minimum independent feedback vertex set of a diameter-2 graph; `None` if
/// the graph is not near-bipartite.
pub fn solve_min_ifvs_diam2(g: &Graph) -> Result<Option<Solution>, SolveError> {
    require_diameter_two(g)?;
    if let Some(u) = find_deletion_bipartite_vertex(g) {
        let p = partition::partition_unchecked(g, u)?;
        let (a, _) = lemma1::solve_on_partition(g, &p);
        return Ok(Some(Solution {
            decomposition: NbDecomposition::new(a),
            method: Method::DeletionBipartite { u },
        }));
    }
    Ok(min_two_neighbour_decomposition(g).map(|(x, a)| Solution {
        decomposition: NbDecomposition::new(a),
        method: Method::TwoNeighbourSet { x },
    }))
}

pub fn yang_yuan_characterize(g: &Graph) -> Result<Characterization, SolveError> {
    require_diameter_two(g)?;
    if let Some(u) = find_deletion_bipartite_vertex(g) {
        return Ok(Characterization::DeletionBipartite { u });
    }
    Ok(TwoNeighbourCandidates::new(g)
        .find(|(_, a)| crate::decomposition::is_valid_decomposition(g, a))
        .map_or(Characterization::NotNearBipartite, |(x, a)| {
            Characterization::TwoNeighbourSet { x, a }
        }))
}

pub fn yang_yuan_near_bipartite(g: &Graph) -> Result<bool, SolveError> {
    Ok(yang_yuan_characterize(g)?.is_near_bipartite())
}
