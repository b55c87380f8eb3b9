//! The 8-vertex clause gadget.
//!
//! Vertex ids: `X1, X2, X3` are 0, 1, 2 and `Y4..Y8` are 3..=7. A
//! decomposition of the gadget exists with any chosen subset of at most two
//! `X` vertices in `A` (and the others in `B`), but none with all three.

use thiserror::Error;

use crate::decomposition::is_valid_decomposition;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const X1: usize = 0;
pub const X2: usize = 1;
pub const X3: usize = 2;
pub const Y4: usize = 3;
pub const Y5: usize = 4;
pub const Y6: usize = 5;
pub const Y7: usize = 6;
pub const Y8: usize = 7;

pub const NAMES: [&str; 8] = ["X1", "X2", "X3", "Y4", "Y5", "Y6", "Y7", "Y8"];

pub const EDGES: [(usize, usize); 10] = [
    (X1, Y4),
    (X2, Y5),
    (X2, Y8),
    (X3, Y6),
    (X3, Y7),
    (Y4, Y5),
    (Y4, Y6),
    (Y5, Y7),
    (Y6, Y8),
    (Y7, Y8),
];

/// Swaps `X2↔X3`, `Y5↔Y6`, `Y7↔Y8`.
pub const SWAP_X2_X3: [usize; 8] = [X1, X3, X2, Y4, Y6, Y5, Y8, Y7];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("all three literal vertices requested in A")]
    TooManyLiterals,
    #[error("gadget vertex {0} is not a literal vertex")]
    NotALiteral(usize),
}

pub fn build_constraint_graph() -> Graph {
    Graph::from_edge_list(8, &EDGES).expect("gadget edges are valid")
}

/// A valid `A` of the gadget with `A ∩ {X1, X2, X3} = x`.
///
/// Subsets of `{X1, X2}` take `Y6, Y7`; `{X2, X3}` takes `Y4`; subsets
/// containing `X3` but not `X2` are the images of the first case under
/// [`SWAP_X2_X3`].
pub fn constraint_decomposition(x: &[usize]) -> Result<VertexSet, ConstraintError> {
    if let Some(&bad) = x.iter().find(|&&v| v > X3) {
        return Err(ConstraintError::NotALiteral(bad));
    }
    let x = VertexSet::from_vertices(8, x.iter().copied());
    if x.len() == 3 {
        return Err(ConstraintError::TooManyLiterals);
    }
    let a = match (x.contains(X2), x.contains(X3)) {
        (_, false) => x.union(&VertexSet::from_vertices(8, [Y6, Y7])),
        (true, true) => VertexSet::from_vertices(8, [X2, X3, Y4]),
        (false, true) => {
            let image = x.iter().map(|v| SWAP_X2_X3[v]);
            let base = VertexSet::from_vertices(8, image.chain([Y6, Y7]));
            VertexSet::from_vertices(8, base.iter().map(|v| SWAP_X2_X3[v]))
        }
    };
    debug_assert!(is_valid_decomposition(&build_constraint_graph(), &a));
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_decomposition;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(8, vs.iter().copied())
    }

    #[test]
    fn shape() {
        let j = build_constraint_graph();
        assert_eq!(j.n(), 8);
        assert_eq!(j.edge_count(), 10);
        let degrees: Vec<_> = (0..8).map(|v| j.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 2, 3, 3, 3, 3, 3]);
        assert!(!j.has_triangle());
    }

    #[test]
    fn swap_is_an_automorphism() {
        let j = build_constraint_graph();
        for &(u, v) in j.edges() {
            assert!(j.has_edge(SWAP_X2_X3[u], SWAP_X2_X3[v]));
        }
        for v in 0..8 {
            assert_eq!(SWAP_X2_X3[SWAP_X2_X3[v]], v);
        }
    }

    #[test]
    fn stated_cases() {
        assert_eq!(
            constraint_decomposition(&[X1, X2]).unwrap(),
            set(&[X1, X2, Y6, Y7])
        );
        assert_eq!(
            constraint_decomposition(&[X2, X3]).unwrap(),
            set(&[X2, X3, Y4])
        );
        assert_eq!(
            constraint_decomposition(&[X1, X3]).unwrap(),
            set(&[X1, X3, Y5, Y8])
        );
        assert_eq!(constraint_decomposition(&[]).unwrap(), set(&[Y6, Y7]));
        assert_eq!(
            constraint_decomposition(&[X1, X2, X3]),
            Err(ConstraintError::TooManyLiterals)
        );
        assert_eq!(
            constraint_decomposition(&[Y4]),
            Err(ConstraintError::NotALiteral(Y4))
        );
    }

    #[test]
    fn every_allowed_subset_is_realised() {
        let j = build_constraint_graph();
        for mask in 0u32..8 {
            if mask == 7 {
                continue;
            }
            let x: Vec<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            let a = constraint_decomposition(&x).unwrap();
            assert!(validate_decomposition(&j, &a).is_valid(), "{x:?} -> {a:?}");
            for p in 0..3 {
                assert_eq!(a.contains(p), x.contains(&p));
            }
        }
    }
}
