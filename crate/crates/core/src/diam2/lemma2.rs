use std::cmp::Ordering;

use itertools::{Combinations, Itertools};

use crate::decomposition::{is_valid_decomposition, NbDecomposition};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::{find_deletion_bipartite_vertex, SolveError};

/// Every `X` with `|X| ∈ {4, 5}` paired with its 2-neighbour set `A_X`, sizes
/// ascending and each size in lexicographic order.
pub struct TwoNeighbourCandidates<'g> {
    g: &'g Graph,
    size: usize,
    combos: Combinations<std::ops::Range<usize>>,
    counts: Vec<u8>,
}

impl<'g> TwoNeighbourCandidates<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self {
            g,
            size: 4,
            combos: (0..g.n()).combinations(4),
            counts: vec![0; g.n()],
        }
    }

    fn two_neighbour_set(&mut self, x: &[usize]) -> VertexSet {
        let n = self.g.n();
        let mut a = VertexSet::new(n);
        for &v in x {
            for &w in self.g.neighbours(v) {
                self.counts[w] += 1;
            }
        }
        for &v in x {
            for &w in self.g.neighbours(v) {
                if self.counts[w] >= 2 && !x.contains(&w) {
                    a.insert(w);
                }
                self.counts[w] = 0;
            }
        }
        a
    }
}

impl Iterator for TwoNeighbourCandidates<'_> {
    type Item = (VertexSet, VertexSet);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(x) = self.combos.next() {
                let a = self.two_neighbour_set(&x);
                return Some((VertexSet::from_vertices(self.g.n(), x), a));
            }
            if self.size == 5 {
                return None;
            }
            self.size = 5;
            self.combos = (0..self.g.n()).combinations(5);
        }
    }
}

/// Smallest valid `A_X` over all `X` with `4 ≤ |X| ≤ 5`, ties broken
/// lexicographically on `A_X`. Returns `(X, A_X)`.
pub fn min_two_neighbour_decomposition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut best: Option<(VertexSet, VertexSet)> = None;
    for (x, a) in TwoNeighbourCandidates::new(g) {
        if let Some((_, best_a)) = &best {
            if a.cmp_size_lex(best_a) != Ordering::Less {
                continue;
            }
        }
        if is_valid_decomposition(g, &a) {
            best = Some((x, a));
        }
    }
    best
}

/// Minimum independent feedback vertex set when no `G - u` is bipartite.
///
/// Refuses graphs that have a deletion-bipartite vertex: on those the
/// enumeration is not guaranteed to reach the minimum. Diameter is not
/// rechecked here; `None` means no `A_X` is a near-bipartite decomposition.
pub fn lemma2_min_ifvs(g: &Graph) -> Result<Option<NbDecomposition>, SolveError> {
    if let Some(u) = find_deletion_bipartite_vertex(g) {
        return Err(SolveError::DeletionBipartiteVertexExists(u));
    }
    Ok(min_two_neighbour_decomposition(g).map(|(_, a)| NbDecomposition::new(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exact_min_ifvs;

    #[test]
    fn candidates_match_bitset_two_neighbour_set() {
        let g = Graph::from_edge_list(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 0),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let mut seen = 0;
        for (x, a) in TwoNeighbourCandidates::new(&g) {
            assert_eq!(a, g.two_neighbour_set(&x));
            seen += 1;
        }
        assert_eq!(seen, 35 + 21);
    }

    #[test]
    fn complete_graph_on_four() {
        assert_eq!(lemma2_min_ifvs(&Graph::complete(4)), Ok(None));
    }

    #[test]
    fn complement_of_seven_cycle() {
        let c7 = Graph::cycle(7);
        let pairs: Vec<_> = (0..7)
            .tuple_combinations()
            .filter(|&(u, v)| !c7.has_edge(u, v))
            .collect();
        let g = Graph::from_edge_list(7, &pairs).unwrap();
        assert_eq!(g.diameter(), crate::graph::Diameter::Finite(2));
        let oracle = exact_min_ifvs(&g, None).unwrap().minimum_size;
        match find_deletion_bipartite_vertex(&g) {
            Some(u) => assert_eq!(
                lemma2_min_ifvs(&g),
                Err(SolveError::DeletionBipartiteVertexExists(u))
            ),
            None => {
                let got = lemma2_min_ifvs(&g).unwrap().map(|d| d.size());
                assert_eq!(got, oracle);
            }
        }
    }

    #[test]
    fn refuses_when_deletion_bipartite_vertex_exists() {
        assert_eq!(
            lemma2_min_ifvs(&Graph::cycle(5)),
            Err(SolveError::DeletionBipartiteVertexExists(0))
        );
    }
}
