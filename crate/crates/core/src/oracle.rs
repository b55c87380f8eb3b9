//! Exponential-time ground truth for small graphs.
//!
//! Everything here is deliberately naive: candidate sets are enumerated by
//! increasing size in lexicographic order, so the first valid hit is the
//! `(size, lexicographic)` minimum. The solvers in [`crate::diam2`] are
//! checked against these routines.

use std::collections::VecDeque;

use itertools::Itertools;
use thiserror::Error;

use crate::decomposition::is_valid_decomposition;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_MIN_IFVS_LIMIT: usize = 26;
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, exact search is limited to {limit}")]
    SearchSpaceTooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub minimum_size: Option<usize>,
    pub witness: Option<VertexSet>,
    /// Every candidate size was examined; an absent result then means the
    /// graph is not near-bipartite.
    pub exhausted: bool,
}

/// Configurable exact search.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    limit: usize,
    prune: bool,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            limit: DEFAULT_MIN_IFVS_LIMIT,
            prune: true,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    /// Plain enumeration of all `s`-subsets, without the independence and
    /// edge-count pruning.
    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }

    /// Minimum independent feedback vertex set, searching sizes up to `budget`.
    pub fn min_ifvs(&self, g: &Graph, budget: Option<usize>) -> Result<OracleResult, OracleError> {
        let n = g.n();
        if n > self.limit {
            return Err(OracleError::SearchSpaceTooLarge {
                n,
                limit: self.limit,
            });
        }
        let cap = budget.map_or(n, |b| b.min(n));
        for size in 0..=cap {
            let hit = if self.prune {
                PrunedSearch::new(g, size).run()
            } else {
                (0..n)
                    .combinations(size)
                    .map(|c| VertexSet::from_vertices(n, c))
                    .find(|a| is_valid_decomposition(g, a))
            };
            if let Some(a) = hit {
                return Ok(OracleResult {
                    minimum_size: Some(size),
                    witness: Some(a),
                    exhausted: true,
                });
            }
        }
        Ok(OracleResult {
            minimum_size: None,
            witness: None,
            exhausted: cap == n,
        })
    }
}

/// Depth-first search over independent sets of one fixed size, in
/// lexicographic order.
struct PrunedSearch<'g> {
    g: &'g Graph,
    size: usize,
    max_degree: usize,
    chosen: VertexSet,
    blocked: Vec<usize>,
}

impl<'g> PrunedSearch<'g> {
    fn new(g: &'g Graph, size: usize) -> Self {
        Self {
            g,
            size,
            max_degree: (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0),
            chosen: VertexSet::new(g.n()),
            blocked: vec![0; g.n()],
        }
    }

    fn run(mut self) -> Option<VertexSet> {
        self.extend(0, 0)
    }

    fn extend(&mut self, start: usize, removed_edges: usize) -> Option<VertexSet> {
        let g = self.g;
        let picked = self.chosen.len();
        let remaining = self.size - picked;
        // B keeps n - size vertices and so at most n - size - 1 edges. Deleting
        // an independent set removes exactly the sum of its degrees.
        let allowed = (g.n() - self.size).saturating_sub(1);
        if g.edge_count() > removed_edges + remaining * self.max_degree + allowed {
            return None;
        }
        if remaining == 0 {
            return is_valid_decomposition(g, &self.chosen).then(|| self.chosen.clone());
        }
        for v in start..g.n() {
            if g.n() - v < remaining {
                break;
            }
            if self.blocked[v] > 0 {
                continue;
            }
            self.chosen.insert(v);
            for &w in g.neighbours(v) {
                self.blocked[w] += 1;
            }
            let found = self.extend(v + 1, removed_edges + g.degree(v));
            for &w in g.neighbours(v) {
                self.blocked[w] -= 1;
            }
            self.chosen.remove(v);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

pub fn exact_min_ifvs(g: &Graph, budget: Option<usize>) -> Result<OracleResult, OracleError> {
    Oracle::default().min_ifvs(g, budget)
}

pub fn is_near_bipartite_exact(g: &Graph) -> Result<bool, OracleError> {
    Ok(exact_min_ifvs(g, None)?.minimum_size.is_some())
}

/// Every valid `A`, ordered by `(size, lexicographic)`.
pub fn all_nb_decompositions(g: &Graph) -> Result<Vec<VertexSet>, OracleError> {
    all_nb_decompositions_with_limit(g, DEFAULT_ENUMERATION_LIMIT)
}

pub fn all_nb_decompositions_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Vec<VertexSet>, OracleError> {
    if g.n() > limit {
        return Err(OracleError::SearchSpaceTooLarge { n: g.n(), limit });
    }
    let mut out = Vec::new();
    let mut current = VertexSet::new(g.n());
    collect_independent(g, 0, &mut current, &mut out);
    out.sort_by(VertexSet::cmp_size_lex);
    Ok(out)
}

fn collect_independent(g: &Graph, start: usize, current: &mut VertexSet, out: &mut Vec<VertexSet>) {
    if is_valid_decomposition(g, current) {
        out.push(current.clone());
    }
    for v in start..g.n() {
        if g.neighbour_set(v).is_disjoint(current) {
            current.insert(v);
            collect_independent(g, v + 1, current, out);
            current.remove(v);
        }
    }
}

/// A closed walk of odd length, found by BFS on the parity double cover.
/// Consecutive entries (and last/first) are adjacent.
pub fn odd_closed_walk(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for s in 0..n {
        let mut parent: Vec<[Option<usize>; 2]> = vec![[None, None]; n];
        let mut seen = vec![[false, false]; n];
        seen[s][0] = true;
        let mut queue = VecDeque::from([(s, 0usize)]);
        while let Some((v, p)) = queue.pop_front() {
            for &w in g.neighbours(v) {
                let q = 1 - p;
                if !seen[w][q] {
                    seen[w][q] = true;
                    parent[w][q] = Some(v);
                    queue.push_back((w, q));
                }
            }
        }
        if !seen[s][1] {
            continue;
        }
        let mut walk = Vec::new();
        let (mut v, mut p) = (s, 1);
        loop {
            let prev = parent[v][p].expect("reached state has a parent");
            walk.push(prev);
            p = 1 - p;
            v = prev;
            if v == s && p == 0 {
                break;
            }
        }
        walk.reverse();
        return Some(walk);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &pairs).unwrap()
    }

    /// Brute force over every subset with no search order at all.
    fn brute_force_min(g: &Graph) -> Option<usize> {
        (0u32..1 << g.n())
            .filter(|mask| {
                let a = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|i| mask >> i & 1 == 1));
                is_valid_decomposition(g, &a)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
    }

    #[test]
    fn complete_graph_on_four_is_not_near_bipartite() {
        let r = exact_min_ifvs(&Graph::complete(4), None).unwrap();
        assert_eq!(r.minimum_size, None);
        assert!(r.witness.is_none());
        assert!(r.exhausted);
        assert!(!is_near_bipartite_exact(&Graph::complete(4)).unwrap());
    }

    #[test]
    fn small_named_graphs() {
        let c5 = Graph::cycle(5);
        assert_eq!(brute_force_min(&c5), Some(1));
        let r = exact_min_ifvs(&c5, None).unwrap();
        assert_eq!(r.minimum_size, Some(1));
        assert_eq!(r.witness.unwrap().to_vec(), vec![0]);
        assert!(is_near_bipartite_exact(&c5).unwrap());

        let k33 = Graph::from_edge_list(
            6,
            &(0..3)
                .flat_map(|i| (3..6).map(move |j| (i, j)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(brute_force_min(&k33), Some(2));
        assert_eq!(exact_min_ifvs(&k33, None).unwrap().minimum_size, Some(2));
    }

    #[test]
    fn petersen_graph() {
        // 15 edges, and deleting an independent A removes 3|A| of them; a
        // forest on 10 - |A| vertices forces |A| >= 3.
        let p = petersen();
        let expected = brute_force_min(&p);
        assert_eq!(expected, Some(3));
        let r = exact_min_ifvs(&p, None).unwrap();
        assert_eq!(r.minimum_size, expected);
        assert!(is_valid_decomposition(&p, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn budget_and_limits() {
        let p = petersen();
        let capped = exact_min_ifvs(&p, Some(2)).unwrap();
        assert_eq!(capped.minimum_size, None);
        assert!(!capped.exhausted);
        assert_eq!(
            Oracle::new().with_limit(9).min_ifvs(&p, None),
            Err(OracleError::SearchSpaceTooLarge { n: 10, limit: 9 })
        );
        assert!(matches!(
            all_nb_decompositions(&Graph::empty(21)),
            Err(OracleError::SearchSpaceTooLarge { n: 21, limit: 20 })
        ));
    }

    #[test]
    fn forests_need_no_deletions() {
        let r = exact_min_ifvs(&Graph::path(6), None).unwrap();
        assert_eq!(r.minimum_size, Some(0));
        assert!(r.witness.unwrap().is_empty());
    }

    #[test]
    fn single_edge_decompositions() {
        let g = Graph::path(2);
        let all: Vec<Vec<usize>> = all_nb_decompositions(&g)
            .unwrap()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(all, vec![vec![], vec![0], vec![1]]);
    }

    #[test]
    fn pruning_does_not_change_answers() {
        // every labelled graph on 5 vertices
        let pairs: Vec<_> = (0..5).tuple_combinations().collect();
        for mask in 0u32..1 << pairs.len() {
            let chosen: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edge_list(5, &chosen).unwrap();
            let pruned = Oracle::new().min_ifvs(&g, None).unwrap();
            let plain = Oracle::new().without_pruning().min_ifvs(&g, None).unwrap();
            assert_eq!(pruned, plain);
            assert_eq!(pruned.minimum_size, brute_force_min(&g));
        }
    }

    #[test]
    fn odd_walks() {
        assert!(odd_closed_walk(&Graph::cycle(6)).is_none());
        let walk = odd_closed_walk(&Graph::cycle(5)).unwrap();
        assert_eq!(walk.len() % 2, 1);
        let g = Graph::cycle(5);
        for (i, &v) in walk.iter().enumerate() {
            assert!(g.has_edge(v, walk[(i + 1) % walk.len()]));
        }
    }
}
