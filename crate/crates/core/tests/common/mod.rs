#![allow(dead_code)]

use nearbip::graph::{Diameter, Graph};
use nearbip::reduction::{CnfFormula, Literal};

/// All vertex pairs of `0..n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// The labelled graph on `n` vertices whose edges are the set bits of `mask`
/// over [`pairs`].
pub fn graph_from_mask(n: usize, all_pairs: &[(usize, usize)], mask: u64) -> Graph {
    let chosen: Vec<_> = all_pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_edge_list(n, &chosen).unwrap()
}

pub fn has_diameter_two(g: &Graph) -> bool {
    g.diameter() == Diameter::Finite(2)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, &edges).unwrap()
}

/// Random 3-CNF with `m` clauses over `n ≥ 3` variables, three distinct
/// variables per clause.
pub fn random_formula<R: rand::Rng>(rng: &mut R, n: usize, m: usize) -> CnfFormula {
    use rand::seq::index::sample;
    let clauses = (0..m)
        .map(|_| {
            let vars = sample(rng, n, 3);
            let mut it = vars.iter().map(|v| Literal {
                var: v + 1,
                positive: rng.gen_bool(0.5),
            });
            [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

/// Every satisfying assignment, by brute force.
pub fn satisfying_assignments(f: &CnfFormula) -> Vec<Vec<bool>> {
    let n = f.num_vars();
    (0u32..1 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|a| f.is_satisfied_by(a))
        .collect()
}
