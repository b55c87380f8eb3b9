//! Structural facts the branching solver relies on, checked against
//! exhaustive search on small diameter-2 graphs.

mod common;

use nearbip::diam2::{
    find_deletion_bipartite_vertex, lemma1_min_ifvs_with_stats, partition_around_u,
    TwoNeighbourCandidates, UPartition,
};
use nearbip::generate::random_diameter_two;
use nearbip::graph::Graph;
use nearbip::oracle::{all_nb_decompositions, exact_min_ifvs};
use nearbip::VertexSet;

use common::{graph_from_mask, has_diameter_two, pairs};

fn small_corpus(max_n: usize) -> impl Iterator<Item = Graph> {
    (3..=max_n).flat_map(|n| {
        let all = pairs(n);
        (0u64..1 << all.len())
            .map(move |mask| graph_from_mask(n, &all, mask))
            .filter(has_diameter_two)
    })
}

fn random_corpus() -> impl Iterator<Item = Graph> {
    (0u64..60).map(|seed| random_diameter_two(8 + (seed % 5) as usize, seed).unwrap())
}

fn minimum_decompositions(g: &Graph) -> Vec<VertexSet> {
    let all = all_nb_decompositions(g).unwrap();
    let Some(min) = all.first().map(VertexSet::len) else {
        return all;
    };
    all.into_iter().take_while(|a| a.len() == min).collect()
}

/// Every vertex of `I` but at most one lies on the same side of `A`.
fn nearly_uniform(i: &VertexSet, a: &VertexSet) -> bool {
    let inside = i.intersection_len(a);
    inside <= 1 || i.len() - inside <= 1
}

fn check_twin_sets(p: &UPartition, a: &VertexSet) -> Result<(), String> {
    for (k, twins) in p.twin_sets().iter().enumerate() {
        if !nearly_uniform(twins, a) {
            return Err(format!("twin-set {k} {twins} split by {a}"));
        }
    }
    Ok(())
}

/// With `u ∉ A`, each component of `G[S1' ∪ T1']` has its `S` part and its
/// `T` part each on one side of `A`, on opposite sides.
fn check_components(g: &Graph, p: &UPartition, a: &VertexSet) -> Result<(), String> {
    if a.contains(p.u) {
        return Ok(());
    }
    let within = p.s1_prime().union(&p.t1_prime());
    let s = p.s();
    for comp in g.components_within(&within) {
        let comp = VertexSet::from_vertices(g.n(), comp);
        let s_side = comp.intersection(&s);
        let t_side = comp.difference(&s);
        let s_in = s_side.is_subset(a);
        let t_in = t_side.is_subset(a);
        let s_out = s_side.is_disjoint(a);
        let t_out = t_side.is_disjoint(a);
        if !((s_in && t_out) || (s_out && t_in)) {
            return Err(format!("component {comp} not split oppositely by {a}"));
        }
    }
    Ok(())
}

#[test]
fn optimal_colourings_are_nearly_uniform_on_twin_sets() {
    for g in small_corpus(6).chain(random_corpus()) {
        let Some(u) = find_deletion_bipartite_vertex(&g) else {
            continue;
        };
        let p = partition_around_u(&g, u).unwrap();
        for a in minimum_decompositions(&g) {
            if let Err(e) = check_twin_sets(&p, &a) {
                panic!("{e} on {:?}", g.edges());
            }
        }
    }
}

#[test]
fn good_colourings_split_components_oppositely() {
    for g in small_corpus(6).chain(random_corpus()) {
        let Some(u) = find_deletion_bipartite_vertex(&g) else {
            continue;
        };
        let p = partition_around_u(&g, u).unwrap();
        for a in all_nb_decompositions(&g).unwrap() {
            if let Err(e) = check_components(&g, &p, &a) {
                panic!("{e} on {:?}", g.edges());
            }
        }
    }
}

#[test]
fn some_two_neighbour_set_is_optimal() {
    let mut exercised = 0;
    for g in small_corpus(7).chain(random_corpus()) {
        if find_deletion_bipartite_vertex(&g).is_some() {
            continue;
        }
        let Some(min) = exact_min_ifvs(&g, None).unwrap().minimum_size else {
            continue;
        };
        exercised += 1;
        let found = TwoNeighbourCandidates::new(&g)
            .any(|(_, a)| a.len() == min && nearbip::decomposition::is_valid_decomposition(&g, &a));
        assert!(found, "no optimal 2-neighbour set on {:?}", g.edges());
    }
    assert!(exercised > 0);
}

#[test]
fn branch_counts_stay_within_bound() {
    for g in small_corpus(6).chain(random_corpus()) {
        let n = g.n();
        for u in (0..n).filter(|&u| g.is_bipartite_without(u)) {
            let (_, stats) = lemma1_min_ifvs_with_stats(&g, u).unwrap();
            assert!(stats.twin_branches <= 1 << 8);
            assert!(stats.surviving_branches <= stats.twin_branches);
            assert!(
                stats.completions <= (1 << 8) * (n + 2),
                "{stats:?} on {:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn every_deletion_bipartite_vertex_gives_the_minimum() {
    for g in small_corpus(6) {
        let min = exact_min_ifvs(&g, None).unwrap().minimum_size;
        for u in (0..g.n()).filter(|&u| g.is_bipartite_without(u)) {
            let (d, _) = lemma1_min_ifvs_with_stats(&g, u).unwrap();
            assert_eq!(Some(d.size()), min, "u = {u} on {:?}", g.edges());
        }
    }
}
