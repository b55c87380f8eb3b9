//! Branching over good 2-colourings when `G - u` is bipartite.
//!
//! Colour 1 is the candidate `A`, colour 2 must induce a forest. The four
//! twin-sets `S2`, `T2`, `Z ∩ S1`, `Z ∩ T1` are coloured almost uniformly (one
//! representative each may differ), which leaves at most 2^8 base branches.
//! Each base branch is then completed on `S1' ∪ T1' ∪ {u}` in at most `n + 2`
//! ways, using the fact that with `u` coloured 2 every component of
//! `G[S1' ∪ T1']` must have its two classes coloured oppositely.

use std::cmp::Ordering;

use crate::decomposition::{is_valid_decomposition, NbDecomposition};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::partition::{partition_unchecked, UPartition};
use super::{require_diameter_two, SolveError};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchStats {
    /// Uniform twin-set colourings tried, before eager discarding.
    pub twin_branches: usize,
    /// Base branches that survived the 1-edge / 2-cycle check.
    pub surviving_branches: usize,
    /// Complete colourings examined.
    pub completions: usize,
}

/// Minimum independent feedback vertex set of a diameter-2 graph in which
/// `G - u` is bipartite.
pub fn lemma1_min_ifvs(g: &Graph, u: usize) -> Result<NbDecomposition, SolveError> {
    lemma1_min_ifvs_with_stats(g, u).map(|(d, _)| d)
}

pub fn lemma1_min_ifvs_with_stats(
    g: &Graph,
    u: usize,
) -> Result<(NbDecomposition, BranchStats), SolveError> {
    if u >= g.n() {
        return Err(SolveError::VertexOutOfRange(u));
    }
    require_diameter_two(g)?;
    let p = partition_unchecked(g, u)?;
    let (a, stats) = solve_on_partition(g, &p);
    Ok((NbDecomposition::new(a), stats))
}

pub(crate) fn solve_on_partition(g: &Graph, p: &UPartition) -> (VertexSet, BranchStats) {
    let mut search = Search::new(g, p);
    search.run();
    let best = search
        .best
        .expect("either bipartition class is a valid colour-1 set");
    (best, search.stats)
}

/// One side of a component of `G[S1' ∪ T1']`.
struct Component {
    s_side: VertexSet,
    t_side: VertexSet,
}

struct Search<'a> {
    g: &'a Graph,
    p: &'a UPartition,
    s1p: VertexSet,
    t1p: VertexSet,
    components: Vec<Component>,
    best: Option<VertexSet>,
    stats: BranchStats,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, p: &'a UPartition) -> Self {
        let s1p = p.s1_prime();
        let t1p = p.t1_prime();
        let components = g
            .components_within(&s1p.union(&t1p))
            .into_iter()
            .map(|comp| {
                let comp = VertexSet::from_vertices(g.n(), comp);
                Component {
                    s_side: comp.intersection(&s1p),
                    t_side: comp.intersection(&t1p),
                }
            })
            .collect();
        Self {
            g,
            p,
            s1p,
            t1p,
            components,
            best: None,
            stats: BranchStats::default(),
        }
    }

    fn run(&mut self) {
        let n = self.g.n();
        // The representative W of each twin-set is coloured on its own; the
        // rest of the twin-set takes one shared colour.
        let mut groups: Vec<VertexSet> = Vec::new();
        for twins in self.p.twin_sets() {
            if let Some(rep) = twins.first() {
                groups.push(VertexSet::from_vertices(n, [rep]));
                let mut rest = twins;
                rest.remove(rep);
                if !rest.is_empty() {
                    groups.push(rest);
                }
            }
        }
        for mask in 0u32..1 << groups.len() {
            self.stats.twin_branches += 1;
            let mut ones = VertexSet::new(n);
            let mut twos = VertexSet::new(n);
            for (i, group) in groups.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    ones.union_with(group);
                } else {
                    twos.union_with(group);
                }
            }
            if !self.g.is_independent(&ones) || !self.g.induces_forest(&twos) {
                continue;
            }
            self.stats.surviving_branches += 1;
            self.complete(&ones);
        }
    }

    /// `ones` is the colour-1 part of a surviving base branch; everything
    /// outside the returned candidate `A` is colour 2.
    fn complete(&mut self, ones: &VertexSet) {
        let u = self.p.u;

        // u = 1 forces its neighbours in S1' ∪ T1' to 2.
        let mut with_u = ones.clone();
        with_u.insert(u);
        self.consider(with_u);

        // u = 2
        if self.components.is_empty() {
            self.consider(ones.clone());
            return;
        }
        let far = self.p.s2.union(&self.p.t2);
        if far.is_empty() {
            // Colour the smaller class of every component 1.
            let mut a = ones.clone();
            for c in &self.components {
                let s_first = match c.s_side.len().cmp(&c.t_side.len()) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => c.s_side.cmp_lex(&c.t_side) == Ordering::Less,
                };
                a.union_with(if s_first { &c.s_side } else { &c.t_side });
            }
            self.consider(a);
            return;
        }

        let s2_has_one = !self.p.s2.is_disjoint(ones);
        let t2_has_one = !self.p.t2.is_disjoint(ones);
        match (s2_has_one, t2_has_one) {
            // T1' and S1' would both be forced to 2.
            (true, true) => {}
            // A colour-1 vertex of S2 sees all of T1', which goes to 2, so S1' goes to 1.
            (true, false) => self.consider(ones.union(&self.s1p)),
            (false, true) => self.consider(ones.union(&self.t1p)),
            (false, false) => {
                // All of S2 ∪ T2 is coloured 2. A colour-2 vertex s ∈ S2 makes
                // u-t-s-t' a 4-cycle for any two colour-2 vertices t, t' ∈ T1',
                // so at most one vertex of T1' is coloured 2 (and symmetrically
                // for T2 and S1'). Guess it; the other side follows componentwise.
                let guess_t_side = !self.p.s2.is_empty();
                let side = if guess_t_side { &self.t1p } else { &self.s1p };
                let candidates: Vec<Option<usize>> =
                    std::iter::once(None).chain(side.iter().map(Some)).collect();
                for two in candidates {
                    if let Some(a) = self.guessed_colouring(ones, guess_t_side, two) {
                        self.consider(a);
                    } else {
                        self.stats.completions += 1;
                    }
                }
            }
        }
    }

    /// Colour the guessed side all 1 except `two`, and each component's other
    /// side opposite to it. `None` if `two` shares its class in its component
    /// with a colour-1 vertex, which would give that class two colours.
    fn guessed_colouring(
        &self,
        ones: &VertexSet,
        guess_t_side: bool,
        two: Option<usize>,
    ) -> Option<VertexSet> {
        let mut a = ones.clone();
        for c in &self.components {
            let (guessed, other) = if guess_t_side {
                (&c.t_side, &c.s_side)
            } else {
                (&c.s_side, &c.t_side)
            };
            match two {
                Some(t) if guessed.contains(t) => {
                    if guessed.len() > 1 {
                        return None;
                    }
                    a.union_with(other);
                }
                _ => a.union_with(guessed),
            }
        }
        Some(a)
    }

    fn consider(&mut self, a: VertexSet) {
        self.stats.completions += 1;
        if let Some(best) = &self.best {
            if a.cmp_size_lex(best) != Ordering::Less {
                return;
            }
        }
        if is_valid_decomposition(self.g, &a) {
            self.best = Some(a);
        }
    }
}
