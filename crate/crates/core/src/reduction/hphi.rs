//! The diameter-3 graph `H_phi` built from a 3-CNF formula.
//!
//! `H_phi` is `m` clause graphs side by side plus a root vertex `v0`. Each
//! clause graph is an array of `n + 5m` block rows and one dominating row,
//! eight columns wide. Every block cell holds a true vertex and a false
//! vertex (mates). Along a row of `H_phi` (all `8m` columns) every true
//! vertex is joined to every false vertex except its mate. A dominating
//! vertex is joined to its whole column and to `v0`. Finally each clause
//! graph `k` embeds the gadget: `X_p` is the literal's cell in row
//! `var(l_p)`, column `p` (true vertex for a positive literal, false vertex
//! otherwise), and `Y_p` is the true vertex of column `p` in row `p - 3` of
//! the `k`-th five-row clause block.
//!
//! Ids are assigned clause-major, then row-major, then by column, true
//! before false; each clause graph's dominating row follows its block rows,
//! and `v0` is last.

use std::fmt;

use thiserror::Error;

use crate::decomposition::{validate_decomposition, NbDecomposition, Verdict};
use crate::graph::{Diameter, Graph};
use crate::vertex_set::VertexSet;

use super::cnf::CnfFormula;
use super::constraint::{self, constraint_decomposition};

pub const COLUMNS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    True,
    False,
}

/// Position of a vertex. Clause, row and column are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coord {
    Cell {
        clause: usize,
        row: usize,
        col: usize,
        polarity: Polarity,
    },
    Dominating {
        clause: usize,
        col: usize,
    },
    Root,
}

/// Row, column and id arithmetic for a given `(n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub num_vars: usize,
    pub num_clauses: usize,
}

impl Layout {
    /// Rows of the variable and clause blocks, `n + 5m`.
    pub fn block_rows(&self) -> usize {
        self.num_vars + 5 * self.num_clauses
    }

    fn clause_graph_size(&self) -> usize {
        2 * COLUMNS * self.block_rows() + COLUMNS
    }

    /// `16m(n + 5m) + 8m + 1`
    pub fn vertex_count(&self) -> usize {
        self.num_clauses * self.clause_graph_size() + 1
    }

    pub fn edge_count(&self) -> usize {
        let m = self.num_clauses;
        let r = self.block_rows();
        let cols = COLUMNS * m;
        let row_edges = r * cols * (cols - 1);
        let dominating = cols * (2 * r + 1);
        row_edges + dominating + constraint::EDGES.len() * m
    }

    pub fn root(&self) -> usize {
        self.vertex_count() - 1
    }

    pub fn vertex(&self, coord: Coord) -> usize {
        match coord {
            Coord::Cell {
                clause,
                row,
                col,
                polarity,
            } => {
                (clause - 1) * self.clause_graph_size()
                    + ((row - 1) * COLUMNS + (col - 1)) * 2
                    + usize::from(polarity == Polarity::False)
            }
            Coord::Dominating { clause, col } => {
                (clause - 1) * self.clause_graph_size() + 2 * COLUMNS * self.block_rows() + col - 1
            }
            Coord::Root => self.root(),
        }
    }

    pub fn coord(&self, id: usize) -> Coord {
        assert!(id < self.vertex_count(), "vertex {id} out of range");
        if id == self.root() {
            return Coord::Root;
        }
        let clause = id / self.clause_graph_size() + 1;
        let offset = id % self.clause_graph_size();
        let cells = 2 * COLUMNS * self.block_rows();
        if offset >= cells {
            return Coord::Dominating {
                clause,
                col: offset - cells + 1,
            };
        }
        let cell = offset / 2;
        Coord::Cell {
            clause,
            row: cell / COLUMNS + 1,
            col: cell % COLUMNS + 1,
            polarity: if offset.is_multiple_of(2) {
                Polarity::True
            } else {
                Polarity::False
            },
        }
    }

    /// First block row of the `k`-th clause block.
    fn clause_block_start(&self, k: usize) -> usize {
        self.num_vars + 5 * (k - 1) + 1
    }
}

/// A built `H_phi` with its gadget vertices.
#[derive(Debug, Clone)]
pub struct HphiInstance {
    pub formula: CnfFormula,
    pub layout: Layout,
    pub graph: Graph,
    /// Per clause, the ids of `X1, X2, X3, Y4, ..., Y8`.
    pub gadgets: Vec<[usize; 8]>,
}

impl HphiInstance {
    pub fn root(&self) -> usize {
        self.layout.root()
    }

    pub fn coord(&self, id: usize) -> Coord {
        self.layout.coord(id)
    }
}

fn gadget_vertices(layout: &Layout, formula: &CnfFormula) -> Vec<[usize; 8]> {
    formula
        .clauses()
        .iter()
        .enumerate()
        .map(|(i, clause)| {
            let k = i + 1;
            let mut ids = [0; 8];
            for (p, lit) in clause.iter().enumerate() {
                ids[p] = layout.vertex(Coord::Cell {
                    clause: k,
                    row: lit.var,
                    col: p + 1,
                    polarity: if lit.positive {
                        Polarity::True
                    } else {
                        Polarity::False
                    },
                });
            }
            for p in 4..=8 {
                ids[p - 1] = layout.vertex(Coord::Cell {
                    clause: k,
                    row: layout.clause_block_start(k) + p - 4,
                    col: p,
                    polarity: Polarity::True,
                });
            }
            ids
        })
        .collect()
}

pub fn build_hphi(formula: &CnfFormula) -> HphiInstance {
    let layout = Layout {
        num_vars: formula.num_vars(),
        num_clauses: formula.num_clauses(),
    };
    let m = layout.num_clauses;
    let rows = layout.block_rows();
    let mut pairs = Vec::with_capacity(layout.edge_count());

    let cell = |clause, row, col, polarity| {
        layout.vertex(Coord::Cell {
            clause,
            row,
            col,
            polarity,
        })
    };
    for row in 1..=rows {
        for k in 1..=m {
            for c in 1..=COLUMNS {
                let t = cell(k, row, c, Polarity::True);
                for k2 in 1..=m {
                    for c2 in 1..=COLUMNS {
                        if (k, c) != (k2, c2) {
                            pairs.push((t, cell(k2, row, c2, Polarity::False)));
                        }
                    }
                }
            }
        }
    }
    for k in 1..=m {
        for c in 1..=COLUMNS {
            let d = layout.vertex(Coord::Dominating { clause: k, col: c });
            for row in 1..=rows {
                pairs.push((d, cell(k, row, c, Polarity::True)));
                pairs.push((d, cell(k, row, c, Polarity::False)));
            }
            pairs.push((d, layout.root()));
        }
    }
    let gadgets = gadget_vertices(&layout, formula);
    for ids in &gadgets {
        for &(a, b) in &constraint::EDGES {
            pairs.push((ids[a], ids[b]));
        }
    }

    let graph = Graph::from_edge_list(layout.vertex_count(), &pairs).expect("ids are in range");
    HphiInstance {
        formula: formula.clone(),
        layout,
        graph,
        gadgets,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub checks: Vec<Check>,
}

impl CertificateReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Re-derives the structural claims about `h.graph` from scratch. Never
/// panics on a mutated instance; every failure is reported.
pub fn certify_hphi(h: &HphiInstance) -> CertificateReport {
    let g = &h.graph;
    let layout = h.layout;
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| {
        checks.push(Check {
            name,
            passed,
            detail,
        })
    };

    let expected_n = layout.vertex_count();
    push(
        "vertex-count",
        g.n() == expected_n,
        format!("{} (expected {expected_n})", g.n()),
    );
    let expected_e = layout.edge_count();
    push(
        "edge-count",
        g.edge_count() == expected_e,
        format!("{} (expected {expected_e})", g.edge_count()),
    );
    let diameter = g.diameter();
    push(
        "diameter",
        diameter == Diameter::Finite(3),
        format!("{diameter} (expected 3)"),
    );
    push(
        "triangle-free",
        !g.has_triangle(),
        if g.has_triangle() {
            "triangle found".into()
        } else {
            "no triangle".into()
        },
    );

    let ids_ok = g.n() == expected_n;
    let (passed, detail) = if ids_ok {
        row_structure(h)
    } else {
        (false, "skipped: vertex ids do not match the layout".into())
    };
    push("row-structure", passed, detail);
    let (passed, detail) = if ids_ok {
        dominating_structure(h)
    } else {
        (false, "skipped: vertex ids do not match the layout".into())
    };
    push("dominating-block", passed, detail);

    let (passed, detail) = column_gadget_vertices(h);
    push("column-gadget-vertex", passed, detail);
    let (passed, detail) = induced_gadgets(h);
    push("induced-gadget", passed, detail);

    CertificateReport { checks }
}

fn row_structure(h: &HphiInstance) -> (bool, String) {
    let g = &h.graph;
    let layout = h.layout;
    let m = layout.num_clauses;
    for row in 1..=layout.block_rows() {
        let falses = VertexSet::from_vertices(
            g.n(),
            (1..=m).flat_map(|k| {
                (1..=COLUMNS).map(move |c| {
                    layout.vertex(Coord::Cell {
                        clause: k,
                        row,
                        col: c,
                        polarity: Polarity::False,
                    })
                })
            }),
        );
        for k in 1..=m {
            for c in 1..=COLUMNS {
                let at = |polarity| {
                    layout.vertex(Coord::Cell {
                        clause: k,
                        row,
                        col: c,
                        polarity,
                    })
                };
                let (t, f) = (at(Polarity::True), at(Polarity::False));
                let seen = g.neighbour_set(t).intersection_len(&falses);
                if g.has_edge(t, f) || seen != COLUMNS * m - 1 {
                    return (
                        false,
                        format!("true vertex {t} (clause {k}, row {row}, column {c}) sees {seen} false vertices of its row"),
                    );
                }
            }
        }
    }
    (true, format!("{} rows", layout.block_rows()))
}

fn dominating_structure(h: &HphiInstance) -> (bool, String) {
    let g = &h.graph;
    let layout = h.layout;
    let rows = layout.block_rows();
    for k in 1..=layout.num_clauses {
        for c in 1..=COLUMNS {
            let d = layout.vertex(Coord::Dominating { clause: k, col: c });
            let column_ok = (1..=rows).all(|row| {
                [Polarity::True, Polarity::False].iter().all(|&polarity| {
                    g.has_edge(
                        d,
                        layout.vertex(Coord::Cell {
                            clause: k,
                            row,
                            col: c,
                            polarity,
                        }),
                    )
                })
            });
            if !column_ok || !g.has_edge(d, layout.root()) || g.degree(d) != 2 * rows + 1 {
                return (
                    false,
                    format!(
                        "dominating vertex {d} (clause {k}, column {c}) has degree {}",
                        g.degree(d)
                    ),
                );
            }
        }
    }
    (
        true,
        format!("{} dominating vertices", COLUMNS * layout.num_clauses),
    )
}

fn column_gadget_vertices(h: &HphiInstance) -> (bool, String) {
    let m = h.layout.num_clauses;
    if h.gadgets.len() != m {
        return (
            false,
            format!("{} gadgets for {m} clauses", h.gadgets.len()),
        );
    }
    let mut per_column = vec![0usize; COLUMNS * m];
    for ids in &h.gadgets {
        for &v in ids {
            if v >= h.layout.vertex_count() {
                return (false, format!("gadget vertex {v} out of range"));
            }
            match h.layout.coord(v) {
                Coord::Cell { clause, col, .. } => {
                    per_column[(clause - 1) * COLUMNS + col - 1] += 1
                }
                other => return (false, format!("gadget vertex {v} sits at {other:?}")),
            }
        }
    }
    match per_column.iter().position(|&c| c != 1) {
        Some(i) => (
            false,
            format!(
                "column {} of clause {} holds {} gadget vertices",
                i % COLUMNS + 1,
                i / COLUMNS + 1,
                per_column[i]
            ),
        ),
        None => (true, format!("{} columns", COLUMNS * m)),
    }
}

fn induced_gadgets(h: &HphiInstance) -> (bool, String) {
    let g = &h.graph;
    for (i, ids) in h.gadgets.iter().enumerate() {
        if ids.iter().any(|&v| v >= g.n()) {
            return (
                false,
                format!("clause {}: gadget vertex out of range", i + 1),
            );
        }
        for a in 0..8 {
            for b in a + 1..8 {
                let want =
                    constraint::EDGES.contains(&(a, b)) || constraint::EDGES.contains(&(b, a));
                if g.has_edge(ids[a], ids[b]) != want {
                    return (
                        false,
                        format!(
                            "clause {}: {}-{} should {}be an edge",
                            i + 1,
                            constraint::NAMES[a],
                            constraint::NAMES[b],
                            if want { "" } else { "not " }
                        ),
                    );
                }
            }
        }
    }
    (true, format!("{} gadgets", h.gadgets.len()))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("assignment has {got} values, formula has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    /// 1-based clause index.
    #[error("assignment falsifies clause {0}")]
    UnsatisfiedClause(usize),
    #[error("constructed split is not a near-bipartite decomposition: {0:?}")]
    InvalidEmbedding(Verdict),
}

/// Near-bipartite decomposition of `H_phi` from a satisfying assignment.
///
/// `v0` goes to `A` and the dominating blocks to `B`. In variable row `i`
/// the vertices of the value of `v_i` go to `B` and their mates to `A`. Each
/// gadget is completed with the literal vertices of false literals in `A`,
/// and every true vertex of a clause-block row follows the gadget vertex in
/// that row, with mates opposite.
pub fn assignment_to_decomposition(
    h: &HphiInstance,
    assignment: &[bool],
) -> Result<NbDecomposition, EmbedError> {
    let layout = h.layout;
    if assignment.len() != layout.num_vars {
        return Err(EmbedError::AssignmentLength {
            expected: layout.num_vars,
            got: assignment.len(),
        });
    }
    let mut gadget_a = Vec::with_capacity(layout.num_clauses);
    for (i, clause) in h.formula.clauses().iter().enumerate() {
        let false_literals: Vec<usize> = (0..3).filter(|&p| !clause[p].eval(assignment)).collect();
        let a = constraint_decomposition(&false_literals)
            .map_err(|_| EmbedError::UnsatisfiedClause(i + 1))?;
        gadget_a.push(a);
    }

    let n = h.graph.n();
    let mut a = VertexSet::new(n);
    for id in 0..n {
        let in_a = match layout.coord(id) {
            Coord::Root => true,
            Coord::Dominating { .. } => false,
            Coord::Cell { row, polarity, .. } if row <= layout.num_vars => {
                (polarity == Polarity::True) != assignment[row - 1]
            }
            Coord::Cell { row, polarity, .. } => {
                let offset = row - layout.num_vars - 1;
                let (block, j) = (offset / 5, offset % 5);
                // the gadget vertex of this row is Y_{j+4}, gadget id 3 + j
                let true_in_a = gadget_a[block].contains(constraint::Y4 + j);
                true_in_a == (polarity == Polarity::True)
            }
        };
        if in_a {
            a.insert(id);
        }
    }
    match validate_decomposition(&h.graph, &a) {
        Verdict::Valid => Ok(NbDecomposition::new(a)),
        verdict => Err(EmbedError::InvalidEmbedding(verdict)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::cnf::parse_dimacs_cnf;

    fn single_clause() -> CnfFormula {
        parse_dimacs_cnf("p cnf 3 1\n1 3 -2 0\n").unwrap()
    }

    #[test]
    fn layout_roundtrip() {
        let layout = Layout {
            num_vars: 4,
            num_clauses: 3,
        };
        for id in 0..layout.vertex_count() {
            assert_eq!(layout.vertex(layout.coord(id)), id);
        }
        assert_eq!(
            layout.coord(0),
            Coord::Cell {
                clause: 1,
                row: 1,
                col: 1,
                polarity: Polarity::True
            }
        );
        assert_eq!(layout.coord(layout.root()), Coord::Root);
    }

    #[test]
    fn single_clause_counts() {
        let h = build_hphi(&single_clause());
        assert_eq!(h.graph.n(), 16 * (3 + 5) + 8 + 1);
        assert_eq!(h.graph.n(), 137);
        assert_eq!(h.graph.edge_count(), h.layout.edge_count());
    }

    #[test]
    fn gadget_placement() {
        let h = build_hphi(&single_clause());
        let ids = h.gadgets[0];
        assert_eq!(
            h.coord(ids[0]),
            Coord::Cell {
                clause: 1,
                row: 1,
                col: 1,
                polarity: Polarity::True
            }
        );
        assert_eq!(
            h.coord(ids[1]),
            Coord::Cell {
                clause: 1,
                row: 3,
                col: 2,
                polarity: Polarity::True
            }
        );
        assert_eq!(
            h.coord(ids[2]),
            Coord::Cell {
                clause: 1,
                row: 2,
                col: 3,
                polarity: Polarity::False
            }
        );
        for p in 4..=8 {
            assert_eq!(
                h.coord(ids[p - 1]),
                Coord::Cell {
                    clause: 1,
                    row: 3 + p - 3,
                    col: p,
                    polarity: Polarity::True
                }
            );
        }
    }

    #[test]
    fn certificate_passes() {
        let h = build_hphi(&single_clause());
        let report = certify_hphi(&h);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn single_clause_assignment() {
        let h = build_hphi(&single_clause());
        let d = assignment_to_decomposition(&h, &[true, true, true]).unwrap();
        assert!(d.validate(&h.graph).is_valid());
        let ids = h.gadgets[0];
        let in_a: Vec<bool> = ids[..3].iter().map(|&v| d.a().contains(v)).collect();
        assert_eq!(in_a, vec![false, false, true]);
        assert!(d.a().contains(h.root()));

        assert_eq!(
            assignment_to_decomposition(&h, &[false, true, false]),
            Err(EmbedError::UnsatisfiedClause(1))
        );
        assert!(matches!(
            assignment_to_decomposition(&h, &[true]),
            Err(EmbedError::AssignmentLength {
                expected: 3,
                got: 1
            })
        ));
    }
}
