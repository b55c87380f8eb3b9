//! 3-SAT to near-bipartiteness on diameter-3 graphs.

pub mod cnf;
pub mod constraint;
pub mod hphi;

pub use cnf::{parse_dimacs_cnf, Clause, CnfError, CnfFormula, Literal};
pub use constraint::{build_constraint_graph, constraint_decomposition, ConstraintError};
pub use hphi::{
    assignment_to_decomposition, build_hphi, certify_hphi, CertificateReport, Check, Coord,
    EmbedError, HphiInstance, Layout, Polarity,
};
