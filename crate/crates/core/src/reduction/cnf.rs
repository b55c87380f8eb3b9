use std::fmt;

use thiserror::Error;

/// A literal over variables numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Self {
            var,
            positive: false,
        }
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }

    fn from_dimacs(lit: i64) -> Self {
        Self {
            var: lit.unsigned_abs() as usize,
            positive: lit > 0,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.var)
        } else {
            write!(f, "-{}", self.var)
        }
    }
}

pub type Clause = [Literal; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    /// Clause indices are 1-based.
    #[error("clause {0} does not have exactly three literals")]
    ClauseArity(usize),
    #[error("clause {0} repeats a variable")]
    RepeatedVariable(usize),
    #[error("clause {clause} uses variable {var}, outside 1..={num_vars}")]
    VariableOutOfRange {
        clause: usize,
        var: usize,
        num_vars: usize,
    },
    #[error("formula has no clauses")]
    EmptyFormula,
}

/// A 3-CNF formula whose clauses each have three distinct variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        if clauses.is_empty() {
            return Err(CnfError::EmptyFormula);
        }
        for (k, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(CnfError::VariableOutOfRange {
                        clause: k + 1,
                        var: lit.var,
                        num_vars,
                    });
                }
            }
            let [a, b, c] = clause;
            if a.var == b.var || a.var == c.var || b.var == c.var {
                return Err(CnfError::RepeatedVariable(k + 1));
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// 1-based index of the first clause the assignment falsifies.
    pub fn first_falsified(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|l| l.eval(assignment)))
            .map(|k| k + 1)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.first_falsified(assignment).is_none()
    }

    /// DIMACS CNF text, header first.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for [a, b, c] in &self.clauses {
            out.push_str(&format!("{a} {b} {c} 0\n"));
        }
        out
    }
}

/// Parses DIMACS CNF. Clauses may span lines; `c` lines are comments and a
/// line starting with `%` ends the input.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let syntax = |message: String| CnfError::SyntaxError {
            line: line_no,
            message,
        };
        if line.starts_with('p') {
            if header.is_some() {
                return Err(syntax("duplicate problem line".into()));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", "cnf", vars, count] => {
                    let vars = vars
                        .parse()
                        .map_err(|_| syntax(format!("bad variable count `{vars}`")))?;
                    let count = count
                        .parse()
                        .map_err(|_| syntax(format!("bad clause count `{count}`")))?;
                    header = Some((vars, count));
                }
                _ => return Err(syntax("expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(syntax("clause before problem line".into()));
        };
        for token in line.split_whitespace() {
            let lit: i64 = token
                .parse()
                .map_err(|_| syntax(format!("bad literal `{token}`")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if lit.unsigned_abs() as usize > num_vars {
                return Err(syntax(format!(
                    "literal {lit} exceeds declared variable count {num_vars}"
                )));
            }
            current.push(lit);
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(CnfError::SyntaxError {
            line: last_line.max(1),
            message: "missing problem line".into(),
        });
    };
    if !current.is_empty() {
        return Err(CnfError::SyntaxError {
            line: last_line,
            message: "last clause is not terminated by 0".into(),
        });
    }
    if clauses.len() != declared {
        return Err(CnfError::SyntaxError {
            line: last_line,
            message: format!(
                "header declares {declared} clauses, found {}",
                clauses.len()
            ),
        });
    }
    if clauses.is_empty() {
        return Err(CnfError::EmptyFormula);
    }

    let mut out = Vec::with_capacity(clauses.len());
    for (k, lits) in clauses.iter().enumerate() {
        let [a, b, c] = lits.as_slice() else {
            return Err(CnfError::ClauseArity(k + 1));
        };
        out.push([a, b, c].map(|&l| Literal::from_dimacs(l)));
    }
    CnfFormula::new(num_vars, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_clause() {
        let f = parse_dimacs_cnf("p cnf 3 1\n1 3 -2 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(
            f.clauses(),
            &[[Literal::pos(1), Literal::pos(3), Literal::neg(2)]]
        );
        assert_eq!(parse_dimacs_cnf(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn comments_and_multiline_clauses() {
        let text = "c hello\np cnf 4 2\n1 -2\n 3 0 2 3\nc mid\n4 0\n%\n0\n";
        let f = parse_dimacs_cnf(text).unwrap();
        assert_eq!(f.num_clauses(), 2);
        assert_eq!(
            f.clauses()[1],
            [Literal::pos(2), Literal::pos(3), Literal::pos(4)]
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_dimacs_cnf("p cnf 3 1\n1 1 2 0\n"),
            Err(CnfError::RepeatedVariable(1))
        );
        assert_eq!(
            parse_dimacs_cnf("p cnf 3 1\n1 -1 2 0\n"),
            Err(CnfError::RepeatedVariable(1))
        );
        assert_eq!(parse_dimacs_cnf("p cnf 3 0\n"), Err(CnfError::EmptyFormula));
        assert_eq!(
            parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n1 2 0\n"),
            Err(CnfError::ClauseArity(2))
        );
        assert!(matches!(
            parse_dimacs_cnf("p cnf 3 1\n1 x 3 0\n"),
            Err(CnfError::SyntaxError { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs_cnf("1 2 3 0\n"),
            Err(CnfError::SyntaxError { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs_cnf("p cnf 3 1\n1 2 4 0\n"),
            Err(CnfError::SyntaxError { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"),
            Err(CnfError::SyntaxError { .. })
        ));
    }

    #[test]
    fn evaluation() {
        let f = parse_dimacs_cnf("p cnf 3 1\n1 3 -2 0\n").unwrap();
        assert!(f.is_satisfied_by(&[true, true, true]));
        assert_eq!(f.first_falsified(&[false, true, false]), Some(1));
    }
}
