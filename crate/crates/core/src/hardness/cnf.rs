use crate::{Error, Result};

/// A 3-CNF formula over variables `1..=n_vars`, literals in DIMACS form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub n_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedFormula(msg.into())
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<[i32; 3]>) -> Result<CnfFormula> {
        for (j, c) in clauses.iter().enumerate() {
            for (k, &l) in c.iter().enumerate() {
                if l == 0 || l.unsigned_abs() as usize > n_vars {
                    return Err(malformed(format!("clause {}: literal {l} out of range", j + 1)));
                }
                if c[..k].iter().any(|&m| m.unsigned_abs() == l.unsigned_abs()) {
                    return Err(malformed(format!("clause {}: variable {} repeated", j + 1, l.abs())));
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    /// Reads DIMACS CNF. Every clause must have exactly three literals.
    pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
        let mut header: Option<(usize, usize)> = None;
        let mut lits: Vec<i32> = Vec::new();
        let mut clauses = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let perr = |message: String| Error::Parse { line: lineno + 1, message };
            if line.starts_with('p') {
                let toks: Vec<&str> = line.split_whitespace().collect();
                match toks.as_slice() {
                    ["p", "cnf", v, c] => {
                        let v = v.parse().map_err(|_| perr("bad variable count".into()))?;
                        let c = c.parse().map_err(|_| perr("bad clause count".into()))?;
                        header = Some((v, c));
                    }
                    _ => return Err(perr("expected `p cnf <vars> <clauses>`".into())),
                }
                continue;
            }
            if header.is_none() {
                return Err(perr("clause before the `p cnf` header".into()));
            }
            for tok in line.split_whitespace() {
                let l: i32 = tok.parse().map_err(|_| perr(format!("`{tok}` is not a literal")))?;
                if l == 0 {
                    let width = lits.len();
                    let clause: [i32; 3] = std::mem::take(&mut lits).try_into().map_err(|_| {
                        malformed(format!("clause {} has {width} literals, expected 3", clauses.len() + 1))
                    })?;
                    clauses.push(clause);
                } else {
                    lits.push(l);
                }
            }
        }
        let (n_vars, n_clauses) = header.ok_or_else(|| malformed("missing `p cnf` header"))?;
        if !lits.is_empty() {
            return Err(malformed("last clause is not terminated by 0"));
        }
        if clauses.len() != n_clauses {
            return Err(malformed(format!("header declares {n_clauses} clauses, found {}", clauses.len())));
        }
        CnfFormula::new(n_vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.n_vars, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        let val = |l: i32| assignment.get(l.unsigned_abs() as usize - 1).copied().unwrap_or(false) == (l > 0);
        self.clauses.iter().position(|c| !c.iter().any(|&l| val(l)))
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.n_vars && self.first_unsatisfied(assignment).is_none()
    }

    /// The first satisfying assignment in binary counting order, for small
    /// formulas. Variable `x1` is the lowest bit.
    pub fn brute_force(&self) -> Option<Vec<bool>> {
        self.truth_table().find(|a| self.first_unsatisfied(a).is_none())
    }

    /// Every satisfying assignment, in the order of [`CnfFormula::brute_force`].
    pub fn satisfying_assignments(&self) -> Vec<Vec<bool>> {
        self.truth_table().filter(|a| self.first_unsatisfied(a).is_none()).collect()
    }

    fn truth_table(&self) -> impl Iterator<Item = Vec<bool>> + '_ {
        assert!(self.n_vars < 26, "truth tables are for small formulas");
        (0..1u32 << self.n_vars).map(|mask| (0..self.n_vars).map(|i| mask >> i & 1 == 1).collect())
    }
}
