// SPDX-License-Identifier: Apache-2.0

//! Exact-3 CNF formulas.

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};

/// A CNF formula whose clauses have exactly three literals. Literals are
/// signed 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| **l == 0 || l.unsigned_abs() as usize > num_vars) {
                return Err(Error::MalformedClause(format!(
                    "clause {} has literal {l} outside 1..={num_vars}",
                    j + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Parses DIMACS CNF. Every clause must have exactly three literals.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut cur: Vec<i32> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let parsed = match parts.as_slice() {
                    ["cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                    _ => None,
                };
                header = Some(parsed.ok_or_else(|| {
                    Error::MalformedClause(format!("line {}: bad problem line {line:?}", lineno + 1))
                })?);
                continue;
            }
            if header.is_none() {
                return Err(Error::MalformedClause(format!(
                    "line {}: clause before the problem line",
                    lineno + 1
                )));
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| Error::MalformedClause(format!("line {}: bad literal {tok:?}", lineno + 1)))?;
                if lit != 0 {
                    cur.push(lit);
                    continue;
                }
                let clause: [i32; 3] = cur.as_slice().try_into().map_err(|_| {
                    Error::MalformedClause(format!(
                        "line {}: clause has {} literals, expected exactly 3",
                        lineno + 1,
                        cur.len()
                    ))
                })?;
                clauses.push(clause);
                cur.clear();
            }
        }
        if !cur.is_empty() {
            return Err(Error::MalformedClause("last clause is not terminated by 0".into()));
        }
        let (n, m) = header.ok_or_else(|| Error::MalformedClause("missing problem line".into()))?;
        if m != clauses.len() {
            return Err(Error::MalformedClause(format!(
                "problem line declares {m} clauses, found {}",
                clauses.len()
            )));
        }
        Self::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }

    pub fn literal_true(lit: i32, assignment: &[bool]) -> bool {
        assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)
    }

    /// Position of the first literal of clause `j` made true.
    pub fn first_true_literal(&self, j: usize, assignment: &[bool]) -> Option<usize> {
        self.clauses[j].iter().position(|&l| Self::literal_true(l, assignment))
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        (0..self.clauses.len()).all(|j| self.first_true_literal(j, assignment).is_some())
    }

    /// First satisfying assignment in binary counting order, with `x_1` as
    /// the lowest bit.
    pub fn find_satisfying_assignment(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "exhaustive search is limited to 31 variables");
        (0u32..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
            .find(|a| self.evaluate(a))
    }

    pub fn is_satisfiable(&self) -> bool {
        self.find_satisfying_assignment().is_some()
    }

    /// Uniform random exact-3 formula. Variables within a clause are
    /// distinct whenever `num_vars ≥ 3`.
    pub fn random(num_vars: usize, num_clauses: usize, rng: &mut impl Rng) -> Self {
        assert!(num_vars > 0, "need at least one variable");
        let clauses = (0..num_clauses)
            .map(|_| {
                let vars: Vec<usize> = if num_vars >= 3 {
                    sample(rng, num_vars, 3).into_vec()
                } else {
                    (0..3).map(|_| rng.gen_range(0..num_vars)).collect()
                };
                let mut lits = [0i32; 3];
                for (l, v) in lits.iter_mut().zip(vars) {
                    *l = if rng.gen_bool(0.5) { v as i32 + 1 } else { -(v as i32 + 1) };
                }
                lits
            })
            .collect();
        CnfFormula { num_vars, clauses }
    }
}
