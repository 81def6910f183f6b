use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    /// 0-based variable index.
    pub var: usize,
    pub negated: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, negated: true }
    }

    /// From a DIMACS literal (nonzero, 1-based, sign = polarity).
    pub fn from_dimacs(x: i64) -> Self {
        assert!(x != 0);
        Lit {
            var: x.unsigned_abs() as usize - 1,
            negated: x < 0,
        }
    }

    pub fn value(&self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

/// 3-CNF formula; every clause has three literals over distinct variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Lit; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Lit; 3]>) -> Result<Self> {
        for (j, cl) in clauses.iter().enumerate() {
            if let Some(l) = cl.iter().find(|l| l.var >= num_vars) {
                return Err(Error::validation(format!(
                    "clause {} uses variable {} of {num_vars}",
                    j + 1,
                    l.var + 1
                )));
            }
            if cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var {
                return Err(Error::validation(format!(
                    "clause {} repeats a variable",
                    j + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.num_vars];
        for cl in &self.clauses {
            for l in cl {
                occ[l.var] += 1;
            }
        }
        occ
    }

    pub fn is_satisfied(&self, a: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|cl| cl.iter().any(|l| l.value(a)))
    }

    /// Every clause has a true and a false literal.
    pub fn is_nae_satisfied(&self, a: &[bool]) -> bool {
        self.clauses.iter().all(|cl| {
            let t = cl.iter().filter(|l| l.value(a)).count();
            t == 1 || t == 2
        })
    }

    /// Assignments in increasing binary order (variable 0 least significant)
    /// accepted by `pred`, at most `limit` of them.
    pub fn assignments_where(
        &self,
        limit: usize,
        pred: impl Fn(&Self, &[bool]) -> bool,
    ) -> Vec<Vec<bool>> {
        assert!(self.num_vars < 30, "exhaustive search over too many variables");
        let mut out = Vec::new();
        for code in 0u64..1 << self.num_vars {
            if out.len() == limit {
                break;
            }
            let a: Vec<bool> = (0..self.num_vars).map(|v| code >> v & 1 == 1).collect();
            if pred(self, &a) {
                out.push(a);
            }
        }
        out
    }

    pub fn satisfying(&self, limit: usize) -> Vec<Vec<bool>> {
        self.assignments_where(limit, |f, a| f.is_satisfied(a))
    }

    pub fn nae_satisfying(&self, limit: usize) -> Vec<Vec<bool>> {
        self.assignments_where(limit, |f, a| f.is_nae_satisfied(a))
    }

    /// Random formula with `m` clauses where no variable occurs more than
    /// `max_occ` times. Gives up (returns fewer clauses) when the remaining
    /// occurrence budget cannot fill a clause.
    pub fn random<R: Rng>(rng: &mut R, num_vars: usize, m: usize, max_occ: usize) -> Self {
        let mut occ = vec![0; num_vars];
        let mut clauses = Vec::with_capacity(m);
        for _ in 0..m {
            let mut free: Vec<usize> = (0..num_vars).filter(|&v| occ[v] < max_occ).collect();
            if free.len() < 3 {
                break;
            }
            free.shuffle(rng);
            let cl = [0, 1, 2].map(|i| Lit {
                var: free[i],
                negated: rng.gen_bool(0.5),
            });
            for l in &cl {
                occ[l.var] += 1;
            }
            clauses.push(cl);
        }
        CnfFormula { num_vars, clauses }
    }
}
