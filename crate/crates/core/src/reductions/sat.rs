use crate::error::{Error, Result};
use crate::model::{Measure, ProblemInstance, TemporalGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    fn holds(self, assignment: u64) -> bool {
        (assignment >> self.var & 1 == 1) == self.positive
    }
}

/// A 3-CNF formula over variables `0..n_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub n_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if let Some(l) = clauses.iter().flatten().find(|l| l.var >= n_vars) {
            return Err(Error::InvalidInput(format!(
                "literal on variable {} but only {n_vars} variables",
                l.var
            )));
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    /// Pads to `n` variables and `n` clauses with `n >= 1`. Missing clauses are
    /// tautologies `x | !x | x` cycling over the variables; missing variables
    /// are fresh and unused.
    pub fn normalized(&self) -> CnfFormula {
        let n = self.n_vars.max(self.clauses.len()).max(1);
        let mut clauses = self.clauses.clone();
        let mut v = 0;
        while clauses.len() < n {
            clauses.push([Literal::pos(v), Literal::neg(v), Literal::pos(v)]);
            v = (v + 1) % n;
        }
        CnfFormula { n_vars: n, clauses }
    }

    /// Largest number of occurrences of any single literal, at least 2.
    pub fn max_literal_occurrence(&self) -> usize {
        let mut count = vec![[0usize; 2]; self.n_vars];
        for l in self.clauses.iter().flatten() {
            count[l.var][l.positive as usize] += 1;
        }
        count.iter().flatten().copied().max().unwrap_or(0).max(2)
    }

    /// Exhaustive satisfiability check; intended for a handful of variables.
    pub fn is_satisfiable(&self) -> bool {
        assert!(self.n_vars < 64, "brute force limited to 63 variables");
        (0u64..1 << self.n_vars).any(|a| self.clauses.iter().all(|c| c.iter().any(|l| l.holds(a))))
    }
}

/// Vertex layout of the two-snapshot 3-SAT construction.
struct Layout {
    n: usize,
    d: usize,
}

impl Layout {
    const S: usize = 0;
    const T: usize = 1;

    /// Connector `c^snap_j`, `snap` in {1, 2}, `j` in 1..=2n.
    fn c(&self, snap: usize, j: usize) -> usize {
        2 + (snap - 1) * 2 * self.n + (j - 1)
    }

    /// Track vertex `a^i_j` (`neg = false`) or `b^i_j`, `i` 0-based, `j` in 1..=2d.
    fn track(&self, i: usize, neg: bool, j: usize) -> usize {
        2 + 4 * self.n + i * 4 * self.d + (neg as usize) * 2 * self.d + (j - 1)
    }

    fn vertex_count(&self) -> usize {
        2 + 4 * self.n + 4 * self.n * self.d
    }
}

/// Two-snapshot instance from a 3-CNF formula. Snapshot 1 picks a truth value
/// per variable by routing through one of two tracks; snapshot 2 passes every
/// clause through one of its literal edges. The vertex budget is
/// `2 + 2n + 2dn`. Under edge intersection the budget `ell` is 0; under edge
/// symmetric difference it is `2 + 4n + 2dn`, the smallest value for which
/// the instance is YES exactly when the formula is satisfiable.
pub fn gen_from_3sat(f: &CnfFormula, variant: Measure) -> Result<ProblemInstance> {
    if !matches!(variant, Measure::Ede | Measure::Eie) {
        return Err(Error::WrongMeasure {
            expected: "ede or eie",
            got: variant,
        });
    }
    let f = CnfFormula::new(f.n_vars, f.clauses.clone())?.normalized();
    let n = f.n_vars;
    let d = f.max_literal_occurrence();
    let lay = Layout { n, d };

    let mut first = vec![(Layout::S, lay.c(1, 1)), (lay.c(1, 2 * n), Layout::T)];
    for i in 0..n {
        for neg in [false, true] {
            first.push((lay.c(1, 2 * i + 1), lay.track(i, neg, 1)));
            first.push((lay.c(1, 2 * i + 2), lay.track(i, neg, 2 * d)));
            for j in 1..2 * d {
                first.push((lay.track(i, neg, j), lay.track(i, neg, j + 1)));
            }
        }
        if i + 1 < n {
            first.push((lay.c(1, 2 * i + 2), lay.c(1, 2 * i + 3)));
        }
    }

    let mut second = vec![(Layout::S, lay.c(2, 1)), (lay.c(2, 2 * n), Layout::T)];
    for i in 1..n {
        second.push((lay.c(2, 2 * i), lay.c(2, 2 * i + 1)));
    }
    let mut seen = vec![[0usize; 2]; n];
    for (q, clause) in f.clauses.iter().enumerate() {
        for l in clause {
            let neg = !l.positive;
            seen[l.var][neg as usize] += 1;
            let j = seen[l.var][neg as usize];
            let (lo, hi) = (lay.track(l.var, neg, 2 * j - 1), lay.track(l.var, neg, 2 * j));
            second.push((lo, hi));
            second.push((lay.c(2, 2 * q + 1), lo));
            second.push((lay.c(2, 2 * q + 2), hi));
        }
    }

    let graph = TemporalGraph::new(lay.vertex_count(), vec![first, second])?;
    let k = 2 + 2 * n + 2 * d * n;
    let ell = match variant {
        Measure::Eie => 0,
        _ => 2 + 4 * n + 2 * d * n,
    };
    ProblemInstance::new(graph, Layout::S, Layout::T, k, ell, variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::solve_xp;
    use crate::structure::graph_stats;

    fn clause(l: [(usize, bool); 3]) -> [Literal; 3] {
        l.map(|(var, positive)| Literal { var, positive })
    }

    #[test]
    fn padding_and_occurrence() {
        let f = CnfFormula::new(1, vec![]).unwrap().normalized();
        assert_eq!((f.n_vars, f.clauses.len()), (1, 1));
        assert_eq!(f.max_literal_occurrence(), 2);
        let f = CnfFormula::new(3, vec![clause([(0, true), (1, true), (2, false)])])
            .unwrap()
            .normalized();
        assert_eq!(f.clauses.len(), 3);
        assert!(CnfFormula::new(1, vec![clause([(0, true), (1, true), (0, true)])]).is_err());
    }

    #[test]
    fn satisfiable_single_variable_is_yes() {
        let f = CnfFormula::new(1, vec![clause([(0, true), (0, true), (0, true)])]).unwrap();
        for m in [Measure::Ede, Measure::Eie] {
            let inst = gen_from_3sat(&f, m).unwrap();
            assert!(solve_xp(&inst).unwrap().is_some(), "{m}");
        }
    }

    #[test]
    fn contradiction_is_no() {
        let f = CnfFormula::new(
            1,
            vec![
                clause([(0, true), (0, true), (0, true)]),
                clause([(0, false), (0, false), (0, false)]),
            ],
        )
        .unwrap();
        assert!(!f.is_satisfiable());
        for m in [Measure::Ede, Measure::Eie] {
            let inst = gen_from_3sat(&f, m).unwrap();
            assert!(solve_xp(&inst).unwrap().is_none(), "{m}");
        }
    }

    #[test]
    fn degree_and_budget() {
        let f = CnfFormula::new(
            2,
            vec![
                clause([(0, true), (1, false), (1, true)]),
                clause([(0, false), (1, true), (0, true)]),
            ],
        )
        .unwrap();
        let inst = gen_from_3sat(&f, Measure::Ede).unwrap();
        assert_eq!(graph_stats(&inst.graph).underlying_max_degree, 4);
        let (n, d) = (2, 2);
        assert_eq!(inst.k, 2 + 2 * n + 2 * d * n);
        assert_eq!(inst.ell, 2 + 4 * n + 2 * d * n);
    }
}
