//! Dense exact-rational simplex with Bland's rule.
//!
//! Problems are solved in standard form: maximize `c · x` subject to
//! `a · x = b`, `x >= 0`. Bland's pivoting rule makes cycling impossible, so
//! termination needs no perturbation and every reported optimum is exact.
//! Problem sizes in this crate stay tiny (a dozen variables), which is why a
//! dense tableau is the right tool.

use crate::arith::Rational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    cost: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn n_cols(&self) -> usize {
        self.cost.len()
    }

    fn reduced_cost(&self, j: usize) -> Rational {
        let mut c = self.cost[j].clone();
        for (i, row) in self.a.iter().enumerate() {
            if !row[j].is_zero() {
                c -= &self.cost[self.basis[i]] * &row[j];
            }
        }
        c
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let piv = self.a[r][j].clone();
        for x in self.a[r].iter_mut() {
            *x /= piv.clone();
        }
        self.b[r] /= piv;
        for i in 0..self.a.len() {
            if i == r || self.a[i][j].is_zero() {
                continue;
            }
            let f = self.a[i][j].clone();
            let src = self.a[r].clone();
            for (x, y) in self.a[i].iter_mut().zip(&src) {
                *x -= &f * y;
            }
            let dec = &f * &self.b[r];
            self.b[i] -= dec;
        }
        self.basis[r] = j;
    }

    /// Runs simplex iterations until optimality. Returns false on
    /// unboundedness.
    fn optimize(&mut self) -> bool {
        loop {
            // Bland: entering column is the smallest improving index.
            let entering = (0..self.n_cols())
                .find(|&j| !self.basis.contains(&j) && self.reduced_cost(j) > Rational::zero());
            let Some(j) = entering else { return true };
            // Leaving row: minimal ratio, ties by smallest basic variable.
            let mut leave: Option<usize> = None;
            for i in 0..self.a.len() {
                if self.a[i][j] <= Rational::zero() {
                    continue;
                }
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = &self.b[i] / &self.a[i][j];
                        let best = &self.b[l] / &self.a[l][j];
                        cur < best || (cur == best && self.basis[i] < self.basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
            match leave {
                Some(r) => self.pivot(r, j),
                None => return false,
            }
        }
    }

    fn objective(&self) -> Rational {
        self.basis
            .iter()
            .zip(&self.b)
            .map(|(&j, bi)| &self.cost[j] * bi)
            .sum()
    }
}

/// Maximizes `c · x` subject to `a · x = b`, `x >= 0` (two-phase simplex).
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Phase 1: artificial basis, minimize the sum of artificials.
    let mut t = Tableau {
        a: Vec::with_capacity(m),
        b: Vec::with_capacity(m),
        cost: vec![Rational::zero(); n + m],
        basis: (n..n + m).collect(),
    };
    for i in 0..m {
        let flip = b[i] < Rational::zero();
        let mut row: Vec<Rational> = a[i]
            .iter()
            .map(|x| if flip { -x.clone() } else { x.clone() })
            .collect();
        row.extend((0..m).map(|k| {
            if k == i {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        }));
        t.a.push(row);
        t.b.push(if flip { -b[i].clone() } else { b[i].clone() });
    }
    for j in n..n + m {
        t.cost[j] = -Rational::from_integer(1.into());
    }
    let bounded = t.optimize();
    debug_assert!(bounded, "phase 1 is always bounded");
    if t.objective() < Rational::zero() {
        return LpOutcome::Infeasible;
    }
    // Drive artificials out of the basis; a row with no real pivot is
    // redundant and gets dropped.
    let mut drop_rows = Vec::new();
    for i in 0..t.a.len() {
        if t.basis[i] < n {
            continue;
        }
        match (0..n).find(|&j| !t.a[i][j].is_zero()) {
            Some(j) => t.pivot(i, j),
            None => drop_rows.push(i),
        }
    }
    for &i in drop_rows.iter().rev() {
        t.a.remove(i);
        t.b.remove(i);
        t.basis.remove(i);
    }
    // Phase 2 on real columns only.
    for row in t.a.iter_mut() {
        row.truncate(n);
    }
    t.cost = c.to_vec();
    if !t.optimize() {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &j) in t.basis.iter().enumerate() {
        x[j] = t.b[i].clone();
    }
    let value = t.objective();
    LpOutcome::Optimal { value, x }
}

/// Feasibility of `a · x = b`, `x >= 0`.
pub fn feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let n = a.first().map_or(0, |r| r.len());
    matches!(
        maximize(a, b, &vec![Rational::zero(); n]),
        LpOutcome::Optimal { .. }
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn simple_maximum() {
        // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6 (slacked inequalities)
        let a = vec![
            vec![rat(1, 1), rat(2, 1), rat(1, 1), rat(0, 1)],
            vec![rat(3, 1), rat(1, 1), rat(0, 1), rat(1, 1)],
        ];
        let b = vec![rat(4, 1), rat(6, 1)];
        let c = vec![rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(14, 5)),
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible() {
        // x = -1, x >= 0
        let a = vec![vec![rat(1, 1)]];
        let b = vec![rat(-1, 1)];
        assert_eq!(maximize(&a, &b, &[rat(0, 1)]), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        // max x s.t. x - y = 0
        let a = vec![vec![rat(1, 1), rat(-1, 1)]];
        let b = vec![rat(0, 1)];
        let c = vec![rat(1, 1), rat(0, 1)];
        assert_eq!(maximize(&a, &b, &c), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]];
        let b = vec![rat(2, 1), rat(4, 1)];
        let c = vec![rat(1, 1), rat(0, 1)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(2, 1)),
            other => panic!("expected optimum, got {other:?}"),
        }
    }
}
