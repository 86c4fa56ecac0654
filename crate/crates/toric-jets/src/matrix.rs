//! Exact integer matrices: Hermite and Smith normal forms, kernels, and
//! rational linear solving. Rows are the primary axis throughout (a lattice
//! is the row span of its matrix).

use crate::arith::{Integer, LatticeVector, Rational, RationalVector};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<Vec<Integer>>,
    pub cols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<Integer>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows, cols }
    }

    pub fn from_rows(rows: Vec<LatticeVector>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::new(rows, cols)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Integer::one()
                        } else {
                            Integer::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        IntMatrix { rows, cols: n }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        IntMatrix {
            rows,
            cols: self.row_count(),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    /// rows[i] -= q * rows[k]
    fn add_multiple(&mut self, i: usize, k: usize, q: &Integer) {
        if q.is_zero() {
            return;
        }
        let src = self.rows[k].clone();
        for (a, b) in self.rows[i].iter_mut().zip(&src) {
            *a -= q * b;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for a in self.rows[i].iter_mut() {
            *a = -a.clone();
        }
    }
}

/// Row Hermite normal form. Returns `(h, u)` with `u` unimodular and
/// `h = u * a`: pivots positive, entries above a pivot reduced into
/// `[0, pivot)`, zero rows at the bottom.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.row_count());
    let (m, n) = (h.row_count(), h.cols);
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        // Clear the column below row r by repeated remainder steps.
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..m {
                if h.rows[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some(i),
                    Some(p) => {
                        if h.rows[i][j].abs() < h.rows[p][j].abs() {
                            pivot = Some(i);
                        }
                    }
                }
            }
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            let piv = h.rows[r][j].clone();
            for i in r + 1..m {
                if h.rows[i][j].is_zero() {
                    continue;
                }
                let q = h.rows[i][j].div_floor(&piv);
                h.add_multiple(i, r, &q);
                u.add_multiple(i, r, &q);
                if !h.rows[i][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.rows[r][j].is_zero() {
            continue;
        }
        if h.rows[r][j].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let piv = h.rows[r][j].clone();
        for i in 0..r {
            let q = h.rows[i][j].div_floor(&piv);
            h.add_multiple(i, r, &q);
            u.add_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Rank over Q, read off the Hermite normal form.
pub fn rank(a: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(a);
    h.rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .count()
}

/// Invariant factors d_1 | d_2 | ... of the matrix, positive, zeros trimmed.
pub fn smith_invariant_factors(a: &IntMatrix) -> Vec<Integer> {
    let mut w = a.clone();
    let (m, n) = (w.row_count(), w.cols);
    let bound = m.min(n);
    let mut t = 0;
    while t < bound {
        // Locate the submatrix entry of smallest nonzero absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if w.rows[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if w.rows[i][j].abs() < w.rows[pi][pj].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(t, pi);
        for row in w.rows.iter_mut() {
            row.swap(t, pj);
        }
        // Clear row and column t; a failed division re-enters the loop with a
        // smaller pivot, so this terminates.
        loop {
            let piv = w.rows[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                if w.rows[i][t].is_zero() {
                    continue;
                }
                let q = w.rows[i][t].div_floor(&piv);
                w.add_multiple(i, t, &q);
                if !w.rows[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if w.rows[t][j].is_zero() {
                    continue;
                }
                let q = w.rows[t][j].div_floor(&piv);
                for row in w.rows.iter_mut() {
                    let sub = &q * &row[t];
                    row[j] -= sub;
                }
                if !w.rows[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // Re-pick the smallest pivot in column/row t.
                let mut best = (t, t);
                for i in t..m {
                    if !w.rows[i][t].is_zero()
                        && (w.rows[best.0][best.1].is_zero()
                            || w.rows[i][t].abs() < w.rows[best.0][best.1].abs())
                    {
                        best = (i, t);
                    }
                }
                for j in t..n {
                    if !w.rows[t][j].is_zero() && w.rows[t][j].abs() < w.rows[best.0][best.1].abs()
                    {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                for row in w.rows.iter_mut() {
                    row.swap(t, best.1);
                }
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let mut offender = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !(&w.rows[i][j] % &piv).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                None => break,
                Some(i) => {
                    let minus_one = -Integer::one();
                    w.add_multiple(t, i, &minus_one);
                }
            }
        }
        if w.rows[t][t].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let mut factors: Vec<Integer> = (0..t).map(|i| w.rows[i][i].clone()).collect();
    factors.retain(|d| !d.is_zero());
    factors
}

/// Basis of the integer kernel {x : a · x = 0}, canonicalized by HNF.
/// The kernel of an integer matrix is always a saturated sublattice, so the
/// returned rows are a basis of it.
pub fn kernel_basis(a: &IntMatrix) -> Vec<LatticeVector> {
    let (h, u) = hermite_normal_form(&a.transpose());
    let mut gens = Vec::new();
    for (hr, ur) in h.rows.iter().zip(&u.rows) {
        if hr.iter().all(|x| x.is_zero()) {
            gens.push(ur.clone());
        }
    }
    if gens.is_empty() {
        return gens;
    }
    let (canon, _) = hermite_normal_form(&IntMatrix::from_rows(gens));
    canon
        .rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Exact inverse of a square integer matrix over Q; `None` when singular.
pub fn rational_inverse(a: &IntMatrix) -> Option<Vec<Vec<Rational>>> {
    let n = a.row_count();
    if n != a.cols {
        return None;
    }
    let mut aug: Vec<Vec<Rational>> = a
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::from_integer(Integer::one())
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for j in 0..n {
        let p = (j..n).find(|&i| !aug[i][j].is_zero())?;
        aug.swap(j, p);
        let piv = aug[j][j].clone();
        for x in aug[j].iter_mut() {
            *x /= piv.clone();
        }
        for i in 0..n {
            if i != j && !aug[i][j].is_zero() {
                let f = aug[i][j].clone();
                let src = aug[j].clone();
                for (x, y) in aug[i].iter_mut().zip(&src) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `a · x = b` exactly over Q by Gaussian elimination.
/// Returns `None` when the system is inconsistent; when the solution space is
/// positive-dimensional an arbitrary solution is returned (free variables 0).
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Option<RationalVector> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        let Some(p) = (r..m).find(|&i| !aug[i][j].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let piv = aug[r][j].clone();
        for x in aug[r].iter_mut() {
            *x /= piv.clone();
        }
        for i in 0..m {
            if i != r && !aug[i][j].is_zero() {
                let f = aug[i][j].clone();
                let src = aug[r].clone();
                for (x, y) in aug[i].iter_mut().zip(&src) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(j);
        r += 1;
        if r == m {
            break;
        }
    }
    // Inconsistent iff a zero row has nonzero rhs.
    if aug[r..m].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &j) in aug.iter().zip(&pivots) {
        x[j] = row[n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, int_vec, rat};

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| int_vec(r)).collect())
    }

    fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let rows = a
            .rows
            .iter()
            .map(|ar| {
                (0..b.cols)
                    .map(|j| {
                        ar.iter()
                            .zip(&b.rows)
                            .map(|(x, br)| x * &br[j])
                            .sum::<Integer>()
                    })
                    .collect()
            })
            .collect();
        IntMatrix::new(rows, b.cols)
    }

    /// Cofactor-expansion determinant, used as an independent oracle.
    pub fn det_cofactor(a: &IntMatrix) -> Integer {
        let n = a.row_count();
        assert_eq!(n, a.cols);
        if n == 0 {
            return Integer::one();
        }
        if n == 1 {
            return a.rows[0][0].clone();
        }
        let mut acc = Integer::zero();
        for j in 0..n {
            if a.rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Integer>> = a.rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &a.rows[0][j] * det_cofactor(&IntMatrix::new(minor, n - 1));
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let a = IntMatrix::identity(3);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, a);
        assert_eq!(u, a);
    }

    #[test]
    fn hnf_already_in_form() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        let (h, _) = hermite_normal_form(&a);
        assert_eq!(h, a);
    }

    #[test]
    fn hnf_rank_one() {
        let a = mat(&[&[1, 2], &[2, 4]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h.rows[0], int_vec(&[1, 2]));
        assert_eq!(h.rows[1], int_vec(&[0, 0]));
        // u must be unimodular and satisfy h = u * a.
        assert_eq!(det_cofactor(&u).abs(), int(1));
        assert_eq!(mat_mul(&u, &a), h);
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            smith_invariant_factors(&IntMatrix::identity(2)),
            vec![int(1), int(1)]
        );
        assert_eq!(
            smith_invariant_factors(&mat(&[&[2, 0], &[0, 4]])),
            vec![int(2), int(4)]
        );
        assert_eq!(
            smith_invariant_factors(&mat(&[&[1, 2], &[2, 4]])),
            vec![int(1)]
        );
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = mat(&[&[4, 6, 2], &[6, 4, 8], &[2, 8, 4]]);
        let f = smith_invariant_factors(&a);
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "chain broken: {f:?}");
        }
        let d: Integer = f.iter().product();
        assert_eq!(d, det_cofactor(&a).abs());
    }

    #[test]
    fn kernel_of_single_row() {
        let k = kernel_basis(&mat(&[&[2, 4]]));
        assert_eq!(k.len(), 1);
        // (2, -1) is the HNF-canonical generator of the kernel of (x, y) ↦ 2x + 4y.
        assert_eq!(k[0], int_vec(&[2, -1]));
    }

    #[test]
    fn solve_rational_inconsistent() {
        let a = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(1, 1), rat(0, 1)]];
        assert_eq!(solve_rational(&a, &[rat(1, 1), rat(2, 1)]), None);
        let sol = solve_rational(&a, &[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(sol[0], rat(1, 1));
    }
}
