//! The affine semigroup Q ∩ M of a pointed full-dimensional cone Q: maximum
//! and minimum weight functions, the lattice points of the half-open
//! fundamental box S_Q, the ideal-power order k_u of a monomial, and the
//! singularity constants gamma_q / gamma_x.
//!
//! Weights are exact linear programs over the primitive ray generators
//! w_1, ..., w_m of Q. The constant of Q is
//!     gamma = max { w_max(u) - k_u : u in S_Q ∩ M },
//! zero exactly on smooth cones and at most dim - 2 otherwise.

use crate::arith::{dot, rat_floor, Integer, LatticeVector, Rational};
use crate::cone::{dual_interior_point, Cone};
use crate::fan::Fan;
use crate::lp::{self, LpOutcome};
use crate::matrix::{hermite_normal_form, rational_inverse, IntMatrix};
use crate::polytope::enumerate_box;
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::OnceLock;

/// A pointed full-dimensional cone in M together with a strictly positive
/// grading, ready for semigroup computations. Box points, generators and the
/// gamma constant are computed once and cached.
#[derive(Debug)]
pub struct DualConeData {
    cone: Cone,
    grading: LatticeVector,
    box_pts: OnceLock<Vec<LatticeVector>>,
    gens: OnceLock<Vec<LatticeVector>>,
    gamma: OnceLock<Rational>,
}

/// Memoized k_u values for one logical computation.
#[derive(Debug, Default)]
pub struct KuMemo {
    values: HashMap<LatticeVector, u64>,
}

impl DualConeData {
    pub fn new(cone: Cone) -> Result<DualConeData> {
        if !cone.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let grading = dual_interior_point(&cone)?;
        Ok(DualConeData {
            cone,
            grading,
            box_pts: OnceLock::new(),
            gens: OnceLock::new(),
            gamma: OnceLock::new(),
        })
    }

    pub fn from_generators(gens: &[LatticeVector], dim: usize) -> Result<DualConeData> {
        Self::new(Cone::from_generators(gens, dim)?)
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.ambient_dim()
    }

    /// Primitive ray generators w_1, ..., w_m.
    pub fn rays(&self) -> &[LatticeVector] {
        self.cone.rays()
    }

    pub fn grading(&self) -> &LatticeVector {
        &self.grading
    }

    fn weight_lp(&self, u: &[Rational], maximize_weight: bool) -> Result<Rational> {
        let d = self.dim();
        let m = self.rays().len();
        let a: Vec<Vec<Rational>> = (0..d)
            .map(|j| {
                self.rays()
                    .iter()
                    .map(|w| Rational::from_integer(w[j].clone()))
                    .collect()
            })
            .collect();
        let sign = if maximize_weight {
            Rational::one()
        } else {
            -Rational::one()
        };
        let c = vec![sign.clone(); m];
        match lp::maximize(&a, u, &c) {
            LpOutcome::Optimal { value, .. } => Ok(value * sign),
            LpOutcome::Infeasible => Err(Error::OutsideCone),
            LpOutcome::Unbounded => Err(Error::NotPointed),
        }
    }

    /// Maximum weight: max Σ a_i over a >= 0 with Σ a_i w_i = u.
    pub fn w_max(&self, u: &[Integer]) -> Result<Rational> {
        self.w_max_rational(&crate::arith::rat_vec(u))
    }

    pub fn w_max_rational(&self, u: &[Rational]) -> Result<Rational> {
        self.weight_lp(u, true)
    }

    /// Minimum weight: min Σ a_i over the same constraints.
    pub fn w_min(&self, u: &[Integer]) -> Result<Rational> {
        self.w_min_rational(&crate::arith::rat_vec(u))
    }

    pub fn w_min_rational(&self, u: &[Rational]) -> Result<Rational> {
        self.weight_lp(u, false)
    }

    /// The lattice points of S_Q = { Σ a_i w_i : 0 <= a_i < 1 }, in
    /// colexicographic order. Always contains the origin.
    pub fn box_points(&self) -> &[LatticeVector] {
        self.box_pts.get_or_init(|| {
            let mut pts = if self.rays().len() == self.dim() {
                self.box_points_simplicial()
            } else {
                self.box_points_general()
            };
            pts.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
            pts
        })
    }

    /// Simplicial case: one box point per coset of the sublattice spanned by
    /// the rays, found by fractional reduction of canonical coset
    /// representatives.
    fn box_points_simplicial(&self) -> Vec<LatticeVector> {
        let d = self.dim();
        let cols = IntMatrix::from_rows(self.rays().to_vec()).transpose();
        let w_inv = rational_inverse(&cols).expect("simplicial rays are independent");
        // Coset representatives of W·Z^d in Z^d from the row HNF of W^T:
        // the integer box below the pivots.
        let (h, _) = hermite_normal_form(&IntMatrix::from_rows(self.rays().to_vec()));
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for i in 0..d {
            lo.push(Integer::zero());
            hi.push(&h.rows[i][i] - Integer::one());
        }
        let mut out = Vec::new();
        for rep in enumerate_box(&lo, &hi) {
            // a = W^{-1} rep, then take fractional parts and map back.
            let a: Vec<Rational> = w_inv
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&rep)
                        .map(|(c, x)| c * Rational::from_integer(x.clone()))
                        .sum()
                })
                .collect();
            let frac: Vec<Rational> = a.iter().map(|x: &Rational| x - x.floor()).collect();
            let point: LatticeVector = (0..d)
                .map(|j| {
                    let coord: Rational = frac
                        .iter()
                        .zip(self.rays())
                        .map(|(f, w)| f * Rational::from_integer(w[j].clone()))
                        .sum();
                    debug_assert!(coord.denom().is_one());
                    coord.to_integer()
                })
                .collect();
            out.push(point);
        }
        out
    }

    /// General case: scan the bounding box of the zonotope of the rays,
    /// filter through the zonotope's support inequalities, and decide
    /// half-open membership by LP.
    fn box_points_general(&self) -> Vec<LatticeVector> {
        let d = self.dim();
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for j in 0..d {
            let mut neg = Integer::zero();
            let mut pos = Integer::zero();
            for w in self.rays() {
                if w[j].is_negative() {
                    neg += &w[j];
                } else {
                    pos += &w[j];
                }
            }
            lo.push(neg);
            hi.push(pos);
        }
        // Support inequalities of the closed zonotope: every hyperplane
        // spanned by d-1 rays contributes both orientations.
        let mut normals: Vec<LatticeVector> = Vec::new();
        if d == 1 {
            normals.push(vec![Integer::one()]);
            normals.push(vec![-Integer::one()]);
        } else {
            use itertools::Itertools;
            for subset in (0..self.rays().len()).combinations(d - 1) {
                let sub: Vec<LatticeVector> =
                    subset.iter().map(|&i| self.rays()[i].clone()).collect();
                let kernel = crate::matrix::kernel_basis(&IntMatrix::new(sub, d));
                if kernel.len() != 1 {
                    continue;
                }
                let n = kernel.into_iter().next().unwrap();
                let neg: LatticeVector = n.iter().map(|x| -x).collect();
                for cand in [n, neg] {
                    if !normals.contains(&cand) {
                        normals.push(cand);
                    }
                }
            }
        }
        let offsets: Vec<Integer> = normals
            .iter()
            .map(|n| {
                self.rays()
                    .iter()
                    .map(|w| {
                        let v = dot(n, w);
                        if v.is_positive() {
                            v
                        } else {
                            Integer::zero()
                        }
                    })
                    .sum()
            })
            .collect();
        enumerate_box(&lo, &hi)
            .into_iter()
            .filter(|x| normals.iter().zip(&offsets).all(|(n, h)| dot(n, x) <= *h))
            .filter(|x| self.in_half_open_box(x))
            .collect()
    }

    /// Decides membership of u in S_Q by the max-slack LP
    ///     max t  s.t.  Σ a_i w_i = u,  a_i >= 0,  a_i + t <= 1;
    /// u lies in S_Q iff the optimum is positive. A zero optimum is re-checked
    /// coordinate by coordinate on the optimal face (max 1 - a_j per j).
    fn in_half_open_box(&self, u: &[Integer]) -> bool {
        let d = self.dim();
        let m = self.rays().len();
        // columns: a_1..a_m, t_plus, t_minus, s_1..s_m
        let n = 2 * m + 2;
        let mut a = Vec::with_capacity(d + m);
        for j in 0..d {
            let mut row = vec![Rational::zero(); n];
            for (i, w) in self.rays().iter().enumerate() {
                row[i] = Rational::from_integer(w[j].clone());
            }
            a.push(row);
        }
        for i in 0..m {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            row[m] = Rational::one();
            row[m + 1] = -Rational::one();
            row[m + 2 + i] = Rational::one();
            a.push(row);
        }
        let mut b: Vec<Rational> = u
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        b.extend(std::iter::repeat_n(Rational::one(), m));
        let mut c = vec![Rational::zero(); n];
        c[m] = Rational::one();
        c[m + 1] = -Rational::one();
        match lp::maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => {
                if value.is_positive() {
                    true
                } else if value.is_zero() {
                    (0..m).all(|j| self.coordinate_slack_positive(u, j))
                } else {
                    false
                }
            }
            _ => false,
        }
    }

    /// max (1 - a_j) over Σ a_i w_i = u, 0 <= a_i <= 1; positive for all j
    /// means a strictly interior representation exists by averaging.
    fn coordinate_slack_positive(&self, u: &[Integer], j: usize) -> bool {
        let d = self.dim();
        let m = self.rays().len();
        let n = 2 * m; // a_1..a_m, s_1..s_m
        let mut a = Vec::with_capacity(d + m);
        for row_j in 0..d {
            let mut row = vec![Rational::zero(); n];
            for (i, w) in self.rays().iter().enumerate() {
                row[i] = Rational::from_integer(w[row_j].clone());
            }
            a.push(row);
        }
        for i in 0..m {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            row[m + i] = Rational::one();
            a.push(row);
        }
        let mut b: Vec<Rational> = u
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        b.extend(std::iter::repeat_n(Rational::one(), m));
        let mut c = vec![Rational::zero(); n];
        c[j] = -Rational::one();
        match lp::maximize(&a, &b, &c) {
            // optimum of -a_j; 1 - a_j > 0 iff a_j < 1
            LpOutcome::Optimal { value, .. } => Rational::one() + value > Rational::zero(),
            _ => false,
        }
    }

    /// Generators of the irrelevant maximal ideal: the rays together with the
    /// nonzero box points.
    pub fn ideal_generators(&self) -> &[LatticeVector] {
        self.gens.get_or_init(|| {
            let mut gens: Vec<LatticeVector> = self.rays().to_vec();
            for p in self.box_points() {
                if !p.iter().all(|x| x.is_zero()) && !gens.contains(p) {
                    gens.push(p.clone());
                }
            }
            gens
        })
    }

    /// Largest k with χ^u in m^k: dynamic program over the ideal generators.
    /// Each step strictly decreases the grading, so the recursion is
    /// well-founded.
    pub fn k_u(&self, u: &[Integer], memo: &mut KuMemo) -> Result<u64> {
        if !self.cone.contains(u) {
            return Err(Error::OutsideCone);
        }
        Ok(self.k_u_inner(u, memo))
    }

    fn k_u_inner(&self, u: &[Integer], memo: &mut KuMemo) -> u64 {
        if u.iter().all(|x| x.is_zero()) {
            return 0;
        }
        if let Some(&v) = memo.values.get(u) {
            return v;
        }
        let mut best = 0u64;
        let gens = self.ideal_generators().to_vec();
        for g in &gens {
            let rest = crate::arith::vec_sub(u, g);
            if self.cone.contains(&rest) {
                let k = 1 + self.k_u_inner(&rest, memo);
                if k > best {
                    best = k;
                }
            }
        }
        memo.values.insert(u.to_vec(), best);
        best
    }

    /// gamma = max over the box points of w_max(u) - k_u; nonnegative, zero
    /// for smooth cones, at most dim - 2 in general.
    pub fn gamma(&self) -> &Rational {
        self.gamma.get_or_init(|| {
            let mut memo = KuMemo::default();
            let mut best = Rational::zero();
            for u in self.box_points() {
                let w = self.w_max(u).expect("box points lie in the cone");
                let k = self.k_u_inner(u, &mut memo);
                let value = w - Rational::from_integer(Integer::from(k));
                if value > best {
                    best = value;
                }
            }
            best
        })
    }

    /// The monomial basis of R / m^k: all exponents e in Q ∩ M with k_e < k,
    /// enumerated in colexicographic scan order. The enumeration region is
    /// the weight bound w_max(e) <= k - 1 + gamma, outside of which every
    /// monomial lies in m^k.
    pub fn quotient_basis(&self, k: u64) -> Result<Vec<LatticeVector>> {
        if k == 0 {
            return Err(Error::Precondition(
                "quotient power must be positive".into(),
            ));
        }
        let d = self.dim();
        let bound = Rational::from_integer(Integer::from(k - 1)) + self.gamma().clone();
        // Bounding box of bound * conv(0, w_1, ..., w_m).
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for j in 0..d {
            let mut min = Integer::zero();
            let mut max = Integer::zero();
            for w in self.rays() {
                if w[j] < min {
                    min = w[j].clone();
                }
                if w[j] > max {
                    max = w[j].clone();
                }
            }
            lo.push(rat_floor(&(Rational::from_integer(min) * bound.clone())));
            hi.push(-rat_floor(
                &(-(Rational::from_integer(max) * bound.clone())),
            ));
        }
        let mut memo = KuMemo::default();
        let mut out = Vec::new();
        for e in enumerate_box(&lo, &hi) {
            if !self.cone.contains(&e) {
                continue;
            }
            if self.w_max(&e)? > bound {
                continue;
            }
            if self.k_u_inner(&e, &mut memo) < k {
                out.push(e);
            }
        }
        Ok(out)
    }
}

/// gamma_x: the maximum of gamma over the duals of the maximal cones.
pub fn gamma_x(fan: &Fan) -> Result<Rational> {
    let mut best = Rational::zero();
    for i in 0..fan.n_max_cones() {
        let data = DualConeData::new(fan.cone(i).dual()?)?;
        let g = data.gamma().clone();
        if g > best {
            best = g;
        }
    }
    Ok(best)
}

/// Brute-force k_u oracle: the longest decomposition of u into nonzero
/// semigroup elements, by exhaustive search. Test support; exponential in
/// the grading, desk scale only.
pub fn k_u_brute_force(data: &DualConeData, u: &[Integer]) -> u64 {
    fn parts(data: &DualConeData, u: &[Integer], elements: &[LatticeVector]) -> u64 {
        let mut best = 0;
        for s in elements {
            let rest = crate::arith::vec_sub(u, s);
            if rest.iter().all(|x| x.is_zero()) {
                best = best.max(1);
            } else if data.cone().contains(&rest) {
                let k = 1 + parts(data, &rest, elements);
                if k > best {
                    best = k;
                }
            }
        }
        best
    }
    if u.iter().all(|x| x.is_zero()) {
        return 0;
    }
    // nonzero semigroup elements with grading at most that of u
    let d = data.dim();
    let gu = dot(data.grading(), u);
    let mut lo = vec![Integer::zero(); d];
    let mut hi = vec![Integer::zero(); d];
    for j in 0..d {
        let mut min = Integer::zero();
        let mut max = Integer::zero();
        for w in data.rays() {
            if w[j] < min {
                min = w[j].clone();
            }
            if w[j] > max {
                max = w[j].clone();
            }
        }
        lo[j] = &min * &gu;
        hi[j] = &max * &gu;
    }
    let elements: Vec<LatticeVector> = enumerate_box(&lo, &hi)
        .into_iter()
        .filter(|x| !x.iter().all(|c| c.is_zero()))
        .filter(|x| data.cone().contains(x))
        .filter(|x| dot(data.grading(), x) <= gu)
        .collect();
    parts(data, u, &elements)
}
