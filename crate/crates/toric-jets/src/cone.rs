//! Pointed rational polyhedral cones with exact dual descriptions.
//!
//! Ray enumeration for a cone given by inequalities works by scanning the
//! (d-1)-element subsets of the defining normals: the kernel line of such a
//! subset is an extreme-ray candidate, kept when it satisfies all
//! inequalities. At the dimensions this crate targets the subset scan is
//! exact, simple, and fast enough.

use crate::arith::{dot, rat_int_dot, Integer, LatticeVector, Rational};
use crate::lattice::{multiplicity, primitive};
use crate::lp;
use crate::matrix::{kernel_basis, rank, IntMatrix};
use crate::{Error, Result};
use itertools::Itertools;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<LatticeVector>,
    facet_normals: Vec<LatticeVector>,
    cone_dim: usize,
}

/// Extreme rays of `{ y : <n, y> >= 0 for all n in normals }`.
/// The cone must be pointed (the normals span Q^d), otherwise rays of the
/// lineality space are silently dropped.
pub fn rays_from_inequalities(normals: &[LatticeVector], dim: usize) -> Vec<LatticeVector> {
    if dim == 0 {
        return Vec::new();
    }
    let mut rays: Vec<LatticeVector> = Vec::new();
    for subset in (0..normals.len()).combinations(dim - 1) {
        let sub: Vec<LatticeVector> = subset.iter().map(|&i| normals[i].clone()).collect();
        let kernel = kernel_basis(&IntMatrix::new(sub, dim));
        if kernel.len() != 1 {
            continue;
        }
        let v = kernel.into_iter().next().unwrap();
        let keep = if normals.iter().all(|n| !dot(n, &v).is_negative()) {
            Some(v)
        } else {
            let w: LatticeVector = v.iter().map(|x| -x).collect();
            if normals.iter().all(|n| !dot(n, &w).is_negative()) {
                Some(w)
            } else {
                None
            }
        };
        if let Some(r) = keep {
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
    }
    rays
}

impl Cone {
    /// Builds a cone from generators: primitivizes, deduplicates, keeps only
    /// the extreme rays (in first-occurrence order), and computes the facet
    /// normals when the cone is full-dimensional.
    pub fn from_generators(gens: &[LatticeVector], ambient_dim: usize) -> Result<Cone> {
        let mut prims: Vec<LatticeVector> = Vec::new();
        for g in gens {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator of length {} in ambient dimension {ambient_dim}",
                    g.len()
                )));
            }
            let p = primitive(g)?;
            if !prims.contains(&p) {
                prims.push(p);
            }
        }
        // Extreme rays: a generator that is a nonnegative combination of the
        // others is redundant.
        let mut rays: Vec<LatticeVector> = Vec::new();
        for (j, g) in prims.iter().enumerate() {
            let others: Vec<&LatticeVector> = prims
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, v)| v)
                .collect();
            if !in_nonneg_span(g, &others) {
                rays.push(g.clone());
            }
        }
        let cone_dim = if rays.is_empty() {
            0
        } else {
            rank(&IntMatrix::from_rows(rays.clone()))
        };
        if !is_pointed(&rays, ambient_dim) {
            return Err(Error::NotPointed);
        }
        let facet_normals = if cone_dim == ambient_dim {
            rays_from_inequalities(&rays, ambient_dim)
        } else {
            Vec::new()
        };
        Ok(Cone {
            ambient_dim,
            rays,
            facet_normals,
            cone_dim,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the linear span of the cone.
    pub fn dim(&self) -> usize {
        self.cone_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.cone_dim == self.ambient_dim
    }

    /// Primitive generators of the extreme rays.
    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    /// Primitive facet normals; the cone is `{ x : <n, x> >= 0 }`.
    /// Only populated for full-dimensional cones.
    pub fn facet_normals(&self) -> &[LatticeVector] {
        &self.facet_normals
    }

    /// The dual cone `{ y : <x, y> >= 0 for all x }` with primitive ray
    /// generators. Requires a full-dimensional cone so that the dual is
    /// pointed.
    pub fn dual(&self) -> Result<Cone> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let rays = self.facet_normals.clone();
        let cone_dim = if rays.is_empty() {
            0
        } else {
            rank(&IntMatrix::from_rows(rays.clone()))
        };
        // When self is pointed the dual is full-dimensional and its facets
        // are cut out by the rays of self.
        let facet_normals = if cone_dim == self.ambient_dim {
            self.rays.clone()
        } else {
            Vec::new()
        };
        Ok(Cone {
            ambient_dim: self.ambient_dim,
            rays,
            facet_normals,
            cone_dim,
        })
    }

    pub fn contains(&self, x: &[Integer]) -> bool {
        if self.is_full_dimensional() {
            self.facet_normals.iter().all(|n| !dot(n, x).is_negative())
        } else {
            let cols: Vec<Vec<Rational>> = (0..self.ambient_dim)
                .map(|i| {
                    self.rays
                        .iter()
                        .map(|r| Rational::from_integer(r[i].clone()))
                        .collect()
                })
                .collect();
            let b: Vec<Rational> = x
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect();
            lp::feasible(&cols, &b)
        }
    }

    pub fn contains_rational(&self, x: &[Rational]) -> bool {
        debug_assert!(self.is_full_dimensional());
        self.facet_normals
            .iter()
            .all(|n| !rat_int_dot(x, n).is_negative())
    }

    /// Strict membership in the topological interior (full-dimensional only).
    pub fn contains_interior(&self, x: &[Integer]) -> bool {
        debug_assert!(self.is_full_dimensional());
        self.facet_normals.iter().all(|n| dot(n, x).is_positive())
    }

    /// Index of the lattice spanned by the rays inside the saturation.
    pub fn multiplicity(&self) -> Integer {
        multiplicity(&self.rays)
    }

    /// Smooth = the rays are part of a basis of the lattice.
    pub fn is_smooth(&self) -> bool {
        use num_traits::One;
        self.rays.len() == self.cone_dim && self.multiplicity().is_one()
    }
}

/// Is `target` a nonnegative rational combination of `gens`?
fn in_nonneg_span(target: &[Integer], gens: &[&LatticeVector]) -> bool {
    if gens.is_empty() {
        return target.iter().all(|x| x.is_zero());
    }
    let d = target.len();
    let a: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            gens.iter()
                .map(|g| Rational::from_integer(g[i].clone()))
                .collect()
        })
        .collect();
    let b: Vec<Rational> = target
        .iter()
        .map(|x| Rational::from_integer(x.clone()))
        .collect();
    lp::feasible(&a, &b)
}

/// A cone is pointed iff some linear functional is strictly positive on all
/// of its nonzero points; decided by the exact LP `<g_i, l> >= 1`.
fn is_pointed(rays: &[LatticeVector], dim: usize) -> bool {
    if rays.is_empty() {
        return true;
    }
    // l free, split into l = p - q with p, q >= 0; slack s_i >= 0 per ray.
    let m = rays.len();
    let n = 2 * dim + m;
    let mut a = Vec::with_capacity(m);
    for (i, r) in rays.iter().enumerate() {
        let mut row = vec![Rational::zero(); n];
        for j in 0..dim {
            row[j] = Rational::from_integer(r[j].clone());
            row[dim + j] = -Rational::from_integer(r[j].clone());
        }
        row[2 * dim + i] = -Rational::from_integer(1.into());
        a.push(row);
    }
    let b = vec![Rational::from_integer(1.into()); m];
    lp::feasible(&a, &b)
}

/// Interior lattice point of the dual cone, as the sum of its primitive ray
/// generators. Strictly positive on every nonzero point of the cone; used as
/// the grading for semigroup computations.
pub fn dual_interior_point(cone: &Cone) -> Result<LatticeVector> {
    if !cone.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let mut l = vec![Integer::zero(); cone.ambient_dim()];
    for n in cone.facet_normals() {
        for (a, b) in l.iter_mut().zip(n) {
            *a += b;
        }
    }
    if cone.rays().iter().any(|r| !dot(&l, r).is_positive()) {
        // Happens only for non-pointed input, which construction rejects.
        return Err(Error::NotPointed);
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, int_vec};

    fn cone2(gens: &[&[i64]]) -> Cone {
        Cone::from_generators(
            &gens.iter().map(|g| int_vec(g)).collect::<Vec<_>>(),
            gens[0].len(),
        )
        .unwrap()
    }

    fn ray_set(c: &Cone) -> Vec<LatticeVector> {
        let mut r = c.rays().to_vec();
        r.sort();
        r
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = cone2(&[&[1, 0], &[0, 1]]);
        let d = c.dual().unwrap();
        assert_eq!(ray_set(&c), ray_set(&d));
    }

    #[test]
    fn dual_of_singular_cone() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        let d = c.dual().unwrap();
        let mut expect = vec![int_vec(&[0, 1]), int_vec(&[2, -1])];
        expect.sort();
        assert_eq!(ray_set(&d), expect);
    }

    #[test]
    fn double_dual_is_identity() {
        // vertex-0 dual cone of the sharpness family, n = 3, r = 2
        let c = cone2(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        let dd = c.dual().unwrap().dual().unwrap();
        assert_eq!(ray_set(&c), ray_set(&dd));
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = cone2(&[&[1, 0], &[1, 1], &[0, 1], &[2, 2]]);
        assert_eq!(ray_set(&c), vec![int_vec(&[0, 1]), int_vec(&[1, 0])]);
    }

    #[test]
    fn non_pointed_is_rejected() {
        let gens = vec![int_vec(&[1, 0]), int_vec(&[-1, 0]), int_vec(&[0, 1])];
        assert_eq!(Cone::from_generators(&gens, 2), Err(Error::NotPointed));
    }

    #[test]
    fn smoothness_and_multiplicity() {
        assert!(cone2(&[&[1, 0], &[0, 1]]).is_smooth());
        let singular = cone2(&[&[1, 0], &[1, 2]]);
        assert!(!singular.is_smooth());
        assert_eq!(singular.multiplicity(), int(2));
    }

    #[test]
    fn one_dimensional_ambient() {
        let c = cone2(&[&[1]]);
        assert!(c.is_full_dimensional());
        assert_eq!(c.facet_normals(), &[int_vec(&[1])]);
        let d = c.dual().unwrap();
        assert_eq!(d.rays(), &[int_vec(&[1])]);
    }

    #[test]
    fn grading_is_strictly_positive() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        let l = dual_interior_point(&c).unwrap();
        for r in c.rays() {
            assert!(dot(&l, r).is_positive());
        }
    }
}
