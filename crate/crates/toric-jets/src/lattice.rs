//! Lattice-level operations: primitive vectors, lattice lengths, cone
//! multiplicities and quotient-lattice projections.

use crate::arith::{
    coord_gcd, denom_lcm, rat_vec_sub, Integer, LatticeVector, Rational, RationalVector,
};
use crate::matrix::{kernel_basis, rank, smith_invariant_factors, IntMatrix};
use crate::{Error, Result};
use num_traits::{One, Zero};

/// Divides out the content of `v`, keeping the direction.
pub fn primitive(v: &[Integer]) -> Result<LatticeVector> {
    let g = coord_gcd(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// The unique l >= 0 with u1 - u2 = l * w for a primitive lattice vector w.
pub fn lattice_length(u1: &[Rational], u2: &[Rational]) -> Result<Rational> {
    if u1.len() != u2.len() {
        return Err(Error::DimensionMismatch(format!(
            "lattice_length: {} vs {}",
            u1.len(),
            u2.len()
        )));
    }
    let diff = rat_vec_sub(u1, u2);
    let l = denom_lcm(&diff);
    let scaled: LatticeVector = diff.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = coord_gcd(&scaled);
    Ok(Rational::new(g, l))
}

/// Index of the lattice generated by `gens` inside the saturation of its
/// span: the product of the invariant factors of the generator matrix.
/// The empty generator list has multiplicity one.
pub fn multiplicity(gens: &[LatticeVector]) -> Integer {
    if gens.is_empty() {
        return Integer::one();
    }
    smith_invariant_factors(&IntMatrix::from_rows(gens.to_vec()))
        .into_iter()
        .product()
}

/// mult(tau, v0) / mult(tau): the positive generator index of the image of
/// `v0` in N / N_tau. Errors when `v0` lies in the span of `tau`.
pub fn transverse_index(tau_gens: &[LatticeVector], v0: &[Integer]) -> Result<Integer> {
    let base_rank = if tau_gens.is_empty() {
        0
    } else {
        rank(&IntMatrix::from_rows(tau_gens.to_vec()))
    };
    let mut extended = tau_gens.to_vec();
    extended.push(v0.to_vec());
    if rank(&IntMatrix::from_rows(extended.clone())) != base_rank + 1 {
        return Err(Error::NotTransverse);
    }
    let m_tau = multiplicity(tau_gens);
    let m_ext = multiplicity(&extended);
    debug_assert!((&m_ext % &m_tau).is_zero());
    Ok(m_ext / m_tau)
}

/// Projection matrix M -> M / sat(span(sub_gens)) expressed in an
/// HNF-canonical basis of the quotient. The rows are a basis of the integer
/// kernel of the generator matrix, so the map is surjective onto
/// Z^(d - rank) and its kernel on M is exactly the saturation.
pub fn quotient_lattice_map(sub_gens: &[LatticeVector], ambient_dim: usize) -> IntMatrix {
    if sub_gens.is_empty() {
        return IntMatrix::identity(ambient_dim);
    }
    let a = IntMatrix::new(sub_gens.to_vec(), ambient_dim);
    IntMatrix::from_rows(kernel_basis(&a))
}

/// Applies a projection matrix to an integer point.
pub fn apply_map(map: &IntMatrix, v: &[Integer]) -> LatticeVector {
    map.rows
        .iter()
        .map(|row| crate::arith::dot(row, v))
        .collect()
}

/// Applies a projection matrix to a rational point.
pub fn apply_map_rational(map: &IntMatrix, v: &[Rational]) -> RationalVector {
    map.rows
        .iter()
        .map(|row| crate::arith::rat_int_dot(v, row))
        .collect()
}
