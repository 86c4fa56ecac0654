//! Arbitrary-precision arithmetic and small vector helpers.
//!
//! All coordinates in the crate are [`Integer`] (elements of the lattices M,
//! N) or [`Rational`] (elements of M ⊗ Q, N ⊗ Q). `BigRational` keeps its
//! invariant (positive denominator, reduced fraction) after every operation,
//! so exactness is automatic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// A point of a lattice Z^d.
pub type LatticeVector = Vec<Integer>;
/// A point of Q^d.
pub type RationalVector = Vec<Rational>;

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn int_vec(coords: &[i64]) -> LatticeVector {
    coords.iter().map(|&c| Integer::from(c)).collect()
}

pub fn rat_vec(v: &[Integer]) -> RationalVector {
    v.iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect()
}

pub fn vec_add(a: &[Integer], b: &[Integer]) -> LatticeVector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Integer], b: &[Integer]) -> LatticeVector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Integer]) -> LatticeVector {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &Integer, a: &[Integer]) -> LatticeVector {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[Integer]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn rat_vec_add(a: &[Rational], b: &[Rational]) -> RationalVector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn rat_vec_sub(a: &[Rational], b: &[Rational]) -> RationalVector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn rat_dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// ⟨u, v⟩ with u rational and v integral.
pub fn rat_int_dot(u: &[Rational], v: &[Integer]) -> Rational {
    debug_assert_eq!(u.len(), v.len());
    u.iter()
        .zip(v)
        .map(|(x, y)| x * Rational::from_integer(y.clone()))
        .sum()
}

/// Gcd of the absolute values of the coordinates (zero for the zero vector).
pub fn coord_gcd(a: &[Integer]) -> Integer {
    let mut g = Integer::zero();
    for x in a {
        g = num_integer::gcd(g, x.abs());
    }
    g
}

/// Least common multiple of the coordinate denominators.
pub fn denom_lcm(a: &[Rational]) -> Integer {
    let mut l = Integer::one();
    for x in a {
        l = num_integer::lcm(l, x.denom().clone());
    }
    l
}

/// Clears denominators and divides out the content, preserving direction.
/// Returns the primitive integer vector parallel to `a`, or `None` for zero.
pub fn rational_primitive_direction(a: &[Rational]) -> Option<LatticeVector> {
    let l = denom_lcm(a);
    let scaled: LatticeVector = a.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = coord_gcd(&scaled);
    if g.is_zero() {
        return None;
    }
    Some(scaled.iter().map(|x| x / &g).collect())
}

/// Exact floor of a rational number.
pub fn rat_floor(x: &Rational) -> Integer {
    x.floor().to_integer()
}

/// Formats a rational as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` (denominator must be nonzero).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<Integer>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<Integer>().ok()?;
            let q = q.trim().parse::<Integer>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}
