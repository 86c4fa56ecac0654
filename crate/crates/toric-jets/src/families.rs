//! Deterministic generators for the polytope families used by tests and the
//! command line: the singular sharpness family, weighted projective spaces,
//! and smooth standards (simplices, boxes, Hirzebruch trapezoids).

use crate::arith::{Integer, LatticeVector, Rational};
use crate::divisor::TCartierDivisor;
use crate::lattice::lattice_length;
use crate::matrix::{hermite_normal_form, kernel_basis, solve_rational, IntMatrix};
use crate::polytope::Polytope;
use crate::{Error, Result};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// The sharpness family: P = conv(0, e_1, ..., e_{n-1}, a) with
/// a = e_1 + ... + e_{n-1} + r e_n, its ample divisor D, and the divisor
/// G = (k + n - 3) D that fails to separate k-jets at the vertex-0 point.
pub struct SharpnessExample {
    pub polytope: Polytope,
    pub divisor: TCartierDivisor,
    pub sharp_divisor: TCartierDivisor,
    pub sharp_multiple: Integer,
}

pub fn example_3_1(n: u64, r: u64, k: u64) -> Result<SharpnessExample> {
    if n < 2 {
        return Err(Error::Precondition("dimension must be at least 2".into()));
    }
    if r + 2 <= n {
        return Err(Error::Precondition("parameter r must exceed n - 2".into()));
    }
    if k < 1 {
        return Err(Error::Precondition("jet order must be at least 1".into()));
    }
    let m = k as i64 + n as i64 - 3;
    if m < 1 {
        return Err(Error::Precondition(
            "k + n - 3 must be positive for the sharp divisor".into(),
        ));
    }
    let n = n as usize;
    let mut pts: Vec<LatticeVector> = vec![vec![Integer::zero(); n]];
    for i in 0..n - 1 {
        let mut e = vec![Integer::zero(); n];
        e[i] = Integer::one();
        pts.push(e);
    }
    let mut a = vec![Integer::one(); n];
    a[n - 1] = Integer::from(r);
    pts.push(a);
    let polytope = Polytope::from_lattice_points(&pts)?;
    let divisor = TCartierDivisor::from_polytope(&polytope)?;
    let sharp_multiple = Integer::from(m);
    let sharp_divisor = divisor.multiple(&sharp_multiple)?;
    Ok(SharpnessExample {
        polytope,
        divisor,
        sharp_divisor,
        sharp_multiple,
    })
}

/// The generator polytope of the weighted projective space P(a_0, ..., a_n),
/// expressed in the HNF-canonical basis of the hyperplane lattice
/// { x : Σ a_i x_i = 0 }. The edge between vertices i and j has lattice
/// length lcm(a) / lcm(a_i, a_j).
pub fn weighted_projective(weights: &[u64]) -> Result<Polytope> {
    if weights.len() < 3 {
        return Err(Error::Precondition(
            "need at least three weights (dimension two)".into(),
        ));
    }
    if weights.contains(&0) {
        return Err(Error::Precondition("weights must be positive".into()));
    }
    for j in 0..weights.len() {
        let mut g = Integer::zero();
        for (i, &w) in weights.iter().enumerate() {
            if i != j {
                g = g.gcd(&Integer::from(w));
            }
        }
        if !g.is_one() {
            return Err(Error::Precondition(format!(
                "weights are not reduced: dropping index {j} leaves gcd {g}"
            )));
        }
    }
    let n1 = weights.len();
    let w_ints: Vec<Integer> = weights.iter().map(|&w| Integer::from(w)).collect();
    let mut l = Integer::one();
    for w in &w_ints {
        l = l.lcm(w);
    }
    // direction lattice of the hyperplane sum a_i x_i = 0
    let a_row = IntMatrix::new(vec![w_ints.clone()], n1);
    let basis = kernel_basis(&a_row);
    debug_assert_eq!(basis.len(), n1 - 1);
    // integer base point with sum a_i x_i = l, via the HNF transform of a
    let a_col = IntMatrix::new(w_ints.iter().map(|w| vec![w.clone()]).collect(), 1);
    let (h, u) = hermite_normal_form(&a_col);
    debug_assert!(h.rows[0][0].is_one());
    let base: LatticeVector = u.rows[0].iter().map(|c| c * &l).collect();
    // vertices (l / a_i) e_i in hyperplane coordinates
    let bt_rows: Vec<Vec<Rational>> = (0..n1)
        .map(|coord| {
            basis
                .iter()
                .map(|b| Rational::from_integer(b[coord].clone()))
                .collect()
        })
        .collect();
    let mut verts = Vec::new();
    for (i, w) in w_ints.iter().enumerate() {
        let mut v = vec![Integer::zero(); n1];
        v[i] = &l / w;
        let rhs: Vec<Rational> = v
            .iter()
            .zip(&base)
            .map(|(x, b)| Rational::from_integer(x - b))
            .collect();
        let coords = solve_rational(&bt_rows, &rhs)
            .ok_or_else(|| Error::InvalidInput("hyperplane solve failed".into()))?;
        let vertex: LatticeVector = coords
            .iter()
            .map(|c| {
                debug_assert!(c.denom().is_one());
                c.numer().clone()
            })
            .collect();
        verts.push(vertex);
    }
    Polytope::from_lattice_points(&verts)
}

/// m times the standard simplex: conv(0, m e_1, ..., m e_d).
pub fn simplex(dim: usize, m: &Integer) -> Result<Polytope> {
    if dim == 0 || !m.is_positive() {
        return Err(Error::Precondition(
            "simplex needs positive dimension and scale".into(),
        ));
    }
    let mut pts = vec![vec![Integer::zero(); dim]];
    for i in 0..dim {
        let mut e = vec![Integer::zero(); dim];
        e[i] = m.clone();
        pts.push(e);
    }
    Polytope::from_lattice_points(&pts)
}

/// An axis-aligned box with the given side lengths.
pub fn cube(sides: &[Integer]) -> Result<Polytope> {
    if sides.is_empty() || sides.iter().any(|s| !s.is_positive()) {
        return Err(Error::Precondition("box sides must be positive".into()));
    }
    let d = sides.len();
    let mut pts = Vec::new();
    for mask in 0..(1u32 << d) {
        let corner: LatticeVector = (0..d)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    sides[i].clone()
                } else {
                    Integer::zero()
                }
            })
            .collect();
        pts.push(corner);
    }
    Polytope::from_lattice_points(&pts)
}

/// The trapezoid conv((0,0), (b,0), (0,c), (b - a c, c)), ample on the
/// Hirzebruch surface F_a; needs b > a c.
pub fn hirzebruch(a: u64, b: &Integer, c: &Integer) -> Result<Polytope> {
    if !b.is_positive() || !c.is_positive() {
        return Err(Error::Precondition(
            "trapezoid sides must be positive".into(),
        ));
    }
    let slant = b - Integer::from(a) * c;
    if !slant.is_positive() {
        return Err(Error::Precondition(
            "width must exceed twist times height for an ample trapezoid".into(),
        ));
    }
    let pts = vec![
        vec![Integer::zero(), Integer::zero()],
        vec![b.clone(), Integer::zero()],
        vec![Integer::zero(), c.clone()],
        vec![slant, c.clone()],
    ];
    Polytope::from_lattice_points(&pts)
}

/// Sorted multiset of edge lattice lengths of a lattice polytope.
pub fn edge_lengths(p: &Polytope) -> Vec<Rational> {
    let mut out: Vec<Rational> = p
        .faces(1)
        .iter()
        .map(|e| {
            lattice_length(&p.vertices()[e.vertices[0]], &p.vertices()[e.vertices[1]]).unwrap()
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::semigroup::DualConeData;

    #[test]
    fn example_3_1_instances() {
        let e = example_3_1(3, 2, 1).unwrap();
        assert_eq!(e.polytope.vertices().len(), 4);
        assert_eq!(e.sharp_multiple, int(1));
        // the vertex-0 dual cone is cone(e1, e2, (1,1,2))
        let dual = e.divisor.fan().cone(0).dual().unwrap();
        let mut rays = dual.rays().to_vec();
        rays.sort();
        assert_eq!(
            rays,
            vec![
                crate::arith::int_vec(&[0, 1, 0]),
                crate::arith::int_vec(&[1, 0, 0]),
                crate::arith::int_vec(&[1, 1, 2])
            ]
        );

        let e2 = example_3_1(2, 1, 2).unwrap();
        assert_eq!(e2.sharp_multiple, int(1));
        assert_eq!(e2.polytope.vertices().len(), 3);

        let e4 = example_3_1(4, 3, 1).unwrap();
        assert_eq!(e4.sharp_multiple, int(2));
        assert_eq!(e4.polytope.vertices().len(), 5);

        assert!(example_3_1(2, 1, 1).is_err()); // k + n - 3 = 0
        assert!(example_3_1(3, 1, 1).is_err()); // r must exceed n - 2
    }

    #[test]
    fn gamma_regression_over_parameter_grid() {
        for n in [2u64, 3, 4] {
            for r in (n - 1)..=(n + 3) {
                let e = example_3_1(n, r, 2).unwrap();
                let dual = DualConeData::new(e.divisor.fan().cone(0).dual().unwrap()).unwrap();
                let expect = rat(n as i64 - 2, 1) - rat(n as i64 - 2, r as i64);
                assert_eq!(*dual.gamma(), expect, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn weighted_projective_plane_edges() {
        // P(1,1,1) is the unit simplex up to a unimodular change
        let p = weighted_projective(&[1, 1, 1]).unwrap();
        assert_eq!(edge_lengths(&p), vec![rat(1, 1); 3]);

        let p = weighted_projective(&[2, 3, 5]).unwrap();
        assert_eq!(edge_lengths(&p), vec![rat(2, 1), rat(3, 1), rat(5, 1)]);

        let p = weighted_projective(&[1, 1, 2]).unwrap();
        assert_eq!(edge_lengths(&p), vec![rat(1, 1), rat(1, 1), rat(2, 1)]);
    }

    #[test]
    fn weighted_projective_edge_formula() {
        // l / lcm(a_i, a_j) for each pair
        let weights = [2u64, 3, 7];
        let p = weighted_projective(&weights).unwrap();
        let l = int(42);
        let mut expect: Vec<Rational> = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let lij = Integer::from(weights[i]).lcm(&Integer::from(weights[j]));
                expect.push(Rational::new(l.clone(), lij));
            }
        }
        expect.sort();
        assert_eq!(edge_lengths(&p), expect);
    }

    #[test]
    fn unreduced_weights_are_rejected() {
        assert!(weighted_projective(&[2, 2, 3]).is_err());
        assert!(weighted_projective(&[2, 4, 6]).is_err());
        assert!(weighted_projective(&[1, 1]).is_err());
    }

    #[test]
    fn standard_families() {
        let s = simplex(2, &int(3)).unwrap();
        assert_eq!(edge_lengths(&s), vec![rat(3, 1); 3]);

        let b = cube(&[int(3), int(2)]).unwrap();
        assert_eq!(b.vertices().len(), 4);
        assert_eq!(
            edge_lengths(&b),
            vec![rat(2, 1), rat(2, 1), rat(3, 1), rat(3, 1)]
        );

        let h = hirzebruch(1, &int(3), &int(1)).unwrap();
        let d = TCartierDivisor::from_polytope(&h).unwrap();
        assert!(d.is_ample());
        assert!(hirzebruch(2, &int(2), &int(1)).is_err());
    }
}
