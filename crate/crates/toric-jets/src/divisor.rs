//! T-invariant Cartier and Q-divisors on complete fans: support functions,
//! intersection numbers with invariant curves, edge lengths, higher
//! concavity, and Seshadri constants at fixed points.
//!
//! Sign convention: the support function is the minimum over the polytope,
//! psi(v) = min_{u in P} <u, v>, so the local datum of a maximal cone is the
//! vertex of P_D minimizing on it and psi is concave exactly when the divisor
//! is nef.

use crate::arith::{dot, rat_int_dot, rat_vec, Integer, LatticeVector, Rational, RationalVector};
use crate::fan::{Fan, Wall};
use crate::lattice::lattice_length;
use crate::polytope::{Face, Polytope};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
pub struct TCartierDivisor {
    fan: Fan,
    local_data: Vec<LatticeVector>,
    polytope: Option<Polytope>,
    ample: bool,
}

/// A T-invariant Q-divisor given by one rational coefficient per ray.
#[derive(Debug, Clone)]
pub struct TQDivisor {
    pub fan: Fan,
    pub coefficients: Vec<Rational>,
}

/// Per-wall data of an ample divisor: the polytope edge, its lattice length
/// and the intersection number with the invariant curve of the wall. The two
/// agree for ample Cartier divisors.
#[derive(Debug, Clone)]
pub struct EdgeRow {
    pub wall: usize,
    pub cones: (usize, usize),
    pub endpoints: (LatticeVector, LatticeVector),
    pub lattice_length: Rational,
    pub intersection_number: Rational,
}

#[derive(Debug, Clone)]
pub struct EdgeReport {
    pub rows: Vec<EdgeRow>,
}

impl TCartierDivisor {
    /// The ample divisor of a full-dimensional lattice polytope: normal fan
    /// plus the vertex of P as local datum of its cone.
    pub fn from_polytope(p: &Polytope) -> Result<TCartierDivisor> {
        if !p.is_lattice() {
            return Err(Error::InvalidInput(
                "polytope has non-lattice vertices".into(),
            ));
        }
        let fan = Fan::normal_fan(p)?;
        let local_data: Vec<LatticeVector> = p
            .vertices()
            .iter()
            .map(|v| v.iter().map(|c| c.numer().clone()).collect())
            .collect();
        let divisor = TCartierDivisor {
            fan,
            local_data,
            polytope: Some(p.clone()),
            ample: true,
        };
        debug_assert!(divisor.verify_ample());
        Ok(divisor)
    }

    /// A divisor from explicit per-cone local data. Validates the Cartier
    /// compatibility across every wall; detects ampleness and in that case
    /// builds the polytope conv{u_sigma} (vertex i belongs to cone i).
    pub fn from_fan_local_data(
        fan: Fan,
        local_data: Vec<LatticeVector>,
    ) -> Result<TCartierDivisor> {
        if local_data.len() != fan.n_max_cones() {
            return Err(Error::IncompatibleData(format!(
                "{} local data for {} maximal cones",
                local_data.len(),
                fan.n_max_cones()
            )));
        }
        for u in &local_data {
            if u.len() != fan.dim() {
                return Err(Error::DimensionMismatch("local datum".into()));
            }
        }
        for wall in fan.walls() {
            let diff = crate::arith::vec_sub(&local_data[wall.cones.0], &local_data[wall.cones.1]);
            for &ri in &wall.rays {
                if !dot(&diff, &fan.rays()[ri]).is_zero() {
                    return Err(Error::IncompatibleData(format!(
                        "local data disagree on the wall between cones {} and {}",
                        wall.cones.0, wall.cones.1
                    )));
                }
            }
        }
        let mut divisor = TCartierDivisor {
            fan,
            local_data,
            polytope: None,
            ample: false,
        };
        if divisor.fan.is_complete() && divisor.verify_ample() {
            divisor.ample = true;
            let pts: Vec<RationalVector> = divisor.local_data.iter().map(|u| rat_vec(u)).collect();
            let p = Polytope::from_points(&pts)?;
            if p.vertices().len() != divisor.local_data.len() {
                return Err(Error::IncompatibleData(
                    "strictly concave data must give one vertex per cone".into(),
                ));
            }
            divisor.polytope = Some(p);
        }
        Ok(divisor)
    }

    fn verify_ample(&self) -> bool {
        let n = self.local_data.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.local_data[i] == self.local_data[j] {
                    return false;
                }
            }
        }
        self.fan
            .walls()
            .iter()
            .all(|w| self.wall_intersection(w).is_positive())
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn local_data(&self) -> &[LatticeVector] {
        &self.local_data
    }

    pub fn local_datum(&self, cone: usize) -> &LatticeVector {
        &self.local_data[cone]
    }

    pub fn is_ample(&self) -> bool {
        self.ample
    }

    pub fn require_ample(&self) -> Result<()> {
        if self.ample {
            Ok(())
        } else {
            Err(Error::NotAmple("operation needs an ample divisor".into()))
        }
    }

    /// The polytope P_D; present exactly when the divisor is ample.
    /// Vertex i corresponds to maximal cone i.
    pub fn polytope(&self) -> Result<&Polytope> {
        self.polytope
            .as_ref()
            .ok_or_else(|| Error::NotAmple("no polytope for a non-ample divisor".into()))
    }

    /// psi(v) = <u_sigma, v> on any maximal cone containing v.
    pub fn psi(&self, v: &[Rational]) -> Result<Rational> {
        let idx = (0..self.fan.n_max_cones())
            .find(|&i| self.fan.cone(i).contains_rational(v))
            .ok_or(Error::OutsideCone)?;
        Ok(rat_int_dot(v, &self.local_data[idx]))
    }

    pub fn psi_lattice(&self, v: &[Integer]) -> Result<Rational> {
        self.psi(&rat_vec(v))
    }

    /// D · V(tau) for a wall tau: <u_1 - u_2, v0> mult(tau) / mult(tau, v0),
    /// evaluated at the first ray of the second cone outside the wall.
    pub fn wall_intersection(&self, wall: &Wall) -> Rational {
        let data: Vec<RationalVector> = self.local_data.iter().map(|u| rat_vec(u)).collect();
        wall_intersection_rational(&self.fan, wall, &data)
    }

    /// Lattice lengths and intersection numbers of all polytope edges.
    pub fn edge_report(&self) -> Result<EdgeReport> {
        self.require_ample()?;
        self.fan.require_complete()?;
        let mut rows = Vec::new();
        for (wi, wall) in self.fan.walls().iter().enumerate() {
            let (a, b) = wall.cones;
            let length =
                lattice_length(&rat_vec(&self.local_data[a]), &rat_vec(&self.local_data[b]))?;
            let inter = self.wall_intersection(wall);
            debug_assert_eq!(
                length, inter,
                "edge length must equal the intersection number"
            );
            rows.push(EdgeRow {
                wall: wi,
                cones: (a, b),
                endpoints: (self.local_data[a].clone(), self.local_data[b].clone()),
                lattice_length: length,
                intersection_number: inter,
            });
        }
        Ok(EdgeReport { rows })
    }

    /// Minimum lattice length of the polytope edges at the vertex of a
    /// maximal cone.
    pub fn min_edge_length_at_cone(&self, cone: usize) -> Result<Rational> {
        self.require_ample()?;
        self.fan.require_complete()?;
        let mut best: Option<Rational> = None;
        for wall in self.fan.walls_at(cone) {
            let (a, b) = wall.cones;
            let l = lattice_length(&rat_vec(&self.local_data[a]), &rat_vec(&self.local_data[b]))?;
            if best.as_ref().is_none_or(|cur| l < *cur) {
                best = Some(l);
            }
        }
        best.ok_or_else(|| Error::NotComplete("maximal cone has no walls".into()))
    }

    /// The largest k such that psi is k-concave: the minimum over all walls
    /// of the intersection number with the wall curve. Negative when psi is
    /// not even concave (the divisor is not nef).
    pub fn max_concavity(&self) -> Result<Rational> {
        self.fan.require_complete()?;
        let mut best: Option<Rational> = None;
        for wall in self.fan.walls() {
            let v = self.wall_intersection(wall);
            if best.as_ref().is_none_or(|cur| v < *cur) {
                best = Some(v);
            }
        }
        best.ok_or_else(|| Error::NotComplete("fan has no walls".into()))
    }

    /// psi is k-concave iff k is at most the maximal concavity.
    pub fn is_k_concave(&self, k: &Rational) -> Result<bool> {
        if k.is_negative() {
            return Err(Error::Precondition(
                "concavity order must be nonnegative".into(),
            ));
        }
        Ok(*k <= self.max_concavity()?)
    }

    /// Seshadri constant at the fixed point of a maximal cone: the minimum
    /// edge length of P_D at the corresponding vertex.
    pub fn seshadri_at_fixed_point(&self, cone: usize) -> Result<Integer> {
        let l = self.min_edge_length_at_cone(cone)?;
        debug_assert!(l.denom().is_one());
        Ok(l.to_integer())
    }

    /// Global Seshadri constant: the minimum over the T-fixed points.
    pub fn seshadri_global(&self) -> Result<Integer> {
        self.require_ample()?;
        let mut best: Option<Integer> = None;
        for i in 0..self.fan.n_max_cones() {
            let s = self.seshadri_at_fixed_point(i)?;
            if best.as_ref().is_none_or(|cur| s < *cur) {
                best = Some(s);
            }
        }
        best.ok_or_else(|| Error::NotComplete("fan has no maximal cones".into()))
    }

    /// Ray coefficients of the divisor: a_rho = -<u_sigma, v_rho>.
    pub fn ray_coefficients(&self) -> TQDivisor {
        let mut coeffs = vec![Rational::zero(); self.fan.rays().len()];
        for (ci, cone_rays) in self.fan.max_cones().iter().enumerate() {
            for &ri in cone_rays {
                coeffs[ri] =
                    -Rational::from_integer(dot(&self.local_data[ci], &self.fan.rays()[ri]));
            }
        }
        TQDivisor {
            fan: self.fan.clone(),
            coefficients: coeffs,
        }
    }

    /// Scales the divisor by a positive integer.
    pub fn multiple(&self, m: &Integer) -> Result<TCartierDivisor> {
        if !m.is_positive() {
            return Err(Error::Precondition("multiple must be positive".into()));
        }
        let data = self
            .local_data
            .iter()
            .map(|u| crate::arith::vec_scale(m, u))
            .collect();
        TCartierDivisor::from_fan_local_data(self.fan.clone(), data)
    }

    /// Sum of two divisors on the same fan.
    pub fn add(&self, other: &TCartierDivisor) -> Result<TCartierDivisor> {
        if self.fan.rays() != other.fan.rays() || self.fan.max_cones() != other.fan.max_cones() {
            return Err(Error::IncompatibleData(
                "divisors live on different fans".into(),
            ));
        }
        let data = self
            .local_data
            .iter()
            .zip(&other.local_data)
            .map(|(a, b)| crate::arith::vec_add(a, b))
            .collect();
        TCartierDivisor::from_fan_local_data(self.fan.clone(), data)
    }
}

/// Intersection number of a Q-Cartier divisor (rational local data) with the
/// invariant curve of a wall.
pub fn wall_intersection_rational(fan: &Fan, wall: &Wall, data: &[RationalVector]) -> Rational {
    let (s1, s2) = wall.cones;
    let v0 = &fan.rays()[fan.wall_outer_ray(wall)];
    let diff: RationalVector = data[s1].iter().zip(&data[s2]).map(|(a, b)| a - b).collect();
    let pairing = rat_int_dot(&diff, v0);
    let mult_tau = fan.wall_multiplicity(wall);
    let mult_ext = fan.wall_extended_multiplicity(wall);
    pairing * Rational::new(mult_tau, mult_ext)
}

impl TQDivisor {
    /// The canonical divisor: coefficient -1 on every ray.
    pub fn canonical(fan: &Fan) -> TQDivisor {
        TQDivisor {
            fan: fan.clone(),
            coefficients: vec![-Rational::one(); fan.rays().len()],
        }
    }

    pub fn zero(fan: &Fan) -> TQDivisor {
        TQDivisor {
            fan: fan.clone(),
            coefficients: vec![Rational::zero(); fan.rays().len()],
        }
    }

    pub fn add(&self, other: &TQDivisor) -> TQDivisor {
        TQDivisor {
            fan: self.fan.clone(),
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Solves <u_sigma, v_rho> = -a_rho on every maximal cone. `None` when
    /// some system is inconsistent (the divisor is not Q-Cartier).
    pub fn q_cartier_local_data(&self) -> Option<Vec<RationalVector>> {
        let mut out = Vec::new();
        for cone_rays in self.fan.max_cones() {
            let a: Vec<Vec<Rational>> = cone_rays
                .iter()
                .map(|&ri| {
                    self.fan.rays()[ri]
                        .iter()
                        .map(|x| Rational::from_integer(x.clone()))
                        .collect()
                })
                .collect();
            let b: Vec<Rational> = cone_rays
                .iter()
                .map(|&ri| -self.coefficients[ri].clone())
                .collect();
            out.push(crate::matrix::solve_rational(&a, &b)?);
        }
        Some(out)
    }

    /// Cartier iff Q-Cartier with integral local data everywhere.
    pub fn cartier_local_data(&self) -> Option<Vec<LatticeVector>> {
        let data = self.q_cartier_local_data()?;
        let mut out = Vec::new();
        for u in data {
            let mut v = Vec::new();
            for c in u {
                if !c.denom().is_one() {
                    return None;
                }
                v.push(c.numer().clone());
            }
            out.push(v);
        }
        Some(out)
    }
}

/// s(P'_xi; v'_xi) <= s(P''_tau; v''_tau) for incident faces xi inside tau
/// with dim tau = dim xi + 1: the minimal edge length at the projected
/// vertex can only grow when projecting along the bigger face.
pub fn projection_monotonicity_check(p: &Polytope, xi: &Face, tau: &Face) -> Result<bool> {
    if tau.dim != xi.dim + 1 {
        return Err(Error::Precondition(
            "faces must be incident with dimension gap one".into(),
        ));
    }
    if !xi.vertices.iter().all(|v| tau.vertices.contains(v)) {
        return Err(Error::Precondition(
            "first face must lie in the second".into(),
        ));
    }
    if tau.dim >= p.dim() {
        return Err(Error::Precondition(
            "second face must be a proper face".into(),
        ));
    }
    let (p_xi, v_xi, _) = p.project_along_face(xi)?;
    let (p_tau, v_tau, _) = p.project_along_face(tau)?;
    let s_xi = p_xi.min_edge_length_at(
        p_xi.vertex_index(&v_xi)
            .ok_or_else(|| Error::NotAVertex("projected face image".into()))?,
    )?;
    let s_tau = p_tau.min_edge_length_at(
        p_tau
            .vertex_index(&v_tau)
            .ok_or_else(|| Error::NotAVertex("projected face image".into()))?,
    )?;
    Ok(s_xi <= s_tau)
}
