//! Jet-ampleness certification and the brute-force evaluation-map oracle.
//!
//! The checker certifies k-jet ampleness of an ample Cartier divisor from the
//! per-cone inequality L_sigma >= k + gamma(sigma-dual): a sufficient
//! condition, so "not certified" is never a disproof. The oracle decides
//! surjectivity of the evaluation maps at T-invariant point configurations
//! exactly, combinatorially and characteristic-free: in the monomial bases,
//! the matrix row of a target coordinate (i, e) is the standard basis vector
//! of the section u_i + e when that point lies in P_D, and zero otherwise,
//! so surjectivity means all rows are nonzero and pairwise distinct. Running
//! the oracle over every configuration with multiplicities summing to k+1 is
//! exact ground truth for k-jet ampleness.

use crate::arith::{rat_floor, vec_add, Integer, LatticeVector, Rational, RationalVector};
use crate::divisor::{wall_intersection_rational, TCartierDivisor, TQDivisor};
use crate::fan::Fan;
use crate::semigroup::DualConeData;
use crate::{Error, Result};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use std::collections::{HashMap, HashSet};

/// One row of a jet certificate: the minimal edge length at the cone's
/// vertex, the gamma constant of the dual cone, and the slack
/// L - k - gamma. The divisor is certified when every slack is nonnegative.
#[derive(Debug, Clone)]
pub struct CertificateRow {
    pub cone: usize,
    pub min_edge_length: Rational,
    pub gamma: Rational,
    pub slack: Rational,
}

#[derive(Debug, Clone)]
pub struct JetCertificate {
    pub k: u64,
    pub rows: Vec<CertificateRow>,
    pub certified: bool,
}

/// Largest certified jet orders: per-cone form (min over cones of
/// L - gamma, floored and clamped at zero) and the weaker global form
/// (min edge length minus gamma_x).
#[derive(Debug, Clone)]
pub struct MaxKReport {
    pub per_cone: Vec<(usize, Rational)>,
    pub max_k: u64,
    pub global_bound: Rational,
    pub global_max_k: u64,
}

/// A T-invariant point configuration: distinct maximal cones with
/// multiplicities k_i >= 1. Tests k-jets for k = (sum of k_i) - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    parts: Vec<(usize, u64)>,
}

impl Configuration {
    pub fn new(parts: Vec<(usize, u64)>) -> Result<Configuration> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("empty configuration".into()));
        }
        if parts.iter().any(|&(_, k)| k == 0) {
            return Err(Error::InvalidInput(
                "configuration multiplicities must be positive".into(),
            ));
        }
        let mut cones: Vec<usize> = parts.iter().map(|&(c, _)| c).collect();
        cones.sort_unstable();
        cones.dedup();
        if cones.len() != parts.len() {
            return Err(Error::InvalidInput(
                "configuration cones must be distinct".into(),
            ));
        }
        Ok(Configuration { parts })
    }

    pub fn parts(&self) -> &[(usize, u64)] {
        &self.parts
    }

    /// The jet order tested by this configuration: sum of multiplicities - 1.
    pub fn jet_order(&self) -> u64 {
        self.parts.iter().map(|&(_, k)| k).sum::<u64>() - 1
    }
}

/// Failure evidence of a non-surjective evaluation map, validated by
/// re-checking against the section polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleWitness {
    /// The target coordinate (cone, exponent) cannot be hit: the section
    /// point u_cone + exponent is outside P_D.
    UnreachableTarget {
        cone: usize,
        exponent: LatticeVector,
    },
    /// Two target coordinates are hit by the same section.
    CollidingPair {
        first: (usize, LatticeVector),
        second: (usize, LatticeVector),
        section: LatticeVector,
    },
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub configuration: Configuration,
    pub surjective: bool,
    pub witness: Option<OracleWitness>,
}

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub jet_ample: bool,
    pub configurations_checked: usize,
    pub failure: Option<OracleReport>,
}

/// Shared per-divisor state: dual cones of the maximal cones and the lattice
/// points of the section polytope.
pub struct JetAnalysis<'a> {
    divisor: &'a TCartierDivisor,
    duals: Vec<DualConeData>,
    section_points: HashSet<LatticeVector>,
}

impl<'a> JetAnalysis<'a> {
    pub fn new(divisor: &'a TCartierDivisor) -> Result<JetAnalysis<'a>> {
        divisor.require_ample()?;
        divisor.fan().require_complete()?;
        let mut duals = Vec::new();
        for i in 0..divisor.fan().n_max_cones() {
            duals.push(DualConeData::new(divisor.fan().cone(i).dual()?)?);
        }
        let section_points = divisor.polytope()?.lattice_points().into_iter().collect();
        Ok(JetAnalysis {
            divisor,
            duals,
            section_points,
        })
    }

    pub fn divisor(&self) -> &TCartierDivisor {
        self.divisor
    }

    pub fn dual_cone_data(&self, cone: usize) -> &DualConeData {
        &self.duals[cone]
    }

    /// The sufficient per-cone test: certified when
    /// L_sigma >= k + gamma(sigma-dual) for every maximal cone.
    pub fn certify(&self, k: u64) -> Result<JetCertificate> {
        let kq = Rational::from_integer(Integer::from(k));
        let mut rows = Vec::new();
        let mut certified = true;
        for i in 0..self.duals.len() {
            let l = self.divisor.min_edge_length_at_cone(i)?;
            let gamma = self.duals[i].gamma().clone();
            let slack = &l - &kq - &gamma;
            if slack.is_negative() {
                certified = false;
            }
            rows.push(CertificateRow {
                cone: i,
                min_edge_length: l,
                gamma,
                slack,
            });
        }
        Ok(JetCertificate { k, rows, certified })
    }

    pub fn max_certified_k(&self) -> Result<MaxKReport> {
        let mut per_cone = Vec::new();
        let mut min_margin: Option<Rational> = None;
        let mut min_edge: Option<Rational> = None;
        let mut gamma_x = Rational::zero();
        for i in 0..self.duals.len() {
            let l = self.divisor.min_edge_length_at_cone(i)?;
            let gamma = self.duals[i].gamma().clone();
            let margin = &l - &gamma;
            if min_margin.as_ref().is_none_or(|m| margin < *m) {
                min_margin = Some(margin.clone());
            }
            if min_edge.as_ref().is_none_or(|m| l < *m) {
                min_edge = Some(l.clone());
            }
            if gamma > gamma_x {
                gamma_x = gamma.clone();
            }
            per_cone.push((i, margin));
        }
        let min_margin = min_margin.ok_or_else(|| Error::NotComplete("no maximal cones".into()))?;
        let global_bound = min_edge.unwrap() - &gamma_x;
        let clamp = |x: &Rational| -> u64 {
            let f = rat_floor(x);
            if f.is_negative() {
                0
            } else {
                u64::try_from(&f).unwrap_or(u64::MAX)
            }
        };
        Ok(MaxKReport {
            max_k: clamp(&min_margin),
            global_max_k: clamp(&global_bound),
            global_bound,
            per_cone,
        })
    }

    fn basis(&self, cone: usize, k: u64) -> Result<Vec<LatticeVector>> {
        self.duals[cone].quotient_basis(k)
    }

    /// Exact surjectivity of the evaluation map of one configuration.
    pub fn oracle_configuration(&self, cfg: &Configuration) -> Result<OracleReport> {
        let mut bases = Vec::new();
        for &(cone, k_i) in cfg.parts() {
            if cone >= self.duals.len() {
                return Err(Error::InvalidInput(format!(
                    "cone index {cone} out of range"
                )));
            }
            bases.push(self.basis(cone, k_i)?);
        }
        Ok(self.oracle_with_bases(cfg, &bases))
    }

    fn oracle_with_bases(&self, cfg: &Configuration, bases: &[Vec<LatticeVector>]) -> OracleReport {
        let mut seen: HashMap<LatticeVector, (usize, LatticeVector)> = HashMap::new();
        for (part, basis) in cfg.parts().iter().zip(bases) {
            let u = self.divisor.local_datum(part.0);
            for e in basis {
                let section = vec_add(u, e);
                if !self.section_points.contains(&section) {
                    return OracleReport {
                        configuration: cfg.clone(),
                        surjective: false,
                        witness: Some(OracleWitness::UnreachableTarget {
                            cone: part.0,
                            exponent: e.clone(),
                        }),
                    };
                }
                if let Some((other_cone, other_exp)) = seen.get(&section) {
                    return OracleReport {
                        configuration: cfg.clone(),
                        surjective: false,
                        witness: Some(OracleWitness::CollidingPair {
                            first: (*other_cone, other_exp.clone()),
                            second: (part.0, e.clone()),
                            section,
                        }),
                    };
                }
                seen.insert(section, (part.0, e.clone()));
            }
        }
        OracleReport {
            configuration: cfg.clone(),
            surjective: true,
            witness: None,
        }
    }

    /// Ground truth for k-jet ampleness: checks every configuration of at
    /// most `max_r` distinct invariant points with multiplicities summing to
    /// k + 1, in lexicographic order (point count, cone indices,
    /// compositions). With max_r = k + 1 the reduction to invariant points
    /// makes this exact.
    pub fn oracle_jet_ample(&self, k: u64, max_r: u64) -> Result<OracleOutcome> {
        if max_r == 0 || max_r > k + 1 {
            return Err(Error::Precondition(
                "point count bound must be between 1 and k+1".into(),
            ));
        }
        let n_cones = self.duals.len();
        // All bases that any configuration will need, computed once.
        let mut bases: Vec<HashMap<u64, Vec<LatticeVector>>> = Vec::with_capacity(n_cones);
        for cone in 0..n_cones {
            let mut per_order = HashMap::new();
            for k_i in 1..=k + 1 {
                per_order.insert(k_i, self.basis(cone, k_i)?);
            }
            bases.push(per_order);
        }
        let mut checked = 0;
        let upper = (max_r as usize).min(n_cones);
        for r in 1..=upper {
            let total = k + 1;
            if (r as u64) > total {
                break;
            }
            for cones in (0..n_cones).combinations(r) {
                for split in compositions(total, r) {
                    let parts: Vec<(usize, u64)> =
                        cones.iter().cloned().zip(split.iter().cloned()).collect();
                    let cfg = Configuration::new(parts).expect("valid by construction");
                    let cfg_bases: Vec<Vec<LatticeVector>> = cfg
                        .parts()
                        .iter()
                        .map(|&(c, ki)| bases[c][&ki].clone())
                        .collect();
                    checked += 1;
                    let report = self.oracle_with_bases(&cfg, &cfg_bases);
                    if !report.surjective {
                        return Ok(OracleOutcome {
                            jet_ample: false,
                            configurations_checked: checked,
                            failure: Some(report),
                        });
                    }
                }
            }
        }
        Ok(OracleOutcome {
            jet_ample: true,
            configurations_checked: checked,
            failure: None,
        })
    }
}

/// Compositions of `total` into exactly `r` positive parts, lexicographic.
fn compositions(total: u64, r: usize) -> Vec<Vec<u64>> {
    fn rec(total: u64, r: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if r == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=total - (r as u64 - 1) {
            prefix.push(first);
            rec(total - first, r - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if (r as u64) <= total && r > 0 {
        rec(total, r, &mut Vec::new(), &mut out);
    }
    out
}

pub fn certify(divisor: &TCartierDivisor, k: u64) -> Result<JetCertificate> {
    JetAnalysis::new(divisor)?.certify(k)
}

pub fn max_certified_k(divisor: &TCartierDivisor) -> Result<MaxKReport> {
    JetAnalysis::new(divisor)?.max_certified_k()
}

pub fn oracle_jet_ample(divisor: &TCartierDivisor, k: u64, max_r: u64) -> Result<OracleOutcome> {
    JetAnalysis::new(divisor)?.oracle_jet_ample(k, max_r)
}

/// Per-hypothesis outcome of the adjoint jet-ampleness test: D + D' is
/// k-jet ample when X is not projective space, 0 >= D' >= K_X, D and D' are
/// Q-Cartier with D + D' Cartier, and D meets every invariant curve at least
/// n + k times.
#[derive(Debug, Clone)]
pub struct FujitaReport {
    pub not_projective_space: bool,
    pub range_ok: bool,
    pub cartier_ok: bool,
    pub intersections_ok: bool,
    pub min_intersection: Option<Rational>,
    pub all_pass: bool,
    pub certificate: Option<JetCertificate>,
    pub oracle_confirmed: Option<bool>,
}

pub fn fujita_check(
    fan: &Fan,
    d: &TQDivisor,
    dprime: &TQDivisor,
    k: u64,
    run_oracle: bool,
) -> Result<FujitaReport> {
    fan.require_complete()?;
    let n = fan.dim();
    let not_projective_space = !fan.is_projective_space();
    let range_ok = dprime
        .coefficients
        .iter()
        .all(|a| !a.is_positive() && *a >= -Rational::from_integer(1.into()));

    let d_data = d.q_cartier_local_data();
    let dp_data = dprime.q_cartier_local_data();
    let sum_cartier = d.add(dprime).cartier_local_data();
    let cartier_ok = d_data.is_some() && dp_data.is_some() && sum_cartier.is_some();

    let mut min_intersection: Option<Rational> = None;
    if let Some(data) = &d_data {
        for wall in fan.walls() {
            let v = wall_intersection_rational(fan, wall, data);
            if min_intersection.as_ref().is_none_or(|m| v < *m) {
                min_intersection = Some(v);
            }
        }
    }
    let need = Rational::from_integer(Integer::from(n as u64 + k));
    let intersections_ok = min_intersection.as_ref().is_some_and(|m| *m >= need);

    let all_pass = not_projective_space && range_ok && cartier_ok && intersections_ok;
    let mut certificate = None;
    let mut oracle_confirmed = None;
    if all_pass {
        let sum =
            TCartierDivisor::from_fan_local_data(fan.clone(), sum_cartier.expect("checked above"))?;
        // The sum can be nef without being ample (k = 0 boundary cases);
        // the cross-validation needs ampleness.
        if sum.is_ample() {
            let analysis = JetAnalysis::new(&sum)?;
            certificate = Some(analysis.certify(k)?);
            if run_oracle {
                oracle_confirmed = Some(analysis.oracle_jet_ample(k, k + 1)?.jet_ample);
            }
        }
    }
    Ok(FujitaReport {
        not_projective_space,
        range_ok,
        cartier_ok,
        intersections_ok,
        min_intersection,
        all_pass,
        certificate,
        oracle_confirmed,
    })
}

/// The edge-length lower bound for adjoint divisors: with t = min D.C and
/// m = min (D+D').C over the walls at one maximal cone,
/// m >= t - w_min(u') - 1 whenever D is nef, 0 >= D' >= K_X and
/// t >= w_min(u'). A correct run always returns true.
pub fn payne_bound_check(
    fan: &Fan,
    d: &TQDivisor,
    dprime: &TQDivisor,
    cone: usize,
) -> Result<bool> {
    fan.require_complete()?;
    let d_data = d
        .q_cartier_local_data()
        .ok_or_else(|| Error::Precondition("first divisor is not Q-Cartier".into()))?;
    let dp_data = dprime
        .q_cartier_local_data()
        .ok_or_else(|| Error::Precondition("second divisor is not Q-Cartier".into()))?;
    if !dprime
        .coefficients
        .iter()
        .all(|a| !a.is_positive() && *a >= -Rational::from_integer(1.into()))
    {
        return Err(Error::Precondition(
            "second divisor must lie between the canonical divisor and zero".into(),
        ));
    }
    // nefness of D: every wall intersection nonnegative
    for wall in fan.walls() {
        if wall_intersection_rational(fan, wall, &d_data).is_negative() {
            return Err(Error::Precondition("first divisor is not nef".into()));
        }
    }
    let sum_data: Vec<RationalVector> = d_data
        .iter()
        .zip(&dp_data)
        .map(|(a, b)| crate::arith::rat_vec_add(a, b))
        .collect();
    let walls = fan.walls_at(cone);
    if walls.is_empty() {
        return Err(Error::NotComplete("maximal cone has no walls".into()));
    }
    let t = walls
        .iter()
        .map(|w| wall_intersection_rational(fan, w, &d_data))
        .min()
        .unwrap();
    let m = walls
        .iter()
        .map(|w| wall_intersection_rational(fan, w, &sum_data))
        .min()
        .unwrap();
    let dual = DualConeData::new(fan.cone(cone).dual()?)?;
    let w_min = dual.w_min_rational(&dp_data[cone])?;
    if t < w_min {
        return Err(Error::Precondition(
            "minimal intersection is below the minimum weight of the local datum".into(),
        ));
    }
    Ok(m >= &t - &w_min - Rational::from_integer(1.into()))
}

/// w_max(u') <= w_max(u) for every interior lattice point u of the cone,
/// when u' is the local datum of a divisor between K_X and zero. Errors on a
/// non-interior sample; a correct run returns true.
pub fn interior_weight_check(
    dual: &DualConeData,
    u_prime: &[Rational],
    samples: &[LatticeVector],
) -> Result<bool> {
    let w_prime = dual.w_max_rational(u_prime)?;
    for s in samples {
        if !dual.cone().contains_interior(s) {
            return Err(Error::Precondition(format!(
                "sample {s:?} is not interior to the cone"
            )));
        }
        if w_prime > dual.w_max(s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, int_vec, rat};
    use crate::polytope::Polytope;

    fn polytope(points: &[&[i64]]) -> Polytope {
        Polytope::from_lattice_points(&points.iter().map(|p| int_vec(p)).collect::<Vec<_>>())
            .unwrap()
    }

    fn divisor(points: &[&[i64]]) -> TCartierDivisor {
        TCartierDivisor::from_polytope(&polytope(points)).unwrap()
    }

    fn example31(n: usize, r: i64, multiple: i64) -> TCartierDivisor {
        let mut pts: Vec<Vec<i64>> = vec![vec![0; n]];
        for i in 0..n - 1 {
            let mut e = vec![0; n];
            e[i] = 1;
            pts.push(e);
        }
        let mut a = vec![1; n];
        a[n - 1] = r;
        pts.push(a);
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        divisor(&refs).multiple(&int(multiple)).unwrap()
    }

    #[test]
    fn hyperplane_on_p2_is_certified_very_ample() {
        let d = divisor(&[&[0, 0], &[1, 0], &[0, 1]]);
        let cert = certify(&d, 1).unwrap();
        assert!(cert.certified);
        for row in &cert.rows {
            assert_eq!(row.min_edge_length, rat(1, 1));
            assert_eq!(row.gamma, rat(0, 1));
        }
    }

    #[test]
    fn example31_certificate_slack_is_minus_half() {
        let d = example31(3, 2, 1);
        let cert = certify(&d, 1).unwrap();
        assert!(!cert.certified);
        // cone 0 corresponds to the vertex 0 of the polytope
        assert_eq!(cert.rows[0].gamma, rat(1, 2));
        assert_eq!(cert.rows[0].slack, rat(-1, 2));
        // the double is certified: L = 2 >= 1 + 1/2
        let cert2 = certify(&example31(3, 2, 2), 1).unwrap();
        assert!(cert2.certified);
    }

    #[test]
    fn max_k_of_simplex_multiples() {
        for m in [1u64, 2, 5] {
            let d = divisor(&[&[0, 0], &[m as i64, 0], &[0, m as i64]]);
            let report = max_certified_k(&d).unwrap();
            assert_eq!(report.max_k, m);
            assert_eq!(report.global_max_k, m);
        }
        let e = example31(3, 2, 1);
        assert_eq!(max_certified_k(&e).unwrap().max_k, 0);
    }

    #[test]
    fn oracle_confirms_very_ampleness_of_hyperplane() {
        let d = divisor(&[&[0, 0], &[1, 0], &[0, 1]]);
        let out = oracle_jet_ample(&d, 1, 2).unwrap();
        assert!(out.jet_ample);
        // r = 1: 3 cones; r = 2: 3 pairs, one composition (1,1)
        assert_eq!(out.configurations_checked, 6);
    }

    #[test]
    fn oracle_finds_the_sharpness_witness() {
        // (k+n-3) D = k D for n = 3 fails to separate k-jets at the vertex-0
        // point, with witness exponent (k-1) e1 + a_1.
        for (r, k) in [(2i64, 1u64), (10, 1), (10, 2)] {
            let d = example31(3, r, k as i64);
            let out = oracle_jet_ample(&d, k, k + 1).unwrap();
            assert!(!out.jet_ample);
            let report = out.failure.unwrap();
            assert_eq!(report.configuration.parts(), &[(0, k + 1)]);
            let expected_witness = int_vec(&[k as i64, 1, 1]);
            match report.witness.unwrap() {
                OracleWitness::UnreachableTarget { cone, exponent } => {
                    assert_eq!(cone, 0);
                    assert_eq!(exponent, expected_witness);
                }
                other => panic!("expected unreachable target, got {other:?}"),
            }
        }
    }

    #[test]
    fn oracle_passes_on_the_next_multiple() {
        // (k+n-2) D is k-jet ample
        for k in [1u64, 2] {
            let d = example31(3, 2, (k + 1) as i64);
            assert!(certify(&d, k).unwrap().certified);
            assert!(oracle_jet_ample(&d, k, k + 1).unwrap().jet_ample);
        }
    }

    #[test]
    fn oracle_two_point_configurations_on_twisted_segment() {
        let d = divisor(&[&[0, 0], &[2, 0], &[0, 2]]);
        let analysis = JetAnalysis::new(&d).unwrap();
        let cfg = Configuration::new(vec![(0, 1), (1, 1)]).unwrap();
        let report = analysis.oracle_configuration(&cfg).unwrap();
        assert!(report.surjective);
    }

    #[test]
    fn oracle_collision_on_a_thin_polytope() {
        // P^1 x P^1 with a 1 x 2 box: global sections have 6 points; jets of
        // order 2 at two opposite vertices of the short side collide along
        // the short direction when the box is too thin.
        let d = divisor(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let analysis = JetAnalysis::new(&d).unwrap();
        // vertices 0=(0,0) and 1=(1,0) share the unit edge: asking for
        // 1-jets at both is 3 target coordinates vs 4 sections, but the
        // section (1,0) serves both vertices and collides.
        let cfg = Configuration::new(vec![(0, 2), (1, 2)]).unwrap();
        let report = analysis.oracle_configuration(&cfg).unwrap();
        assert!(!report.surjective);
        match report.witness.unwrap() {
            OracleWitness::CollidingPair { section, .. } => {
                assert_eq!(section.len(), 2);
            }
            OracleWitness::UnreachableTarget { .. } => {
                // also acceptable: order of detection depends on the scan
            }
        }
    }

    #[test]
    fn invalid_configurations_are_rejected() {
        assert!(Configuration::new(vec![]).is_err());
        assert!(Configuration::new(vec![(0, 0)]).is_err());
        assert!(Configuration::new(vec![(0, 1), (0, 2)]).is_err());
        let d = divisor(&[&[0, 0], &[1, 0], &[0, 1]]);
        let analysis = JetAnalysis::new(&d).unwrap();
        let out_of_range = Configuration::new(vec![(9, 1)]).unwrap();
        assert!(analysis.oracle_configuration(&out_of_range).is_err());
        assert!(analysis.oracle_jet_ample(1, 0).is_err());
        assert!(analysis.oracle_jet_ample(1, 3).is_err());
    }

    #[test]
    fn compositions_are_lexicographic_and_complete() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert_eq!(compositions(2, 3), Vec::<Vec<u64>>::new());
    }

    #[test]
    fn fujita_rejects_projective_space() {
        let d = divisor(&[&[0, 0], &[5, 0], &[0, 5]]);
        let q = d.ray_coefficients();
        let report = fujita_check(d.fan(), &q, &TQDivisor::zero(d.fan()), 0, false).unwrap();
        assert!(!report.not_projective_space);
        assert!(!report.all_pass);
    }

    #[test]
    fn fujita_passes_on_blowup_of_p2() {
        // simplex 3Δ with the corner at the origin cut off: normal fan has
        // rays e1, e2, -e1-e2, e1+e2, the blow-up of P^2 at a fixed point
        let p = polytope(&[&[1, 0], &[3, 0], &[0, 3], &[0, 1]]);
        let d0 = TCartierDivisor::from_polytope(&p).unwrap();
        assert!(!d0.fan().is_projective_space());
        // scale until D.C >= n + k = 2 (the short edge has length 1)
        let d = d0.multiple(&int(2)).unwrap();
        let q = d.ray_coefficients();
        let report = fujita_check(d.fan(), &q, &TQDivisor::canonical(d.fan()), 0, true).unwrap();
        assert!(report.not_projective_space);
        assert!(report.range_ok);
        assert!(report.cartier_ok);
        assert!(
            report.intersections_ok,
            "min = {:?}",
            report.min_intersection
        );
        assert!(report.all_pass);
        assert!(report.certificate.unwrap().certified);
        assert_eq!(report.oracle_confirmed, Some(true));
    }

    #[test]
    fn payne_bound_holds_with_zero_perturbation() {
        let d = divisor(&[&[0, 0], &[3, 0], &[0, 3]]);
        let q = d.ray_coefficients();
        let zero = TQDivisor::zero(d.fan());
        for cone in 0..d.fan().n_max_cones() {
            assert!(payne_bound_check(d.fan(), &q, &zero, cone).unwrap());
        }
    }

    #[test]
    fn payne_bound_holds_with_canonical_perturbation() {
        let d = divisor(&[&[0, 0], &[4, 0], &[0, 4]]);
        let q = d.ray_coefficients();
        let k_x = TQDivisor::canonical(d.fan());
        for cone in 0..d.fan().n_max_cones() {
            assert!(payne_bound_check(d.fan(), &q, &k_x, cone).unwrap());
        }
    }

    #[test]
    fn payne_bound_on_the_gorenstein_sharpness_fan() {
        // (n, r) = (3, 2) is Gorenstein: K_X is Cartier, and the adjoint
        // bound holds at every maximal cone once D is positive enough
        let d = example31(3, 2, 4);
        let q = d.ray_coefficients();
        let k_x = TQDivisor::canonical(d.fan());
        assert!(k_x.cartier_local_data().is_some());
        for cone in 0..d.fan().n_max_cones() {
            assert!(payne_bound_check(d.fan(), &q, &k_x, cone).unwrap());
        }
    }

    #[test]
    fn payne_bound_reports_failing_preconditions() {
        let d = divisor(&[&[0, 0], &[3, 0], &[0, 3]]);
        let q = d.ray_coefficients();
        // D' must lie between K_X and zero
        let too_negative = TQDivisor {
            fan: d.fan().clone(),
            coefficients: vec![rat(-2, 1); 3],
        };
        assert!(matches!(
            payne_bound_check(d.fan(), &q, &too_negative, 0),
            Err(Error::Precondition(_))
        ));
        // D must be nef
        let p = crate::polytope::Polytope::from_lattice_points(&[int_vec(&[0]), int_vec(&[1])])
            .unwrap();
        let fan = crate::fan::Fan::normal_fan(&p).unwrap();
        let antiample = TQDivisor {
            fan: fan.clone(),
            coefficients: vec![rat(-1, 1), rat(0, 1)],
        };
        assert!(matches!(
            payne_bound_check(&fan, &antiample, &TQDivisor::zero(&fan), 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sharp_divisor_min_edge_is_the_multiple() {
        // L of (k+n-3) D at the vertex-0 cone is k+n-3
        for (n, r, k) in [(3u64, 2i64, 2i64), (4, 3, 1)] {
            let m = k + n as i64 - 3;
            let d = example31(n as usize, r, m);
            assert_eq!(d.min_edge_length_at_cone(0).unwrap(), rat(m, 1));
        }
    }

    #[test]
    fn interior_weight_check_on_weighted_projective_cone() {
        // P(1,1,2): u' from K_X at the singular cone, sampled interior points
        let p = crate::families::weighted_projective(&[1, 1, 2]).unwrap();
        let d = TCartierDivisor::from_polytope(&p).unwrap();
        let k_x = TQDivisor::canonical(d.fan());
        let data = k_x.q_cartier_local_data().unwrap();
        for (cone, datum) in data.iter().enumerate() {
            let dual = DualConeData::new(d.fan().cone(cone).dual().unwrap()).unwrap();
            let mut samples = Vec::new();
            for x in crate::polytope::enumerate_box(&int_vec(&[-16, -16]), &int_vec(&[16, 16])) {
                if dual.cone().contains_interior(&x) {
                    samples.push(x);
                    if samples.len() >= 20 {
                        break;
                    }
                }
            }
            assert!(samples.len() >= 20, "not enough interior samples");
            assert!(interior_weight_check(&dual, datum, &samples).unwrap());
        }
    }

    #[test]
    fn interior_weight_check_on_singular_cone() {
        let dual = DualConeData::from_generators(&[int_vec(&[1, 0]), int_vec(&[1, 2])], 2).unwrap();
        // u' = 0 is trivially below every weight
        let zero = vec![rat(0, 1), rat(0, 1)];
        let samples = vec![int_vec(&[1, 1]), int_vec(&[2, 1]), int_vec(&[2, 3])];
        assert!(interior_weight_check(&dual, &zero, &samples).unwrap());
        // boundary point errors
        let bad = vec![int_vec(&[1, 0])];
        assert!(interior_weight_check(&dual, &zero, &bad).is_err());
    }
}
