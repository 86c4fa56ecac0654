//! Wire formats of the `toricjet` command line: the JSON input document
//! (polytope, fan + divisor data, cone), the report document with exact
//! rationals rendered as `p/q`, and plain-text tables.
//!
//! No floating point ever appears on the wire; scalars are serialized as
//! bare integers when integral and as `p/q` strings otherwise.

use crate::arith::{format_rational, parse_rational, Integer, LatticeVector, Rational};
use crate::cone::Cone;
use crate::divisor::{TCartierDivisor, TQDivisor};
use crate::fan::Fan;
use crate::jets::{JetCertificate, MaxKReport, OracleOutcome, OracleWitness};
use crate::polytope::Polytope;
use crate::{Error, Result};
use num_traits::One;
use serde::de::Visitor;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational scalar on the wire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub Rational);

impl From<Rational> for Scalar {
    fn from(x: Rational) -> Scalar {
        Scalar(x)
    }
}

impl From<&Integer> for Scalar {
    fn from(x: &Integer) -> Scalar {
        Scalar(Rational::from_integer(x.clone()))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.denom().is_one() {
            if let Ok(v) = i64::try_from(self.0.numer()) {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Scalar;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "an integer or a 'p/q' string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
                Ok(Scalar(Rational::from_integer(Integer::from(v))))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
                Ok(Scalar(Rational::from_integer(Integer::from(v))))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
                parse_rational(v)
                    .map(Scalar)
                    .ok_or_else(|| E::custom(format!("not an exact rational: {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

pub fn scalar_vec(v: &[Integer]) -> Vec<Scalar> {
    v.iter().map(Scalar::from).collect()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Default)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polytope: Option<PolytopeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor: Option<DivisorDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dprime: Option<CoefficientsDoc>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    pub generators: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    pub rays: Vec<Vec<Scalar>>,
    pub maximal_cones: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DivisorDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_data: Option<Vec<Vec<Scalar>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CoefficientsDoc {
    pub coefficients: Vec<Scalar>,
}

fn integral(v: &[Scalar]) -> Result<LatticeVector> {
    v.iter()
        .map(|s| {
            if s.0.denom().is_one() {
                Ok(s.0.numer().clone())
            } else {
                Err(Error::InvalidInput(format!(
                    "expected an integer, found {}",
                    format_rational(&s.0)
                )))
            }
        })
        .collect()
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad JSON input: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn for_polytope(p: &Polytope) -> InputDocument {
        InputDocument {
            polytope: Some(PolytopeDoc {
                dim: p.dim(),
                vertices: p
                    .vertices()
                    .iter()
                    .map(|v| v.iter().map(|c| Scalar(c.clone())).collect())
                    .collect(),
            }),
            ..Default::default()
        }
    }

    pub fn build_polytope(&self) -> Result<Polytope> {
        let doc = self
            .polytope
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("input has no polytope".into()))?;
        let vertices: Vec<Vec<Rational>> = doc
            .vertices
            .iter()
            .map(|v| {
                if v.len() != doc.dim {
                    return Err(Error::DimensionMismatch(format!(
                        "vertex of length {} declared dim {}",
                        v.len(),
                        doc.dim
                    )));
                }
                Ok(v.iter().map(|s| s.0.clone()).collect())
            })
            .collect::<Result<_>>()?;
        Polytope::from_points(&vertices)
    }

    pub fn build_cone(&self) -> Result<Cone> {
        let doc = self
            .cone
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("input has no cone".into()))?;
        let gens: Vec<LatticeVector> = doc
            .generators
            .iter()
            .map(|g| integral(g))
            .collect::<Result<_>>()?;
        let dim = gens
            .first()
            .map(|g| g.len())
            .ok_or_else(|| Error::InvalidInput("cone has no generators".into()))?;
        Cone::from_generators(&gens, dim)
    }

    pub fn build_fan(&self) -> Result<Fan> {
        if let Some(p) = &self.polytope {
            let _ = p;
            return Fan::normal_fan(&self.build_polytope()?);
        }
        let doc = self
            .fan
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("input has neither polytope nor fan".into()))?;
        let rays: Vec<LatticeVector> = doc
            .rays
            .iter()
            .map(|r| integral(r))
            .collect::<Result<_>>()?;
        let dim = rays
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::InvalidInput("fan has no rays".into()))?;
        Fan::from_rays_and_cones(rays, doc.maximal_cones.clone(), dim)
    }

    /// The Cartier divisor of the document: the polytope's divisor, or the
    /// fan divisor given by local data or integral Cartier coefficients.
    pub fn build_divisor(&self) -> Result<TCartierDivisor> {
        if self.polytope.is_some() {
            return TCartierDivisor::from_polytope(&self.build_polytope()?);
        }
        let fan = self.build_fan()?;
        let doc = self
            .divisor
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("fan input needs a divisor".into()))?;
        if let Some(data) = &doc.local_data {
            let local: Vec<LatticeVector> =
                data.iter().map(|u| integral(u)).collect::<Result<_>>()?;
            return TCartierDivisor::from_fan_local_data(fan, local);
        }
        if let Some(coeffs) = &doc.coefficients {
            let q = TQDivisor {
                coefficients: coeffs.iter().map(|s| s.0.clone()).collect(),
                fan: fan.clone(),
            };
            if q.coefficients.len() != fan.rays().len() {
                return Err(Error::InvalidInput(
                    "one coefficient per ray is required".into(),
                ));
            }
            let data = q.cartier_local_data().ok_or_else(|| {
                Error::InvalidInput("coefficients are not Cartier on this fan".into())
            })?;
            return TCartierDivisor::from_fan_local_data(fan, data);
        }
        Err(Error::InvalidInput(
            "divisor needs local_data or coefficients".into(),
        ))
    }

    /// The main divisor as a Q-divisor (for the adjoint checks).
    pub fn build_q_divisor(&self, fan: &Fan) -> Result<TQDivisor> {
        if self.polytope.is_some() {
            return Ok(self.build_divisor()?.ray_coefficients());
        }
        let doc = self
            .divisor
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("fan input needs a divisor".into()))?;
        if let Some(coeffs) = &doc.coefficients {
            if coeffs.len() != fan.rays().len() {
                return Err(Error::InvalidInput(
                    "one coefficient per ray is required".into(),
                ));
            }
            return Ok(TQDivisor {
                fan: fan.clone(),
                coefficients: coeffs.iter().map(|s| s.0.clone()).collect(),
            });
        }
        Ok(self.build_divisor()?.ray_coefficients())
    }

    /// The perturbation divisor: explicit coefficients, or the canonical
    /// divisor when `default_canonical` is set.
    pub fn build_dprime(&self, fan: &Fan, default_canonical: bool) -> Result<TQDivisor> {
        match &self.dprime {
            Some(doc) => {
                if doc.coefficients.len() != fan.rays().len() {
                    return Err(Error::InvalidInput(
                        "dprime needs one coefficient per ray".into(),
                    ));
                }
                Ok(TQDivisor {
                    fan: fan.clone(),
                    coefficients: doc.coefficients.iter().map(|s| s.0.clone()).collect(),
                })
            }
            None if default_canonical => Ok(TQDivisor::canonical(fan)),
            None => Err(Error::InvalidInput(
                "no dprime in input (pass --dprime canonical to use K_X)".into(),
            )),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ReportDocument {
    pub command: String,
    pub input: InputDocument,
    pub report: ReportBody,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportBody {
    GammaQ {
        gamma: Scalar,
    },
    GammaX {
        gamma: Scalar,
        per_cone: Vec<GammaRow>,
    },
    Certify {
        k: u64,
        certified: bool,
        rows: Vec<CertifyRow>,
    },
    MaxK {
        max_k: u64,
        global_max_k: u64,
        global_bound: Scalar,
        per_cone: Vec<MaxKRow>,
    },
    Oracle {
        k: u64,
        max_r: u64,
        jet_ample: bool,
        configurations_checked: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        failure: Option<OracleFailureDoc>,
    },
    Intersections {
        rows: Vec<EdgeRowDoc>,
    },
    Seshadri {
        per_point: Vec<SeshadriRow>,
        global: Scalar,
    },
    Concavity {
        max_concavity: Scalar,
    },
    Fujita {
        k: u64,
        not_projective_space: bool,
        range_ok: bool,
        cartier_ok: bool,
        intersections_ok: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        min_intersection: Option<Scalar>,
        all_pass: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        certified: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle_confirmed: Option<bool>,
    },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GammaRow {
    pub cone: usize,
    pub gamma: Scalar,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CertifyRow {
    pub cone: usize,
    pub min_edge_length: Scalar,
    pub gamma: Scalar,
    pub slack: Scalar,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MaxKRow {
    pub cone: usize,
    pub margin: Scalar,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct OracleFailureDoc {
    pub configuration: Vec<ConfigurationPart>,
    pub witness: WitnessDoc,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ConfigurationPart {
    pub cone: usize,
    pub multiplicity: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessDoc {
    UnreachableTarget {
        cone: usize,
        exponent: Vec<Scalar>,
    },
    CollidingPair {
        first_cone: usize,
        first_exponent: Vec<Scalar>,
        second_cone: usize,
        second_exponent: Vec<Scalar>,
        section: Vec<Scalar>,
    },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct EdgeRowDoc {
    pub wall: usize,
    pub cones: (usize, usize),
    pub endpoints: (Vec<Scalar>, Vec<Scalar>),
    pub lattice_length: Scalar,
    pub intersection_number: Scalar,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SeshadriRow {
    pub cone: usize,
    pub vertex: Vec<Scalar>,
    pub seshadri: Scalar,
}

pub fn certificate_body(cert: &JetCertificate) -> ReportBody {
    ReportBody::Certify {
        k: cert.k,
        certified: cert.certified,
        rows: cert
            .rows
            .iter()
            .map(|r| CertifyRow {
                cone: r.cone,
                min_edge_length: Scalar(r.min_edge_length.clone()),
                gamma: Scalar(r.gamma.clone()),
                slack: Scalar(r.slack.clone()),
            })
            .collect(),
    }
}

pub fn max_k_body(report: &MaxKReport) -> ReportBody {
    ReportBody::MaxK {
        max_k: report.max_k,
        global_max_k: report.global_max_k,
        global_bound: Scalar(report.global_bound.clone()),
        per_cone: report
            .per_cone
            .iter()
            .map(|(c, m)| MaxKRow {
                cone: *c,
                margin: Scalar(m.clone()),
            })
            .collect(),
    }
}

pub fn oracle_body(k: u64, max_r: u64, outcome: &OracleOutcome) -> ReportBody {
    ReportBody::Oracle {
        k,
        max_r,
        jet_ample: outcome.jet_ample,
        configurations_checked: outcome.configurations_checked,
        failure: outcome.failure.as_ref().map(|f| OracleFailureDoc {
            configuration: f
                .configuration
                .parts()
                .iter()
                .map(|&(cone, multiplicity)| ConfigurationPart { cone, multiplicity })
                .collect(),
            witness: match f.witness.as_ref().expect("failures carry a witness") {
                OracleWitness::UnreachableTarget { cone, exponent } => {
                    WitnessDoc::UnreachableTarget {
                        cone: *cone,
                        exponent: scalar_vec(exponent),
                    }
                }
                OracleWitness::CollidingPair {
                    first,
                    second,
                    section,
                } => WitnessDoc::CollidingPair {
                    first_cone: first.0,
                    first_exponent: scalar_vec(&first.1),
                    second_cone: second.0,
                    second_exponent: scalar_vec(&second.1),
                    section: scalar_vec(section),
                },
            },
        }),
    }
}

pub fn render_scalar(s: &Scalar) -> String {
    format_rational(&s.0)
}

fn render_vec(v: &[Scalar]) -> String {
    let inner: Vec<String> = v.iter().map(render_scalar).collect();
    format!("({})", inner.join(", "))
}

/// Plain-text tables for terminals; the JSON document is the stable format.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    match &doc.report {
        ReportBody::GammaQ { gamma } => {
            out.push_str(&format!("gamma_Q = {}\n", render_scalar(gamma)));
        }
        ReportBody::GammaX { gamma, per_cone } => {
            out.push_str("cone  gamma\n");
            for row in per_cone {
                out.push_str(&format!("{:>4}  {}\n", row.cone, render_scalar(&row.gamma)));
            }
            out.push_str(&format!("gamma_X = {}\n", render_scalar(gamma)));
        }
        ReportBody::Certify { k, certified, rows } => {
            out.push_str("cone  L     gamma  slack\n");
            for r in rows {
                out.push_str(&format!(
                    "{:>4}  {:<5} {:<6} {}\n",
                    r.cone,
                    render_scalar(&r.min_edge_length),
                    render_scalar(&r.gamma),
                    render_scalar(&r.slack)
                ));
            }
            out.push_str(&format!(
                "k = {k}: {}\n",
                if *certified {
                    "CERTIFIED"
                } else {
                    "not certified"
                }
            ));
        }
        ReportBody::MaxK {
            max_k,
            global_max_k,
            global_bound,
            per_cone,
        } => {
            out.push_str("cone  L - gamma\n");
            for r in per_cone {
                out.push_str(&format!("{:>4}  {}\n", r.cone, render_scalar(&r.margin)));
            }
            out.push_str(&format!(
                "max certified k (per-cone) = {max_k}\nglobal bound = {} -> max certified k (global) = {global_max_k}\n",
                render_scalar(global_bound)
            ));
        }
        ReportBody::Oracle {
            k,
            jet_ample,
            configurations_checked,
            failure,
            ..
        } => {
            out.push_str(&format!(
                "oracle k = {k}: {} ({} configurations checked)\n",
                if *jet_ample {
                    "JET AMPLE"
                } else {
                    "NOT jet ample"
                },
                configurations_checked
            ));
            if let Some(f) = failure {
                let cfg: Vec<String> = f
                    .configuration
                    .iter()
                    .map(|p| format!("(cone {}, mult {})", p.cone, p.multiplicity))
                    .collect();
                out.push_str(&format!("failing configuration: {}\n", cfg.join(" ")));
                match &f.witness {
                    WitnessDoc::UnreachableTarget { cone, exponent } => {
                        out.push_str(&format!(
                            "witness: unreachable target at cone {cone}, exponent {}\n",
                            render_vec(exponent)
                        ));
                    }
                    WitnessDoc::CollidingPair {
                        first_cone,
                        first_exponent,
                        second_cone,
                        second_exponent,
                        section,
                    } => {
                        out.push_str(&format!(
                            "witness: sections collide at {}: (cone {}, {}) vs (cone {}, {})\n",
                            render_vec(section),
                            first_cone,
                            render_vec(first_exponent),
                            second_cone,
                            render_vec(second_exponent)
                        ));
                    }
                }
            }
        }
        ReportBody::Intersections { rows } => {
            out.push_str("wall  cones     length  intersection\n");
            for r in rows {
                out.push_str(&format!(
                    "{:>4}  ({}, {})  {:<6}  {}\n",
                    r.wall,
                    r.cones.0,
                    r.cones.1,
                    render_scalar(&r.lattice_length),
                    render_scalar(&r.intersection_number)
                ));
            }
        }
        ReportBody::Seshadri { per_point, global } => {
            out.push_str("cone  vertex            seshadri\n");
            for r in per_point {
                out.push_str(&format!(
                    "{:>4}  {:<16}  {}\n",
                    r.cone,
                    render_vec(&r.vertex),
                    render_scalar(&r.seshadri)
                ));
            }
            out.push_str(&format!("global = {}\n", render_scalar(global)));
        }
        ReportBody::Concavity { max_concavity } => {
            out.push_str(&format!(
                "max concavity = {}\n",
                render_scalar(max_concavity)
            ));
        }
        ReportBody::Fujita {
            k,
            not_projective_space,
            range_ok,
            cartier_ok,
            intersections_ok,
            min_intersection,
            all_pass,
            certified,
            oracle_confirmed,
        } => {
            let flag = |b: bool| if b { "pass" } else { "FAIL" };
            out.push_str(&format!(
                "H1 not projective space: {}\n",
                flag(*not_projective_space)
            ));
            out.push_str(&format!("H2 0 >= D' >= K_X:       {}\n", flag(*range_ok)));
            out.push_str(&format!("H3 Cartier conditions:   {}\n", flag(*cartier_ok)));
            match min_intersection {
                Some(m) => out.push_str(&format!(
                    "H4 D.C >= n + k:         {} (min D.C = {})\n",
                    flag(*intersections_ok),
                    render_scalar(m)
                )),
                None => out.push_str("H4 D.C >= n + k:         FAIL (not computable)\n"),
            }
            out.push_str(&format!(
                "verdict: D + D' {} {k}-jet ample\n",
                if *all_pass { "IS" } else { "not shown" }
            ));
            if let Some(c) = certified {
                out.push_str(&format!("cross-check certificate: {}\n", flag(*c)));
            }
            if let Some(o) = oracle_confirmed {
                out.push_str(&format!("cross-check oracle:      {}\n", flag(*o)));
            }
        }
    }
    out
}

/// The machine-readable error object printed on exit code 2.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ErrorDocument {
    pub error: ErrorBody,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

pub fn error_document(err: &Error) -> ErrorDocument {
    let kind = match err {
        Error::ZeroVector => "zero-vector",
        Error::DimensionMismatch(_) => "dimension-mismatch",
        Error::InvalidInput(_) => "invalid-input",
        Error::OutsideCone => "outside-cone",
        Error::NotPointed => "not-pointed",
        Error::NotFullDimensional => "not-full-dimensional",
        Error::NotAVertex(_) => "not-a-vertex",
        Error::NotAFace => "not-a-face",
        Error::NotTransverse => "not-transverse",
        Error::NotComplete(_) => "not-complete",
        Error::NotAmple(_) => "not-ample",
        Error::IncompatibleData(_) => "incompatible-data",
        Error::Precondition(_) => "precondition",
    };
    ErrorDocument {
        error: ErrorBody {
            kind: kind.into(),
            message: err.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int_vec, rat};

    #[test]
    fn scalar_round_trip() {
        let s = Scalar(rat(-7, 3));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "\"-7/3\"");
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let i = Scalar(rat(42, 1));
        assert_eq!(serde_json::to_string(&i).unwrap(), "42");
        let back: Scalar = serde_json::from_str("42").unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn polytope_document_round_trip() {
        let p =
            Polytope::from_lattice_points(&[int_vec(&[0, 0]), int_vec(&[2, 0]), int_vec(&[0, 2])])
                .unwrap();
        let doc = InputDocument::for_polytope(&p);
        let text = doc.to_json();
        let back = InputDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        let p2 = back.build_polytope().unwrap();
        assert_eq!(p2.vertices(), p.vertices());
    }

    #[test]
    fn fan_divisor_document() {
        let text = r#"{
            "fan": {"rays": [[1,0],[0,1],[-1,-1]], "maximal_cones": [[0,1],[1,2],[2,0]]},
            "divisor": {"coefficients": [0, 0, 1]}
        }"#;
        let doc = InputDocument::parse(text).unwrap();
        let d = doc.build_divisor().unwrap();
        assert!(d.is_ample());
        assert_eq!(d.seshadri_global().unwrap(), crate::arith::int(1));
    }

    #[test]
    fn rejects_fractional_ray() {
        let text = r#"{
            "fan": {"rays": [["1/2",0],[0,1],[-1,-1]], "maximal_cones": [[0,1],[1,2],[2,0]]},
            "divisor": {"coefficients": [0, 0, 1]}
        }"#;
        let doc = InputDocument::parse(text).unwrap();
        assert!(doc.build_divisor().is_err());
    }

    #[test]
    fn rejects_unknown_fields() {
        assert!(InputDocument::parse(
            r#"{"polytope": {"dim": 1, "vertices": [[0],[1]], "extra": 3}}"#
        )
        .is_err());
    }

    #[test]
    fn non_cartier_coefficients_are_refused() {
        // P(1,1,2): the generator of the class group is not Cartier
        let text = r#"{
            "fan": {"rays": [[0,1],[1,0],[-1,-2]], "maximal_cones": [[0,1],[1,2],[2,0]]},
            "divisor": {"coefficients": [0, 0, 1]}
        }"#;
        let doc = InputDocument::parse(text).unwrap();
        assert!(doc.build_divisor().is_err());
        // but 2x the generator is Cartier
        let text2 = r#"{
            "fan": {"rays": [[0,1],[1,0],[-1,-2]], "maximal_cones": [[0,1],[1,2],[2,0]]},
            "divisor": {"coefficients": [0, 0, 2]}
        }"#;
        let doc2 = InputDocument::parse(text2).unwrap();
        assert!(doc2.build_divisor().unwrap().is_ample());
    }
}
