//! Lattice and rational polytopes: facet enumeration, face lattice, lattice
//! points, vertex cones and face projections.
//!
//! The facet description is obtained by homogenizing the points to rays
//! `(p, 1)` and enumerating the extreme rays of the dual cone; a face is the
//! set of vertices incident to a collection of facets.

use crate::arith::{
    dot, rat_vec, rational_primitive_direction, Integer, LatticeVector, Rational, RationalVector,
};
use crate::cone::{rays_from_inequalities, Cone};
use crate::lattice::{apply_map_rational, lattice_length, quotient_lattice_map};
use crate::matrix::{rank, IntMatrix};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// A facet inequality `<normal, x> >= offset`, with equality on the facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: LatticeVector,
    pub offset: Integer,
}

/// A face, recorded by its (sorted) vertex index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<RationalVector>,
    facets: Vec<Facet>,
    vertex_facets: Vec<BTreeSet<usize>>,
    faces: Vec<Vec<Face>>,
    is_lattice: bool,
}

impl Polytope {
    /// Builds the polytope spanned by `points`. Non-vertex points are
    /// dropped; surviving vertices keep their input order. The input must be
    /// full-dimensional (at least d+1 affinely independent points).
    pub fn from_points(points: &[RationalVector]) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::InvalidInput("no points given".into()));
        }
        let d = points[0].len();
        let mut distinct: Vec<RationalVector> = Vec::new();
        for p in points {
            if p.len() != d {
                return Err(Error::DimensionMismatch(format!(
                    "point of length {} in dimension {d}",
                    p.len()
                )));
            }
            if !distinct.contains(p) {
                distinct.push(p.clone());
            }
        }
        if affine_rank(&distinct) != d {
            return Err(Error::NotFullDimensional);
        }
        if d == 0 {
            return Ok(Polytope::zero_dimensional());
        }

        // Homogenize to integer rows (p, 1) and enumerate the dual rays.
        let hom: Vec<LatticeVector> = distinct
            .iter()
            .map(|p| {
                let mut with_one = p.clone();
                with_one.push(Rational::one());
                rational_primitive_direction(&with_one).expect("(p, 1) is nonzero")
            })
            .collect();
        let dual_rays = rays_from_inequalities(&hom, d + 1);
        let mut facets = Vec::new();
        for ray in dual_rays {
            let (normal, last) = ray.split_at(d);
            if normal.iter().all(|x| x.is_zero()) {
                continue;
            }
            facets.push(Facet {
                normal: normal.to_vec(),
                offset: -last[0].clone(),
            });
        }

        // A point is a vertex iff its tight facet normals span Q^d.
        let mut vertices = Vec::new();
        let mut vertex_facets = Vec::new();
        for p in &distinct {
            let tight: BTreeSet<usize> = facets
                .iter()
                .enumerate()
                .filter(|(_, f)| evaluate_facet(f, p).is_zero())
                .map(|(i, _)| i)
                .collect();
            let normals: Vec<LatticeVector> =
                tight.iter().map(|&i| facets[i].normal.clone()).collect();
            let tight_rank = if normals.is_empty() {
                0
            } else {
                rank(&IntMatrix::from_rows(normals))
            };
            if tight_rank == d {
                vertices.push(p.clone());
                vertex_facets.push(tight);
            }
        }
        let is_lattice = vertices
            .iter()
            .all(|v| v.iter().all(|c| c.denom().is_one()));
        let faces = face_lattice(d, &vertices, &vertex_facets);
        Ok(Polytope {
            ambient_dim: d,
            vertices,
            facets,
            vertex_facets,
            faces,
            is_lattice,
        })
    }

    pub fn from_lattice_points(points: &[LatticeVector]) -> Result<Polytope> {
        let rational: Vec<RationalVector> = points.iter().map(|p| rat_vec(p)).collect();
        Self::from_points(&rational)
    }

    /// The zero-dimensional polytope (a single point in R^0).
    pub fn zero_dimensional() -> Polytope {
        Polytope {
            ambient_dim: 0,
            vertices: vec![Vec::new()],
            facets: Vec::new(),
            vertex_facets: vec![BTreeSet::new()],
            faces: vec![vec![Face {
                dim: 0,
                vertices: vec![0],
            }]],
            is_lattice: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_lattice(&self) -> bool {
        self.is_lattice
    }

    pub fn vertex_facets(&self, v: usize) -> &BTreeSet<usize> {
        &self.vertex_facets[v]
    }

    pub fn vertex_index(&self, p: &[Rational]) -> Option<usize> {
        self.vertices.iter().position(|v| v.as_slice() == p)
    }

    /// Faces of dimension k (0 <= k <= dim; dimension `dim` is the polytope).
    pub fn faces(&self, k: usize) -> &[Face] {
        &self.faces[k]
    }

    pub fn all_proper_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces[..self.ambient_dim].iter().flatten()
    }

    pub fn contains(&self, x: &[Integer]) -> bool {
        self.facets.iter().all(|f| dot(&f.normal, x) >= f.offset)
    }

    pub fn contains_rational(&self, x: &[Rational]) -> bool {
        self.facets
            .iter()
            .all(|f| !evaluate_facet(f, x).is_negative())
    }

    /// All lattice points, by bounding-box scan filtered through the facet
    /// inequalities. The scan varies coordinate 0 fastest.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        if self.ambient_dim == 0 {
            return vec![Vec::new()];
        }
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for j in 0..self.ambient_dim {
            let mut min = self.vertices[0][j].clone();
            let mut max = min.clone();
            for v in &self.vertices[1..] {
                if v[j] < min {
                    min = v[j].clone();
                }
                if v[j] > max {
                    max = v[j].clone();
                }
            }
            lo.push(min.ceil().to_integer());
            hi.push(max.floor().to_integer());
        }
        enumerate_box(&lo, &hi)
            .into_iter()
            .filter(|x| self.contains(x))
            .collect()
    }

    /// Edges through vertex `v`, each with the opposite endpoint.
    pub fn edges_at_vertex(&self, v: usize) -> Vec<(&Face, usize)> {
        if self.ambient_dim == 0 {
            return Vec::new();
        }
        self.faces[1]
            .iter()
            .filter(|f| f.vertices.contains(&v))
            .map(|f| {
                let other = if f.vertices[0] == v {
                    f.vertices[1]
                } else {
                    f.vertices[0]
                };
                (f, other)
            })
            .collect()
    }

    /// The cone over `P - vertex`, generated by the edge directions at the
    /// vertex. Equals the dual of the normal-fan cone there.
    pub fn cone_at_vertex(&self, v: usize) -> Result<Cone> {
        if v >= self.vertices.len() {
            return Err(Error::NotAVertex(format!("index {v}")));
        }
        let mut gens = Vec::new();
        for (_, other) in self.edges_at_vertex(v) {
            let diff: RationalVector = self.vertices[other]
                .iter()
                .zip(&self.vertices[v])
                .map(|(a, b)| a - b)
                .collect();
            gens.push(rational_primitive_direction(&diff).expect("edge endpoints are distinct"));
        }
        Cone::from_generators(&gens, self.ambient_dim)
    }

    /// Minimum lattice length of the edges through vertex `v`.
    pub fn min_edge_length_at(&self, v: usize) -> Result<Rational> {
        let edges = self.edges_at_vertex(v);
        if edges.is_empty() {
            return Err(Error::Precondition(
                "vertex has no edges (zero-dimensional polytope)".into(),
            ));
        }
        let mut best: Option<Rational> = None;
        for (_, other) in edges {
            let l = lattice_length(&self.vertices[v], &self.vertices[other])?;
            if best.as_ref().is_none_or(|b| l < *b) {
                best = Some(l);
            }
        }
        Ok(best.unwrap())
    }

    /// Projects along the span of a face: returns the projected polytope, the
    /// image of the face (a vertex of the projection) and the quotient map.
    pub fn project_along_face(&self, face: &Face) -> Result<(Polytope, RationalVector, IntMatrix)> {
        if !self.faces[face.dim].iter().any(|f| f == face) {
            return Err(Error::NotAFace);
        }
        if face.dim == self.ambient_dim {
            let map = IntMatrix::new(Vec::new(), self.ambient_dim);
            return Ok((Polytope::zero_dimensional(), Vec::new(), map));
        }
        let base = &self.vertices[face.vertices[0]];
        let mut dirs = Vec::new();
        for &vi in &face.vertices[1..] {
            let diff: RationalVector = self.vertices[vi]
                .iter()
                .zip(base)
                .map(|(a, b)| a - b)
                .collect();
            if let Some(p) = rational_primitive_direction(&diff) {
                dirs.push(p);
            }
        }
        let map = quotient_lattice_map(&dirs, self.ambient_dim);
        let images: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| apply_map_rational(&map, v))
            .collect();
        let projected = Polytope::from_points(&images)?;
        let image_of_face = apply_map_rational(&map, base);
        debug_assert!(projected.vertex_index(&image_of_face).is_some());
        Ok((projected, image_of_face, map))
    }

    /// Dilation by a positive integer factor.
    pub fn dilate(&self, m: &Integer) -> Polytope {
        let scaled: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|c| c * Rational::from_integer(m.clone()))
                    .collect()
            })
            .collect();
        Polytope::from_points(&scaled).expect("dilation preserves full dimension")
    }
}

fn evaluate_facet(f: &Facet, x: &[Rational]) -> Rational {
    crate::arith::rat_int_dot(x, &f.normal) - Rational::from_integer(f.offset.clone())
}

/// Integer points of the box [lo, hi], coordinate 0 varying fastest.
pub fn enumerate_box(lo: &[Integer], hi: &[Integer]) -> Vec<LatticeVector> {
    let d = lo.len();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = lo.to_vec();
    loop {
        out.push(cur.clone());
        let mut j = 0;
        loop {
            if j == d {
                return out;
            }
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j].clone();
            j += 1;
        }
    }
}

fn affine_rank(points: &[RationalVector]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let mut rows = Vec::new();
    for p in &points[1..] {
        let diff: RationalVector = p.iter().zip(base).map(|(a, b)| a - b).collect();
        if let Some(r) = rational_primitive_direction(&diff) {
            rows.push(r);
        }
    }
    if rows.is_empty() {
        0
    } else {
        let cols = rows[0].len();
        rank(&IntMatrix::new(rows, cols))
    }
}

/// Face lattice from vertex/facet incidence. A face is the set of vertices
/// incident to all facets in some collection; every k-face arises as the
/// closure of a (k-1)-face together with one more vertex.
fn face_lattice(
    d: usize,
    vertices: &[RationalVector],
    vertex_facets: &[BTreeSet<usize>],
) -> Vec<Vec<Face>> {
    let nv = vertices.len();
    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); d + 1];
    faces[0] = (0..nv)
        .map(|i| Face {
            dim: 0,
            vertices: vec![i],
        })
        .collect();
    let mut seen: BTreeSet<Vec<usize>> = faces[0].iter().map(|f| f.vertices.clone()).collect();
    for k in 1..d {
        let previous = faces[k - 1].clone();
        for face in &previous {
            let tight = common_facets(&face.vertices, vertex_facets);
            for v in 0..nv {
                if face.vertices.contains(&v) {
                    continue;
                }
                let joined: BTreeSet<usize> =
                    tight.intersection(&vertex_facets[v]).cloned().collect();
                let closure: Vec<usize> = (0..nv)
                    .filter(|&w| joined.is_subset(&vertex_facets[w]))
                    .collect();
                if seen.contains(&closure) {
                    continue;
                }
                let pts: Vec<RationalVector> =
                    closure.iter().map(|&w| vertices[w].clone()).collect();
                if affine_rank(&pts) == k {
                    seen.insert(closure.clone());
                    faces[k].push(Face {
                        dim: k,
                        vertices: closure,
                    });
                }
            }
        }
    }
    faces[d] = vec![Face {
        dim: d,
        vertices: (0..nv).collect(),
    }];
    faces
}

fn common_facets(vertex_set: &[usize], vertex_facets: &[BTreeSet<usize>]) -> BTreeSet<usize> {
    let mut iter = vertex_set.iter();
    let first = iter.next().expect("faces are nonempty");
    let mut acc = vertex_facets[*first].clone();
    for &v in iter {
        acc = acc.intersection(&vertex_facets[v]).cloned().collect();
    }
    acc
}
