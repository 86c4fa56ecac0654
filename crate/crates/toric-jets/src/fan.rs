//! Complete fans: maximal cones, walls (shared facets) and the normal fan of
//! a lattice polytope.

use crate::arith::{dot, Integer, LatticeVector};
use crate::cone::Cone;
use crate::lattice::{multiplicity, primitive};
use crate::polytope::Polytope;
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A codimension-one cone shared by two maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    /// Indices of the two maximal cones; for normal fans these equal the
    /// indices of the two vertices of the corresponding polytope edge.
    pub cones: (usize, usize),
    /// Indices into the fan's ray list spanning the shared facet.
    pub rays: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Fan {
    dim: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Vec<usize>>,
    cones: Vec<Cone>,
    walls: Vec<Wall>,
    complete: bool,
}

impl Fan {
    /// The normal fan of a full-dimensional lattice polytope, under the
    /// minimum convention: the maximal cone at vertex u consists of the
    /// directions v minimized over P at u. Maximal cone i corresponds to
    /// vertex i, and the rays are the primitive facet normals.
    pub fn normal_fan(p: &Polytope) -> Result<Fan> {
        if !p.is_lattice() {
            return Err(Error::InvalidInput(
                "normal fans are only built for lattice polytopes".into(),
            ));
        }
        if p.dim() == 0 {
            return Err(Error::NotFullDimensional);
        }
        let dim = p.dim();
        let rays: Vec<LatticeVector> = p
            .facets()
            .iter()
            .map(|f| primitive(&f.normal))
            .collect::<Result<_>>()?;
        let mut max_cones = Vec::new();
        let mut cones = Vec::new();
        for v in 0..p.vertices().len() {
            let idx: Vec<usize> = p.vertex_facets(v).iter().cloned().collect();
            let gens: Vec<LatticeVector> = idx.iter().map(|&i| rays[i].clone()).collect();
            let cone = Cone::from_generators(&gens, dim)?;
            if !cone.is_full_dimensional() {
                return Err(Error::NotFullDimensional);
            }
            max_cones.push(idx);
            cones.push(cone);
        }
        let mut walls = Vec::new();
        for edge in p.faces(1.min(dim)) {
            if edge.dim != 1 {
                continue;
            }
            let (a, b) = (edge.vertices[0], edge.vertices[1]);
            let shared: Vec<usize> = p
                .vertex_facets(a)
                .intersection(p.vertex_facets(b))
                .cloned()
                .collect();
            walls.push(Wall {
                cones: (a, b),
                rays: shared,
            });
        }
        Ok(Fan {
            dim,
            rays,
            max_cones,
            cones,
            walls,
            complete: true,
        })
    }

    /// Builds a fan from explicit rays and maximal cones (ray index sets).
    /// Every maximal cone must be pointed and full-dimensional, and every
    /// listed ray must be an extreme ray of its cones. Completeness is
    /// decided by facet pairing: each facet of each maximal cone must be
    /// shared with exactly one other maximal cone.
    pub fn from_rays_and_cones(
        rays: Vec<LatticeVector>,
        max_cones: Vec<Vec<usize>>,
        dim: usize,
    ) -> Result<Fan> {
        let mut prim_rays = Vec::new();
        for r in &rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "ray of length {} in dimension {dim}",
                    r.len()
                )));
            }
            let p = primitive(r)?;
            if prim_rays.contains(&p) {
                return Err(Error::InvalidInput("duplicate ray".into()));
            }
            prim_rays.push(p);
        }
        let mut cones = Vec::new();
        for idx in &max_cones {
            for &i in idx {
                if i >= prim_rays.len() {
                    return Err(Error::InvalidInput(format!("ray index {i} out of range")));
                }
            }
            let gens: Vec<LatticeVector> = idx.iter().map(|&i| prim_rays[i].clone()).collect();
            let cone = Cone::from_generators(&gens, dim)?;
            if !cone.is_full_dimensional() {
                return Err(Error::NotFullDimensional);
            }
            if cone.rays().len() != idx.len() {
                return Err(Error::InvalidInput(
                    "listed ray is not an extreme ray of its cone".into(),
                ));
            }
            cones.push(cone);
        }
        // Pair up facets of maximal cones by their tight ray sets.
        let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, cone) in cones.iter().enumerate() {
            for n in cone.facet_normals() {
                let mut tight: Vec<usize> = max_cones[ci]
                    .iter()
                    .cloned()
                    .filter(|&ri| dot(n, &prim_rays[ri]).is_zero())
                    .collect();
                tight.sort_unstable();
                groups.entry(tight).or_default().push(ci);
            }
        }
        let mut walls = Vec::new();
        let mut complete = true;
        for (tight, members) in groups {
            match members.as_slice() {
                [a, b] if a != b => walls.push(Wall {
                    cones: (*a, *b),
                    rays: tight,
                }),
                [_] => complete = false,
                _ => {
                    return Err(Error::InvalidInput(
                        "maximal cones do not intersect in common facets".into(),
                    ))
                }
            }
        }
        Ok(Fan {
            dim,
            rays: prim_rays,
            max_cones,
            cones,
            walls,
            complete,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn cone(&self, i: usize) -> &Cone {
        &self.cones[i]
    }

    pub fn n_max_cones(&self) -> usize {
        self.cones.len()
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::NotComplete(
                "a wall is not shared by two cones".into(),
            ))
        }
    }

    /// Index of the maximal cone containing `v`, if any.
    pub fn cone_containing(&self, v: &[Integer]) -> Option<usize> {
        (0..self.cones.len()).find(|&i| self.cones[i].contains(v))
    }

    /// The chosen primitive generator of a ray of the second wall cone that
    /// is not in the first: the first listed such ray.
    pub fn wall_outer_ray(&self, wall: &Wall) -> usize {
        *self.max_cones[wall.cones.1]
            .iter()
            .find(|ri| !wall.rays.contains(ri))
            .expect("a maximal cone has a ray outside each of its facets")
    }

    /// mult(tau) for the wall cone tau.
    pub fn wall_multiplicity(&self, wall: &Wall) -> Integer {
        let gens: Vec<LatticeVector> = wall.rays.iter().map(|&i| self.rays[i].clone()).collect();
        multiplicity(&gens)
    }

    /// mult(tau, v0) for the wall extended by the chosen outer ray.
    pub fn wall_extended_multiplicity(&self, wall: &Wall) -> Integer {
        let mut gens: Vec<LatticeVector> =
            wall.rays.iter().map(|&i| self.rays[i].clone()).collect();
        gens.push(self.rays[self.wall_outer_ray(wall)].clone());
        multiplicity(&gens)
    }

    /// The fan of projective space has n+1 rays and only smooth cones; any
    /// complete fan with n+1 rays is a (possibly fake) weighted projective
    /// space, and smoothness then pins it down.
    pub fn is_projective_space(&self) -> bool {
        self.complete
            && self.rays.len() == self.dim + 1
            && self.cones.iter().all(|c| c.multiplicity().is_one())
    }

    /// Walls incident to a maximal cone.
    pub fn walls_at(&self, cone_index: usize) -> Vec<&Wall> {
        self.walls
            .iter()
            .filter(|w| w.cones.0 == cone_index || w.cones.1 == cone_index)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int_vec;

    fn polytope(points: &[&[i64]]) -> Polytope {
        Polytope::from_lattice_points(&points.iter().map(|p| int_vec(p)).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn normal_fan_of_unit_square_is_four_quadrants() {
        let fan = Fan::normal_fan(&polytope(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(fan.rays().len(), 4);
        assert_eq!(fan.n_max_cones(), 4);
        assert_eq!(fan.walls().len(), 4);
        assert!(fan.is_complete());
        for i in 0..4 {
            assert!(fan.cone(i).is_smooth());
        }
    }

    #[test]
    fn normal_fan_of_simplex_is_projective_plane() {
        let fan = Fan::normal_fan(&polytope(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let mut rays = fan.rays().to_vec();
        rays.sort();
        assert_eq!(
            rays,
            vec![int_vec(&[-1, -1]), int_vec(&[0, 1]), int_vec(&[1, 0])]
        );
        assert!(fan.is_projective_space());
    }

    #[test]
    fn sharpness_family_vertex_cone_is_dual_of_its_polytope_cone() {
        // conv(0, e1, e2, (1,1,2)): the dual of the maximal cone at vertex 0
        // must be cone(e1, e2, (1,1,2)).
        let p = polytope(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        let fan = Fan::normal_fan(&p).unwrap();
        let dual = fan.cone(0).dual().unwrap();
        let mut rays = dual.rays().to_vec();
        rays.sort();
        let mut expect = p.cone_at_vertex(0).unwrap().rays().to_vec();
        expect.sort();
        assert_eq!(rays, expect);
        assert_eq!(
            rays,
            vec![
                int_vec(&[0, 1, 0]),
                int_vec(&[1, 0, 0]),
                int_vec(&[1, 1, 2])
            ]
        );
    }

    #[test]
    fn fan_from_explicit_cones() {
        // projective plane
        let fan = Fan::from_rays_and_cones(
            vec![int_vec(&[1, 0]), int_vec(&[0, 1]), int_vec(&[-1, -1])],
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
            2,
        )
        .unwrap();
        assert!(fan.is_complete());
        assert_eq!(fan.walls().len(), 3);
        assert!(fan.is_projective_space());
    }

    #[test]
    fn incomplete_fan_is_detected() {
        let fan = Fan::from_rays_and_cones(
            vec![int_vec(&[1, 0]), int_vec(&[0, 1])],
            vec![vec![0, 1]],
            2,
        )
        .unwrap();
        assert!(!fan.is_complete());
        assert!(fan.require_complete().is_err());
    }

    #[test]
    fn weighted_projective_fan_is_not_projective_space() {
        // P(1,1,2): complete with three rays but a singular cone
        let fan = Fan::from_rays_and_cones(
            vec![int_vec(&[0, 1]), int_vec(&[1, 0]), int_vec(&[-1, -2])],
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
            2,
        )
        .unwrap();
        assert!(fan.is_complete());
        assert!(!fan.is_projective_space());
    }

    #[test]
    fn rational_polytopes_have_no_normal_fan() {
        use crate::arith::rat;
        let p = Polytope::from_points(&[
            vec![rat(0, 1), rat(0, 1)],
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1)],
        ])
        .unwrap();
        assert!(!p.is_lattice());
        assert!(Fan::normal_fan(&p).is_err());
    }

    #[test]
    fn projective_line_fan() {
        let fan = Fan::normal_fan(&polytope(&[&[0], &[1]])).unwrap();
        assert_eq!(fan.n_max_cones(), 2);
        assert_eq!(fan.walls().len(), 1);
        let wall = &fan.walls()[0];
        assert!(wall.rays.is_empty());
        assert!(fan.is_projective_space());
    }
}
