//! Gamma constants of cones and varieties.
//!
//! The constant of a pointed cone measures how far its semigroup is from
//! smooth: the maximum of w_max(u) - k_u over the lattice points of the
//! half-open fundamental box. It vanishes exactly on smooth cones and is
//! bounded by dim - 2.
//!
//! Run with: cargo run --example gamma_constants

use toric_jets::arith::{format_rational, int, int_vec};
use toric_jets::families;
use toric_jets::fan::Fan;
use toric_jets::semigroup::{gamma_x, DualConeData, KuMemo};

fn main() -> Result<(), toric_jets::Error> {
    // A smooth cone: the box is trivial and gamma vanishes.
    let smooth = DualConeData::from_generators(&[int_vec(&[1, 0]), int_vec(&[0, 1])], 2)?;
    println!(
        "first orthant: box = {:?}, gamma = {}",
        smooth.box_points(),
        format_rational(smooth.gamma())
    );

    // An index-two cone in dimension 2: a nontrivial box point, but the
    // dimension bound dim - 2 = 0 still forces gamma = 0.
    let index_two = DualConeData::from_generators(&[int_vec(&[1, 0]), int_vec(&[1, 2])], 2)?;
    println!(
        "cone((1,0),(1,2)): box = {:?}, gamma = {}",
        index_two.box_points(),
        format_rational(index_two.gamma())
    );

    // The singular family cone(e1, ..., e_{n-1}, e1+...+e_{n-1}+r e_n):
    // gamma = n - 2 - (n-2)/r, approaching the extremal value n - 2.
    println!("\nsingular family, gamma = n-2-(n-2)/r:");
    for (n, r) in [(3u64, 2u64), (3, 5), (4, 3), (4, 6)] {
        let example = families::example_3_1(n, r, 2)?;
        let dual = DualConeData::new(example.divisor.fan().cone(0).dual()?)?;
        let mut memo = KuMemo::default();
        let detail: Vec<String> = dual
            .box_points()
            .iter()
            .map(|u| {
                let w = dual.w_max(u).unwrap();
                let k = dual.k_u(u, &mut memo).unwrap();
                format!("{u:?}: w_max {} k {}", format_rational(&w), k)
            })
            .collect();
        println!(
            "  (n, r) = ({n}, {r}): gamma = {:>5}   [{}]",
            format_rational(dual.gamma()),
            detail.join("; ")
        );
    }

    // gamma of a variety: the maximum over the duals of the maximal cones.
    println!("\ngamma of a variety:");
    for (name, polytope) in [
        ("projective plane", families::simplex(2, &int(1))?),
        ("P1 x P1", families::cube(&[int(1), int(1)])?),
        ("P(1,1,2)", families::weighted_projective(&[1, 1, 2])?),
        (
            "sharpness family (3,2)",
            families::example_3_1(3, 2, 1)?.polytope,
        ),
    ] {
        let fan = Fan::normal_fan(&polytope)?;
        println!("  {name}: gamma_X = {}", format_rational(&gamma_x(&fan)?));
    }
    Ok(())
}
