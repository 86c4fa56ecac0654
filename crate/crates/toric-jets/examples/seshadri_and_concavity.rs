//! Intersection numbers, edge lengths, higher concavity and Seshadri
//! constants of ample toric divisors — four quantities with the same
//! minimum.
//!
//! Run with: cargo run --example seshadri_and_concavity

use toric_jets::arith::{format_rational, int, int_vec};
use toric_jets::divisor::TCartierDivisor;
use toric_jets::families;
use toric_jets::polytope::Polytope;

fn inspect(name: &str, divisor: &TCartierDivisor) -> Result<(), toric_jets::Error> {
    println!("{name}:");
    let report = divisor.edge_report()?;
    for row in &report.rows {
        println!(
            "  wall {} between cones {:?}: edge {:?} -- {:?}, length {}, intersection {}",
            row.wall,
            row.cones,
            row.endpoints.0,
            row.endpoints.1,
            format_rational(&row.lattice_length),
            format_rational(&row.intersection_number)
        );
    }
    for cone in 0..divisor.fan().n_max_cones() {
        println!(
            "  fixed point of cone {cone}: seshadri = {}",
            divisor.seshadri_at_fixed_point(cone)?
        );
    }
    println!(
        "  global seshadri = {}, max concavity = {}",
        divisor.seshadri_global()?,
        format_rational(&divisor.max_concavity()?)
    );
    Ok(())
}

fn main() -> Result<(), toric_jets::Error> {
    let rectangle = families::cube(&[int(3), int(2)])?;
    inspect(
        "3 x 2 rectangle (P1 x P1)",
        &TCartierDivisor::from_polytope(&rectangle)?,
    )?;

    let trapezoid = families::hirzebruch(1, &int(3), &int(1))?;
    inspect(
        "\ntrapezoid on F_1",
        &TCartierDivisor::from_polytope(&trapezoid)?,
    )?;

    // a singular example: all edges have unit length although the variety
    // has a non-smooth fixed point
    let p = Polytope::from_lattice_points(&[
        int_vec(&[0, 0, 0]),
        int_vec(&[1, 0, 0]),
        int_vec(&[0, 1, 0]),
        int_vec(&[1, 1, 2]),
    ])?;
    inspect("\nsingular simplex", &TCartierDivisor::from_polytope(&p)?)?;
    Ok(())
}
