//! The exact evaluation-map oracle at invariant point configurations.
//!
//! A configuration assigns multiplicities k_i to distinct fixed points with
//! sum k+1. In monomial bases the evaluation matrix has one standard basis
//! vector (or zero) per target coordinate, so surjectivity is decided by two
//! set conditions; a failure comes with a replayable witness. Checking every
//! configuration is exact ground truth for k-jet ampleness.
//!
//! Run with: cargo run --example evaluation_oracle

use toric_jets::families;
use toric_jets::jets::{Configuration, JetAnalysis, OracleWitness};

fn main() -> Result<(), toric_jets::Error> {
    // D itself is 1-jet ample on this singular threefold only after doubling.
    let example = families::example_3_1(3, 10, 1)?;
    let d = &example.divisor;

    let analysis = JetAnalysis::new(d)?;
    println!("single point, second-order jets (k = 1, one point):");
    let cfg = Configuration::new(vec![(0, 2)])?;
    let report = analysis.oracle_configuration(&cfg)?;
    println!("  surjective: {}", report.surjective);
    if let Some(OracleWitness::UnreachableTarget { cone, exponent }) = &report.witness {
        println!("  witness: target (cone {cone}, exponent {exponent:?}) has no section");
    }

    println!("\nfull sweep over all configurations:");
    for k in 0..=1u64 {
        let outcome = analysis.oracle_jet_ample(k, k + 1)?;
        println!(
            "  k = {k}: {} after {} configurations",
            if outcome.jet_ample {
                "jet ample"
            } else {
                "NOT jet ample"
            },
            outcome.configurations_checked
        );
        if let Some(failure) = outcome.failure {
            println!(
                "    first failure at {:?} with witness {:?}",
                failure.configuration.parts(),
                failure.witness
            );
        }
    }

    let doubled = d.multiple(&2u32.into())?;
    let outcome = JetAnalysis::new(&doubled)?.oracle_jet_ample(1, 2)?;
    println!(
        "\n2D sweep: k = 1 -> {} ({} configurations)",
        if outcome.jet_ample {
            "jet ample"
        } else {
            "NOT jet ample"
        },
        outcome.configurations_checked
    );
    Ok(())
}
