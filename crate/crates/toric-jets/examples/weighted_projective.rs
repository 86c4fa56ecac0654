//! Jet ampleness on weighted projective spaces.
//!
//! The generator polytope of P(a_0, ..., a_n) is the simplex with vertices
//! (l/a_i) e_i in the hyperplane lattice, l = lcm(a); the edge between
//! vertices i and j has lattice length l / lcm(a_i, a_j). With pairwise
//! coprime plane weights this certifies k-jet ampleness up to min(a, b, c).
//!
//! Run with: cargo run --example weighted_projective

use toric_jets::arith::format_rational;
use toric_jets::divisor::TCartierDivisor;
use toric_jets::families;
use toric_jets::jets;

fn main() -> Result<(), toric_jets::Error> {
    for weights in [
        vec![1u64, 1, 1],
        vec![1, 1, 2],
        vec![2, 3, 5],
        vec![3, 4, 5],
        vec![1, 2, 3, 5],
    ] {
        let polytope = families::weighted_projective(&weights)?;
        let lengths: Vec<String> = families::edge_lengths(&polytope)
            .iter()
            .map(format_rational)
            .collect();
        let divisor = TCartierDivisor::from_polytope(&polytope)?;
        let max_k = jets::max_certified_k(&divisor)?;
        println!(
            "P{weights:?}: edge lengths {{{}}}, max certified k = {}",
            lengths.join(", "),
            max_k.max_k
        );
        // spot-check the certificate against the exact oracle at the
        // certified order (surfaces only; higher dimensions take longer)
        if weights.len() == 3 && max_k.max_k <= 3 {
            let oracle = jets::oracle_jet_ample(&divisor, max_k.max_k, max_k.max_k + 1)?;
            println!(
                "  oracle at k = {}: {}",
                max_k.max_k,
                if oracle.jet_ample {
                    "confirmed"
                } else {
                    "REFUTED"
                }
            );
        }
    }
    Ok(())
}
