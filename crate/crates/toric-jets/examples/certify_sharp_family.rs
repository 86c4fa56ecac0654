//! The per-cone jet-ampleness certificate on the family where it is sharp.
//!
//! For P = conv(0, e1, ..., e_{n-1}, a) with a = e1+...+e_{n-1}+r e_n, the
//! divisor (k+n-3) D fails to separate k-jets while (k+n-2) D is k-jet
//! ample. The certificate sees this through the slack L - k - gamma at the
//! vertex-0 cone.
//!
//! Run with: cargo run --example certify_sharp_family

use toric_jets::arith::format_rational;
use toric_jets::families;
use toric_jets::jets::JetAnalysis;

fn main() -> Result<(), toric_jets::Error> {
    let (n, r) = (3u64, 2u64);
    for k in 1..=2u64 {
        let example = families::example_3_1(n, r, k)?;
        println!(
            "n = {n}, r = {r}, k = {k}: sharp divisor is {} D",
            example.sharp_multiple
        );
        for (label, divisor) in [
            ("(k+n-3) D", &example.sharp_divisor),
            (
                "(k+n-2) D",
                &example
                    .divisor
                    .multiple(&(example.sharp_multiple.clone() + 1u32))?,
            ),
        ] {
            let analysis = JetAnalysis::new(divisor)?;
            let cert = analysis.certify(k)?;
            println!(
                "  {label}: {}",
                if cert.certified {
                    "CERTIFIED"
                } else {
                    "not certified"
                }
            );
            for row in &cert.rows {
                println!(
                    "    cone {}: L = {}, gamma = {}, slack = {}",
                    row.cone,
                    format_rational(&row.min_edge_length),
                    format_rational(&row.gamma),
                    format_rational(&row.slack)
                );
            }
        }
        println!();
    }

    // the largest certified k, per-cone and via the global constant
    let example = families::example_3_1(3, 2, 1)?;
    for m in 1..=4u32 {
        let divisor = example.divisor.multiple(&m.into())?;
        let report = JetAnalysis::new(&divisor)?.max_certified_k()?;
        println!(
            "m = {m}: max certified k = {} (global bound {} -> {})",
            report.max_k,
            format_rational(&report.global_bound),
            report.global_max_k
        );
    }
    Ok(())
}
