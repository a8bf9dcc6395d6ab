//! Validates the built-in catalog and a bracket that breaks graded Jacobi.

use superext::gvs::{format_scalar, int, Parity, SuperVectorSpace};
use superext::superlie::{catalog, SuperLieAlgebra};

fn main() {
    for alg in catalog::all() {
        let report = alg.validate();
        let space = alg.space();
        println!(
            "{:<20} ({}|{})  {}",
            alg.name(),
            space.dim_even(),
            space.dim_odd(),
            if report.passed() { "ok" } else { "FAILED" }
        );
    }

    let space = SuperVectorSpace::from_pairs([("X", Parity::Even), ("Y", Parity::Even), ("Z", Parity::Even)])
        .expect("distinct names");
    let broken = SuperLieAlgebra::builder("broken", space)
        .bracket("X", "Y", [("Y", int(1))])
        .and_then(|b| b.bracket("Y", "Z", [("X", int(1))]))
        .and_then(|b| b.build())
        .expect("consistent brackets");
    let report = broken.validate();
    for v in &report.jacobi {
        let residual: Vec<String> = v.residual.iter().map(format_scalar).collect();
        println!("broken: Jacobi fails on {:?} with residual [{}]", v.indices, residual.join(", "));
    }
}
