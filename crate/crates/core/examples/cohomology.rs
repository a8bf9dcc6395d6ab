//! Chevalley cohomology with trivial coefficients, split by weight.

use superext::cochains::DEFAULT_ARITY_CAP;
use superext::cohomology::{cohomology_space, GModule};
use superext::gvs::SuperVectorSpace;
use superext::superlie::catalog;

fn main() {
    let algebras = [
        (catalog::abelian_dims(0, 1), 6),
        (catalog::abelian_dims(2, 0), 2),
        (catalog::sl2(), 3),
        (catalog::susy_line(), 3),
    ];
    for (g, top) in algebras {
        let line = GModule::trivial(g.clone(), SuperVectorSpace::trivial_line());
        let dims: Vec<String> = (0..=top)
            .map(|n| {
                let (d0, d1) = cohomology_space(&line, n, DEFAULT_ARITY_CAP)
                    .expect("within the cap")
                    .dims();
                format!("H^{n} = ({d0}|{d1})")
            })
            .collect();
        println!("{}: {}", g.name(), dims.join(", "));
    }
}
