//! The obstruction class of `ᾱ` and the extensions it admits.

use superext::cochains::DEFAULT_ARITY_CAP;
use superext::cohomology::classify_extensions;
use superext::extensions::build_extension;
use superext::gvs::{GradedLinearMap, Parity};
use superext::superlie::{catalog, SuperLieAlgebra};

fn zero(h: &SuperLieAlgebra, g: &SuperLieAlgebra) -> GradedLinearMap {
    let out = h.out_quotient().expect("valid algebra").out;
    GradedLinearMap::zero(g.space().clone(), out.space().clone(), Parity::Even)
}

fn main() {
    let cases = [
        (catalog::abelian_dims(1, 0), catalog::abelian_dims(2, 0)),
        (catalog::abelian_dims(1, 0), catalog::abelian_dims(0, 1)),
        (catalog::heis3(), catalog::abelian_dims(1, 0)),
        (catalog::sl2(), catalog::susy_line()),
    ];
    for (h, g) in cases {
        let c = classify_extensions(&h, &g, &zero(&h, &g), DEFAULT_ARITY_CAP).expect("ᾱ = 0 is a homomorphism");
        println!(
            "h = {}, g = {}: obstructed {}, H^2 generators {}",
            h.name(),
            g.name(),
            c.obstructed(),
            c.generators.len()
        );
        for d in c.base.iter().chain(&c.generators) {
            let e = build_extension(d).expect("emitted data are valid");
            println!("  extension of dim {} with center of dim {}", e.e().dim(), e.e().center().len());
        }
    }
}
