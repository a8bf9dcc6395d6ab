//! Graded derivations, the center and `out(h)` for a few algebras.

use superext::superlie::catalog;

fn main() {
    for h in [catalog::heis3(), catalog::susy_line(), catalog::gl11(), catalog::sl2()] {
        let der = h.derivations();
        let out = h.out_quotient().expect("out of a valid algebra");
        println!(
            "{}: center dim {}, der dim {} (inner {}), out dim {}",
            h.name(),
            h.center().len(),
            der.dim(),
            der.inner_count(),
            out.out.dim()
        );
        for k in 0..out.out.dim() {
            let rep = out.representative(k);
            println!("  {} <- derivation of degree {:?}", out.out.space().name(k), rep.degree());
        }
    }
}
