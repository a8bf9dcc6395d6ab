//! Extensions of centerless `h` as pullbacks of `der(h) → out(h)`.

use superext::extensions::pullback_extension;
use superext::gvs::{int, GradedLinearMap, Matrix, Parity, SuperVectorSpace};
use superext::superlie::{catalog, SuperLieAlgebra};

fn aff2() -> SuperLieAlgebra {
    let space = SuperVectorSpace::from_pairs([("X", Parity::Even), ("Y1", Parity::Even), ("Y2", Parity::Even)])
        .expect("distinct names");
    SuperLieAlgebra::builder("aff2", space)
        .bracket("X", "Y1", [("Y1", int(1))])
        .and_then(|b| b.bracket("X", "Y2", [("Y2", int(1))]))
        .and_then(|b| b.build())
        .expect("aff2 brackets")
}

fn main() {
    let h = aff2();
    let g = catalog::abelian_dims(1, 0);
    let out = h.out_quotient().expect("valid algebra").out;
    let mut m = Matrix::zeros(out.dim(), 1);
    m.set(0, 0, int(1));
    let alpha_bar = GradedLinearMap::new(g.space().clone(), out.space().clone(), Parity::Even, m).expect("degree 0");
    let ext = pullback_extension(&h, &g, &alpha_bar).expect("aff2 is centerless");
    println!("{}: dim {}, Jacobi {}", ext.e().name(), ext.e().dim(), ext.e().validate().passed());

    let sl2 = catalog::sl2();
    let none = GradedLinearMap::zero(g.space().clone(), SuperVectorSpace::zero_space(), Parity::Even);
    let direct = pullback_extension(&sl2, &g, &none).expect("sl2 is centerless");
    let normalized = direct.normalized().expect("valid");
    let sum = sl2.direct_sum(&g, "sum");
    let n = sum.dim();
    let same = (0..n).all(|i| (0..n).all(|j| normalized.bracket_basis(i, j) == sum.bracket_basis(i, j)));
    println!("{}: matches sl2 ⊕ g: {same}", direct.e().name());
}
