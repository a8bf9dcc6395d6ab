//! Small super Lie algebras used throughout the examples and tests.

use crate::gvs::{int, Parity, SuperVectorSpace};

use super::SuperLieAlgebra;

use Parity::{Even, Odd};

fn space(pairs: &[(&str, Parity)]) -> SuperVectorSpace {
    SuperVectorSpace::from_pairs(pairs.iter().map(|&(n, p)| (n, p))).expect("distinct names")
}

/// Abelian algebra on the given named basis.
pub fn abelian(name: &str, basis: &[(&str, Parity)]) -> SuperLieAlgebra {
    SuperLieAlgebra::abelian(name, space(basis))
}

/// Abelian `A(p|q)` with even basis `a0..` and odd basis `b0..`.
pub fn abelian_dims(even: usize, odd: usize) -> SuperLieAlgebra {
    let names: Vec<String> = (0..even)
        .map(|i| format!("a{i}"))
        .chain((0..odd).map(|i| format!("b{i}")))
        .collect();
    let parities = std::iter::repeat(Even)
        .take(even)
        .chain(std::iter::repeat(Odd).take(odd))
        .collect();
    SuperLieAlgebra::abelian(
        format!("A({even}|{odd})"),
        SuperVectorSpace::new(names, parities).expect("distinct names"),
    )
}

/// `sl2` in the basis `H, E, F`.
pub fn sl2() -> SuperLieAlgebra {
    SuperLieAlgebra::builder("sl2", space(&[("H", Even), ("E", Even), ("F", Even)]))
        .bracket("H", "E", [("E", int(2))])
        .and_then(|b| b.bracket("H", "F", [("F", int(-2))]))
        .and_then(|b| b.bracket("E", "F", [("H", int(1))]))
        .and_then(|b| b.build())
        .expect("sl2 brackets")
}

/// Three-dimensional Heisenberg algebra `[P, Q] = Z`.
pub fn heis3() -> SuperLieAlgebra {
    SuperLieAlgebra::builder("heis3", space(&[("P", Even), ("Q", Even), ("Z", Even)]))
        .bracket("P", "Q", [("Z", int(1))])
        .and_then(|b| b.build())
        .expect("heis3 brackets")
}

/// The supersymmetric line: `H` even and central, `Q` odd, `[Q, Q] = 2H`.
pub fn susy_line() -> SuperLieAlgebra {
    SuperLieAlgebra::builder("susy_line", space(&[("H", Even), ("Q", Odd)]))
        .bracket("Q", "Q", [("H", int(2))])
        .and_then(|b| b.build())
        .expect("susy line brackets")
}

/// Two odd generators squaring to a central `H`, rotated by an even `R`.
pub fn extended_susy_line() -> SuperLieAlgebra {
    SuperLieAlgebra::builder(
        "extended_susy_line",
        space(&[("R", Even), ("H", Even), ("Q1", Odd), ("Q2", Odd)]),
    )
    .bracket("Q1", "Q1", [("H", int(2))])
    .and_then(|b| b.bracket("Q2", "Q2", [("H", int(2))]))
    .and_then(|b| b.bracket("R", "Q1", [("Q2", int(1))]))
    .and_then(|b| b.bracket("R", "Q2", [("Q1", int(-1))]))
    .and_then(|b| b.build())
    .expect("extended susy line brackets")
}

/// `gl(1|1)` in the basis `N, C` (even) and `psi+, psi-` (odd), `C` central.
pub fn gl11() -> SuperLieAlgebra {
    SuperLieAlgebra::builder(
        "gl(1|1)",
        space(&[("N", Even), ("C", Even), ("psi+", Odd), ("psi-", Odd)]),
    )
    .bracket("N", "psi+", [("psi+", int(1))])
    .and_then(|b| b.bracket("N", "psi-", [("psi-", int(-1))]))
    .and_then(|b| b.bracket("psi+", "psi-", [("C", int(1))]))
    .and_then(|b| b.build())
    .expect("gl(1|1) brackets")
}

/// `osp(1|2)`: `sl2` together with an odd doublet `q+, q-`.
pub fn osp12() -> SuperLieAlgebra {
    SuperLieAlgebra::builder(
        "osp(1|2)",
        space(&[("H", Even), ("E", Even), ("F", Even), ("q+", Odd), ("q-", Odd)]),
    )
    .bracket("H", "E", [("E", int(2))])
    .and_then(|b| b.bracket("H", "F", [("F", int(-2))]))
    .and_then(|b| b.bracket("E", "F", [("H", int(1))]))
    .and_then(|b| b.bracket("H", "q+", [("q+", int(1))]))
    .and_then(|b| b.bracket("H", "q-", [("q-", int(-1))]))
    .and_then(|b| b.bracket("E", "q-", [("q+", int(-1))]))
    .and_then(|b| b.bracket("F", "q+", [("q-", int(-1))]))
    .and_then(|b| b.bracket("q+", "q+", [("E", int(2))]))
    .and_then(|b| b.bracket("q-", "q-", [("F", int(-2))]))
    .and_then(|b| b.bracket("q+", "q-", [("H", int(1))]))
    .and_then(|b| b.build())
    .expect("osp(1|2) brackets")
}

/// Every catalog algebra.
pub fn all() -> Vec<SuperLieAlgebra> {
    vec![
        abelian_dims(2, 0),
        abelian_dims(1, 1),
        abelian_dims(0, 1),
        sl2(),
        heis3(),
        susy_line(),
        extended_susy_line(),
        gl11(),
        osp12(),
    ]
}
