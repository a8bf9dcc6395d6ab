//! Small named extensions used by the examples and tests.

use crate::gvs::{unit_vector, Scalar};
use crate::superlie::{catalog, SuperLieAlgebra};

use super::ExtensionTriple;

fn units(n: usize, indices: &[usize]) -> Vec<Vec<Scalar>> {
    indices.iter().map(|&i| unit_vector(n, i)).collect()
}

fn by_ideal(e: SuperLieAlgebra, indices: &[usize]) -> ExtensionTriple {
    let ideal = units(e.dim(), indices);
    ExtensionTriple::from_ideal(&e, &ideal).expect("corpus ideals are ideals")
}

/// `span(H) → susy line → A(0|1)`.
pub fn susy_over_line() -> ExtensionTriple {
    by_ideal(catalog::susy_line(), &[0])
}

/// `span(Z) → heis3 → A(2|0)`.
pub fn heis_over_plane() -> ExtensionTriple {
    by_ideal(catalog::heis3(), &[2])
}

/// `span(H, Q1, Q2) → extended susy line → span(R)`.
pub fn extended_susy_over_rotation() -> ExtensionTriple {
    by_ideal(catalog::extended_susy_line(), &[1, 2, 3])
}

/// `span(H) → extended susy line → e/span(H)`.
pub fn extended_susy_over_center() -> ExtensionTriple {
    by_ideal(catalog::extended_susy_line(), &[1])
}

/// `span(C, ψ+, ψ-) → gl(1|1) → span(N)`.
pub fn gl11_over_number() -> ExtensionTriple {
    by_ideal(catalog::gl11(), &[1, 2, 3])
}

/// `sl2 → sl2 ⊕ susy line → susy line`.
pub fn sl2_times_susy() -> ExtensionTriple {
    let e = catalog::sl2().direct_sum(&catalog::susy_line(), "sl2+susy");
    by_ideal(e, &[0, 1, 2])
}

/// `susy line → susy ⊕ susy → susy line`.
pub fn susy_square() -> ExtensionTriple {
    let e = catalog::susy_line().direct_sum(&catalog::susy_line(), "susy+susy");
    by_ideal(e, &[0, 1])
}

/// `osp(1|2) → osp(1|2) → 0`.
pub fn osp_over_zero() -> ExtensionTriple {
    by_ideal(catalog::osp12(), &[0, 1, 2, 3, 4])
}

/// `0 → osp(1|2) → osp(1|2)`.
pub fn zero_under_osp() -> ExtensionTriple {
    by_ideal(catalog::osp12(), &[])
}

pub fn all() -> Vec<(&'static str, ExtensionTriple)> {
    vec![
        ("susy_over_line", susy_over_line()),
        ("heis_over_plane", heis_over_plane()),
        ("extended_susy_over_rotation", extended_susy_over_rotation()),
        ("extended_susy_over_center", extended_susy_over_center()),
        ("gl11_over_number", gl11_over_number()),
        ("sl2_times_susy", sl2_times_susy()),
        ("susy_square", susy_square()),
        ("osp_over_zero", osp_over_zero()),
        ("zero_under_osp", zero_under_osp()),
    ]
}
