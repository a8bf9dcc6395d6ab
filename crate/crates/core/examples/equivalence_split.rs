//! Moving a datum by `b: g → h`, and deciding splitness for abelian kernels.

use superext::extensions::{corpus, isomorphism_holds, solve_split_abelian, transform_datum};
use superext::gvs::{int, GradedLinearMap, Matrix, Parity};

fn main() {
    let heis = corpus::heis_over_plane().data().expect("section");
    let mut m = Matrix::zeros(1, 2);
    m.set(0, 0, int(3));
    m.set(0, 1, int(-1));
    let b = GradedLinearMap::new(heis.g().space().clone(), heis.h().space().clone(), Parity::Even, m)
        .expect("degree 0");
    let moved = transform_datum(&heis, &b).expect("shapes match");
    println!("heis: ρ unchanged by b: {}", moved.rho() == heis.rho());
    println!("heis: H + X ↦ H - b(X) + X is an isomorphism: {}", isomorphism_holds(&heis, &b).expect("valid"));
    println!("heis: split: {}", solve_split_abelian(&heis).expect("abelian kernel").is_some());

    let susy = corpus::susy_over_line().data().expect("section");
    println!("susy: split: {}", solve_split_abelian(&susy).expect("abelian kernel").is_some());
    let center = corpus::extended_susy_over_center().data().expect("section");
    println!("extended susy over its center: split: {}", solve_split_abelian(&center).expect("abelian kernel").is_some());
    let square = corpus::susy_square().data().expect("section");
    if let Err(e) = solve_split_abelian(&square) {
        println!("susy square: {e}");
    }
}
