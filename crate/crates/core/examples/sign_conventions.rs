//! The multigraded sign, shuffles and the wedge of scalar cochains.

use superext::cochains::{multigraded_sign, shuffles, wedge, Cochain, ParityWord};
use superext::gvs::{format_scalar, int, Parity, SuperVectorSpace};

fn main() {
    let word = ParityWord(vec![Parity::Odd, Parity::Odd, Parity::Even]);
    for sigma in [[1, 0, 2], [0, 2, 1], [2, 0, 1]] {
        println!("s({sigma:?}, odd odd even) = {}", multigraded_sign(&sigma, &word).expect("permutation"));
    }
    println!("(2,1)-shuffles: {:?}", shuffles(2, 1));

    let g = SuperVectorSpace::from_pairs([("Q", Parity::Odd)]).expect("one name");
    let line = SuperVectorSpace::trivial_line();
    let mut q = Cochain::zero(g.clone(), line, 1, Parity::Odd);
    q.set(&[0], vec![int(1)]).expect("odd value on an odd argument");
    let qq = wedge(&q, &q).expect("scalar cochains");
    let value = qq.evaluate(&[0, 0]).expect("arity 2");
    println!("(Q* ∧ Q*)(Q, Q) = {}", format_scalar(&value[0]));
}
