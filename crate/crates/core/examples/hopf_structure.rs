//! Products, coproducts and antipodes in the three algebras, and the shape
//! maps from word functions down to the other two.

use bellhopf::hopf::{AlgebraElement, AlgebraId};

fn main() {
    for alg in AlgebraId::ALL {
        let (a1, b1, b2) = (AlgebraElement::a(alg, 1), AlgebraElement::b(alg, 1), AlgebraElement::b(alg, 2));
        let x = &a1 * &b1;
        let commutator = &(&b1 * &b2) - &(&b2 * &b1);
        println!("{alg}");
        println!("  a1*b1          = {x}");
        println!("  [b1, b2]       = {commutator}");
        println!("  [b1, b2] primitive: {}", commutator.is_primitive());
        println!("  Δ(a1*b1) has {} terms", x.coproduct().terms().len());
        println!("  S(a1*b1)       = {}", x.antipode());
        println!("  S(S(a1*b1))    = {}", x.antipode().antipode());
    }

    let w = &AlgebraElement::a(AlgebraId::WSym2, 2) * &AlgebraElement::b(AlgebraId::WSym2, 1);
    println!("shape maps on {w}:");
    println!("  Ξ -> {}", w.xi_big().unwrap());
    println!("  ξ -> {}", w.xi_small().unwrap());
}
