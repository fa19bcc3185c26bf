//! The operators c(n,k) as words in D and B, the elements they multiply by,
//! and the nested-bracket closed form.

use bellhopf::hopf::{AlgebraElement, AlgebraId};
use bellhopf::operator::{apply_poly, as_multiplication, c_nk, c_nk_closed_ncsf};
use bellhopf::render::{element_generators, poly_text, Style};

fn main() {
    for (n, k) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        let p = c_nk(n, k).unwrap();
        println!("c({n},{k}) = {}", poly_text(&p));
    }

    for n in 2..=5 {
        for k in 1..n {
            let p = c_nk(n, k).unwrap();
            let value = apply_poly(&p, &AlgebraElement::one(AlgebraId::NCSF2));
            let closed = c_nk_closed_ncsf(n, k).unwrap();
            let mult = as_multiplication(AlgebraId::NCSF2, &p, 4).is_some();
            println!(
                "c({n},{k})·1 = {}   closed form agrees: {}   multiplication: {mult}",
                element_generators(&value, Style::Text),
                value == closed
            );
        }
    }

    // In word functions D inserts into blocks, so c(3,2) stops being a multiplication.
    let p = c_nk(3, 2).unwrap();
    println!("WSym2 c(3,2) multiplication: {}", as_multiplication(AlgebraId::WSym2, &p, 3).is_some());
}
