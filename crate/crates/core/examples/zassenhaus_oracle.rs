//! Solves for the Zassenhaus factors of exp(x(tB + D)) in the free algebra
//! and compares each t-coefficient with c(n,k).

use bellhopf::hopf::{AlgebraElement, AlgebraId};
use bellhopf::operator::{apply_poly, c_nk};
use bellhopf::render::{element_text, poly_text};
use bellhopf::zassenhaus::zassenhaus_oracle;

fn main() {
    let oracle = zassenhaus_oracle(5).unwrap();
    println!("Z_2 = {}", poly_text(&oracle[0].t_coeff(1)));
    for z in &oracle {
        for k in 1..z.n {
            let same = z.t_coeff(k) == c_nk(z.n, k).unwrap();
            println!("n={} k={k}: {} words, equals c(n,k) as a word polynomial: {same}", z.n, z.t_coeff(k).terms().len());
        }
    }

    for alg in [AlgebraId::Sym2, AlgebraId::NCSF2] {
        let one = AlgebraElement::one(alg);
        let z = apply_poly(&oracle[3].t_coeff(2), &one);
        let c = apply_poly(&c_nk(5, 2).unwrap(), &one);
        println!("{alg}: Z_5[t^2]·1 = {}", element_text(&z));
        println!("{alg}: c(5,2)·1   = {}", element_text(&c));
    }
}
