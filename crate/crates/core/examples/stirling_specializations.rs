//! Specializing Sym2 Bell polynomials to numbers: Stirling numbers of both
//! kinds, Bell numbers, and the binomial rescaling identity.

use bellhopf::bell::{bell, BellQuery};
use bellhopf::hopf::AlgebraId;
use bellhopf::render::report_text;
use bellhopf::scalar::{factorial_q, int, Rational};
use bellhopf::verify::{stirling_specializations, verify_binomial_identity};

fn main() {
    let ones = vec![int(1); 8];
    let factorials: Vec<Rational> = (0..8).map(factorial_q).collect();
    for n in 1..=6 {
        let second: Vec<String> = (1..=n)
            .map(|k| bell(BellQuery::new(AlgebraId::Sym2, 0, n, k)).specialize_sym2(&ones, &ones).unwrap().to_string())
            .collect();
        let first: Vec<String> = (1..=n)
            .map(|k| {
                bell(BellQuery::new(AlgebraId::Sym2, 0, n, k)).specialize_sym2(&ones, &factorials).unwrap().to_string()
            })
            .collect();
        println!("n={n}  second kind {:<24} first kind {}", second.join(" "), first.join(" "));
    }
    print!("{}", report_text(&stirling_specializations(8), 5));
    print!("{}", report_text(&verify_binomial_identity(3, 5, 4), 5));
}
