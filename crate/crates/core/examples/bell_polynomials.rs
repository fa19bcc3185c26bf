//! r-Bell polynomials by both routes, in every algebra and output style.

use bellhopf::bell::{bell, bell_enum, bell_tilde, BellQuery};
use bellhopf::hopf::AlgebraId;
use bellhopf::render::{element_generators, element_latex, Style};

fn main() {
    for alg in AlgebraId::ALL {
        let q = BellQuery::new(alg, 2, 2, 1);
        let b = bell(q);
        assert_eq!(b, bell_enum(q));
        println!("{alg} B(r=2, n=2, k=1), bidegree {:?}:", q.bidegree());
        println!("  {b}");
        println!("  {}", element_latex(&b));
    }

    let q = BellQuery::new(AlgebraId::NCSF2, 2, 3, 2);
    println!("NCSF2 B(2, 3, 2) = {}", element_generators(&bell(q), Style::Text));
    for (n, k) in [(1, 2), (0, 1), (0, 0)] {
        let t = bell_tilde(BellQuery::new(AlgebraId::NCSF2, 2, n, k));
        println!("NCSF2 B~(2, {n}, {k}) = {}", element_generators(&t, Style::Text));
    }

    println!("classical partial Bell polynomials in Sym2:");
    for n in 1..=5 {
        for k in 1..=n {
            let b = bell(BellQuery::new(AlgebraId::Sym2, 0, n, k));
            println!("  B({n},{k}) = {}", element_generators(&b, Style::Text));
        }
    }
}
