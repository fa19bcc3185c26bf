//! Checks the factorization of the Bell generating series through the
//! c(n,k) operators, coefficient by coefficient.

use bellhopf::hopf::AlgebraId;
use bellhopf::render::report_text;
use bellhopf::series::Truncation;
use bellhopf::verify::{verify_theorem1, verify_theorem1_circ};

fn main() {
    let nx = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for alg in AlgebraId::ALL {
        let report = verify_theorem1(alg, Truncation::new(nx, 2, 4)).unwrap();
        print!("{}", report_text(&report, 3));
        let report = verify_theorem1_circ(alg, nx, 4).unwrap();
        print!("{}", report_text(&report, 3));
    }
}
