//! Truncated generating series: reading Bell polynomials off S, the
//! exponential form of Z in Sym2, and the a = b remark.

use bellhopf::bell::{bell, gf_s, z_on_one, BellQuery};
use bellhopf::hopf::AlgebraId;
use bellhopf::render::{element_text, report_text};
use bellhopf::series::Truncation;
use bellhopf::verify::{verify_ab_remark, verify_cor2, Cor2Form};

fn main() {
    let caps = Truncation::new(4, 2, 3);
    let s = gf_s(AlgebraId::NCSF2, caps);
    println!("S has {} nonzero coefficients up to {:?}", s.len(), caps.as_array());
    let b = s.extract_normalized(2, 2, 1, false).unwrap();
    println!("x^2/2! y^2/2! t: {}", element_text(&b));
    assert_eq!(b, bell(BellQuery::new(AlgebraId::NCSF2, 2, 2, 1)));

    let z = z_on_one(AlgebraId::Sym2, Truncation::new(4, 0, 4)).unwrap();
    for (e, c) in z.iter() {
        println!("1·Z at x^{} t^{}: {}", e[0], e[2], element_text(c));
    }
    print!("{}", report_text(&verify_cor2(Truncation::new(6, 0, 6), Cor2Form::Corrected).unwrap(), 3));
    print!("{}", report_text(&verify_cor2(Truncation::new(6, 0, 6), Cor2Form::Literal).unwrap(), 3));
    print!("{}", report_text(&verify_ab_remark(AlgebraId::NCSF2, Truncation::new(4, 2, 2)), 3));
}
