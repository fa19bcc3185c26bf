//! JSON forms of partitions, elements, operators, series and reports.

use bellhopf::bell::{bell, gf_s_circ, BellQuery};
use bellhopf::hopf::{AlgebraElement, AlgebraId};
use bellhopf::operator::{c_nk, OperatorPoly};
use bellhopf::partition::{generate_s, BicoloredSetPartition};
use bellhopf::series::{TruncatedSeries, Truncation};
use bellhopf::verify::{verify_routes, VerificationReport};

fn main() -> bellhopf::Result<()> {
    let parts = generate_s(1, 2, 1);
    let json = serde_json::to_string(&parts)?;
    println!("{json}");
    assert_eq!(serde_json::from_str::<Vec<BicoloredSetPartition>>(&json)?, parts);

    let b = bell(BellQuery::new(AlgebraId::WSym2, 2, 2, 1));
    let json = serde_json::to_string(&b)?;
    println!("{json}");
    assert_eq!(serde_json::from_str::<AlgebraElement>(&json)?, b);

    let p = c_nk(3, 2)?;
    let json = serde_json::to_string(&p)?;
    println!("{json}");
    assert_eq!(serde_json::from_str::<OperatorPoly>(&json)?, p);

    let s = gf_s_circ(AlgebraId::Sym2, Truncation::new(2, 0, 2));
    let json = serde_json::to_string(&s)?;
    println!("{json}");
    assert_eq!(TruncatedSeries::from_json(&json, AlgebraElement::one(AlgebraId::Sym2))?, s);

    let report = verify_routes(3);
    let json = serde_json::to_string(&report)?;
    println!("{json}");
    assert_eq!(serde_json::from_str::<VerificationReport>(&json)?, report);
    Ok(())
}
