use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bellhopf::hopf::{AlgebraElement, AlgebraId};
use bellhopf::series::{TruncatedSeries, Truncation};
use bellhopf::verify::random_element;
use bellhopf::Error;

const CAPS: Truncation = Truncation { nx: 3, ny: 2, nt: 2 };

fn series(alg: AlgebraId, seed: u64, constant: bool) -> TruncatedSeries<AlgebraElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = TruncatedSeries::zero(CAPS, AlgebraElement::one(alg));
    for e in CAPS.exponents().collect::<Vec<_>>() {
        if (e == [0, 0, 0] && !constant) || rand::Rng::gen_bool(&mut rng, 0.6) {
            continue;
        }
        s.add_at(e, random_element(&mut rng, alg, 2, 2));
    }
    s
}

fn algebra() -> impl Strategy<Value = AlgebraId> {
    prop::sample::select(AlgebraId::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn product_is_associative(alg in algebra(), s in any::<[u64; 3]>()) {
        let (a, b, c) = (series(alg, s[0], true), series(alg, s[1], true), series(alg, s[2], true));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&TruncatedSeries::one(CAPS, AlgebraElement::one(alg))).unwrap(), a);
    }

    #[test]
    fn truncation_commutes_with_products(alg in algebra(), s in any::<[u64; 2]>(), nx in 0u32..=3, ny in 0u32..=2, nt in 0u32..=2) {
        let (a, b) = (series(alg, s[0], true), series(alg, s[1], true));
        let small = Truncation::new(nx, ny, nt);
        let lhs = a.mul(&b).unwrap().restrict(small);
        let rhs = a.restrict(small).mul(&b.restrict(small)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.restrict(small).iter().all(|(e, _)| small.contains(*e)));
    }

    #[test]
    fn exponential_of_commuting_sum(s in any::<[u64; 2]>()) {
        let (a, b) = (series(AlgebraId::Sym2, s[0], false), series(AlgebraId::Sym2, s[1], false));
        let lhs = a.add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exponential_of_a_negative_is_an_inverse(alg in algebra(), s in any::<u64>()) {
        let a = series(alg, s, false);
        let minus = a.scale(&bellhopf::scalar::int(-1));
        let one = TruncatedSeries::one(CAPS, AlgebraElement::one(alg));
        prop_assert_eq!(a.exp().unwrap().mul(&minus.exp().unwrap()).unwrap(), one);
    }

    #[test]
    fn json_round_trip(alg in algebra(), s in any::<u64>()) {
        let a = series(alg, s, true);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(TruncatedSeries::from_json(&json, AlgebraElement::one(alg)).unwrap(), a);
    }
}

#[test]
fn exp_needs_zero_constant_term() {
    let one = TruncatedSeries::one(CAPS, AlgebraElement::one(AlgebraId::Sym2));
    assert!(matches!(one.exp(), Err(Error::NonzeroConstantTerm)));
}

#[test]
fn mismatched_caps_are_rejected() {
    let unit = AlgebraElement::one(AlgebraId::Sym2);
    let a = TruncatedSeries::one(CAPS, unit.clone());
    let b = TruncatedSeries::one(Truncation::new(2, 2, 2), unit);
    assert!(matches!(a.mul(&b), Err(Error::TruncationMismatch { .. })));
    assert!(a.add(&b).is_err());
}

#[test]
fn out_of_range_json_is_rejected() {
    let json = r#"{"caps":[1,0,0],"coeffs":[{"exp":[2,0,0],"value":{"algebra":"Sym2","terms":[]}}]}"#;
    assert!(TruncatedSeries::from_json(json, AlgebraElement::one(AlgebraId::Sym2)).is_err());
}

#[test]
fn substitutions_move_exponents() {
    let unit = AlgebraElement::one(AlgebraId::Sym2);
    let caps = Truncation::new(3, 2, 2);
    let mut s = TruncatedSeries::zero(caps, unit.clone());
    s.add_at([1, 1, 1], unit.clone());
    assert_eq!(s.substitute_t_by_xt().iter().map(|(e, _)| *e).collect::<Vec<_>>(), [[2, 1, 1]]);
    assert_eq!(s.substitute_y_by_xt().iter().map(|(e, _)| *e).collect::<Vec<_>>(), [[2, 0, 2]]);
    let shifted = s.substitute_y_by_y_plus_t(caps);
    assert_eq!(shifted.iter().map(|(e, _)| *e).collect::<Vec<_>>(), [[1, 0, 2], [1, 1, 1]]);
}
