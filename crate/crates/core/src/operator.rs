//! Words in the derivation `D` and right multiplication `B` by `b_1`.
//!
//! A word acts on the right: in `DB` the `D` is applied first. Products of
//! operators follow the same convention, so `(xy)` means "x, then y".

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hopf::{basis_keys, AlgebraElement, AlgebraId, BasisKey};
use crate::linear::LinearCombination;
use crate::partition::{BicoloredComposition, BicoloredPartition, Part};
use crate::scalar::{factorial, from_biguint, int, multinomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    D,
    B,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorWord(pub Vec<Letter>);

impl OperatorWord {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::D => "D",
                Letter::B => "B",
            })?;
        }
        Ok(())
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'D' => Ok(Letter::D),
                'B' => Ok(Letter::B),
                _ => Err(Error::BadWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(OperatorWord)
    }
}

/// A rational combination of operator words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OperatorPoly {
    terms: LinearCombination<OperatorWord>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::word(OperatorWord::default())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(OperatorWord(vec![l]))
    }

    pub fn d() -> Self {
        Self::letter(Letter::D)
    }

    pub fn b() -> Self {
        Self::letter(Letter::B)
    }

    pub fn word(w: OperatorWord) -> Self {
        Self { terms: LinearCombination::single(w, Rational::one()) }
    }

    pub fn from_terms(terms: LinearCombination<OperatorWord>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &LinearCombination<OperatorWord> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, w: &OperatorWord) -> Rational {
        self.terms.coeff(w)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { terms: &self.terms + &other.terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { terms: &self.terms - &other.terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { terms: self.terms.scale(c) }
    }

    /// Concatenation product: `self` acts first.
    pub fn mul(&self, other: &Self) -> Self {
        let terms = self.terms.bilinear(&other.terms, |u, v| {
            let mut w = u.0.clone();
            w.extend_from_slice(&v.0);
            LinearCombination::single(OperatorWord(w), Rational::one())
        });
        Self { terms }
    }

    pub fn pow(&self, m: u32) -> Self {
        (0..m).fold(Self::identity(), |acc, _| acc.mul(self))
    }
}

/// `[x, y] = xy - yx`.
pub fn ad(x: &OperatorPoly, y: &OperatorPoly) -> OperatorPoly {
    x.mul(y).sub(&y.mul(x))
}

/// The derivation `D` on a single element.
pub fn apply_d(e: &AlgebraElement) -> AlgebraElement {
    let terms = e.terms().flat_map(d_on_key);
    AlgebraElement::from_terms(e.algebra(), terms).expect("D preserves the algebra")
}

fn bump_each(parts: &[Part]) -> impl Iterator<Item = Vec<Part>> + '_ {
    (0..parts.len()).map(move |i| {
        let mut v = parts.to_vec();
        v[i].0 += 1;
        v
    })
}

fn d_on_key(key: &BasisKey) -> LinearCombination<BasisKey> {
    let one = Rational::one;
    match key {
        BasisKey::Sym(p) => bump_each(p.parts()).map(|v| (BasisKey::Sym(BicoloredPartition::new(v)), one())).collect(),
        BasisKey::Ncsf(c) => {
            bump_each(c.parts()).map(|v| (BasisKey::Ncsf(BicoloredComposition::new(v)), one())).collect()
        }
        BasisKey::Word(w) => (0..w.length()).map(|j| (BasisKey::Word(w.insert_into(j)), one())).collect(),
    }
}

fn apply_letter(l: Letter, e: &AlgebraElement) -> AlgebraElement {
    match l {
        Letter::D => apply_d(e),
        Letter::B => e * &AlgebraElement::b(e.algebra(), 1),
    }
}

pub fn apply_word(w: &OperatorWord, e: &AlgebraElement) -> AlgebraElement {
    w.0.iter().fold(e.clone(), |acc, &l| apply_letter(l, &acc))
}

/// Applies a polynomial, sharing work between words with a common prefix.
pub fn apply_poly(p: &OperatorPoly, e: &AlgebraElement) -> AlgebraElement {
    let terms: Vec<(&[Letter], &Rational)> = p.terms.iter().map(|(w, c)| (w.0.as_slice(), c)).collect();
    apply_suffixes(&terms, e)
}

fn apply_suffixes(terms: &[(&[Letter], &Rational)], e: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(e.algebra());
    if e.is_zero() || terms.is_empty() {
        return out;
    }
    for (w, c) in terms {
        if w.is_empty() {
            out.add_scaled(c, e);
        }
    }
    for l in [Letter::D, Letter::B] {
        let rest: Vec<(&[Letter], &Rational)> =
            terms.iter().filter(|(w, _)| w.first() == Some(&l)).map(|(w, c)| (&w[1..], *c)).collect();
        if !rest.is_empty() {
            let next = apply_letter(l, e);
            out.add_scaled(&Rational::one(), &apply_suffixes(&rest, &next));
        }
    }
    out
}

/// `c_{n,k} = (-1)^{n+1}/n · 1/(k!(n-k-1)!) · ad_D^{n-k-1} ad_B^k D`.
pub fn c_nk(n: u32, k: u32) -> Result<OperatorPoly> {
    if n < 2 || k >= n {
        return Err(Error::OutOfRange(format!("c_nk needs n >= 2 and k < n, got n={n}, k={k}")));
    }
    let (b, d) = (OperatorPoly::b(), OperatorPoly::d());
    let mut x = d.clone();
    for _ in 0..k {
        x = ad(&b, &x);
    }
    for _ in 0..n - k - 1 {
        x = ad(&d, &x);
    }
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let denom = factorial(k) * factorial(n - k - 1) * n;
    Ok(x.scale(&(int(sign) / from_biguint(denom))))
}

/// Closed form of `c_{n,k}·1` in NCSF² as a sum of nested brackets of
/// color-2 generators:
///
/// `(-1)^k / (n·k!·(n-k-1)!) · Σ multinomial · [b_{i_1},[b_{i_2},…,[b_{i_{k-1}}, b_{i_k}]…]]`
///
/// over `i_1..i_{k-1} ≥ 1`, `i_k ≥ 2` with `Σ i = n`, weighted by the
/// multinomial `(n-k-1; i_1-1, …, i_{k-1}-1, i_k-2)`.
pub fn c_nk_closed_ncsf(n: u32, k: u32) -> Result<AlgebraElement> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::OutOfRange(format!("closed form needs n >= 2 and 1 <= k < n, got n={n}, k={k}")));
    }
    let alg = AlgebraId::NCSF2;
    let m = n - k - 1;
    let mut sum = AlgebraElement::zero(alg);
    for excess in weak_compositions(m, k as usize) {
        let mut idx: Vec<u32> = excess.iter().map(|j| j + 1).collect();
        *idx.last_mut().unwrap() += 1;
        let mut bracket = AlgebraElement::b(alg, idx[k as usize - 1]);
        for &i in idx[..k as usize - 1].iter().rev() {
            let bi = AlgebraElement::b(alg, i);
            bracket = &(&bi * &bracket) - &(&bracket * &bi);
        }
        sum.add_scaled(&from_biguint(multinomial(&excess)), &bracket);
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let denom = factorial(k) * factorial(m) * n;
    Ok(sum.scale(&(int(sign) / from_biguint(denom))))
}

fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// If `p` acts as left multiplication by some `c` on every key of weight
/// `<= weight_bound`, returns `c = p·1`.
pub fn as_multiplication(alg: AlgebraId, p: &OperatorPoly, weight_bound: u32) -> Option<AlgebraElement> {
    let c = apply_poly(p, &AlgebraElement::one(alg));
    let ok = basis_keys(alg, weight_bound).par_iter().all(|k| {
        let e = AlgebraElement::from_key(k.clone());
        apply_poly(p, &e) == &e * &c
    });
    ok.then_some(c)
}

/// Whether `p` acts as zero on every key of weight `<= weight_bound`.
pub fn annihilates(alg: AlgebraId, p: &OperatorPoly, weight_bound: u32) -> bool {
    basis_keys(alg, weight_bound)
        .par_iter()
        .all(|k| apply_poly(p, &AlgebraElement::from_key(k.clone())).is_zero())
}

/// Keeps only the words where `B` occurs exactly `k` times.
pub fn b_degree_part(p: &OperatorPoly, k: usize) -> OperatorPoly {
    let mut terms = p.terms.clone();
    terms.retain(|w| w.count(Letter::B) == k);
    OperatorPoly { terms }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::poly_text(self))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyTerm {
    #[serde(with = "crate::scalar::as_string")]
    coeff: Rational,
    word: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<PolyTerm>,
}

impl Serialize for OperatorPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(w, c)| PolyTerm { coeff: c.clone(), word: w.to_string() }).collect();
        PolyJson { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OperatorPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = LinearCombination::zero();
        for t in raw.terms {
            let w: OperatorWord = t.word.parse().map_err(serde::de::Error::custom)?;
            terms.add_term(w, t.coeff);
        }
        Ok(Self { terms })
    }
}

/// Whether every word has exactly `k` letters `B`.
pub fn is_b_homogeneous(p: &OperatorPoly, k: usize) -> bool {
    p.terms.keys().all(|w| w.count(Letter::B) == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        &(x * y) - &(y * x)
    }

    #[test]
    fn d_is_a_derivation_on_generators() {
        for alg in AlgebraId::ALL {
            assert_eq!(apply_d(&AlgebraElement::a(alg, 2)), AlgebraElement::a(alg, 3));
            assert_eq!(apply_d(&AlgebraElement::b(alg, 1)), AlgebraElement::b(alg, 2));
            assert!(apply_d(&AlgebraElement::one(alg)).is_zero());
        }
        let alg = AlgebraId::NCSF2;
        let (a1, b1) = (AlgebraElement::a(alg, 1), AlgebraElement::b(alg, 1));
        let lhs = apply_d(&(&a1 * &b1));
        let rhs = &(&AlgebraElement::a(alg, 2) * &b1) + &(&a1 * &AlgebraElement::b(alg, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_order() {
        let alg = AlgebraId::Sym2;
        let one = AlgebraElement::one(alg);
        assert_eq!(apply_word(&"BD".parse().unwrap(), &one), AlgebraElement::b(alg, 2));
        assert_eq!(apply_word(&"DB".parse().unwrap(), &one), AlgebraElement::zero(alg));
        assert_eq!(apply_word(&"BB".parse().unwrap(), &one), AlgebraElement::b(alg, 1).pow(2));
    }

    #[test]
    fn poly_application_matches_word_by_word() {
        let p = ad(&OperatorPoly::d(), &ad(&OperatorPoly::b(), &OperatorPoly::d())).add(&OperatorPoly::identity());
        let e = &AlgebraElement::a(AlgebraId::NCSF2, 1) * &AlgebraElement::b(AlgebraId::NCSF2, 2);
        let mut expected = AlgebraElement::zero(AlgebraId::NCSF2);
        for (w, c) in p.terms() {
            expected = &expected + &apply_word(w, &e).scale(c);
        }
        assert_eq!(apply_poly(&p, &e), expected);
    }

    #[test]
    fn small_cnk_values() {
        for alg in AlgebraId::ALL {
            let one = AlgebraElement::one(alg);
            let c21 = apply_poly(&c_nk(2, 1).unwrap(), &one);
            assert_eq!(c21, AlgebraElement::b(alg, 2).scale(&rat(-1, 2)));
            for n in 2..=5 {
                assert!(annihilates(alg, &c_nk(n, 0).unwrap(), 3));
            }
        }
        for alg in [AlgebraId::Sym2, AlgebraId::NCSF2] {
            let c32 = apply_poly(&c_nk(3, 2).unwrap(), &AlgebraElement::one(alg));
            let expected = bracket(&AlgebraElement::b(alg, 1), &AlgebraElement::b(alg, 2)).scale(&rat(1, 6));
            assert_eq!(c32, expected);
        }
        assert!(c_nk(1, 0).is_err());
        assert!(c_nk(3, 3).is_err());
    }

    #[test]
    fn cnk_is_multiplication() {
        for n in 2..=5 {
            for k in 1..n {
                let p = c_nk(n, k).unwrap();
                assert!(is_b_homogeneous(&p, k as usize));
                let c = as_multiplication(AlgebraId::NCSF2, &p, 3).expect("acts as multiplication");
                assert!(c.in_r());
                assert!(c.is_bihomogeneous(n, k as usize));
            }
        }
    }

    #[test]
    fn derivation_is_not_multiplication() {
        assert!(as_multiplication(AlgebraId::Sym2, &OperatorPoly::d(), 2).is_none());
        assert_eq!(as_multiplication(AlgebraId::Sym2, &OperatorPoly::b(), 3), Some(AlgebraElement::b(AlgebraId::Sym2, 1)));
    }

    #[test]
    fn closed_form_matches_ad_route() {
        let one = AlgebraElement::one(AlgebraId::NCSF2);
        for n in 2..=6 {
            for k in 1..n {
                assert_eq!(c_nk_closed_ncsf(n, k).unwrap(), apply_poly(&c_nk(n, k).unwrap(), &one), "({n},{k})");
            }
        }
        assert!(c_nk_closed_ncsf(4, 0).is_err());
    }

    #[test]
    fn five_two_value() {
        let alg = AlgebraId::NCSF2;
        let exact = apply_poly(&c_nk(5, 2).unwrap(), &AlgebraElement::one(alg));
        let b = |i| AlgebraElement::b(alg, i);
        let expected = &bracket(&b(1), &b(4)) + &bracket(&b(2), &b(3));
        assert_eq!(exact, expected.scale(&rat(1, 20)));
    }

    #[test]
    fn word_parsing() {
        assert_eq!("DBD".parse::<OperatorWord>().unwrap().to_string(), "DBD");
        assert_eq!("".parse::<OperatorWord>().unwrap(), OperatorWord::default());
        assert_eq!("DX".parse::<OperatorWord>(), Err(Error::BadWord("DX".into())));
    }

    #[test]
    fn wsym_derivation_inserts_new_maximum() {
        let alg = AlgebraId::WSym2;
        let e = &AlgebraElement::a(alg, 1) * &AlgebraElement::b(alg, 1);
        let out = apply_d(&e);
        assert_eq!(out.len(), 2);
        assert_eq!(out.xi_big().unwrap(), apply_d(&e.xi_big().unwrap()));
    }
}
