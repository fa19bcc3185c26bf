//! The three bigraded Hopf algebras Sym², NCSF² and WSym².
//!
//! Elements are sparse rational combinations of basis keys:
//!
//! * Sym²: `p^λ`, indexed by bicolored partitions (free commutative on power sums),
//! * NCSF²: `Ψ^I`, indexed by bicolored compositions (free associative),
//! * WSym²: `Φ^π`, indexed by bicolored set partitions (shifted-union product).
//!
//! The color-1 generators of weight `i` are written `a_i`, the color-2 ones
//! `b_i`. All generators are primitive.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::LinearCombination;
use crate::partition::{
    all_bicolored_set_partitions, BicoloredComposition, BicoloredPartition, BicoloredSetPartition,
    Color, Part,
};
use crate::scalar::{format_rational, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlgebraId {
    Sym2,
    NCSF2,
    WSym2,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 3] = [AlgebraId::Sym2, AlgebraId::NCSF2, AlgebraId::WSym2];
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraId::Sym2 => "Sym2",
            AlgebraId::NCSF2 => "NCSF2",
            AlgebraId::WSym2 => "WSym2",
        };
        f.write_str(s)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sym2" => Ok(AlgebraId::Sym2),
            "ncsf2" => Ok(AlgebraId::NCSF2),
            "wsym2" => Ok(AlgebraId::WSym2),
            _ => Err(Error::OutOfRange(format!("unknown algebra {s:?}"))),
        }
    }
}

/// A basis element of one of the three algebras.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKey {
    Sym(BicoloredPartition),
    Ncsf(BicoloredComposition),
    Word(BicoloredSetPartition),
}

impl BasisKey {
    pub fn algebra(&self) -> AlgebraId {
        match self {
            BasisKey::Sym(_) => AlgebraId::Sym2,
            BasisKey::Ncsf(_) => AlgebraId::NCSF2,
            BasisKey::Word(_) => AlgebraId::WSym2,
        }
    }

    /// The empty key, i.e. the unit.
    pub fn unit(alg: AlgebraId) -> Self {
        match alg {
            AlgebraId::Sym2 => BasisKey::Sym(BicoloredPartition::default()),
            AlgebraId::NCSF2 => BasisKey::Ncsf(BicoloredComposition::default()),
            AlgebraId::WSym2 => BasisKey::Word(BicoloredSetPartition::empty()),
        }
    }

    /// Key of the degree-`i` generator of the given color.
    pub fn generator(alg: AlgebraId, i: u32, color: Color) -> Self {
        assert!(i >= 1, "generators start at degree 1");
        match alg {
            AlgebraId::Sym2 => BasisKey::Sym(BicoloredPartition::new(vec![(i, color)])),
            AlgebraId::NCSF2 => BasisKey::Ncsf(BicoloredComposition::new(vec![(i, color)])),
            AlgebraId::WSym2 => {
                let p = BicoloredSetPartition::canonicalize([((1..=i).collect(), color)])
                    .expect("single block covers its ground set");
                BasisKey::Word(p)
            }
        }
    }

    /// `(ω, ℓ)`.
    pub fn bigrade(&self) -> (u32, usize) {
        match self {
            BasisKey::Sym(p) => (p.weight(), p.length()),
            BasisKey::Ncsf(c) => (c.weight(), c.length()),
            BasisKey::Word(w) => (w.weight(), w.length()),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.bigrade() == (0, 0)
    }

    pub fn colors(&self) -> Vec<Color> {
        match self {
            BasisKey::Sym(p) => p.parts().iter().map(|x| x.1).collect(),
            BasisKey::Ncsf(c) => c.parts().iter().map(|x| x.1).collect(),
            BasisKey::Word(w) => w.blocks().iter().map(|b| b.color).collect(),
        }
    }

    fn recolor(&self, f: impl Fn(Color) -> Color) -> Self {
        let map = |parts: &[Part]| parts.iter().map(|&(s, c)| (s, f(c))).collect::<Vec<_>>();
        match self {
            BasisKey::Sym(p) => BasisKey::Sym(BicoloredPartition::new(map(p.parts()))),
            BasisKey::Ncsf(c) => BasisKey::Ncsf(BicoloredComposition::new(map(c.parts()))),
            BasisKey::Word(w) => BasisKey::Word(w.recolor(f)),
        }
    }

    /// All `(left, right)` splittings of the key's blocks/parts, each side standardized.
    fn splittings(&self) -> Vec<(BasisKey, BasisKey)> {
        let len = self.bigrade().1;
        assert!(len < 63, "coproduct of a key with {len} parts");
        let full = (1u64 << len) - 1;
        (0..=full)
            .map(|mask| match self {
                BasisKey::Sym(p) => {
                    let (l, r) = split_parts(p.parts(), mask);
                    (BasisKey::Sym(BicoloredPartition::new(l)), BasisKey::Sym(BicoloredPartition::new(r)))
                }
                BasisKey::Ncsf(c) => {
                    let (l, r) = split_parts(c.parts(), mask);
                    (BasisKey::Ncsf(BicoloredComposition::new(l)), BasisKey::Ncsf(BicoloredComposition::new(r)))
                }
                BasisKey::Word(w) => (
                    BasisKey::Word(w.standardized_subset(mask)),
                    BasisKey::Word(w.standardized_subset(full & !mask)),
                ),
            })
            .collect()
    }
}

fn antipode_key(key: &BasisKey) -> LinearCombination<BasisKey> {
    if key.is_unit() {
        return LinearCombination::single(key.clone(), Rational::one());
    }
    let mut out = LinearCombination::zero();
    for (left, right) in key.splittings() {
        if left == *key {
            continue;
        }
        let s = antipode_key(&left);
        for (k, c) in &s {
            out.add_term(basis_product(k, &right).expect("same algebra"), -c);
        }
    }
    out
}

fn split_parts(parts: &[Part], mask: u64) -> (Vec<Part>, Vec<Part>) {
    let mut l = Vec::new();
    let mut r = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        if mask >> i & 1 == 1 {
            l.push(p);
        } else {
            r.push(p);
        }
    }
    (l, r)
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::Sym(p) => write!(f, "p{p}"),
            BasisKey::Ncsf(c) => write!(f, "Psi{c}"),
            BasisKey::Word(w) => write!(f, "Phi{w}"),
        }
    }
}

fn check_same(a: AlgebraId, b: AlgebraId) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch { left: a, right: b })
    }
}

/// Product of two basis keys; always a single key in these bases.
pub fn basis_product(u: &BasisKey, v: &BasisKey) -> Result<BasisKey> {
    match (u, v) {
        (BasisKey::Sym(p), BasisKey::Sym(q)) => Ok(BasisKey::Sym(p.union(q))),
        (BasisKey::Ncsf(p), BasisKey::Ncsf(q)) => Ok(BasisKey::Ncsf(p.concat(q))),
        (BasisKey::Word(p), BasisKey::Word(q)) => Ok(BasisKey::Word(p.shifted_union(q))),
        _ => Err(Error::AlgebraMismatch { left: u.algebra(), right: v.algebra() }),
    }
}

/// Every basis key of weight at most `max_weight`, in canonical order.
pub fn basis_keys(alg: AlgebraId, max_weight: u32) -> Vec<BasisKey> {
    let mut out = BTreeSet::new();
    for n in 0..=max_weight {
        match alg {
            AlgebraId::Sym2 => {
                out.extend(colored_compositions(n).into_iter().map(|c| BasisKey::Sym(BicoloredPartition::new(c))))
            }
            AlgebraId::NCSF2 => {
                out.extend(colored_compositions(n).into_iter().map(|c| BasisKey::Ncsf(BicoloredComposition::new(c))))
            }
            AlgebraId::WSym2 => out.extend(all_bicolored_set_partitions(n).into_iter().map(BasisKey::Word)),
        }
    }
    out.into_iter().collect()
}

fn colored_compositions(n: u32) -> Vec<Vec<Part>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in colored_compositions(n - first) {
            for color in Color::BOTH {
                let mut c = Vec::with_capacity(rest.len() + 1);
                c.push((first, color));
                c.extend_from_slice(&rest);
                out.push(c);
            }
        }
    }
    out
}

/// A rational combination of basis keys of a single algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    algebra: AlgebraId,
    terms: LinearCombination<BasisKey>,
}

impl AlgebraElement {
    pub fn zero(alg: AlgebraId) -> Self {
        Self { algebra: alg, terms: LinearCombination::zero() }
    }

    pub fn one(alg: AlgebraId) -> Self {
        Self::from_key(BasisKey::unit(alg))
    }

    pub fn from_key(key: BasisKey) -> Self {
        Self { algebra: key.algebra(), terms: LinearCombination::single(key, Rational::one()) }
    }

    pub fn from_terms(alg: AlgebraId, terms: LinearCombination<BasisKey>) -> Result<Self> {
        for k in terms.keys() {
            check_same(alg, k.algebra())?;
        }
        Ok(Self { algebra: alg, terms })
    }

    /// `a_i`, the color-1 generator of degree `i`.
    pub fn a(alg: AlgebraId, i: u32) -> Self {
        Self::from_key(BasisKey::generator(alg, i, Color::One))
    }

    /// `b_i`, the color-2 generator of degree `i`.
    pub fn b(alg: AlgebraId, i: u32) -> Self {
        Self::from_key(BasisKey::generator(alg, i, Color::Two))
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn terms(&self) -> &LinearCombination<BasisKey> {
        &self.terms
    }

    pub fn coeff(&self, key: &BasisKey) -> Rational {
        self.terms.coeff(key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { algebra: self.algebra, terms: self.terms.scale(c) }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_same(self.algebra, other.algebra)?;
        Ok(Self { algebra: self.algebra, terms: &self.terms + &other.terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_same(self.algebra, other.algebra)?;
        Ok(Self { algebra: self.algebra, terms: &self.terms - &other.terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_same(self.algebra, other.algebra)?;
        let terms = self.terms.bilinear(&other.terms, |u, v| {
            LinearCombination::single(basis_product(u, v).expect("same algebra"), Rational::one())
        });
        Ok(Self { algebra: self.algebra, terms })
    }

    pub fn pow(&self, m: u32) -> Self {
        (0..m).fold(Self::one(self.algebra), |acc, _| &acc * self)
    }

    pub(crate) fn add_scaled(&mut self, c: &Rational, other: &Self) {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        self.terms.add_scaled(c, &other.terms);
    }

    /// Coefficient of the unit.
    pub fn counit(&self) -> Rational {
        self.coeff(&BasisKey::unit(self.algebra))
    }

    /// Whether every key lies in the color-2 subalgebra ℝ.
    pub fn in_r(&self) -> bool {
        self.terms.keys().all(|k| k.colors().iter().all(|&c| c == Color::Two))
    }

    pub fn bidegrees(&self) -> BTreeSet<(u32, usize)> {
        self.terms.keys().map(BasisKey::bigrade).collect()
    }

    /// True when every key has bidegree `(n, k)` (vacuously for zero).
    pub fn is_bihomogeneous(&self, n: u32, k: usize) -> bool {
        self.terms.keys().all(|key| key.bigrade() == (n, k))
    }

    pub fn coproduct(&self) -> TensorElement {
        let mut terms = LinearCombination::zero();
        for (key, c) in &self.terms {
            for pair in key.splittings() {
                terms.add_term(pair, c.clone());
            }
        }
        TensorElement { algebra: self.algebra, terms }
    }

    /// Antipode, from `Σ S(x₍₁₎)·x₍₂₎ = ε(x)·1` solved recursively on keys.
    pub fn antipode(&self) -> Self {
        Self { algebra: self.algebra, terms: self.terms.flat_map(antipode_key) }
    }

    /// `Δ(e) = e⊗1 + 1⊗e`.
    pub fn is_primitive(&self) -> bool {
        let one = Self::one(self.algebra);
        let expected = TensorElement::tensor(self, &one).add(&TensorElement::tensor(&one, self));
        self.coproduct() == expected
    }

    /// Ξ: WSym² → NCSF², `Φ^π ↦ Ψ^{c(π)}`.
    pub fn xi_big(&self) -> Result<Self> {
        self.word_image(AlgebraId::NCSF2, |p| BasisKey::Ncsf(p.shape_c()))
    }

    /// ξ: WSym² → Sym², `Φ^π ↦ p^{λ(π)}`.
    pub fn xi_small(&self) -> Result<Self> {
        self.word_image(AlgebraId::Sym2, |p| BasisKey::Sym(p.shape_lambda()))
    }

    fn word_image(&self, target: AlgebraId, f: impl Fn(&BicoloredSetPartition) -> BasisKey) -> Result<Self> {
        if self.algebra != AlgebraId::WSym2 {
            return Err(Error::WrongAlgebra(self.algebra));
        }
        let terms = self.terms.map_keys(|k| match k {
            BasisKey::Word(p) => f(p),
            _ => unreachable!("WSym2 element with foreign key"),
        });
        Ok(Self { algebra: target, terms })
    }

    /// NCSF² → Sym², forgetting the order of letters.
    pub fn abelianize(&self) -> Result<Self> {
        if self.algebra != AlgebraId::NCSF2 {
            return Err(Error::WrongAlgebra(self.algebra));
        }
        let terms = self.terms.map_keys(|k| match k {
            BasisKey::Ncsf(c) => BasisKey::Sym(c.to_partition()),
            _ => unreachable!("NCSF2 element with foreign key"),
        });
        Ok(Self { algebra: AlgebraId::Sym2, terms })
    }

    /// The algebra morphism `a_i ↦ b_i` (recolor every color-1 block/part).
    pub fn substitute_a_by_b(&self) -> Self {
        Self { algebra: self.algebra, terms: self.terms.map_keys(|k| k.recolor(|_| Color::Two)) }
    }

    /// The Sym² endomorphism `b_i ↦ i·b_i`.
    pub fn scale_b_by_index(&self) -> Result<Self> {
        if self.algebra != AlgebraId::Sym2 {
            return Err(Error::WrongAlgebra(self.algebra));
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let factor: u64 = match k {
                    BasisKey::Sym(p) => p
                        .parts()
                        .iter()
                        .filter(|x| x.1 == Color::Two)
                        .map(|x| x.0 as u64)
                        .product(),
                    _ => unreachable!(),
                };
                (k.clone(), c * int(factor as i64))
            })
            .collect();
        Ok(Self { algebra: AlgebraId::Sym2, terms })
    }

    /// Evaluates a Sym² element at `a_i = avals[i-1]`, `b_i = bvals[i-1]`.
    pub fn specialize_sym2(&self, avals: &[Rational], bvals: &[Rational]) -> Result<Rational> {
        if self.algebra != AlgebraId::Sym2 {
            return Err(Error::WrongAlgebra(self.algebra));
        }
        let mut total = Rational::zero();
        for (k, c) in &self.terms {
            let BasisKey::Sym(p) = k else { unreachable!() };
            let mut term = c.clone();
            for &(size, color) in p.parts() {
                let (vals, name) = match color {
                    Color::One => (avals, "a"),
                    Color::Two => (bvals, "b"),
                };
                let v = vals
                    .get(size as usize - 1)
                    .ok_or_else(|| Error::MissingValue(format!("{name}{size}")))?;
                term *= v;
            }
            total += term;
        }
        Ok(total)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    /// Panics on algebra mismatch; use [`AlgebraElement::try_add`] to get an error instead.
    fn add(self, rhs: Self) -> AlgebraElement {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: Self) -> AlgebraElement {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: Self) -> AlgebraElement {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        AlgebraElement { algebra: self.algebra, terms: -&self.terms }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::element_text(self))
    }
}

impl Serialize for BasisKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BasisKey::Sym(p) => p.serialize(s),
            BasisKey::Ncsf(c) => c.serialize(s),
            BasisKey::Word(w) => w.serialize(s),
        }
    }
}

impl BasisKey {
    /// Parses a key of a known algebra from its JSON value.
    pub fn from_json_value(alg: AlgebraId, v: serde_json::Value) -> Result<Self> {
        Ok(match alg {
            AlgebraId::Sym2 => BasisKey::Sym(serde_json::from_value(v)?),
            AlgebraId::NCSF2 => BasisKey::Ncsf(serde_json::from_value(v)?),
            AlgebraId::WSym2 => BasisKey::Word(serde_json::from_value(v)?),
        })
    }
}

#[derive(Serialize)]
struct TermRef<'a> {
    coeff: String,
    key: &'a BasisKey,
}

#[derive(Serialize)]
struct ElementRef<'a> {
    algebra: AlgebraId,
    terms: Vec<TermRef<'a>>,
}

#[derive(Deserialize)]
struct TermOwned {
    #[serde(with = "crate::scalar::as_string")]
    coeff: Rational,
    key: serde_json::Value,
}

#[derive(Deserialize)]
struct ElementOwned {
    algebra: AlgebraId,
    terms: Vec<TermOwned>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(key, c)| TermRef { coeff: format_rational(c), key }).collect();
        ElementRef { algebra: self.algebra, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ElementOwned::deserialize(d)?;
        let mut terms = LinearCombination::zero();
        for t in raw.terms {
            let key = BasisKey::from_json_value(raw.algebra, t.key).map_err(serde::de::Error::custom)?;
            terms.add_term(key, t.coeff);
        }
        Ok(Self { algebra: raw.algebra, terms })
    }
}

/// An element of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    algebra: AlgebraId,
    terms: LinearCombination<(BasisKey, BasisKey)>,
}

impl TensorElement {
    pub fn zero(alg: AlgebraId) -> Self {
        Self { algebra: alg, terms: LinearCombination::zero() }
    }

    pub fn tensor(x: &AlgebraElement, y: &AlgebraElement) -> Self {
        assert_eq!(x.algebra, y.algebra, "algebra mismatch");
        let terms = x
            .terms
            .bilinear(&y.terms, |u, v| LinearCombination::single((u.clone(), v.clone()), Rational::one()));
        Self { algebra: x.algebra, terms }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn terms(&self) -> &LinearCombination<(BasisKey, BasisKey)> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        Self { algebra: self.algebra, terms: &self.terms + &other.terms }
    }

    /// Component-wise product `(x⊗y)(x'⊗y') = xx'⊗yy'`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(self.algebra, other.algebra)?;
        let terms = self.terms.bilinear(&other.terms, |(a, b), (c, d)| {
            let left = basis_product(a, c).expect("same algebra");
            let right = basis_product(b, d).expect("same algebra");
            LinearCombination::single((left, right), Rational::one())
        });
        Ok(Self { algebra: self.algebra, terms })
    }

    /// `(f ⊗ f)` for a linear map given on basis keys.
    pub fn map_both(&self, target: AlgebraId, f: impl Fn(&BasisKey) -> AlgebraElement) -> Self {
        let mut out = Self::zero(target);
        for ((a, b), c) in &self.terms {
            let t = Self::tensor(&f(a), &f(b));
            out.terms.add_scaled(c, &t.terms);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Color::{One, Two};
    use crate::partition::{generate_s, BicoloredSetPartition};
    use crate::scalar::rat;

    fn word(raw: &[(&[u32], Color)]) -> AlgebraElement {
        AlgebraElement::from_key(BasisKey::Word(
            BicoloredSetPartition::canonicalize(raw.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap(),
        ))
    }

    fn psi(parts: &[(u32, Color)]) -> AlgebraElement {
        AlgebraElement::from_key(BasisKey::Ncsf(BicoloredComposition::new(parts.to_vec())))
    }

    fn p(parts: &[(u32, Color)]) -> AlgebraElement {
        AlgebraElement::from_key(BasisKey::Sym(BicoloredPartition::new(parts.to_vec())))
    }

    #[test]
    fn products() {
        assert_eq!(&word(&[(&[1], One)]) * &word(&[(&[1], Two)]), word(&[(&[1], One), (&[2], Two)]));
        let x = &psi(&[(1, One)]) * &psi(&[(2, Two)]);
        let y = &psi(&[(2, Two)]) * &psi(&[(1, One)]);
        assert_eq!(x, psi(&[(1, One), (2, Two)]));
        assert_eq!(y, psi(&[(2, Two), (1, One)]));
        assert_ne!(x, y);
        let s = &p(&[(2, One)]) * &p(&[(1, Two)]);
        assert_eq!(s, &p(&[(1, Two)]) * &p(&[(2, One)]));
        assert_eq!(s, p(&[(2, One), (1, Two)]));
    }

    #[test]
    fn cross_algebra_is_an_error() {
        let err = AlgebraElement::a(AlgebraId::Sym2, 1).try_mul(&AlgebraElement::a(AlgebraId::NCSF2, 1));
        assert_eq!(err, Err(Error::AlgebraMismatch { left: AlgebraId::Sym2, right: AlgebraId::NCSF2 }));
        assert!(basis_product(&BasisKey::unit(AlgebraId::WSym2), &BasisKey::unit(AlgebraId::Sym2)).is_err());
        assert!(AlgebraElement::a(AlgebraId::Sym2, 1).xi_big().is_err());
    }

    #[test]
    fn wsym_coproducts() {
        let single = word(&[(&[1], One)]);
        assert!(single.is_primitive());
        let pi = word(&[(&[1], One), (&[2], Two)]);
        let one = AlgebraElement::one(AlgebraId::WSym2);
        let expected = TensorElement::tensor(&pi, &one)
            .add(&TensorElement::tensor(&one, &pi))
            .add(&TensorElement::tensor(&word(&[(&[1], One)]), &word(&[(&[1], Two)])))
            .add(&TensorElement::tensor(&word(&[(&[1], Two)]), &word(&[(&[1], One)])));
        assert_eq!(pi.coproduct(), expected);
    }

    #[test]
    fn sym_generator_primitive() {
        assert!(p(&[(3, Two)]).is_primitive());
        assert!(AlgebraElement::a(AlgebraId::NCSF2, 3).is_primitive());
        assert!(AlgebraElement::a(AlgebraId::WSym2, 3).is_primitive());
        let a1 = AlgebraElement::a(AlgebraId::Sym2, 1);
        assert!(!(&a1 * &a1).is_primitive());
        let sq = (&a1 * &a1).coproduct();
        let mid = (BasisKey::generator(AlgebraId::Sym2, 1, One), BasisKey::generator(AlgebraId::Sym2, 1, One));
        assert_eq!(sq.terms().coeff(&mid), int(2));
        assert!(AlgebraElement::zero(AlgebraId::Sym2).is_primitive());
    }

    #[test]
    fn antipode_on_words() {
        let alg = AlgebraId::NCSF2;
        let (a1, b2) = (AlgebraElement::a(alg, 1), AlgebraElement::b(alg, 2));
        assert_eq!(a1.antipode(), -&a1);
        assert_eq!((&a1 * &b2).antipode(), &b2 * &a1);
        let pi = word(&[(&[1, 3], One), (&[2], Two)]);
        let lhs = pi.antipode().xi_big().unwrap();
        assert_eq!(lhs, pi.xi_big().unwrap().antipode());
    }

    #[test]
    fn counit_and_grading() {
        let alg = AlgebraId::NCSF2;
        assert_eq!(AlgebraElement::one(alg).counit(), int(1));
        assert_eq!(AlgebraElement::a(alg, 1).counit(), int(0));
        let e = &AlgebraElement::one(alg).scale(&int(2)) + &AlgebraElement::a(alg, 2).scale(&int(3));
        assert_eq!(e.counit(), int(2));
        assert_eq!(BasisKey::Ncsf(BicoloredComposition::new(vec![(2, One), (1, Two)])).bigrade(), (3, 2));
        assert_eq!(BasisKey::unit(AlgebraId::WSym2).bigrade(), (0, 0));
        assert_eq!(BasisKey::generator(AlgebraId::WSym2, 2, Two).bigrade(), (2, 1));
    }

    #[test]
    fn subalgebra_r() {
        let alg = AlgebraId::NCSF2;
        assert!((&AlgebraElement::b(alg, 2) * &AlgebraElement::b(alg, 1)).in_r());
        assert!(!AlgebraElement::a(alg, 1).in_r());
        assert!(AlgebraElement::one(alg).in_r());
    }

    #[test]
    fn morphisms_on_worked_family() {
        let mut sum = AlgebraElement::zero(AlgebraId::WSym2);
        for pi in generate_s(2, 2, 1) {
            sum = &sum + &AlgebraElement::from_key(BasisKey::Word(pi));
        }
        let big = sum.xi_big().unwrap();
        let expected = &(&psi(&[(2, One), (1, One), (1, Two)]).scale(&int(2))
            + &psi(&[(1, One), (2, One), (1, Two)]).scale(&int(2)))
            + &psi(&[(1, One), (1, One), (2, Two)]);
        assert_eq!(big, expected);
        let small = sum.xi_small().unwrap();
        let expected = &p(&[(2, One), (1, One), (1, Two)]).scale(&int(4)) + &p(&[(1, One), (1, One), (2, Two)]);
        assert_eq!(small, expected);
        assert_eq!(word(&[(&[1, 3], One), (&[2], One), (&[4], Two)]).xi_big().unwrap(), psi(&[(2, One), (1, One), (1, Two)]));
        assert_eq!(word(&[(&[1], Two)]).xi_small().unwrap(), p(&[(1, Two)]));
        assert_eq!(AlgebraElement::one(AlgebraId::WSym2).xi_big().unwrap(), AlgebraElement::one(AlgebraId::NCSF2));
        assert_eq!(AlgebraElement::one(AlgebraId::WSym2).xi_small().unwrap(), AlgebraElement::one(AlgebraId::Sym2));
    }

    #[test]
    fn specialization() {
        let alg = AlgebraId::Sym2;
        let (a1, a2, b1, b2) = (
            AlgebraElement::a(alg, 1),
            AlgebraElement::a(alg, 2),
            AlgebraElement::b(alg, 1),
            AlgebraElement::b(alg, 2),
        );
        let e = &(&(&a2 * &a1) * &b1).scale(&int(4)) + &(&(&a1 * &a1) * &b2);
        let ones = vec![int(1); 4];
        assert_eq!(e.specialize_sym2(&ones, &ones).unwrap(), int(5));
        assert_eq!(a1.specialize_sym2(&[int(7)], &[]).unwrap(), int(7));
        assert_eq!(AlgebraElement::one(alg).specialize_sym2(&[], &[]).unwrap(), int(1));
        assert_eq!(b2.specialize_sym2(&[], &[int(1)]), Err(Error::MissingValue("b2".into())));
        assert_eq!(b2.scale(&rat(1, 3)).scale_b_by_index().unwrap(), b2.scale(&rat(2, 3)));
    }

    #[test]
    fn key_enumeration_sizes() {
        // compositions: 2·3^(n-1) per weight n ≥ 1
        assert_eq!(basis_keys(AlgebraId::NCSF2, 3).len(), 1 + 2 + 6 + 18);
        // bicolored partitions of 0..3: 1, 2, 5, 10
        assert_eq!(basis_keys(AlgebraId::Sym2, 3).len(), 1 + 2 + 5 + 10);
        assert_eq!(basis_keys(AlgebraId::WSym2, 3).len(), 1 + 2 + 6 + 22);
    }
}
