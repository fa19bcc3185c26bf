//! Truncated power series in three commuting markers `x`, `y`, `t`.
//!
//! Coefficients live in a possibly noncommutative ring (algebra elements or
//! operator polynomials); the markers are central. Every series carries the
//! unit of its coefficient ring, so zero coefficients and exponentials can be
//! formed without knowing the ring statically.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::AlgebraElement;
use crate::operator::{apply_poly, OperatorPoly};
use crate::scalar::{binomial, factorial_q, from_biguint, rat, Rational};

/// Exponents of `(x, y, t)`.
pub type Exp = [u32; 3];

pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Coefficient for AlgebraElement {
    fn is_zero(&self) -> bool {
        AlgebraElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: &Rational) -> Self {
        AlgebraElement::scale(self, c)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for OperatorPoly {
    fn is_zero(&self) -> bool {
        OperatorPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        OperatorPoly::add(self, other)
    }
    fn scale(&self, c: &Rational) -> Self {
        OperatorPoly::scale(self, c)
    }
    fn mul(&self, other: &Self) -> Self {
        OperatorPoly::mul(self, other)
    }
}

/// Maximum retained exponent of each marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Truncation {
    pub nx: u32,
    pub ny: u32,
    pub nt: u32,
}

impl Truncation {
    pub fn new(nx: u32, ny: u32, nt: u32) -> Self {
        Self { nx, ny, nt }
    }

    pub fn contains(&self, e: Exp) -> bool {
        e[0] <= self.nx && e[1] <= self.ny && e[2] <= self.nt
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.nx, self.ny, self.nt]
    }

    /// Every exponent within the caps, in lexicographic order.
    pub fn exponents(&self) -> impl Iterator<Item = Exp> + '_ {
        (0..=self.nx).flat_map(move |i| (0..=self.ny).flat_map(move |j| (0..=self.nt).map(move |k| [i, j, k])))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    caps: Truncation,
    unit: C,
    coeffs: BTreeMap<Exp, C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(caps: Truncation, unit: C) -> Self {
        Self { caps, unit, coeffs: BTreeMap::new() }
    }

    pub fn one(caps: Truncation, unit: C) -> Self {
        let mut s = Self::zero(caps, unit.clone());
        s.add_at([0, 0, 0], unit);
        s
    }

    pub fn monomial(caps: Truncation, unit: C, e: Exp, c: C) -> Self {
        let mut s = Self::zero(caps, unit);
        s.add_at(e, c);
        s
    }

    pub fn caps(&self) -> Truncation {
        self.caps
    }

    pub fn unit(&self) -> &C {
        &self.unit
    }

    pub fn zero_coeff(&self) -> C {
        self.unit.scale(&Rational::zero())
    }

    /// Adds `c` at exponent `e`; silently dropped beyond the caps.
    pub fn add_at(&mut self, e: Exp, c: C) {
        if !self.caps.contains(e) || c.is_zero() {
            return;
        }
        match self.coeffs.remove(&e) {
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.coeffs.insert(e, sum);
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    pub fn get(&self, e: Exp) -> Option<&C> {
        self.coeffs.get(&e)
    }

    pub fn coeff(&self, e: Exp) -> C {
        self.coeffs.get(&e).cloned().unwrap_or_else(|| self.zero_coeff())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exp, &C)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_caps(&self, other: &Self) -> Result<()> {
        if self.caps == other.caps {
            Ok(())
        } else {
            Err(Error::TruncationMismatch(self.caps.as_array(), other.caps.as_array()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_at(e, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.caps, self.unit.clone());
        for (&e, v) in &self.coeffs {
            out.add_at(e, v.scale(c));
        }
        out
    }

    /// Cauchy product; coefficient order is `self` then `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let mut out = Self::zero(self.caps, self.unit.clone());
        for (a, u) in &self.coeffs {
            for (b, v) in &other.coeffs {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                if self.caps.contains(e) {
                    out.add_at(e, u.mul(v));
                }
            }
        }
        Ok(out)
    }

    /// `Σ_m A^m / m!`.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs.contains_key(&[0, 0, 0]) {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut total = Self::one(self.caps, self.unit.clone());
        let mut power = total.clone();
        for m in 1.. {
            power = power.mul(self)?.scale(&rat(1, m));
            if power.is_empty() {
                break;
            }
            total = total.add(&power)?;
        }
        Ok(total)
    }

    fn remap(&self, caps: Truncation, f: impl Fn(Exp) -> Vec<(Exp, Rational)>) -> Self {
        let mut out = Self::zero(caps, self.unit.clone());
        for (&e, c) in &self.coeffs {
            for (e2, w) in f(e) {
                out.add_at(e2, c.scale(&w));
            }
        }
        out
    }

    /// `t ↦ xt`.
    pub fn substitute_t_by_xt(&self) -> Self {
        self.remap(self.caps, |[i, j, k]| vec![([i + k, j, k], Rational::one())])
    }

    /// `y ↦ xt`.
    pub fn substitute_y_by_xt(&self) -> Self {
        self.remap(self.caps, |[i, j, k]| vec![([i + j, 0, k + j], Rational::one())])
    }

    /// `y ↦ y + t`, re-truncated to `caps`.
    pub fn substitute_y_by_y_plus_t(&self, caps: Truncation) -> Self {
        self.remap(caps, |[i, j, k]| {
            (0..=j).map(|a| ([i, a, k + j - a], from_biguint(binomial(j, a)))).collect()
        })
    }

    pub fn restrict(&self, caps: Truncation) -> Self {
        self.remap(caps, |e| vec![(e, Rational::one())])
    }

    pub fn map_coeffs<D: Coefficient>(&self, unit: D, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        let mut out = TruncatedSeries::zero(self.caps, unit);
        for (&e, c) in &self.coeffs {
            out.add_at(e, f(c));
        }
        out
    }

    /// `i!·j!·[x^i y^j t^k]`, times `k!` as well when `t_factorial` is set.
    pub fn extract_normalized(&self, i: u32, j: u32, k: u32, t_factorial: bool) -> Result<C> {
        if !self.caps.contains([i, j, k]) {
            return Err(Error::OutOfRange(format!(
                "exponent ({i},{j},{k}) beyond caps {:?}",
                self.caps.as_array()
            )));
        }
        let mut w = factorial_q(i) * factorial_q(j);
        if t_factorial {
            w *= factorial_q(k);
        }
        Ok(self.coeff([i, j, k]).scale(&w))
    }
}

/// Applies an operator-valued series to an element-valued one. The result
/// keeps the caps of `elements`.
pub fn act(
    elements: &TruncatedSeries<AlgebraElement>,
    ops: &TruncatedSeries<OperatorPoly>,
) -> TruncatedSeries<AlgebraElement> {
    let caps = elements.caps;
    let pairs: Vec<(Exp, &AlgebraElement, &OperatorPoly)> = elements
        .iter()
        .flat_map(|(a, u)| {
            ops.iter().filter_map(move |(b, p)| {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                caps.contains(e).then_some((e, u, p))
            })
        })
        .collect();
    let products: Vec<(Exp, AlgebraElement)> = pairs.par_iter().map(|&(e, u, p)| (e, apply_poly(p, u))).collect();
    let mut out = TruncatedSeries::zero(caps, elements.unit.clone());
    for (e, v) in products {
        out.add_at(e, v);
    }
    out
}

#[derive(Serialize)]
struct CoeffRef<'a, C> {
    exp: Exp,
    value: &'a C,
}

#[derive(Serialize)]
struct SeriesRef<'a, C> {
    caps: [u32; 3],
    coeffs: Vec<CoeffRef<'a, C>>,
}

#[derive(Deserialize)]
struct CoeffOwned<C> {
    exp: Exp,
    value: C,
}

#[derive(Deserialize)]
struct SeriesOwned<C> {
    caps: [u32; 3],
    coeffs: Vec<CoeffOwned<C>>,
}

impl<C: Coefficient + Serialize> Serialize for TruncatedSeries<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRef {
            caps: self.caps.as_array(),
            coeffs: self.coeffs.iter().map(|(&exp, value)| CoeffRef { exp, value }).collect(),
        }
        .serialize(s)
    }
}

impl<C: Coefficient + DeserializeOwned> TruncatedSeries<C> {
    /// Parses the series JSON; the unit fixes the coefficient ring.
    pub fn from_json(json: &str, unit: C) -> Result<Self> {
        let raw: SeriesOwned<C> = serde_json::from_str(json)?;
        let [nx, ny, nt] = raw.caps;
        let mut out = Self::zero(Truncation::new(nx, ny, nt), unit);
        for c in raw.coeffs {
            if !out.caps.contains(c.exp) {
                return Err(Error::OutOfRange(format!("exponent {:?} beyond caps", c.exp)));
            }
            out.add_at(c.exp, c.value);
        }
        Ok(out)
    }
}
