//! Exact checks of the identities relating the generating series, the
//! operators `c_{n,k}`, and the combinatorial counts.
//!
//! Every check returns a [`VerificationReport`]; it passes exactly when no
//! mismatch was recorded. Sweeps run in parallel and collect results in a
//! fixed order, so reports are reproducible.

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bell::{bell, bell_enum, bell_tilde, gf_s, gf_s_bullet, gf_s_circ, gf_s_star, z_on_one, z_series, BellQuery};
use crate::error::Result;
use crate::hopf::{basis_keys, AlgebraElement, AlgebraId, BasisKey, TensorElement};
use crate::linear::LinearCombination;
use crate::operator::{annihilates, apply_poly, as_multiplication, c_nk, c_nk_closed_ncsf};
use crate::partition::{
    all_bicolored_set_partitions, generate_s, is_member_s, r_stirling, stirling_first_unsigned,
};
use crate::scalar::{binomial, factorial_q, format_rational, from_biguint, int, rat, Rational};
use crate::series::{act, Coefficient, TruncatedSeries, Truncation};
use crate::zassenhaus::zassenhaus_oracle;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exp: Vec<u32>,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub caps: Vec<u32>,
    pub pass: bool,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, caps: Vec<u32>, mismatches: Vec<Mismatch>) -> Self {
        Self { identity: identity.into(), caps, pass: mismatches.is_empty(), mismatches }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn mismatch<T: Serialize>(exp: Vec<u32>, expected: &T, actual: &T) -> Mismatch {
    Mismatch { exp, expected: to_json(expected), actual: to_json(actual) }
}

/// Coefficient-wise comparison of two series with the same caps.
pub fn compare_series<C: Coefficient + Serialize>(
    identity: &str,
    expected: &TruncatedSeries<C>,
    actual: &TruncatedSeries<C>,
) -> VerificationReport {
    let caps = expected.caps();
    let mut exps: Vec<[u32; 3]> = expected.iter().map(|(e, _)| *e).chain(actual.iter().map(|(e, _)| *e)).collect();
    exps.sort_unstable();
    exps.dedup();
    let mismatches = exps
        .into_iter()
        .filter_map(|e| {
            let (l, r) = (expected.coeff(e), actual.coeff(e));
            (l != r).then(|| mismatch(e.to_vec(), &l, &r))
        })
        .collect();
    VerificationReport::new(identity, caps.as_array().to_vec(), mismatches)
}

/// `S(t,x,y) = S•(xt,x,y)·Z(x,t)`, with `Z` built from `c_{n,k}`.
pub fn verify_theorem1(alg: AlgebraId, caps: Truncation) -> Result<VerificationReport> {
    let lhs = gf_s(alg, caps);
    let rhs = act(&gf_s_bullet(alg, caps).substitute_t_by_xt(), &z_series(caps)?);
    Ok(compare_series(&format!("theorem1/{alg}"), &lhs, &rhs))
}

/// `S°(t,x) = S*(x,xt)·Z(x,t)`.
pub fn verify_theorem1_circ(alg: AlgebraId, nx: u32, nt: u32) -> Result<VerificationReport> {
    let caps = Truncation::new(nx, 0, nt);
    let lhs = gf_s_circ(alg, caps);
    let star = gf_s_star(alg, Truncation::new(nx, nt, nt)).substitute_y_by_xt().restrict(caps);
    let rhs = act(&star, &z_series(caps)?);
    Ok(compare_series(&format!("theorem1-circ/{alg}"), &lhs, &rhs))
}

/// Which printed closed form of `Z` in Sym² to compare against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cor2Form {
    /// `exp(-Σ_{i≥2} (i-1)/i! · b_i x^i t)`.
    Corrected,
    /// `exp(-Σ_{i≥2} (i-1)/i! · b_i t^i)`, without the `x^i`.
    Literal,
}

/// `1·Z(x,t)` in Sym² against its closed exponential form.
pub fn verify_cor2(caps: Truncation, form: Cor2Form) -> Result<VerificationReport> {
    let alg = AlgebraId::Sym2;
    let lhs = z_on_one(alg, caps)?;
    let mut exponent = TruncatedSeries::zero(caps, AlgebraElement::one(alg));
    for i in 2..=caps.nx.max(caps.nt) {
        let c = AlgebraElement::b(alg, i).scale(&(-int(i as i64 - 1) / factorial_q(i)));
        let e = match form {
            Cor2Form::Corrected => [i, 0, 1],
            Cor2Form::Literal => [0, 0, i],
        };
        exponent.add_at(e, c);
    }
    let rhs = exponent.exp()?;
    let name = match form {
        Cor2Form::Corrected => "cor2",
        Cor2Form::Literal => "cor2-literal",
    };
    Ok(compare_series(name, &lhs, &rhs))
}

/// `B̃^r(n,k) = C(n+k,n)^{-1} · B^r(n+k,k)|_{b_i ↦ i·b_i}` in Sym², plus the
/// `r = 0` form `B̃^0(n,k)(a;b) = B^k(n,0)(b;b)`.
pub fn verify_binomial_identity(rmax: u32, nmax: u32, kmax: u32) -> VerificationReport {
    let alg = AlgebraId::Sym2;
    let cases: Vec<(u32, u32, u32)> =
        (0..=rmax).flat_map(|r| (0..=nmax).flat_map(move |n| (0..=kmax).map(move |k| (r, n, k)))).collect();
    let mut mismatches: Vec<Mismatch> = cases
        .par_iter()
        .filter_map(|&(r, n, k)| {
            let tilde = bell_tilde(BellQuery::new(alg, r, n, k));
            let scaled = bell(BellQuery::new(alg, r, n + k, k))
                .scale_b_by_index()
                .expect("Sym2")
                .scale(&(Rational::one() / from_biguint(binomial(n + k, n))));
            (tilde != scaled).then(|| mismatch(vec![r, n, k], &tilde, &scaled))
        })
        .collect();
    let corollary: Vec<Mismatch> = cases
        .par_iter()
        .filter(|c| c.0 == 0)
        .filter_map(|&(_, n, k)| {
            let tilde = bell_tilde(BellQuery::new(alg, 0, n, k));
            let other = bell(BellQuery::new(alg, k, n, 0)).substitute_a_by_b();
            (tilde != other).then(|| mismatch(vec![0, n, k], &tilde, &other))
        })
        .collect();
    mismatches.extend(corollary);
    VerificationReport::new("binomial", vec![rmax, nmax, kmax], mismatches)
}

/// With `a_i = b_i`: `S•(t,x,y) = S*(x, y+t)`.
pub fn verify_ab_remark(alg: AlgebraId, caps: Truncation) -> VerificationReport {
    let lhs = gf_s_bullet(alg, caps).map_coeffs(AlgebraElement::one(alg), AlgebraElement::substitute_a_by_b);
    let star = gf_s_star(alg, Truncation::new(caps.nx, caps.ny + caps.nt, 0));
    let rhs = star.substitute_y_by_y_plus_t(caps);
    compare_series(&format!("ab-remark/{alg}"), &lhs, &rhs)
}

/// Specializations of Sym² Bell polynomials to Stirling numbers of both kinds.
pub fn stirling_specializations(nmax: u32) -> VerificationReport {
    let alg = AlgebraId::Sym2;
    let len = nmax as usize + 1;
    let ones = vec![int(1); len];
    let factorials: Vec<Rational> = (0..len as u32).map(factorial_q).collect();
    let cases: Vec<(u32, u32, u32)> = (0..=nmax)
        .flat_map(|r| (0..=nmax - r).flat_map(move |n| (0..=n).map(move |k| (r, n, k))))
        .collect();
    let mismatches = cases
        .par_iter()
        .flat_map_iter(|&(r, n, k)| {
            let b = bell(BellQuery::new(alg, r, n, k));
            let mut out = Vec::new();
            let at_ones = b.specialize_sym2(&ones, &ones).expect("enough values");
            let second = from_biguint(r_stirling(n + r, k + r, r));
            if at_ones != second {
                out.push(labelled(vec![r, n, k], "second-kind", &second, &at_ones));
            }
            if r == 0 {
                let at_fact = b.specialize_sym2(&ones, &factorials).expect("enough values");
                let first = from_biguint(stirling_first_unsigned(n, k));
                if at_fact != first {
                    out.push(labelled(vec![r, n, k], "first-kind", &first, &at_fact));
                }
            }
            out
        })
        .collect();
    VerificationReport::new("stirling", vec![nmax], mismatches)
}

fn labelled(exp: Vec<u32>, kind: &str, expected: &Rational, actual: &Rational) -> Mismatch {
    Mismatch {
        exp,
        expected: json!({ "kind": kind, "value": format_rational(expected) }),
        actual: json!({ "kind": kind, "value": format_rational(actual) }),
    }
}

/// The first NCSF² key of weight `<= bound` on which two operators differ.
fn first_difference(
    p: &crate::operator::OperatorPoly,
    q: &crate::operator::OperatorPoly,
    bound: u32,
) -> Option<(AlgebraElement, AlgebraElement)> {
    let alg = AlgebraId::NCSF2;
    let diff = p.sub(q);
    if annihilates(alg, &diff, bound) {
        return None;
    }
    basis_keys(alg, bound).into_iter().find_map(|k| {
        let e = AlgebraElement::from_key(k);
        let (x, y) = (apply_poly(p, &e), apply_poly(q, &e));
        (x != y).then_some((x, y))
    })
}

/// Oracle `t^k` coefficients of `Z_n` against `c_{n,k}`, by action on NCSF².
pub fn verify_zassenhaus(nmax: u32, weight_bound: u32) -> Result<VerificationReport> {
    let oracle = zassenhaus_oracle(nmax)?;
    let cases: Vec<(u32, u32)> = (2..=nmax).flat_map(|n| (0..n).map(move |k| (n, k))).collect();
    let mismatches = cases
        .par_iter()
        .filter_map(|&(n, k)| {
            let z = oracle[n as usize - 2].t_coeff(k);
            let c = c_nk(n, k).expect("in range");
            first_difference(&c, &z, weight_bound).map(|(x, y)| mismatch(vec![n, k], &x, &y))
        })
        .collect();
    Ok(VerificationReport::new("zassenhaus", vec![nmax, weight_bound], mismatches))
}

/// Nested-bracket closed form against `c_{n,k}·1` in NCSF².
pub fn verify_cnk_closed(nmax: u32) -> VerificationReport {
    let cases: Vec<(u32, u32)> = (2..=nmax).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
    let mismatches = cases
        .par_iter()
        .filter_map(|&(n, k)| {
            let exact = apply_poly(&c_nk(n, k).expect("in range"), &AlgebraElement::one(AlgebraId::NCSF2));
            let closed = c_nk_closed_ncsf(n, k).expect("in range");
            (exact != closed).then(|| mismatch(vec![n, k], &exact, &closed))
        })
        .collect();
    VerificationReport::new("cnk-closed", vec![nmax], mismatches)
}

/// Each `c_{n,k}` acts as multiplication by a primitive element of ℝ of bidegree `(n,k)`.
pub fn verify_primitivity(alg: AlgebraId, nmax: u32, degree_bound: u32) -> VerificationReport {
    let cases: Vec<(u32, u32)> = (2..=nmax).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
    let mismatches = cases
        .iter()
        .filter_map(|&(n, k)| {
            let p = c_nk(n, k).expect("in range");
            let problem = match as_multiplication(alg, &p, degree_bound) {
                None => Some("not a multiplication operator"),
                Some(c) if !c.in_r() => Some("leaves the color-2 subalgebra"),
                Some(c) if !c.is_bihomogeneous(n, k as usize) => Some("wrong bidegree"),
                Some(c) if !c.is_primitive() => Some("not primitive"),
                Some(_) => None,
            };
            problem.map(|what| Mismatch { exp: vec![n, k], expected: json!("primitive multiplier"), actual: json!(what) })
        })
        .collect();
    VerificationReport::new(format!("primitivity/{alg}"), vec![nmax, degree_bound], mismatches)
}

/// Operator route against enumeration route for `r + n <= max_sum`, `k <= n`.
pub fn verify_routes(max_sum: u32) -> VerificationReport {
    let cases: Vec<BellQuery> = AlgebraId::ALL
        .iter()
        .flat_map(|&alg| {
            (0..=max_sum).flat_map(move |r| {
                (0..=max_sum - r).flat_map(move |n| (0..=n).map(move |k| BellQuery::new(alg, r, n, k)))
            })
        })
        .collect();
    let mismatches = cases
        .par_iter()
        .filter_map(|&q| {
            let (op, en) = (bell(q), bell_enum(q));
            (op != en).then(|| mismatch(vec![q.r, q.n, q.k], &en, &op))
        })
        .collect();
    VerificationReport::new("routes", vec![max_sum], mismatches)
}

/// Sizes against r-Stirling numbers for `r + n <= max_sum`; membership and
/// uniqueness against brute force for `r + n <= brute_max`.
pub fn verify_counts(max_sum: u32, brute_max: u32) -> VerificationReport {
    let cases: Vec<(u32, u32, u32)> = (0..=max_sum)
        .flat_map(|r| (0..=max_sum - r).flat_map(move |n| (0..=n).map(move |k| (r, n, k))))
        .collect();
    let mismatches = cases
        .par_iter()
        .flat_map_iter(|&(r, n, k)| {
            let mut out = Vec::new();
            let got = generate_s(r, n, k);
            let size = from_biguint(r_stirling(n + r, k + r, r));
            if int(got.len() as i64) != size {
                out.push(labelled(vec![r, n, k], "size", &size, &int(got.len() as i64)));
            }
            let mut sorted = got.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != got.len() {
                out.push(labelled(vec![r, n, k], "distinct", &int(got.len() as i64), &int(sorted.len() as i64)));
            }
            if r + n <= brute_max {
                let mut brute: Vec<_> =
                    all_bicolored_set_partitions(n + r).into_iter().filter(|p| is_member_s(p, r, n, k)).collect();
                brute.sort();
                if brute != sorted {
                    out.push(labelled(vec![r, n, k], "brute-force", &int(brute.len() as i64), &int(sorted.len() as i64)));
                }
            }
            out
        })
        .collect();
    VerificationReport::new("counts", vec![max_sum, brute_max], mismatches)
}

type Triple = LinearCombination<(BasisKey, BasisKey, BasisKey)>;

fn key_coproduct(k: &BasisKey) -> TensorElement {
    AlgebraElement::from_key(k.clone()).coproduct()
}

fn coassoc_left(t: &TensorElement) -> Triple {
    let mut out = Triple::zero();
    for ((a, b), c) in t.terms() {
        for ((a1, a2), c1) in key_coproduct(a).terms() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
        }
    }
    out
}

fn coassoc_right(t: &TensorElement) -> Triple {
    let mut out = Triple::zero();
    for ((a, b), c) in t.terms() {
        for ((b1, b2), c1) in key_coproduct(b).terms() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c * c1);
        }
    }
    out
}

/// `(ε⊗id)` and `(id⊗ε)` applied to a tensor.
fn counit_sides(t: &TensorElement) -> (AlgebraElement, AlgebraElement) {
    let alg = t.algebra();
    let (mut left, mut right) = (LinearCombination::zero(), LinearCombination::zero());
    for ((a, b), c) in t.terms() {
        if a.is_unit() {
            left.add_term(b.clone(), c.clone());
        }
        if b.is_unit() {
            right.add_term(a.clone(), c.clone());
        }
    }
    (
        AlgebraElement::from_terms(alg, left).expect("same algebra"),
        AlgebraElement::from_terms(alg, right).expect("same algebra"),
    )
}

/// `m(S⊗id)Δ` and `m(id⊗S)Δ`.
fn antipode_sides(t: &TensorElement) -> (AlgebraElement, AlgebraElement) {
    let alg = t.algebra();
    let (mut left, mut right) = (AlgebraElement::zero(alg), AlgebraElement::zero(alg));
    for ((a, b), c) in t.terms() {
        let (ea, eb) = (AlgebraElement::from_key(a.clone()), AlgebraElement::from_key(b.clone()));
        left.add_scaled(c, &(&ea.antipode() * &eb));
        right.add_scaled(c, &(&ea * &eb.antipode()));
    }
    (left, right)
}

/// Failed axioms for a single element.
fn unary_failures(x: &AlgebraElement) -> Vec<&'static str> {
    let mut out = Vec::new();
    let dx = x.coproduct();
    if coassoc_left(&dx) != coassoc_right(&dx) {
        out.push("coassociativity");
    }
    let (l, r) = counit_sides(&dx);
    if &l != x || &r != x {
        out.push("counit");
    }
    let unit = AlgebraElement::one(x.algebra()).scale(&x.counit());
    let (l, r) = antipode_sides(&dx);
    if l != unit || r != unit {
        out.push("antipode");
    }
    if x.algebra() == AlgebraId::WSym2 {
        let big = x.xi_big().expect("WSym2");
        let small = x.xi_small().expect("WSym2");
        let image_big = |k: &BasisKey| AlgebraElement::from_key(k.clone()).xi_big().expect("WSym2");
        let image_small = |k: &BasisKey| AlgebraElement::from_key(k.clone()).xi_small().expect("WSym2");
        if big.coproduct() != dx.map_both(AlgebraId::NCSF2, image_big) {
            out.push("Xi coproduct");
        }
        if small.coproduct() != dx.map_both(AlgebraId::Sym2, image_small) {
            out.push("xi coproduct");
        }
        if big.counit() != x.counit() || small.counit() != x.counit() {
            out.push("Xi/xi counit");
        }
        if big.antipode() != x.antipode().xi_big().expect("WSym2") {
            out.push("Xi antipode");
        }
        if small.antipode() != x.antipode().xi_small().expect("WSym2") {
            out.push("xi antipode");
        }
    }
    out
}

/// Failed axioms for a pair.
fn binary_failures(x: &AlgebraElement, y: &AlgebraElement) -> Vec<&'static str> {
    let mut out = Vec::new();
    let xy = x * y;
    if Ok(xy.coproduct()) != x.coproduct().mul(&y.coproduct()) {
        out.push("multiplicative coproduct");
    }
    if xy.counit() != x.counit() * y.counit() {
        out.push("multiplicative counit");
    }
    if x.algebra() == AlgebraId::WSym2 {
        let xb = x.xi_big().expect("WSym2");
        let yb = y.xi_big().expect("WSym2");
        if xy.xi_big().expect("WSym2") != &xb * &yb {
            out.push("Xi product");
        }
        let xs = x.xi_small().expect("WSym2");
        let ys = y.xi_small().expect("WSym2");
        if xy.xi_small().expect("WSym2") != &xs * &ys {
            out.push("xi product");
        }
    }
    out
}

/// A random element: up to `max_terms` keys of weight `<= max_weight` with
/// small nonzero rational coefficients.
pub fn random_element(rng: &mut impl Rng, alg: AlgebraId, max_weight: u32, max_terms: usize) -> AlgebraElement {
    let keys = basis_keys(alg, max_weight);
    let terms = rng.gen_range(1..=max_terms);
    let mut e = AlgebraElement::zero(alg);
    for _ in 0..terms {
        let key = keys.choose(rng).expect("nonempty").clone();
        let num = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let den = rng.gen_range(1..=5);
        e.add_scaled(&rat(num, den), &AlgebraElement::from_key(key));
    }
    e
}

/// Bialgebra and antipode axioms on every key of weight `<= max_weight` and
/// on `samples` seeded random elements; in WSym² also the morphism property
/// of Ξ and ξ.
pub fn verify_hopf(alg: AlgebraId, max_weight: u32, samples: usize, seed: u64) -> VerificationReport {
    let keys = basis_keys(alg, max_weight);
    let elems: Vec<AlgebraElement> = keys.iter().cloned().map(AlgebraElement::from_key).collect();
    let mut pairs = Vec::new();
    for (i, k1) in keys.iter().enumerate() {
        for (j, k2) in keys.iter().enumerate() {
            if k1.bigrade().0 + k2.bigrade().0 <= max_weight {
                pairs.push((i, j));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<AlgebraElement> = (0..samples).map(|_| random_element(&mut rng, alg, 3, 4)).collect();

    let report = |what: &str, idx: Vec<u32>, failures: Vec<&'static str>| -> Vec<Mismatch> {
        failures
            .into_iter()
            .map(|f| Mismatch { exp: idx.clone(), expected: json!(f), actual: json!(format!("fails on {what}")) })
            .collect()
    };
    let mut mismatches: Vec<Mismatch> = elems
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, x)| report("basis key", vec![0, i as u32], unary_failures(x)))
        .collect();
    mismatches.extend(
        pairs
            .par_iter()
            .flat_map_iter(|&(i, j)| report("basis pair", vec![1, i as u32, j as u32], binary_failures(&elems[i], &elems[j])))
            .collect::<Vec<_>>(),
    );
    mismatches.extend(
        random
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, x)| {
                let y = &random[(i + 1) % random.len()];
                let mut f = unary_failures(x);
                f.extend(binary_failures(x, y));
                report("random element", vec![2, i as u32], f)
            })
            .collect::<Vec<_>>(),
    );
    VerificationReport::new(format!("hopf/{alg}"), vec![max_weight, samples as u32], mismatches)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_theorem1_instances() {
        for alg in AlgebraId::ALL {
            let r = verify_theorem1(alg, Truncation::new(4, 2, 3)).unwrap();
            assert!(r.pass, "{alg}: {:?}", r.mismatches.first());
            assert!(verify_theorem1_circ(alg, 4, 3).unwrap().pass);
        }
    }

    #[test]
    fn worked_coefficient_of_theorem1() {
        let r = verify_theorem1(AlgebraId::NCSF2, Truncation::new(3, 2, 1)).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn cor2_forms() {
        assert!(verify_cor2(Truncation::new(5, 0, 5), Cor2Form::Corrected).unwrap().pass);
        assert!(!verify_cor2(Truncation::new(5, 0, 5), Cor2Form::Literal).unwrap().pass);
    }

    #[test]
    fn small_sweeps() {
        assert!(verify_binomial_identity(2, 3, 3).pass);
        assert!(verify_ab_remark(AlgebraId::NCSF2, Truncation::new(3, 2, 2)).pass);
        assert!(verify_ab_remark(AlgebraId::Sym2, Truncation::new(3, 2, 2)).pass);
        assert!(stirling_specializations(5).pass);
        assert!(verify_cnk_closed(5).pass);
        assert!(verify_primitivity(AlgebraId::NCSF2, 4, 3).pass);
        assert!(verify_routes(4).pass);
        assert!(verify_counts(5, 4).pass);
        assert!(verify_hopf(AlgebraId::WSym2, 3, 5, 1).pass);
    }

    #[test]
    fn zassenhaus_report_locates_the_split() {
        let r = verify_zassenhaus(5, 2).unwrap();
        let bad: Vec<Vec<u32>> = r.mismatches.iter().map(|m| m.exp.clone()).collect();
        assert_eq!(bad, vec![vec![5, 2], vec![5, 3]]);
    }

    #[test]
    fn report_json_shape() {
        let r = VerificationReport::new("x", vec![1, 2, 3], vec![]);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"identity":"x","caps":[1,2,3],"pass":true,"mismatches":[]}"#);
    }
}
