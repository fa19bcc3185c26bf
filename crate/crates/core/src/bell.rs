//! r-Bell polynomials in the three algebras and their generating series.
//!
//! `bell(r, n, k)` is the coefficient of `t^k` in `a_1^r (tB + D)^n`; it has
//! bidegree `(n + r, k + r)`. `bell_tilde(r, n, k)` is `a_1^r b_1^k D^n`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hopf::{AlgebraElement, AlgebraId, BasisKey};
use crate::operator::{apply_d, c_nk, OperatorPoly};
use crate::partition::stream_s;
use crate::series::{act, TruncatedSeries, Truncation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BellQuery {
    pub algebra: AlgebraId,
    pub r: u32,
    pub n: u32,
    pub k: u32,
}

impl BellQuery {
    pub fn new(algebra: AlgebraId, r: u32, n: u32, k: u32) -> Self {
        Self { algebra, r, n, k }
    }

    pub fn bidegree(&self) -> (u32, usize) {
        (self.n + self.r, (self.k + self.r) as usize)
    }
}

fn a1_power(alg: AlgebraId, r: u32) -> AlgebraElement {
    AlgebraElement::a(alg, 1).pow(r)
}

/// Operator route: expands `(tB + D)^n` on `a_1^r`, keeping one row per power of `t`.
pub fn bell(q: BellQuery) -> AlgebraElement {
    let alg = q.algebra;
    if q.k > q.n {
        return AlgebraElement::zero(alg);
    }
    let b1 = AlgebraElement::b(alg, 1);
    let mut rows = vec![a1_power(alg, q.r)];
    for step in 1..=q.n {
        let top = step.min(q.k) as usize;
        let next = (0..=top)
            .map(|j| {
                let mut e = rows.get(j).map_or_else(|| AlgebraElement::zero(alg), apply_d);
                if j >= 1 {
                    e = &e + &(&rows[j - 1] * &b1);
                }
                e
            })
            .collect();
        rows = next;
    }
    rows.swap_remove(q.k as usize)
}

/// Enumeration route: `Σ Φ^π` over the partition family, pushed to Sym²/NCSF² by ξ/Ξ.
pub fn bell_enum(q: BellQuery) -> AlgebraElement {
    let mut sum = AlgebraElement::zero(AlgebraId::WSym2);
    for p in stream_s(q.r, q.n, q.k) {
        sum = &sum + &AlgebraElement::from_key(BasisKey::Word(p));
    }
    match q.algebra {
        AlgebraId::WSym2 => sum,
        AlgebraId::NCSF2 => sum.xi_big().expect("WSym2 element"),
        AlgebraId::Sym2 => sum.xi_small().expect("WSym2 element"),
    }
}

/// `a_1^r b_1^k D^n`, of bidegree `(n + k + r, k + r)`.
pub fn bell_tilde(q: BellQuery) -> AlgebraElement {
    let alg = q.algebra;
    let start = &a1_power(alg, q.r) * &AlgebraElement::b(alg, 1).pow(q.k);
    (0..q.n).fold(start, |acc, _| apply_d(&acc))
}

fn op_monomial(caps: Truncation, e: [u32; 3], p: OperatorPoly) -> TruncatedSeries<OperatorPoly> {
    TruncatedSeries::monomial(caps, OperatorPoly::identity(), e, p)
}

fn unit_series(alg: AlgebraId, caps: Truncation) -> TruncatedSeries<AlgebraElement> {
    TruncatedSeries::one(caps, AlgebraElement::one(alg))
}

/// `exp(a_1 y)` as an element series.
fn a1_prefix(alg: AlgebraId, caps: Truncation) -> TruncatedSeries<AlgebraElement> {
    TruncatedSeries::monomial(caps, AlgebraElement::one(alg), [0, 1, 0], AlgebraElement::a(alg, 1))
        .exp()
        .expect("no constant term")
}

/// `exp(x(tB + D))`.
pub fn exp_x_tb_plus_d(caps: Truncation) -> TruncatedSeries<OperatorPoly> {
    op_monomial(caps, [1, 0, 1], OperatorPoly::b())
        .add(&op_monomial(caps, [1, 0, 0], OperatorPoly::d()))
        .and_then(|s| s.exp())
        .expect("same caps, no constant term")
}

/// `exp(B·m)` for a single marker monomial `m`.
fn exp_b(caps: Truncation, marker: [u32; 3]) -> TruncatedSeries<OperatorPoly> {
    op_monomial(caps, marker, OperatorPoly::b()).exp().expect("no constant term")
}

fn exp_xd(caps: Truncation) -> TruncatedSeries<OperatorPoly> {
    op_monomial(caps, [1, 0, 0], OperatorPoly::d()).exp().expect("no constant term")
}

/// `S(t,x,y) = exp(a_1 y) exp(x(tB + D))`; the coefficient of
/// `x^n/n! · y^r/r! · t^k` is `bell(r, n, k)`.
pub fn gf_s(alg: AlgebraId, caps: Truncation) -> TruncatedSeries<AlgebraElement> {
    act(&a1_prefix(alg, caps), &exp_x_tb_plus_d(caps))
}

/// `S°(t,x) = 1·exp(x(tB + D))`.
pub fn gf_s_circ(alg: AlgebraId, caps: Truncation) -> TruncatedSeries<AlgebraElement> {
    act(&unit_series(alg, caps), &exp_x_tb_plus_d(caps))
}

/// `S•(t,x,y) = exp(a_1 y) exp(tB) exp(xD)`, normalized by `x^n/n! · y^r/r! · t^k/k!`.
pub fn gf_s_bullet(alg: AlgebraId, caps: Truncation) -> TruncatedSeries<AlgebraElement> {
    let ops = exp_b(caps, [0, 0, 1]).mul(&exp_xd(caps)).expect("same caps");
    act(&a1_prefix(alg, caps), &ops)
}

/// `S*(x,y) = 1·exp(yB) exp(xD)`.
pub fn gf_s_star(alg: AlgebraId, caps: Truncation) -> TruncatedSeries<AlgebraElement> {
    let ops = exp_b(caps, [0, 1, 0]).mul(&exp_xd(caps)).expect("same caps");
    act(&unit_series(alg, caps), &ops)
}

/// `Z(x,t) = Π_{n=2}^{Nx} exp(x^n Σ_k t^k c_{n,k})`, as an operator series.
pub fn z_series(caps: Truncation) -> Result<TruncatedSeries<OperatorPoly>> {
    let mut z = TruncatedSeries::one(caps, OperatorPoly::identity());
    for n in 2..=caps.nx {
        let mut exponent = TruncatedSeries::zero(caps, OperatorPoly::identity());
        for k in 0..n {
            exponent.add_at([n, 0, k], c_nk(n, k)?);
        }
        z = z.mul(&exponent.exp()?)?;
    }
    Ok(z)
}

/// `1·Z(x,t)`.
pub fn z_on_one(alg: AlgebraId, caps: Truncation) -> Result<TruncatedSeries<AlgebraElement>> {
    Ok(act(&unit_series(alg, caps), &z_series(caps)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::AlgebraId::{NCSF2, Sym2, WSym2};
    use crate::scalar::int;

    fn ncsf_word(letters: &[(u32, bool)]) -> AlgebraElement {
        letters
            .iter()
            .map(|&(i, is_a)| if is_a { AlgebraElement::a(NCSF2, i) } else { AlgebraElement::b(NCSF2, i) })
            .fold(AlgebraElement::one(NCSF2), |acc, g| &acc * &g)
    }

    #[test]
    fn worked_b_five_four() {
        let got = bell(BellQuery::new(NCSF2, 2, 3, 2));
        let expected = &(&(&ncsf_word(&[(2, true), (1, true), (1, false), (1, false)]).scale(&int(3))
            + &ncsf_word(&[(1, true), (2, true), (1, false), (1, false)]).scale(&int(3)))
            + &ncsf_word(&[(1, true), (1, true), (2, false), (1, false)]).scale(&int(2)))
            + &ncsf_word(&[(1, true), (1, true), (1, false), (2, false)]);
        assert_eq!(got, expected);
    }

    #[test]
    fn classical_b_three_two() {
        let got = bell(BellQuery::new(Sym2, 0, 3, 2));
        let expected = (&AlgebraElement::b(Sym2, 1) * &AlgebraElement::b(Sym2, 2)).scale(&int(3));
        assert_eq!(got, expected);
    }

    #[test]
    fn trivial_cases() {
        for alg in AlgebraId::ALL {
            assert_eq!(bell(BellQuery::new(alg, 0, 0, 0)), AlgebraElement::one(alg));
            assert_eq!(bell_enum(BellQuery::new(alg, 0, 0, 0)), AlgebraElement::one(alg));
            assert!(bell(BellQuery::new(alg, 1, 2, 3)).is_zero());
        }
    }

    #[test]
    fn routes_agree_small() {
        for alg in AlgebraId::ALL {
            for r in 0..=2 {
                for n in 0..=4 {
                    for k in 0..=n {
                        let q = BellQuery::new(alg, r, n, k);
                        let b = bell(q);
                        assert_eq!(b, bell_enum(q), "{q:?}");
                        let (w, l) = q.bidegree();
                        assert!(b.is_bihomogeneous(w, l));
                    }
                }
            }
        }
    }

    #[test]
    fn tilde_examples() {
        let q = BellQuery::new(NCSF2, 2, 1, 2);
        let expected = &(&(&ncsf_word(&[(2, true), (1, true), (1, false), (1, false)])
            + &ncsf_word(&[(1, true), (2, true), (1, false), (1, false)]))
            + &ncsf_word(&[(1, true), (1, true), (2, false), (1, false)]))
            + &ncsf_word(&[(1, true), (1, true), (1, false), (2, false)]);
        assert_eq!(bell_tilde(q), expected);
        assert_eq!(bell_tilde(BellQuery::new(NCSF2, 2, 0, 1)), ncsf_word(&[(1, true), (1, true), (1, false)]));
        assert_eq!(bell_tilde(BellQuery::new(NCSF2, 2, 0, 0)), ncsf_word(&[(1, true), (1, true)]));
        assert!(bell_tilde(BellQuery::new(WSym2, 1, 2, 1)).is_bihomogeneous(4, 2));
    }

    #[test]
    fn generating_series_normalization() {
        let caps = Truncation::new(3, 2, 2);
        for alg in [Sym2, NCSF2] {
            let s = gf_s(alg, caps);
            for [n, r, k] in caps.exponents().collect::<Vec<_>>() {
                assert_eq!(s.extract_normalized(n, r, k, false).unwrap(), bell(BellQuery::new(alg, r, n, k)));
            }
            let circ = gf_s_circ(alg, caps);
            assert_eq!(circ, s.restrict(Truncation::new(3, 0, 2)).restrict(caps));
            let star = gf_s_star(alg, caps);
            for n in 0..=3 {
                for r in 0..=2 {
                    let got = star.extract_normalized(n, r, 0, false).unwrap();
                    let expected = bell(BellQuery::new(alg, r, n, 0)).substitute_a_by_b();
                    assert_eq!(got, expected);
                }
            }
            let bullet = gf_s_bullet(alg, caps);
            assert_eq!(bullet.extract_normalized(2, 1, 2, true).unwrap(), bell_tilde(BellQuery::new(alg, 1, 2, 2)));
        }
    }
}
