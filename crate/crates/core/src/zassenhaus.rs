//! Order-by-order solution of
//! `exp(x(tB+D)) = exp(xtB)·exp(xD)·Π_{n≥2} exp(x^n Z_n(t))`
//! in the free algebra on `{D, B}`.

use crate::error::{Error, Result};
use crate::operator::OperatorPoly;
use crate::series::{TruncatedSeries, Truncation};

/// `Z_n` as a polynomial in `t`: `by_t_power[k]` is the coefficient of `t^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZassenhausFactor {
    pub n: u32,
    pub by_t_power: Vec<OperatorPoly>,
}

impl ZassenhausFactor {
    pub fn t_coeff(&self, k: u32) -> OperatorPoly {
        self.by_t_power.get(k as usize).cloned().unwrap_or_default()
    }
}

fn op_series(caps: Truncation, e: [u32; 3], p: OperatorPoly) -> TruncatedSeries<OperatorPoly> {
    TruncatedSeries::monomial(caps, OperatorPoly::identity(), e, p)
}

/// `Z_2, …, Z_max_n`, computed without reference to any closed form.
pub fn zassenhaus_oracle(max_n: u32) -> Result<Vec<ZassenhausFactor>> {
    if max_n < 2 {
        return Err(Error::OutOfRange(format!("oracle order must be at least 2, got {max_n}")));
    }
    let caps = Truncation::new(max_n, 0, max_n);
    let (b, d) = (OperatorPoly::b(), OperatorPoly::d());
    let target = op_series(caps, [1, 0, 1], b.clone()).add(&op_series(caps, [1, 0, 0], d.clone()))?.exp()?;
    let mut product = op_series(caps, [1, 0, 1], b).exp()?.mul(&op_series(caps, [1, 0, 0], d).exp()?)?;
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut by_t_power = Vec::new();
        let mut factor = TruncatedSeries::zero(caps, OperatorPoly::identity());
        for k in 0..=n {
            let z = target.coeff([n, 0, k]).sub(&product.coeff([n, 0, k]));
            factor.add_at([n, 0, k], z.clone());
            by_t_power.push(z);
        }
        product = product.mul(&factor.exp()?)?;
        out.push(ZassenhausFactor { n, by_t_power });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::AlgebraId;
    use crate::operator::{annihilates, c_nk};

    #[test]
    fn second_order() {
        let z = zassenhaus_oracle(2).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0].t_coeff(0).is_zero());
        assert_eq!(z[0].t_coeff(1), c_nk(2, 1).unwrap());
        assert!(z[0].t_coeff(2).is_zero());
    }

    #[test]
    fn no_pure_d_part() {
        for f in zassenhaus_oracle(5).unwrap() {
            assert!(f.t_coeff(0).is_zero(), "n={}", f.n);
            assert!(f.t_coeff(f.n).is_zero(), "n={}", f.n);
        }
    }

    #[test]
    fn agrees_with_cnk_through_order_four() {
        for f in zassenhaus_oracle(4).unwrap() {
            for k in 1..f.n {
                let diff = f.t_coeff(k).sub(&c_nk(f.n, k).unwrap());
                assert!(annihilates(AlgebraId::NCSF2, &diff, 4), "n={} k={k}", f.n);
            }
        }
    }

    #[test]
    fn extreme_t_powers_agree_at_order_five() {
        let z = zassenhaus_oracle(5).unwrap();
        let f = &z[3];
        for k in [1, 4] {
            let diff = f.t_coeff(k).sub(&c_nk(5, k).unwrap());
            assert!(annihilates(AlgebraId::NCSF2, &diff, 3), "k={k}");
        }
        // the middle powers do not: the factorization with c_nk stops
        // holding in NCSF2 at x^5
        let diff = f.t_coeff(2).sub(&c_nk(5, 2).unwrap());
        assert!(!annihilates(AlgebraId::NCSF2, &diff, 0));
        assert!(annihilates(AlgebraId::Sym2, &diff, 3));
    }
}
