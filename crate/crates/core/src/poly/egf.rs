use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::MPoly;
use crate::error::{param, Error, Result};

/// Power series in `x` truncated after `x^trunc`, with [`MPoly`] coefficients.
///
/// Entry `n` holds the plain coefficient `[x^n]`; for an exponential generating
/// function `sum H_n x^n / n!` that is `H_n / n!`. Use [`EgfSeries::extract`] to
/// recover `H_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EgfSeries {
    coeffs: Vec<MPoly>,
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl EgfSeries {
    pub fn zero(trunc: usize) -> Self {
        EgfSeries {
            coeffs: vec![MPoly::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        EgfSeries::monomial(trunc, 0, MPoly::one())
    }

    /// `p * x^k`, or zero if `k` exceeds the truncation order.
    pub fn monomial(trunc: usize, k: usize, p: MPoly) -> Self {
        let mut s = EgfSeries::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = p;
        }
        s
    }

    /// Builds a series from plain coefficients `[x^0], [x^1], ...`; entries past
    /// `trunc` are dropped and missing ones are zero.
    pub fn from_coeffs(trunc: usize, coeffs: Vec<MPoly>) -> Self {
        let mut s = EgfSeries::zero(trunc);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// Builds `sum_n values[n] * x^n / n!`.
    pub fn from_egf_values(trunc: usize, values: Vec<MPoly>) -> Self {
        let coeffs = values
            .into_iter()
            .enumerate()
            .map(|(n, p)| p.div_int(factorial(n as u32)))
            .collect();
        EgfSeries::from_coeffs(trunc, coeffs)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Plain coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> &MPoly {
        &self.coeffs[n]
    }

    fn check_trunc(&self, other: &Self) -> Result<()> {
        if self.trunc() != other.trunc() {
            return param(format!(
                "truncation orders differ: {} vs {}",
                self.trunc(),
                other.trunc()
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_trunc(other)?;
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplies every coefficient by a polynomial in `u, v, w`.
    pub fn scale(&self, p: &MPoly) -> Self {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_trunc(other)?;
        let n = self.trunc();
        let mut out = EgfSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Formal derivative in `x`; the result is truncated one order lower.
    pub fn derivative(&self) -> Self {
        let n = self.trunc();
        if n == 0 {
            return EgfSeries::zero(0);
        }
        EgfSeries {
            coeffs: (1..=n).map(|k| self.coeffs[k].scale_int(k as u64)).collect(),
        }
    }

    /// Drops coefficients above `trunc`.
    pub fn truncate(&self, trunc: usize) -> Self {
        EgfSeries::from_coeffs(trunc, self.coeffs.clone())
    }

    /// `exp(f)` for `f` with zero constant term, from `g' = f' g`, `g(0) = 1`:
    /// `n g_n = sum_{k=1..n} k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(format!(
                "exponential needs a zero constant term, found {}",
                self.coeffs[0]
            )));
        }
        let n = self.trunc();
        let mut g = Vec::with_capacity(n + 1);
        g.push(MPoly::one());
        for i in 1..=n {
            let mut acc = MPoly::zero();
            for k in 1..=i {
                let f = &self.coeffs[k];
                if f.is_zero() {
                    continue;
                }
                acc = &acc + &(&f.scale_int(k as u64) * &g[i - k]);
            }
            g.push(acc.div_int(i as u64));
        }
        Ok(EgfSeries { coeffs: g })
    }

    /// `n! [x^n]`, which must have integer coefficients.
    pub fn extract(&self, n: usize) -> Result<MPoly> {
        if n > self.trunc() {
            return param(format!("index {n} exceeds truncation order {}", self.trunc()));
        }
        let p = self.coeffs[n].scale(&BigRational::from_integer(factorial(n as u32)));
        if !p.is_integral() {
            return Err(Error::Consistency(format!(
                "{n}! [x^{n}] = {p} has non-integer coefficients"
            )));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn exp_x(trunc: usize, sign: i64) -> EgfSeries {
        EgfSeries::from_egf_values(trunc, (0..=trunc).map(|n| MPoly::from_int(sign.pow(n as u32))).collect())
    }

    #[test]
    fn products() {
        let x = EgfSeries::monomial(4, 1, MPoly::one());
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2, EgfSeries::monomial(4, 2, MPoly::one()));
        let f = exp_x(5, 1);
        assert_eq!(EgfSeries::one(5).mul(&f).unwrap(), f);
        assert_eq!(exp_x(6, 1).mul(&exp_x(6, -1)).unwrap(), EgfSeries::one(6));
        assert!(matches!(x.mul(&EgfSeries::one(3)), Err(Error::Parameter(_))));
    }

    #[test]
    fn exponential() {
        assert_eq!(EgfSeries::zero(4).exp().unwrap(), EgfSeries::one(4));
        let ux = EgfSeries::monomial(3, 1, MPoly::u());
        let e = ux.exp().unwrap();
        for n in 0..=3 {
            assert_eq!(e.extract(n).unwrap(), MPoly::u().pow(n as u32));
        }
        assert_eq!(e.coeff(3), &MPoly::u().pow(3).scale(&q(1, 6)));
        assert!(matches!(EgfSeries::one(3).exp(), Err(Error::Domain(_))));
    }

    #[test]
    fn involutions_of_s3() {
        let f = EgfSeries::monomial(3, 1, MPoly::u())
            .add(&EgfSeries::monomial(3, 2, MPoly::v().scale(&q(1, 2))))
            .unwrap();
        let h3 = f.exp().unwrap().extract(3).unwrap();
        assert_eq!(h3, MPoly::u().pow(3) + MPoly::term([1, 1, 0], 3));
    }

    #[test]
    fn extraction_errors() {
        let half = EgfSeries::monomial(2, 0, MPoly::one().scale(&q(1, 2)));
        assert!(matches!(half.extract(0), Err(Error::Consistency(_))));
        assert!(matches!(half.extract(3), Err(Error::Parameter(_))));
    }

    #[test]
    fn derivative_drops_top_order() {
        let e = exp_x(4, 1);
        assert_eq!(e.derivative(), exp_x(3, 1));
        assert_eq!(EgfSeries::one(0).derivative(), EgfSeries::zero(0));
    }
}
