use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponents of `(u, v, w)`.
pub type Monomial = [u32; 3];

/// Sparse polynomial in `u, v, w` with exact rational coefficients.
///
/// Terms are kept in lexicographic order of their exponent triple and no
/// stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        MPoly::monomial([0, 0, 0], c)
    }

    pub fn from_int(c: i64) -> Self {
        MPoly::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(exps: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { terms }
    }

    /// `c * u^a v^b w^c` with an integer coefficient.
    pub fn term(exps: Monomial, c: impl Into<BigInt>) -> Self {
        MPoly::monomial(exps, BigRational::from_integer(c.into()))
    }

    pub fn u() -> Self {
        MPoly::term([1, 0, 0], 1)
    }

    pub fn v() -> Self {
        MPoly::term([0, 1, 0], 1)
    }

    pub fn w() -> Self {
        MPoly::term([0, 0, 1], 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: Monomial) -> BigRational {
        self.terms.get(&exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Monomial, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: impl Into<BigInt>) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Divides every coefficient by a nonzero integer.
    pub fn div_int(&self, d: impl Into<BigInt>) -> Self {
        let d: BigInt = d.into();
        assert!(!d.is_zero(), "division by zero");
        self.scale(&BigRational::new(BigInt::one(), d))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps exactly the terms whose `w` exponent is a multiple of `s`.
    pub fn filter_w_mod(&self, s: u32) -> Self {
        assert!(s >= 1, "modulus must be positive");
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k[2] % s == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Replaces `w` by `w^k`.
    pub fn stretch_w(&self, k: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0], e[1], e[2] * k], c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, u: &BigRational, v: &BigRational, w: &BigRational) -> BigRational {
        let pow = |x: &BigRational, e: u32| num_traits::pow(x.clone(), e as usize);
        self.terms
            .iter()
            .map(|(e, c)| c * pow(u, e[0]) * pow(v, e[1]) * pow(w, e[2]))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Value at `u = v = w = 1`.
    pub fn sum_of_coefficients(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Integer coefficients in canonical order, or a consistency error naming the
    /// first fractional term.
    pub fn integer_terms(&self) -> Result<Vec<(Monomial, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if c.is_integer() {
                    Ok((*e, c.to_integer()))
                } else {
                    Err(Error::Consistency(format!(
                        "coefficient {c} of u^{} v^{} w^{} is not an integer",
                        e[0], e[1], e[2]
                    )))
                }
            })
            .collect()
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn max_w_degree(&self) -> u32 {
        self.terms.keys().map(|e| e[2]).max().unwrap_or(0)
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;

    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        -&self
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Sub for MPoly {
    type Output = MPoly;

    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], &(x * y));
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;

    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |a, b| &a + &b)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Monomial, leading: bool) -> fmt::Result {
    let mut first = leading;
    for (name, k) in ["u", "v", "w"].iter().zip(e) {
        if *k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if *k == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    Ok(())
}

/// Canonical text form, e.g. `3*u*v + u^3` or `1/2*v - w^2`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let constant = *e == [0, 0, 0];
            if constant {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write_monomial(f, e, true)?;
            } else {
                write!(f, "{magnitude}*")?;
                write_monomial(f, e, true)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
