//! Closed-form side: Eulerian numbers, colored-cycle counting polynomials, the
//! exponential generating function of the order-`m` distribution, its prime and
//! `m = 2` specializations, and explicit coefficient sums for involutions.
//!
//! Notation: `H_{r,s,n}^{(m)}(u,v,w) = sum u^fix v^exc_A w^csum` over `sigma` in
//! `G_{r,s,n}` with `sigma^m = 1`, and `H_{r,s}^{(m)}(x) = sum_n H_n x^n / n!`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{param, Error, Result};
use crate::poly::{factorial, EgfSeries, MPoly};

/// Binomial coefficient extended to a negative upper argument by
/// `C(n, k) = (-1)^k C(k - n - 1, k)`; zero for `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binomial(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Triangle of Eulerian numbers `A[d][k]`, `0 <= k <= d <= max_d`, from
/// `A(d,k) = k A(d-1,k) + (d-k+1) A(d-1,k-1)` with `A(0,0) = A(1,1) = 1`.
///
/// `A(d,k)` counts permutations of `[d]` with `k - 1` excedances, and also the
/// `(d+1)`-cycles of `S_{d+1}` with `k` excedances.
#[derive(Clone, Debug)]
pub struct EulerianTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    pub fn new(max_d: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for d in 1..=max_d {
            let prev = &rows[d - 1];
            let get = |k: usize| prev.get(k).cloned().unwrap_or_else(BigInt::zero);
            let mut row = vec![BigInt::zero(); d + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                *slot = get(k) * k + get(k - 1) * (d - k + 1);
            }
            rows.push(row);
        }
        EulerianTable { rows }
    }

    pub fn max_d(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, d: usize, k: i64) -> BigInt {
        if k < 0 || d > self.max_d() {
            return BigInt::zero();
        }
        self.rows[d].get(k as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn row(&self, d: usize) -> &[BigInt] {
        &self.rows[d]
    }
}

pub fn eulerian(d: usize, k: i64) -> BigInt {
    EulerianTable::new(d).get(d, k)
}

/// `[x^t] (x + .. + x^{r-1})^i (1 + .. + x^{r-1})^base` by multiplying out.
pub fn u_coeff_by_expansion(r: u32, base: u32, i: u32, t: u32) -> BigInt {
    assert!(r >= 1, "number of colors must be positive");
    let r = r as usize;
    let mut poly = vec![BigInt::one()];
    let mut times = |lo: usize| {
        let mut next = vec![BigInt::zero(); poly.len() + r - 1];
        for (a, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for e in lo..r {
                next[a + e] += c;
            }
        }
        poly = next;
    };
    for _ in 0..i {
        times(1);
    }
    for _ in 0..base {
        times(0);
    }
    poly.get(t as usize).cloned().unwrap_or_else(BigInt::zero)
}

/// The same coefficient from the alternating double sum
/// `sum_j (-1)^{i-j} C(i,j) sum_l (-1)^l C(base+j, l) C(base+j+t-l r-1, t-l r)`.
pub fn u_coeff_closed(r: u32, base: u32, i: u32, t: u32) -> BigInt {
    assert!(r >= 1, "number of colors must be positive");
    let (r, base, i, t) = (r as i64, base as i64, i as i64, t as i64);
    let mut total = BigInt::zero();
    for j in 0..=i {
        let big = base + j;
        let mut inner = BigInt::zero();
        let mut l = 0;
        while l <= big && l * r <= t {
            let term = binomial(big, l) * binomial(big + t - l * r - 1, t - l * r);
            if l % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
            l += 1;
        }
        let term = binomial(i, j) * inner;
        if (i - j) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Number of ways to color a `d`-cycle with `k` excedances so that `i` of the
/// excedance positions get a nonzero color and the colors sum to `t`;
/// `base = d - k`. Evaluated by both routes, which must agree.
pub fn u_coeff(r: u32, base: u32, i: u32, t: u32) -> Result<BigInt> {
    let closed = u_coeff_closed(r, base, i, t);
    let direct = u_coeff_by_expansion(r, base, i, t);
    if closed != direct {
        return Err(Error::Consistency(format!(
            "U(r={r}, base={base}, i={i}, t={t}): alternating sum {closed} != expansion {direct}"
        )));
    }
    Ok(closed)
}

/// Colored `d`-cycles on a fixed `d`-set whose `m`-th power is the identity,
/// weighted `v^exc_A w^csum`:
/// `sum_k A(d-1,k) sum_i C(k,i) v^{k-i} sum_{r | t m/d} U(d-k, i, t) w^t`.
pub fn cycle_poly(m: u32, d: u32, r: u32) -> Result<MPoly> {
    if r == 0 || m == 0 {
        return param("r and m must be positive");
    }
    if d < 2 || m % d != 0 {
        return param(format!("cycle length d={d} must be at least 2 and divide m={m}"));
    }
    let table = EulerianTable::new(d as usize - 1);
    let stride = m / d;
    let mut out = MPoly::zero();
    for k in 1..d {
        let a = table.get(d as usize - 1, k as i64);
        for i in 0..=k {
            let weight = &a * binomial(k as i64, i as i64);
            for t in 0..=d * (r - 1) {
                if (t as u64 * stride as u64) % r as u64 != 0 {
                    continue;
                }
                let c = u_coeff(r, d - k, i, t)? * &weight;
                out.add_term([0, k - i, t], &BigRational::from_integer(c));
            }
        }
    }
    Ok(out)
}

fn divisors(m: u32) -> impl Iterator<Item = u32> {
    (1..=m).filter(move |d| m % d == 0)
}

/// `sum_{0 <= t < r, r | t m} u w^t`: the weight of one absolute fixed point.
fn fixed_point_weight(r: u32, m: u32) -> MPoly {
    (0..r)
        .filter(|&t| (t as u64 * m as u64) % r as u64 == 0)
        .map(|t| MPoly::term([1, 0, t], 1))
        .sum()
}

/// The exponent whose exponential is `H_{r,1}^{(m)}(x)`:
/// `x * sum_t u w^t + sum_{d | m, d >= 2} x^d / d! * cycle_poly(m, d, r)`.
pub fn h_exponent(r: u32, m: u32, trunc: usize) -> Result<EgfSeries> {
    if r == 0 || m == 0 {
        return param("r and m must be positive");
    }
    let mut f = EgfSeries::monomial(trunc, 1, fixed_point_weight(r, m));
    for d in divisors(m).filter(|&d| d >= 2 && d as usize <= trunc) {
        let term = cycle_poly(m, d, r)?.div_int(factorial(d));
        f = f.add(&EgfSeries::monomial(trunc, d as usize, term))?;
    }
    Ok(f)
}

/// `H_{r,1}^{(m)}(x; u, v, w)` truncated at `x^trunc`.
pub fn h_egf(r: u32, m: u32, trunc: usize) -> Result<EgfSeries> {
    h_exponent(r, m, trunc)?.exp()
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `lambda_{r,p}(w) = sum_{i<p} w^{i r / p}` when `p | r`, else `1`.
pub fn lambda_poly(r: u32, p: u32) -> Result<MPoly> {
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    if r % p != 0 {
        return Ok(MPoly::one());
    }
    Ok((0..p).map(|i| MPoly::term([0, 0, i * r / p], 1)).sum())
}

/// `H_{r,1}^{(p)}(x)` for prime `p`:
/// `exp{u x lambda_{r,p}(w) + x^p/p! sum_k A(p-1,k) sum_i C(k,i) v^{k-i} sum_j U(p-k, i, j r) w^{j r}}`.
pub fn h_egf_prime(r: u32, p: u32, trunc: usize) -> Result<EgfSeries> {
    if r == 0 {
        return param("r must be positive");
    }
    let lambda = lambda_poly(r, p)?;
    let mut f = EgfSeries::monomial(trunc, 1, &MPoly::u() * &lambda);
    if p as usize <= trunc {
        let table = EulerianTable::new(p as usize - 1);
        let mut b = MPoly::zero();
        for k in 1..p {
            let a = table.get(p as usize - 1, k as i64);
            for i in 0..=k {
                let weight = &a * binomial(k as i64, i as i64);
                let mut t = 0;
                while t <= p * (r - 1) {
                    let c = u_coeff_closed(r, p - k, i, t) * &weight;
                    b.add_term([0, k - i, t], &BigRational::from_integer(c));
                    t += r;
                }
            }
        }
        f = f.add(&EgfSeries::monomial(trunc, p as usize, b.div_int(factorial(p))))?;
    }
    f.exp()
}

fn check_divides(r: u32, s: u32) -> Result<()> {
    if r == 0 || s == 0 || r % s != 0 {
        return param(format!("s={s} does not divide r={r}"));
    }
    Ok(())
}

/// `H_{r,s,n}^{(m)}(u,v,w)`: the `x^n` coefficient of `H_{r,1}^{(m)}` restricted to
/// terms whose `w` exponent (the color sum) is a multiple of `s`.
pub fn h_poly(r: u32, s: u32, m: u32, n: u32) -> Result<MPoly> {
    check_divides(r, s)?;
    let series = h_egf(r, m, n as usize)?;
    Ok(series.extract(n as usize)?.filter_w_mod(s))
}

/// `H_{r,1,n}^{(m)}` from the recurrence on where the largest point `n` sits:
/// `H_n = H_{n-1} sum_t u w^t + sum_{d | m, d >= 2} C(n-1, d-1) H_{n-d} cycle_poly(m, d, r)`.
pub fn h_recurrence(r: u32, m: u32, n: u32) -> Result<MPoly> {
    if r == 0 || m == 0 {
        return param("r and m must be positive");
    }
    let fixed = fixed_point_weight(r, m);
    let cycles: Vec<(u32, MPoly)> = divisors(m)
        .filter(|&d| d >= 2 && d <= n)
        .map(|d| Ok((d, cycle_poly(m, d, r)?)))
        .collect::<Result<_>>()?;
    let mut h: Vec<MPoly> = vec![MPoly::one()];
    for k in 1..=n {
        let mut next = &h[k as usize - 1] * &fixed;
        for (d, poly) in cycles.iter().filter(|(d, _)| *d <= k) {
            let ways = binomial(k as i64 - 1, *d as i64 - 1);
            next = &next + &(&h[(k - d) as usize] * poly).scale_int(ways);
        }
        h.push(next);
    }
    Ok(h.pop().expect("nonempty"))
}

/// Which closed form of `H_{r,s}^{(2)}` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M2Case {
    /// `r` odd: `exp(u x + x^2 (v + (r-1) w^r) / 2)`.
    OddColors,
    /// `r` even and `s | r/2`: `exp(u x (1 + w^{r/2}) + x^2 (v + (r-1) w^r) / 2)`.
    HalfDivisible,
    /// `r` even and `s` does not divide `r/2`:
    /// `exp(u x + x^2 (v + (r-1) w^r) / 2) cosh(u x w^{r/2})`.
    HalfNotDivisible,
}

pub fn m2_case(r: u32, s: u32) -> Result<M2Case> {
    check_divides(r, s)?;
    Ok(if r % 2 == 1 {
        M2Case::OddColors
    } else if (r / 2) % s == 0 {
        M2Case::HalfDivisible
    } else {
        M2Case::HalfNotDivisible
    })
}

/// `v + (r-1) w^r`: the weight of a colored transposition squaring to the identity.
fn transposition_weight(r: u32) -> MPoly {
    &MPoly::v() + &MPoly::term([0, 0, r], r as i64 - 1)
}

/// Evaluates the closed form of the given case, without checking that the case
/// matches `(r, s)`.
pub fn h2_closed_for_case(case: M2Case, r: u32, trunc: usize) -> Result<EgfSeries> {
    if r == 0 {
        return param("r must be positive");
    }
    if case != M2Case::OddColors && r % 2 == 1 {
        return param(format!("case {case:?} needs an even number of colors, got r={r}"));
    }
    let pairs = EgfSeries::monomial(trunc, 2, transposition_weight(r).div_int(2));
    let ux = EgfSeries::monomial(trunc, 1, MPoly::u());
    match case {
        M2Case::OddColors => ux.add(&pairs)?.exp(),
        M2Case::HalfDivisible => {
            let fixed = &MPoly::one() + &MPoly::term([0, 0, r / 2], 1);
            EgfSeries::monomial(trunc, 1, &MPoly::u() * &fixed).add(&pairs)?.exp()
        }
        M2Case::HalfNotDivisible => {
            let base = ux.add(&pairs)?.exp()?;
            let half = EgfSeries::monomial(trunc, 1, MPoly::term([1, 0, r / 2], 1));
            let cosh = half.exp()?.add(&half.neg().exp()?)?.scale(&MPoly::one().div_int(2));
            base.mul(&cosh)
        }
    }
}

/// `H_{r,s}^{(2)}(x; u, v, w)` in closed form, case chosen by [`m2_case`].
pub fn h2_closed(r: u32, s: u32, trunc: usize) -> Result<EgfSeries> {
    h2_closed_for_case(m2_case(r, s)?, r, trunc)
}

fn require_half_not_divisible(r: u32, s: u32) -> Result<()> {
    if m2_case(r, s)? != M2Case::HalfNotDivisible {
        return param(format!(
            "formula holds for r even with s not dividing r/2; got r={r}, s={s}"
        ));
    }
    Ok(())
}

/// Compositions `n = k1 + 2 k2 + 2 k3` with the multinomial `n! / (k1! (2k2)! k3!)`.
fn involution_shapes(n: u32) -> impl Iterator<Item = (u32, u32, u32, BigInt)> {
    let nf = factorial(n);
    (0..=n / 2).flat_map(move |k3| {
        let nf = nf.clone();
        (0..=(n - 2 * k3) / 2).map(move |k2| {
            let k1 = n - 2 * k2 - 2 * k3;
            let multi = &nf / (factorial(k1) * factorial(2 * k2) * factorial(k3));
            (k1, k2, k3, multi)
        })
    })
}

fn exact_div(num: BigInt, den: BigInt, what: &str) -> Result<BigInt> {
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Consistency(format!("{what}: {num}/{den} is not an integer")));
    }
    Ok(q)
}

/// `H_{r,s,n}^{(2)}` as the explicit sum over `k1 + 2 k2 + 2 k3 = n` of
/// `n!/(k1! (2k2)! k3!) u^{k1+2k2} w^{r k2} (v + (r-1) w^r)^{k3} / 2^{k3}`,
/// valid for `r` even and `s` not dividing `r/2`.
pub fn h2_coefficient_formula(r: u32, s: u32, n: u32) -> Result<MPoly> {
    require_half_not_divisible(r, s)?;
    let pair = transposition_weight(r);
    let mut total = MPoly::zero();
    for (k1, k2, k3, multi) in involution_shapes(n) {
        let term = &MPoly::term([k1 + 2 * k2, 0, r * k2], multi) * &pair.pow(k3);
        total = &total + &term.div_int(BigInt::one() << k3);
    }
    total.integer_terms()?;
    Ok(total)
}

/// Involutions of `G_{r,s,n}` with `k` absolute fixed points and `exc_A = l`:
/// `sum_{k + 2 k3 = n, k1 + 2 k2 = k} C(k3, l) n!/(k1! (2k2)! k3!) (r-1)^{k3-l} / 2^{k3}`.
pub fn count_fix_exca(r: u32, s: u32, n: u32, k: u32, l: u32) -> Result<BigInt> {
    require_half_not_divisible(r, s)?;
    if k > n || (n - k) % 2 != 0 {
        return Ok(BigInt::zero());
    }
    let k3 = (n - k) / 2;
    if l > k3 {
        return Ok(BigInt::zero());
    }
    let nf = factorial(n);
    let mut total = BigInt::zero();
    for k2 in 0..=k / 2 {
        let k1 = k - 2 * k2;
        let multi = &nf / (factorial(k1) * factorial(2 * k2) * factorial(k3));
        let num = binomial(k3 as i64, l as i64) * multi * BigInt::from(r - 1).pow(k3 - l);
        total += exact_div(num, BigInt::one() << k3, "count_fix_exca term")?;
    }
    Ok(total)
}

/// Involutions of `G_{r,s,n}` with colored excedance number `r exc_A + csum = k`:
/// `sum_{k1 + 2k2 + 2k3 = n, r (k2 + k3) = k} n!/(k1! (2k2)! k3!) (r/2)^{k3}`.
///
/// The power of `r/2` counts the transpositions, each of which contributes
/// `(v + (r-1) w^r)/2 -> r/2` once `v = w^r`; pairs of fixed points colored `r/2`
/// contribute `w^r` with weight one.
pub fn count_excclr(r: u32, s: u32, n: u32, k: u32) -> Result<BigInt> {
    require_half_not_divisible(r, s)?;
    if k % r != 0 {
        return Ok(BigInt::zero());
    }
    let half = BigInt::from(r / 2);
    let total = involution_shapes(n)
        .filter(|(_, k2, k3, _)| r * (k2 + k3) == k)
        .map(|(_, _, k3, multi)| multi * half.pow(k3))
        .fold(BigInt::zero(), |a, b| a + b);
    debug_assert!(!total.is_negative());
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, 6), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(-1, 0), int(1));
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(-3, 2), int(6));
    }

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian(0, 0), int(1));
        assert_eq!(eulerian(1, 1), int(1));
        assert_eq!(eulerian(1, 0), int(0));
        assert_eq!(eulerian(2, 1), int(1));
        assert_eq!(eulerian(2, 2), int(1));
        assert_eq!(eulerian(3, 2), int(4));
        assert_eq!(eulerian(3, 4), int(0));
        let t = EulerianTable::new(4);
        assert_eq!(t.row(4), &[int(0), int(1), int(11), int(11), int(1)]);
    }

    #[test]
    fn u_coefficients() {
        for t in 0..4 {
            let expect = if t <= 1 { 1 } else { 0 };
            assert_eq!(u_coeff(2, 1, 0, t).unwrap(), int(expect));
        }
        assert_eq!(u_coeff(3, 0, 1, 2).unwrap(), int(1));
        for base in 0..4 {
            for i in 0..4 {
                for t in 0..4 {
                    let expect = if i == 0 && t == 0 { 1 } else { 0 };
                    assert_eq!(u_coeff(1, base, i, t).unwrap(), int(expect), "base={base} i={i} t={t}");
                }
            }
        }
    }

    #[test]
    fn cycle_poly_small_cases() {
        for r in 1..7 {
            let expect = transposition_weight(r);
            assert_eq!(cycle_poly(2, 2, r).unwrap(), expect, "r={r}");
        }
        assert_eq!(cycle_poly(2, 2, 1).unwrap(), MPoly::v());
        assert!(cycle_poly(4, 3, 2).is_err());
        assert!(cycle_poly(4, 1, 2).is_err());
    }

    #[test]
    fn cycle_poly_three_cycles() {
        for r in 1..7i64 {
            let v = MPoly::v;
            let wr = |e: u32, c: i64| MPoly::term([0, 0, e * r as u32], c);
            let expect = v().pow(2)
                + &v() * &(MPoly::one() + wr(1, 3 * (r - 1)))
                + wr(1, r * r - 1)
                + wr(2, (r - 1) * (r - 2));
            assert_eq!(cycle_poly(3, 3, r as u32).unwrap(), expect, "r={r}");
        }
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_poly(3, 2).unwrap(), MPoly::one());
        assert_eq!(lambda_poly(2, 2).unwrap(), MPoly::one() + MPoly::w());
        assert_eq!(
            lambda_poly(6, 3).unwrap(),
            MPoly::one() + MPoly::term([0, 0, 2], 1) + MPoly::term([0, 0, 4], 1)
        );
        assert!(matches!(lambda_poly(4, 4), Err(Error::Parameter(_))));
        assert!(matches!(lambda_poly(4, 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn theorem_small_cases() {
        let e = h_egf(3, 1, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(e.extract(n).unwrap(), MPoly::u().pow(n as u32));
        }
        let s3 = h_egf(1, 2, 3).unwrap().extract(3).unwrap();
        assert_eq!(s3, MPoly::u().pow(3) + MPoly::term([1, 1, 0], 3));

        let expect_exponent = EgfSeries::monomial(6, 1, &MPoly::u() * &(MPoly::one() + MPoly::w()))
            .add(&EgfSeries::monomial(6, 2, (MPoly::v() + MPoly::term([0, 0, 2], 1)).div_int(2)))
            .unwrap();
        assert_eq!(h_egf(2, 2, 6).unwrap(), expect_exponent.exp().unwrap());
        assert_eq!(
            h_egf(2, 2, 2).unwrap().extract(1).unwrap(),
            MPoly::u() + MPoly::term([1, 0, 1], 1)
        );
    }

    #[test]
    fn prime_specialization() {
        let odd = EgfSeries::monomial(6, 1, MPoly::u())
            .add(&EgfSeries::monomial(6, 2, (MPoly::v() + MPoly::term([0, 0, 3], 2)).div_int(2)))
            .unwrap()
            .exp()
            .unwrap();
        assert_eq!(h_egf_prime(3, 2, 6).unwrap(), odd);
        let cube = EgfSeries::monomial(7, 1, MPoly::u())
            .add(&EgfSeries::monomial(7, 3, (MPoly::v().pow(2) + MPoly::v()).div_int(6)))
            .unwrap()
            .exp()
            .unwrap();
        assert_eq!(h_egf_prime(1, 3, 7).unwrap(), cube);
        assert_eq!(h_egf_prime(2, 2, 8).unwrap(), h_egf(2, 2, 8).unwrap());
        assert!(h_egf_prime(2, 4, 8).is_err());
    }

    #[test]
    fn h_poly_examples() {
        assert_eq!(h_poly(2, 1, 2, 3).unwrap(), h_egf(2, 2, 3).unwrap().extract(3).unwrap());
        assert_eq!(h_poly(2, 2, 2, 1).unwrap(), MPoly::u());
        let u2 = MPoly::u().pow(2);
        let expect = &u2 + &MPoly::term([2, 0, 2], 1) + MPoly::v() + MPoly::term([0, 0, 2], 1);
        assert_eq!(h_poly(2, 2, 2, 2).unwrap(), expect);
        assert!(matches!(h_poly(4, 3, 2, 2), Err(Error::Parameter(_))));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(h_recurrence(3, 4, 0).unwrap(), MPoly::one());
        assert_eq!(h_recurrence(1, 2, 2).unwrap(), MPoly::u().pow(2) + MPoly::v());
        let fix = MPoly::u() + MPoly::term([1, 0, 1], 1);
        let expect = fix.pow(2) + MPoly::v() + MPoly::term([0, 0, 2], 1);
        assert_eq!(h_recurrence(2, 2, 2).unwrap(), expect);
    }

    #[test]
    fn m2_cases() {
        assert_eq!(m2_case(3, 1).unwrap(), M2Case::OddColors);
        assert_eq!(m2_case(2, 1).unwrap(), M2Case::HalfDivisible);
        assert_eq!(m2_case(2, 2).unwrap(), M2Case::HalfNotDivisible);
        assert_eq!(m2_case(4, 2).unwrap(), M2Case::HalfDivisible);
        assert_eq!(m2_case(4, 4).unwrap(), M2Case::HalfNotDivisible);
        assert_eq!(m2_case(6, 2).unwrap(), M2Case::HalfNotDivisible);
        assert_eq!(m2_case(6, 3).unwrap(), M2Case::HalfDivisible);
        assert!(m2_case(6, 4).is_err());

        assert_eq!(h2_closed(3, 1, 6).unwrap(), h_egf(3, 2, 6).unwrap());
        assert_eq!(h2_closed(2, 1, 6).unwrap(), h_egf(2, 2, 6).unwrap());
        assert_eq!(h2_closed(2, 2, 4).unwrap().extract(1).unwrap(), MPoly::u());
        assert!(h2_closed_for_case(M2Case::HalfDivisible, 3, 4).is_err());
    }

    #[test]
    fn corrected_regime_is_enforced() {
        assert!(h2_coefficient_formula(3, 1, 2).is_err());
        assert!(h2_coefficient_formula(4, 2, 2).is_err());
        assert!(count_fix_exca(2, 1, 2, 0, 1).is_err());
        assert!(count_excclr(6, 3, 2, 6).is_err());
    }

    #[test]
    fn coefficient_formula_examples() {
        assert_eq!(h2_coefficient_formula(2, 2, 0).unwrap(), MPoly::one());
        assert_eq!(h2_coefficient_formula(2, 2, 1).unwrap(), MPoly::u());
        let expect = MPoly::u().pow(2) + MPoly::term([2, 0, 2], 1) + MPoly::v() + MPoly::term([0, 0, 2], 1);
        assert_eq!(h2_coefficient_formula(2, 2, 2).unwrap(), expect);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_fix_exca(2, 2, 1, 1, 0).unwrap(), int(1));
        assert_eq!(count_fix_exca(2, 2, 2, 0, 1).unwrap(), int(1));
        assert_eq!(count_fix_exca(2, 2, 2, 1, 0).unwrap(), int(0));
        assert_eq!(count_fix_exca(2, 2, 2, 3, 0).unwrap(), int(0));
        assert_eq!(count_excclr(2, 2, 1, 0).unwrap(), int(1));
        assert_eq!(count_excclr(2, 2, 2, 2).unwrap(), int(3));
        assert_eq!(count_excclr(2, 2, 2, 3).unwrap(), int(0));
        assert_eq!(count_excclr(2, 2, 2, 100).unwrap(), int(0));
        // G_{4,4,2}: identity, (2,2)-colored identity, and four transpositions
        assert_eq!(count_excclr(4, 4, 2, 0).unwrap(), int(1));
        assert_eq!(count_excclr(4, 4, 2, 4).unwrap(), int(5));
    }
}
