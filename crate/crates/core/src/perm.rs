//! Colored permutations `(z, tau)` in the wreath product `Z_r wr S_n`.
//!
//! An element stores a color vector `z` (residues mod `r`) and an underlying
//! permutation `tau` of `{1..n}`. Position `i` displays the letter `tau(i)` with
//! color `z_i`, so `(z, tau) = ((1,2,1,2), (3,1,2,4))` reads `3^[1] 1^[2] 2^[1] 4^[2]`.
//!
//! The extended action on the colored alphabet is `i^[j] -> tau(i)^[z_i + j]`.
//! The alphabet is ordered by the color order: a higher color is smaller, and
//! within a color digits compare as integers, so for `r = 3`
//! `1^[2] < 2^[2] < .. < n^[2] < 1^[1] < .. < n^[1] < 1 < .. < n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

/// An element of `G_{r,n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredPermutation {
    r: u32,
    colors: Vec<u32>,
    // zero-based images
    images: Vec<u32>,
}

/// `(fix, exc_A, csum)` of one element: the exponents of `u`, `v` and `w` it contributes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StatTriple {
    pub fix: u32,
    pub exc_a: u32,
    pub csum: u32,
}

/// Parameters `(r, s, n, m)` naming the set of `sigma` in `G_{r,s,n}` with `sigma^m = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawGroupSpec")]
pub struct GroupSpec {
    r: u32,
    s: u32,
    n: u32,
    m: u32,
}

#[derive(Deserialize)]
struct RawGroupSpec {
    r: u32,
    s: u32,
    n: u32,
    m: u32,
}

impl TryFrom<RawGroupSpec> for GroupSpec {
    type Error = Error;

    fn try_from(raw: RawGroupSpec) -> Result<Self> {
        GroupSpec::new(raw.r, raw.s, raw.n, raw.m)
    }
}

impl GroupSpec {
    pub fn new(r: u32, s: u32, n: u32, m: u32) -> Result<Self> {
        if r == 0 || s == 0 || m == 0 {
            return param(format!("r, s and m must be positive (r={r}, s={s}, m={m})"));
        }
        if r % s != 0 {
            return param(format!("s={s} does not divide r={r}"));
        }
        Ok(GroupSpec { r, s, n, m })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `|G_{r,n}| = r^n * n!`, the size of the ambient group that enumeration walks.
    pub fn ambient_order(&self) -> u128 {
        let mut total: u128 = 1;
        for k in 1..=self.n as u128 {
            total = total.saturating_mul(k).saturating_mul(self.r as u128);
        }
        total
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, s={}, m={}, n={})", self.r, self.s, self.m, self.n)
    }
}

/// Sort key of the letter `digit^[color]` under the color order.
#[inline]
fn letter_key(r: u32, digit: u32, color: u32) -> (u32, u32) {
    (r - 1 - color, digit)
}

impl ColoredPermutation {
    /// Builds `(z, tau)` from a color vector and the one-line form of `tau` on `{1..n}`.
    pub fn new(r: u32, colors: Vec<u32>, tau: Vec<usize>) -> Result<Self> {
        if r == 0 {
            return param("number of colors must be positive");
        }
        if colors.len() != tau.len() {
            return param(format!(
                "color vector has length {} but permutation has length {}",
                colors.len(),
                tau.len()
            ));
        }
        if let Some(c) = colors.iter().find(|&&c| c >= r) {
            return param(format!("color {c} is not a residue mod {r}"));
        }
        let n = tau.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &t in &tau {
            if t == 0 || t > n || seen[t - 1] {
                return param(format!("{tau:?} is not a permutation of 1..{n}"));
            }
            seen[t - 1] = true;
            images.push((t - 1) as u32);
        }
        Ok(ColoredPermutation { r, colors, images })
    }

    pub(crate) fn from_raw(r: u32, colors: Vec<u32>, images: Vec<u32>) -> Self {
        debug_assert_eq!(colors.len(), images.len());
        ColoredPermutation { r, colors, images }
    }

    /// Replaces colors and zero-based images in place; lengths must match `n`.
    pub(crate) fn overwrite(&mut self, colors: &[u32], images: &[u32]) {
        self.colors.copy_from_slice(colors);
        self.images.copy_from_slice(images);
    }

    pub fn identity(r: u32, n: usize) -> Self {
        assert!(r > 0, "number of colors must be positive");
        ColoredPermutation {
            r,
            colors: vec![0; n],
            images: (0..n as u32).collect(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// The color vector `z`.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// One-line form of the underlying permutation `|sigma|`, values in `1..=n`.
    pub fn tau(&self) -> Vec<usize> {
        self.images.iter().map(|&t| t as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(|&c| c == 0)
            && self.images.iter().enumerate().all(|(i, &t)| t as usize == i)
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n() != other.n() {
            return param(format!(
                "cannot compose elements of G_{{{},{}}} and G_{{{},{}}}",
                self.r,
                self.n(),
                other.r,
                other.n()
            ));
        }
        Ok(())
    }

    /// Group product `(z, tau) . (z', tau') = (z + z' o tau^{-1}, tau o tau')`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut out = ColoredPermutation::identity(self.r, self.n());
        compose_into(self, other, &mut out);
        Ok(out)
    }

    /// `self^m`; `self^0` is the identity.
    pub fn power(&self, m: u64) -> Self {
        let mut result = ColoredPermutation::identity(self.r, self.n());
        let mut base = self.clone();
        let mut scratch = result.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                compose_into(&result, &base, &mut scratch);
                std::mem::swap(&mut result, &mut scratch);
            }
            e >>= 1;
            if e > 0 {
                compose_into(&base, &base, &mut scratch);
                std::mem::swap(&mut base, &mut scratch);
            }
        }
        result
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut colors = vec![0; n];
        let mut images = vec![0; n];
        for (i, &t) in self.images.iter().enumerate() {
            images[t as usize] = i as u32;
        }
        for j in 0..n {
            let c = self.colors[self.images[j] as usize];
            colors[j] = (self.r - c) % self.r;
        }
        ColoredPermutation::from_raw(self.r, colors, images)
    }

    /// Smallest `k >= 1` with `self^k = 1`.
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose(self).expect("same group");
            k += 1;
        }
        k
    }

    /// Whether `self^m` is the identity, decided by computing the power.
    pub fn order_divides(&self, m: u64) -> bool {
        self.power(m).is_identity()
    }

    /// Same predicate as [`order_divides`](Self::order_divides), decided from the cycle
    /// structure: every cycle length `d` divides `m` and `r` divides `t * (m / d)`
    /// where `t` is the color sum along the cycle.
    pub fn order_divides_by_cycles(&self, m: u64) -> bool {
        if m == 0 {
            return true;
        }
        let r = self.r as u64;
        self.cycles().iter().all(|cycle| {
            let d = cycle.len() as u64;
            let t: u64 = cycle.iter().map(|&i| self.colors[i] as u64).sum();
            m % d == 0 && (t * (m / d)) % r == 0
        })
    }

    /// Cycles of `tau` as zero-based index lists, each starting at its smallest point.
    fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type of `tau`, listed in order of each cycle's smallest point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Sum of the colors as ordinary integers.
    pub fn csum(&self) -> u32 {
        self.colors.iter().sum()
    }

    /// Number of absolute fixed points, `tau(i) = i` with any color.
    pub fn fix_count(&self) -> u32 {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &t)| t as usize == i)
            .count() as u32
    }

    /// `Exc_A`: positions `i` in `[n-1]` with `sigma(i) > i` in the color order.
    /// Returned one-based.
    pub fn exc_a_set(&self) -> Vec<usize> {
        let n = self.n();
        (0..n.saturating_sub(1))
            .filter(|&i| {
                let image = letter_key(self.r, self.images[i], self.colors[i]);
                image > letter_key(self.r, i as u32, 0)
            })
            .map(|i| i + 1)
            .collect()
    }

    pub fn exc_a(&self) -> u32 {
        self.exc_a_set().len() as u32
    }

    /// Excedance number of the extended bijection on all `r * n` colored letters,
    /// compared in the color order.
    pub fn exc_full(&self) -> u32 {
        let r = self.r;
        let mut count = 0;
        for j in 0..r {
            for (i, (&t, &z)) in self.images.iter().zip(&self.colors).enumerate() {
                let image = letter_key(r, t, (z + j) % r);
                if image > letter_key(r, i as u32, j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Colored excedance number `r * exc_A + csum`.
    pub fn exc_clr(&self) -> u32 {
        self.r * self.exc_a() + self.csum()
    }

    /// Membership in `G_{r,s,n}`: `csum = 0 (mod s)`.
    pub fn is_member(&self, s: u32) -> Result<bool> {
        if s == 0 || self.r % s != 0 {
            return param(format!("s={s} does not divide r={}", self.r));
        }
        Ok(self.csum() % s == 0)
    }

    pub fn stats(&self) -> StatTriple {
        StatTriple {
            fix: self.fix_count(),
            exc_a: self.exc_a(),
            csum: self.csum(),
        }
    }

    /// Parses the one-line form produced by `Display`, e.g. `3^[1] 1^[2] 2 4^[2]`.
    pub fn parse(r: u32, text: &str) -> Result<Self> {
        let mut colors = Vec::new();
        let mut tau = Vec::new();
        for token in text.split_whitespace() {
            let (digit, color) = match token.split_once("^[") {
                Some((d, rest)) => {
                    let c = rest
                        .strip_suffix(']')
                        .ok_or_else(|| Error::Parameter(format!("malformed letter {token:?}")))?;
                    (d, c)
                }
                None => (token, "0"),
            };
            let digit: usize = digit
                .parse()
                .map_err(|_| Error::Parameter(format!("malformed digit in {token:?}")))?;
            let color: u32 = color
                .parse()
                .map_err(|_| Error::Parameter(format!("malformed color in {token:?}")))?;
            tau.push(digit);
            colors.push(color);
        }
        ColoredPermutation::new(r, colors, tau)
    }
}

/// Writes `a . b` into `out`, reusing its buffers. All three must share `r` and `n`.
pub(crate) fn compose_into(a: &ColoredPermutation, b: &ColoredPermutation, out: &mut ColoredPermutation) {
    let r = a.r;
    let n = a.images.len();
    out.r = r;
    out.colors.resize(n, 0);
    out.images.resize(n, 0);
    // z'_{tau^{-1}(i)}: position j of b lands at a.tau(j)
    for j in 0..n {
        let i = a.images[j] as usize;
        out.colors[i] = b.colors[j];
    }
    for i in 0..n {
        out.colors[i] = (a.colors[i] + out.colors[i]) % r;
        out.images[i] = a.images[b.images[i] as usize];
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&t, &c)) in self.images.iter().zip(&self.colors).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if c == 0 {
                write!(f, "{}", t + 1)?;
            } else {
                write!(f, "{}^[{}]", t + 1, c)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(r: u32, z: &[u32], tau: &[usize]) -> ColoredPermutation {
        ColoredPermutation::new(r, z.to_vec(), tau.to_vec()).unwrap()
    }

    /// The G_{3,4} element 1^[1] 3^[2] 2 4^[2].
    fn g34() -> ColoredPermutation {
        cp(3, &[1, 2, 0, 2], &[1, 3, 2, 4])
    }

    /// The G_{3,3} element 2 1^[1] 3^[2].
    fn g33() -> ColoredPermutation {
        cp(3, &[0, 1, 2], &[2, 1, 3])
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ColoredPermutation::new(3, vec![3], vec![1]).is_err());
        assert!(ColoredPermutation::new(3, vec![0, 0], vec![1, 1]).is_err());
        assert!(ColoredPermutation::new(3, vec![0], vec![1, 2]).is_err());
        assert!(ColoredPermutation::new(0, vec![], vec![]).is_err());
    }

    #[test]
    fn compose_follows_product_rule() {
        let a = cp(3, &[1, 0], &[2, 1]);
        let b = cp(3, &[0, 2], &[2, 1]);
        let c = a.compose(&b).unwrap();
        // z_i = a.z_i + b.z_{a.tau^{-1}(i)} evaluated by hand
        let a_inv = [1usize, 0];
        let expect: Vec<u32> = (0..2).map(|i| (a.colors()[i] + b.colors()[a_inv[i]]) % 3).collect();
        assert_eq!(expect, vec![0, 0]);
        assert_eq!(c, ColoredPermutation::identity(3, 2));

        let flip = cp(2, &[1], &[1]);
        assert!(flip.compose(&flip).unwrap().is_identity());

        let id = ColoredPermutation::identity(3, 4);
        assert_eq!(id.compose(&g34()).unwrap(), g34());
        assert_eq!(g34().compose(&id).unwrap(), g34());
    }

    #[test]
    fn compose_rejects_mismatch() {
        let a = ColoredPermutation::identity(3, 2);
        assert!(matches!(a.compose(&ColoredPermutation::identity(2, 2)), Err(Error::Parameter(_))));
        assert!(matches!(a.compose(&ColoredPermutation::identity(3, 3)), Err(Error::Parameter(_))));
    }

    #[test]
    fn powers() {
        assert_eq!(g34().power(1), g34());
        assert!(g34().power(0).is_identity());
        assert!(cp(2, &[1], &[1]).power(2).is_identity());
        // a colored 3-cycle cubed carries the cycle color sum everywhere
        for z in [[0, 1, 2], [1, 1, 0], [2, 2, 2], [1, 0, 0]] {
            let c = cp(3, &z, &[2, 3, 1]);
            let cubed = c.compose(&c).unwrap().compose(&c).unwrap();
            let t = z.iter().sum::<u32>() % 3;
            assert_eq!(cubed.colors(), &[t, t, t]);
            assert_eq!(c.power(3), cubed);
        }
    }

    #[test]
    fn order_divides_examples() {
        assert!(ColoredPermutation::identity(4, 3).order_divides(5));
        let t = cp(1, &[0, 0], &[2, 1]);
        assert!(t.order_divides(2));
        assert!(!t.order_divides(3));
        let s = cp(4, &[1], &[1]);
        assert!(!s.order_divides(2));
        assert!(s.order_divides(4));
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn inverse_is_inverse() {
        let g = g34();
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().compose(&g).unwrap().is_identity());
    }

    #[test]
    fn statistics_of_worked_examples() {
        let a = g34();
        assert_eq!(a.csum(), 5);
        assert_eq!(a.fix_count(), 2);
        assert_eq!(a.cycle_lengths(), vec![1, 2, 1]);
        // tau(3) = 2 < 3 and positions 1, 2 carry colored images
        assert_eq!(a.exc_a_set(), Vec::<usize>::new());
        assert_eq!(a.exc_clr(), 5);
        assert_eq!(a.exc_full(), 5);
        assert!(!a.is_member(3).unwrap());

        let b = g33();
        assert_eq!(b.csum(), 3);
        assert_eq!(b.exc_a_set(), vec![1]);
        assert_eq!(b.exc_full(), 6);
        assert_eq!(b.exc_clr(), 6);
    }

    #[test]
    fn identity_statistics() {
        for r in 1..4 {
            let id = ColoredPermutation::identity(r, 4);
            assert_eq!(id.stats(), StatTriple { fix: 4, exc_a: 0, csum: 0 });
            assert_eq!(id.exc_full(), 0);
            assert_eq!(id.exc_clr(), 0);
            assert_eq!(id.cycle_lengths(), vec![1, 1, 1, 1]);
            assert!(id.is_member(r).unwrap());
        }
        let empty = ColoredPermutation::identity(3, 0);
        assert!(empty.is_identity());
        assert_eq!(empty.stats(), StatTriple::default());
        assert_eq!(empty.exc_full(), 0);
    }

    #[test]
    fn single_color_excedance_is_classical() {
        let p = cp(1, &[0; 5], &[3, 1, 5, 2, 4]);
        let classical = p.tau().iter().enumerate().filter(|&(i, &t)| t > i + 1).count() as u32;
        assert_eq!(p.exc_full(), classical);
        assert_eq!(p.exc_a(), classical);
    }

    #[test]
    fn n_cycle_has_no_fixed_points() {
        let c = cp(2, &[1, 0, 1, 1], &[2, 3, 4, 1]);
        assert_eq!(c.fix_count(), 0);
        assert_eq!(c.cycle_lengths(), vec![4]);
    }

    #[test]
    fn membership() {
        assert!(cp(3, &[1, 2], &[1, 2]).is_member(3).unwrap());
        assert!(matches!(g34().is_member(2), Err(Error::Parameter(_))));
    }

    #[test]
    fn display_and_parse() {
        let a = cp(3, &[1, 2, 1, 2], &[3, 1, 2, 4]);
        assert_eq!(a.to_string(), "3^[1] 1^[2] 2^[1] 4^[2]");
        assert_eq!(ColoredPermutation::parse(3, &a.to_string()).unwrap(), a);
        assert_eq!(g33().to_string(), "2 1^[1] 3^[2]");
        assert!(ColoredPermutation::parse(3, "1^[x] 2").is_err());
        assert!(ColoredPermutation::parse(3, "1^[1 2").is_err());
    }

    #[test]
    fn group_spec_validation() {
        assert!(GroupSpec::new(4, 2, 3, 2).is_ok());
        assert!(GroupSpec::new(4, 3, 3, 2).is_err());
        assert!(GroupSpec::new(0, 1, 3, 2).is_err());
        assert!(GroupSpec::new(2, 1, 3, 0).is_err());
        assert_eq!(GroupSpec::new(4, 1, 6, 1).unwrap().ambient_order(), 4096 * 720);
        let json = r#"{"r":4,"s":3,"n":1,"m":1}"#;
        assert!(serde_json::from_str::<GroupSpec>(json).is_err());
    }
}
