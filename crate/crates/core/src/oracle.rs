//! Exhaustive ground truth: walk all of `G_{r,n}`, keep the elements of
//! `G_{r,s,n}` with `sigma^m = 1`, and sum their statistics directly.
//!
//! Nothing here consults the generating-function side; membership is decided by
//! the color sum and `sigma^m = 1` by computing the power.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{param, Error, Result};
use crate::perm::{compose_into, ColoredPermutation, GroupSpec, StatTriple};
use crate::poly::MPoly;

pub const DEFAULT_ELEMENT_CAP: u128 = 5_000_000;

/// A group spec together with the largest ambient group we agree to walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationPlan {
    pub spec: GroupSpec,
    pub element_cap: u128,
}

impl EnumerationPlan {
    pub fn new(spec: GroupSpec) -> Self {
        EnumerationPlan {
            spec,
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }

    pub fn with_cap(spec: GroupSpec, element_cap: u128) -> Self {
        EnumerationPlan { spec, element_cap }
    }

    pub fn check(&self) -> Result<()> {
        let required = self.spec.ambient_order();
        if required > self.element_cap {
            return Err(Error::CapExceeded {
                required,
                cap: self.element_cap,
            });
        }
        Ok(())
    }
}

/// Rearranges `p` into the next permutation in lexicographic order.
fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Odometer step on the color vector, last position fastest.
fn next_colors(z: &mut [u32], r: u32) -> bool {
    for slot in z.iter_mut().rev() {
        *slot += 1;
        if *slot < r {
            return true;
        }
        *slot = 0;
    }
    false
}

fn tau_power_is_identity(tau: &[u32], m: u64) -> bool {
    (0..tau.len()).all(|start| {
        let mut i = start;
        for _ in 0..m {
            i = tau[i] as usize;
        }
        i == start
    })
}

/// Reusable buffers for deciding `sigma^m = 1` without allocating per element.
struct PowerScratch {
    identity: ColoredPermutation,
    acc: ColoredPermutation,
    base: ColoredPermutation,
    tmp: ColoredPermutation,
}

impl PowerScratch {
    fn new(r: u32, n: usize) -> Self {
        let id = ColoredPermutation::identity(r, n);
        PowerScratch {
            identity: id.clone(),
            acc: id.clone(),
            base: id.clone(),
            tmp: id,
        }
    }

    fn power_is_identity(&mut self, a: &ColoredPermutation, m: u64) -> bool {
        self.acc.clone_from(&self.identity);
        self.base.clone_from(a);
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                compose_into(&self.acc, &self.base, &mut self.tmp);
                std::mem::swap(&mut self.acc, &mut self.tmp);
            }
            e >>= 1;
            if e > 0 {
                compose_into(&self.base, &self.base, &mut self.tmp);
                std::mem::swap(&mut self.base, &mut self.tmp);
            }
        }
        self.acc.is_identity()
    }
}

/// Sequential walk over `G_{r,n}`: `tau` in lexicographic one-line order, then
/// colors in odometer order.
struct Walker {
    r: u32,
    tau: Vec<u32>,
    colors: Vec<u32>,
    started: bool,
    done: bool,
}

impl Walker {
    fn new(r: u32, n: usize) -> Self {
        Walker {
            r,
            tau: (0..n as u32).collect(),
            colors: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        if next_colors(&mut self.colors, self.r) || next_permutation(&mut self.tau) {
            return true;
        }
        self.done = true;
        false
    }

    /// Jumps past the remaining colorings of the current `tau`.
    fn skip_colorings(&mut self) {
        self.colors.iter_mut().for_each(|c| *c = self.r - 1);
    }

    fn current(&self) -> ColoredPermutation {
        ColoredPermutation::from_raw(self.r, self.colors.clone(), self.tau.clone())
    }
}

/// Stream of the elements of `G_{r,s,n}` with `sigma^m = 1`, in deterministic order.
pub struct Elements {
    walker: Walker,
    spec: GroupSpec,
    scratch: PowerScratch,
}

impl Iterator for Elements {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        while self.walker.advance() {
            let sigma = self.walker.current();
            if keep(&self.spec, &sigma, &mut self.scratch) {
                return Some(sigma);
            }
        }
        None
    }
}

fn keep(spec: &GroupSpec, sigma: &ColoredPermutation, scratch: &mut PowerScratch) -> bool {
    sigma.csum() % spec.s() == 0 && scratch.power_is_identity(sigma, spec.m() as u64)
}

pub fn enumerate(plan: &EnumerationPlan) -> Result<Elements> {
    plan.check()?;
    let spec = plan.spec;
    let n = spec.n() as usize;
    Ok(Elements {
        walker: Walker::new(spec.r(), n),
        spec,
        scratch: PowerScratch::new(spec.r(), n),
    })
}

/// Calls `f` on every element of the plan's set, reusing one buffer.
pub fn for_each_element(plan: &EnumerationPlan, mut f: impl FnMut(&ColoredPermutation)) -> Result<()> {
    plan.check()?;
    let spec = plan.spec;
    let n = spec.n() as usize;
    let mut walker = Walker::new(spec.r(), n);
    let mut scratch = PowerScratch::new(spec.r(), n);
    let mut sigma = ColoredPermutation::identity(spec.r(), n);
    let m = spec.m() as u64;
    while walker.advance() {
        // |sigma^m| = |sigma|^m, so a whole block of colorings can be skipped
        if walker.colors.iter().all(|&c| c == 0) && !tau_power_is_identity(&walker.tau, m) {
            walker.skip_colorings();
            continue;
        }
        sigma.overwrite(&walker.colors, &walker.tau);
        if keep(&spec, &sigma, &mut scratch) {
            f(&sigma);
        }
    }
    Ok(())
}

/// Number of elements with each statistic triple.
pub fn brute_distribution(plan: &EnumerationPlan) -> Result<BTreeMap<StatTriple, u64>> {
    let mut counts = BTreeMap::new();
    for_each_element(plan, |sigma| *counts.entry(sigma.stats()).or_insert(0) += 1)?;
    Ok(counts)
}

/// `H_{r,s,n}^{(m)}(u,v,w)` as the sum of `u^fix v^exc_A w^csum` over the set.
pub fn brute_h(plan: &EnumerationPlan) -> Result<MPoly> {
    let mut h = MPoly::zero();
    for (t, c) in brute_distribution(plan)? {
        h = &h + &MPoly::term([t.fix, t.exc_a, t.csum], c);
    }
    Ok(h)
}

/// Counts elements whose `(fix, exc_A, csum)` and `exc^Clr` satisfy `pred`.
pub fn brute_count(plan: &EnumerationPlan, pred: impl Fn(StatTriple, u32) -> bool) -> Result<BigInt> {
    let mut count: u64 = 0;
    for_each_element(plan, |sigma| {
        if pred(sigma.stats(), sigma.exc_clr()) {
            count += 1;
        }
    })?;
    Ok(BigInt::from(count))
}

pub const MAX_CYCLE_LENGTH: u32 = 8;

/// For each `k`, the number of `d`-cycles in `S_d` with `k` classical excedances.
pub fn brute_cyclic_exc(d: u32) -> Result<BTreeMap<u32, u64>> {
    if d == 0 || d > MAX_CYCLE_LENGTH {
        return param(format!("cycle length must be in 1..={MAX_CYCLE_LENGTH}, got {d}"));
    }
    let mut p: Vec<u32> = (0..d).collect();
    let mut counts = BTreeMap::new();
    loop {
        let sigma = ColoredPermutation::from_raw(1, vec![0; d as usize], p.clone());
        if sigma.cycle_lengths() == [d as usize] {
            let exc = p.iter().enumerate().filter(|&(i, &t)| t as usize > i).count() as u32;
            *counts.entry(exc).or_insert(0) += 1;
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    Ok(counts)
}
