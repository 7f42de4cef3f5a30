//! Grid checks comparing the formula side against brute force, one cell per
//! parameter combination. Used by `crg verify`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::formulas::{self, M2Case};
use crate::oracle::{self, EnumerationPlan, DEFAULT_ELEMENT_CAP};
use crate::perm::{ColoredPermutation, GroupSpec};
use crate::poly::MPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Group,
    Euler,
    UCoeff,
    Theorem,
    M2,
    Corollaries,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Group => "group",
            Suite::Euler => "euler",
            Suite::UCoeff => "ucoeff",
            Suite::Theorem => "theorem",
            Suite::M2 => "m2",
            Suite::Corollaries => "corollaries",
            Suite::All => "all",
        }
    }
}

/// Grid bounds; `None` selects each suite's own default.
#[derive(Clone, Debug)]
pub struct GridBounds {
    pub rmax: Option<u32>,
    pub nmax: Option<u32>,
    pub mset: Option<Vec<u32>>,
    pub dmax: Option<u32>,
    pub cap: u128,
}

impl Default for GridBounds {
    fn default() -> Self {
        GridBounds {
            rmax: None,
            nmax: None,
            mset: None,
            dmax: None,
            cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub suite: &'static str,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.suite, self.label)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub cells: Vec<Cell>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Cell> {
        self.cells.iter().find(|c| !c.passed)
    }

    fn push(&mut self, suite: &'static str, label: String, passed: bool, detail: String) {
        self.cells.push(Cell {
            suite,
            label,
            passed,
            detail,
        });
    }
}

fn divisors(r: u32) -> impl Iterator<Item = u32> {
    (1..=r).filter(move |s| r % s == 0)
}

fn poly_mismatch(lhs_name: &str, lhs: &MPoly, rhs_name: &str, rhs: &MPoly) -> (bool, String) {
    if lhs == rhs {
        (true, String::new())
    } else {
        (false, format!("{lhs_name} = {lhs}; {rhs_name} = {rhs}"))
    }
}

pub fn run(suite: Suite, bounds: &GridBounds) -> Result<Report> {
    let mut report = Report::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Group {
        group_suite(bounds, &mut report)?;
    }
    if all || suite == Suite::Euler {
        euler_suite(bounds, &mut report)?;
    }
    if all || suite == Suite::UCoeff {
        ucoeff_suite(bounds, &mut report);
    }
    if all || suite == Suite::Theorem {
        theorem_suite(bounds, &mut report)?;
    }
    if all || suite == Suite::M2 {
        m2_suite(bounds, formulas::m2_case, &mut report)?;
    }
    if all || suite == Suite::Corollaries {
        corollary_suite(bounds, &mut report)?;
    }
    Ok(report)
}

/// Walks all of `G_{r,n}` (sigma^m = 1 holds for m = r * lcm(1..n)).
fn whole_group(r: u32, n: u32, cap: u128) -> Result<Vec<ColoredPermutation>> {
    let lcm = (1..=n.max(1)).fold(1u32, |acc, k| acc / gcd(acc, k) * k);
    let spec = GroupSpec::new(r, 1, n, r * lcm)?;
    Ok(oracle::enumerate(&EnumerationPlan::with_cap(spec, cap))?.collect())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Statistic identity, order test by cycles vs by powers, and `Exc_A` inside `Exc(|sigma|)`.
fn group_suite(bounds: &GridBounds, report: &mut Report) -> Result<()> {
    let rmax = bounds.rmax.unwrap_or(3);
    let nmax = bounds.nmax.unwrap_or(4);
    for r in 1..=rmax {
        for n in 0..=nmax {
            let elements = whole_group(r, n, bounds.cap)?;
            let mut bad = None;
            for sigma in &elements {
                if sigma.exc_full() != sigma.exc_clr() {
                    bad = Some(format!(
                        "{sigma}: exc = {} but r*exc_A + csum = {}",
                        sigma.exc_full(),
                        sigma.exc_clr()
                    ));
                    break;
                }
                if let Some(m) = (1..=6).find(|&m| sigma.order_divides(m) != sigma.order_divides_by_cycles(m)) {
                    bad = Some(format!("{sigma}: order tests disagree at m={m}"));
                    break;
                }
                let tau = sigma.tau();
                if sigma.exc_a_set().iter().any(|&i| tau[i - 1] <= i) {
                    bad = Some(format!("{sigma}: Exc_A not inside Exc(|sigma|)"));
                    break;
                }
            }
            let label = format!("r={r} n={n} ({} elements)", elements.len());
            report.push("group", label, bad.is_none(), bad.unwrap_or_default());
        }
    }
    Ok(())
}

fn euler_suite(bounds: &GridBounds, report: &mut Report) -> Result<()> {
    let dmax = bounds.dmax.unwrap_or(7);
    for d in 1..=dmax {
        let brute = oracle::brute_cyclic_exc(d)?;
        let table = formulas::EulerianTable::new(d as usize - 1);
        let mut detail = String::new();
        for k in 0..=d {
            let counted = BigInt::from(brute.get(&k).copied().unwrap_or(0));
            let eulerian = table.get(d as usize - 1, k as i64);
            if counted != eulerian {
                detail = format!("k={k}: {counted} cycles vs A({},{k}) = {eulerian}", d - 1);
                break;
            }
        }
        report.push("euler", format!("d={d}"), detail.is_empty(), detail);
    }
    Ok(())
}

fn ucoeff_suite(bounds: &GridBounds, report: &mut Report) {
    let rmax = bounds.rmax.unwrap_or(5);
    for r in 1..=rmax {
        let mut detail = String::new();
        'grid: for base in 0..=5 {
            for i in 0..=5 {
                for t in 0..=25 {
                    let closed = formulas::u_coeff_closed(r, base, i, t);
                    let direct = formulas::u_coeff_by_expansion(r, base, i, t);
                    if closed != direct {
                        detail = format!("base={base} i={i} t={t}: alternating sum {closed}, expansion {direct}");
                        break 'grid;
                    }
                }
            }
        }
        report.push("ucoeff", format!("r={r}"), detail.is_empty(), detail);
    }
}

/// Theorem vs oracle, theorem vs recurrence, and theorem vs the prime specialization.
fn theorem_suite(bounds: &GridBounds, report: &mut Report) -> Result<()> {
    let rmax = bounds.rmax.unwrap_or(4);
    let nmax = bounds.nmax.unwrap_or(6);
    let mset = bounds.mset.clone().unwrap_or_else(|| vec![1, 2, 3, 4, 6]);
    for r in 1..=rmax {
        for &m in &mset {
            let series = formulas::h_egf(r, m, nmax as usize)?;
            for n in 0..=nmax {
                let unfiltered = series.extract(n as usize)?;
                if !unfiltered.has_nonnegative_integer_coefficients() {
                    report.push(
                        "theorem",
                        format!("r={r} m={m} n={n} integrality"),
                        false,
                        format!("extracted {unfiltered}"),
                    );
                }
                let recurrence = formulas::h_recurrence(r, m, n)?;
                let (ok, detail) = poly_mismatch("recurrence", &recurrence, "theorem", &unfiltered);
                report.push("theorem", format!("r={r} s=1 m={m} n={n} recurrence"), ok, detail);
                for s in divisors(r) {
                    let spec = GroupSpec::new(r, s, n, m)?;
                    if spec.ambient_order() > bounds.cap {
                        continue;
                    }
                    let theorem = unfiltered.filter_w_mod(s);
                    let brute = oracle::brute_h(&EnumerationPlan::with_cap(spec, bounds.cap))?;
                    let (ok, detail) = poly_mismatch("theorem", &theorem, "oracle", &brute);
                    report.push("theorem", format!("r={r} s={s} m={m} n={n}"), ok, detail);
                }
            }
        }
        for p in [2u32, 3, 5] {
            let trunc = nmax.max(p) as usize;
            let ok = formulas::h_egf_prime(r, p, trunc)? == formulas::h_egf(r, p, trunc)?;
            let detail = if ok { String::new() } else { "prime form differs".to_string() };
            report.push("theorem", format!("r={r} p={p} prime form"), ok, detail);
        }
    }
    Ok(())
}

/// The `m = 2` closed form against the theorem, with the case rule passed in.
pub fn m2_suite(
    bounds: &GridBounds,
    case_rule: impl Fn(u32, u32) -> Result<M2Case>,
    report: &mut Report,
) -> Result<()> {
    let rmax = bounds.rmax.unwrap_or(6);
    let nmax = bounds.nmax.unwrap_or(6);
    for r in 1..=rmax {
        let theorem = formulas::h_egf(r, 2, nmax as usize)?;
        for s in divisors(r) {
            let closed = formulas::h2_closed_for_case(case_rule(r, s)?, r, nmax as usize)?;
            for n in 0..=nmax {
                let lhs = closed.extract(n as usize)?;
                let rhs = theorem.extract(n as usize)?.filter_w_mod(s);
                let (ok, detail) = poly_mismatch("closed", &lhs, "theorem", &rhs);
                report.push("m2", format!("r={r} s={s} m=2 n={n}"), ok, detail);
            }
        }
    }
    Ok(())
}

/// `(r, s)` pairs with `r` even and `s` not dividing `r/2`, `r <= rmax`.
pub fn corrected_regime(rmax: u32) -> Vec<(u32, u32)> {
    (2..=rmax)
        .step_by(2)
        .flat_map(|r| divisors(r).filter(move |s| (r / 2) % s != 0).map(move |s| (r, s)))
        .collect()
}

/// Counts by `(fix, exc_A)` and by `exc^Clr = r exc_A + csum` read off a polynomial.
pub fn counts_from_poly(h: &MPoly, r: u32) -> (BTreeMap<(u32, u32), BigInt>, BTreeMap<u32, BigInt>) {
    let mut by_fix_exc = BTreeMap::new();
    let mut by_clr = BTreeMap::new();
    for (e, c) in h.terms() {
        let c = c.to_integer();
        *by_fix_exc.entry((e[0], e[1])).or_insert_with(BigInt::zero) += &c;
        *by_clr.entry(r * e[1] + e[2]).or_insert_with(BigInt::zero) += &c;
    }
    (by_fix_exc, by_clr)
}

fn corollary_suite(bounds: &GridBounds, report: &mut Report) -> Result<()> {
    let rmax = bounds.rmax.unwrap_or(6);
    let nmax = bounds.nmax.unwrap_or(6);
    for (r, s) in corrected_regime(rmax) {
        let closed = formulas::h2_closed(r, s, nmax as usize)?;
        for n in 0..=nmax {
            let label = format!("r={r} s={s} m=2 n={n}");
            let extracted = closed.extract(n as usize)?;
            let explicit = formulas::h2_coefficient_formula(r, s, n)?;
            let (mut ok, mut detail) = poly_mismatch("explicit sum", &explicit, "closed", &extracted);
            let spec = GroupSpec::new(r, s, n, 2)?;
            let brute = if spec.ambient_order() <= bounds.cap {
                Some(oracle::brute_h(&EnumerationPlan::with_cap(spec, bounds.cap))?)
            } else {
                None
            };
            if ok {
                if let Some(b) = &brute {
                    (ok, detail) = poly_mismatch("explicit sum", &explicit, "oracle", b);
                }
            }
            let (fix_exc, clr) = counts_from_poly(brute.as_ref().unwrap_or(&extracted), r);
            for k in 0..=n + 1 {
                for l in 0..=n {
                    if !ok {
                        break;
                    }
                    let formula = formulas::count_fix_exca(r, s, n, k, l)?;
                    let expect = fix_exc.get(&(k, l)).cloned().unwrap_or_default();
                    if formula != expect {
                        ok = false;
                        detail = format!("fix={k} exc_A={l}: formula {formula}, expected {expect}");
                    }
                }
            }
            for k in 0..=r * n + 1 {
                if !ok {
                    break;
                }
                let formula = formulas::count_excclr(r, s, n, k)?;
                let expect = clr.get(&k).cloned().unwrap_or_default();
                if formula != expect {
                    ok = false;
                    detail = format!("exc^Clr={k}: formula {formula}, expected {expect}");
                }
            }
            let label = if brute.is_some() { label } else { format!("{label} (oracle skipped: cap)") };
            report.push("corollaries", label, ok, detail);
        }
    }
    Ok(())
}
