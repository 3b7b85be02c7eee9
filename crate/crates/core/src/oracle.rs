//! Brute-force reference implementations.
//!
//! Nothing here uses the interval formulas, the band tables or the closure
//! iteration of the other modules: lengths come from repeated division,
//! bands from scanning, closures from saturating a membership table, and
//! numerical monoids from a search over gap sets. They are slow on purpose
//! and exist to be compared against the production paths.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ld::LdClass;
use crate::monoid::Submonoid;

/// Number of base-`b` digits of `z` by repeated Euclidean division.
pub fn brute_length(b: i64, z: i128) -> Result<u32> {
    if (-1..=1).contains(&b) {
        return Err(Error::InvalidBase(b));
    }
    if b > 0 && z < 0 {
        return Err(Error::NotRepresentable {
            base: b,
            value: z.to_string(),
        });
    }
    let b = i128::from(b);
    let modulus = b.abs();
    let mut digits = 0;
    let mut rest = z;
    loop {
        let digit = rest.rem_euclid(modulus);
        rest = (rest - digit) / b;
        digits += 1;
        if rest == 0 {
            return Ok(digits);
        }
    }
}

/// `{z : 0 < |z| <= scan_bound, z ∈ Z_b, ℓ_b(z) = n}`, increasing.
pub fn brute_delta(b: i64, n: u32, scan_bound: i128) -> Result<Vec<i128>> {
    let lo = if b < 0 { -scan_bound } else { 1 };
    let mut out = Vec::new();
    for z in lo..=scan_bound {
        if z != 0 && brute_length(b, z)? == n {
            out.push(z);
        }
    }
    Ok(out)
}

/// Brute lengths of every element of `Z_b ∩ [-scan_bound, scan_bound]`,
/// grouped by length.
pub fn brute_bands(b: i64, scan_bound: i128) -> Result<BTreeMap<u32, Vec<i128>>> {
    let lo = if b < 0 { -scan_bound } else { 1 };
    let lengths: Vec<(i128, u32)> = (lo..=scan_bound)
        .into_par_iter()
        .filter(|&z| z != 0)
        .map(|z| brute_length(b, z).map(|n| (z, n)))
        .collect::<Result<_>>()?;
    let mut bands: BTreeMap<u32, Vec<i128>> = BTreeMap::new();
    for (z, n) in lengths {
        bands.entry(n).or_default().push(z);
    }
    Ok(bands)
}

fn oracle_offsets(cls: LdClass) -> &'static [i64] {
    match cls {
        LdClass::L => &[-1],
        LdClass::LMinus => &[-3, -1, 1],
    }
}

/// Smallest member of `cls` containing `inputs`, by saturating `[0, cap]`
/// under addition and under `s + t + e` for `s, t >= 2` until nothing
/// changes. A value below `cap` is only ever derived from values at most
/// `cap`, so the saturated table is exact below `cap`.
pub fn brute_ld_closure(inputs: &[u64], cls: LdClass, cap: u64) -> Result<Submonoid> {
    if inputs.is_empty() {
        return Err(Error::PreconditionViolated("the input set is empty".into()));
    }
    if let Some(&a) = inputs.iter().find(|&&a| a == 0 || a >= cap) {
        return Err(Error::PreconditionViolated(format!(
            "{a} is outside [1, {cap})"
        )));
    }
    let size = cap as usize + 1;
    let mut member = vec![false; size];
    member[0] = true;
    for &a in inputs {
        member[a as usize] = true;
    }
    let offsets = oracle_offsets(cls);
    loop {
        let current: Vec<usize> = (0..size).filter(|&x| member[x]).collect();
        let mut changed = false;
        for (i, &s) in current.iter().enumerate() {
            for &t in &current[i..] {
                let mut candidates = vec![s as i64 + t as i64];
                if s >= 2 {
                    candidates.extend(offsets.iter().map(|e| s as i64 + t as i64 + e));
                }
                for v in candidates {
                    if (0..size as i64).contains(&v) && !member[v as usize] {
                        member[v as usize] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let gaps: Vec<u64> = (1..size)
        .filter(|&x| !member[x])
        .map(|x| x as u64)
        .collect();
    let last_gap = gaps.last().copied().unwrap_or(0);
    let multiplicity = (1..size).find(|&x| member[x]).unwrap_or(size) as u64;
    if cap - last_gap < multiplicity || last_gap >= cap / 2 {
        return Err(Error::CapTooSmall {
            cap,
            needed: 2 * (last_gap + 1),
        });
    }
    Submonoid::from_gaps(&gaps)
}

/// Every numerical monoid of genus at most `max_genus`, found by deciding
/// membership of `1, 2, …, 2·max_genus - 1` one at a time. Sums of members
/// are forced in; everything else branches into member or gap while the gap
/// budget lasts. Sorted by generator list.
pub fn brute_numerical_semigroups(max_genus: usize) -> Result<Vec<Submonoid>> {
    fn search(
        x: usize,
        top: usize,
        budget: usize,
        member: &mut Vec<bool>,
        gaps: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if x > top {
            out.push(gaps.clone());
            return;
        }
        let forced = (1..x).any(|a| member[a] && member[x - a]);
        member[x] = true;
        search(x + 1, top, budget, member, gaps, out);
        if !forced && gaps.len() < budget {
            member[x] = false;
            gaps.push(x as u64);
            search(x + 1, top, budget, member, gaps, out);
            gaps.pop();
        }
        member[x] = true;
    }

    let top = (2 * max_genus).saturating_sub(1);
    let mut member = vec![true; top + 1];
    let mut out = Vec::new();
    search(1, top, max_genus, &mut member, &mut Vec::new(), &mut out);
    let mut monoids = out
        .iter()
        .map(|gaps| Submonoid::from_gaps(gaps))
        .collect::<Result<Vec<_>>>()?;
    monoids.sort();
    Ok(monoids)
}

/// One failed comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl Violation {
    pub fn new(input: impl ToString, expected: impl ToString, got: impl ToString) -> Self {
        Violation {
            input: input.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

/// Outcome of a sweep. Serializes as `{"checked":n,"violations":[…],"ms":t}`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepReport {
    pub checked: u64,
    pub violations: Vec<Violation>,
    #[serde(rename = "ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl SweepReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self.elapsed += other.elapsed;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Per-input accumulator handed to sweep closures.
#[derive(Debug, Default)]
pub struct Tally {
    checked: u64,
    violations: Vec<Violation>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.checked += 1;
        if !ok {
            self.violations.push(violation());
        }
    }
}

/// Runs `check` for every value in `range` in parallel. Violations are
/// reported in range order.
pub fn sweep_range<F>(range: RangeInclusive<i64>, check: F) -> SweepReport
where
    F: Fn(i64, &mut Tally) + Sync,
{
    let start = Instant::now();
    let tallies: Vec<Tally> = range
        .into_par_iter()
        .map(|x| {
            let mut tally = Tally::default();
            check(x, &mut tally);
            tally
        })
        .collect();
    let mut report = SweepReport::default();
    for t in tallies {
        report.checked += t.checked;
        report.violations.extend(t.violations);
    }
    report.elapsed = start.elapsed();
    report
}

/// Like [`sweep_range`] over a slice of inputs.
pub fn sweep<T, F>(inputs: &[T], check: F) -> SweepReport
where
    T: Sync,
    F: Fn(&T, &mut Tally) + Sync,
{
    let start = Instant::now();
    let tallies: Vec<Tally> = inputs
        .par_iter()
        .map(|x| {
            let mut tally = Tally::default();
            check(x, &mut tally);
            tally
        })
        .collect();
    let mut report = SweepReport::default();
    for t in tallies {
        report.checked += t.checked;
        report.violations.extend(t.violations);
    }
    report.elapsed = start.elapsed();
    report
}

/// Compares claimed bands `band(n) = (lo, hi)` with scanned ones for every
/// `n` whose claimed band lies inside `[-scan_bound, scan_bound]`, and the
/// claimed count with the scanned size.
pub fn check_bands<B, C>(b: i64, scan_bound: i128, band: B, count: C) -> Result<SweepReport>
where
    B: Fn(u32) -> (i128, i128),
    C: Fn(u32) -> i128,
{
    let start = Instant::now();
    let scanned = brute_bands(b, scan_bound)?;
    let mut report = SweepReport::default();
    let mut n = 1;
    loop {
        let (lo, hi) = band(n);
        if lo < -scan_bound || hi > scan_bound {
            break;
        }
        let empty = Vec::new();
        let actual = scanned.get(&n).unwrap_or(&empty);
        let matches = !actual.is_empty()
            && actual.first() == Some(&lo)
            && actual.last() == Some(&hi)
            && actual.len() as i128 == hi - lo + 1;
        report.checked += 1;
        if !matches {
            report.violations.push(Violation::new(
                format!("b={b} n={n} band"),
                format!(
                    "[{}, {}] ({} values)",
                    actual.first().map_or("-".into(), i128::to_string),
                    actual.last().map_or("-".into(), i128::to_string),
                    actual.len()
                ),
                format!("[{lo}, {hi}]"),
            ));
        }
        report.checked += 1;
        if count(n) != actual.len() as i128 {
            report.violations.push(Violation::new(
                format!("b={b} n={n} count"),
                actual.len(),
                count(n),
            ));
        }
        n += 1;
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_by_division() {
        // 5 = 1 + 0·(-2) + 1·4: digits 1,0,1.
        assert_eq!(brute_length(-2, 5).unwrap(), 3);
        assert_eq!(brute_length(-2, -2).unwrap(), 2);
        assert_eq!(brute_length(10, 999).unwrap(), 3);
        assert_eq!(brute_length(10, 0).unwrap(), 1);
        assert!(brute_length(10, -1).is_err());
        assert!(brute_length(1, 5).is_err());
    }

    #[test]
    fn scanned_bands() {
        assert_eq!(brute_delta(-2, 3, 100).unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(
            brute_delta(10, 1, 100).unwrap(),
            (1..=9).collect::<Vec<_>>()
        );
        assert_eq!(
            brute_delta(-3, 2, 100).unwrap(),
            (-6..=-1).collect::<Vec<_>>()
        );
    }

    #[test]
    fn saturated_closures() {
        let s = brute_ld_closure(&[8], LdClass::LMinus, 200).unwrap();
        assert_eq!(s.gens(), &[8, 13, 15, 17, 18, 20, 22, 27]);
        assert_eq!(
            brute_ld_closure(&[2], LdClass::L, 100).unwrap().gens(),
            &[2, 3]
        );
        assert_eq!(
            brute_ld_closure(&[3], LdClass::LMinus, 100).unwrap().gens(),
            &[3, 5, 7]
        );
        assert!(matches!(
            brute_ld_closure(&[8], LdClass::LMinus, 30),
            Err(Error::CapTooSmall { .. })
        ));
        assert!(brute_ld_closure(&[], LdClass::L, 10).is_err());
    }

    #[test]
    fn semigroup_counts_by_genus() {
        // Known counts of numerical semigroups of genus 0..=8.
        let counts = [1, 1, 2, 4, 7, 12, 23, 39, 67];
        let all = brute_numerical_semigroups(8).unwrap();
        for (g, &expected) in counts.iter().enumerate() {
            let found = all.iter().filter(|s| s.genus().unwrap() == g).count();
            assert_eq!(found, expected, "genus {g}");
        }
    }

    #[test]
    fn mutated_band_formula_is_caught() {
        // Off by one at the top of the odd bands of base -2.
        let report = check_bands(
            -2,
            1000,
            |n| {
                let p = |k: u32| (-2i128).pow(k);
                if n % 2 == 1 {
                    ((p(n - 1) + 2) / 3, (p(n + 1) - 1) / 3 + 1)
                } else {
                    ((-2 * (p(n) - 1)) / 3, (p(n - 1) - 1) / 3)
                }
            },
            |n| 2i128.pow(n - 1),
        )
        .unwrap();
        assert!(!report.holds());
    }

    #[test]
    fn report_json() {
        let report = sweep_range(1..=10, |x, t| {
            t.check(x != 7, || Violation::new(x, "not 7", x));
        });
        assert_eq!(report.checked, 10);
        assert_eq!(report.violations.len(), 1);
        let json = report.to_json();
        assert!(json.starts_with(
            r#"{"checked":10,"violations":[{"input":"7","expected":"not 7","got":"7"}],"ms":"#
        ));
    }
}
