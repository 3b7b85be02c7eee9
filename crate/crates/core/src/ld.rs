//! The classes `L` and `L⁻` of length-set monoids.
//!
//! A submonoid `S ≠ {0}` of `N` belongs to the class with offset set `E` when
//! `s + t + e ∈ S` for all `s, t ∈ S \ {0, 1}` and `e ∈ E`. The class `L`
//! uses `E = {-1}` and collects the length sets of digital semigroups for
//! positive bases; `L⁻` uses `E = {-3, -1, 1}` and belongs to negative bases.
//!
//! `L` is a Frobenius variety, so its members form a tree under
//! `T ↦ T ∪ {F(T)}`. `L⁻ \ {S_3}` is not closed under that map: `S_4` is in
//! it while its parent `S_3` is not. Enumeration of `L⁻` therefore walks the
//! `L` tree and filters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::base::Base;
use crate::error::{Error, Result};
use crate::monoid::Submonoid;

/// Which closure law applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LdClass {
    /// Offsets `{-1}`; bases `b > 1`.
    L,
    /// Offsets `{-3, -1, 1}`; bases `b < -1`.
    LMinus,
}

impl LdClass {
    pub fn offsets(self) -> &'static [i64] {
        match self {
            LdClass::L => &[-1],
            LdClass::LMinus => &[-3, -1, 1],
        }
    }

    pub fn for_base(base: Base) -> Self {
        if base.is_negative() {
            LdClass::LMinus
        } else {
            LdClass::L
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LdClass::L => "l",
            LdClass::LMinus => "lminus",
        }
    }
}

impl fmt::Display for LdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LdClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l" => Ok(LdClass::L),
            "lminus" => Ok(LdClass::LMinus),
            _ => Err(Error::Parse(format!(
                "unknown class {s:?}, expected l or lminus"
            ))),
        }
    }
}

/// A triple with `s + t + e ∉ S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LdViolation {
    pub s: u64,
    pub t: u64,
    pub e: i64,
}

impl LdViolation {
    pub fn value(&self) -> i64 {
        self.s as i64 + self.t as i64 + self.e
    }
}

/// `4+4-3=5`
impl fmt::Display for LdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}{:+}={}", self.s, self.t, self.e, self.value())
    }
}

fn require_numerical(s: &Submonoid) -> Result<()> {
    s.frobenius().map(|_| ())
}

/// First violation among pairs of minimal generators, scanning pairs in
/// lexicographic order and offsets increasing. `{0}` is reported as a
/// violation-free non-member by [`is_ld`], not here.
pub fn ld_violation(s: &Submonoid, cls: LdClass) -> Result<Option<LdViolation>> {
    if s.is_trivial() {
        return Ok(None);
    }
    require_numerical(s)?;
    if s.is_naturals() {
        return Ok(None);
    }
    let gens = s.gens();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i..] {
            for &e in cls.offsets() {
                if !s.contains_signed(x as i64 + y as i64 + e) {
                    return Ok(Some(LdViolation { s: x, t: y, e }));
                }
            }
        }
    }
    Ok(None)
}

/// Class membership through the generator-pair criterion.
pub fn is_ld(s: &Submonoid, cls: LdClass) -> Result<bool> {
    if s.is_trivial() {
        return Ok(false);
    }
    Ok(ld_violation(s, cls)?.is_none())
}

/// Class membership straight from the definition, over every pair of
/// members `s, t ∈ [2, F(S) + 1]`. Larger pairs cannot fail since then
/// `s + t + e > F(S)`.
pub fn is_ld_direct(s: &Submonoid, cls: LdClass) -> Result<bool> {
    if s.is_trivial() {
        return Ok(false);
    }
    let f = s.frobenius()?;
    let top = (f + 1).max(1) as u64;
    let members: Vec<u64> = (2..=top).filter(|&x| s.contains(x)).collect();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i..] {
            if cls
                .offsets()
                .iter()
                .any(|&e| !s.contains_signed(x as i64 + y as i64 + e))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership in `L` through maximal factorization lengths: `s - j ∈ S` for
/// every nonzero member `s ≤ F(S) + max(msg(S))` and `0 ≤ j < P(s)`.
pub fn is_ld_positive_criterion(s: &Submonoid) -> Result<bool> {
    if s.is_trivial() {
        return Ok(false);
    }
    let f = s.frobenius()?;
    let top = f + *s.gens().last().expect("nontrivial") as i64;
    for x in 1..=top.max(0) as u64 {
        if !s.contains(x) {
            continue;
        }
        let p = s.max_fact_length(x)?;
        if (0..p).any(|j| !s.contains(x - j)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One round of the closure iteration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureStep {
    /// Minimal generators of the current set.
    #[serde(rename = "B")]
    pub b: Vec<u64>,
    /// `B` together with every `x + y + e ∉ <B>`.
    #[serde(rename = "A")]
    pub a: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureTrace {
    pub iterations: Vec<ClosureStep>,
    pub converged: bool,
    #[serde(skip)]
    pub bound_hit: bool,
}

/// Smallest member of `cls` containing `inputs`, together with the full
/// iteration trace.
///
/// Repeats `B ← msg(A)`, `A ← B ∪ {x + y + e : x, y ∈ B, e ∈ E, x + y + e ∉ <B>}`
/// until `A = B`. When the iteration counter exceeds `bound` the result is
/// [`Error::Overflow`]. Inputs containing 1 give `N` at once.
pub fn ld_closure(inputs: &[u64], cls: LdClass, bound: usize) -> Result<(Submonoid, ClosureTrace)> {
    let trace = ld_closure_trace(inputs, cls, bound)?;
    if trace.bound_hit {
        return Err(Error::Overflow { bound });
    }
    let last = trace
        .iterations
        .last()
        .map_or(vec![1], |step| step.b.clone());
    Ok((Submonoid::from_generators(last)?, trace))
}

/// The raw iteration behind [`ld_closure`]; an exhausted bound is reported
/// through [`ClosureTrace::bound_hit`] instead of an error.
pub fn ld_closure_trace(inputs: &[u64], cls: LdClass, bound: usize) -> Result<ClosureTrace> {
    if inputs.is_empty() {
        return Err(Error::PreconditionViolated("the input set is empty".into()));
    }
    if inputs.contains(&0) {
        return Err(Error::PreconditionViolated(
            "inputs must be positive".into(),
        ));
    }
    if inputs.contains(&1) {
        return Ok(ClosureTrace {
            iterations: Vec::new(),
            converged: true,
            bound_hit: false,
        });
    }
    let mut current: BTreeSet<u64> = inputs.iter().copied().collect();
    let mut iterations = Vec::new();
    let mut k = 0;
    loop {
        k += 1;
        let generated = Submonoid::from_generators(current.iter().copied())?;
        let b = generated.gens().to_vec();
        let mut next: BTreeSet<u64> = b.iter().copied().collect();
        for (i, &x) in b.iter().enumerate() {
            for &y in &b[i..] {
                for &e in cls.offsets() {
                    let v = x as i64 + y as i64 + e;
                    if v >= 0 && !generated.contains(v as u64) {
                        next.insert(v as u64);
                    }
                }
            }
        }
        let converged = next.len() == b.len();
        iterations.push(ClosureStep {
            b,
            a: next.iter().copied().collect(),
        });
        current = next;
        if k > bound || converged {
            return Ok(ClosureTrace {
                iterations,
                converged: converged && k <= bound,
                bound_hit: k > bound,
            });
        }
    }
}

fn require_lminus_without_three(s: &Submonoid, gen: u64) -> Result<()> {
    if !is_ld(s, LdClass::LMinus)? {
        return Err(Error::PreconditionViolated(format!("{s} is not in L⁻")));
    }
    if s.contains(3) {
        return Err(Error::PreconditionViolated(format!(
            "3 is an element of {s}"
        )));
    }
    if s.gens().binary_search(&gen).is_err() {
        return Err(Error::PreconditionViolated(format!(
            "{gen} is not a minimal generator of {s}"
        )));
    }
    Ok(())
}

fn gap_or_generator(s: &Submonoid, x: u64) -> bool {
    !s.contains(x) || s.gens().binary_search(&x).is_ok()
}

/// Whether `S \ {s}` stays in `L⁻`, for `S ∈ L⁻` with `3 ∉ S` and a minimal
/// generator `s`: holds iff each of `s - 1`, `s + 1`, `s + 3` is a gap or a
/// minimal generator.
pub fn remove_generator_ok(s: &Submonoid, gen: u64) -> Result<bool> {
    require_lminus_without_three(s, gen)?;
    Ok([gen - 1, gen + 1, gen + 3]
        .into_iter()
        .all(|x| gap_or_generator(s, x)))
}

/// `is_ld(S \ {s}, L⁻)` computed by rebuilding the smaller monoid.
pub fn remove_generator_direct(s: &Submonoid, gen: u64) -> Result<bool> {
    is_ld(&s.remove_generator(gen)?, LdClass::LMinus)
}

/// The form of [`remove_generator_ok`] for generators above the Frobenius
/// number: `s - 1` is a gap or a generator and `s + 1`, `s + 3` are
/// generators.
pub fn remove_generator_ok_tail(s: &Submonoid, gen: u64) -> Result<bool> {
    require_lminus_without_three(s, gen)?;
    if gen as i64 <= s.frobenius()? {
        return Err(Error::PreconditionViolated(format!(
            "{gen} does not exceed the Frobenius number of {s}"
        )));
    }
    let is_gen = |x: u64| s.gens().binary_search(&x).is_ok();
    Ok(gap_or_generator(s, gen - 1) && is_gen(gen + 1) && is_gen(gen + 3))
}

/// Children of `S` in the tree of `cls`: `S \ {s}` for minimal generators
/// `s > F(S)` that stay in the class, ordered by generator list.
pub fn variety_children(s: &Submonoid, cls: LdClass) -> Result<Vec<Submonoid>> {
    let mut out = Vec::new();
    for child in s.tree_children()? {
        if is_ld(&child, cls)? {
            out.push(child);
        }
    }
    Ok(out)
}

/// Default cap on the size of one breadth-first level.
pub const DEFAULT_FRONTIER_CAP: usize = 1 << 20;

/// Every member of `cls` with genus at most `max_genus`, breadth first from
/// `N`, siblings ordered by generator list.
pub fn enumerate_by_genus(cls: LdClass, max_genus: usize) -> Result<Vec<Submonoid>> {
    enumerate_by_genus_capped(cls, max_genus, DEFAULT_FRONTIER_CAP)
}

pub fn enumerate_by_genus_capped(
    cls: LdClass,
    max_genus: usize,
    frontier_cap: usize,
) -> Result<Vec<Submonoid>> {
    let mut level = vec![Submonoid::naturals()];
    let mut out = Vec::new();
    for genus in 0..=max_genus {
        if level.len() > frontier_cap {
            return Err(Error::ResourceLimit(format!(
                "{} monoids of genus {genus} exceed the frontier cap {frontier_cap}",
                level.len()
            )));
        }
        for s in &level {
            if cls == LdClass::L || is_ld(s, cls)? {
                out.push(s.clone());
            }
        }
        if genus == max_genus {
            break;
        }
        let children: Vec<Vec<Submonoid>> = level
            .par_iter()
            .map(|s| variety_children(s, LdClass::L))
            .collect::<Result<_>>()?;
        level = children.into_iter().flatten().collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> Submonoid {
        Submonoid::from_generators(gens.iter().copied()).unwrap()
    }

    fn tail(n: u64) -> Submonoid {
        Submonoid::tail(n).unwrap()
    }

    #[test]
    fn memberships() {
        assert!(is_ld(&sg(&[3, 5, 7]), LdClass::LMinus).unwrap());
        // 4+5-3 = 6 is a gap.
        let t = sg(&[4, 5, 7]);
        assert!(!is_ld(&t, LdClass::LMinus).unwrap());
        assert_eq!(
            ld_violation(&t, LdClass::LMinus)
                .unwrap()
                .unwrap()
                .to_string(),
            "4+5-3=6"
        );
        assert!(is_ld(&t, LdClass::L).unwrap());
        let s = sg(&[4, 6, 7, 9]);
        assert!(!is_ld(&s, LdClass::LMinus).unwrap());
        assert_eq!(
            ld_violation(&s, LdClass::LMinus).unwrap(),
            Some(LdViolation { s: 4, t: 4, e: -3 })
        );
        assert_eq!(
            ld_violation(&s, LdClass::LMinus)
                .unwrap()
                .unwrap()
                .to_string(),
            "4+4-3=5"
        );
        assert!(is_ld(&s, LdClass::L).unwrap());
        assert!(!is_ld(&tail(2), LdClass::LMinus).unwrap());
        assert!(is_ld(&Submonoid::naturals(), LdClass::LMinus).unwrap());
        assert!(!is_ld(&Submonoid::trivial(), LdClass::L).unwrap());
        assert!(matches!(
            is_ld(&sg(&[4, 6]), LdClass::L),
            Err(Error::InfiniteComplement { gcd: 2 })
        ));
    }

    #[test]
    fn direct_form() {
        assert!(is_ld_direct(&sg(&[3, 4, 5]), LdClass::LMinus).unwrap());
        assert!(is_ld_direct(&Submonoid::naturals(), LdClass::LMinus).unwrap());
        // {0, 3, 4, 6, →}: 3 + 3 - 1 = 5 is missing.
        let s = Submonoid::from_gaps(&[1, 2, 5]).unwrap();
        assert!(!is_ld_direct(&s, LdClass::L).unwrap());
        assert_eq!(
            ld_violation(&s, LdClass::L).unwrap().unwrap().to_string(),
            "3+3-1=5"
        );
    }

    #[test]
    fn positive_criterion() {
        assert!(is_ld_positive_criterion(&sg(&[2, 3])).unwrap());
        assert!(is_ld_positive_criterion(&sg(&[3, 4, 5])).unwrap());
        assert!(is_ld_positive_criterion(&sg(&[4, 6, 7, 9])).unwrap());
        assert!(!is_ld_positive_criterion(&sg(&[3, 4])).unwrap());
        assert!(is_ld_positive_criterion(&Submonoid::naturals()).unwrap());
    }

    #[test]
    fn worked_closure() {
        let (s, trace) = ld_closure(&[8], LdClass::LMinus, 1000).unwrap();
        assert_eq!(s.gens(), &[8, 13, 15, 17, 18, 20, 22, 27]);
        assert_eq!(trace.iterations.len(), 3);
        assert_eq!(trace.iterations[0].b, vec![8]);
        assert_eq!(trace.iterations[0].a, vec![8, 13, 15, 17]);
        assert_eq!(trace.iterations[1].b, vec![8, 13, 15, 17]);
        // 35 = 17 + 17 + 1 is generated here and removed again by msg.
        assert_eq!(
            trace.iterations[1].a,
            vec![8, 13, 15, 17, 18, 20, 22, 27, 35]
        );
        assert_eq!(trace.iterations[2].b, trace.iterations[2].a);
        assert!(trace.converged && !trace.bound_hit);
    }

    #[test]
    fn closure_bounds() {
        assert_eq!(
            ld_closure(&[8], LdClass::LMinus, 0),
            Err(Error::Overflow { bound: 0 })
        );
        assert_eq!(
            ld_closure(&[8], LdClass::LMinus, 2),
            Err(Error::Overflow { bound: 2 })
        );
        assert!(ld_closure(&[8], LdClass::LMinus, 3).is_ok());
        let trace = ld_closure_trace(&[8], LdClass::LMinus, 1).unwrap();
        assert!(trace.bound_hit && !trace.converged);
        assert_eq!(trace.iterations.len(), 2);
    }

    #[test]
    fn closure_edge_inputs() {
        assert_eq!(ld_closure(&[2], LdClass::L, 10).unwrap().0, sg(&[2, 3]));
        assert_eq!(
            ld_closure(&[2], LdClass::LMinus, 10).unwrap().0,
            Submonoid::naturals()
        );
        assert_eq!(
            ld_closure(&[1, 5], LdClass::L, 0).unwrap().0,
            Submonoid::naturals()
        );
        assert!(ld_closure(&[], LdClass::L, 10).is_err());
        assert!(ld_closure(&[0, 4], LdClass::L, 10).is_err());
        assert_eq!(
            ld_closure(&[3], LdClass::LMinus, 10).unwrap().0,
            sg(&[3, 5, 7])
        );
    }

    #[test]
    fn trace_json() {
        let (_, trace) = ld_closure(&[2], LdClass::L, 10).unwrap();
        assert_eq!(
            serde_json::to_string(&trace).unwrap(),
            r#"{"iterations":[{"B":[2],"A":[2,3]},{"B":[2,3],"A":[2,3]}],"converged":true}"#
        );
    }

    #[test]
    fn generator_removal() {
        for n in 4..15 {
            assert!(remove_generator_ok(&tail(n), n).unwrap());
            assert!(!remove_generator_ok(&tail(n), 2 * n - 1).unwrap());
            assert_eq!(tail(n).remove_generator(n).unwrap(), tail(n + 1));
        }
        let t = sg(&[8, 13, 15, 17, 18, 20, 22, 27]);
        for &s in t.gens() {
            assert_eq!(
                remove_generator_ok(&t, s).unwrap(),
                remove_generator_direct(&t, s).unwrap()
            );
        }
        assert!(remove_generator_ok(&sg(&[4, 5, 7]), 7).is_err());
        // 3 ∈ S voids the criterion.
        assert!(matches!(
            remove_generator_ok(&sg(&[3, 5, 7]), 3),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(remove_generator_ok(&tail(4), 8).is_err());
        assert!(remove_generator_ok(&sg(&[4, 6, 7, 9]), 4).is_err());
    }

    #[test]
    fn generator_removal_above_frobenius() {
        assert!(remove_generator_ok_tail(&tail(4), 4).unwrap());
        assert!(!remove_generator_ok_tail(&tail(4), 7).unwrap());
        let s = sg(&[8, 13, 15, 17, 18, 20, 22, 27]);
        let tail_form = remove_generator_ok_tail(&s, 27).unwrap();
        assert_eq!(tail_form, remove_generator_direct(&s, 27).unwrap());
        assert!(!tail_form);
        assert!(remove_generator_ok_tail(&s, 8).is_err());
    }

    #[test]
    fn children() {
        assert_eq!(
            variety_children(&Submonoid::naturals(), LdClass::L).unwrap(),
            vec![tail(2)]
        );
        assert!(variety_children(&Submonoid::naturals(), LdClass::LMinus)
            .unwrap()
            .is_empty());
        assert_eq!(
            variety_children(&tail(3), LdClass::LMinus).unwrap(),
            vec![sg(&[3, 5, 7]), tail(4)]
        );
        for child in variety_children(&tail(3), LdClass::L).unwrap() {
            assert_eq!(child.adjoin_frobenius().unwrap(), tail(3));
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            enumerate_by_genus(LdClass::L, 0).unwrap(),
            vec![Submonoid::naturals()]
        );
        assert_eq!(
            enumerate_by_genus(LdClass::LMinus, 2).unwrap(),
            vec![Submonoid::naturals(), tail(3)]
        );
        let l4 = enumerate_by_genus(LdClass::L, 4).unwrap();
        for n in 2..=5 {
            assert!(l4.contains(&tail(n)));
        }
        assert!(matches!(
            enumerate_by_genus_capped(LdClass::L, 10, 2),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn lminus_parent_of_s4_is_excluded() {
        let s4 = tail(4);
        assert!(is_ld(&s4, LdClass::LMinus).unwrap());
        let parent = s4.adjoin_frobenius().unwrap();
        assert_eq!(parent, tail(3));
        assert!(is_ld(&parent, LdClass::LMinus).unwrap());
    }

    #[test]
    fn class_names() {
        assert_eq!("lminus".parse::<LdClass>().unwrap(), LdClass::LMinus);
        assert_eq!("l".parse::<LdClass>().unwrap(), LdClass::L);
        assert!("L".parse::<LdClass>().is_err());
        assert_eq!(LdClass::for_base(Base::new(-3).unwrap()), LdClass::LMinus);
    }
}
