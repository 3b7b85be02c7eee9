//! Finitely generated submonoids of `(N, +)`.
//!
//! A [`Submonoid`] keeps its minimal system of generators together with a
//! membership table of the monoid divided by its gcd. The table runs up to
//! the conductor of that reduced numerical monoid; every larger multiple of
//! the gcd is a member. Monoids are immutable once built.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of membership-table entries per monoid.
pub const DEFAULT_TABLE_LIMIT: usize = 1 << 26;

static TABLE_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_TABLE_LIMIT);

/// Sets the process-wide cap on membership-table size. Constructions that
/// would need a larger table fail with [`Error::ResourceLimit`].
pub fn set_table_limit(entries: usize) {
    TABLE_LIMIT.store(entries.max(1), AtomicOrdering::Relaxed);
}

pub fn table_limit() -> usize {
    TABLE_LIMIT.load(AtomicOrdering::Relaxed)
}

fn check_limit(entries: u64) -> Result<()> {
    let limit = table_limit() as u64;
    if entries > limit {
        return Err(Error::ResourceLimit(format!(
            "a table of {entries} entries exceeds the limit of {limit}"
        )));
    }
    Ok(())
}

/// A finitely generated submonoid of the nonnegative integers.
#[derive(Clone)]
pub struct Submonoid {
    gens: Vec<u64>,
    /// gcd of the generators; 0 for the trivial monoid `{0}`.
    gcd: u64,
    /// Membership of `S / gcd` below its conductor.
    table: Vec<bool>,
}

impl Submonoid {
    /// The submonoid generated by `raw`. Zeros and duplicates are ignored and
    /// redundant elements are discarded, leaving the minimal generators.
    pub fn from_generators<I: IntoIterator<Item = u64>>(raw: I) -> Result<Self> {
        let mut raw: Vec<u64> = raw.into_iter().filter(|&x| x != 0).collect();
        raw.sort_unstable();
        raw.dedup();
        if raw.is_empty() {
            return Ok(Self::trivial());
        }
        let gcd = raw.iter().fold(0, |g, &x| g.gcd(&x));
        let reduced: Vec<u64> = raw.iter().map(|&x| x / gcd).collect();
        let table = reduced_table(&reduced)?;
        let conductor = table.len() as u64;
        let member = |x: u64| x >= conductor || table[x as usize];
        let multiplicity = reduced[0];
        if multiplicity == 1 {
            return Ok(Submonoid {
                gens: vec![gcd],
                gcd,
                table,
            });
        }

        // Minimal generators lie below conductor + multiplicity and are not
        // sums of two nonzero members.
        let gens = reduced
            .iter()
            .copied()
            .filter(|&r| r < conductor + multiplicity)
            .filter(|&r| !(1..=r / 2).any(|a| member(a) && member(r - a)))
            .map(|r| r * gcd)
            .collect();
        Ok(Submonoid { gens, gcd, table })
    }

    /// The trivial monoid `{0}`.
    pub fn trivial() -> Self {
        Submonoid {
            gens: Vec::new(),
            gcd: 0,
            table: Vec::new(),
        }
    }

    /// `N` itself.
    pub fn naturals() -> Self {
        Submonoid {
            gens: vec![1],
            gcd: 1,
            table: Vec::new(),
        }
    }

    /// `S_n = {0, n, →}`.
    pub fn tail(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::PreconditionViolated("S_0 is undefined".into()));
        }
        Self::from_generators(n..2 * n)
    }

    /// The numerical monoid `N \ gaps`. Fails unless the complement of `gaps`
    /// is closed under addition.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        if gaps.contains(&0) {
            return Err(Error::PreconditionViolated("0 is always a member".into()));
        }
        let conductor = gaps.iter().max().map_or(0, |&g| g + 1);
        check_limit(conductor)?;
        let mut member = vec![true; conductor as usize];
        for &g in gaps {
            member[g as usize] = false;
        }
        for x in 1..conductor {
            for a in 1..=x / 2 {
                if member[a as usize] && member[(x - a) as usize] && !member[x as usize] {
                    return Err(Error::PreconditionViolated(format!(
                        "{a} + {} = {x} is listed as a gap",
                        x - a
                    )));
                }
            }
        }
        Self::from_member_fn(conductor, |x| x >= conductor || member[x as usize])
    }

    /// Rebuilds a numerical monoid from a membership predicate that holds for
    /// every `x >= conductor`.
    pub(crate) fn from_member_fn(conductor: u64, member: impl Fn(u64) -> bool) -> Result<Self> {
        if conductor == 0 {
            return Ok(Self::naturals());
        }
        check_limit(2 * conductor + 2)?;
        Self::from_generators((1..=2 * conductor + 1).filter(|&x| member(x)))
    }

    /// Minimal generators, increasing.
    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// True iff the complement in `N` is finite.
    pub fn is_numerical(&self) -> bool {
        self.gcd == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_naturals(&self) -> bool {
        self.gens == [1]
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> Option<u64> {
        self.gens.first().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        if x == 0 {
            return true;
        }
        if self.gcd == 0 || x % self.gcd != 0 {
            return false;
        }
        let r = x / self.gcd;
        r >= self.table.len() as u64 || self.table[r as usize]
    }

    /// Membership for signed integers; negatives are never members.
    pub fn contains_signed(&self, x: i64) -> bool {
        x >= 0 && self.contains(x as u64)
    }

    fn require_numerical(&self) -> Result<()> {
        if self.is_numerical() {
            Ok(())
        } else {
            Err(Error::InfiniteComplement { gcd: self.gcd })
        }
    }

    /// Smallest `c` with `{c, →} ⊆ S`.
    pub fn conductor(&self) -> Result<u64> {
        self.require_numerical()?;
        Ok(self.table.len() as u64)
    }

    /// Largest integer not in `S`; `-1` for `N`.
    pub fn frobenius(&self) -> Result<i64> {
        Ok(self.conductor()? as i64 - 1)
    }

    pub fn gaps(&self) -> Result<Vec<u64>> {
        self.require_numerical()?;
        Ok((1..self.table.len() as u64)
            .filter(|&x| !self.table[x as usize])
            .collect())
    }

    pub fn genus(&self) -> Result<usize> {
        self.require_numerical()?;
        Ok(self.table.iter().skip(1).filter(|&&m| !m).count())
    }

    /// `P(s)`: the largest number of generators, counted with multiplicity,
    /// in a factorization of `s`.
    pub fn max_fact_length(&self, s: u64) -> Result<u64> {
        if !self.contains(s) {
            return Err(Error::NotMember(s));
        }
        check_limit(s + 1)?;
        let mut best: Vec<Option<u64>> = vec![None; s as usize + 1];
        best[0] = Some(0);
        for x in 1..=s as usize {
            best[x] = self
                .gens
                .iter()
                .take_while(|&&g| g as usize <= x)
                .filter_map(|&g| best[x - g as usize])
                .max()
                .map(|p| p + 1);
        }
        Ok(best[s as usize].expect("members have a factorization"))
    }

    /// `S ∩ T` for numerical `S`, `T`.
    pub fn intersect(&self, other: &Submonoid) -> Result<Submonoid> {
        let c = self.conductor()?.max(other.conductor()?);
        Self::from_member_fn(c, |x| self.contains(x) && other.contains(x))
    }

    /// `S ∪ {F(S)}`.
    pub fn adjoin_frobenius(&self) -> Result<Submonoid> {
        let f = self.frobenius()?;
        if f < 0 {
            return Err(Error::IsAllOfN);
        }
        let f = f as u64;
        Self::from_member_fn(f, |x| x == f || self.contains(x))
    }

    /// `S \ {s}` for a minimal generator `s` of a numerical monoid.
    pub fn remove_generator(&self, s: u64) -> Result<Submonoid> {
        let c = self.conductor()?;
        if self.gens.binary_search(&s).is_err() {
            return Err(Error::PreconditionViolated(format!(
                "{s} is not a minimal generator of {self}"
            )));
        }
        Self::from_member_fn(c.max(s + 1), |x| x != s && self.contains(x))
    }

    /// Children in the tree of all numerical monoids: `S \ {s}` for minimal
    /// generators `s > F(S)`, ordered by generator list.
    pub fn tree_children(&self) -> Result<Vec<Submonoid>> {
        let f = self.frobenius()?;
        let mut out = self
            .gens
            .iter()
            .filter(|&&s| s as i64 > f)
            .map(|&s| self.remove_generator(s))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }

    /// Members in `[0, bound]`, increasing.
    pub fn members_upto(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    pub fn to_json(&self) -> MonoidJson {
        let numerical = self.is_numerical();
        MonoidJson {
            generators: self.gens.clone(),
            gcd: self.gcd,
            frobenius: numerical.then(|| self.frobenius().unwrap()),
            gaps: numerical.then(|| self.gaps().unwrap()),
            genus: numerical.then(|| self.genus().unwrap()),
        }
    }
}

/// DP membership table of a monoid with coprime generators `reduced`
/// (sorted), stopping at the conductor: once `min(reduced)` consecutive
/// members are seen, every larger integer is a member.
fn reduced_table(reduced: &[u64]) -> Result<Vec<bool>> {
    let m = reduced[0];
    if m == 1 {
        return Ok(Vec::new());
    }
    let mut table = vec![true];
    let mut run = 1u64;
    let mut x = 1u64;
    while run < m {
        check_limit(x + 1)?;
        let member = reduced
            .iter()
            .take_while(|&&g| g <= x)
            .any(|&g| table[(x - g) as usize]);
        table.push(member);
        run = if member { run + 1 } else { 0 };
        x += 1;
    }
    table.truncate((x - m) as usize);
    Ok(table)
}

impl PartialEq for Submonoid {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for Submonoid {}

impl Hash for Submonoid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gens.hash(state);
    }
}

impl PartialOrd for Submonoid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the generator lists.
impl Ord for Submonoid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gens.cmp(&other.gens)
    }
}

impl fmt::Debug for Submonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submonoid{self}")
    }
}

/// `<3,5,7>`.
impl fmt::Display for Submonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", format_generators(&self.gens))
    }
}

/// JSON view of a monoid. Fields that only exist for numerical monoids are
/// `null` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub generators: Vec<u64>,
    pub gcd: u64,
    pub frobenius: Option<i64>,
    pub gaps: Option<Vec<u64>>,
    pub genus: Option<usize>,
}

/// Parses the generator-list text format `3,5,7`.
pub fn parse_generators(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad generator {tok:?}: {e}")))
        })
        .collect()
}

pub fn format_generators(gens: &[u64]) -> String {
    gens.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
