//! Digital semigroups `θ_b(S) = {z ∈ Z_b : ℓ_b(z) ∈ S}`.
//!
//! A digital semigroup is stored by its base and its length monoid `S`, never
//! as a set of integers. For `b > 1` the length monoid must lie in `L`, for
//! `b < -1` in `L⁻`: the closure argument for negative bases needs
//! `s + t + 1 ∈ S`.

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::base::{Base, LengthTable};
use crate::error::{Error, Result};
use crate::ld::{self, LdClass};
use crate::monoid::{MonoidJson, Submonoid};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitalSemigroup {
    base: Base,
    lengths: Submonoid,
}

impl DigitalSemigroup {
    /// `θ_b(S)`. Fails unless `S` is in the class of the base.
    pub fn theta(base: Base, lengths: Submonoid) -> Result<Self> {
        let cls = LdClass::for_base(base);
        if !ld::is_ld(&lengths, cls)? {
            return Err(Error::PreconditionViolated(format!(
                "{lengths} is not in class {cls}"
            )));
        }
        Ok(DigitalSemigroup { base, lengths })
    }

    /// `{z ∈ Z_b : ℓ_b(z) ∈ lengths}` without the class check. The result is
    /// length-saturated but need not be multiplicatively closed.
    pub fn from_lengths_unchecked(base: Base, lengths: Submonoid) -> Self {
        DigitalSemigroup { base, lengths }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn lengths(&self) -> &Submonoid {
        &self.lengths
    }

    pub fn contains(&self, z: &BigInt) -> Result<bool> {
        if !self.base.in_z(z) {
            return Err(Error::NotRepresentable {
                base: self.base.value(),
                value: z.to_string(),
            });
        }
        Ok(self.lengths.contains(u64::from(self.base.length(z)?)))
    }

    /// `Z_b \ D`: the union of the bands `Δ_b(n)` over the gaps `n` of the
    /// length monoid, increasing.
    pub fn complement(&self) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for n in self.lengths.gaps()? {
            let band = self.base.delta_band(n as u32)?;
            out.extend(band.iter());
        }
        out.sort();
        Ok(out)
    }

    /// `Card(Z_b \ D)` from the band cardinalities.
    pub fn complement_count(&self) -> Result<BigInt> {
        let mut total = BigInt::from(0);
        for n in self.lengths.gaps()? {
            total += self.base.delta_count(n as u32)?;
        }
        Ok(total)
    }

    /// `φ_b(D) = L_b(D) ∪ {0}`, sampling one element per band up to length
    /// `F(S) + 2`; every longer length is a member.
    pub fn phi(&self) -> Result<Submonoid> {
        let max_len = (self.lengths.frobenius()? + 2) as u32;
        phi_by_sampling(self.base, max_len, |z| self.contains(z))
    }

    /// Searches for `d, e ∈ D` with `d·e ∉ D` among `|d|, |e| <= magnitude`.
    /// The first counterexample in the order `(|d|, d)` then `(|e|, e)` is
    /// returned.
    pub fn verify_closure(&self, magnitude: i64) -> ClosureCheck {
        let table = LengthTable::new(self.base);
        let in_d = |z: i128| {
            self.lengths
                .contains(u64::from(table.length(z).expect("z lies in Z_b")))
        };
        let mut members: Vec<i64> = (1..=magnitude)
            .flat_map(|v| [-v, v])
            .filter(|&z| (z > 0 || self.base.is_negative()) && in_d(z.into()))
            .collect();
        members.sort_by_key(|&z| (z.unsigned_abs(), z));

        let found = members.par_iter().find_map_first(|&d| {
            members.iter().find_map(|&e| {
                let p = i128::from(d) * i128::from(e);
                (!in_d(p)).then(|| ClosureCounterexample {
                    d,
                    e,
                    product: p,
                    product_length: table.length(p).unwrap(),
                })
            })
        });
        match found {
            Some(cx) => ClosureCheck::Counterexample(cx),
            None => ClosureCheck::Closed {
                checked: (members.len() as u64).pow(2),
            },
        }
    }

    /// For `b = 2`: `2·min(L_2(D)) ∈ L_2(D)`. Always false for other bases.
    pub fn doubles_min_length(&self) -> bool {
        self.base.value() == 2
            && self
                .lengths
                .multiplicity()
                .is_some_and(|m| self.lengths.contains(2 * m))
    }

    /// `b^n, b^m ∈ D ⇒ b^(n+m+1) ∈ D` for all `n, m <= max_exp`.
    pub fn power_condition(&self, max_exp: u32) -> Result<bool> {
        let b = BigInt::from(self.base.value());
        for n in 0..=max_exp {
            for m in n..=max_exp {
                let bn: BigInt = b.clone().pow(n);
                let bm: BigInt = b.clone().pow(m);
                if self.contains(&bn)? && self.contains(&bm)? {
                    let big: BigInt = b.clone().pow(n + m + 1);
                    if !self.contains(&big)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> DigitalJson {
        DigitalJson {
            base: self.base.value(),
            lengths: self.lengths.to_json(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DigitalJson {
    pub base: i64,
    pub lengths: MonoidJson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureCounterexample {
    pub d: i64,
    pub e: i64,
    pub product: i128,
    pub product_length: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureCheck {
    Closed { checked: u64 },
    Counterexample(ClosureCounterexample),
}

impl ClosureCheck {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosureCheck::Closed { .. })
    }
}

/// `L_b(A)`, sorted and deduplicated.
pub fn lengths_of(base: Base, values: &[BigInt]) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(values.len());
    for z in values {
        if !base.in_z(z) {
            return Err(Error::NotRepresentable {
                base: base.value(),
                value: z.to_string(),
            });
        }
        out.push(u64::from(base.length(z)?));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The smallest digital semigroup of the base's class containing `values`.
pub fn smallest_digital_containing(
    base: Base,
    values: &[BigInt],
    bound: usize,
) -> Result<DigitalSemigroup> {
    if values.is_empty() {
        return Err(Error::PreconditionViolated("the input set is empty".into()));
    }
    let lengths = lengths_of(base, values)?;
    let monoid = if lengths.contains(&1) {
        Submonoid::naturals()
    } else {
        ld::ld_closure(&lengths, LdClass::for_base(base), bound)?.0
    };
    Ok(DigitalSemigroup {
        base,
        lengths: monoid,
    })
}

/// `L_b(D) ∪ {0}` for a length-saturated set `D` given by its membership
/// test, probing the lower endpoint of each band up to `max_len` and taking
/// every longer length as a member.
pub fn phi_by_sampling(
    base: Base,
    max_len: u32,
    contains: impl Fn(&BigInt) -> Result<bool>,
) -> Result<Submonoid> {
    let mut present = vec![false; max_len as usize + 1];
    for n in 1..=max_len {
        let band = base.delta_band(n)?;
        present[n as usize] = contains(&band.lo)?;
    }
    let conductor = u64::from(max_len) + 1;
    Submonoid::from_member_fn(conductor, |x| {
        x >= conductor || (x >= 1 && present[x as usize])
    })
}

/// Checks over `Δ_b(n) × Δ_b(m)`, restricted to `|d|, |e| <= magnitude`,
/// that no product has length exactly `n + m`. Returns the first pair that
/// does, if any.
pub fn exact_sum_length_pair(
    base: Base,
    n: u32,
    m: u32,
    magnitude: i64,
) -> Result<Option<(i64, i64)>> {
    if !base.is_negative() {
        return Err(Error::PreconditionViolated(format!(
            "base {base} is not negative"
        )));
    }
    let table = LengthTable::new(base);
    let clip = |n: u32| -> Result<(i64, i64)> {
        let band = base.delta_band(n)?;
        let lo = band.lo.to_i64().unwrap_or(i64::MIN).max(-magnitude);
        let hi = band.hi.to_i64().unwrap_or(i64::MAX).min(magnitude);
        Ok((lo, hi))
    };
    let (lo_n, hi_n) = clip(n)?;
    let (lo_m, hi_m) = clip(m)?;
    for d in lo_n..=hi_n {
        for e in lo_m..=hi_m {
            if table.length(i128::from(d) * i128::from(e))? == n + m {
                return Ok(Some((d, e)));
            }
        }
    }
    Ok(None)
}

/// `true` when [`exact_sum_length_pair`] finds nothing.
pub fn no_exact_sum_length(base: Base, n: u32, m: u32, magnitude: i64) -> Result<bool> {
    Ok(exact_sum_length_pair(base, n, m, magnitude)?.is_none())
}

/// `b^(x-1) ∈ D` for every `x ∈ L_b(D)`; the product `b^(x+y-2)` then has
/// length `x + y - 1`. Checks `x + y - 1 ∈ L_b(D)` through those powers for
/// all lengths `x, y <= max_len`.
pub fn lengths_closed_under_shifted_sum(d: &DigitalSemigroup, max_len: u32) -> Result<bool> {
    let b = BigInt::from(d.base().value());
    for x in 1..=max_len {
        for y in x..=max_len {
            let px: BigInt = b.clone().pow(x - 1);
            let py: BigInt = b.clone().pow(y - 1);
            if d.contains(&px)? && d.contains(&py)? && !d.contains(&(px * py))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
