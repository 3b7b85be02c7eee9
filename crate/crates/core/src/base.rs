//! Canonical base-`b` expansions of integers for `|b| >= 2` of either sign.
//!
//! Every `z` in `Z_b` (positive integers for `b > 1`, nonzero integers for
//! `b < -1`) has a unique expansion `z = u_0 + u_1 b + ... + u_n b^n` with
//! digits `u_i` in `{0, ..., |b| - 1}` and `u_n != 0`. The length of `z` is
//! the number of digits, and zero is given the single digit `[0]`.
//!
//! Besides the digit expansion itself, this module describes the sets
//! `Δ_b(n)` of representable integers of length exactly `n`. Each of them is
//! an integer interval, and for negative bases the sign of its elements is
//! fixed by the parity of `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An integer base `b` with `b ∉ {-1, 0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(i64);

impl Base {
    pub fn new(b: i64) -> Result<Self> {
        if (-1..=1).contains(&b) {
            return Err(Error::InvalidBase(b));
        }
        Ok(Base(b))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// `|b|`, the number of digits.
    pub fn radix(self) -> u64 {
        self.0.unsigned_abs()
    }

    pub fn is_digit(self, u: u64) -> bool {
        u < self.radix()
    }

    /// Membership in `Z_b`. Zero is never in `Z_b`.
    pub fn in_z(self, z: &BigInt) -> bool {
        if self.is_negative() {
            !z.is_zero()
        } else {
            z.is_positive()
        }
    }

    /// `E_b`: `{-1}` for `b > 1`, `{-3, -1, 1}` for `b < -1`.
    pub fn product_offsets(self) -> &'static [i64] {
        if self.is_negative() {
            &[-3, -1, 1]
        } else {
            &[-1]
        }
    }

    fn big(self) -> BigInt {
        BigInt::from(self.0)
    }

    fn check_expandable(self, z: &BigInt) -> Result<()> {
        if !self.is_negative() && z.is_negative() {
            return Err(Error::NotRepresentable {
                base: self.0,
                value: z.to_string(),
            });
        }
        Ok(())
    }

    /// Canonical digit expansion of `z`, least significant digit first.
    pub fn to_digits(self, z: &BigInt) -> Result<DigitString> {
        self.check_expandable(z)?;
        let b = self.big();
        let modulus = BigInt::from(self.radix());
        let mut digits = Vec::new();
        let mut rest = z.clone();
        while !rest.is_zero() {
            let r = rest.mod_floor(&modulus);
            rest = (&rest - &r) / &b;
            digits.push(r.to_u64().expect("residue below |b| fits in u64"));
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Ok(DigitString {
            base: self,
            digits,
            value: z.clone(),
        })
    }

    /// Evaluates `Σ u_i b^i` for digits given least significant first.
    pub fn from_digits(self, digits: &[u64]) -> Result<BigInt> {
        let b = self.big();
        let mut acc = BigInt::zero();
        for &u in digits.iter().rev() {
            if !self.is_digit(u) {
                return Err(Error::InvalidDigit {
                    base: self.0,
                    digit: u,
                });
            }
            acc = acc * &b + u;
        }
        Ok(acc)
    }

    /// Number of digits of the canonical expansion of `z`; `1` for zero.
    pub fn length(self, z: &BigInt) -> Result<u32> {
        self.check_expandable(z)?;
        if z.is_zero() {
            return Ok(1);
        }
        let b = self.big();
        let modulus = BigInt::from(self.radix());
        let mut rest = z.clone();
        let mut n = 0;
        while !rest.is_zero() {
            let r = rest.mod_floor(&modulus);
            rest = (rest - r) / &b;
            n += 1;
        }
        Ok(n)
    }

    /// The interval `Δ_b(n)` of elements of `Z_b` with exactly `n` digits.
    pub fn delta_band(self, n: u32) -> Result<LengthBand> {
        if n < 1 {
            return Err(Error::InvalidLength(n.into()));
        }
        let b = self.big();
        let (lo, hi) = if !self.is_negative() {
            (b.clone().pow(n - 1), b.clone().pow(n) - 1)
        } else {
            let denom = BigInt::one() - &b;
            if n % 2 == 1 {
                // b(b^(n-2) - 1) = b^(n-1) - b keeps n = 1 integral.
                let lo = (b.clone().pow(n - 1) - &b) / &denom;
                let hi = (b.clone().pow(n + 1) - 1) / &denom;
                (lo, hi)
            } else {
                let lo = (&b * (b.clone().pow(n) - 1)) / &denom;
                let hi = (b.clone().pow(n - 1) - 1) / &denom;
                (lo, hi)
            }
        };
        Ok(LengthBand {
            base: self,
            n,
            lo,
            hi,
        })
    }

    /// `Card(Δ_b(n))` from the closed form.
    pub fn delta_count(self, n: u32) -> Result<BigInt> {
        if n < 1 {
            return Err(Error::InvalidLength(n.into()));
        }
        let b = self.big();
        let power: BigInt = Pow::pow(b.clone(), n - 1);
        Ok(if !self.is_negative() {
            (&b - 1i32) * power
        } else if n % 2 == 1 {
            -(&b + 1i32) * power
        } else {
            (&b + 1i32) * power
        })
    }

    fn check_offset_operand(self, a: &BigInt) -> Result<()> {
        let admissible = if self.is_negative() {
            // Z \ N_b: nonzero and not a single digit.
            a.is_negative() || *a >= BigInt::from(self.radix())
        } else {
            a.is_positive()
        };
        if admissible {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "{a} is not an admissible factor for base {}",
                self.0
            )))
        }
    }

    /// `ℓ_b(ac) - ℓ_b(a) - ℓ_b(c)`. Always in `{-1, 0}` for `b > 1` and in
    /// `{-3, -1, 1}` for `b < -1`.
    pub fn product_length_offset(self, a: &BigInt, c: &BigInt) -> Result<i64> {
        self.check_offset_operand(a)?;
        self.check_offset_operand(c)?;
        let la = i64::from(self.length(a)?);
        let lc = i64::from(self.length(c)?);
        let lac = i64::from(self.length(&(a * c))?);
        Ok(lac - la - lc)
    }

    /// Finds `a, c` with `ℓ_b(a) = n`, `ℓ_b(c) = m` and `ℓ_b(ac) = n + m + e`.
    ///
    /// Cheap candidates built from the band endpoints and the powers
    /// `b^(n-1)`, `b^(m-1)` are tried first; after that the whole product
    /// `Δ_b(n) × Δ_b(m)` is scanned row by row. Every returned pair has been
    /// re-checked with [`Base::length`].
    pub fn product_offset_witness(self, n: u32, m: u32, e: i64) -> Result<(BigInt, BigInt)> {
        if n < 2 || m < 2 {
            return Err(Error::PreconditionViolated(format!(
                "witness lengths must be at least 2, got ({n}, {m})"
            )));
        }
        if !self.product_offsets().contains(&e) {
            return Err(Error::PreconditionViolated(format!(
                "offset {e} is not in E_b for base {}",
                self.0
            )));
        }
        let not_found = Error::WitnessNotFound {
            base: self.0,
            n,
            m,
            e,
        };
        let target = i64::from(n) + i64::from(m) + e;
        if target < 1 {
            return Err(not_found);
        }
        let target = target as u32;
        let band_n = self.delta_band(n)?;
        let band_m = self.delta_band(m)?;

        let b = self.big();
        let cands_n = [b.clone().pow(n - 1), band_n.lo.clone(), band_n.hi.clone()];
        let cands_m = [b.clone().pow(m - 1), band_m.lo.clone(), band_m.hi.clone()];
        for a in &cands_n {
            for c in &cands_m {
                if self.length(&(a * c))? == target {
                    return self.verified_witness(a.clone(), c.clone(), n, m, target);
                }
            }
        }

        let fits = |band: &LengthBand| band.lo.to_i64().is_some() && band.hi.to_i64().is_some();
        if fits(&band_n) && fits(&band_m) {
            let table = LengthTable::new(self);
            let (lo_n, hi_n) = (band_n.lo.to_i64().unwrap(), band_n.hi.to_i64().unwrap());
            let (lo_m, hi_m) = (band_m.lo.to_i64().unwrap(), band_m.hi.to_i64().unwrap());
            for a in lo_n..=hi_n {
                for c in lo_m..=hi_m {
                    if table.length(i128::from(a) * i128::from(c))? == target {
                        return self.verified_witness(a.into(), c.into(), n, m, target);
                    }
                }
            }
        } else {
            let mut a = band_n.lo.clone();
            while a <= band_n.hi {
                let mut c = band_m.lo.clone();
                while c <= band_m.hi {
                    if self.length(&(&a * &c))? == target {
                        return self.verified_witness(a, c, n, m, target);
                    }
                    c += 1;
                }
                a += 1;
            }
        }
        Err(not_found)
    }

    fn verified_witness(
        self,
        a: BigInt,
        c: BigInt,
        n: u32,
        m: u32,
        target: u32,
    ) -> Result<(BigInt, BigInt)> {
        assert_eq!(self.length(&a)?, n);
        assert_eq!(self.length(&c)?, m);
        assert_eq!(self.length(&(&a * &c))?, target);
        Ok((a, c))
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The canonical base-`b` expansion of an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitString {
    base: Base,
    digits: Vec<u64>,
    value: BigInt,
}

impl DigitString {
    /// Builds a canonical digit string from digits given least significant
    /// first. Leading zeros are rejected except for the single digit `[0]`.
    pub fn new(base: Base, digits: Vec<u64>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::Parse("empty digit string".into()));
        }
        if digits.len() > 1 && digits.last() == Some(&0) {
            return Err(Error::Parse("leading zero digit".into()));
        }
        let value = base.from_digits(&digits)?;
        Ok(DigitString {
            base,
            digits,
            value,
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    /// Digits, least significant first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Most significant digit first, then `_` and the base. Digits are
/// concatenated for `|b| <= 10` and comma separated otherwise:
/// `111_-2`, `10,3_16`.
impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.base.radix() <= 10 { "" } else { "," };
        let mut first = true;
        for u in self.digits.iter().rev() {
            if !first {
                f.write_str(sep)?;
            }
            first = false;
            write!(f, "{u}")?;
        }
        write!(f, "_{}", self.base)
    }
}

impl FromStr for DigitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, base) = s
            .rsplit_once('_')
            .ok_or_else(|| Error::Parse(format!("missing '_<base>' suffix in {s:?}")))?;
        let base = base
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad base {base:?}: {e}")))
            .and_then(Base::new)?;
        if body.is_empty() {
            return Err(Error::Parse("empty digit string".into()));
        }
        let mut digits = if base.radix() <= 10 {
            body.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(u64::from)
                        .ok_or_else(|| Error::Parse(format!("bad digit {ch:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            body.split(',')
                .map(|tok| {
                    if tok.is_empty() || !tok.bytes().all(|c| c.is_ascii_digit()) {
                        return Err(Error::Parse(format!("bad digit {tok:?}")));
                    }
                    tok.parse::<u64>()
                        .map_err(|e| Error::Parse(format!("bad digit {tok:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        digits.reverse();
        DigitString::new(base, digits)
    }
}

/// `Δ_b(n)` as the closed interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthBand {
    pub base: Base,
    pub n: u32,
    pub lo: BigInt,
    pub hi: BigInt,
}

impl LengthBand {
    pub fn contains(&self, z: &BigInt) -> bool {
        self.lo <= *z && *z <= self.hi
    }

    pub fn count(&self) -> BigInt {
        &self.hi - &self.lo + 1
    }

    /// Iterates the band in increasing order. Only sensible for small bands.
    pub fn iter(&self) -> impl Iterator<Item = BigInt> + '_ {
        let mut next = self.lo.clone();
        std::iter::from_fn(move || {
            if next > self.hi {
                return None;
            }
            let out = next.clone();
            next += 1;
            Some(out)
        })
    }
}

/// Length lookup for machine-size integers.
///
/// Band endpoints are precomputed for every `n` whose band fits in `i128`,
/// so a length query is a binary search instead of a digit loop.
#[derive(Debug, Clone)]
pub struct LengthTable {
    base: Base,
    /// `(hi, n)` of the bands of positive integers, increasing.
    positive: Vec<(i128, u32)>,
    /// `(lo, n)` of the bands of negative integers, decreasing.
    negative: Vec<(i128, u32)>,
}

impl LengthTable {
    pub fn new(base: Base) -> Self {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        let mut pos_open = true;
        let mut neg_open = base.is_negative();
        let mut n = 1;
        while pos_open || neg_open {
            let band = base.delta_band(n).expect("n >= 1");
            if band.lo.is_positive() {
                if pos_open {
                    match band.hi.to_i128() {
                        Some(hi) => positive.push((hi, n)),
                        None => pos_open = false,
                    }
                }
            } else if neg_open {
                match band.lo.to_i128() {
                    Some(lo) => negative.push((lo, n)),
                    None => neg_open = false,
                }
            }
            n += 1;
        }
        LengthTable {
            base,
            positive,
            negative,
        }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn length(&self, z: i128) -> Result<u32> {
        let step = if self.base.is_negative() { 2 } else { 1 };
        if z == 0 {
            Ok(1)
        } else if z > 0 {
            let i = self.positive.partition_point(|&(hi, _)| hi < z);
            Ok(match self.positive.get(i) {
                Some(&(_, n)) => n,
                None => self.positive.last().map_or(1, |&(_, n)| n + step),
            })
        } else if self.base.is_negative() {
            let i = self.negative.partition_point(|&(lo, _)| lo > z);
            Ok(match self.negative.get(i) {
                Some(&(_, n)) => n,
                None => self.negative.last().map_or(2, |&(_, n)| n + step),
            })
        } else {
            Err(Error::NotRepresentable {
                base: self.base.value(),
                value: z.to_string(),
            })
        }
    }

    /// [`Base::product_length_offset`] for machine-size factors.
    pub fn product_offset(&self, a: i64, c: i64) -> Result<i64> {
        let radix = self.base.radix() as i64;
        let admissible = |x: i64| {
            if self.base.is_negative() {
                x < 0 || x >= radix
            } else {
                x > 0
            }
        };
        if !admissible(a) || !admissible(c) {
            return Err(Error::PreconditionViolated(format!(
                "({a}, {c}) are not admissible factors for base {}",
                self.base
            )));
        }
        let la = i64::from(self.length(a.into())?);
        let lc = i64::from(self.length(c.into())?);
        let lac = i64::from(self.length(i128::from(a) * i128::from(c))?);
        Ok(lac - la - lc)
    }
}
