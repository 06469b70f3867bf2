//! Exact membership grades in `[0, 1]`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A membership value `p ∈ [0, 1]`, stored as a reduced rational.
///
/// Only comparisons, `min` and `max` are ever applied to grades.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<u64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 || numer > denom {
            return Err(Error::InvalidGrade(format!("{numer}/{denom}")));
        }
        Ok(Grade(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        *self == Grade::ZERO
    }
}

impl fmt::Display for Grade {
    /// Lowest terms; `0` and `1` print without a denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Grade {
    type Err = Error;

    /// Parses `a/b`, an integer, or a decimal such as `0.25`, exactly.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidGrade(s.to_owned());
        let digits = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
        if let Some((n, d)) = t.split_once('/') {
            let (n, d) = (n.trim(), d.trim());
            if !digits(n) || !digits(d) {
                return Err(bad());
            }
            let n: u64 = n.parse().map_err(|_| bad())?;
            let d: u64 = d.parse().map_err(|_| bad())?;
            return Grade::new(n, d).map_err(|_| bad());
        }
        let (int, frac) = t.split_once('.').unwrap_or((t, ""));
        if !(digits(int) || (int.is_empty() && digits(frac))) {
            return Err(bad());
        }
        if !frac.is_empty() && !digits(frac) {
            return Err(bad());
        }
        let frac = frac.trim_end_matches('0');
        let scale = 10u64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let frac_val: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let numer = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac_val))
            .ok_or_else(bad)?;
        Grade::new(numer, scale).map_err(|_| bad())
    }
}

/// Parses a comma-separated grade chain. The result is sorted, deduplicated, and must
/// contain both `0` and `1`.
pub fn parse_grade_set(s: &str) -> Result<Vec<Grade>> {
    let grades = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Grade>>>()?;
    normalize_grade_set(grades)
}

pub fn normalize_grade_set(mut grades: Vec<Grade>) -> Result<Vec<Grade>> {
    grades.sort();
    grades.dedup();
    if grades.first() != Some(&Grade::ZERO) {
        return Err(Error::GradeSetInvalid("must contain 0".into()));
    }
    if grades.last() != Some(&Grade::ONE) {
        return Err(Error::GradeSetInvalid("must contain 1".into()));
    }
    Ok(grades)
}
