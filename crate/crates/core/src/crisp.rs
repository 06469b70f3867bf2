//! The lattice `(I, ⊆, ∪̇, ∩)` of closed intervals `[lo, hi] = {z : lo ⊑ z ⊑ hi}`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Element, FiniteLattice};

/// A closed interval of a reference lattice, or the empty interval.
///
/// `Empty` is the only representation of the empty set; a `Range` always has `lo ⊑ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrispInterval {
    Empty,
    Range { lo: Element, hi: Element },
}

impl CrispInterval {
    pub fn is_empty(&self) -> bool {
        matches!(self, CrispInterval::Empty)
    }

    /// `z ∈ self`
    pub fn contains(&self, l: &FiniteLattice, z: Element) -> bool {
        match *self {
            CrispInterval::Empty => false,
            CrispInterval::Range { lo, hi } => l.leq(lo, z) && l.leq(z, hi),
        }
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, l: &FiniteLattice, other: &CrispInterval) -> bool {
        match (*self, *other) {
            (CrispInterval::Empty, _) => true,
            (_, CrispInterval::Empty) => false,
            (CrispInterval::Range { lo: a1, hi: a2 }, CrispInterval::Range { lo: b1, hi: b2 }) => {
                l.leq(b1, a1) && l.leq(a2, b2)
            }
        }
    }

    pub fn display<'a>(&'a self, l: &'a FiniteLattice) -> IntervalDisplay<'a> {
        IntervalDisplay {
            interval: self,
            lattice: l,
            ascii: false,
        }
    }

    pub fn display_ascii<'a>(&'a self, l: &'a FiniteLattice) -> IntervalDisplay<'a> {
        IntervalDisplay {
            interval: self,
            lattice: l,
            ascii: true,
        }
    }
}

pub struct IntervalDisplay<'a> {
    interval: &'a CrispInterval,
    lattice: &'a FiniteLattice,
    ascii: bool,
}

impl fmt::Display for IntervalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self.interval {
            CrispInterval::Empty if self.ascii => f.write_str("empty"),
            CrispInterval::Empty => f.write_str("∅"),
            CrispInterval::Range { lo, hi } => write!(
                f,
                "[{},{}]",
                self.lattice.element_name(lo),
                self.lattice.element_name(hi)
            ),
        }
    }
}

/// Normalizing constructor: `Empty` unless `lo ⊑ hi`. Does not validate membership.
fn normalized(l: &FiniteLattice, lo: Element, hi: Element) -> CrispInterval {
    if l.leq(lo, hi) {
        CrispInterval::Range { lo, hi }
    } else {
        CrispInterval::Empty
    }
}

pub fn make_interval(l: &FiniteLattice, lo: Element, hi: Element) -> Result<CrispInterval> {
    let lo = l.checked_meet(lo, lo)?;
    let hi = l.checked_meet(hi, hi)?;
    Ok(normalized(l, lo, hi))
}

/// The whole reference lattice `[⊓X, ⊔X]`.
pub fn whole(l: &FiniteLattice) -> CrispInterval {
    CrispInterval::Range {
        lo: l.bottom(),
        hi: l.top(),
    }
}

pub fn members(l: &FiniteLattice, i: &CrispInterval) -> BTreeSet<Element> {
    match *i {
        CrispInterval::Empty => BTreeSet::new(),
        CrispInterval::Range { lo, hi } => l.up_set(lo).filter(|&z| l.leq(z, hi)).collect(),
    }
}

/// `A ∩ B = [a1⊔b1, a2⊓b2]`
pub fn interval_meet(l: &FiniteLattice, a: &CrispInterval, b: &CrispInterval) -> CrispInterval {
    match (*a, *b) {
        (CrispInterval::Range { lo: a1, hi: a2 }, CrispInterval::Range { lo: b1, hi: b2 }) => {
            normalized(l, l.join(a1, b1), l.meet(a2, b2))
        }
        _ => CrispInterval::Empty,
    }
}

/// `A ∪̇ B`, the least closed interval containing both: `[a1⊓b1, a2⊔b2]` for nonempty
/// operands, and the other operand when one side is empty.
pub fn interval_join(l: &FiniteLattice, a: &CrispInterval, b: &CrispInterval) -> CrispInterval {
    match (*a, *b) {
        (CrispInterval::Empty, other) | (other, CrispInterval::Empty) => other,
        (CrispInterval::Range { lo: a1, hi: a2 }, CrispInterval::Range { lo: b1, hi: b2 }) => {
            CrispInterval::Range {
                lo: l.meet(a1, b1),
                hi: l.join(a2, b2),
            }
        }
    }
}

/// Intersection of a family: `[⊔ lower ends, ⊓ upper ends]`. The empty family gives
/// the whole lattice.
pub fn interval_meet_family<'a, I>(l: &FiniteLattice, family: I) -> CrispInterval
where
    I: IntoIterator<Item = &'a CrispInterval>,
{
    let mut lo = l.bottom();
    let mut hi = l.top();
    for i in family {
        match *i {
            CrispInterval::Empty => return CrispInterval::Empty,
            CrispInterval::Range { lo: a1, hi: a2 } => {
                lo = l.join(lo, a1);
                hi = l.meet(hi, a2);
            }
        }
    }
    normalized(l, lo, hi)
}

/// Endpoints recovered from the member set as `(⊓A, ⊔A)`.
pub fn endpoints(l: &FiniteLattice, i: &CrispInterval) -> Result<(Element, Element)> {
    if i.is_empty() {
        return Err(Error::EmptyInterval);
    }
    let m = members(l, i);
    let lo = l.meet_set(m.iter().copied());
    let hi = l.join_set(m.iter().copied());
    debug_assert_eq!(*i, CrispInterval::Range { lo, hi });
    Ok((lo, hi))
}

/// The closed interval whose member set is exactly `set`, if there is one.
pub fn as_interval(l: &FiniteLattice, set: &BTreeSet<Element>) -> Option<CrispInterval> {
    if set.is_empty() {
        return Some(CrispInterval::Empty);
    }
    let lo = l.meet_set(set.iter().copied());
    let hi = l.join_set(set.iter().copied());
    let hull = CrispInterval::Range { lo, hi };
    l.up_set(lo)
        .filter(|&z| l.leq(z, hi))
        .all(|z| set.contains(&z))
        .then_some(hull)
}
