//! Fuzzy sets `M: X → [0,1]` over a finite reference lattice, their cuts, and
//! reconstruction from cut families.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::lattice::{Element, FiniteLattice};

pub type ElementSet = BTreeSet<Element>;

/// True when both handles denote the same reference lattice.
pub fn same_lattice(a: &Arc<FiniteLattice>, b: &Arc<FiniteLattice>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A total membership function over the elements of a lattice.
#[derive(Debug, Clone)]
pub struct FuzzySet {
    lattice: Arc<FiniteLattice>,
    membership: Vec<Grade>,
}

impl PartialEq for FuzzySet {
    fn eq(&self, other: &Self) -> bool {
        self.membership == other.membership && same_lattice(&self.lattice, &other.lattice)
    }
}

impl Eq for FuzzySet {}

impl Hash for FuzzySet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.membership.hash(state);
    }
}

impl FuzzySet {
    /// `membership[i]` is the grade of the element with index `i`.
    pub fn new(lattice: Arc<FiniteLattice>, membership: Vec<Grade>) -> Result<Self> {
        if membership.len() != lattice.len() {
            return Err(Error::NotTotal {
                expected: lattice.len(),
                got: membership.len(),
            });
        }
        Ok(FuzzySet {
            lattice,
            membership,
        })
    }

    pub fn from_fn(lattice: Arc<FiniteLattice>, f: impl FnMut(Element) -> Grade) -> Self {
        let membership = lattice.elements().map(f).collect();
        FuzzySet {
            lattice,
            membership,
        }
    }

    pub fn constant(lattice: Arc<FiniteLattice>, p: Grade) -> Self {
        let membership = vec![p; lattice.len()];
        FuzzySet {
            lattice,
            membership,
        }
    }

    /// The crisp set `set` as a `{0,1}`-valued fuzzy set.
    pub fn characteristic(lattice: Arc<FiniteLattice>, set: &ElementSet) -> Self {
        Self::from_fn(lattice, |x| {
            if set.contains(&x) {
                Grade::ONE
            } else {
                Grade::ZERO
            }
        })
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn grade(&self, x: Element) -> Grade {
        self.membership[x.index()]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.membership
    }

    fn check_same(&self, other: &FuzzySet) -> Result<()> {
        if same_lattice(&self.lattice, &other.lattice) {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }

    /// Pointwise order `M ≤ N`.
    pub fn leq(&self, other: &FuzzySet) -> Result<bool> {
        self.check_same(other)?;
        Ok(self
            .membership
            .iter()
            .zip(&other.membership)
            .all(|(a, b)| a <= b))
    }

    fn zip_with(&self, other: &FuzzySet, f: fn(Grade, Grade) -> Grade) -> Result<FuzzySet> {
        self.check_same(other)?;
        let membership = self
            .membership
            .iter()
            .zip(&other.membership)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(FuzzySet {
            lattice: self.lattice.clone(),
            membership,
        })
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip_with(other, Grade::min)
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip_with(other, Grade::max)
    }

    /// The `p`-cut `{x : M(x) ≥ p}`.
    pub fn cut(&self, p: Grade) -> ElementSet {
        self.lattice
            .elements()
            .filter(|&x| self.grade(x) >= p)
            .collect()
    }

    /// Sorted distinct membership values together with `0` and `1`. Cuts only change at
    /// these grades.
    pub fn threshold_set(&self) -> Vec<Grade> {
        let mut t: Vec<Grade> = self
            .membership
            .iter()
            .copied()
            .chain([Grade::ZERO, Grade::ONE])
            .collect();
        t.sort();
        t.dedup();
        t
    }

    pub fn cut_family(&self) -> CutFamily {
        let thresholds = self.threshold_set();
        let sets = thresholds.iter().map(|&p| self.cut(p)).collect();
        CutFamily {
            lattice: self.lattice.clone(),
            thresholds,
            sets,
        }
    }

    /// Equality decided by comparing cuts at every threshold of either operand.
    pub fn equal_by_cuts(&self, other: &FuzzySet) -> Result<bool> {
        self.check_same(other)?;
        let mut t = self.threshold_set();
        t.extend(other.threshold_set());
        t.sort();
        t.dedup();
        Ok(t.into_iter().all(|p| self.cut(p) == other.cut(p)))
    }

    pub fn display(&self) -> FuzzySetDisplay<'_> {
        FuzzySetDisplay(self)
    }
}

pub struct FuzzySetDisplay<'a>(&'a FuzzySet);

impl fmt::Display for FuzzySetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        f.write_str("{")?;
        for (i, x) in m.lattice.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", m.lattice.element_name(x), m.grade(x))?;
        }
        f.write_str("}")
    }
}

/// Pointwise minimum of a family; the empty family gives constant `1`.
pub fn fs_meet_family<'a, I>(lattice: &Arc<FiniteLattice>, family: I) -> Result<FuzzySet>
where
    I: IntoIterator<Item = &'a FuzzySet>,
{
    family
        .into_iter()
        .try_fold(FuzzySet::constant(lattice.clone(), Grade::ONE), |acc, m| acc.meet(m))
}

/// Pointwise maximum of a family; the empty family gives constant `0`.
pub fn fs_join_family<'a, I>(lattice: &Arc<FiniteLattice>, family: I) -> Result<FuzzySet>
where
    I: IntoIterator<Item = &'a FuzzySet>,
{
    family
        .into_iter()
        .try_fold(FuzzySet::constant(lattice.clone(), Grade::ZERO), |acc, m| acc.join(m))
}

/// A finite antitone family of crisp sets indexed by a grade chain starting at `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutFamily {
    lattice: Arc<FiniteLattice>,
    thresholds: Vec<Grade>,
    sets: Vec<ElementSet>,
}

impl CutFamily {
    /// Validates and builds a family from `(threshold, set)` levels.
    ///
    /// Thresholds must be strictly increasing and start at `0`, the set at `0` must be
    /// the whole lattice, and sets must shrink (weakly) as the threshold grows.
    pub fn new(lattice: Arc<FiniteLattice>, levels: Vec<(Grade, ElementSet)>) -> Result<Self> {
        let invalid = |s: String| Err(Error::InvalidFamily(s));
        if levels.first().map(|l| l.0) != Some(Grade::ZERO) {
            return invalid("thresholds must start at 0".into());
        }
        for w in levels.windows(2) {
            if w[0].0 >= w[1].0 {
                return invalid(format!("thresholds {} and {} out of order", w[0].0, w[1].0));
            }
            if !w[1].1.is_subset(&w[0].1) {
                return invalid(format!(
                    "set at {} is not contained in set at {}",
                    w[1].0, w[0].0
                ));
            }
        }
        for (_, set) in &levels {
            if let Some(x) = set.iter().find(|x| !lattice.contains(**x)) {
                return Err(Error::UnknownElement(format!("#{}", x.index())));
            }
        }
        if levels[0].1.len() != lattice.len() {
            return invalid("set at 0 must be the whole lattice".into());
        }
        let (thresholds, sets) = levels.into_iter().unzip();
        Ok(CutFamily {
            lattice,
            thresholds,
            sets,
        })
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn thresholds(&self) -> &[Grade] {
        &self.thresholds
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn levels(&self) -> impl Iterator<Item = (Grade, &ElementSet)> {
        self.thresholds.iter().copied().zip(&self.sets)
    }

    /// The set at `p`, extended piecewise: the set at the least threshold `≥ p`, or `∅`.
    pub fn set_at(&self, p: Grade) -> ElementSet {
        let i = self.thresholds.partition_point(|&t| t < p);
        self.sets.get(i).cloned().unwrap_or_default()
    }

    /// `M(x) = max {p : x ∈ set(p)}`.
    pub fn reconstruct(&self) -> FuzzySet {
        FuzzySet::from_fn(self.lattice.clone(), |x| {
            self.levels()
                .filter(|(_, s)| s.contains(&x))
                .map(|(p, _)| p)
                .max()
                .unwrap_or(Grade::ZERO)
        })
    }
}

pub fn from_cut_family(f: &CutFamily) -> FuzzySet {
    f.reconstruct()
}
