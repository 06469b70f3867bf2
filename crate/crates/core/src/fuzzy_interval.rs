//! Fuzzy sublattices, fuzzy convex sublattices and fuzzy intervals.
//!
//! A fuzzy interval is a fuzzy set whose every cut is a closed interval of the reference
//! lattice. Each classification predicate has two independent implementations: one that
//! inspects the cuts directly, and one that tests a pointwise inequality on the membership
//! function. The two must agree; the law checker verifies this exhaustively.
//!
//! Fuzzy intervals form a lattice under pointwise meet and the interval-hull join
//! [`fi_join`], which is built cut by cut from `D_p = M_p ∪̇ N_p`.

use std::fmt;
use std::sync::Arc;

use crate::crisp::{self, CrispInterval};
use crate::error::{Error, Result};
use crate::fuzzy_set::{CutFamily, ElementSet, FuzzySet};
use crate::grade::Grade;
use crate::lattice::{Element, FiniteLattice};

/// Where a classification predicate fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// `M(x⊓y) ∧ M(x⊔y) < M(x) ∧ M(y)`
    Pair(Element, Element),
    /// `z ∈ [x⊓y, x⊔y]` but `M(z) < M(x⊓y) ∧ M(x⊔y)`
    Convexity { x: Element, y: Element, z: Element },
    /// The cut at this threshold is not of the required shape.
    Threshold(Grade),
}

impl Witness {
    pub fn render(&self, l: &FiniteLattice) -> String {
        match *self {
            Witness::Pair(x, y) => format!("({},{})", l.element_name(x), l.element_name(y)),
            Witness::Convexity { x, y, z } => format!(
                "({},{},z={})",
                l.element_name(x),
                l.element_name(y),
                l.element_name(z)
            ),
            Witness::Threshold(p) => format!("threshold {p}"),
        }
    }
}

fn pairs(l: &FiniteLattice) -> impl Iterator<Item = (Element, Element)> + '_ {
    l.elements()
        .flat_map(move |x| l.elements().filter(move |&y| x < y).map(move |y| (x, y)))
}

// ---------------------------------------------------------------------------
// fuzzy sublattices

/// First threshold whose cut is not closed under `⊓` and `⊔`.
pub fn sublattice_violation_by_cuts(m: &FuzzySet) -> Option<Grade> {
    let l = m.lattice();
    m.threshold_set().into_iter().find(|&p| {
        let cut = m.cut(p);
        cut.iter().any(|&x| {
            cut.iter()
                .any(|&y| !cut.contains(&l.meet(x, y)) || !cut.contains(&l.join(x, y)))
        })
    })
}

/// First pair violating `M(x⊓y) ∧ M(x⊔y) ≥ M(x) ∧ M(y)`.
pub fn sublattice_violation_pointwise(m: &FuzzySet) -> Option<(Element, Element)> {
    let l = m.lattice();
    pairs(l).find(|&(x, y)| {
        m.grade(l.meet(x, y)).min(m.grade(l.join(x, y))) < m.grade(x).min(m.grade(y))
    })
}

pub fn is_fuzzy_sublattice(m: &FuzzySet) -> bool {
    let pointwise = sublattice_violation_pointwise(m).is_none();
    debug_assert_eq!(
        pointwise,
        sublattice_violation_by_cuts(m).is_none(),
        "cut-wise and pointwise fuzzy-sublattice tests disagree"
    );
    pointwise
}

// ---------------------------------------------------------------------------
// fuzzy convex sublattices

/// First threshold whose cut is not a convex sublattice, i.e. some `x, y` in the cut
/// with `[x⊓y, x⊔y]` not contained in it.
pub fn convexity_violation_by_cuts(m: &FuzzySet) -> Option<Grade> {
    let l = m.lattice();
    m.threshold_set().into_iter().find(|&p| {
        let cut = m.cut(p);
        cut.iter().any(|&x| {
            cut.iter().any(|&y| {
                let hull = CrispInterval::Range {
                    lo: l.meet(x, y),
                    hi: l.join(x, y),
                };
                l.elements()
                    .any(|z| hull.contains(l, z) && !cut.contains(&z))
            })
        })
    })
}

/// Pointwise convexity test: the fuzzy-sublattice inequality, then for all `x, y` and
/// all `z ∈ [x⊓y, x⊔y]`, `M(z) ≥ M(x⊓y) ∧ M(x⊔y) = M(x) ∧ M(y)`.
///
/// Incomparable pairs are searched before comparable ones so that the reported witness
/// names a genuine "gap" between two elements where one exists.
pub fn convexity_violation_pointwise(m: &FuzzySet) -> Option<Witness> {
    if let Some((x, y)) = sublattice_violation_pointwise(m) {
        return Some(Witness::Pair(x, y));
    }
    let l = m.lattice();
    let comparable = |x, y| l.leq(x, y) || l.leq(y, x);
    let ordered = pairs(l)
        .filter(|&(x, y)| !comparable(x, y))
        .chain(pairs(l).filter(|&(x, y)| comparable(x, y)));
    for (x, y) in ordered {
        let (lo, hi) = (l.meet(x, y), l.join(x, y));
        let floor = m.grade(lo).min(m.grade(hi));
        if floor != m.grade(x).min(m.grade(y)) {
            return Some(Witness::Pair(x, y));
        }
        let hull = CrispInterval::Range { lo, hi };
        if let Some(z) = l
            .elements()
            .find(|&z| hull.contains(l, z) && m.grade(z) < floor)
        {
            return Some(Witness::Convexity { x, y, z });
        }
    }
    None
}

pub fn is_fuzzy_convex_sublattice(m: &FuzzySet) -> bool {
    let pointwise = convexity_violation_pointwise(m).is_none();
    debug_assert_eq!(
        pointwise,
        convexity_violation_by_cuts(m).is_none(),
        "cut-wise and pointwise convexity tests disagree"
    );
    pointwise
}

// ---------------------------------------------------------------------------
// fuzzy intervals

/// First threshold whose cut is not a closed interval.
pub fn interval_violation_by_cuts(m: &FuzzySet) -> Option<Grade> {
    let l = m.lattice();
    m.threshold_set()
        .into_iter()
        .find(|&p| crisp::as_interval(l, &m.cut(p)).is_none())
}

/// For every threshold with a nonempty cut, both `M(⊓M_p)` and `M(⊔M_p)` are at least
/// the least grade attained on `M_p`. Returns the first threshold where this fails.
pub fn endpoint_grade_violation(m: &FuzzySet) -> Option<Grade> {
    let l = m.lattice();
    m.threshold_set().into_iter().find(|&p| {
        let cut = m.cut(p);
        let Some(floor) = cut.iter().map(|&x| m.grade(x)).min() else {
            return false;
        };
        let lo = l.meet_set(cut.iter().copied());
        let hi = l.join_set(cut.iter().copied());
        m.grade(lo) < floor || m.grade(hi) < floor
    })
}

/// Fuzzy-interval test through convexity plus the endpoint-grade condition.
pub fn interval_violation_pointwise(m: &FuzzySet) -> Option<Witness> {
    convexity_violation_pointwise(m).or_else(|| endpoint_grade_violation(m).map(Witness::Threshold))
}

pub fn is_fuzzy_interval(m: &FuzzySet) -> bool {
    let by_cuts = interval_violation_by_cuts(m).is_none();
    debug_assert_eq!(
        by_cuts,
        interval_violation_pointwise(m).is_none(),
        "cut-wise and pointwise fuzzy-interval tests disagree"
    );
    by_cuts
}

/// The strongest class in the ladder
/// fuzzy interval ⊂ fuzzy convex sublattice ⊂ fuzzy sublattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzyClass {
    FuzzyInterval,
    FuzzyConvexSublattice,
    FuzzySublattice,
    None,
}

impl FuzzyClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            FuzzyClass::FuzzyInterval => "fuzzy-interval",
            FuzzyClass::FuzzyConvexSublattice => "fuzzy-convex-sublattice",
            FuzzyClass::FuzzySublattice => "fuzzy-sublattice",
            FuzzyClass::None => "none",
        }
    }
}

impl fmt::Display for FuzzyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: FuzzyClass,
    /// Why the next stronger class fails; `None` for fuzzy intervals.
    pub witness: Option<Witness>,
}

pub fn classify(m: &FuzzySet) -> Classification {
    if let Some((x, y)) = sublattice_violation_pointwise(m) {
        return Classification {
            class: FuzzyClass::None,
            witness: Some(Witness::Pair(x, y)),
        };
    }
    if let Some(w) = convexity_violation_pointwise(m) {
        return Classification {
            class: FuzzyClass::FuzzySublattice,
            witness: Some(w),
        };
    }
    match interval_violation_by_cuts(m) {
        Some(p) => Classification {
            class: FuzzyClass::FuzzyConvexSublattice,
            witness: Some(Witness::Threshold(p)),
        },
        None => Classification {
            class: FuzzyClass::FuzzyInterval,
            witness: None,
        },
    }
}

/// A fuzzy set all of whose cuts are closed intervals.
#[derive(Debug, Clone)]
pub struct FuzzyInterval {
    set: FuzzySet,
    /// Cut intervals at `set.threshold_set()`.
    cuts: Vec<(Grade, CrispInterval)>,
}

impl PartialEq for FuzzyInterval {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}

impl Eq for FuzzyInterval {}

impl std::hash::Hash for FuzzyInterval {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl FuzzyInterval {
    pub fn new(set: FuzzySet) -> Result<Self> {
        let l = set.lattice().clone();
        let cuts = set
            .threshold_set()
            .into_iter()
            .map(|p| {
                crisp::as_interval(&l, &set.cut(p))
                    .map(|i| (p, i))
                    .ok_or_else(|| Error::NotAFuzzyInterval(p.to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(FuzzyInterval { set, cuts })
    }

    pub fn constant(lattice: Arc<FiniteLattice>, p: Grade) -> Self {
        FuzzyInterval::new(FuzzySet::constant(lattice, p)).expect("constant sets are fuzzy intervals")
    }

    /// The characteristic function of a crisp interval.
    pub fn characteristic(lattice: Arc<FiniteLattice>, i: &CrispInterval) -> Self {
        let set = crisp::members(&lattice, i);
        FuzzyInterval::new(FuzzySet::characteristic(lattice, &set))
            .expect("characteristic functions of intervals are fuzzy intervals")
    }

    pub fn as_fuzzy_set(&self) -> &FuzzySet {
        &self.set
    }

    pub fn into_fuzzy_set(self) -> FuzzySet {
        self.set
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        self.set.lattice()
    }

    pub fn grade(&self, x: Element) -> Grade {
        self.set.grade(x)
    }

    pub fn threshold_set(&self) -> Vec<Grade> {
        self.cuts.iter().map(|c| c.0).collect()
    }

    /// The cut at any grade `p` as a closed interval.
    pub fn cut_interval(&self, p: Grade) -> CrispInterval {
        let i = self.cuts.partition_point(|c| c.0 < p);
        self.cuts.get(i).map_or(CrispInterval::Empty, |c| c.1)
    }

    pub fn cut_intervals(&self) -> &[(Grade, CrispInterval)] {
        &self.cuts
    }

    pub fn leq(&self, other: &FuzzyInterval) -> Result<bool> {
        self.set.leq(&other.set)
    }

    pub fn meet(&self, other: &FuzzyInterval) -> Result<FuzzyInterval> {
        fi_meet(self, other)
    }

    pub fn join(&self, other: &FuzzyInterval) -> Result<FuzzyInterval> {
        fi_join(self, other)
    }

    pub fn endpoint_functions(&self) -> EndpointFunctions {
        let l = self.lattice();
        let mut ef = EndpointFunctions {
            lattice: l.clone(),
            thresholds: Vec::with_capacity(self.cuts.len()),
            lower: Vec::with_capacity(self.cuts.len()),
            upper: Vec::with_capacity(self.cuts.len()),
            nonempty: Vec::with_capacity(self.cuts.len()),
        };
        for &(p, cut) in &self.cuts {
            let (lo, hi, ne) = match cut {
                CrispInterval::Range { lo, hi } => (lo, hi, true),
                CrispInterval::Empty => (l.top(), l.bottom(), false),
            };
            ef.thresholds.push(p);
            ef.lower.push(lo);
            ef.upper.push(hi);
            ef.nonempty.push(ne);
        }
        ef
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        self.set.display()
    }
}

impl TryFrom<FuzzySet> for FuzzyInterval {
    type Error = Error;

    fn try_from(set: FuzzySet) -> Result<Self> {
        FuzzyInterval::new(set)
    }
}

/// Lower and upper endpoint functions `p ↦ ⊓M_p`, `p ↦ ⊔M_p` on the thresholds of a
/// fuzzy interval. Empty cuts map to the reversed pair `(⊔X, ⊓X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointFunctions {
    lattice: Arc<FiniteLattice>,
    thresholds: Vec<Grade>,
    lower: Vec<Element>,
    upper: Vec<Element>,
    nonempty: Vec<bool>,
}

impl EndpointFunctions {
    pub fn thresholds(&self) -> &[Grade] {
        &self.thresholds
    }

    fn slot(&self, p: Grade) -> Option<usize> {
        let i = self.thresholds.partition_point(|&t| t < p);
        (i < self.thresholds.len()).then_some(i)
    }

    /// `⊓M_p` for any grade, `⊔X` when the cut is empty.
    pub fn lower(&self, p: Grade) -> Element {
        self.slot(p).map_or(self.lattice.top(), |i| self.lower[i])
    }

    /// `⊔M_p` for any grade, `⊓X` when the cut is empty.
    pub fn upper(&self, p: Grade) -> Element {
        self.slot(p).map_or(self.lattice.bottom(), |i| self.upper[i])
    }

    /// Whether the cut at `p` is nonempty.
    pub fn is_attained(&self, p: Grade) -> bool {
        self.slot(p).is_some_and(|i| self.nonempty[i])
    }

    /// `[lower(p), upper(p)]`, i.e. the cut at `p`.
    pub fn interval(&self, p: Grade) -> CrispInterval {
        if self.is_attained(p) {
            CrispInterval::Range {
                lo: self.lower(p),
                hi: self.upper(p),
            }
        } else {
            CrispInterval::Empty
        }
    }
}

pub fn endpoint_functions(m: &FuzzySet) -> Result<EndpointFunctions> {
    Ok(FuzzyInterval::new(m.clone())?.endpoint_functions())
}

fn check_same(m: &FuzzyInterval, n: &FuzzyInterval) -> Result<()> {
    if crate::fuzzy_set::same_lattice(m.lattice(), n.lattice()) {
        Ok(())
    } else {
        Err(Error::LatticeMismatch)
    }
}

fn union_thresholds(m: &FuzzyInterval, n: &FuzzyInterval) -> Vec<Grade> {
    let mut t = m.threshold_set();
    t.extend(n.threshold_set());
    t.sort();
    t.dedup();
    t
}

/// `C_p(M, N) = M_p ∩ N_p`
pub fn meet_cut(m: &FuzzyInterval, n: &FuzzyInterval, p: Grade) -> CrispInterval {
    crisp::interval_meet(m.lattice(), &m.cut_interval(p), &n.cut_interval(p))
}

/// `D_p(M, N) = M_p ∪̇ N_p`
pub fn join_cut(m: &FuzzyInterval, n: &FuzzyInterval, p: Grade) -> CrispInterval {
    crisp::interval_join(m.lattice(), &m.cut_interval(p), &n.cut_interval(p))
}

fn cut_family_with(
    m: &FuzzyInterval,
    n: &FuzzyInterval,
    op: fn(&FuzzyInterval, &FuzzyInterval, Grade) -> CrispInterval,
) -> Result<CutFamily> {
    check_same(m, n)?;
    let l = m.lattice();
    let levels = union_thresholds(m, n)
        .into_iter()
        .map(|p| (p, crisp::members(l, &op(m, n, p))))
        .collect::<Vec<(Grade, ElementSet)>>();
    CutFamily::new(l.clone(), levels)
}

/// The family `{C_p(M, N)}` at the union of both threshold sets.
pub fn meet_cut_family(m: &FuzzyInterval, n: &FuzzyInterval) -> Result<CutFamily> {
    cut_family_with(m, n, meet_cut)
}

/// The family `{D_p(M, N)}` at the union of both threshold sets.
pub fn join_cut_family(m: &FuzzyInterval, n: &FuzzyInterval) -> Result<CutFamily> {
    cut_family_with(m, n, join_cut)
}

/// Pointwise minimum.
pub fn fi_meet(m: &FuzzyInterval, n: &FuzzyInterval) -> Result<FuzzyInterval> {
    let set = m.set.meet(&n.set)?;
    Ok(FuzzyInterval::new(set).expect("the meet of fuzzy intervals must be a fuzzy interval"))
}

/// The least fuzzy interval above both operands, reconstructed from the cut family
/// `D_p = M_p ∪̇ N_p`.
pub fn fi_join(m: &FuzzyInterval, n: &FuzzyInterval) -> Result<FuzzyInterval> {
    let family = join_cut_family(m, n)?;
    let set = family.reconstruct();
    Ok(FuzzyInterval::new(set).expect("interval-hull cuts must reconstruct a fuzzy interval"))
}

/// Meet of a family; the empty family gives constant `1`.
pub fn fi_meet_family<'a, I>(lattice: &Arc<FiniteLattice>, family: I) -> Result<FuzzyInterval>
where
    I: IntoIterator<Item = &'a FuzzyInterval>,
{
    family
        .into_iter()
        .try_fold(FuzzyInterval::constant(lattice.clone(), Grade::ONE), |acc, m| {
            fi_meet(&acc, m)
        })
}

/// Join of a family as a left fold of [`fi_join`]; the empty family gives constant `0`.
pub fn fi_join_family<'a, I>(lattice: &Arc<FiniteLattice>, family: I) -> Result<FuzzyInterval>
where
    I: IntoIterator<Item = &'a FuzzyInterval>,
{
    family
        .into_iter()
        .try_fold(FuzzyInterval::constant(lattice.clone(), Grade::ZERO), |acc, m| {
            fi_join(&acc, m)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::StandardLattice;

    fn lat(s: &str) -> Arc<FiniteLattice> {
        Arc::new(s.parse::<StandardLattice>().unwrap().build().unwrap())
    }

    fn g(s: &str) -> Grade {
        s.parse().unwrap()
    }

    fn fs(l: &Arc<FiniteLattice>, grades: &[&str]) -> FuzzySet {
        FuzzySet::new(l.clone(), grades.iter().map(|s| g(s)).collect()).unwrap()
    }

    fn fi(l: &Arc<FiniteLattice>, grades: &[&str]) -> FuzzyInterval {
        FuzzyInterval::new(fs(l, grades)).unwrap()
    }

    fn el(l: &FiniteLattice, s: &str) -> Element {
        l.element(s).unwrap()
    }

    fn iv(l: &FiniteLattice, lo: &str, hi: &str) -> CrispInterval {
        crisp::make_interval(l, el(l, lo), el(l, hi)).unwrap()
    }

    #[test]
    fn sublattice_examples() {
        let b2 = lat("boolean2");
        // order: 0, a, b, 1
        let good = fs(&b2, &["0", "1", "0", "1"]);
        let bad = fs(&b2, &["0", "1", "1", "0"]);
        assert!(is_fuzzy_sublattice(&good));
        assert_eq!(sublattice_violation_by_cuts(&good), None);
        assert!(!is_fuzzy_sublattice(&bad));
        assert_eq!(sublattice_violation_by_cuts(&bad), Some(Grade::ONE));
        assert_eq!(
            sublattice_violation_pointwise(&bad),
            Some((el(&b2, "a"), el(&b2, "b")))
        );
        assert!(is_fuzzy_sublattice(&FuzzySet::constant(b2.clone(), g("1/3"))));
        // sublattice {0, a}
        let chi = FuzzySet::characteristic(b2.clone(), &[el(&b2, "0"), el(&b2, "a")].into());
        assert!(is_fuzzy_sublattice(&chi));
    }

    #[test]
    fn convexity_examples() {
        let m3 = lat("m3");
        // order: 0, a, b, c, 1
        let m = fs(&m3, &["1", "1", "1", "0", "1"]);
        assert!(is_fuzzy_sublattice(&m));
        assert!(!is_fuzzy_convex_sublattice(&m));
        assert_eq!(convexity_violation_by_cuts(&m), Some(Grade::ONE));
        assert_eq!(
            convexity_violation_pointwise(&m),
            Some(Witness::Convexity {
                x: el(&m3, "a"),
                y: el(&m3, "b"),
                z: el(&m3, "c")
            })
        );
        let chi = FuzzyInterval::characteristic(m3.clone(), &iv(&m3, "a", "1"));
        assert!(is_fuzzy_convex_sublattice(chi.as_fuzzy_set()));
        assert!(is_fuzzy_convex_sublattice(&FuzzySet::constant(m3, g("1/2"))));
    }

    #[test]
    fn interval_examples() {
        let b2 = lat("boolean2");
        let m = fs(&b2, &["1", "1", "0", "1"]);
        assert!(!is_fuzzy_interval(&m));
        assert_eq!(interval_violation_by_cuts(&m), Some(Grade::ONE));
        assert!(interval_violation_pointwise(&m).is_some());
        assert!(FuzzyInterval::new(m).is_err());

        let c3 = lat("chain3");
        assert!(is_fuzzy_interval(&fs(&c3, &["1/2", "1", "0"])));
        assert!(!is_fuzzy_interval(&fs(&c3, &["1", "0", "1"])));
    }

    #[test]
    fn classification_ladder() {
        let m3 = lat("m3");
        let chi = FuzzyInterval::characteristic(m3.clone(), &iv(&m3, "a", "1"));
        let c = classify(chi.as_fuzzy_set());
        assert_eq!(c, Classification { class: FuzzyClass::FuzzyInterval, witness: None });

        let m = fs(&m3, &["1", "1", "1", "0", "1"]);
        let c = classify(&m);
        assert_eq!(c.class, FuzzyClass::FuzzySublattice);
        assert_eq!(c.witness.unwrap().render(&m3), "(a,b,z=c)");

        // a and b high, their meet and join low
        let m = fs(&m3, &["0", "1", "1", "1/2", "1/4"]);
        let c = classify(&m);
        assert_eq!(c.class, FuzzyClass::None);
        assert_eq!(c.witness, Some(Witness::Pair(el(&m3, "a"), el(&m3, "b"))));
    }

    #[test]
    fn endpoint_function_examples() {
        let c3 = lat("chain3");
        let ef = FuzzyInterval::constant(c3.clone(), Grade::ONE).endpoint_functions();
        for &p in ef.thresholds() {
            assert_eq!((ef.lower(p), ef.upper(p)), (c3.bottom(), c3.top()));
        }

        let m = fi(&c3, &["1", "1/2", "0"]);
        let ef = m.endpoint_functions();
        let (e0, e1, e2) = (el(&c3, "0"), el(&c3, "1"), el(&c3, "2"));
        assert_eq!((ef.lower(Grade::ONE), ef.upper(Grade::ONE)), (e0, e0));
        assert_eq!((ef.lower(g("1/2")), ef.upper(g("1/2"))), (e0, e1));
        assert_eq!((ef.lower(Grade::ZERO), ef.upper(Grade::ZERO)), (e0, e2));
        for &p in ef.thresholds() {
            assert_eq!(ef.interval(p), m.cut_interval(p));
        }

        let m = fi(&c3, &["1/2", "1/2", "0"]);
        let ef = m.endpoint_functions();
        assert_eq!((ef.lower(Grade::ONE), ef.upper(Grade::ONE)), (c3.top(), c3.bottom()));
        assert_eq!(ef.interval(Grade::ONE), CrispInterval::Empty);

        assert!(matches!(
            endpoint_functions(&fs(&c3, &["1", "0", "1"])),
            Err(Error::NotAFuzzyInterval(_))
        ));
    }

    #[test]
    fn empty_cut_on_a_single_point() {
        let c1 = lat("chain1");
        let m = fi(&c1, &["1/2"]);
        let ef = m.endpoint_functions();
        assert_eq!(ef.interval(Grade::ONE), CrispInterval::Empty);
        assert_eq!(ef.lower(Grade::ONE), ef.upper(Grade::ONE));
    }

    #[test]
    fn meet_examples() {
        let c3 = lat("chain3");
        let m = fi(&c3, &["1", "1/2", "0"]);
        let n = fi(&c3, &["0", "1/2", "1"]);
        assert_eq!(fi_meet(&m, &FuzzyInterval::constant(c3.clone(), Grade::ONE)).unwrap(), m);
        assert_eq!(fi_meet(&m, &n).unwrap(), fi(&c3, &["0", "1/2", "0"]));
        let a = FuzzyInterval::characteristic(c3.clone(), &iv(&c3, "0", "0"));
        let b = FuzzyInterval::characteristic(c3.clone(), &iv(&c3, "2", "2"));
        assert_eq!(
            fi_meet(&a, &b).unwrap(),
            FuzzyInterval::constant(c3.clone(), Grade::ZERO)
        );
    }

    #[test]
    fn join_examples() {
        let c3 = lat("chain3");
        let m = fi(&c3, &["1", "1/2", "0"]);
        let n = fi(&c3, &["0", "1/2", "1"]);
        assert_eq!(fi_join(&m, &m).unwrap(), m);
        assert_eq!(fi_join(&m, &n).unwrap(), fi(&c3, &["1", "1", "1"]));

        let a = FuzzyInterval::characteristic(c3.clone(), &iv(&c3, "0", "0"));
        let b = FuzzyInterval::characteristic(c3.clone(), &iv(&c3, "2", "2"));
        let j = fi_join(&a, &b).unwrap();
        assert_eq!(j, FuzzyInterval::constant(c3.clone(), Grade::ONE));
        // strictly above the pointwise max
        let pointwise = a.as_fuzzy_set().join(b.as_fuzzy_set()).unwrap();
        assert!(pointwise.leq(j.as_fuzzy_set()).unwrap());
        assert_ne!(&pointwise, j.as_fuzzy_set());
    }

    #[test]
    fn lattice_mismatch() {
        let a = FuzzyInterval::constant(lat("chain2"), Grade::ONE);
        let b = FuzzyInterval::constant(lat("chain3"), Grade::ONE);
        assert_eq!(fi_meet(&a, &b), Err(Error::LatticeMismatch));
        assert_eq!(fi_join(&a, &b), Err(Error::LatticeMismatch));
    }

    #[test]
    fn family_operations() {
        let m3 = lat("m3");
        let m = FuzzyInterval::characteristic(m3.clone(), &iv(&m3, "a", "1"));
        assert_eq!(fi_meet_family(&m3, [&m]).unwrap(), m);
        assert_eq!(fi_join_family(&m3, [&m]).unwrap(), m);
        assert_eq!(
            fi_meet_family(&m3, []).unwrap(),
            FuzzyInterval::constant(m3.clone(), Grade::ONE)
        );
        assert_eq!(
            fi_join_family(&m3, []).unwrap(),
            FuzzyInterval::constant(m3.clone(), Grade::ZERO)
        );
        let atoms: Vec<FuzzyInterval> = ["a", "b", "c"]
            .iter()
            .map(|x| FuzzyInterval::characteristic(m3.clone(), &iv(&m3, x, x)))
            .collect();
        assert_eq!(
            fi_join_family(&m3, &atoms).unwrap(),
            FuzzyInterval::constant(m3.clone(), Grade::ONE)
        );
    }

    #[test]
    fn cut_families_of_operations() {
        let c3 = lat("chain3");
        let m = fi(&c3, &["1", "1/2", "0"]);
        let n = fi(&c3, &["0", "1/2", "1"]);
        let d = join_cut_family(&m, &n).unwrap();
        assert_eq!(d.thresholds(), &[Grade::ZERO, g("1/2"), Grade::ONE]);
        assert!(d.sets().iter().all(|s| s.len() == 3));
        let c = meet_cut_family(&m, &n).unwrap();
        assert_eq!(c.sets()[2], ElementSet::new());
        assert_eq!(c.sets()[1], [el(&c3, "1")].into());
    }
}
