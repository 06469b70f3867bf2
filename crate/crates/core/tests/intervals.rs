use std::collections::BTreeSet;
use std::sync::Arc;

use fuzzy_lattice::crisp::{interval_join, interval_meet, make_interval};
use fuzzy_lattice::fuzzy_interval::{fi_join, fi_meet, is_fuzzy_interval};
use fuzzy_lattice::grade::parse_grade_set;
use fuzzy_lattice::laws::{enumerate_fuzzy_intervals, enumerate_intervals, oracle_join};
use fuzzy_lattice::{CrispInterval, Element, FiniteLattice, FuzzyInterval, FuzzySet, Grade, StandardLattice};
use proptest::prelude::*;

fn lat(s: &str) -> Arc<FiniteLattice> {
    Arc::new(s.parse::<StandardLattice>().unwrap().build().unwrap())
}

fn el(l: &FiniteLattice, s: &str) -> Element {
    l.element(s).unwrap()
}

fn iv(l: &FiniteLattice, lo: &str, hi: &str) -> CrispInterval {
    make_interval(l, el(l, lo), el(l, hi)).unwrap()
}

/// Counts `lo ⊑ hi` pairs directly from the order, plus one for the empty interval.
fn interval_count(l: &FiniteLattice) -> usize {
    l.elements()
        .map(|x| l.elements().filter(|&y| l.leq(x, y)).count())
        .sum::<usize>()
        + 1
}

/// A set is a closed interval when it is empty or equals `[⊓S, ⊔S]`.
fn is_interval_set(l: &FiniteLattice, s: &BTreeSet<Element>) -> bool {
    if s.is_empty() {
        return true;
    }
    let lo = s.iter().copied().reduce(|a, b| l.meet(a, b)).unwrap();
    let hi = s.iter().copied().reduce(|a, b| l.join(a, b)).unwrap();
    l.elements().all(|z| s.contains(&z) == (l.leq(lo, z) && l.leq(z, hi)))
}

/// Every grade-valued fuzzy set whose cuts are all closed intervals.
fn brute_fuzzy_intervals(l: &Arc<FiniteLattice>, grades: &[Grade]) -> BTreeSet<Vec<Grade>> {
    let n = l.len();
    let k = grades.len();
    let mut found = BTreeSet::new();
    for code in 0..k.pow(n as u32) {
        let mut c = code;
        let m: Vec<Grade> = (0..n)
            .map(|_| {
                let g = grades[c % k];
                c /= k;
                g
            })
            .collect();
        let ok = grades.iter().all(|&p| {
            let cut: BTreeSet<Element> = l.elements().filter(|x| m[x.index()] >= p).collect();
            is_interval_set(l, &cut)
        });
        if ok {
            found.insert(m);
        }
    }
    found
}

#[test]
fn crisp_interval_counts() {
    for (name, expected) in [("chain2", 4), ("m3", 13), ("n5", 14), ("boolean2", 10)] {
        let l = lat(name);
        assert_eq!(enumerate_intervals(&l).len(), expected, "{name}");
        assert_eq!(interval_count(&l), expected, "{name}");
    }
    for n in 1..=7 {
        let l = lat(&format!("chain{n}"));
        assert_eq!(enumerate_intervals(&l).len(), n * (n + 1) / 2 + 1);
    }
}

#[test]
fn enumerated_intervals_are_distinct_and_closed() {
    for name in ["boolean3", "n5", "product(chain2,chain3)"] {
        let l = lat(name);
        let all = enumerate_intervals(&l);
        let distinct: BTreeSet<_> = all.iter().map(|i| format!("{i:?}")).collect();
        assert_eq!(distinct.len(), all.len());
        for a in &all {
            for b in &all {
                assert!(all.contains(&interval_meet(&l, a, b)));
                assert!(all.contains(&interval_join(&l, a, b)));
            }
        }
    }
}

#[test]
fn fuzzy_interval_counts_match_brute_force() {
    let cases = [
        ("chain2", "0,1", 4),
        ("chain2", "0,1/2,1", 9),
        ("m3", "0,1", 13),
        ("chain3", "0,1/2,1", 22),
        ("n5", "0,1/3,2/3,1", 0),
    ];
    for (name, g, expected) in cases {
        let l = lat(name);
        let grades = parse_grade_set(g).unwrap();
        let brute = brute_fuzzy_intervals(&l, &grades);
        if expected > 0 {
            assert_eq!(brute.len(), expected, "{name} {g}");
        }
        let generated: BTreeSet<Vec<Grade>> = enumerate_fuzzy_intervals(&l, &grades)
            .unwrap()
            .iter()
            .map(|m| m.as_fuzzy_set().grades().to_vec())
            .collect();
        assert_eq!(generated, brute, "{name} {g}");
    }
}

#[test]
fn chain3_endpoint_join_is_constant_one() {
    let l = lat("chain3");
    let a = FuzzyInterval::characteristic(l.clone(), &iv(&l, "0", "0"));
    let b = FuzzyInterval::characteristic(l.clone(), &iv(&l, "2", "2"));
    let j = fi_join(&a, &b).unwrap();
    assert_eq!(j, FuzzyInterval::constant(l.clone(), Grade::ONE));
    let grades = parse_grade_set("0,1/2,1").unwrap();
    let all = enumerate_fuzzy_intervals(&l, &grades).unwrap();
    assert_eq!(oracle_join(&all, &a, &b), *j.as_fuzzy_set());
    // the pointwise join is not a fuzzy interval here
    assert!(!is_fuzzy_interval(&a.as_fuzzy_set().join(b.as_fuzzy_set()).unwrap()));
}

#[test]
fn n5_distributivity_witness() {
    let l = lat("n5");
    let (a, b, c) = (iv(&l, "a", "a"), iv(&l, "b", "b"), iv(&l, "c", "c"));
    let lhs = interval_meet(&l, &interval_join(&l, &a, &b), &c);
    let rhs = interval_join(&l, &interval_meet(&l, &a, &c), &interval_meet(&l, &b, &c));
    assert_eq!(interval_join(&l, &a, &b), iv(&l, "0", "1"));
    assert_eq!(lhs, c);
    assert_eq!(rhs, CrispInterval::Empty);

    let chi = |i: &CrispInterval| FuzzyInterval::characteristic(l.clone(), i);
    let (fa, fb, fc) = (chi(&a), chi(&b), chi(&c));
    let lhs = fi_meet(&fi_join(&fa, &fb).unwrap(), &fc).unwrap();
    let rhs = fi_join(&fi_meet(&fa, &fc).unwrap(), &fi_meet(&fb, &fc).unwrap()).unwrap();
    assert_eq!(lhs, fc);
    assert_eq!(rhs, chi(&CrispInterval::Empty));
}

#[test]
fn interval_lattice_of_a_three_chain_is_not_distributive() {
    // the same shape as the N5 witness, inside a chain: a ⊓ (b ⊔ c) keeps the middle point
    let l = lat("chain3");
    let (a, b, c) = (iv(&l, "1", "1"), iv(&l, "0", "0"), iv(&l, "2", "2"));
    let lhs = interval_meet(&l, &a, &interval_join(&l, &b, &c));
    let rhs = interval_join(&l, &interval_meet(&l, &a, &b), &interval_meet(&l, &a, &c));
    assert_eq!(lhs, a);
    assert_eq!(rhs, CrispInterval::Empty);
}

fn grade_vec(n: usize) -> impl Strategy<Value = Vec<Grade>> {
    proptest::collection::vec(0u64..=4, n)
        .prop_map(|v| v.into_iter().map(|k| Grade::new(k, 4).unwrap()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn meet_and_join_stay_fuzzy_intervals(a in grade_vec(5), b in grade_vec(5)) {
        let l = lat("n5");
        let (m, n) = (FuzzySet::new(l.clone(), a).unwrap(), FuzzySet::new(l.clone(), b).unwrap());
        if let (Ok(m), Ok(n)) = (FuzzyInterval::new(m), FuzzyInterval::new(n)) {
            let meet = fi_meet(&m, &n).unwrap();
            let join = fi_join(&m, &n).unwrap();
            prop_assert!(is_fuzzy_interval(meet.as_fuzzy_set()));
            prop_assert!(is_fuzzy_interval(join.as_fuzzy_set()));
            prop_assert!(meet.leq(&m).unwrap() && meet.leq(&n).unwrap());
            prop_assert!(m.leq(&join).unwrap() && n.leq(&join).unwrap());
            prop_assert_eq!(fi_join(&m, &m).unwrap(), m.clone());
        }
    }

    #[test]
    fn cut_roundtrip(a in grade_vec(8)) {
        let l = lat("boolean3");
        let m = FuzzySet::new(l.clone(), a).unwrap();
        prop_assert_eq!(m.cut_family().reconstruct(), m);
    }
}
