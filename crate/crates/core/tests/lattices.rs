use fuzzy_lattice::io::{lattice_to_json, parse_lattice};
use fuzzy_lattice::{Element, FiniteLattice, StandardLattice};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = StandardLattice> {
    prop_oneof![
        (1usize..=5).prop_map(StandardLattice::Chain),
        (0u32..=3).prop_map(StandardLattice::Boolean),
        Just(StandardLattice::M3),
        Just(StandardLattice::N5),
    ]
}

fn fixture() -> impl Strategy<Value = StandardLattice> {
    leaf()
        .prop_recursive(2, 6, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| StandardLattice::product(a, b))
        })
        .prop_filter("at most 60 elements", |s| s.size().is_some_and(|n| n <= 60))
}

/// Greatest lower bound found by scanning the order relation alone.
fn glb(l: &FiniteLattice, x: Element, y: Element) -> Element {
    let lower: Vec<Element> = l.elements().filter(|&z| l.leq(z, x) && l.leq(z, y)).collect();
    let greatest: Vec<Element> = lower
        .iter()
        .copied()
        .filter(|&z| lower.iter().all(|&w| l.leq(w, z)))
        .collect();
    assert_eq!(greatest.len(), 1);
    greatest[0]
}

fn lub(l: &FiniteLattice, x: Element, y: Element) -> Element {
    let upper: Vec<Element> = l.elements().filter(|&z| l.leq(x, z) && l.leq(y, z)).collect();
    let least: Vec<Element> = upper
        .iter()
        .copied()
        .filter(|&z| upper.iter().all(|&w| l.leq(z, w)))
        .collect();
    assert_eq!(least.len(), 1);
    least[0]
}

fn brute_distributive(l: &FiniteLattice) -> bool {
    l.elements().all(|x| {
        l.elements().all(|y| {
            l.elements()
                .all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)))
        })
    })
}

fn base_distributive(s: &StandardLattice) -> bool {
    match s {
        StandardLattice::M3 | StandardLattice::N5 => false,
        StandardLattice::Product(a, b) => base_distributive(a) && base_distributive(b),
        _ => true,
    }
}

/// Searches all bijections for an order isomorphism.
fn isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    fn extend(a: &FiniteLattice, b: &FiniteLattice, map: &mut Vec<Element>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        let x = a.element_at(i).unwrap();
        for y in b.elements() {
            if used[y.index()] {
                continue;
            }
            let consistent = (0..i).all(|j| {
                let w = a.element_at(j).unwrap();
                a.leq(w, x) == b.leq(map[j], y) && a.leq(x, w) == b.leq(y, map[j])
            });
            if consistent {
                used[y.index()] = true;
                map.push(y);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[y.index()] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

fn build(s: &str) -> FiniteLattice {
    s.parse::<StandardLattice>().unwrap().build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn operations_agree_with_order(s in fixture()) {
        let l = s.build().unwrap();
        for x in l.elements() {
            prop_assert!(l.leq(l.bottom(), x) && l.leq(x, l.top()));
            for y in l.elements() {
                let m = l.meet(x, y);
                let j = l.join(x, y);
                prop_assert_eq!(m, glb(&l, x, y));
                prop_assert_eq!(j, lub(&l, x, y));
                prop_assert_eq!(l.leq(x, y), m == x);
                prop_assert_eq!(l.leq(x, y), j == y);
            }
        }
    }

    #[test]
    fn distributivity_flag_matches_brute_force(s in fixture()) {
        let l = s.build().unwrap();
        let (flag, witness) = l.is_distributive();
        let (dual, dual_witness) = l.is_dual_distributive();
        prop_assert_eq!(flag, brute_distributive(&l));
        prop_assert_eq!(flag, dual);
        prop_assert_eq!(flag, base_distributive(&s));
        prop_assert_eq!(witness.is_none(), flag);
        prop_assert_eq!(dual_witness.is_none(), flag);
        if let Some((x, y, z)) = witness {
            prop_assert_ne!(l.meet(x, l.join(y, z)), l.join(l.meet(x, y), l.meet(x, z)));
        }
    }

    #[test]
    fn lattice_file_round_trips(s in fixture()) {
        let l = s.build().unwrap();
        let again = parse_lattice(&lattice_to_json(&l).to_string()).unwrap();
        prop_assert_eq!(again, l);
    }
}

#[test]
fn product_of_two_chains_is_the_square() {
    let square = build("product(chain2,chain2)");
    assert!(isomorphic(&square, &build("boolean2")));
    assert!(!isomorphic(&square, &build("chain4")));
    assert!(isomorphic(&build("product(chain2,product(chain2,chain2))"), &build("boolean3")));
    assert!(!isomorphic(&build("m3"), &build("n5")));
}

#[test]
fn witness_is_least_failing_triple() {
    for name in ["m3", "n5", "product(m3,chain2)"] {
        let l = build(name);
        let (_, witness) = l.is_distributive();
        let fails = |x: Element, y: Element, z: Element| {
            l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))
        };
        let n = l.len();
        let least = (0..n * n * n)
            .map(|k| {
                let e = |i: usize| l.element_at(i).unwrap();
                (e(k / (n * n)), e(k / n % n), e(k % n))
            })
            .find(|&(x, y, z)| fails(x, y, z));
        assert_eq!(witness, least, "{name}");
    }
}
