//! Finite bounded lattices with materialized order, meet and join tables.
//!
//! A lattice is built from its cover relation (Hasse edges). The reflexive-transitive
//! closure is computed once, antisymmetry is checked, and the meet/join tables are
//! filled in by searching for the unique greatest lower / least upper bound of every
//! pair. After construction a [`FiniteLattice`] is immutable.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on the element count of a [`StandardLattice`].
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// An element of a [`FiniteLattice`], identified by its declaration index.
///
/// The index gives the canonical (lexicographic) order used for witnesses and output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u32);

impl Element {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    fn from_index(i: usize) -> Self {
        Element(i as u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitRows {
            words,
            bits: vec![0; words * n],
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    /// `row(dst) |= row(src)`
    fn or_into(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.bits[src * w + k];
            self.bits[dst * w + k] |= v;
        }
    }
}

fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + b)
        })
    })
}

/// A finite lattice `(X, ⊑, ⊔, ⊓)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    name: String,
    names: Vec<String>,
    lookup: HashMap<String, Element>,
    /// `leq.get(x, y)` iff `x ⊑ y`
    leq: BitRows,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: Element,
    top: Element,
}

impl FiniteLattice {
    /// Builds a lattice from element names and cover pairs `(lower, upper)`.
    pub fn from_covers<S: AsRef<str>>(
        name: impl Into<String>,
        elements: &[S],
        covers: &[(S, S)],
    ) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyLattice);
        }
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let lookup = index_names(&names)?;
        let n = names.len();

        let resolve = |s: &S| {
            lookup
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_owned()))
        };
        // reach[i] = up-set of i
        let mut reach = BitRows::new(n);
        for i in 0..n {
            reach.set(i, i);
        }
        for (lo, hi) in covers {
            let (lo, hi) = (resolve(lo)?, resolve(hi)?);
            reach.set(lo.index(), hi.index());
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if i != k && reach.get(i, k) {
                    reach.or_into(i, k);
                }
            }
        }
        for i in 0..n {
            for j in ones(reach.row(i)) {
                if j > i && reach.get(j, i) {
                    return Err(Error::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }

        let mut down = BitRows::new(n);
        for i in 0..n {
            for j in ones(reach.row(i)) {
                down.set(j, i);
            }
        }

        let meet = bound_table(&names, &down, "greatest lower bound")?;
        let join = bound_table(&names, &reach, "least upper bound")?;
        let bottom = (1..n).fold(0, |acc, i| meet[acc * n + i] as usize);
        let top = (1..n).fold(0, |acc, i| join[acc * n + i] as usize);

        Ok(FiniteLattice {
            name: name.into(),
            names,
            lookup,
            leq: reach,
            meet,
            join,
            bottom: Element::from_index(bottom),
            top: Element::from_index(top),
        })
    }

    /// Assembles a lattice from operations known to form a lattice.
    fn from_operations(
        name: String,
        names: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let n = names.len();
        let lookup = index_names(&names).expect("generated names are unique");
        let mut rows = BitRows::new(n);
        let mut meet_table = vec![0u32; n * n];
        let mut join_table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    rows.set(i, j);
                }
                meet_table[i * n + j] = meet(i, j) as u32;
                join_table[i * n + j] = join(i, j) as u32;
            }
        }
        let bottom = (1..n).fold(0, |acc, i| meet_table[acc * n + i] as usize);
        let top = (1..n).fold(0, |acc, i| join_table[acc * n + i] as usize);
        FiniteLattice {
            name,
            names,
            lookup,
            leq: rows,
            meet: meet_table,
            join: join_table,
            bottom: Element::from_index(bottom),
            top: Element::from_index(top),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All elements in declaration order.
    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator {
        (0..self.names.len()).map(Element::from_index)
    }

    pub fn element_at(&self, index: usize) -> Option<Element> {
        (index < self.len()).then(|| Element::from_index(index))
    }

    pub fn element(&self, name: &str) -> Result<Element> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub fn element_name(&self, x: Element) -> &str {
        &self.names[x.index()]
    }

    pub fn contains(&self, x: Element) -> bool {
        x.index() < self.names.len()
    }

    fn check(&self, x: Element) -> Result<Element> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::UnknownElement(format!("#{}", x.index())))
        }
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    /// `x ⊑ y`
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.leq.get(x.index(), y.index())
    }

    pub fn meet(&self, x: Element, y: Element) -> Element {
        Element(self.meet[x.index() * self.len() + y.index()])
    }

    pub fn join(&self, x: Element, y: Element) -> Element {
        Element(self.join[x.index() * self.len() + y.index()])
    }

    pub fn checked_meet(&self, x: Element, y: Element) -> Result<Element> {
        Ok(self.meet(self.check(x)?, self.check(y)?))
    }

    pub fn checked_join(&self, x: Element, y: Element) -> Result<Element> {
        Ok(self.join(self.check(x)?, self.check(y)?))
    }

    /// `⊓S`; the meet of the empty set is the top element.
    pub fn meet_set<I: IntoIterator<Item = Element>>(&self, set: I) -> Element {
        set.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `⊔S`; the join of the empty set is the bottom element.
    pub fn join_set<I: IntoIterator<Item = Element>>(&self, set: I) -> Element {
        set.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn checked_meet_set<I: IntoIterator<Item = Element>>(&self, set: I) -> Result<Element> {
        set.into_iter()
            .try_fold(self.top, |acc, x| Ok(self.meet(acc, self.check(x)?)))
    }

    pub fn checked_join_set<I: IntoIterator<Item = Element>>(&self, set: I) -> Result<Element> {
        set.into_iter()
            .try_fold(self.bottom, |acc, x| Ok(self.join(acc, self.check(x)?)))
    }

    /// Elements `z` with `x ⊑ z`.
    pub fn up_set(&self, x: Element) -> impl Iterator<Item = Element> + '_ {
        ones(self.leq.row(x.index())).map(Element::from_index)
    }

    /// Decides distributivity, `x⊓(y⊔z) = (x⊓y)⊔(x⊓z)` for every triple.
    ///
    /// For a finite lattice this coincides with complete distributivity. On failure the
    /// lexicographically least violating triple is returned.
    pub fn is_distributive(&self) -> (bool, Option<(Element, Element, Element)>) {
        let witness = self.first_triple(|x, y, z| {
            self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
        });
        (witness.is_none(), witness)
    }

    /// The dual law `x⊔(y⊓z) = (x⊔y)⊓(x⊔z)`, checked independently.
    pub fn is_dual_distributive(&self) -> (bool, Option<(Element, Element, Element)>) {
        let witness = self.first_triple(|x, y, z| {
            self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), self.join(x, z))
        });
        (witness.is_none(), witness)
    }

    fn first_triple(
        &self,
        law: impl Fn(Element, Element, Element) -> bool,
    ) -> Option<(Element, Element, Element)> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    if !law(x, y, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Hasse edges `(x, y)` with `x ⋖ y`, in lexicographic order.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.up_set(x) {
                if x == y {
                    continue;
                }
                let between = self
                    .up_set(x)
                    .any(|z| z != x && z != y && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

fn index_names(names: &[String]) -> Result<HashMap<String, Element>> {
    let mut lookup = HashMap::with_capacity(names.len());
    for (i, s) in names.iter().enumerate() {
        if lookup.insert(s.clone(), Element::from_index(i)).is_some() {
            return Err(Error::DuplicateElement(s.clone()));
        }
    }
    Ok(lookup)
}

/// For each pair, the element `g` whose down-set (resp. up-set) equals the
/// intersection of the pair's down-sets (resp. up-sets).
fn bound_table(names: &[String], cone: &BitRows, what: &'static str) -> Result<Vec<u32>> {
    let n = names.len();
    let mut table = vec![0u32; n * n];
    let popcount = |i: usize| cone.row(i).iter().map(|w| w.count_ones()).sum::<u32>();
    let sizes: Vec<u32> = (0..n).map(popcount).collect();
    let mut common = vec![0u64; cone.words];
    for i in 0..n {
        for j in i..n {
            for (k, c) in common.iter_mut().enumerate() {
                *c = cone.row(i)[k] & cone.row(j)[k];
            }
            let best = ones(&common).max_by_key(|&g| (sizes[g], std::cmp::Reverse(g)));
            let g = match best {
                Some(g) if cone.row(g) == common.as_slice() => g,
                _ => {
                    return Err(Error::NotALattice(names[i].clone(), names[j].clone(), what));
                }
            };
            table[i * n + j] = g as u32;
            table[j * n + i] = g as u32;
        }
    }
    Ok(table)
}

/// Named fixture lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardLattice {
    /// `0 ⊑ 1 ⊑ … ⊑ n-1`
    Chain(usize),
    /// Subsets of a `k`-element set.
    Boolean(u32),
    /// The diamond with three atoms `a, b, c`.
    M3,
    /// The pentagon `0 < a < c < 1`, `0 < b < 1`.
    N5,
    Product(Box<StandardLattice>, Box<StandardLattice>),
}

impl StandardLattice {
    pub fn product(a: StandardLattice, b: StandardLattice) -> Self {
        StandardLattice::Product(Box::new(a), Box::new(b))
    }

    /// Element count, or `None` on overflow.
    pub fn size(&self) -> Option<usize> {
        match self {
            StandardLattice::Chain(n) => Some(*n),
            StandardLattice::Boolean(k) => 1usize.checked_shl(*k).filter(|_| *k < usize::BITS),
            StandardLattice::M3 | StandardLattice::N5 => Some(5),
            StandardLattice::Product(a, b) => a.size()?.checked_mul(b.size()?),
        }
    }

    pub fn build(&self) -> Result<FiniteLattice> {
        self.build_with_cap(DEFAULT_SIZE_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteLattice> {
        match self.size() {
            Some(count) if count <= cap => {}
            Some(count) => return Err(Error::SizeLimit { count, cap }),
            None => return Err(Error::SizeLimit { count: usize::MAX, cap }),
        }
        if let StandardLattice::Chain(0) = self {
            return Err(Error::EmptyLattice);
        }
        Ok(self.construct())
    }

    fn construct(&self) -> FiniteLattice {
        let name = self.to_string();
        match self {
            StandardLattice::Chain(n) => FiniteLattice::from_operations(
                name,
                (0..*n).map(|i| i.to_string()).collect(),
                |i, j| i <= j,
                usize::min,
                usize::max,
            ),
            StandardLattice::Boolean(k) => {
                let size = 1usize << k;
                let full = size - 1;
                let names = (0..size)
                    .map(|s| match s {
                        0 => "0".to_owned(),
                        s if s == full => "1".to_owned(),
                        s => (0..*k)
                            .filter(|b| s >> b & 1 == 1)
                            .map(|b| atom_name(b as usize))
                            .collect(),
                    })
                    .collect();
                FiniteLattice::from_operations(
                    name,
                    names,
                    |i, j| i & !j == 0,
                    |i, j| i & j,
                    |i, j| i | j,
                )
            }
            StandardLattice::M3 => FiniteLattice::from_covers(
                name,
                &["0", "a", "b", "c", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("a", "1"),
                    ("b", "1"),
                    ("c", "1"),
                ],
            )
            .expect("M3 is a lattice"),
            StandardLattice::N5 => FiniteLattice::from_covers(
                name,
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
            )
            .expect("N5 is a lattice"),
            StandardLattice::Product(a, b) => {
                let (la, lb) = (a.construct(), b.construct());
                let m = lb.len();
                let names = la
                    .elements()
                    .flat_map(|x| {
                        let (la, lb) = (&la, &lb);
                        lb.elements().map(move |y| {
                            format!("({},{})", la.element_name(x), lb.element_name(y))
                        })
                    })
                    .collect();
                let split = |i: usize| {
                    (
                        Element::from_index(i / m),
                        Element::from_index(i % m),
                    )
                };
                let pack = |x: Element, y: Element| x.index() * m + y.index();
                FiniteLattice::from_operations(
                    name,
                    names,
                    |i, j| {
                        let ((a1, a2), (b1, b2)) = (split(i), split(j));
                        la.leq(a1, b1) && lb.leq(a2, b2)
                    },
                    |i, j| {
                        let ((a1, a2), (b1, b2)) = (split(i), split(j));
                        pack(la.meet(a1, b1), lb.meet(a2, b2))
                    },
                    |i, j| {
                        let ((a1, a2), (b1, b2)) = (split(i), split(j));
                        pack(la.join(a1, b1), lb.join(a2, b2))
                    },
                )
            }
        }
    }
}

fn atom_name(b: usize) -> String {
    let letters = b'a'..=b'z';
    let c = letters.clone().nth(b % 26).unwrap() as char;
    if b < 26 {
        c.to_string()
    } else {
        format!("{c}{}", b / 26)
    }
}

impl fmt::Display for StandardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardLattice::Chain(n) => write!(f, "chain{n}"),
            StandardLattice::Boolean(k) => write!(f, "boolean{k}"),
            StandardLattice::M3 => f.write_str("m3"),
            StandardLattice::N5 => f.write_str("n5"),
            StandardLattice::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

impl FromStr for StandardLattice {
    type Err = Error;

    /// Accepts `chain3`, `chain(3)`, `boolean2`, `m3`, `n5`, `product(chain2,chain3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownFixture(s.to_owned());
        let lower = s.to_ascii_lowercase();
        if lower == "m3" {
            return Ok(StandardLattice::M3);
        }
        if lower == "n5" {
            return Ok(StandardLattice::N5);
        }
        if let Some(inner) = lower
            .strip_prefix("product(")
            .and_then(|r| r.strip_suffix(')'))
        {
            // split at the top-level comma
            let mut depth = 0usize;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth = depth.checked_sub(1).ok_or_else(bad)?,
                    ',' if depth == 0 => {
                        let a = inner[..i].parse()?;
                        let b = inner[i + 1..].parse()?;
                        return Ok(StandardLattice::product(a, b));
                    }
                    _ => {}
                }
            }
            return Err(bad());
        }
        let numeric = |rest: &str| -> Option<usize> {
            let rest = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest);
            rest.trim().parse().ok()
        };
        if let Some(rest) = lower.strip_prefix("chain") {
            return numeric(rest)
                .filter(|&n| n >= 1)
                .map(StandardLattice::Chain)
                .ok_or_else(bad);
        }
        if let Some(rest) = lower.strip_prefix("boolean") {
            return numeric(rest)
                .and_then(|k| u32::try_from(k).ok())
                .map(StandardLattice::Boolean)
                .ok_or_else(bad);
        }
        Err(bad())
    }
}
