//! JSON file formats for lattices and fuzzy sets.
//!
//! Lattice file: `{"name": .., "elements": [..], "covers": [[lower, upper], ..]}`.
//! Fuzzy set file: `{"lattice": name-or-lattice-object, "memberships": {element: grade}}`,
//! grades written as `"a/b"` or exact decimals.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::fuzzy_set::FuzzySet;
use crate::grade::Grade;
use crate::lattice::{FiniteLattice, StandardLattice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl LatticeFile {
    pub fn build(&self) -> Result<FiniteLattice> {
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|[lo, hi]| (lo.as_str(), hi.as_str()))
            .collect();
        let elements: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        FiniteLattice::from_covers(self.name.clone(), &elements, &covers)
    }

    pub fn from_lattice(l: &FiniteLattice) -> Self {
        LatticeFile {
            name: l.name().to_owned(),
            elements: l.elements().map(|x| l.element_name(x).to_owned()).collect(),
            covers: l
                .covers()
                .into_iter()
                .map(|(x, y)| [l.element_name(x).to_owned(), l.element_name(y).to_owned()])
                .collect(),
        }
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_lattice(json: &str) -> Result<FiniteLattice> {
    let file: LatticeFile = serde_json::from_str(json).map_err(parse_error)?;
    file.build()
}

pub fn lattice_to_json(l: &FiniteLattice) -> Value {
    serde_json::to_value(LatticeFile::from_lattice(l)).expect("lattice files serialize")
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FuzzySetFile {
    lattice: Value,
    memberships: Map<String, Value>,
    /// Informational cut table written by `op --cuts`; ignored on input.
    #[serde(default, rename = "cuts")]
    _cuts: Option<Value>,
}

/// Whether a fuzzy-set file's `"lattice"` field denotes `l`.
fn lattice_matches(reference: &Value, l: &FiniteLattice) -> Result<bool> {
    match reference {
        Value::String(name) => {
            if name == l.name() {
                return Ok(true);
            }
            Ok(match name.parse::<StandardLattice>() {
                Ok(fixture) => fixture
                    .build()
                    .map(|f| f.with_name(l.name()) == *l)
                    .unwrap_or(false),
                Err(_) => false,
            })
        }
        Value::Object(_) => {
            let file: LatticeFile =
                serde_json::from_value(reference.clone()).map_err(parse_error)?;
            Ok(file.build()?.with_name(l.name()) == *l)
        }
        _ => Err(Error::Parse(
            "\"lattice\" must be a name or a lattice object".into(),
        )),
    }
}

/// Parses a fuzzy set over `l`. Every element must be assigned a grade.
pub fn parse_fuzzy_set(json: &str, l: &Arc<FiniteLattice>) -> Result<FuzzySet> {
    let file: FuzzySetFile = serde_json::from_str(json).map_err(parse_error)?;
    if !lattice_matches(&file.lattice, l)? {
        return Err(Error::LatticeMismatch);
    }
    let mut grades: Vec<Option<Grade>> = vec![None; l.len()];
    for (name, value) in &file.memberships {
        let x = l.element(name)?;
        let grade = match value {
            Value::String(s) => s.parse()?,
            other => return Err(Error::InvalidGrade(other.to_string())),
        };
        grades[x.index()] = Some(grade);
    }
    let membership = l
        .elements()
        .map(|x| {
            grades[x.index()].ok_or_else(|| {
                Error::Parse(format!("no membership given for `{}`", l.element_name(x)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FuzzySet::new(l.clone(), membership)
}

/// Canonical form: `"lattice"` then `"memberships"` in element order, grades in lowest
/// terms.
pub fn fuzzy_set_to_json(m: &FuzzySet) -> Value {
    let l = m.lattice();
    let memberships: Map<String, Value> = l
        .elements()
        .map(|x| (l.element_name(x).to_owned(), Value::String(m.grade(x).to_string())))
        .collect();
    let mut obj = Map::new();
    obj.insert("lattice".into(), Value::String(l.name().to_owned()));
    obj.insert("memberships".into(), Value::Object(memberships));
    Value::Object(obj)
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
