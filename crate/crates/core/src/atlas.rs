//! Bundled data on the exceptional orbits the engine reasons about, with the
//! consistency checks every record must pass.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::orbits::{is_even, jm_marked_set, orbit_dimension, WeightedDiagram};
use crate::parabolics::{check_extremal_contraction, dim_nilradical, MarkedDiagram};
use crate::rootkit::{LieType, NodeSet};

pub const ATLAS_VERSION: u64 = 1;

const BUNDLED: &str = include_str!("../data/atlas.json");

const RECORD_FIELDS: &[&str] = &[
    "algebra",
    "label",
    "weights",
    "dim",
    "pi1_order",
    "richardson",
    "resolvable",
    "polarizations",
    "provenance",
    "note",
];
const POLARIZATION_FIELDS: &[&str] = &["marks", "degree", "extremal"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Resolvable {
    Yes,
    No,
    #[default]
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polarization {
    pub marks: NodeSet,
    #[serde(default)]
    pub degree: Option<u64>,
    /// Claimed to satisfy n ⊆ u(Q) with balanced dimensions.
    #[serde(default)]
    pub extremal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub algebra: LieType,
    pub label: String,
    pub weights: WeightedDiagram,
    pub dim: Option<usize>,
    pub pi1_order: Option<u64>,
    pub richardson: Option<bool>,
    pub resolvable: Resolvable,
    pub polarizations: Vec<Polarization>,
    pub provenance: BTreeMap<String, String>,
    pub note: Option<String>,
}

#[derive(Deserialize)]
struct RawRecord {
    algebra: LieType,
    label: String,
    weights: Vec<u8>,
    #[serde(default)]
    dim: Option<usize>,
    #[serde(default)]
    pi1_order: Option<u64>,
    #[serde(default)]
    richardson: Option<bool>,
    #[serde(default)]
    resolvable: Resolvable,
    #[serde(default)]
    polarizations: Vec<Polarization>,
    #[serde(default)]
    provenance: BTreeMap<String, String>,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Deserialize)]
struct RawAtlas {
    atlas_version: u64,
    records: Vec<Value>,
}

#[derive(Clone, Debug)]
pub struct Atlas {
    records: Vec<OrbitRecord>,
    warnings: Vec<String>,
}

/// Records the bundled file must contain.
pub fn required_records() -> Vec<(LieType, &'static str)> {
    let list = [
        ("G2", "G2(a1)"),
        ("F4", "F4(a3)"),
        ("F4", "C3"),
        ("E6", "2A1"),
        ("E6", "A2+2A1"),
        ("E6", "A3"),
        ("E6", "A4+A1"),
        ("E6", "D5(a1)"),
        ("E6", "D4(a1)"),
        ("E7", "D4(a1)+A1"),
        ("E7", "D5+A1"),
        ("E7", "D6(a1)"),
        ("E7", "A4+A1"),
        ("E7", "D5(a1)"),
        ("E7", "E7(a5)"),
        ("E8", "A4+A2+A1"),
        ("E8", "A6+A1"),
        ("E8", "D6(a1)"),
        ("E8", "E7(a1)"),
        ("E8", "E8(a7)"),
        ("E8", "D7(a2)"),
        ("E8", "E6(a1)+A1"),
        ("E8", "E7(a3)"),
    ];
    list.iter()
        .map(|(t, l)| (t.parse().expect("static types parse"), *l))
        .collect()
}

/// Runs the per-record cross-checks.
pub fn validate_record(rec: &OrbitRecord) -> Result<()> {
    let fail = |what: String| Err(Error::Atlas(format!("{} {}: {}", rec.algebra, rec.label, what)));
    let dim = orbit_dimension(&rec.weights);
    if let Some(d) = rec.dim {
        if d != dim {
            return fail(format!("stored dim {d} but the weights give {dim}"));
        }
    }
    for p in &rec.polarizations {
        if !p.marks.is_subset(NodeSet::full(rec.algebra.rank())) {
            return fail(format!("marks {} outside the diagram", p.marks));
        }
        if p.degree == Some(0) {
            return fail(format!("degree 0 for {}", p.marks));
        }
        let q = MarkedDiagram {
            lie_type: rec.algebra,
            marks: p.marks,
        };
        let u = dim_nilradical(&q);
        if 2 * u != dim {
            return fail(format!("{} has 2 dim u = {} but dim O = {dim}", p.marks, 2 * u));
        }
        if p.extremal {
            let r = check_extremal_contraction(&rec.weights, &q);
            if !r.passes {
                let why = match &r.witness {
                    Some(w) => format!("root {w} of n lies outside u(Q)"),
                    None => "marks outside the Jacobson-Morozov set".into(),
                };
                return fail(format!("{} is marked extremal but {why}", p.marks));
            }
            if p.degree.is_some_and(|d| d != 1) {
                return fail(format!("{} is an extremal contraction, so its degree is 1", p.marks));
            }
        }
    }
    if is_even(&rec.weights) {
        let jm = jm_marked_set(&rec.weights).marks;
        match rec.polarizations.iter().find(|p| p.marks == jm) {
            Some(p) if p.degree == Some(1) => {}
            Some(_) => return fail(format!("even orbit: {jm} must have degree 1")),
            None => return fail(format!("even orbit: the JM set {jm} must be listed")),
        }
    }
    let has_degree_one = rec.polarizations.iter().any(|p| p.degree == Some(1));
    match rec.resolvable {
        Resolvable::Yes if !has_degree_one => {
            return fail("resolvable but no degree-one polarization is listed".into())
        }
        Resolvable::No if has_degree_one => {
            return fail("not resolvable yet a degree-one polarization is listed".into())
        }
        _ => {}
    }
    Ok(())
}

fn unknown_keys(v: &Value, allowed: &[&str], context: &str, warnings: &mut Vec<String>) {
    if let Value::Object(map) = v {
        for k in map.keys() {
            if !allowed.contains(&k.as_str()) {
                let w = format!("{context}: unknown field '{k}' ignored");
                log::warn!("{w}");
                warnings.push(w);
            }
        }
    }
}

impl Atlas {
    pub fn bundled() -> Result<Self> {
        Atlas::from_json(BUNDLED)
    }

    pub fn bundled_source() -> &'static str {
        BUNDLED
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Atlas::from_json(&text)
    }

    /// Bundled atlas when `path` is `None`.
    pub fn load_or_bundled(path: Option<&Path>) -> Result<Self> {
        match path {
            Some(p) => Atlas::load(p),
            None => Atlas::bundled(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let atlas = Atlas::parse_unchecked(text)?;
        for rec in &atlas.records {
            validate_record(rec)?;
        }
        for (k, rec) in atlas.records.iter().enumerate() {
            if atlas.records[..k]
                .iter()
                .any(|o| o.algebra == rec.algebra && o.label == rec.label)
            {
                return Err(Error::Atlas(format!(
                    "{} {}: duplicate record",
                    rec.algebra, rec.label
                )));
            }
        }
        let missing = atlas.missing_records();
        if !missing.is_empty() {
            return Err(Error::Atlas(format!("missing records: {}", missing.join(", "))));
        }
        Ok(atlas)
    }

    /// Parses records without running the cross-checks.
    pub fn parse_unchecked(text: &str) -> Result<Self> {
        let top: Value = serde_json::from_str(text)?;
        let mut warnings = Vec::new();
        unknown_keys(&top, &["atlas_version", "records"], "atlas", &mut warnings);
        let raw: RawAtlas = serde_json::from_value(top)?;
        if raw.atlas_version != ATLAS_VERSION {
            return Err(Error::Atlas(format!(
                "unsupported atlas_version {} (expected {ATLAS_VERSION})",
                raw.atlas_version
            )));
        }
        let mut records = Vec::new();
        for (k, v) in raw.records.into_iter().enumerate() {
            let context = match v.get("label").and_then(Value::as_str) {
                Some(l) => format!("record {k} ({l})"),
                None => format!("record {k}"),
            };
            unknown_keys(&v, RECORD_FIELDS, &context, &mut warnings);
            if let Some(Value::Array(ps)) = v.get("polarizations") {
                for p in ps {
                    unknown_keys(p, POLARIZATION_FIELDS, &context, &mut warnings);
                }
            }
            let r: RawRecord = serde_json::from_value(v)?;
            let weights = WeightedDiagram::new(r.algebra, r.weights)
                .map_err(|e| Error::Atlas(format!("{} {}: {e}", r.algebra, r.label)))?;
            let rec = OrbitRecord {
                algebra: r.algebra,
                label: r.label,
                weights,
                dim: r.dim,
                pi1_order: r.pi1_order,
                richardson: r.richardson,
                resolvable: r.resolvable,
                polarizations: r.polarizations,
                provenance: r.provenance,
                note: r.note,
            };
            records.push(rec);
        }
        Ok(Atlas { records, warnings })
    }

    pub fn missing_records(&self) -> Vec<String> {
        required_records()
            .into_iter()
            .filter(|(t, l)| self.find(*t, l).is_none())
            .map(|(t, l)| format!("{t} {l}"))
            .collect()
    }

    pub fn records(&self) -> &[OrbitRecord] {
        &self.records
    }

    pub fn records_for(&self, t: LieType) -> impl Iterator<Item = &OrbitRecord> {
        self.records.iter().filter(move |r| r.algebra == t)
    }

    pub fn find(&self, t: LieType, label: &str) -> Option<&OrbitRecord> {
        let key = normalize_label(label);
        self.records_for(t).find(|r| normalize_label(&r.label) == key)
    }

    pub fn find_by_weights(&self, ws: &WeightedDiagram) -> Option<&OrbitRecord> {
        self.records.iter().find(|r| &r.weights == ws)
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

fn normalize_label(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_atlas_loads() {
        let atlas = Atlas::bundled().unwrap();
        assert!(atlas.warnings().is_empty());
        let f4 = atlas.find("F4".parse().unwrap(), "F4(a3)").unwrap();
        assert!(is_even(&f4.weights));
        assert_eq!(jm_marked_set(&f4.weights).marks, NodeSet::single(2));
        let e7a5 = atlas.find("E7".parse().unwrap(), "e7(a5)").unwrap();
        assert_eq!(jm_marked_set(&e7a5.weights).marks.to_vec(), vec![4, 7]);
        let d7a2 = atlas.find("E8".parse().unwrap(), "D7(a2)").unwrap();
        assert_eq!(d7a2.pi1_order, Some(2));
    }

    fn edited(from: &str, to: &str) -> String {
        assert!(BUNDLED.contains(from), "{from}");
        BUNDLED.replacen(from, to, 1)
    }

    #[test]
    fn rejects_wrong_dimension() {
        let text = edited("\"dim\": 216", "\"dim\": 214");
        let err = Atlas::from_json(&text).unwrap_err().to_string();
        assert!(err.contains("D7(a2)"), "{err}");
    }

    #[test]
    fn rejects_false_extremal_claim() {
        let text = edited(
            "\"marks\": [1, 2, 3],\n          \"degree\": 1,\n          \"extremal\": false",
            "\"marks\": [1, 2, 3],\n          \"degree\": 1,\n          \"extremal\": true",
        );
        let err = Atlas::from_json(&text).unwrap_err().to_string();
        assert!(err.contains("D6(a1)") && err.contains("root a8 "), "{err}");
    }

    #[test]
    fn missing_records_are_listed() {
        let text = edited("\"label\": \"C3\"", "\"label\": \"C3x\"");
        let err = Atlas::from_json(&text).unwrap_err().to_string();
        assert!(err.contains("missing records: F4 C3"), "{err}");
    }

    #[test]
    fn unknown_fields_warn() {
        let text = edited("\"atlas_version\": 1,", "\"atlas_version\": 1,\n  \"comment\": \"x\",");
        let atlas = Atlas::from_json(&text).unwrap();
        assert_eq!(atlas.warnings().len(), 1);
    }

    #[test]
    fn rejects_version() {
        let text = edited("\"atlas_version\": 1", "\"atlas_version\": 2");
        assert!(Atlas::from_json(&text).is_err());
    }
}
