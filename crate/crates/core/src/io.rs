//! JSON file formats.
//!
//! * lattice: `{ "n", "bottom", "top", "meet", "join", "labels"? }` or
//!   `{ "poset": { "n", "covers": [[lo, hi], ..] } }`
//! * preference: `{ "ranks": [..] }`
//! * representation: `{ "outcomes", "sigma": { "<element>": [..] }, "outcome_ranks" }`
//! * spectrum dump: `{ "points": [[..]], "sigma": { "<element>": [..] } }`
//! * duality certificate: `{ "agreement", "forward_ranks", "counterexample"? }`
//!
//! Output goes through `serde_json::Value`, whose maps are ordered, so keys
//! always come out sorted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::bitset::{BitSet, CAPACITY};
use crate::duality::DualityCertificate;
use crate::lattice::{downset_lattice, Lattice, LatticeError, LatticeTables, Poset};
use crate::preference::WeakOrder;
use crate::representation::Representation;
use crate::spectrum::SpectralSpace;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{message} at line {line} column {column}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep only the message
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TablesFile {
    n: usize,
    bottom: usize,
    top: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    poset: PosetFields,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFields {
    n: usize,
    covers: Vec<[usize; 2]>,
}

/// Reads a lattice file without enforcing the lattice laws, so that
/// violations can be reported instead of rejected.
pub fn parse_lattice_tables(text: &str) -> Result<LatticeTables, FormatError> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("poset").is_some() {
        let file: PosetFile = serde_json::from_str(text)?;
        let covers = file.poset.covers.iter().map(|&[lo, hi]| (lo, hi)).collect();
        let poset = Poset::new(file.poset.n, covers)?;
        return Ok(downset_lattice(&poset)?.tables());
    }
    let file: TablesFile = serde_json::from_str(text)?;
    if file.n != file.meet.len() {
        return Err(FormatError::Invalid(format!(
            "\"n\" is {} but the meet table has {} rows",
            file.n,
            file.meet.len()
        )));
    }
    Ok(LatticeTables {
        meet: file.meet,
        join: file.join,
        bottom: file.bottom,
        top: file.top,
        labels: file.labels,
    })
}

pub fn parse_lattice(text: &str) -> Result<Lattice, FormatError> {
    Ok(Lattice::new(parse_lattice_tables(text)?)?)
}

pub fn lattice_to_json(lattice: &Lattice) -> Value {
    let t = lattice.tables();
    let mut v = json!({
        "n": lattice.len(),
        "bottom": t.bottom,
        "top": t.top,
        "meet": t.meet,
        "join": t.join,
    });
    if let Some(labels) = t.labels {
        v["labels"] = json!(labels);
    }
    v
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PreferenceFile {
    ranks: Vec<u32>,
}

/// Reads `{ "ranks": [..] }`, checking the length against the lattice.
pub fn parse_preference(text: &str, lattice: &Lattice) -> Result<WeakOrder, FormatError> {
    let file: PreferenceFile = serde_json::from_str(text)?;
    if file.ranks.len() != lattice.len() {
        return Err(FormatError::Invalid(format!(
            "preference has {} ranks but the lattice has {} elements",
            file.ranks.len(),
            lattice.len()
        )));
    }
    Ok(WeakOrder::new(file.ranks))
}

pub fn preference_to_json(order: &WeakOrder) -> Value {
    json!({ "ranks": order.ranks() })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    outcomes: usize,
    sigma: BTreeMap<String, Vec<usize>>,
    outcome_ranks: Vec<u32>,
}

fn sigma_object(images: impl Iterator<Item = BitSet>) -> Value {
    let map: serde_json::Map<String, Value> = images
        .enumerate()
        .map(|(a, s)| (a.to_string(), json!(s.to_vec())))
        .collect();
    Value::Object(map)
}

pub fn parse_representation(text: &str, lattice: &Lattice) -> Result<Representation, FormatError> {
    let file: RepresentationFile = serde_json::from_str(text)?;
    if file.outcomes > CAPACITY {
        return Err(FormatError::Invalid(format!(
            "{} outcomes exceed the supported maximum of {CAPACITY}",
            file.outcomes
        )));
    }
    if file.outcome_ranks.len() != file.outcomes {
        return Err(FormatError::Invalid(format!(
            "{} outcome ranks for {} outcomes",
            file.outcome_ranks.len(),
            file.outcomes
        )));
    }
    let mut sigma_map = vec![None; lattice.len()];
    for (key, members) in &file.sigma {
        let a: usize = key
            .parse()
            .ok()
            .filter(|&a| a < lattice.len())
            .ok_or_else(|| FormatError::Invalid(format!("sigma key {key:?} is not a lattice element")))?;
        if let Some(&x) = members.iter().find(|&&x| x >= file.outcomes) {
            return Err(FormatError::Invalid(format!(
                "sigma[{key}] names outcome {x}, outside 0..{}",
                file.outcomes
            )));
        }
        sigma_map[a] = Some(members.iter().copied().collect::<BitSet>());
    }
    let sigma_map = sigma_map
        .into_iter()
        .enumerate()
        .map(|(a, s)| s.ok_or_else(|| FormatError::Invalid(format!("sigma is missing element {a}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Representation {
        outcome_count: file.outcomes,
        sigma_map,
        outcome_order: WeakOrder::new(file.outcome_ranks),
    })
}

pub fn representation_to_json(rep: &Representation) -> Value {
    json!({
        "outcomes": rep.outcome_count,
        "sigma": sigma_object(rep.sigma_map.iter().copied()),
        "outcome_ranks": rep.outcome_order.ranks(),
    })
}

pub fn spectrum_to_json(space: &SpectralSpace) -> Value {
    let points: Vec<Vec<usize>> = space.points().iter().map(|p| p.members.to_vec()).collect();
    json!({
        "points": points,
        "sigma": sigma_object(space.lattice().elements().map(|a| space.sigma(a))),
    })
}

pub fn certificate_to_json(cert: &DualityCertificate) -> Value {
    let mut v = json!({
        "agreement": cert.agreement,
        "forward_ranks": cert.forward.ranks(),
    });
    if let Some((a, b)) = cert.counterexample {
        v["counterexample"] = json!([a, b]);
    }
    v
}

/// Pretty-printed with sorted keys and a trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::roundtrip_check;
    use crate::representation::minimal_representation;
    use crate::testkit::fixtures;

    const CHAIN3: &str = r#"{ "n": 3, "bottom": 0, "top": 2,
        "meet": [[0,0,0],[0,1,1],[0,1,2]], "join": [[0,1,2],[1,1,2],[2,2,2]],
        "labels": ["0", "½", "1"] }"#;

    #[test]
    fn parses_tables_and_posets() {
        let l = parse_lattice(CHAIN3).unwrap();
        assert_eq!(l, fixtures::chain3());
        let p = parse_lattice(r#"{ "poset": { "n": 2, "covers": [] } }"#).unwrap();
        assert_eq!(p.tables().meet, fixtures::b2().tables().meet);
        assert_eq!(parse_lattice(&lattice_to_json(&l).to_string()).unwrap(), l);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_lattice("{\n  \"n\": 3,\n  \"bottom\": }").unwrap_err();
        match err {
            FormatError::Json { line, column, .. } => assert_eq!((line, column), (3, 13)),
            other => panic!("{other:?}"),
        }
        let err = parse_lattice(r#"{ "n": 1, "bottom": 0, "top": 0, "meet": [[0]] }"#).unwrap_err();
        assert!(matches!(err, FormatError::Json { .. }), "missing join: {err}");
    }

    #[test]
    fn law_violations_surface_from_files() {
        let m3 = fixtures::m3_tables();
        let text = json!({ "n": 5, "bottom": m3.bottom, "top": m3.top, "meet": m3.meet, "join": m3.join })
            .to_string();
        assert!(parse_lattice_tables(&text).is_ok());
        assert!(matches!(parse_lattice(&text), Err(FormatError::Lattice(LatticeError::LawViolation { .. }))));
    }

    #[test]
    fn preference_length_checked() {
        let l = fixtures::chain3();
        assert_eq!(parse_preference(r#"{"ranks":[0,1,2]}"#, &l).unwrap(), fixtures::w3());
        assert!(matches!(
            parse_preference(r#"{"ranks":[0,1]}"#, &l),
            Err(FormatError::Invalid(_))
        ));
    }

    #[test]
    fn representation_roundtrip() {
        let l = fixtures::chain3();
        let r = minimal_representation(&l, &fixtures::w3()).unwrap();
        let v = representation_to_json(&r);
        assert_eq!(v["sigma"]["1"], json!([1]));
        assert_eq!(v["sigma"]["2"], json!([0, 1]));
        assert_eq!(parse_representation(&v.to_string(), &l).unwrap(), r);

        let missing = r#"{"outcomes":1,"sigma":{"0":[],"1":[0]},"outcome_ranks":[0]}"#;
        assert!(parse_representation(missing, &l).is_err());
        let out_of_range = r#"{"outcomes":1,"sigma":{"0":[],"1":[0],"2":[1]},"outcome_ranks":[0]}"#;
        assert!(parse_representation(out_of_range, &l).is_err());
    }

    #[test]
    fn spectrum_dump_matches_format() {
        let v = spectrum_to_json(&SpectralSpace::new(&fixtures::chain3()));
        assert_eq!(v["points"], json!([[2], [1, 2]]));
        assert_eq!(v["sigma"]["0"], json!([]));
    }

    #[test]
    fn certificate_dump() {
        let c = roundtrip_check(&fixtures::chain3(), &WeakOrder::new(vec![0, 1, 0]));
        let v = certificate_to_json(&c);
        assert_eq!(v["agreement"], json!(false));
        assert_eq!(v["counterexample"], json!([1, 2]));
        let c = roundtrip_check(&fixtures::chain3(), &fixtures::w3());
        assert!(certificate_to_json(&c).get("counterexample").is_none());
    }

    #[test]
    fn canonical_output_sorts_keys() {
        let s = to_canonical_string(&json!({ "b": 1, "a": 2 }));
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(s.ends_with('\n'));
    }
}
