//! Instance files: one JSON document describing a lattice, a ring, and
//! named L-subsets over them.
//!
//! ```json
//! {
//!   "lattice": {"chain": ["b", "m", "t"]},
//!   "ring": {"zn": 4},
//!   "subsets": {
//!     "mu": {"0": "t", "1": "t", "2": "t", "3": "t"},
//!     "eta0": ["t", "m", "m", "m"]
//!   },
//!   "pairs": [["eta0", "eta0"]]
//! }
//! ```
//!
//! `lattice` is `{"chain": [...]}`, `{"elements": [...], "leq": [[a, b], ...]}`
//! or a name such as `"m3"`. `ring` is `{"zn": n}`, `{"product": [ring, ...]}`,
//! `{"elements": [...], "add": [[...]], "mul": [[...]]}` or a name such as
//! `"Z2xZ3"`. Subsets map every ring element to a level, either as an object
//! keyed by element label or as an array in element order. `mu` defaults to
//! the constant top.

use std::path::Path;
use std::sync::Arc;

use lring_core::{FiniteLattice, FiniteRing, Ideal, LRing, LSubset};
use serde_json::{Map, Value};

use crate::CliError;

pub struct InstanceFile {
    pub lring: LRing,
    /// Named ideals of `mu` in file order, `mu` itself excluded.
    pub ideals: Vec<(String, Ideal)>,
    pub pairs: Vec<(String, String)>,
}

fn invalid(path: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Validation(format!("{path}: {msg}"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str, CliError> {
    v.as_str().ok_or_else(|| invalid(path, "expected a string"))
}

fn str_list(v: &Value, path: &str) -> Result<Vec<String>, CliError> {
    let items = v.as_array().ok_or_else(|| invalid(path, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| match x {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            _ => Err(invalid(&format!("{path}[{i}]"), "expected a string")),
        })
        .collect()
}

fn parse_lattice(v: &Value) -> Result<FiniteLattice, CliError> {
    let path = "lattice";
    let built = match v {
        Value::String(name) => FiniteLattice::from_name(name),
        Value::Object(m) if m.contains_key("chain") => FiniteLattice::chain(&str_list(&m["chain"], "lattice.chain")?),
        Value::Object(m) => {
            let elements = str_list(
                m.get("elements").ok_or_else(|| invalid(path, "missing `elements`"))?,
                "lattice.elements",
            )?;
            let leq = m
                .get("leq")
                .and_then(Value::as_array)
                .ok_or_else(|| invalid(path, "missing `leq` array"))?;
            let mut pairs = Vec::new();
            for (i, p) in leq.iter().enumerate() {
                let here = format!("lattice.leq[{i}]");
                let ab = str_list(p, &here)?;
                if ab.len() != 2 {
                    return Err(invalid(&here, "expected a pair [a, b]"));
                }
                pairs.push((ab[0].clone(), ab[1].clone()));
            }
            FiniteLattice::from_leq(&elements, &pairs)
        }
        _ => return Err(invalid(path, "expected a name or an object")),
    };
    built.map_err(|e| invalid(path, e))
}

fn parse_ring(v: &Value, path: &str) -> Result<FiniteRing, CliError> {
    let built = match v {
        Value::String(name) => FiniteRing::from_name(name),
        Value::Object(m) if m.contains_key("zn") => {
            let n = m["zn"]
                .as_u64()
                .ok_or_else(|| invalid(&format!("{path}.zn"), "expected a positive integer"))?;
            FiniteRing::zn(n as usize)
        }
        Value::Object(m) if m.contains_key("product") => {
            let parts = m["product"]
                .as_array()
                .ok_or_else(|| invalid(&format!("{path}.product"), "expected an array"))?;
            let factors = parts
                .iter()
                .enumerate()
                .map(|(i, p)| parse_ring(p, &format!("{path}.product[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            FiniteRing::product(&factors)
        }
        Value::Object(m) => {
            let elements = str_list(
                m.get("elements").ok_or_else(|| invalid(path, "missing `elements`"))?,
                &format!("{path}.elements"),
            )?;
            let table = |key: &str| -> Result<Vec<Vec<String>>, CliError> {
                let here = format!("{path}.{key}");
                let rows = m
                    .get(key)
                    .and_then(Value::as_array)
                    .ok_or_else(|| invalid(&here, "expected an array of rows"))?;
                rows.iter()
                    .enumerate()
                    .map(|(i, r)| str_list(r, &format!("{here}[{i}]")))
                    .collect()
            };
            FiniteRing::from_tables(&elements, &table("add")?, &table("mul")?)
        }
        _ => return Err(invalid(path, "expected a name or an object")),
    };
    built.map_err(|e| invalid(path, e))
}

fn parse_subset(v: &Value, path: &str, lattice: &FiniteLattice, ring: &FiniteRing) -> Result<LSubset, CliError> {
    let level = |s: &Value, here: &str| -> Result<_, CliError> {
        lattice.level(as_str(s, here)?).map_err(|e| invalid(here, e))
    };
    let values = match v {
        Value::Array(items) => {
            if items.len() != ring.len() {
                return Err(invalid(
                    path,
                    format!("expected {} values, got {}", ring.len(), items.len()),
                ));
            }
            items
                .iter()
                .enumerate()
                .map(|(i, s)| level(s, &format!("{path}[{i}]")))
                .collect::<Result<Vec<_>, _>>()?
        }
        Value::Object(m) => {
            for key in m.keys() {
                ring.element(key).map_err(|e| invalid(&format!("{path}.{key}"), e))?;
            }
            ring.labels()
                .iter()
                .map(|x| {
                    let here = format!("{path}.{x}");
                    let s = m.get(x).ok_or_else(|| invalid(&here, "missing value"))?;
                    level(s, &here)
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        _ => return Err(invalid(path, "expected an object or an array")),
    };
    Ok(LSubset::new(values))
}

pub fn parse(text: &str) -> Result<InstanceFile, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Validation(format!("invalid JSON: {e}")))?;
    let top: &Map<String, Value> = doc.as_object().ok_or_else(|| invalid("$", "expected an object"))?;
    let get = |k: &str| top.get(k).ok_or_else(|| invalid("$", format!("missing `{k}`")));
    let lattice = Arc::new(parse_lattice(get("lattice")?)?);
    let ring = Arc::new(parse_ring(get("ring")?, "ring")?);

    let empty = Map::new();
    let subsets = match top.get("subsets") {
        None => &empty,
        Some(v) => v.as_object().ok_or_else(|| invalid("subsets", "expected an object"))?,
    };
    let mu = match subsets.get("mu") {
        Some(v) => parse_subset(v, "subsets.mu", &lattice, &ring)?,
        None => LSubset::constant(ring.len(), lattice.top()),
    };
    let lring = LRing::new(lattice.clone(), ring.clone(), mu).map_err(|e| invalid("subsets.mu", e))?;

    let mut ideals = Vec::new();
    for (name, v) in subsets.iter().filter(|(k, _)| k.as_str() != "mu") {
        let path = format!("subsets.{name}");
        let f = parse_subset(v, &path, &lattice, &ring)?;
        let ideal = lring.ideal(f).map_err(|e| invalid(&path, e))?;
        ideals.push((name.clone(), ideal));
    }

    let mut pairs = Vec::new();
    if let Some(v) = top.get("pairs") {
        let items = v.as_array().ok_or_else(|| invalid("pairs", "expected an array"))?;
        for (i, p) in items.iter().enumerate() {
            let here = format!("pairs[{i}]");
            let ab = str_list(p, &here)?;
            if ab.len() != 2 {
                return Err(invalid(&here, "expected a pair of subset names"));
            }
            for n in &ab {
                if n != "mu" && !ideals.iter().any(|(k, _)| k == n) {
                    return Err(invalid(&here, format!("unknown subset `{n}`")));
                }
            }
            pairs.push((ab[0].clone(), ab[1].clone()));
        }
    }
    Ok(InstanceFile { lring, ideals, pairs })
}

pub fn load(path: &Path) -> Result<InstanceFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    parse(&text)
}

impl InstanceFile {
    /// Named ideal lookup; `mu` names `mu` itself.
    pub fn ideal(&self, name: &str) -> Result<Ideal, CliError> {
        if name == "mu" {
            return Ok(self.lring.mu_ideal());
        }
        self.ideals
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.clone())
            .ok_or_else(|| {
                let known: Vec<&str> = std::iter::once("mu")
                    .chain(self.ideals.iter().map(|(k, _)| k.as_str()))
                    .collect();
                CliError::Validation(format!("no subset named `{name}`; known: {}", known.join(", ")))
            })
    }
}
