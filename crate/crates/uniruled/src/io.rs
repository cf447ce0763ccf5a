//! JSON wire formats for posets, triangular maps and vectors.
//!
//! A map file is `{"poset": [graph-list...], "entries": [[i, j, "p/q"]...]}`
//! where the poset array is stored in linear-extension order and entry
//! indices refer to positions in that array. A vector file is a sparse list
//! `[[index-or-graph-key, "p/q"]...]`.

use std::sync::Arc;

use num::rational::BigRational;
use num::ToPrimitive;
use serde_json::{json, Value};

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{GraphContext, GraphList};
use crate::poset::GraphPoset;
use crate::surface::{parse_rational, rational_to_string, DivisorClass, SurfaceModel};
use crate::triangular::{InvariantVector, TriangularMap};

/// A class as a JSON array of integers (strings for values beyond i64).
pub fn class_to_value(class: &DivisorClass) -> Value {
    Value::Array(
        class
            .coeffs()
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => json!(v),
                None => json!(c.to_string()),
            })
            .collect(),
    )
}

/// Reads a class from a JSON array of integers against a model.
pub fn class_from_value(value: &Value, model: &SurfaceModel) -> Result<DivisorClass> {
    let array = value
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a coefficient array, got {value}")))?;
    let mut coeffs = Vec::with_capacity(array.len());
    for item in array {
        let coeff = match item {
            Value::Number(n) => BigInt::from(
                n.as_i64()
                    .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}")))?,
            ),
            Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad coefficient {s:?}: {e}")))?,
            other => return Err(Error::Parse(format!("bad coefficient {other}"))),
        };
        coeffs.push(coeff);
    }
    DivisorClass::new(model.clone(), coeffs)
}

/// Reads a rational from a JSON string (`"p/q"`) or integer.
pub fn rational_from_value(value: &Value) -> Result<BigRational> {
    match value {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("non-integer number {n}")))?;
            Ok(BigRational::from_integer(i.into()))
        }
        other => Err(Error::Parse(format!(
            "expected a rational string or integer, got {other}"
        ))),
    }
}

/// Parses a poset stored as a JSON array of graph lists, preserving the
/// stored order. With a context the order is verified to be a linear
/// extension; without one it is trusted positionally.
pub fn poset_from_value(value: &Value, ctx: Option<(&GraphContext, bool)>) -> Result<GraphPoset> {
    let elements: Vec<GraphList> = serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse(format!("bad poset array: {e}")))?;
    match ctx {
        Some((ctx, genus_zero)) => {
            GraphPoset::from_elements_in_order(elements, ctx.clone(), genus_zero)
        }
        None => GraphPoset::from_linear_order(elements),
    }
}

pub fn poset_to_value(poset: &GraphPoset) -> Value {
    serde_json::to_value(poset.elements()).expect("posets always serialize")
}

pub fn map_to_value(map: &TriangularMap) -> Value {
    let entries: Vec<Value> = map
        .entries()
        .map(|(i, j, v)| json!([i, j, rational_to_string(v)]))
        .collect();
    json!({
        "poset": poset_to_value(map.poset()),
        "entries": entries,
    })
}

pub fn map_from_value(value: &Value, ctx: Option<(&GraphContext, bool)>) -> Result<TriangularMap> {
    let object = value
        .as_object()
        .ok_or_else(|| Error::Parse("map file must be a JSON object".into()))?;
    let poset_value = object
        .get("poset")
        .ok_or_else(|| Error::Parse("map file is missing \"poset\"".into()))?;
    let poset = Arc::new(poset_from_value(poset_value, ctx)?);
    let entries_value = object
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("map file is missing an \"entries\" array".into()))?;
    let mut coefficients = Vec::with_capacity(entries_value.len());
    for entry in entries_value {
        let triple = entry
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::Parse(format!("bad map entry {entry}")))?;
        let row = index_from_value(&triple[0], &poset)?;
        let col = index_from_value(&triple[1], &poset)?;
        let coeff = rational_from_value(&triple[2])?;
        coefficients.push((row, col, coeff));
    }
    TriangularMap::new(poset, coefficients)
}

pub fn vector_to_value(vector: &InvariantVector) -> Value {
    let entries: Vec<Value> = vector
        .values()
        .iter()
        .enumerate()
        .filter(|(_, v)| !num::Zero::is_zero(*v))
        .map(|(i, v)| json!([i, rational_to_string(v)]))
        .collect();
    Value::Array(entries)
}

pub fn vector_from_value(value: &Value, poset: Arc<GraphPoset>) -> Result<InvariantVector> {
    let entries_value = value
        .as_array()
        .ok_or_else(|| Error::Parse("vector file must be a JSON array".into()))?;
    let mut entries = Vec::with_capacity(entries_value.len());
    for entry in entries_value {
        let pair = entry
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse(format!("bad vector entry {entry}")))?;
        let index = index_from_value(&pair[0], &poset)?;
        let coeff = rational_from_value(&pair[1])?;
        entries.push((index, coeff));
    }
    InvariantVector::from_entries(poset, entries)
}

/// Resolves a poset element reference: a numeric index, the canonical
/// serialization of an element, the word `empty`, or an inline graph-list
/// JSON value.
fn index_from_value(value: &Value, poset: &GraphPoset) -> Result<usize> {
    match value {
        Value::Number(n) => n
            .as_u64()
            .and_then(|v| v.to_usize())
            .ok_or_else(|| Error::Parse(format!("bad index {n}"))),
        Value::String(s) => {
            if let Some(i) = poset.canonical_keys().iter().position(|k| k == s) {
                return Ok(i);
            }
            let list = if s == "empty" {
                GraphList::empty()
            } else {
                serde_json::from_str(s)
                    .map_err(|e| Error::Parse(format!("unknown graph key {s:?}: {e}")))?
            };
            poset
                .index_of(&list)
                .ok_or_else(|| Error::Parse(format!("graph key {s:?} is not in the poset")))
        }
        other => {
            let list: GraphList = serde_json::from_value(other.clone())
                .map_err(|e| Error::Parse(format!("bad element reference {other}: {e}")))?;
            poset
                .index_of(&list)
                .ok_or_else(|| Error::Parse(format!("graph {other} is not in the poset")))
        }
    }
}
