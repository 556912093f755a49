//! JSON documents for matrices, seeds and fans.
//!
//! Integers are written as plain JSON numbers of any size.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serializer;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;
use crate::matrix::IntMatrix;
use crate::seed::Seed;

pub const FAN_DOCUMENT_VERSION: u32 = 1;

pub(crate) fn ser_bigint<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&bigint_to_number(x), s)
}

pub(crate) fn ser_opt_bigint<S: Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => ser_bigint(x, s),
        None => s.serialize_none(),
    }
}

pub fn bigint_to_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

pub fn bigint_value(x: &BigInt) -> Value {
    Value::Number(bigint_to_number(x))
}

pub fn int_vec_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(bigint_value).collect())
}

pub fn rows_value(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| int_vec_value(r)).collect())
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedDocument(msg.into())
}

pub fn value_to_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| malformed(format!("expected an integer, found {n}"))),
        other => Err(malformed(format!("expected an integer, found {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("{what} must be an array")))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| malformed(format!("missing field {name:?}")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| malformed(format!("{what} must be an object")))
}

pub fn int_vec_from_value(v: &Value) -> Result<Vec<BigInt>> {
    array(v, "vector")?.iter().map(value_to_bigint).collect()
}

pub fn rows_from_value(v: &Value) -> Result<IntMatrix> {
    let rows = array(v, "matrix")?
        .iter()
        .map(int_vec_from_value)
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(rows)
}

fn word_from_value(v: &Value) -> Result<Vec<usize>> {
    array(v, "word")?
        .iter()
        .map(|x| {
            x.as_u64()
                .and_then(|k| usize::try_from(k).ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| malformed(format!("bad direction {x} in word")))
        })
        .collect()
}

fn word_value(w: &[usize]) -> Value {
    Value::Array(w.iter().map(|&k| json!(k)).collect())
}

/// `{"n": 3, "b": [[..], ..]}`; the symmetrizer is always recomputed.
pub fn matrix_to_value(b: &ExchangeMatrix) -> Value {
    json!({ "n": b.rank(), "b": rows_value(b.entries()) })
}

pub fn matrix_from_value(v: &Value) -> Result<ExchangeMatrix> {
    let obj = object(v, "matrix document")?;
    let entries = rows_from_value(field(obj, "b")?)?;
    if let Some(n) = obj.get("n") {
        let n = n
            .as_u64()
            .ok_or_else(|| malformed("field \"n\" must be a nonnegative integer"))?;
        if n as usize != entries.rows() {
            return Err(malformed(format!(
                "declared n = {n} but matrix has {} rows",
                entries.rows()
            )));
        }
    }
    ExchangeMatrix::new(entries)
}

pub fn parse_matrix(text: &str) -> Result<ExchangeMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    matrix_from_value(&v)
}

pub fn seed_to_value(s: &Seed) -> Value {
    json!({
        "b": rows_value(s.b().entries()),
        "c": rows_value(s.c()),
        "g": rows_value(s.g()),
        "word": word_value(s.word()),
    })
}

pub fn seed_from_value(v: &Value) -> Result<Seed> {
    let obj = object(v, "seed document")?;
    let b = ExchangeMatrix::new(rows_from_value(field(obj, "b")?)?)?;
    let c = rows_from_value(field(obj, "c")?)?;
    let g = rows_from_value(field(obj, "g")?)?;
    let word = word_from_value(field(obj, "word")?)?;
    Seed::from_parts(b, c, g, word)
}

pub fn parse_seed(text: &str) -> Result<Seed> {
    let v: Value = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    seed_from_value(&v)
}

pub(crate) mod fan_doc {
    use super::*;

    pub struct ConeEntry {
        pub key: String,
        pub g: IntMatrix,
        pub c: IntMatrix,
        pub word: Vec<usize>,
    }

    pub struct FanDocument {
        pub source: ExchangeMatrix,
        pub depth: usize,
        pub cones: Vec<ConeEntry>,
        pub adjacency: Vec<(String, String)>,
        pub frontier: Vec<(String, usize)>,
    }

    pub fn to_value(doc: &FanDocument) -> Value {
        json!({
            "version": FAN_DOCUMENT_VERSION,
            "source": matrix_to_value(&doc.source),
            "depth": doc.depth,
            "cones": doc.cones.iter().map(|c| json!({
                "key": c.key,
                "g": rows_value(&c.g),
                "c": rows_value(&c.c),
                "word": word_value(&c.word),
            })).collect::<Vec<_>>(),
            "adjacency": doc.adjacency.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "frontier": doc.frontier.iter().map(|(k, d)| json!({"key": k, "direction": d})).collect::<Vec<_>>(),
        })
    }

    pub fn from_value(v: &Value) -> Result<FanDocument> {
        let obj = object(v, "fan document")?;
        let version = field(obj, "version")?
            .as_u64()
            .ok_or_else(|| malformed("version must be an integer"))?;
        if version != u64::from(FAN_DOCUMENT_VERSION) {
            return Err(Error::VersionMismatch {
                found: u32::try_from(version).unwrap_or(u32::MAX),
                expected: FAN_DOCUMENT_VERSION,
            });
        }
        let source = matrix_from_value(field(obj, "source")?)?;
        let depth = field(obj, "depth")?
            .as_u64()
            .ok_or_else(|| malformed("depth must be a nonnegative integer"))? as usize;
        let cones = array(field(obj, "cones")?, "cones")?
            .iter()
            .map(|c| {
                let c = object(c, "cone")?;
                Ok(ConeEntry {
                    key: field(c, "key")?
                        .as_str()
                        .ok_or_else(|| malformed("cone key must be a string"))?
                        .to_owned(),
                    g: rows_from_value(field(c, "g")?)?,
                    c: rows_from_value(field(c, "c")?)?,
                    word: word_from_value(field(c, "word")?)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let adjacency = array(field(obj, "adjacency")?, "adjacency")?
            .iter()
            .map(|e| {
                let pair = array(e, "adjacency entry")?;
                match pair.as_slice() {
                    [Value::String(a), Value::String(b)] => Ok((a.clone(), b.clone())),
                    _ => Err(malformed("adjacency entries are pairs of keys")),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let frontier = match obj.get("frontier") {
            None => Vec::new(),
            Some(f) => array(f, "frontier")?
                .iter()
                .map(|e| {
                    let e = object(e, "frontier entry")?;
                    let key = field(e, "key")?
                        .as_str()
                        .ok_or_else(|| malformed("frontier key must be a string"))?
                        .to_owned();
                    let dir = field(e, "direction")?
                        .as_u64()
                        .ok_or_else(|| malformed("frontier direction must be an integer"))?;
                    Ok((key, dir as usize))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(FanDocument {
            source,
            depth,
            cones,
            adjacency,
            frontier,
        })
    }
}
