//! JSON documents exchanged with other tools.
//!
//! Big integers travel as decimal strings. Schemas:
//!
//! - zeta: `{"numerator": ["0","0","6"], "denominator": [2,3]}`, where entry `k`
//!   of `numerator` is the coefficient of `t^k` and each `d` in `denominator`
//!   stands for a factor `(1+dt)`;
//! - monomial ideal: `{"vars": 2, "generators": [[7,0],[5,1]]}`;
//! - Segre data: `{"ambient_dim": 2, "coefficients": ["0","0","2"]}`.
//!
//! A zeta may also be read from any object holding it under a `"zeta"` key,
//! which is how the CLI's JSON output embeds it.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::exact_poly::{IntPoly, LinearFactorProduct, RationalSeries};
use crate::zeta::SegreZeta;

/// A schema violation, located by a JSON-pointer path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path = if self.path.is_empty() { "/" } else { &self.path };
        write!(f, "{path}: {}", self.message)
    }
}

impl std::error::Error for SchemaError {}

fn violation(path: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError {
        path: path.into(),
        message: message.into(),
    }
}

pub fn parse_json(text: &str) -> Result<Value, SchemaError> {
    serde_json::from_str(text).map_err(|e| violation("", format!("invalid JSON: {e}")))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, SchemaError> {
    v.as_object()
        .ok_or_else(|| violation(path, "expected an object"))
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, SchemaError> {
    obj.get(key)
        .ok_or_else(|| violation(format!("{path}/{key}"), "missing field"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, SchemaError> {
    v.as_array()
        .ok_or_else(|| violation(path, "expected an array"))
}

fn decimal(v: &Value, path: &str) -> Result<BigInt, SchemaError> {
    let s = v
        .as_str()
        .ok_or_else(|| violation(path, "expected a decimal string"))?;
    s.parse()
        .map_err(|_| violation(path, format!("{s:?} is not a decimal integer")))
}

fn unsigned(v: &Value, path: &str) -> Result<u64, SchemaError> {
    v.as_u64()
        .ok_or_else(|| violation(path, "expected a nonnegative integer"))
}

fn decimals(v: &Value, path: &str) -> Result<Vec<BigInt>, SchemaError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, c)| decimal(c, &format!("{path}/{i}")))
        .collect()
}

/// Reads a rational series from the zeta schema; not yet reduced.
pub fn read_series(v: &Value) -> Result<RationalSeries, SchemaError> {
    let (obj, base) = match v.get("zeta") {
        Some(inner) => (object(inner, "/zeta")?, "/zeta"),
        None => (object(v, "")?, ""),
    };
    let num_path = format!("{base}/numerator");
    let numerator = decimals(field(obj, base, "numerator")?, &num_path)?;

    let den_path = format!("{base}/denominator");
    let factors = array(field(obj, base, "denominator")?, &den_path)?
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let path = format!("{den_path}/{i}");
            match unsigned(d, &path)? {
                0 => Err(violation(path, "factor degree must be positive")),
                d => Ok(d),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalSeries::new(
        IntPoly::new(numerator),
        LinearFactorProduct::new(factors).expect("checked positive"),
    ))
}

pub fn write_series(f: &RationalSeries) -> Value {
    json!({
        "numerator": f.numerator().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "denominator": f.denominator().factors(),
    })
}

/// Zeta schema to a validated, reduced zeta.
pub fn read_zeta(v: &Value) -> Result<SegreZeta, SchemaError> {
    let series = read_series(v)?;
    let base = if v.get("zeta").is_some() { "/zeta" } else { "" };
    SegreZeta::from_series(series).map_err(|e| violation(format!("{base}/numerator"), e.to_string()))
}

pub fn write_zeta(z: &SegreZeta) -> Value {
    write_series(z.series())
}

pub fn read_generators(v: &Value) -> Result<Vec<(u64, u64)>, SchemaError> {
    let obj = object(v, "")?;
    let vars = unsigned(field(obj, "", "vars")?, "/vars")?;
    if vars != 2 {
        return Err(violation(
            "/vars",
            format!("only 2-variable monomial ideals are supported, got {vars}"),
        ));
    }
    array(field(obj, "", "generators")?, "/generators")?
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let path = format!("/generators/{i}");
            match array(g, &path)?.as_slice() {
                [a, b] => Ok((unsigned(a, &format!("{path}/0"))?, unsigned(b, &format!("{path}/1"))?)),
                _ => Err(violation(path, "expected an exponent pair [a, b]")),
            }
        })
        .collect()
}

/// Returns `(ambient_dim, coefficients)`.
pub fn read_segre(v: &Value) -> Result<(usize, Vec<BigInt>), SchemaError> {
    let obj = object(v, "")?;
    let n = unsigned(field(obj, "", "ambient_dim")?, "/ambient_dim")?;
    let coeffs = decimals(field(obj, "", "coefficients")?, "/coefficients")?;
    Ok((n as usize, coeffs))
}
