//! Polytope JSON: `{"dim": n, "vertices": [[...], ...]}`.
//!
//! Integer coordinates are JSON integers; fractional ones are `"p/q"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::{LatticePolytope, RationalPoint};
use crate::error::{Error, Result};

fn coord_to_json(x: &BigRational) -> Value {
    if x.is_integer() {
        match i64::try_from(x.to_integer()) {
            Ok(v) => json!(v),
            Err(_) => json!(x.to_integer().to_string()),
        }
    } else {
        json!(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn polytope_to_json(p: &LatticePolytope) -> Value {
    let vertices: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| Value::Array(v.0.iter().map(coord_to_json).collect()))
        .collect();
    json!({ "dim": p.dim(), "vertices": vertices })
}

fn parse_coord(v: &Value, require_integral: bool) -> Result<BigRational> {
    let bad = || Error::Malformed(format!("bad coordinate {v}"));
    let x = match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(bad)?;
            BigRational::from_integer(BigInt::from(i))
        }
        Value::String(s) => {
            let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
            match s.split_once('/') {
                Some((p, q)) => {
                    let q = parse(q)?;
                    if q == BigInt::from(0) {
                        return Err(bad());
                    }
                    BigRational::new(parse(p)?, q)
                }
                None => BigRational::from_integer(parse(s)?),
            }
        }
        _ => return Err(bad()),
    };
    if require_integral && !x.is_integer() {
        return Err(Error::NotLattice);
    }
    Ok(x)
}

/// Reads polytope JSON and returns the hull of the listed points.
///
/// With `require_lattice`, every coordinate must be an integer.
pub fn polytope_from_json(text: &str, require_lattice: bool) -> Result<LatticePolytope> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let dim = value
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Malformed("missing integer field `dim`".into()))? as usize;
    let rows = value
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed("missing array field `vertices`".into()))?;
    let mut points = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Malformed("vertex is not an array".into()))?;
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: row.len(),
            });
        }
        let coords = row
            .iter()
            .map(|c| parse_coord(c, require_lattice))
            .collect::<Result<Vec<_>>>()?;
        points.push(RationalPoint(coords));
    }
    LatticePolytope::hull_rational(&points)
}
