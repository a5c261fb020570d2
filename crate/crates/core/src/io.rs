//! JSON shapes shared by the command-line tool and the C interface.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{FiberDescription, Subspace};
use crate::linalg::{Rat, RatMatrix};
use crate::polytope::{DecompositionCert, IntPoint};
use crate::poset::{Poset, PosetFile};
use crate::qpoly::QPolynomial;

pub fn parse_poset(text: &str) -> Result<Poset> {
    let file: PosetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Poset::from_file(&file)
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VectorFile {
    pub z: BTreeMap<String, i64>,
}

/// `{"z": {"label": int, ...}}`; labels not mentioned are zero.
pub fn parse_vector(p: &Poset, text: &str) -> Result<IntPoint> {
    let file: VectorFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut z = IntPoint::zeros(p.size());
    for (label, value) in &file.z {
        z.0[p.index_of(label)?] = *value;
    }
    Ok(z)
}

/// Only nonzero coordinates are written.
pub fn vector_json(p: &Poset, z: &IntPoint) -> Value {
    let map: serde_json::Map<String, Value> = z
        .0
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(i, &v)| (p.label(i).to_string(), json!(v)))
        .collect();
    json!({ "z": map })
}

pub fn labels_json(p: &Poset, elems: &[usize]) -> Value {
    json!(elems.iter().map(|&i| p.label(i)).collect::<Vec<_>>())
}

pub fn cert_json(p: &Poset, cert: &DecompositionCert) -> Value {
    json!({
        "antichains": cert.antichains.iter().map(|a| labels_json(p, &a.0)).collect::<Vec<_>>(),
        "remainder": vector_json(p, &cert.remainder)["z"],
    })
}

pub fn poly_json(q: &QPolynomial) -> Value {
    json!({ "coefficients": q.coeffs(), "string": q.to_string() })
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A JSON matrix whose entries are integers or strings like `"-3/4"`.
pub fn parse_matrix(value: &Value) -> Result<RatMatrix> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) => n
                        .as_i64()
                        .map(|v| BigRational::from_integer(v.into()))
                        .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
                    other => Err(Error::Parse(format!("bad matrix entry {other}"))),
                })
                .collect()
        })
        .collect()
}

/// Accepts either a bare matrix or `{"rows": matrix}`.
pub fn parse_subspace(text: &str) -> Result<Subspace> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let matrix = match value.get("rows") {
        Some(rows) => parse_matrix(rows)?,
        None => parse_matrix(&value)?,
    };
    let n = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("matrix rows have different lengths".into()));
    }
    Subspace::new(matrix)
}

pub fn matrix_json(m: &RatMatrix) -> Value {
    json!(m
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn fiber_json(f: &FiberDescription) -> Value {
    json!({
        "k": f.k,
        "proj_dim": f.proj_dim,
        "basis": f.basis.iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Poset {
        parse_poset(r#"{"elements":["a","b","c","d"],"relations":[["a","b"],["a","c"],["b","d"],["c","d"]]}"#)
            .unwrap()
    }

    #[test]
    fn vectors_round_trip() {
        let p = grid();
        let z = parse_vector(&p, r#"{"z":{"d":2,"a":1}}"#).unwrap();
        assert_eq!(z, IntPoint(vec![1, 0, 0, 2]));
        let back = vector_json(&p, &z).to_string();
        assert_eq!(parse_vector(&p, &back).unwrap(), z);
        assert!(matches!(parse_vector(&p, r#"{"z":{"e":1}}"#), Err(Error::UnknownLabel(_))));
        assert!(matches!(parse_vector(&p, r#"{"z":[1]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational(" -4 ").unwrap(), BigRational::from_integer((-4).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let u = parse_subspace(r#"[["1/2",0,1,0],[0,0,0,"3"]]"#).unwrap();
        assert_eq!(matrix_json(u.rows()), json!([["1", "0", "2", "0"], ["0", "0", "0", "1"]]));
        assert!(parse_subspace(r#"{"rows":[[1,0,0],[0,1]]}"#).is_err());
    }

    #[test]
    fn polynomial_shape() {
        let q = QPolynomial::new(vec![1, 2, 0, 1]);
        assert_eq!(poly_json(&q), json!({"coefficients":[1,2,0,1],"string":"1 + 2q + q^3"}));
    }
}
