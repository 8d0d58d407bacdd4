//! JSON text format for algebras.
//!
//! ```json
//! {
//!   "top_degree": 2,
//!   "basis": [{"degree": 0, "labels": ["1"]}, {"degree": 2, "labels": ["h"]}],
//!   "products": [],
//!   "integration": [{"index": 0, "coeff": "1"}],
//!   "omega": [{"index": 0, "coeff": "1"}]
//! }
//! ```
//!
//! Product operands are `[degree, index]` pairs or basis labels. Products with the
//! unit are implicit; listing them overrides the identity.

use serde::Serialize;
use serde_json::Value;

use crate::algebra::{AlgebraBuilder, GradedAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{format_literal, parse_literal, Scalar};

fn field<'a>(obj: &'a serde_json::Map<String, Value>, name: &str, loc: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| Error::format(loc, format!("missing {name:?} block")))
}

fn as_usize(v: &Value, loc: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::format(loc, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, loc: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::format(loc, "expected an array"))
}

fn as_object<'a>(v: &'a Value, loc: &str) -> Result<&'a serde_json::Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::format(loc, "expected an object"))
}

fn coefficient(v: &Value, loc: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_literal(s).map_err(|source| Error::Literal {
            location: loc.to_string(),
            source,
        }),
        Value::Number(n) if n.is_i64() => Ok(crate::scalar::int(n.as_i64().unwrap())),
        _ => Err(Error::format(loc, "coefficient must be a rational literal string such as \"3/2\"")),
    }
}

/// Sparse `[{"index", "coeff"}]` list into a dense vector of length `dim`.
fn sparse_vector(v: &Value, dim: usize, loc: &str) -> Result<Vec<Scalar>> {
    let mut out = vec![Scalar::from_integer(0.into()); dim];
    let mut seen = vec![false; dim];
    for (k, term) in as_array(v, loc)?.iter().enumerate() {
        let tloc = format!("{loc}[{k}]");
        let obj = as_object(term, &tloc)?;
        let index = as_usize(field(obj, "index", &tloc)?, &format!("{tloc}.index"))?;
        if index >= dim {
            return Err(Error::format(
                format!("{tloc}.index"),
                format!("index {index} out of range for dimension {dim}"),
            ));
        }
        if seen[index] {
            return Err(Error::format(format!("{tloc}.index"), format!("duplicate index {index}")));
        }
        seen[index] = true;
        out[index] = coefficient(field(obj, "coeff", &tloc)?, &format!("{tloc}.coeff"))?;
    }
    Ok(out)
}

fn operand(v: &Value, labels: &[Vec<String>], loc: &str) -> Result<(usize, usize)> {
    match v {
        Value::String(label) => {
            let mut hits = labels.iter().enumerate().flat_map(|(p, ls)| {
                ls.iter()
                    .enumerate()
                    .filter(move |(_, l)| *l == label)
                    .map(move |(i, _)| (p, i))
            });
            let first = hits
                .next()
                .ok_or_else(|| Error::format(loc, format!("unknown basis label {label:?}")))?;
            if hits.next().is_some() {
                return Err(Error::format(loc, format!("ambiguous basis label {label:?}")));
            }
            Ok(first)
        }
        Value::Array(pair) if pair.len() == 2 => {
            let p = as_usize(&pair[0], loc)?;
            let i = as_usize(&pair[1], loc)?;
            if p >= labels.len() || i >= labels[p].len() {
                return Err(Error::format(loc, format!("no basis element [{p},{i}]")));
            }
            Ok((p, i))
        }
        _ => Err(Error::format(loc, "operand must be [degree, index] or a basis label")),
    }
}

/// Parses the JSON algebra format.
pub fn parse_algebra(text: &str) -> Result<GradedAlgebra> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        Error::format(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let obj = as_object(&root, "document")?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "top_degree" | "basis" | "products" | "integration" | "omega") {
            return Err(Error::format(key.as_str(), "unknown field"));
        }
    }
    let top = as_usize(field(obj, "top_degree", "document")?, "top_degree")?;

    let mut labels: Vec<Option<Vec<String>>> = vec![None; top + 1];
    for (k, entry) in as_array(field(obj, "basis", "document")?, "basis")?.iter().enumerate() {
        let loc = format!("basis[{k}]");
        let e = as_object(entry, &loc)?;
        let degree = as_usize(field(e, "degree", &loc)?, &format!("{loc}.degree"))?;
        if degree > top {
            return Err(Error::format(
                format!("{loc}.degree"),
                format!("degree {degree} exceeds top_degree {top}"),
            ));
        }
        if labels[degree].is_some() {
            return Err(Error::format(
                format!("{loc}.degree"),
                format!("degree {degree} listed twice"),
            ));
        }
        let ls = as_array(field(e, "labels", &loc)?, &format!("{loc}.labels"))?
            .iter()
            .enumerate()
            .map(|(i, l)| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::format(format!("{loc}.labels[{i}]"), "label must be a string"))
            })
            .collect::<Result<Vec<_>>>()?;
        labels[degree] = Some(ls);
    }
    let labels: Vec<Vec<String>> = labels.into_iter().map(Option::unwrap_or_default).collect();

    let mut builder = AlgebraBuilder::new(top, labels.clone())?;
    if let Some(products) = obj.get("products") {
        let mut seen = std::collections::BTreeSet::new();
        for (k, entry) in as_array(products, "products")?.iter().enumerate() {
            let loc = format!("products[{k}]");
            let e = as_object(entry, &loc)?;
            let (p, i) = operand(field(e, "left", &loc)?, &labels, &format!("{loc}.left"))?;
            let (q, j) = operand(field(e, "right", &loc)?, &labels, &format!("{loc}.right"))?;
            if p > q {
                return Err(Error::format(loc, "left degree must not exceed right degree"));
            }
            if p + q > top {
                return Err(Error::format(
                    loc,
                    format!("product degree {} exceeds top_degree {top}", p + q),
                ));
            }
            if !seen.insert((p, i, q, j)) {
                return Err(Error::format(loc, format!("duplicate product [{p},{i}]*[{q},{j}]")));
            }
            let value = sparse_vector(field(e, "value", &loc)?, builder.dim(p + q), &format!("{loc}.value"))?;
            builder.set_product((p, i), (q, j), value)?;
        }
    }
    let integ = sparse_vector(
        field(obj, "integration", "document")?,
        builder.dim(top),
        "integration",
    )?;
    builder.set_integration(integ)?;
    if let Some(w) = obj.get("omega") {
        if top < 2 {
            return Err(Error::format("omega", "omega requires top_degree >= 2"));
        }
        let omega = sparse_vector(w, builder.dim(2), "omega")?;
        builder.set_omega(omega)?;
    }
    builder.build()
}

#[derive(Serialize)]
struct OutTerm {
    index: usize,
    coeff: String,
}

#[derive(Serialize)]
struct OutDegree<'a> {
    degree: usize,
    labels: &'a [String],
}

#[derive(Serialize)]
struct OutProduct {
    left: [usize; 2],
    right: [usize; 2],
    value: Vec<OutTerm>,
}

#[derive(Serialize)]
struct OutAlgebra<'a> {
    top_degree: usize,
    basis: Vec<OutDegree<'a>>,
    products: Vec<OutProduct>,
    integration: Vec<OutTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<Vec<OutTerm>>,
}

fn sparse(v: &[Scalar]) -> Vec<OutTerm> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .map(|(index, x)| OutTerm {
            index,
            coeff: format_literal(x),
        })
        .collect()
}

/// Canonical JSON text: every degree listed, nonzero products only, unit products
/// omitted when they are the identity.
pub fn serialize_algebra(a: &GradedAlgebra) -> String {
    let basis = (0..=a.top_degree())
        .map(|degree| OutDegree {
            degree,
            labels: a.labels(degree),
        })
        .collect();
    let products = a
        .stored_products()
        .filter(|&(p, _, _, j, v)| {
            if p == 0 {
                let identity = v.iter().enumerate().all(|(k, x)| {
                    if k == j {
                        num_traits::One::is_one(x)
                    } else {
                        num_traits::Zero::is_zero(x)
                    }
                });
                !identity
            } else {
                v.iter().any(|x| !num_traits::Zero::is_zero(x))
            }
        })
        .map(|(p, i, q, j, v)| OutProduct {
            left: [p, i],
            right: [q, j],
            value: sparse(v),
        })
        .collect();
    let out = OutAlgebra {
        top_degree: a.top_degree(),
        basis,
        products,
        integration: sparse(a.integration()),
        omega: a.omega().map(|w| sparse(w.coords())),
    };
    let mut s = serde_json::to_string_pretty(&out).expect("serializable");
    s.push('\n');
    s
}
