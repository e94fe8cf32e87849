use super::args::Input;
use crate::curvature::{tensor_entries, tensor_from_entries, AlgebraicCurvatureTensor};
use crate::error::{Error, Result};
use crate::exterior::{Multivector, Space, Tensor};
use crate::linalg::{Matrix, Vector};
use crate::rational::{parse_q, Q};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Text(String),
    Int(i64),
}

impl Coeff {
    fn value(&self) -> Result<Q> {
        match self {
            Coeff::Text(s) => parse_q(s),
            Coeff::Int(i) => Ok(crate::rational::q(*i)),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    idx: Vec<usize>,
    coeff: Coeff,
}

/// `{"n": 7, "degree": 2, "terms": [{"idx": [1, 2], "coeff": "1/2"}]}`
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MultivectorDoc {
    n: usize,
    degree: usize,
    terms: Vec<Entry>,
}

/// `{"n": 4, "entries": [{"idx": [1, 2, 1, 2], "coeff": "3/2"}]}`
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurvatureDoc {
    n: usize,
    entries: Vec<Entry>,
}

pub(crate) fn read(input: &Input) -> Result<String> {
    match (&input.file, &input.json) {
        (_, Some(text)) => Ok(text.clone()),
        (Some(path), None) => std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        (None, None) => Err(Error::InvalidInput("expected a JSON file or --json".into())),
    }
}

pub(crate) fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), column: e.column(), msg: e.to_string() })
}

pub fn parse_multivector(text: &str, space: &Space) -> Result<Multivector> {
    let doc: MultivectorDoc = parse_json(text)?;
    if doc.n != space.n() {
        return Err(Error::Dimension(format!("expected n = {}, got {}", space.n(), doc.n)));
    }
    let terms = doc
        .terms
        .iter()
        .map(|e| {
            if e.idx.len() != doc.degree || e.idx.iter().any(|&i| i == 0 || i > doc.n) {
                return Err(Error::InvalidInput(format!("bad index tuple {:?}", e.idx)));
            }
            Ok((e.idx.clone(), e.coeff.value()?))
        })
        .collect::<Result<Vec<_>>>()?;
    Multivector::from_terms(space, doc.degree, terms)
}

pub fn parse_curvature(text: &str) -> Result<AlgebraicCurvatureTensor> {
    let doc: CurvatureDoc = parse_json(text)?;
    let space = crate::exterior::InnerSpace::standard(doc.n);
    let entries = doc
        .entries
        .iter()
        .map(|e| {
            let idx: [usize; 4] = e.idx.clone().try_into().map_err(|_| Error::InvalidInput(format!("index {:?} needs 4 entries", e.idx)))?;
            Ok((idx, e.coeff.value()?))
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraicCurvatureTensor::new(tensor_from_entries(&space, &entries)?)
}

pub fn parse_vector(s: &str) -> Result<Vector> {
    s.split(',').map(|x| parse_q(x.trim())).collect()
}

pub fn q_json(x: &Q) -> Value {
    Value::String(x.to_string())
}

pub fn vector_json(v: &[Q]) -> Value {
    Value::Array(v.iter().map(q_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(&m.row(i))).collect())
}

pub fn multivector_json(m: &Multivector) -> Value {
    let terms: Vec<Value> = m.terms().iter().map(|(i, c)| json!({"idx": i, "coeff": q_json(c)})).collect();
    json!({"n": m.n(), "degree": m.degree(), "terms": terms})
}

pub fn tensor_json(t: &Tensor) -> Value {
    let entries: Vec<Value> = tensor_entries(t).iter().map(|(i, c)| json!({"idx": i, "coeff": q_json(c)})).collect();
    json!({"n": t.n(), "entries": entries})
}
