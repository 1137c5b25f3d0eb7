//! JSON ring descriptions: `{"kind":"artinian","field":p,"vars":[...],"relations":[...]}`
//! or `{"kind":"semigroup","generators":[...]}`.

use crate::field::PrimeField;
use crate::finalg::{AlgebraError, FinAlgebra};
use crate::numsgp::{NumericalSemigroup, SemigroupError};
use serde_json::{json, Value};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Artinian { field: u64, vars: Vec<String>, relations: Vec<String> },
    Semigroup { generators: Vec<u64> },
}

/// A constructed ring.
#[derive(Debug, Clone)]
pub enum Ring {
    Artinian(FinAlgebra),
    Semigroup(NumericalSemigroup),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("field size {0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("not a numerical semigroup: gcd of {0:?} is not 1")]
    GcdNotOne(Vec<u64>),
    #[error("unknown ring kind `{0}` (expected artinian or semigroup)")]
    UnknownKind(String),
    #[error("bad field `{field}`: {reason}")]
    BadField { field: &'static str, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Semigroup(SemigroupError),
}

impl SpecError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            SpecError::Json(_) => "E_JSON",
            SpecError::NotPrime(_) => "E_PRIME",
            SpecError::GcdNotOne(_) => "E_GCD",
            SpecError::UnknownKind(_) => "E_KIND",
            SpecError::BadField { .. } => "E_FIELD",
            SpecError::Algebra(_) => "E_ALGEBRA",
            SpecError::Semigroup(_) => "E_SEMIGROUP",
        }
    }
}

impl From<SemigroupError> for SpecError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::GcdNotOne(g) => SpecError::GcdNotOne(g),
            other => SpecError::Semigroup(other),
        }
    }
}

fn bad(field: &'static str, reason: impl Into<String>) -> SpecError {
    SpecError::BadField { field, reason: reason.into() }
}

fn strings(v: Option<&Value>, field: &'static str) -> Result<Vec<String>, SpecError> {
    let arr = v.and_then(Value::as_array).ok_or_else(|| bad(field, "expected an array of strings"))?;
    arr.iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad(field, "expected an array of strings")))
        .collect()
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec, SpecError> {
        let doc: Value = serde_json::from_str(text).map_err(|e| SpecError::Json(e.to_string()))?;
        RingSpec::from_value(&doc)
    }

    pub fn from_value(doc: &Value) -> Result<RingSpec, SpecError> {
        let obj = doc.as_object().ok_or_else(|| SpecError::Json("top level must be an object".into()))?;
        let kind = obj.get("kind").and_then(Value::as_str).ok_or_else(|| bad("kind", "missing or not a string"))?;
        match kind {
            "artinian" => {
                let field = obj.get("field").and_then(Value::as_u64).ok_or_else(|| bad("field", "expected a positive integer"))?;
                if PrimeField::new(field).is_err() {
                    return Err(SpecError::NotPrime(field));
                }
                let vars = strings(obj.get("vars"), "vars")?;
                let relations = match obj.get("relations") {
                    None => Vec::new(),
                    v => strings(v, "relations")?,
                };
                Ok(RingSpec::Artinian { field, vars, relations })
            }
            "semigroup" => {
                let arr = obj
                    .get("generators")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("generators", "expected an array of positive integers"))?;
                let generators = arr
                    .iter()
                    .map(|g| g.as_u64().filter(|&g| g > 0).ok_or_else(|| bad("generators", "expected positive integers")))
                    .collect::<Result<Vec<_>, _>>()?;
                if generators.is_empty() {
                    return Err(bad("generators", "empty"));
                }
                let g = generators.iter().fold(0, |a, &b| gcd(a, b));
                if g != 1 {
                    return Err(SpecError::GcdNotOne(generators));
                }
                Ok(RingSpec::Semigroup { generators })
            }
            other => Err(SpecError::UnknownKind(other.to_string())),
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            RingSpec::Artinian { field, vars, relations } => {
                json!({"kind": "artinian", "field": field, "vars": vars, "relations": relations})
            }
            RingSpec::Semigroup { generators } => json!({"kind": "semigroup", "generators": generators}),
        }
    }

    pub fn build(&self) -> Result<Ring, SpecError> {
        match self {
            RingSpec::Artinian { field, vars, relations } => {
                let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
                let rels: Vec<&str> = relations.iter().map(String::as_str).collect();
                Ok(Ring::Artinian(FinAlgebra::from_strings(*field, &vars, &rels)?))
            }
            RingSpec::Semigroup { generators } => Ok(Ring::Semigroup(NumericalSemigroup::new(generators)?)),
        }
    }

    pub fn artinian(field: u64, vars: &[&str], relations: &[&str]) -> RingSpec {
        RingSpec::Artinian {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            relations: relations.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn semigroup(generators: &[u64]) -> RingSpec {
        RingSpec::Semigroup { generators: generators.to_vec() }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for RingSpec {
    /// The compact JSON text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_value())
    }
}

impl Ring {
    pub fn name(&self) -> String {
        match self {
            Ring::Artinian(a) => a.name().to_string(),
            Ring::Semigroup(s) => s.to_string(),
        }
    }
}
