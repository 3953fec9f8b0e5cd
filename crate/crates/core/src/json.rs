//! JSON encodings.
//!
//! ```text
//! rational          "p/q" (or "p")
//! Gaussian rational {"re": "p/q", "im": "p/q"}
//! complex double    {"re": x, "im": y}
//! matrix            {"rows": n, "cols": m, "field": "Q" | "Qi" | "C64", "entries": [[…], …]}
//! partial injection {"dom": n, "cod": m, "pairs": [[x, y], …]}
//! opposing pair     {"fwd": matrix, "bwd": matrix}
//! ```

use num::ToPrimitive;
use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::pinj::PartialInjection;
use crate::scalar::{parse_rational, Field, FieldKind, GaussianRational, Rational, C64};

/// A field with a JSON encoding for its elements.
pub trait JsonScalar: Field {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn bad(v: &Value, what: &str) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    /// Also accepts bare JSON integers.
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(Rational::from_integer(i.into())),
                None => Err(bad(v, "an integer or a \"p/q\" string")),
            },
            _ => Err(bad(v, "a rational")),
        }
    }
}

impl JsonScalar for GaussianRational {
    fn to_json(&self) -> Value {
        json!({"re": self.re.to_json(), "im": self.im.to_json()})
    }

    /// Also accepts a plain rational as a real Gaussian rational.
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(o) => {
                let part = |name: &str| match o.get(name) {
                    Some(p) => Rational::from_json(p),
                    None => Ok(Rational::from_integer(0.into())),
                };
                if o.keys().any(|k| k != "re" && k != "im") {
                    return Err(bad(v, "only `re` and `im` keys"));
                }
                Ok(GaussianRational::new(part("re")?, part("im")?))
            }
            _ => Rational::from_json(v).map(GaussianRational::from_rational),
        }
    }
}

fn finite(v: &Value) -> Result<f64> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| bad(v, "a finite number"))
}

impl JsonScalar for C64 {
    fn to_json(&self) -> Value {
        json!({"re": self.re, "im": self.im})
    }

    /// Also accepts a plain number as a real complex double.
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(o) => {
                if o.keys().any(|k| k != "re" && k != "im") {
                    return Err(bad(v, "only `re` and `im` keys"));
                }
                let part = |name: &str| o.get(name).map_or(Ok(0.0), finite);
                Ok(C64::new(part("re")?, part("im")?))
            }
            _ => Ok(C64::new(finite(v)?, 0.0)),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    field: FieldKind,
    entries: Vec<Vec<Value>>,
}

impl RawMatrix {
    fn decode<T: JsonScalar>(&self) -> Result<Matrix<T>> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Parse(format!(
                "entries do not form a {}x{} array",
                self.rows, self.cols
            )));
        }
        let data = self
            .entries
            .iter()
            .flatten()
            .map(T::from_json)
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, data)
    }

    fn encode<T: JsonScalar>(m: &Matrix<T>) -> Self {
        RawMatrix {
            rows: m.rows(),
            cols: m.cols(),
            field: T::KIND,
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(JsonScalar::to_json).collect())
                .collect(),
        }
    }
}

impl<T: JsonScalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawMatrix::encode(self).serialize(s)
    }
}

impl<'de, T: JsonScalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(d)?;
        if raw.field != T::KIND {
            return Err(D::Error::custom(format!(
                "expected field {}, found {}",
                T::KIND,
                raw.field
            )));
        }
        raw.decode().map_err(D::Error::custom)
    }
}

/// A matrix whose field is read from its `field` tag.
#[derive(Debug, Clone, PartialEq)]
pub enum DynMatrix {
    Q(Matrix<Rational>),
    Qi(Matrix<GaussianRational>),
    C64(Matrix<C64>),
}

impl DynMatrix {
    pub fn kind(&self) -> FieldKind {
        match self {
            DynMatrix::Q(_) => FieldKind::Q,
            DynMatrix::Qi(_) => FieldKind::Qi,
            DynMatrix::C64(_) => FieldKind::C64,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            DynMatrix::Q(m) => m.shape(),
            DynMatrix::Qi(m) => m.shape(),
            DynMatrix::C64(m) => m.shape(),
        }
    }

    /// Lossless conversion along `Q → Qi → C64`.
    pub fn promote(self, target: FieldKind) -> Result<DynMatrix> {
        let to_f64 = |x: &Rational| x.to_f64().unwrap_or(f64::NAN);
        let promoted = match (self, target) {
            (m, t) if m.kind() == t => m,
            (DynMatrix::Q(m), FieldKind::Qi) => {
                DynMatrix::Qi(m.map(|x| GaussianRational::from_rational(x.clone())))
            }
            (DynMatrix::Q(m), FieldKind::C64) => {
                DynMatrix::C64(m.map(|x| C64::new(to_f64(x), 0.0)))
            }
            (DynMatrix::Qi(m), FieldKind::C64) => {
                DynMatrix::C64(m.map(|z| C64::new(to_f64(&z.re), to_f64(&z.im))))
            }
            (m, t) => {
                return Err(Error::Parse(format!(
                    "cannot convert a {} matrix to {t} without loss",
                    m.kind()
                )))
            }
        };
        if let DynMatrix::C64(m) = &promoted {
            if m.entries()
                .iter()
                .any(|z| !z.re.is_finite() || !z.im.is_finite())
            {
                return Err(Error::Parse("entry does not fit in a double".into()));
            }
        }
        Ok(promoted)
    }
}

impl Serialize for DynMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DynMatrix::Q(m) => m.serialize(s),
            DynMatrix::Qi(m) => m.serialize(s),
            DynMatrix::C64(m) => m.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for DynMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(d)?;
        let m = match raw.field {
            FieldKind::Q => raw.decode().map(DynMatrix::Q),
            FieldKind::Qi => raw.decode().map(DynMatrix::Qi),
            FieldKind::C64 => raw.decode().map(DynMatrix::C64),
        };
        m.map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPinj {
    dom: usize,
    cod: usize,
    pairs: Vec<(usize, usize)>,
}

impl Serialize for PartialInjection {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPinj {
            dom: self.dom(),
            cod: self.cod(),
            pairs: self.pairs().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialInjection {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPinj::deserialize(d)?;
        PartialInjection::new(raw.dom, raw.cod, raw.pairs).map_err(D::Error::custom)
    }
}

/// Parses JSON text, reporting failures as [`Error::Parse`].
pub fn from_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed JSON with deterministic key order.
pub fn to_string_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("JSON encoding is infallible for these types")
}
