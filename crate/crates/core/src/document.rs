//! JSON exchange format for multivectors.
//!
//! ```json
//! { "p": 1, "q": 3, "field": "real", "convention": "grade-lex", "coeffs": [0, 1, 2, ...] }
//! ```
//!
//! Complex coefficients are written as `[re, im]` pairs. On input a bare
//! number is also accepted for a complex document and read as `[x, 0]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::blade::Signature;
use crate::error::{CliffordError, Result};
use crate::multivector::Multivector;
use crate::ordering::Convention;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultivectorDocument {
    pub p: usize,
    pub q: usize,
    pub field: Field,
    #[serde(default)]
    pub convention: Convention,
    pub coeffs: Vec<ScalarRepr>,
}

/// A multivector over either supported field.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMultivector {
    Real(Multivector<f64>),
    Complex(Multivector<Complex64>),
}

impl AnyMultivector {
    pub fn signature(&self) -> Signature {
        match self {
            AnyMultivector::Real(m) => m.signature(),
            AnyMultivector::Complex(m) => m.signature(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            AnyMultivector::Real(_) => Field::Real,
            AnyMultivector::Complex(_) => Field::Complex,
        }
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (AnyMultivector::Real(a), AnyMultivector::Real(b)) => a.geometric_product(b).map(AnyMultivector::Real),
            (AnyMultivector::Complex(a), AnyMultivector::Complex(b)) => {
                a.geometric_product(b).map(AnyMultivector::Complex)
            }
            _ => Err(CliffordError::InvalidDocument("operands have different fields".into())),
        }
    }

    pub fn to_document(&self) -> MultivectorDocument {
        let sig = self.signature();
        let (convention, coeffs) = match self {
            AnyMultivector::Real(m) => (m.convention(), m.coeffs().iter().map(|&x| ScalarRepr::Real(x)).collect()),
            AnyMultivector::Complex(m) => {
                (m.convention(), m.coeffs().iter().map(|z| ScalarRepr::Complex([z.re, z.im])).collect())
            }
        };
        MultivectorDocument { p: sig.p(), q: sig.q(), field: self.field(), convention, coeffs }
    }

    pub fn from_document(doc: &MultivectorDocument) -> Result<Self> {
        let sig = Signature::new(doc.p, doc.q)?;
        match doc.field {
            Field::Real => {
                let coeffs = doc
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| match c {
                        ScalarRepr::Real(x) => Ok(*x),
                        ScalarRepr::Complex(_) => Err(CliffordError::InvalidDocument(format!(
                            "coefficient {k} is complex in a real document"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Multivector::from_coeffs(sig, doc.convention, coeffs).map(AnyMultivector::Real)
            }
            Field::Complex => {
                let coeffs = doc
                    .coeffs
                    .iter()
                    .map(|c| match *c {
                        ScalarRepr::Real(x) => Complex64::new(x, 0.0),
                        ScalarRepr::Complex([re, im]) => Complex64::new(re, im),
                    })
                    .collect();
                Multivector::from_coeffs(sig, doc.convention, coeffs).map(AnyMultivector::Complex)
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MultivectorDocument =
            serde_json::from_str(text).map_err(|e| CliffordError::InvalidDocument(e.to_string()))?;
        Self::from_document(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("documents always serialize")
    }
}

impl From<Multivector<f64>> for AnyMultivector {
    fn from(m: Multivector<f64>) -> Self {
        AnyMultivector::Real(m)
    }
}

impl From<Multivector<Complex64>> for AnyMultivector {
    fn from(m: Multivector<Complex64>) -> Self {
        AnyMultivector::Complex(m)
    }
}
