use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Field;

/// JSON form of an algebra. Scalars are strings; structure constants are
/// sparse triples `[i, j, k, c]` meaning `b_i b_j` has coefficient `c` at `b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: String,
    pub basis: Vec<String>,
    pub structure_constants: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub idempotents: Vec<Vec<String>>,
    pub idempotent_labels: Vec<String>,
}

impl<F: Field> Algebra<F> {
    pub fn to_json(&self) -> AlgebraJson {
        let f = self.field();
        let d = self.dim();
        let mut sc = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !f.is_zero(c) {
                        sc.push((i, j, k, f.format(c)));
                    }
                }
            }
        }
        let fmt = |v: &[F::Elem]| v.iter().map(|x| f.format(x)).collect::<Vec<_>>();
        AlgebraJson {
            field: f.spec().to_string(),
            basis: self.labels().to_vec(),
            structure_constants: sc,
            unit: fmt(self.unit()),
            idempotents: self.idempotents().iter().map(|e| fmt(e)).collect(),
            idempotent_labels: self.idempotent_labels().to_vec(),
        }
    }

    pub fn from_json(field: &F, json: &AlgebraJson) -> Result<Self> {
        if json.field != field.spec().to_string() {
            return Err(Error::FieldMismatch(json.field.clone(), field.spec().to_string()));
        }
        let d = json.basis.len();
        let parse_vec = |v: &[String]| -> Result<Vec<F::Elem>> {
            if v.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: v.len() });
            }
            v.iter().map(|s| field.parse(s)).collect()
        };
        let mut table = vec![vec![field.zero(); d]; d * d];
        for (i, j, k, c) in &json.structure_constants {
            if *i >= d || *j >= d || *k >= d {
                return Err(Error::Parse(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            table[i * d + j][*k] = field.parse(c)?;
        }
        let idems = json.idempotents.iter().map(|e| parse_vec(e)).collect::<Result<Vec<_>>>()?;
        Algebra::new(field, json.basis.clone(), table, parse_vec(&json.unit)?, idems, json.idempotent_labels.clone())
    }

    /// SHA-256 of the canonical JSON form, as lowercase hex.
    pub fn hash_hex(&self) -> String {
        let text = serde_json::to_string(&self.to_json()).expect("serializable");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}
