//! JSON form files and element rendering.
//!
//! ```json
//! {"field": "gf2:3:11", "dim": 2, "gram": [[0, 1], [1, 0]], "diag": [1, 6]}
//! ```
//!
//! Binary-field elements are JSON integers; F₂(t) and tower elements are
//! expression strings. The Gram matrix is given in full and must be
//! symmetric with zero diagonal.

use std::path::Path;

use arf_core::linalg::Matrix;
use arf_core::{AsClass, AsClassFF, BinElem, BinaryField, Field, QuadForm, TowerElem, TowerField};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, Result};
use crate::expr;
use crate::field_spec::{parse_field_spec, FieldSpec};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub field: String,
    pub dim: usize,
    pub gram: Vec<Vec<Value>>,
    pub diag: Vec<Value>,
}

/// Conversion between field elements and their JSON rendering.
pub trait JsonField: Field {
    fn elem_to_json(&self, e: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
}

impl JsonField for BinaryField {
    fn elem_to_json(&self, e: &BinElem) -> Value {
        Value::from(e.0)
    }

    fn elem_from_json(&self, v: &Value) -> Result<BinElem> {
        let bits = v
            .as_u64()
            .ok_or_else(|| CliError::parse(format!("expected a non-negative integer element, found {v}")))?;
        let bits = u32::try_from(bits).map_err(|_| arf_core::Error::ElementOutOfRange)?;
        Ok(self.elem(bits)?)
    }
}

impl JsonField for TowerField {
    fn elem_to_json(&self, e: &TowerElem) -> Value {
        Value::from(expr::format_tower_elem(e))
    }

    fn elem_from_json(&self, v: &Value) -> Result<TowerElem> {
        let s = v
            .as_str()
            .ok_or_else(|| CliError::parse(format!("expected an expression string, found {v}")))?;
        expr::parse_tower_elem(s, self.level())
    }
}

pub fn class_to_json(k: &BinaryField, c: &AsClass) -> Value {
    k.elem_to_json(&c.0)
}

/// The representative, written in the variable of the ambient level.
pub fn class_ff_to_json(c: &AsClassFF) -> Value {
    let var = if c.ambient() == 0 { 't' } else { 'u' };
    let rep = expr::format_ratfunc(&c.rep_at_ambient(), var);
    if c.ambient() == 0 {
        Value::from(rep)
    } else {
        Value::from(format!("level={}; {rep}", c.ambient()))
    }
}

pub fn vector_to_json<F: JsonField>(k: &F, v: &[F::Elem]) -> Value {
    Value::Array(v.iter().map(|e| k.elem_to_json(e)).collect())
}

pub fn matrix_to_json<F: JsonField>(k: &F, m: &Matrix<F::Elem>) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(k, m.row(i))).collect())
}

/// A form over one of the supported field kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyForm {
    Binary(QuadForm<BinaryField>),
    Tower(QuadForm<TowerField>),
}

impl AnyForm {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyForm::Binary(q) => FieldSpec::Binary(q.field().clone()),
            AnyForm::Tower(q) => FieldSpec::Tower(q.field().clone()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyForm::Binary(q) => q.dim(),
            AnyForm::Tower(q) => q.dim(),
        }
    }

    pub fn to_file(&self) -> FormFile {
        fn build<F: JsonField>(q: &QuadForm<F>, field: String) -> FormFile {
            let k = q.field();
            FormFile {
                field,
                dim: q.dim(),
                gram: q.gram().to_rows().iter().map(|r| r.iter().map(|e| k.elem_to_json(e)).collect()).collect(),
                diag: q.diag().iter().map(|e| k.elem_to_json(e)).collect(),
            }
        }
        let field = self.field_spec().to_string();
        match self {
            AnyForm::Binary(q) => build(q, field),
            AnyForm::Tower(q) => build(q, field),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("form files serialize")
    }
}

fn build_form<F: JsonField>(k: F, file: &FormFile) -> Result<QuadForm<F>> {
    if file.diag.len() != file.dim || file.gram.len() != file.dim {
        return Err(arf_core::Error::DimensionMismatch {
            expected: file.dim,
            found: if file.diag.len() != file.dim { file.diag.len() } else { file.gram.len() },
        }
        .into());
    }
    let mut rows = Vec::with_capacity(file.dim);
    for row in &file.gram {
        if row.len() != file.dim {
            return Err(arf_core::Error::DimensionMismatch {
                expected: file.dim,
                found: row.len(),
            }
            .into());
        }
        rows.push(row.iter().map(|v| k.elem_from_json(v)).collect::<Result<Vec<_>>>()?);
    }
    let diag = file.diag.iter().map(|v| k.elem_from_json(v)).collect::<Result<Vec<_>>>()?;
    Ok(QuadForm::new(k, Matrix::from_rows(rows)?, diag)?)
}

pub fn form_from_file(file: &FormFile, max_level: u32) -> Result<AnyForm> {
    match parse_field_spec(&file.field, max_level)? {
        FieldSpec::Binary(k) => Ok(AnyForm::Binary(build_form(k, file)?)),
        FieldSpec::Tower(k) => Ok(AnyForm::Tower(build_form(k, file)?)),
    }
}

pub fn parse_form(json: &str, max_level: u32) -> Result<AnyForm> {
    let file: FormFile = serde_json::from_str(json)?;
    form_from_file(&file, max_level)
}

pub fn load_form(path: &Path, max_level: u32) -> Result<AnyForm> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_form(&text, max_level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use arf_core::sample::random_form;
    use proptest::prelude::*;
    use rand::SeedableRng;

    #[test]
    fn loads_binary_form() {
        let q = parse_form(r#"{"field":"gf2:3:11","dim":2,"gram":[[0,1],[1,0]],"diag":[1,6]}"#, 8).unwrap();
        let AnyForm::Binary(q) = q else { panic!("binary form expected") };
        assert_eq!(q.diag(), &[BinElem(1), BinElem(6)]);
    }

    #[test]
    fn loads_tower_form() {
        let q = parse_form(r#"{"field":"f2t","dim":2,"gram":[["0","1"],["1","0"]],"diag":["1","t"]}"#, 8).unwrap();
        assert_eq!(q.field_spec().to_string(), "f2t");
        assert_eq!(q.to_file().diag, vec![Value::from("1"), Value::from("t")]);
    }

    #[test]
    fn rejects_bad_forms() {
        let cases = [
            // asymmetric
            r#"{"field":"gf2:1:3","dim":2,"gram":[[0,1],[0,0]],"diag":[0,0]}"#,
            // nonzero diagonal
            r#"{"field":"gf2:1:3","dim":2,"gram":[[1,1],[1,0]],"diag":[0,0]}"#,
            // wrong dim
            r#"{"field":"gf2:1:3","dim":3,"gram":[[0,1],[1,0]],"diag":[0,0]}"#,
            // element out of range
            r#"{"field":"gf2:1:3","dim":2,"gram":[[0,1],[1,0]],"diag":[0,2]}"#,
            // string in a binary field
            r#"{"field":"gf2:1:3","dim":2,"gram":[[0,1],[1,0]],"diag":["0",0]}"#,
            // u at level 0
            r#"{"field":"f2t","dim":2,"gram":[["0","1"],["1","0"]],"diag":["u","0"]}"#,
            // unknown key
            r#"{"field":"gf2:1:3","dim":0,"gram":[],"diag":[],"extra":1}"#,
            // reducible modulus
            r#"{"field":"gf2:2:5","dim":0,"gram":[],"diag":[]}"#,
        ];
        for c in cases {
            assert!(parse_form(c, 8).is_err(), "{c} accepted");
        }
    }

    proptest! {
        #[test]
        fn binary_forms_round_trip(seed in any::<u64>(), dim in 0usize..6) {
            let k = BinaryField::new(4, 19).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let q = AnyForm::Binary(random_form(&k, dim, &mut rng));
            prop_assert_eq!(parse_form(&q.to_json_string(), 8).unwrap(), q);
        }

        #[test]
        fn tower_forms_round_trip(seed in any::<u64>(), dim in 0usize..5) {
            let k = TowerField::new(2).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let q = random_form(&k, dim, &mut rng);
            // push entries up the tower so both variables get exercised
            let lifted: Vec<TowerElem> = q.diag().iter().map(|x| x.sqrt().sqrt()).collect();
            let q = AnyForm::Tower(QuadForm::new(k, q.gram().clone(), lifted).unwrap());
            prop_assert_eq!(parse_form(&q.to_json_string(), 8).unwrap(), q);
        }
    }
}
