//! On-disk JSON format for bracket tables.
//!
//! A document records the field, the dimension, and the strictly-upper
//! bracket table with 1-based indices; pairs that are omitted are zero.
//! Coefficients are JSON integers over a prime field, arrays of integers
//! over an extension field (ascending powers of the generator), and
//! `"num/den"` strings over the rationals. Serialization is canonical:
//! loading a saved document and saving it again reproduces the bytes.

use anyhow::{anyhow, bail, Context, Result};
use lie_lab::field::{Field, Scalar};
use lie_lab::ring::LieRing;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

pub const FORMAT_VERSION: u64 = 1;

/// Field description: `characteristic` 0 means the rationals; `modulus`
/// holds ascending-degree coefficients and is present exactly for proper
/// extension fields.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldDoc {
    pub characteristic: u64,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

/// One bracket row: `[i, j, coefficients]` with `1 <= i < j <= dim`.
pub type BracketEntry = (usize, usize, Vec<Value>);

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieRingDocument {
    pub format_version: u64,
    pub field: FieldDoc,
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, Value>,
}

pub fn field_from_doc(fd: &FieldDoc) -> Result<Field> {
    if fd.characteristic == 0 {
        if fd.degree != 1 || fd.modulus.is_some() {
            bail!("the rationals have degree 1 and no modulus");
        }
        return Ok(Field::rationals());
    }
    match (&fd.modulus, fd.degree) {
        (None, 1) => Ok(Field::prime(fd.characteristic)?),
        (None, k) => Ok(Field::extension(fd.characteristic, k)?),
        (Some(_), 0 | 1) => bail!("a modulus is only meaningful for degree >= 2"),
        (Some(m), k) => {
            let field = Field::extension_with_modulus(fd.characteristic, m.clone())?;
            if field.degree() != k {
                bail!(
                    "modulus has degree {} but the document says {}",
                    field.degree(),
                    k
                );
            }
            Ok(field)
        }
    }
}

pub fn field_to_doc(f: &Field) -> FieldDoc {
    FieldDoc {
        characteristic: f.characteristic(),
        degree: f.degree(),
        modulus: f.modulus().map(|m| m.to_vec()),
    }
}

/// Encodes one coefficient in the document convention for `f`.
pub fn encode_scalar(s: &Scalar) -> Value {
    match s {
        Scalar::Fp(c) => Value::from(*c),
        Scalar::Ext(cs) => Value::from(cs.clone()),
        Scalar::Rat(r) => {
            let repr = if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            };
            Value::from(repr)
        }
    }
}

/// Decodes one coefficient; the accepted shape depends on the field.
pub fn decode_scalar(f: &Field, v: &Value) -> Result<Scalar> {
    match (f.characteristic(), f.degree()) {
        (0, _) => {
            let text = v
                .as_str()
                .ok_or_else(|| anyhow!("rational coefficients are \"num/den\" strings, got {v}"))?;
            let (num, den) = match text.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (text.trim(), "1"),
            };
            let num = BigInt::from_str(num).with_context(|| format!("bad numerator in {text:?}"))?;
            let den = BigInt::from_str(den).with_context(|| format!("bad denominator in {text:?}"))?;
            if den == BigInt::from(0) {
                bail!("zero denominator in {text:?}");
            }
            Ok(Scalar::Rat(BigRational::new(num, den)))
        }
        (_, 1) => {
            let n = v
                .as_i64()
                .ok_or_else(|| anyhow!("prime field coefficients are integers, got {v}"))?;
            Ok(f.from_int(n))
        }
        (_, k) => {
            let arr = v.as_array().ok_or_else(|| {
                anyhow!("extension field coefficients are arrays of {k} integers, got {v}")
            })?;
            if arr.len() != k {
                bail!("extension coefficient needs {k} entries, got {}", arr.len());
            }
            let ints: Vec<i64> = arr
                .iter()
                .map(|e| e.as_i64().ok_or_else(|| anyhow!("non-integer entry in {v}")))
                .collect::<Result<_>>()?;
            Ok(f.from_coefficients(&ints)?)
        }
    }
}

/// Builds the document for a ring, listing only nonzero pairs in row order.
pub fn doc_from_ring(l: &LieRing, metadata: BTreeMap<String, Value>) -> LieRingDocument {
    let mut brackets: Vec<BracketEntry> = l
        .nonzero_pairs()
        .into_iter()
        .map(|(i, j, coeffs)| (i + 1, j + 1, coeffs.iter().map(encode_scalar).collect()))
        .collect();
    brackets.sort_by_key(|&(i, j, _)| (i, j));
    LieRingDocument {
        format_version: FORMAT_VERSION,
        field: field_to_doc(l.field()),
        dim: l.dim(),
        brackets,
        metadata,
    }
}

/// Reconstructs the ring a document describes.
pub fn ring_from_doc(doc: &LieRingDocument) -> Result<LieRing> {
    if doc.format_version != FORMAT_VERSION {
        bail!(
            "unsupported format_version {} (this build reads {})",
            doc.format_version,
            FORMAT_VERSION
        );
    }
    let field = field_from_doc(&doc.field)?;
    let dim = doc.dim;
    let mut seen = std::collections::BTreeSet::new();
    let mut pairs: Vec<((usize, usize), Vec<Scalar>)> = Vec::new();
    for (i, j, coeffs) in &doc.brackets {
        if *i < 1 || *j < 1 || *i >= *j || *j > dim {
            bail!("bracket indices must satisfy 1 <= i < j <= dim, got [{i}, {j}]");
        }
        if !seen.insert((*i, *j)) {
            bail!("duplicate bracket entry for [{i}, {j}]");
        }
        if coeffs.len() != dim {
            bail!(
                "bracket [{i}, {j}] has {} coefficients, expected {dim}",
                coeffs.len()
            );
        }
        let decoded: Vec<Scalar> = coeffs
            .iter()
            .map(|c| decode_scalar(&field, c))
            .collect::<Result<_>>()
            .with_context(|| format!("in bracket [{i}, {j}]"))?;
        pairs.push(((i - 1, j - 1), decoded));
    }
    Ok(LieRing::from_pairs(field, dim, pairs)?)
}

/// Canonical serialization: pretty JSON with a trailing newline. Loading
/// this string and saving again is byte-identical.
pub fn save_string(doc: &LieRingDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn load_string(text: &str) -> Result<LieRingDocument> {
    Ok(serde_json::from_str(text)?)
}

pub fn load_path(path: &Path) -> Result<(LieRingDocument, LieRing)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let doc = load_string(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    let ring = ring_from_doc(&doc).with_context(|| format!("invalid table in {}", path.display()))?;
    Ok((doc, ring))
}

pub fn save_path(path: &Path, doc: &LieRingDocument) -> Result<()> {
    std::fs::write(path, save_string(doc))
        .with_context(|| format!("cannot write {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lie_lab::constructions::catalog;

    #[test]
    fn round_trip_is_byte_identical_for_the_whole_catalog() {
        for (name, ring) in catalog() {
            let mut meta = BTreeMap::new();
            meta.insert("name".to_string(), Value::from(name.clone()));
            let doc = doc_from_ring(&ring, meta);
            let first = save_string(&doc);
            let reloaded = load_string(&first).unwrap();
            let second = save_string(&reloaded);
            assert_eq!(first, second, "round trip changed bytes for {name}");

            let rebuilt = ring_from_doc(&reloaded).unwrap();
            assert_eq!(rebuilt.dim(), ring.dim(), "{name}");
            assert_eq!(rebuilt.field(), ring.field(), "{name}");
            for i in 0..ring.dim() {
                for j in (i + 1)..ring.dim() {
                    assert_eq!(
                        rebuilt.basis_bracket(i, j),
                        ring.basis_bracket(i, j),
                        "{name} [{i},{j}]"
                    );
                }
            }
        }
    }

    #[test]
    fn omitted_pairs_are_zero() {
        let text = r#"{
            "format_version": 1,
            "field": {"characteristic": 5, "degree": 1},
            "dim": 3,
            "brackets": [[1, 2, [0, 0, 1]]]
        }"#;
        let doc = load_string(text).unwrap();
        let ring = ring_from_doc(&doc).unwrap();
        assert!(ring.basis_bracket(0, 2).iter().all(|c| ring.field().is_zero(c)));
        assert_eq!(ring.basis_bracket(0, 1), vec![
            ring.field().zero(),
            ring.field().zero(),
            ring.field().one()
        ]);
    }

    #[test]
    fn rational_coefficients_parse_both_forms() {
        let text = r#"{
            "format_version": 1,
            "field": {"characteristic": 0, "degree": 1},
            "dim": 2,
            "brackets": [[1, 2, ["-3/6", "2"]]]
        }"#;
        let ring = ring_from_doc(&load_string(text).unwrap()).unwrap();
        let f = ring.field();
        assert_eq!(ring.basis_bracket(0, 1), vec![
            f.div(&f.from_int(-1), &f.from_int(2)).unwrap(),
            f.from_int(2)
        ]);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        let cases = [
            // bad index order
            r#"{"format_version":1,"field":{"characteristic":5,"degree":1},"dim":2,"brackets":[[2,1,[0,0]]]}"#,
            // duplicate pair
            r#"{"format_version":1,"field":{"characteristic":5,"degree":1},"dim":2,"brackets":[[1,2,[0,0]],[1,2,[0,1]]]}"#,
            // wrong coefficient count
            r#"{"format_version":1,"field":{"characteristic":5,"degree":1},"dim":2,"brackets":[[1,2,[0]]]}"#,
            // future version
            r#"{"format_version":9,"field":{"characteristic":5,"degree":1},"dim":1,"brackets":[]}"#,
            // composite characteristic
            r#"{"format_version":1,"field":{"characteristic":6,"degree":1},"dim":1,"brackets":[]}"#,
            // reducible modulus (t^2 over F_5)
            r#"{"format_version":1,"field":{"characteristic":5,"degree":2,"modulus":[0,0,1]},"dim":1,"brackets":[]}"#,
        ];
        for text in cases {
            let outcome = load_string(text).and_then(|d| ring_from_doc(&d).map(|_| ()));
            assert!(outcome.is_err(), "accepted malformed document: {text}");
        }
    }

    #[test]
    fn extension_coefficients_round_trip_with_explicit_modulus() {
        let f25 = Field::extension(5, 2).unwrap();
        let ring = lie_lab::constructions::make_sl2(&f25);
        let doc = doc_from_ring(&ring, BTreeMap::new());
        assert_eq!(doc.field.modulus.as_deref(), Some(&[2, 0, 1][..]));
        let rebuilt = ring_from_doc(&doc).unwrap();
        assert_eq!(rebuilt.field(), ring.field());
    }
}
