//! JSON interchange: poset files, quasisymmetric-function files, and the
//! textual keys used inside them.
//!
//! Subsets are written as ascending comma-joined integers (`""` for the empty
//! set), cd-words as strings over `{c, d}`, and every number as an exact
//! rational string `p` or `p/q`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::{BigInt, Integer, One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::combinat::{CdWord, Subset, MAX_AMBIENT};
use crate::error::{Error, Result};
use crate::peak::CdPolynomial;
use crate::poset::{Family, GradedPoset};
use crate::qsym::{Basis, QSym};
use crate::toricg::PolynomialX;
use crate::Rational;

/// Largest degree accepted from a [`QSymFile`].
pub const MAX_FILE_DEGREE: u32 = 21;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    #[serde(default)]
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl PosetFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_poset(&self) -> Result<GradedPoset> {
        GradedPoset::from_labeled_covers(self.elements.clone(), &self.covers)
    }

    pub fn from_poset(name: &str, p: &GradedPoset) -> Self {
        let labels = p.labels();
        Self {
            name: name.to_string(),
            elements: labels.to_vec(),
            covers: p
                .covers()
                .into_iter()
                .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QSymFile {
    pub degree: u32,
    pub basis: String,
    pub coeffs: BTreeMap<String, String>,
}

impl QSymFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_qsym(&self) -> Result<QSym> {
        let basis: Basis = self.basis.parse()?;
        if self.degree > MAX_FILE_DEGREE {
            return Err(Error::InvalidParameter(format!(
                "degree {} exceeds {MAX_FILE_DEGREE}",
                self.degree
            )));
        }
        if self.degree == 0 {
            let mut c = Rational::zero();
            for (k, v) in &self.coeffs {
                if !k.is_empty() {
                    return Err(Error::Parse(format!(
                        "degree 0 only has the key \"\", got {k:?}"
                    )));
                }
                c = parse_rational(v)?;
            }
            return Ok(QSym::scalar(c));
        }
        let n = self.degree - 1;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| Ok((parse_subset_key(k, n)?, parse_rational(v)?)))
            .collect::<Result<Vec<_>>>()?;
        QSym::from_basis(n, basis, coeffs)
    }

    /// Canonical file for a homogeneous element: nonzero coefficients only.
    pub fn from_qsym(f: &QSym, basis: Basis) -> Result<Self> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let degree = f.degrees().first().copied().unwrap_or(0);
        Ok(Self {
            degree,
            basis: basis.to_string(),
            coeffs: dense_to_keys(degree, &f.dense(degree, basis)),
        })
    }
}

fn dense_to_keys(degree: u32, dense: &[Rational]) -> BTreeMap<String, String> {
    let n = degree.saturating_sub(1);
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(bits, c)| {
            (
                subset_key(&Subset::from_bits_unchecked(n, bits as u64)),
                c.to_string(),
            )
        })
        .collect()
}

/// Coefficients of a homogeneous component as a key → rational-string map.
pub fn coefficient_map(f: &QSym, degree: u32, basis: Basis) -> BTreeMap<String, String> {
    dense_to_keys(degree, &f.dense(degree, basis))
}

pub fn subset_key(s: &Subset) -> String {
    s.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse `"1,3"` as a subset of `[n]`. Elements must be strictly increasing.
pub fn parse_subset_key(key: &str, ambient: u32) -> Result<Subset> {
    if key.is_empty() {
        return Subset::empty(ambient);
    }
    let mut elements = Vec::new();
    for part in key.split(',') {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad subset key {key:?}")));
        }
        let v: u32 = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad subset key {key:?}")))?;
        if elements.last().is_some_and(|&last| last >= v) {
            return Err(Error::Parse(format!(
                "subset key {key:?} is not strictly increasing"
            )));
        }
        elements.push(v);
    }
    Subset::new(ambient, elements)
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') || s == "-0" {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// Parse `p` or `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s).ok_or_else(bad)?)),
        Some((p, q)) => {
            let p = parse_integer(p).ok_or_else(bad)?;
            if q.starts_with('-') {
                return Err(bad());
            }
            let q = parse_integer(q).ok_or_else(bad)?;
            if q <= BigInt::one() || !p.gcd(&q).is_one() {
                return Err(Error::Parse(format!(
                    "rational {s:?} is not in lowest terms"
                )));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `name:k`, e.g. `boolean:4`.
pub fn parse_family(s: &str) -> Result<Family> {
    let (name, arg) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("family {s:?} must look like name:k")))?;
    if arg.is_empty() || !arg.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad family parameter in {s:?}")));
    }
    let k: u32 = arg
        .parse()
        .map_err(|_| Error::Parse(format!("bad family parameter in {s:?}")))?;
    if k > MAX_AMBIENT {
        return Err(Error::InvalidParameter(format!(
            "family parameter {k} too large"
        )));
    }
    match name {
        "chain" => Ok(Family::Chain(k)),
        "boolean" => Ok(Family::Boolean(k)),
        "polygon" => Ok(Family::Polygon(k)),
        "simplex" => Ok(Family::Simplex(k)),
        "cube" => Ok(Family::Cube(k)),
        _ => Err(Error::Parse(format!("unknown family {name:?}"))),
    }
}

/// Words as letter strings in canonical word order.
pub fn cd_polynomial_to_json(p: &CdPolynomial) -> Value {
    let mut m = Map::new();
    for (w, c) in p.terms() {
        m.insert(w.to_key(), Value::String(c.to_string()));
    }
    Value::Object(m)
}

pub fn cd_polynomial_from_json(v: &Value) -> Result<CdPolynomial> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("cd-polynomial must be a JSON object".into()))?;
    let mut out = CdPolynomial::zero();
    for (k, c) in obj {
        let w = CdWord::from_str(k)?;
        let c = c
            .as_str()
            .ok_or_else(|| Error::Parse(format!("coefficient of {k:?} must be a string")))?;
        out.add_term(w, parse_rational(c)?);
    }
    Ok(out)
}

pub fn parse_cd_polynomial(text: &str) -> Result<CdPolynomial> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    cd_polynomial_from_json(&v)
}

/// Coefficients from `x^0` up, as rational strings.
pub fn polynomial_to_json(p: &PolynomialX) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn rationals_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn rational_matrix_to_json(m: &[Vec<Rational>]) -> Value {
    Value::Array(m.iter().map(|row| rationals_to_json(row)).collect())
}
