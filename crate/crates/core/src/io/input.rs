//! JSON input documents.
//!
//! A (*)-polynomial with `n ≥ 2`:
//!
//! ```json
//! {
//!   "n": 2, "d": 6,
//!   "singularities": [{ "model": "brieskorn-pham", "exponents": [2, 3], "count": 6 }],
//!   "global": { "pn_xinf": [], "pn1_cover": { "1": [[2, 1]], "5": [[1, 1]] } }
//! }
//! ```
//!
//! A curve (`n = 1`) is given by the multiplicities of the linear factors of `f_d`:
//! `{ "multiplicities": [2, 2] }`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::CurveSpec;
use crate::error::{Error, Result};
use crate::global::GlobalPositionData;
use crate::infinity::StarPolynomialSpec;
use crate::local::{local_spectral_pairs, LocalModel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub singularities: Vec<SingularityEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub global: Option<GlobalInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityEntry {
    #[serde(flatten)]
    pub model: LocalModel,
    #[serde(default = "one")]
    pub count: i64,
}

fn one() -> i64 {
    1
}

/// `pn_xinf`: `[p, h^{p,n-p}]` rows; `pn1_cover`: sector → `[p, h^{p,n+1-p}]` rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalInput {
    #[serde(default)]
    pub pn_xinf: Vec<[i64; 2]>,
    #[serde(default)]
    pub pn1_cover: BTreeMap<String, Vec<[i64; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Spec {
    Star(StarPolynomialSpec),
    Curve(CurveSpec),
}

impl Spec {
    pub fn n(&self) -> i64 {
        match self {
            Spec::Star(s) => s.n,
            Spec::Curve(_) => 1,
        }
    }

    pub fn d(&self) -> i64 {
        match self {
            Spec::Star(s) => s.d,
            Spec::Curve(c) => c.degree(),
        }
    }
}

pub fn parse_document(text: &str) -> Result<InputDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_spec(text: &str) -> Result<Spec> {
    spec_from_document(&parse_document(text)?)
}

pub fn load_spec(path: &Path) -> Result<Spec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_spec(&text)
}

fn rows(path: &str, rows: &[[i64; 2]]) -> Result<BTreeMap<i64, i64>> {
    let mut out = BTreeMap::new();
    for (i, [p, m]) in rows.iter().enumerate() {
        if out.insert(*p, *m).is_some() {
            return Err(Error::validation(
                format!("{path}[{i}]"),
                format!("duplicate Hodge index {p}"),
            ));
        }
    }
    Ok(out)
}

fn global_data(g: &GlobalInput) -> Result<GlobalPositionData> {
    let pn_xinf = rows("global.pn_xinf", &g.pn_xinf)?;
    let mut pn1_cover = BTreeMap::new();
    for (key, r) in &g.pn1_cover {
        let path = format!("global.pn1_cover.{key}");
        let s: i64 = key
            .trim()
            .parse()
            .map_err(|_| Error::validation(&path, "sector key must be an integer"))?;
        if pn1_cover.insert(s, rows(&path, r)?).is_some() {
            return Err(Error::validation(path, format!("duplicate sector {s}")));
        }
    }
    Ok(GlobalPositionData { pn_xinf, pn1_cover })
}

pub fn spec_from_document(doc: &InputDocument) -> Result<Spec> {
    if let Some(m) = &doc.multiplicities {
        if let Some(n) = doc.n.filter(|n| *n != 1) {
            return Err(Error::validation(
                "n",
                format!("multiplicities describe n = 1, got n = {n}"),
            ));
        }
        if !doc.singularities.is_empty() || doc.global.is_some() {
            return Err(Error::validation(
                "multiplicities",
                "a curve is given by multiplicities alone",
            ));
        }
        let c = CurveSpec::new(m.clone())?;
        if let Some(d) = doc.d.filter(|d| *d != c.degree()) {
            return Err(Error::validation(
                "d",
                format!("d = {d} but the multiplicities sum to {}", c.degree()),
            ));
        }
        return Ok(Spec::Curve(c));
    }

    let n = doc.n.ok_or_else(|| Error::validation("n", "missing"))?;
    let d = doc.d.ok_or_else(|| Error::validation("d", "missing"))?;
    if n == 1 {
        return Err(Error::validation(
            "n",
            "for n = 1 give `multiplicities` instead",
        ));
    }
    let mut locals = Vec::new();
    for (j, entry) in doc.singularities.iter().enumerate() {
        let path = format!("singularities[{j}]");
        if entry.count < 1 {
            return Err(Error::validation(
                format!("{path}.count"),
                "count must be >= 1",
            ));
        }
        if entry.model.variables() != n {
            return Err(Error::validation(
                path,
                format!(
                    "germ has {} variables, expected n = {n}",
                    entry.model.variables()
                ),
            ));
        }
        local_spectral_pairs(&entry.model).map_err(|e| Error::validation(&path, e.to_string()))?;
        locals.extend(std::iter::repeat_n(
            entry.model.clone(),
            entry.count as usize,
        ));
    }
    let global = match &doc.global {
        Some(g) => global_data(g)?,
        None => GlobalPositionData::zero(),
    };
    let spec = StarPolynomialSpec {
        n,
        d,
        locals,
        global,
    };
    spec.validate()?;
    Ok(Spec::Star(spec))
}
