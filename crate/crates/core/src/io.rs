//! JSON input documents. Rationals travel as strings such as `"3/2"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::action::{FiniteAction, DEFAULT_GROUP_CAP};
use crate::catalog::{CatalogEntry, Route};
use crate::characters::{CharacterSystem, SymbolBasis, WeightValue};
use crate::error::{Error, Result};
use crate::exterior::default_labels;
use crate::hodge::MetricFrame;
use crate::lie::{LieAlgebra, StructureConstants};
use crate::linalg::Matrix;
use crate::scalar::{parse_rational, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<MetricDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characters: Option<CharactersDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<String>,
}

/// `[e_i, e_j] ∋ c e_k`, 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// Exactly one of `coframe` (rows = orthonormal covectors) or `gram`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coframe: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub generators: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharactersDoc {
    #[serde(default)]
    pub symbols: Vec<String>,
    /// Each relation maps symbols (and `"const"`) to coefficients.
    #[serde(default)]
    pub relations: Vec<BTreeMap<String, String>>,
    /// One row per lattice generator, one value per covector.
    pub generators: Vec<Vec<WeightDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDoc {
    #[serde(default)]
    pub re: BTreeMap<String, String>,
    #[serde(default = "zero_string")]
    pub im2pi: String,
}

fn zero_string() -> String {
    "0".into()
}

/// A parsed document, ready for computation.
#[derive(Clone, Debug)]
pub enum Model {
    Algebra {
        lie: LieAlgebra,
        frame: MetricFrame,
        action: Option<FiniteAction>,
    },
    Characters(CharacterSystem),
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub labels: Vec<String>,
    pub model: Model,
}

impl Loaded {
    pub fn route(&self) -> &'static str {
        match self.model {
            Model::Algebra { .. } => "ce_hodge",
            Model::Characters(_) => "characters",
        }
    }
}

fn parse_matrix(rows: &[Vec<String>], n: usize, what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("{what} must be a {n}x{n} matrix")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect())
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    Matrix::from_rows(parsed)
}

fn format_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn symbol_vector(basis: &SymbolBasis, map: &BTreeMap<String, String>) -> Result<Vec<Rational>> {
    let mut v = vec![<Rational as Scalar>::zero(); basis.width()];
    for (name, value) in map {
        v[basis.symbol_index(name)?] = parse_rational(value)?;
    }
    Ok(v)
}

fn symbol_map(basis: &SymbolBasis, v: &[Rational]) -> BTreeMap<String, String> {
    basis
        .symbols()
        .iter()
        .map(String::as_str)
        .chain(["const"])
        .zip(v)
        .filter(|(_, x)| !Scalar::is_zero(*x))
        .map(|(s, x)| (s.to_string(), x.to_string()))
        .collect()
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Validates and builds the model. Structural problems are parse errors;
    /// Jacobi failures, singular frames and bad groups are validation errors.
    pub fn load(&self) -> Result<Loaded> {
        let n = self.dim;
        let labels = match &self.labels {
            Some(l) if l.len() != n => {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: l.len(),
                })
            }
            Some(l) => l.clone(),
            None => default_labels(n),
        };
        if let Some(ch) = &self.characters {
            if !self.brackets.is_empty() || self.metric.is_some() || self.action.is_some() {
                return Err(Error::Parse(
                    "a characters document cannot also carry brackets, metric or action".into(),
                ));
            }
            let basis = SymbolBasis::new(ch.symbols.clone(), Vec::new())?;
            let relations = ch
                .relations
                .iter()
                .map(|r| symbol_vector(&basis, r))
                .collect::<Result<Vec<_>>>()?;
            let basis = SymbolBasis::new(ch.symbols.clone(), relations)?;
            let table = ch
                .generators
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|w| {
                            Ok(WeightValue {
                                re: symbol_vector(&basis, &w.re)?,
                                im2pi: parse_rational(&w.im2pi)?,
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let system = CharacterSystem::new(basis, labels.clone(), table)?;
            return Ok(Loaded {
                name: self.name.clone(),
                labels,
                model: Model::Characters(system),
            });
        }
        let mut sc = StructureConstants::with_labels(labels.clone())?;
        let mut seen = std::collections::BTreeSet::new();
        for b in &self.brackets {
            sc.set(b.i, b.j, b.k, parse_rational(&b.c)?)?;
            if !seen.insert((b.i.min(b.j), b.i.max(b.j), b.k)) {
                return Err(Error::InvalidBracket(format!(
                    "bracket ({}, {}, {}) given twice",
                    b.i, b.j, b.k
                )));
            }
        }
        let lie = LieAlgebra::new(sc)?;
        let frame = match &self.metric {
            None => MetricFrame::identity(n),
            Some(MetricDoc {
                coframe: Some(c),
                gram: None,
            }) => MetricFrame::new(parse_matrix(c, n, "metric.coframe")?)?,
            Some(MetricDoc {
                coframe: None,
                gram: Some(g),
            }) => MetricFrame::from_gram(&parse_matrix(g, n, "metric.gram")?)?,
            Some(_) => {
                return Err(Error::Parse(
                    "metric needs exactly one of coframe or gram".into(),
                ))
            }
        };
        let action = match &self.action {
            None => None,
            Some(a) => {
                let gens = a
                    .generators
                    .iter()
                    .map(|g| parse_matrix(g, n, "action generator"))
                    .collect::<Result<Vec<_>>>()?;
                Some(FiniteAction::closure(
                    n,
                    gens,
                    a.cap.unwrap_or(DEFAULT_GROUP_CAP),
                )?)
            }
        };
        Ok(Loaded {
            name: self.name.clone(),
            labels,
            model: Model::Algebra { lie, frame, action },
        })
    }

    pub fn from_algebra(
        name: &str,
        lie: &LieAlgebra,
        frame: &MetricFrame,
        action: Option<&FiniteAction>,
    ) -> Self {
        let identity = *frame == MetricFrame::identity(lie.dim());
        InputDocument {
            name: name.into(),
            dim: lie.dim(),
            labels: Some(lie.labels().to_vec()),
            brackets: lie
                .structure_constants()
                .nonzero()
                .into_iter()
                .map(|(i, j, k, c)| BracketDoc {
                    i,
                    j,
                    k,
                    c: c.to_string(),
                })
                .collect(),
            metric: (!identity).then(|| MetricDoc {
                coframe: Some(format_matrix(frame.coframe())),
                gram: None,
            }),
            action: action.map(|a| ActionDoc {
                generators: a.generators().iter().map(format_matrix).collect(),
                cap: None,
            }),
            characters: None,
            annotations: Vec::new(),
        }
    }

    pub fn from_characters(name: &str, system: &CharacterSystem) -> Self {
        let basis = system.basis();
        InputDocument {
            name: name.into(),
            dim: system.covectors(),
            labels: Some(system.labels().to_vec()),
            brackets: Vec::new(),
            metric: None,
            action: None,
            characters: Some(CharactersDoc {
                symbols: basis.symbols().to_vec(),
                relations: basis
                    .relations()
                    .iter()
                    .map(|r| symbol_map(basis, r))
                    .collect(),
                generators: system
                    .table()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|w| WeightDoc {
                                re: symbol_map(basis, &w.re),
                                im2pi: w.im2pi.to_string(),
                            })
                            .collect()
                    })
                    .collect(),
            }),
            annotations: Vec::new(),
        }
    }

    pub fn from_entry(entry: &CatalogEntry) -> Self {
        let mut doc = match &entry.route {
            Route::CeHodge { lie, frame } => Self::from_algebra(&entry.name, lie, frame, None),
            Route::Characters(s) => Self::from_characters(&entry.name, s),
        };
        doc.annotations = entry.annotations.clone();
        doc
    }
}
