//! The JSON presentation document.
//!
//! ```json
//! {
//!   "p": 2, "ngens": 3, "dgens": 2, "weights": [1, 1, 2],
//!   "powers": { "1": [[3, 1]], "2": [[3, 1]] },
//!   "conjugates": { "1,2": [[3, 1]] }
//! }
//! ```
//!
//! Indices are 1-based. Missing relations are trivial. Two optional keys
//! extend the format: `"definitions"` maps a non-minimal generator to `[i]`
//! (`x_k = x_i^p`) or `[j, i]` (`x_k = [x_j, x_i]`), and `"names"` lists
//! generator names for printing.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Definition, PcPresentation, PresentationBuilder};
use crate::error::{PcError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub p: u32,
    pub ngens: usize,
    pub dgens: usize,
    pub weights: Vec<u32>,
    #[serde(default)]
    pub powers: BTreeMap<String, Vec<[i64; 2]>>,
    #[serde(default)]
    pub conjugates: BTreeMap<String, Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub definitions: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

fn parse_index(key: &str, ngens: usize) -> Result<usize> {
    let i: usize = key
        .trim()
        .parse()
        .map_err(|_| PcError::Malformed(format!("bad generator index {key:?}")))?;
    if i == 0 || i > ngens {
        return Err(PcError::IndexOutOfRange(i));
    }
    Ok(i - 1)
}

fn parse_terms(terms: &[[i64; 2]], ngens: usize) -> Result<Vec<(usize, i64)>> {
    terms
        .iter()
        .map(|&[g, e]| {
            if g < 1 || g as usize > ngens {
                return Err(PcError::IndexOutOfRange(g.max(0) as usize));
            }
            Ok((g as usize - 1, e))
        })
        .collect()
}

impl PresentationDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| PcError::Malformed(e.to_string()))
    }

    pub fn to_presentation(&self) -> Result<PcPresentation> {
        let n = self.ngens;
        let mut b = PresentationBuilder::new(self.p, n, self.dgens, self.weights.clone());
        if let Some(names) = &self.names {
            b = b.names(names.clone());
        }
        for (key, terms) in &self.powers {
            b = b.power(parse_index(key, n)?, &parse_terms(terms, n)?);
        }
        for (key, terms) in &self.conjugates {
            let (i, j) = key
                .split_once(',')
                .ok_or_else(|| PcError::Malformed(format!("bad conjugate key {key:?}")))?;
            let (i, j) = (parse_index(i, n)?, parse_index(j, n)?);
            b = b.conjugate(i, j, &parse_terms(terms, n)?);
        }
        for (key, def) in self.definitions.iter().flatten() {
            let k = parse_index(key, n)?;
            let def = match def.as_slice() {
                [i] => Definition::Power(parse_index(&i.to_string(), n)?),
                [j, i] => Definition::Commutator(
                    parse_index(&j.to_string(), n)?,
                    parse_index(&i.to_string(), n)?,
                ),
                _ => {
                    return Err(PcError::Definition {
                        generator: k + 1,
                        reason: "expected [i] or [j, i]".into(),
                    })
                }
            };
            b = b.definition(k, def);
        }
        b.build()
    }

    /// The document describing `pres`, listing only nontrivial relations.
    pub fn from_presentation(pres: &PcPresentation) -> Self {
        let n = pres.ngens();
        let terms = |w: &super::NormalWord| -> Vec<[i64; 2]> {
            w.support().map(|(g, e)| [g as i64 + 1, e as i64]).collect()
        };
        let mut powers = BTreeMap::new();
        let mut conjugates = BTreeMap::new();
        for i in 0..n {
            if !pres.power_rhs(i).is_identity() {
                powers.insert((i + 1).to_string(), terms(pres.power_rhs(i)));
            }
            for j in i + 1..n {
                if !pres.conj_tail(i, j).is_identity() {
                    conjugates.insert(format!("{},{}", i + 1, j + 1), terms(pres.conj_tail(i, j)));
                }
            }
        }
        let mut definitions = BTreeMap::new();
        for k in 0..n {
            match pres.definition(k) {
                Some(Definition::Power(i)) => {
                    definitions.insert((k + 1).to_string(), vec![i + 1]);
                }
                Some(Definition::Commutator(j, i)) => {
                    definitions.insert((k + 1).to_string(), vec![j + 1, i + 1]);
                }
                None => {}
            }
        }
        let default_names: Vec<String> = (1..=n).map(|i| format!("g{i}")).collect();
        PresentationDoc {
            p: pres.prime() as u32,
            ngens: n,
            dgens: pres.min_gens(),
            weights: pres.weights().to_vec(),
            powers,
            conjugates,
            definitions: (!definitions.is_empty()).then_some(definitions),
            names: (pres.names() != default_names.as_slice()).then(|| pres.names().to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Parses and validates a presentation document.
pub fn load_presentation(text: &str) -> Result<PcPresentation> {
    PresentationDoc::parse(text)?.to_presentation()
}

/// Reads a presentation document from disk.
pub fn load_presentation_file(path: &Path) -> std::result::Result<PcPresentation, LoadError> {
    let text = std::fs::read_to_string(path)?;
    Ok(load_presentation(&text)?)
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Presentation(#[from] PcError),
}
