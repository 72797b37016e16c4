use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{LinearSet, ParikhVector};
use crate::error::{Error, Result};

/// `Y ∪ ⋃_{i ∈ I} Z_i` with `Y` finite and each `Z_i` linear.
///
/// Linear parts are keyed by their 1-based index `i`; after offset
/// normalization `preds` holds the chosen `x_i ⪯ offset(Z_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearRep {
    dim: usize,
    pub finite: BTreeSet<ParikhVector>,
    pub linear: BTreeMap<usize, LinearSet>,
    pub preds: Option<BTreeMap<usize, ParikhVector>>,
}

impl SemilinearRep {
    pub fn empty(dim: usize) -> Self {
        SemilinearRep {
            dim,
            finite: BTreeSet::new(),
            linear: BTreeMap::new(),
            preds: None,
        }
    }

    /// Builds a rep with the linear parts indexed `1..=k` in the given order.
    pub fn new(
        dim: usize,
        finite: impl IntoIterator<Item = ParikhVector>,
        linear: impl IntoIterator<Item = LinearSet>,
    ) -> Self {
        SemilinearRep {
            dim,
            finite: finite.into_iter().collect(),
            linear: linear.into_iter().enumerate().map(|(i, z)| (i + 1, z)).collect(),
            preds: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, v: &ParikhVector) -> bool {
        self.finite.contains(v) || self.linear.values().any(|z| z.contains(v))
    }

    /// Largest index in use (`N_I`), 0 when there are no linear parts.
    pub fn max_index(&self) -> usize {
        self.linear.keys().next_back().copied().unwrap_or(0)
    }

    pub fn pred(&self, i: usize) -> Option<&ParikhVector> {
        self.preds.as_ref().and_then(|p| p.get(&i))
    }

    /// Largest component over all offsets and finite vectors.
    pub fn max_offset_norm(&self) -> u64 {
        self.finite
            .iter()
            .chain(self.linear.values().map(LinearSet::offset))
            .map(ParikhVector::norm)
            .max()
            .unwrap_or(0)
    }

    pub fn to_json_value(&self) -> SemilinearJson {
        let mut z: Vec<LinearSetJson> = self
            .linear
            .iter()
            .map(|(&i, set)| LinearSetJson {
                offset: set.offset().to_vec(),
                generators: set.generators().iter().map(ParikhVector::to_vec).collect(),
                index: self.preds.as_ref().map(|_| i),
                pred: self.pred(i).map(ParikhVector::to_vec),
            })
            .collect();
        z.sort_by(|a, b| (&a.offset, &a.generators, a.index).cmp(&(&b.offset, &b.generators, b.index)));
        SemilinearJson {
            dim: self.dim,
            y: self.finite.iter().map(ParikhVector::to_vec).collect(),
            z,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SemilinearJson = serde_json::from_str(text)?;
        raw.into_rep()
    }
}

/// Wire format: `{"dim":m,"Y":[[..]],"Z":[{"offset":[..],"generators":[[..]]}]}`,
/// with `Z` sorted by offset then generators. Normalized reps also carry
/// `index` and `pred` on every linear part.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemilinearJson {
    pub dim: usize,
    #[serde(rename = "Y")]
    pub y: Vec<Vec<u64>>,
    #[serde(rename = "Z")]
    pub z: Vec<LinearSetJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearSetJson {
    pub offset: Vec<u64>,
    pub generators: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pred: Option<Vec<u64>>,
}

impl SemilinearJson {
    pub fn into_rep(self) -> Result<SemilinearRep> {
        let dim = self.dim;
        let check = |v: Vec<u64>| -> Result<ParikhVector> {
            if v.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "vector of length {} in a rep of dimension {dim}",
                    v.len()
                )));
            }
            Ok(ParikhVector::from(v))
        };
        let mut rep = SemilinearRep::empty(dim);
        for y in self.y {
            rep.finite.insert(check(y)?);
        }
        let indexed = self.z.iter().any(|z| z.index.is_some());
        let mut preds = BTreeMap::new();
        for (pos, z) in self.z.into_iter().enumerate() {
            let i = match (indexed, z.index) {
                (false, _) => pos + 1,
                (true, Some(i)) if i >= 1 => i,
                _ => return Err(Error::InvalidInput("linear part without a valid index".into())),
            };
            let gens = z.generators.into_iter().map(check).collect::<Result<Vec<_>>>()?;
            let set = LinearSet::new(check(z.offset)?, gens);
            if rep.linear.insert(i, set).is_some() {
                return Err(Error::InvalidInput(format!("duplicate index {i}")));
            }
            if let Some(p) = z.pred {
                preds.insert(i, check(p)?);
            }
        }
        if indexed {
            rep.preds = Some(preds);
        }
        Ok(rep)
    }
}
