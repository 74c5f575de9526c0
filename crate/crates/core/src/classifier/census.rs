//! Classification of every element of the two-site Clifford group.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{classify, letter_images, ChainError, ChainImage, ClassTag, TiClass};
use crate::clifford::CliffordTableau;

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub tableau: CliffordTableau,
    pub class: TiClass,
    pub images: [ChainImage; 3],
}

#[derive(Serialize)]
struct EntryLine<'a> {
    tableau: &'a CliffordTableau,
    class: ClassTag,
    params: &'a BTreeMap<String, String>,
    images: BTreeMap<&'static str, &'a ChainImage>,
}

impl CensusEntry {
    pub fn to_json_line(&self) -> String {
        let images = [
            ("X", &self.images[0]),
            ("Y", &self.images[1]),
            ("Z", &self.images[2]),
        ]
        .into_iter()
        .collect();
        let line = EntryLine {
            tableau: &self.tableau,
            class: self.class.tag,
            params: &self.class.params,
            images,
        };
        serde_json::to_string(&line).expect("census line serializes")
    }
}

/// Census in enumeration order.
#[derive(Clone, Debug)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
}

/// Per-class totals, the artifact frozen in golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub total: usize,
    pub counts: BTreeMap<String, usize>,
}

impl Census {
    pub fn counts(&self) -> CensusCounts {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.class.tag.to_string()).or_insert(0) += 1;
        }
        CensusCounts {
            total: self.entries.len(),
            counts,
        }
    }

    pub fn members(&self, tag: ClassTag) -> impl Iterator<Item = &CensusEntry> {
        self.entries.iter().filter(move |e| e.class.tag == tag)
    }

    /// First `n` members of each class, in enumeration order.
    pub fn representatives(&self, n: usize) -> BTreeMap<ClassTag, Vec<&CensusEntry>> {
        let mut out: BTreeMap<ClassTag, Vec<&CensusEntry>> = BTreeMap::new();
        for e in &self.entries {
            let v = out.entry(e.class.tag).or_default();
            if v.len() < n {
                v.push(e);
            }
        }
        out
    }
}

/// Classifies all 11520 two-site tableaux (in parallel, output in enumeration order).
pub fn census_c2() -> Result<Census, ChainError> {
    let all = CliffordTableau::enumerate(2).expect("k = 2 is enumerable");
    let entries: Result<Vec<CensusEntry>, ChainError> = all
        .into_par_iter()
        .map(|t| {
            let class = classify(&t)?;
            let images = letter_images(&t)?;
            Ok(CensusEntry {
                tableau: t,
                class,
                images,
            })
        })
        .collect();
    Ok(Census { entries: entries? })
}
