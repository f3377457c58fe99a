//! JSON and CSV renderings of a character table.

use serde::{Deserialize, Serialize};

use super::CharacterTable;
use crate::cyclotomic::{Cyclotomic, CyclotomicRepr};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub rep_cycles: String,
    pub size: usize,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterInfo {
    pub degree: u64,
    pub values: Vec<CyclotomicRepr>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableExport {
    pub group: GroupInfo,
    pub classes: Vec<ClassInfo>,
    pub chars: Vec<CharacterInfo>,
}

impl TableExport {
    pub fn new(table: &CharacterTable, spec: &str) -> Self {
        let conj = table.conjugacy();
        Self {
            group: GroupInfo {
                spec: spec.to_string(),
                order: table.group_order(),
                exponent: conj.exponent(),
            },
            classes: (0..table.num_classes())
                .map(|k| ClassInfo {
                    rep_cycles: conj.representative(k).to_string(),
                    size: conj.size(k),
                    order: conj.element_order(k),
                })
                .collect(),
            chars: table
                .values()
                .iter()
                .zip(table.degrees())
                .map(|(row, &degree)| CharacterInfo {
                    degree,
                    values: row.iter().map(CyclotomicRepr::from).collect(),
                })
                .collect(),
        }
    }

    /// The exact value matrix.
    pub fn values(&self) -> Result<Vec<Vec<Cyclotomic>>> {
        self.chars
            .iter()
            .map(|c| c.values.iter().map(Cyclotomic::try_from).collect())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// CSV with a header row, class size and element order rows, then one row
/// per character with exact ζ-polynomial strings.
pub fn to_csv(table: &CharacterTable) -> String {
    let conj = table.conjugacy();
    let names = table.class_names();
    let mut out = String::new();
    out.push_str("char,degree");
    for n in &names {
        out.push(',');
        out.push_str(n);
    }
    out.push('\n');
    out.push_str("size,");
    for k in 0..table.num_classes() {
        out.push_str(&format!(",{}", conj.size(k)));
    }
    out.push('\n');
    out.push_str("order,");
    for k in 0..table.num_classes() {
        out.push_str(&format!(",{}", conj.element_order(k)));
    }
    out.push('\n');
    for (r, row) in table.values().iter().enumerate() {
        out.push_str(&format!("X.{},{}", r + 1, table.degrees()[r]));
        for v in row {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}
