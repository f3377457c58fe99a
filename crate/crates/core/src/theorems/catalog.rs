use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::GroupSpec;
use crate::permgroup::DEFAULT_BUDGET;

const DEFAULT_CATALOG: &str = include_str!("../../data/default_catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    SolvableExpected,
    AlmostSimple,
    Sakurai4,
    SkipTable,
}

impl FromStr for Tag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "solvable-expected" => Tag::SolvableExpected,
            "almost-simple" => Tag::AlmostSimple,
            "sakurai4" => Tag::Sakurai4,
            "skip-table" => Tag::SkipTable,
            other => return Err(Error::InvalidSpec(format!("unknown tag {other:?}"))),
        })
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::SolvableExpected => "solvable-expected",
            Tag::AlmostSimple => "almost-simple",
            Tag::Sakurai4 => "sakurai4",
            Tag::SkipTable => "skip-table",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    /// The spec as written in the catalog file.
    pub text: String,
    pub tags: BTreeSet<Tag>,
    pub budget: Option<usize>,
}

impl CatalogEntry {
    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub budget: usize,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::parse(DEFAULT_CATALOG).expect("bundled catalog parses")
    }
}

impl Catalog {
    /// Parses the line format `<spec> [tag…]`; `#` starts a comment and
    /// `budget=N` as a tag overrides the element budget for that entry.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Catalog {
                line: idx + 1,
                message,
            };
            let mut tokens = line.split_whitespace();
            let spec_text = tokens.next().expect("nonempty line");
            let spec: GroupSpec = spec_text.parse().map_err(|e: Error| err(e.to_string()))?;
            let mut tags = BTreeSet::new();
            let mut budget = None;
            for tok in tokens {
                if let Some(n) = tok.strip_prefix("budget=") {
                    budget = Some(n.parse().map_err(|_| err(format!("bad budget {n:?}")))?);
                } else {
                    tags.insert(tok.parse().map_err(|e: Error| err(e.to_string()))?);
                }
            }
            entries.push(CatalogEntry {
                spec,
                text: spec_text.to_string(),
                tags,
                budget,
            });
        }
        Ok(Self {
            entries,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn budget_for(&self, entry: &CatalogEntry) -> usize {
        entry.budget.unwrap_or(self.budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_parses() {
        let cat = Catalog::default();
        assert!(cat.len() >= 40);
        let q8 = cat
            .entries
            .iter()
            .find(|e| e.text.starts_with("perm:Q8"))
            .unwrap();
        assert!(q8.has(Tag::SolvableExpected));
        assert_eq!(q8.spec.expected_order(), 8);
    }

    #[test]
    fn tags_comments_and_errors() {
        let cat = Catalog::parse("# header\n\nC(3) sakurai4 budget=10 # trailing\nS(4)\n").unwrap();
        assert_eq!(cat.len(), 2);
        assert!(cat.entries[0].has(Tag::Sakurai4));
        assert_eq!(cat.budget_for(&cat.entries[0]), 10);
        assert_eq!(cat.budget_for(&cat.entries[1]), DEFAULT_BUDGET);
        assert!(matches!(
            Catalog::parse("C(3)\nC(3) shiny"),
            Err(Error::Catalog { line: 2, .. })
        ));
        assert!(matches!(
            Catalog::parse("Q(3)"),
            Err(Error::Catalog { line: 1, .. })
        ));
    }
}
