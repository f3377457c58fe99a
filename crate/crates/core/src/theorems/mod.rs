//! Verification suites for the character-value theorems, run over a
//! catalog of groups.
//!
//! The statements are universal over finite groups; these checks only
//! certify them for the groups in a [`Catalog`].

pub mod catalog;
mod checks;
pub mod oracles;
pub mod report;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::chartable::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::Error;
use crate::permgroup::{DerivedSeries, PermGroup};

pub use catalog::{Catalog, CatalogEntry, Tag};
pub use checks::*;
pub use report::{CheckId, CheckReport, EntryOutcome, Outcome};

/// Everything computed once per catalog entry.
#[derive(Debug)]
pub struct Analysis {
    pub entry: CatalogEntry,
    pub group: PermGroup,
    pub table: CharacterTable,
    pub cv: BTreeSet<Cyclotomic>,
    pub derived: DerivedSeries,
    pub budget: usize,
}

impl Analysis {
    pub fn compute(entry: &CatalogEntry, budget: usize) -> Result<Self, Error> {
        let group = entry.spec.build()?;
        let table = CharacterTable::compute(&group, budget)?;
        let derived = group.derived_series(budget)?;
        Ok(Self {
            entry: entry.clone(),
            cv: table.cv_set(),
            group,
            table,
            derived,
            budget,
        })
    }

    pub fn name(&self) -> &str {
        &self.entry.text
    }

    pub fn order(&self) -> usize {
        self.table.group_order()
    }

    pub fn cv_len(&self) -> usize {
        self.cv.len()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived.is_solvable()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.num_classes() == self.order()
    }
}

#[derive(Debug)]
pub enum EntryState {
    Computed(Arc<Analysis>),
    Skipped(String),
    Failed(Error),
}

/// Per-entry analyses of a catalog, computed in parallel and kept in
/// catalog order.
#[derive(Debug)]
pub struct Survey {
    pub catalog: Catalog,
    pub states: Vec<(CatalogEntry, EntryState)>,
    pub elapsed: std::time::Duration,
}

impl Survey {
    pub fn compute(catalog: &Catalog) -> Self {
        let start = Instant::now();
        let states = catalog
            .entries
            .par_iter()
            .map(|entry| {
                let state = if entry.has(Tag::SkipTable) {
                    EntryState::Skipped("tagged skip-table".into())
                } else {
                    match Analysis::compute(entry, catalog.budget_for(entry)) {
                        Ok(a) => EntryState::Computed(Arc::new(a)),
                        Err(e) => EntryState::Failed(e),
                    }
                };
                (entry.clone(), state)
            })
            .collect();
        Self {
            catalog: catalog.clone(),
            states,
            elapsed: start.elapsed(),
        }
    }

    pub fn computed(&self) -> impl Iterator<Item = &Analysis> {
        self.states.iter().filter_map(|(_, s)| match s {
            EntryState::Computed(a) => Some(a.as_ref()),
            _ => None,
        })
    }

    pub fn find(&self, text: &str) -> Option<&Analysis> {
        self.computed().find(|a| a.entry.text == text)
    }

    pub fn errors(&self) -> impl Iterator<Item = (&CatalogEntry, &Error)> {
        self.states.iter().filter_map(|(e, s)| match s {
            EntryState::Failed(err) => Some((e, err)),
            _ => None,
        })
    }

    pub fn budget_exceeded(&self) -> bool {
        self.errors()
            .any(|(_, e)| matches!(e, Error::BudgetExceeded { .. }))
    }

    /// Runs the selected checks in the given order.
    pub fn run(&self, ids: &[CheckId]) -> Vec<CheckReport> {
        ids.iter()
            .map(|&id| {
                let start = Instant::now();
                let mut report = match id {
                    CheckId::Lemma2 => check_lemma2(self),
                    CheckId::Sakurai4 => check_sakurai_small(self),
                    CheckId::ThmA => check_theorem_a(self),
                    CheckId::ThmB => check_theorem_b(self),
                    CheckId::AlmostSimple => check_almost_simple(self),
                    CheckId::ProofIngredients => check_proof_ingredients(self),
                    CheckId::OracleTables => check_oracle_tables(self.catalog.budget),
                    CheckId::CdPredictions => check_cd_predictions(self),
                };
                report.elapsed = start.elapsed();
                report
            })
            .collect()
    }
}

/// Computes the survey and runs the checks.
pub fn verify(catalog: &Catalog, ids: &[CheckId]) -> (Survey, Vec<CheckReport>) {
    let survey = Survey::compute(catalog);
    let reports = survey.run(ids);
    (survey, reports)
}
