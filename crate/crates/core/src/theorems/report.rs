use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Lemma2,
    Sakurai4,
    ThmA,
    ThmB,
    AlmostSimple,
    ProofIngredients,
    OracleTables,
    CdPredictions,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::Lemma2,
        CheckId::Sakurai4,
        CheckId::ThmA,
        CheckId::ThmB,
        CheckId::AlmostSimple,
        CheckId::ProofIngredients,
        CheckId::OracleTables,
        CheckId::CdPredictions,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Lemma2 => "lemma2",
            CheckId::Sakurai4 => "sakurai4",
            CheckId::ThmA => "thmA",
            CheckId::ThmB => "thmB",
            CheckId::AlmostSimple => "almost-simple",
            CheckId::ProofIngredients => "proof-ingredients",
            CheckId::OracleTables => "oracle-tables",
            CheckId::CdPredictions => "cd-predictions",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<Vec<CheckId>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part == "all" {
                return Ok(Self::ALL.to_vec());
            }
            let id: CheckId = part.parse()?;
            if !out.contains(&id) {
                out.push(id);
            }
        }
        Ok(out)
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    /// `Pass(ok)` when the condition holds, else `Fail(bad)`.
    pub fn check(cond: bool, ok: impl Into<String>, bad: impl Into<String>) -> Self {
        if cond {
            Outcome::Pass(ok.into())
        } else {
            Outcome::Fail(bad.into())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryOutcome {
    pub subject: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: CheckId,
    pub outcomes: Vec<EntryOutcome>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn new(id: CheckId) -> Self {
        Self {
            id,
            outcomes: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, subject: impl Into<String>, outcome: Outcome) {
        self.outcomes.push(EntryOutcome {
            subject: subject.into(),
            outcome,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        !self.outcomes.iter().any(|o| o.outcome.is_fail())
    }

    pub fn failures(&self) -> impl Iterator<Item = &EntryOutcome> {
        self.outcomes.iter().filter(|o| o.outcome.is_fail())
    }

    pub fn count(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for o in &self.outcomes {
            match o.outcome {
                Outcome::Pass(_) => c.0 += 1,
                Outcome::Fail(_) => c.1 += 1,
                Outcome::Skipped(_) => c.2 += 1,
            }
        }
        c
    }

    /// One summary line, without timing.
    pub fn summary(&self) -> String {
        let (p, f, s) = self.count();
        format!(
            "{}: {} ({p} pass, {f} fail, {s} skipped)",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

impl fmt::Display for CheckReport {
    /// Summary line, then one line per outcome and note. The alternate form
    /// (`{:#}`) appends the elapsed time.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary())?;
        if f.alternate() {
            write!(f, " [{:.2?}]", self.elapsed)?;
        }
        writeln!(f)?;
        for o in &self.outcomes {
            let (tag, detail) = match &o.outcome {
                Outcome::Pass(d) => ("pass", d),
                Outcome::Fail(d) => ("FAIL", d),
                Outcome::Skipped(d) => ("skip", d),
            };
            writeln!(f, "  {tag} {}: {detail}", o.subject)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
