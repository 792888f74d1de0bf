//! Verdicts of exhaustive checks and the reports that collect them.

use crate::elemset::ElemSet;
use crate::poset::Poset;

/// A replayable counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Element indices, in the order the checked statement quantifies them.
    Elements(Vec<usize>),
    /// Subset arguments (operator axioms over subsets).
    Subsets(Vec<ElemSet>),
}

impl Witness {
    pub fn elements(&self) -> Option<&[usize]> {
        match self {
            Witness::Elements(v) => Some(v),
            Witness::Subsets(_) => None,
        }
    }

    pub fn render(&self, poset: &Poset) -> String {
        match self {
            Witness::Elements(v) => poset.fmt_tuple(v),
            Witness::Subsets(v) => v
                .iter()
                .map(|s| poset.fmt_set(*s))
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// The check does not apply (e.g. no bottom element).
    Skipped(&'static str),
}

impl Verdict {
    pub fn fails(tuple: impl Into<Vec<usize>>) -> Self {
        Verdict::Fails(Witness::Elements(tuple.into()))
    }

    /// `Holds` when `witness` is `None`.
    pub fn from_witness<T: Into<Vec<usize>>>(witness: Option<T>) -> Self {
        witness.map_or(Verdict::Holds, Verdict::fails)
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    pub fn render(&self, poset: &Poset) -> String {
        match self {
            Verdict::Holds => "holds".to_string(),
            Verdict::Fails(w) => format!("fails (witness {})", w.render(poset)),
            Verdict::Skipped(why) => format!("skipped ({why})"),
        }
    }
}

/// Ordered list of named verdicts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    entries: Vec<(&'static str, Verdict)>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &'static str, verdict: Verdict) {
        self.entries.push((name, verdict));
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    /// True when no entry fails; skipped entries count as passing.
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|(_, v)| !v.is_failure())
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &Witness)> {
        self.entries
            .iter()
            .filter_map(|(n, v)| v.witness().map(|w| (*n, w)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Verdict)> {
        self.entries.iter().map(|(n, v)| (*n, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One `name: verdict` line per entry.
    pub fn render(&self, poset: &Poset) -> String {
        self.entries
            .iter()
            .map(|(n, v)| format!("{n}: {}\n", v.render(poset)))
            .collect()
    }
}
