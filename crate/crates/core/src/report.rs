use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Itemized outcome of a verification suite.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub items: Vec<CheckItem>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), ..Default::default() }
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { label: label.into(), passed, detail: detail.into() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: CheckReport) {
        let prefix = other.name;
        for it in other.items {
            self.items.push(CheckItem { label: format!("{prefix}: {}", it.label), ..it });
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn count(&self) -> (usize, usize) {
        let ok = self.items.iter().filter(|i| i.passed).count();
        (ok, self.items.len())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ok, total) = self.count();
        writeln!(f, "{}: {ok}/{total} passed", self.name)?;
        for it in &self.items {
            let mark = if it.passed { "PASS" } else { "FAIL" };
            if it.detail.is_empty() {
                writeln!(f, "  [{mark}] {}", it.label)?;
            } else {
                writeln!(f, "  [{mark}] {} ({})", it.label, it.detail)?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
