//! Pass/fail records for verification suites.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked identity: `lhs_hash`/`rhs_hash` fingerprint the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub lhs_hash: String,
    pub rhs_hash: String,
}

impl ReportEntry {
    /// Compares the debug renderings of both sides.
    pub fn compare<T: fmt::Debug + PartialEq>(
        check: &str,
        instance: String,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        Self {
            check: check.to_string(),
            instance,
            status: if lhs == rhs {
                Status::Pass
            } else {
                Status::Fail
            },
            lhs_hash: fingerprint(lhs),
            rhs_hash: fingerprint(rhs),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Hex SipHash of the `Debug` rendering.
pub fn fingerprint<T: fmt::Debug>(value: &T) -> String {
    let mut h = DefaultHasher::new();
    format!("{value:?}").hash(&mut h);
    format!("{:016x}", h.finish())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn push(&mut self, entry: ReportEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(ReportEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of entries per check name, in first-seen order.
    pub fn tally(&self) -> Vec<(String, usize, usize)> {
        let mut out: Vec<(String, usize, usize)> = Vec::new();
        for e in &self.entries {
            match out.iter_mut().find(|(c, _, _)| *c == e.check) {
                Some((_, pass, fail)) => {
                    if e.passed() {
                        *pass += 1
                    } else {
                        *fail += 1
                    }
                }
                None => out.push((
                    e.check.clone(),
                    usize::from(e.passed()),
                    usize::from(!e.passed()),
                )),
            }
        }
        out
    }
}

impl FromIterator<ReportEntry> for Report {
    fn from_iter<I: IntoIterator<Item = ReportEntry>>(iter: I) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries() {
        let mut r = Report::default();
        r.push(ReportEntry::compare("eq", "a".into(), &1, &1));
        r.push(ReportEntry::compare("eq", "b".into(), &1, &2));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.tally(), vec![("eq".to_string(), 1, 1)]);
        assert_eq!(r.entries[0].lhs_hash, r.entries[0].rhs_hash);
        let json = serde_json::to_string(&r.entries[0]).unwrap();
        assert!(json.contains("\"status\":\"pass\""));
    }
}
