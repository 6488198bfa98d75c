use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not decidable within the current truncation.
    Unchecked,
}

/// Outcome of one axiom family, with the first failing basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub results: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport { subject: subject.into(), results: Vec::new() }
    }

    /// Records `axiom` as passing when `witness` is `None`.
    pub fn record(&mut self, axiom: &str, witness: Option<Vec<usize>>) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.results.push(AxiomResult { axiom: axiom.to_string(), status, witness, detail: None });
    }

    pub fn record_detail(&mut self, axiom: &str, witness: Option<Vec<usize>>, detail: impl Into<String>) {
        self.record(axiom, witness);
        self.results.last_mut().unwrap().detail = Some(detail.into());
    }

    pub fn unchecked(&mut self, axiom: &str, detail: impl Into<String>) {
        self.results.push(AxiomResult {
            axiom: axiom.to_string(),
            status: Status::Unchecked,
            witness: None,
            detail: Some(detail.into()),
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        for mut r in other.results {
            if !other.subject.is_empty() && other.subject != self.subject {
                r.axiom = format!("{}/{}", other.subject, r.axiom);
            }
            self.results.push(r);
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn status_of(&self, axiom: &str) -> Option<Status> {
        self.results.iter().find(|r| r.axiom == axiom).map(|r| r.status)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "pass" } else { "FAIL" })?;
        for r in &self.results {
            let s = match r.status {
                Status::Pass => "ok",
                Status::Fail => "FAIL",
                Status::Unchecked => "unchecked",
            };
            write!(f, "  {:<40} {s}", r.axiom)?;
            if let Some(w) = &r.witness {
                write!(f, " at {w:?}")?;
            }
            if let Some(d) = &r.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Returns the first index tuple in `0..dims[0] x ... ` for which `bad` holds.
pub fn find_witness(dims: &[usize], mut bad: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if dims.iter().any(|&d| d == 0) {
        return None;
    }
    let mut idx = vec![0; dims.len()];
    loop {
        if bad(&idx) {
            return Some(idx);
        }
        let mut k = dims.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}
