//! Pass/fail records shared by every verifier.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The mathematical statement being checked, in words.
    pub claim: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: Option<u64>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(seed: Option<u64>, d: Option<usize>, n: Option<usize>) -> Self {
        Self { seed, d, n, checks: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, claim: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), claim: claim.into(), passed, witness: None });
    }

    pub fn check_with(&mut self, name: impl Into<String>, claim: impl Into<String>, passed: bool, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), claim: claim.into(), passed, witness: Some(witness.into()) });
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    /// Appends `other`'s checks with `prefix/` prepended to each name.
    pub fn extend_prefixed(&mut self, prefix: &str, other: SuiteReport) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.name = format!("{prefix}/{}", c.name);
            c
        }));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status}  {}  ({})", c.name, c.claim)?;
            if let Some(w) = &c.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}/{} checks passed", self.passed_count(), self.checks.len())
    }
}
