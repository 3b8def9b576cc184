//! Pass/fail outcomes with counterexample witnesses.

use std::collections::BTreeMap;

use serde::Serialize;

/// A concrete counterexample: named element indices plus a short description.
///
/// Indices refer to the canonical ordering of whatever set the check ran
/// over (translation group elements, dilation list, endomorphism list).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: BTreeMap<&'static str, usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(detail: impl Into<String>) -> Self {
        Self {
            indices: BTreeMap::new(),
            detail: detail.into(),
        }
    }

    pub fn with(mut self, name: &'static str, index: usize) -> Self {
        self.indices.insert(name, index);
        self
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.indices.get(name).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined before the verdict.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, cases: usize) -> Self {
        Self {
            name: name.into(),
            passed: true,
            cases,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, cases: usize, witness: Witness) -> Self {
        Self {
            name: name.into(),
            passed: false,
            cases,
            witness: Some(witness),
        }
    }
}
