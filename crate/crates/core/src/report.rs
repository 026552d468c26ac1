//! Per-axiom verdicts with counterexample witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::scalar::{format_scalar, seq};
use crate::linalg::{multi_index, Matrix, Scalar};

/// A basis tuple on which the two sides of an identity disagree, together
/// with the two image vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<usize>,
    #[serde(with = "seq")]
    pub lhs: Vec<Scalar>,
    #[serde(with = "seq")]
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub id: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Number of failing input basis tuples.
    #[serde(default)]
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Informational entries are printed but never affect the overall verdict.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records the identity `lhs = rhs` between two linear maps whose common
    /// domain is the tensor product of spaces of sizes `input_dims`.
    pub fn identity(&mut self, id: &str, lhs: &Matrix, rhs: &Matrix, input_dims: &[usize]) -> bool {
        let check = compare_maps(id, lhs, rhs, input_dims);
        let passed = check.passed;
        self.checks.push(check);
        passed
    }

    pub fn flag(&mut self, id: &str, passed: bool, note: Option<String>) -> bool {
        self.checks.push(AxiomCheck {
            id: id.to_string(),
            passed,
            witness: None,
            failures: usize::from(!passed),
            note,
            informational: false,
        });
        passed
    }

    /// Records a fact that is reported alongside the axioms but does not
    /// count towards [`AxiomReport::all_passed`].
    pub fn info(&mut self, id: &str, holds: bool, note: Option<String>) {
        self.checks.push(AxiomCheck {
            id: id.to_string(),
            passed: holds,
            witness: None,
            failures: 0,
            note,
            informational: true,
        });
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    /// Appends every check of `other`, prefixing its ids with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.id = format!("{prefix}/{}", c.id);
            }
            self.checks.push(c);
        }
    }

    pub fn get(&self, id: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Verdict for `id`; panics if the check was never recorded.
    pub fn passed(&self, id: &str) -> bool {
        self.get(id).unwrap_or_else(|| panic!("no check named {id} in report")).passed
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.informational)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed && !c.informational)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed && !c.informational)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// Column-by-column comparison of two maps with a witness on the first
/// differing input basis tuple.
pub fn compare_maps(id: &str, lhs: &Matrix, rhs: &Matrix, input_dims: &[usize]) -> AxiomCheck {
    assert_eq!(lhs.shape(), rhs.shape(), "{id}: sides have different shapes");
    assert_eq!(input_dims.iter().product::<usize>(), lhs.cols(), "{id}: input dims");
    let mut witness = None;
    let mut failures = 0;
    for j in 0..lhs.cols() {
        let differs = (0..lhs.rows()).any(|i| lhs.get(i, j) != rhs.get(i, j));
        if differs {
            failures += 1;
            if witness.is_none() {
                witness = Some(Witness {
                    inputs: multi_index(input_dims, j),
                    lhs: lhs.col(j),
                    rhs: rhs.col(j),
                });
            }
        }
    }
    AxiomCheck {
        id: id.to_string(),
        passed: failures == 0,
        witness,
        failures,
        note: None,
        informational: false,
    }
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match (self.informational, self.passed) {
            (true, true) => "YES",
            (true, false) => "NO",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        };
        write!(f, "{tag:<5} {}", self.id)?;
        if let Some(w) = &self.witness {
            let inputs: Vec<String> = w.inputs.iter().map(usize::to_string).collect();
            write!(f, "  witness ({})", inputs.join(","))?;
            write!(f, " lhs [{}] rhs [{}]", join(&w.lhs), join(&w.rhs))?;
        }
        if self.failures > 1 {
            write!(f, "  [{} failing tuples]", self.failures)?;
        }
        if let Some(n) = &self.note {
            write!(f, "  ({n})")?;
        }
        Ok(())
    }
}

fn join(v: &[Scalar]) -> String {
    v.iter().map(format_scalar).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_is_first_differing_column() {
        let a = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 1]]);
        let b = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        let c = compare_maps("x", &a, &b, &[2, 2]);
        assert!(!c.passed);
        assert_eq!(c.failures, 2);
        assert_eq!(c.witness.unwrap().inputs, vec![1, 0]);
    }

    #[test]
    fn json_roundtrip() {
        let mut r = AxiomReport::new();
        r.identity("eq", &Matrix::from_ints(&[&[1, 2]]), &Matrix::from_ints(&[&[1, 3]]), &[2]);
        r.flag("ok", true, Some("note".into()));
        let text = serde_json::to_string(&r).unwrap();
        let back: AxiomReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
