//! Axiom verdicts with first-counterexample reporting.

use std::fmt;

use serde::Serialize;

use crate::linalg::{format_vector, LabeledSpace, LinMap, Vector};

/// A failing basis tuple together with both sides of the identity evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub tuple: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Verdicts for one structure. Passes iff no axiom fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub structure: String,
    pub axioms: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn new(structure: impl Into<String>) -> Self {
        Self {
            structure: structure.into(),
            axioms: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomOutcome> {
        self.axioms.iter().filter(|a| !a.passed)
    }

    pub fn outcome(&self, id: &str) -> Option<&AxiomOutcome> {
        self.axioms.iter().find(|a| a.id == id)
    }

    /// `Some(passed)` for a recorded axiom.
    pub fn verdict(&self, id: &str) -> Option<bool> {
        self.outcome(id).map(|a| a.passed)
    }

    pub fn record(&mut self, id: impl Into<String>, counterexample: Option<Counterexample>) {
        self.axioms.push(AxiomOutcome {
            id: id.into(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.record(id, None);
    }

    pub fn fail(&mut self, id: impl Into<String>, tuple: Vec<String>, lhs: String, rhs: String) {
        self.record(id, Some(Counterexample { tuple, lhs, rhs }));
    }

    /// Appends another report's axioms, prefixed by its structure name.
    pub fn absorb(&mut self, other: AxiomReport) {
        for mut a in other.axioms {
            a.id = format!("{}.{}", other.structure, a.id);
            self.axioms.push(a);
        }
    }

    /// Scans every basis tuple of `factors` in lexicographic order and records the first tuple
    /// where `sides` returns unequal vectors of `codomain`.
    pub fn check_tuples<F>(
        &mut self,
        id: &str,
        factors: &[&LabeledSpace],
        codomain: &LabeledSpace,
        mut sides: F,
    ) where
        F: FnMut(&[usize]) -> (Vector, Vector),
    {
        let total: usize = factors.iter().map(|s| s.dim()).product();
        let mut tuple = vec![0usize; factors.len()];
        for flat in 0..total {
            decode(flat, factors, &mut tuple);
            let (lhs, rhs) = sides(&tuple);
            if lhs != rhs {
                let labels = tuple
                    .iter()
                    .zip(factors)
                    .map(|(&i, s)| s.label(i).to_string())
                    .collect();
                self.fail(
                    id,
                    labels,
                    format_vector(codomain, &lhs),
                    format_vector(codomain, &rhs),
                );
                return;
            }
        }
        self.pass(id);
    }

    /// Records whether two maps agree; the domain is read as the tensor product of `factors`
    /// for counterexample labels.
    pub fn check_maps(&mut self, id: &str, lhs: &LinMap, rhs: &LinMap, factors: &[&LabeledSpace]) {
        debug_assert_eq!(
            lhs.domain().dim(),
            factors.iter().map(|s| s.dim()).product::<usize>()
        );
        match lhs.first_difference(rhs) {
            None => self.pass(id),
            Some(col) => {
                let mut tuple = vec![0usize; factors.len()];
                decode(col, factors, &mut tuple);
                let labels = tuple
                    .iter()
                    .zip(factors)
                    .map(|(&i, s)| s.label(i).to_string())
                    .collect();
                self.fail(
                    id,
                    labels,
                    format_vector(lhs.codomain(), &lhs.column(col)),
                    format_vector(rhs.codomain(), &rhs.column(col)),
                );
            }
        }
    }
}

fn decode(mut flat: usize, factors: &[&LabeledSpace], tuple: &mut [usize]) {
    for (slot, space) in tuple.iter_mut().zip(factors).rev() {
        let d = space.dim();
        *slot = flat % d;
        flat /= d;
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.axioms {
            let mark = if a.passed { "PASS" } else { "FAIL" };
            write!(f, "[{mark}] {}/{}", self.structure, a.id)?;
            if let Some(c) = &a.counterexample {
                write!(
                    f,
                    " at ({}): lhs = {}, rhs = {}",
                    c.tuple.join(", "),
                    c.lhs,
                    c.rhs
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
