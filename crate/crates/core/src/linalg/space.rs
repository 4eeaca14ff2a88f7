use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite-dimensional space with an ordered basis of distinct labels.
#[derive(Clone, Debug, Eq)]
pub struct LabeledSpace {
    labels: Arc<[String]>,
}

impl PartialEq for LabeledSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl LabeledSpace {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("duplicate basis label {:?}", w[0])));
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    /// The ground field as a one-dimensional space.
    pub fn ground() -> Self {
        Self {
            labels: vec!["1".to_string()].into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Tensor product with row-major basis order, left factor outermost.
    pub fn tensor(&self, other: &LabeledSpace) -> LabeledSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in self.labels.iter() {
            for b in other.labels.iter() {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        // Labels of a tensor product are unique whenever the factors' labels are.
        LabeledSpace {
            labels: labels.into(),
        }
    }

    /// Iterated tensor power; `power(0)` is the ground field.
    pub fn power(&self, n: usize) -> LabeledSpace {
        (0..n).fold(LabeledSpace::ground(), |acc, i| {
            if i == 0 {
                self.clone()
            } else {
                acc.tensor(self)
            }
        })
    }

    /// Space of linear maps `self → codomain`, entries vectorized row-major
    /// (codomain index outermost).
    pub fn hom_space(&self, codomain: &LabeledSpace) -> LabeledSpace {
        let mut labels = Vec::with_capacity(self.dim() * codomain.dim());
        for r in codomain.labels.iter() {
            for c in self.labels.iter() {
                labels.push(format!("{r}←{c}"));
            }
        }
        LabeledSpace {
            labels: labels.into(),
        }
    }

    pub(crate) fn from_unique(labels: Vec<String>) -> Self {
        Self {
            labels: labels.into(),
        }
    }
}

impl fmt::Display for LabeledSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.labels.join(", "))
    }
}
