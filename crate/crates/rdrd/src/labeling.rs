//! Labelings over {0,1,2,3}, the double Roman feasibility rules, and the
//! restrained variant.
//!
//! A labeling is feasible (DRD) when every 0-vertex sees a 3 or two distinct
//! 2s among its neighbors, and every 1-vertex sees a neighbor labeled at
//! least 2. The restrained variant (RDRD) additionally requires the
//! subgraph induced by 0-vertices to have no isolated vertex, i.e. every
//! 0-vertex also has a 0-neighbor.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("label {label} at vertex {vertex} outside {{0,1,2,3}}")]
    LabelOutOfRange { vertex: usize, label: u8 },
    #[error("labeling has {labels} labels but graph has {vertices} vertices")]
    LengthMismatch { labels: usize, vertices: usize },
    #[error("cannot parse labeling: {0}")]
    Parse(String),
}

/// Per-vertex labels in {0,1,2,3}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling {
    labels: Vec<u8>,
}

impl Labeling {
    pub fn new(labels: Vec<u8>) -> Result<Self, LabelingError> {
        for (vertex, &label) in labels.iter().enumerate() {
            if label > 3 {
                return Err(LabelingError::LabelOutOfRange { vertex, label });
            }
        }
        Ok(Labeling { labels })
    }

    /// All vertices labeled `value` (handy for building test labelings).
    pub fn constant(n: usize, value: u8) -> Self {
        Labeling::new(vec![value; n]).expect("constant label in range")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// The induced partition (V0, V1, V2, V3).
    pub fn partition(&self) -> [Vec<usize>; 4] {
        let mut parts: [Vec<usize>; 4] = Default::default();
        for (v, &l) in self.labels.iter().enumerate() {
            parts[l as usize].push(v);
        }
        parts
    }

    /// Parse either JSON `{"labels":[...]}` or whitespace-separated integers.
    pub fn parse(text: &str) -> Result<Self, LabelingError> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') || trimmed.starts_with('[') {
            #[derive(Deserialize)]
            #[serde(untagged)]
            enum Wire {
                Wrapped { labels: Vec<u8> },
                Bare(Vec<u8>),
            }
            let wire: Wire =
                serde_json::from_str(trimmed).map_err(|e| LabelingError::Parse(e.to_string()))?;
            let labels = match wire {
                Wire::Wrapped { labels } => labels,
                Wire::Bare(labels) => labels,
            };
            Labeling::new(labels)
        } else {
            let mut labels = Vec::new();
            for token in text.split_whitespace() {
                let value: u8 = token
                    .parse()
                    .map_err(|_| LabelingError::Parse(format!("invalid label {token:?}")))?;
                labels.push(value);
            }
            Labeling::new(labels)
        }
    }
}

/// Sum of labels.
pub fn weight(f: &Labeling) -> u32 {
    f.labels().iter().map(|&l| l as u32).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    Rdrd,
    Drd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    /// 0-vertex lacks a 3-neighbor and has fewer than two 2-neighbors.
    ZeroNeedsDefense,
    /// 1-vertex has no neighbor labeled at least 2.
    OneNeedsStrongNeighbor,
    /// 0-vertex has no 0-neighbor (restrained variant only).
    ZeroIsolatedInV0,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: usize,
    pub rule: Rule,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every rule at every vertex; all violations are reported, the check
/// never short-circuits.
pub fn validate(g: &Graph, f: &Labeling, variant: Variant) -> Result<ValidationReport, LabelingError> {
    if f.len() != g.order() {
        return Err(LabelingError::LengthMismatch {
            labels: f.len(),
            vertices: g.order(),
        });
    }
    let mut violations = Vec::new();
    for v in 0..g.order() {
        match f.get(v) {
            0 => {
                let mut twos = 0usize;
                let mut has_three = false;
                let mut has_zero = false;
                for &u in g.neighbors(v) {
                    match f.get(u) {
                        0 => has_zero = true,
                        2 => twos += 1,
                        3 => has_three = true,
                        _ => {}
                    }
                }
                if !has_three && twos < 2 {
                    violations.push(Violation {
                        vertex: v,
                        rule: Rule::ZeroNeedsDefense,
                        detail: format!(
                            "vertex {v} labeled 0 has no 3-neighbor and only {twos} neighbor(s) labeled 2"
                        ),
                    });
                }
                if variant == Variant::Rdrd && !has_zero {
                    violations.push(Violation {
                        vertex: v,
                        rule: Rule::ZeroIsolatedInV0,
                        detail: format!("vertex {v} labeled 0 has no neighbor labeled 0"),
                    });
                }
            }
            1 => {
                let supported = g.neighbors(v).iter().any(|&u| f.get(u) >= 2);
                if !supported {
                    violations.push(Violation {
                        vertex: v,
                        rule: Rule::OneNeedsStrongNeighbor,
                        detail: format!("vertex {v} labeled 1 has no neighbor labeled 2 or 3"),
                    });
                }
            }
            _ => {}
        }
    }
    Ok(ValidationReport { violations })
}

/// Convenience wrapper: true iff `f` is feasible for `variant` on `g`.
pub fn is_valid(g: &Graph, f: &Labeling, variant: Variant) -> bool {
    validate(g, f, variant).map(|r| r.valid()).unwrap_or(false)
}
