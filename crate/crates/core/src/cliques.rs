//! Greedy grouping of Pauli terms into mutually commuting cliques.
//!
//! Terms are visited in a fixed order and each joins the first existing
//! clique whose every member it commutes with, otherwise it opens a new one.
//! The clique count is an upper bound on the minimum clique cover.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{PauliKey, PauliSum};

/// Pairwise relation required inside a clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Operators commute.
    General,
    /// On every qubit the factors agree or one of them is the identity.
    Qubitwise,
}

impl Relation {
    pub const ALL: [Relation; 2] = [Relation::General, Relation::Qubitwise];

    pub fn holds(&self, a: &PauliKey, b: &PauliKey) -> bool {
        match self {
            Relation::General => a.commutes(b),
            Relation::Qubitwise => a.qubitwise_commutes(b),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Relation::General => "general",
            Relation::Qubitwise => "qubitwise",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Relation::General),
            "qubitwise" | "qubit-wise" => Ok(Relation::Qubitwise),
            _ => Err(Error::Format(format!("unknown relation '{s}'"))),
        }
    }
}

/// Order in which the greedy pass visits terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ordering {
    /// Descending coefficient magnitude, ties by `(z_mask, x_mask)`.
    Magnitude,
    /// The operator's own term order.
    Input,
    /// Ascending printed string, `I < X < Y < Z`.
    Lex,
}

impl Ordering {
    pub const ALL: [Ordering; 3] = [Ordering::Magnitude, Ordering::Input, Ordering::Lex];

    pub fn arrange(&self, m: &PauliSum) -> Vec<PauliKey> {
        match self {
            Ordering::Magnitude => m.sorted_terms().into_iter().map(|(k, _)| k).collect(),
            Ordering::Input => m.keys().copied().collect(),
            Ordering::Lex => {
                let mut keys: Vec<(String, PauliKey)> =
                    m.keys().map(|k| (m.label(k), *k)).collect();
                keys.sort();
                keys.into_iter().map(|(_, k)| k).collect()
            }
        }
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Ordering::Magnitude => "magnitude",
            Ordering::Input => "input",
            Ordering::Lex => "lex",
        })
    }
}

impl FromStr for Ordering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "magnitude" => Ok(Ordering::Magnitude),
            "input" => Ok(Ordering::Input),
            "lex" => Ok(Ordering::Lex),
            _ => Err(Error::Format(format!("unknown ordering '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    pub relation: Relation,
    pub ordering: Ordering,
    pub cliques: Vec<Vec<PauliKey>>,
    pub source_term_count: usize,
}

impl CliquePartition {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn to_json_value(&self, m: &PauliSum) -> serde_json::Value {
        let cliques: Vec<Vec<serde_json::Value>> = self
            .cliques
            .iter()
            .map(|clique| {
                clique
                    .iter()
                    .map(|k| {
                        let c = m.coefficient(k);
                        serde_json::json!({ "string": m.label(k), "re": c.re, "im": c.im })
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "relation": self.relation,
            "policy": self.ordering,
            "qubits": m.n(),
            "terms": self.source_term_count,
            "clique_count": self.cliques.len(),
            "cliques": cliques,
        })
    }
}

/// First-fit greedy partition of the terms of `m`.
pub fn partition(m: &PauliSum, relation: Relation, ordering: Ordering) -> Result<CliquePartition> {
    if m.is_empty() {
        return Err(Error::Empty("cannot partition an operator with no terms".into()));
    }
    let mut cliques: Vec<Vec<PauliKey>> = Vec::new();
    for key in ordering.arrange(m) {
        match cliques
            .iter_mut()
            .find(|clique| clique.iter().all(|member| relation.holds(member, &key)))
        {
            Some(clique) => clique.push(key),
            None => cliques.push(vec![key]),
        }
    }
    Ok(CliquePartition {
        relation,
        ordering,
        cliques,
        source_term_count: m.len(),
    })
}

/// What [`validate`] found wrong, if anything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A term appears in more than one place.
    Duplicate { term: String },
    /// A term of the operator is in no clique.
    Missing { term: String },
    /// A clique member is not a term of the operator.
    Unknown { term: String },
    /// Two members of one clique fail the relation.
    Relation { clique: usize, a: String, b: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Duplicate { term } => write!(f, "term {term} appears more than once"),
            Violation::Missing { term } => write!(f, "term {term} is not covered"),
            Violation::Unknown { term } => write!(f, "term {term} is not in the operator"),
            Violation::Relation { clique, a, b } => {
                write!(f, "clique {clique}: {a} and {b} violate the relation")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Re-checks disjointness, coverage and the pairwise relation.
pub fn validate(p: &CliquePartition, m: &PauliSum) -> ValidationReport {
    let fail = |v| ValidationReport { violation: Some(v) };
    let mut seen = std::collections::HashSet::new();
    for clique in &p.cliques {
        for k in clique {
            if !seen.insert(*k) {
                return fail(Violation::Duplicate { term: m.label(k) });
            }
            if !m.contains(k) {
                return fail(Violation::Unknown { term: m.label(k) });
            }
        }
    }
    if let Some(k) = m.keys().find(|k| !seen.contains(*k)) {
        return fail(Violation::Missing { term: m.label(k) });
    }
    for (ci, clique) in p.cliques.iter().enumerate() {
        for (i, a) in clique.iter().enumerate() {
            for b in &clique[i + 1..] {
                if !p.relation.holds(a, b) {
                    return fail(Violation::Relation {
                        clique: ci,
                        a: m.label(a),
                        b: m.label(b),
                    });
                }
            }
        }
    }
    ValidationReport { violation: None }
}
