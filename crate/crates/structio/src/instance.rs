//! JSON instance files.
//!
//! ```json
//! { "n": 3, "edges": [[0, 1], [1, 2]], "costs": [5, 1, "inf"] }
//! ```
//!
//! Each edge `[from, to]` is a digraph edge `from -> to`, i.e. a nonzero
//! dynamics entry `A[to][from]`. Costs are nonnegative numbers or the string
//! `"inf"` for a state that must not be actuated.

use std::fmt;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use structio_core::{Cost, CostVector, StateDigraph};

/// A [`Cost`] that serializes as a JSON number or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FileCost(pub Cost);

/// Largest integer an `f64` holds exactly.
const EXACT_INT: f64 = 9_007_199_254_740_992.0;

impl Serialize for FileCost {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Cost::Infinite => s.serialize_str("inf"),
            Cost::Finite(v) if v.fract() == 0.0 && v < EXACT_INT => s.serialize_u64(v as u64),
            Cost::Finite(v) => s.serialize_f64(v),
        }
    }
}

impl<'de> Deserialize<'de> for FileCost {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct CostVisitor;

        impl Visitor<'_> for CostVisitor {
            type Value = FileCost;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a nonnegative number or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<FileCost, E> {
                Ok(FileCost(Cost::Finite(v as f64)))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<FileCost, E> {
                self.visit_f64(v as f64)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<FileCost, E> {
                Cost::new(v).map(FileCost).map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<FileCost, E> {
                match v {
                    "inf" => Ok(FileCost(Cost::Infinite)),
                    other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
                }
            }
        }

        d.deserialize_any(CostVisitor)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    n: usize,
    edges: Vec<[usize; 2]>,
    costs: Vec<FileCost>,
}

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("cannot read {path}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> InstanceError {
    InstanceError::Field {
        field: field.into(),
        message: message.into(),
    }
}

/// A validated structural system with its actuation costs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: StateDigraph,
    pub costs: CostVector,
}

impl Instance {
    pub fn new(graph: StateDigraph, costs: CostVector) -> Result<Self, InstanceError> {
        if costs.len() != graph.n() {
            return Err(field_error(
                "costs",
                format!("expected {} entries, found {}", graph.n(), costs.len()),
            ));
        }
        Ok(Self { graph, costs })
    }

    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        let raw: RawInstance = serde_json::from_str(text).map_err(|e| InstanceError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if raw.n == 0 {
            return Err(field_error("n", "must be at least 1"));
        }
        let mut graph = StateDigraph::new(raw.n).expect("n checked");
        for (i, &[from, to]) in raw.edges.iter().enumerate() {
            graph
                .add_edge(from, to)
                .map_err(|e| field_error(format!("edges[{i}]"), format!("[{from}, {to}]: {e}")))?;
        }
        let costs = CostVector::new(raw.costs.iter().map(|c| c.0).collect());
        Self::new(graph, costs)
    }

    pub fn load(path: &Path) -> Result<Self, InstanceError> {
        let text = std::fs::read_to_string(path).map_err(|source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// JSON with one edge per line, edges in lexicographic order, and a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let compact = |v: &serde_json::Value| serde_json::to_string(v).expect("json value");
        let edges: Vec<String> = self
            .graph
            .edges()
            .map(|(a, b)| format!("    [{a}, {b}]"))
            .collect();
        let costs: Vec<String> = self
            .costs
            .iter()
            .map(|c| compact(&serde_json::to_value(FileCost(c)).expect("cost")))
            .collect();
        let edges = if edges.is_empty() {
            "[]".to_string()
        } else {
            format!("[\n{}\n  ]", edges.join(",\n"))
        };
        format!(
            "{{\n  \"n\": {},\n  \"edges\": {},\n  \"costs\": [{}]\n}}\n",
            self.graph.n(),
            edges,
            costs.join(", ")
        )
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}
