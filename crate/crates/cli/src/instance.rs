//! On-disk document formats: a complex file and an instance file, both JSON
//! with named fields. Vectors are arrays in vertex order. Parsing is strict
//! (unknown fields rejected); building validates through the core library.

use emperor_core::rulesets::RulesetSpec;
use emperor_core::{EmperorError, EmperorInstance, Limits, SimplicialComplex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("validation error: {0}")]
    Validation(#[from] EmperorError),
}

/// A simplicial complex as named vertices plus maximal faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub maximal_faces: Vec<Vec<String>>,
}

impl ComplexDocument {
    pub fn to_complex(&self) -> Result<SimplicialComplex, EmperorError> {
        Ok(SimplicialComplex::from_maximal_faces(
            &self.vertices,
            &self.maximal_faces,
        )?)
    }

    pub fn from_complex(complex: &SimplicialComplex) -> ComplexDocument {
        ComplexDocument {
            vertices: complex.vertex_names().to_vec(),
            maximal_faces: complex
                .maximal_faces()
                .iter()
                .map(|f| {
                    f.vertices()
                        .map(|v| complex.vertex_names()[v].clone())
                        .collect()
                })
                .collect(),
        }
    }
}

/// One component game, tagged by ruleset kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ComponentSpec {
    NimHeap {
        size: u32,
    },
    MultiNim {
        heaps: Vec<u32>,
    },
    Subtraction {
        subtract: Vec<u32>,
        start: u32,
    },
    Explicit {
        positions: u32,
        edges: Vec<(u32, u32)>,
        start: u32,
    },
}

impl ComponentSpec {
    pub fn to_ruleset(&self) -> RulesetSpec {
        match self {
            ComponentSpec::NimHeap { size } => RulesetSpec::NimHeap { size: *size },
            ComponentSpec::MultiNim { heaps } => RulesetSpec::MultiNim {
                heaps: heaps.clone(),
            },
            ComponentSpec::Subtraction { subtract, start } => RulesetSpec::Subtraction {
                subtract: subtract.clone(),
                start: *start,
            },
            ComponentSpec::Explicit {
                positions,
                edges,
                start,
            } => RulesetSpec::Explicit {
                positions: *positions,
                edges: edges.clone(),
                start: *start,
            },
        }
    }

    pub fn from_ruleset(spec: &RulesetSpec) -> ComponentSpec {
        match spec {
            RulesetSpec::NimHeap { size } => ComponentSpec::NimHeap { size: *size },
            RulesetSpec::MultiNim { heaps } => ComponentSpec::MultiNim {
                heaps: heaps.clone(),
            },
            RulesetSpec::Subtraction { subtract, start } => ComponentSpec::Subtraction {
                subtract: subtract.clone(),
                start: *start,
            },
            RulesetSpec::Explicit {
                positions,
                edges,
                start,
            } => ComponentSpec::Explicit {
                positions: *positions,
                edges: edges.clone(),
                start: *start,
            },
        }
    }
}

/// A complex and one component per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub complex: ComplexDocument,
    pub components: Vec<ComponentSpec>,
}

impl InstanceDocument {
    pub fn build(&self, limits: &Limits) -> Result<EmperorInstance, EmperorError> {
        let complex = self.complex.to_complex()?;
        let components = self
            .components
            .iter()
            .map(|c| c.to_ruleset().build(limits))
            .collect::<Result<Vec<_>, _>>()?;
        EmperorInstance::new(complex, components)
    }
}

pub fn parse_instance(text: &str) -> Result<InstanceDocument, InstanceError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_complex(text: &str) -> Result<ComplexDocument, InstanceError> {
    Ok(serde_json::from_str(text)?)
}

pub fn render_instance(doc: &InstanceDocument) -> String {
    serde_json::to_string_pretty(doc).expect("instance documents serialize")
}

/// Document for an in-memory complex and ruleset tuple; used to round-trip
/// sweep instances through the on-disk format.
pub fn document_for(complex: &SimplicialComplex, specs: &[RulesetSpec]) -> InstanceDocument {
    InstanceDocument {
        complex: ComplexDocument::from_complex(complex),
        components: specs.iter().map(ComponentSpec::from_ruleset).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_VERTEX: &str = r#"{
        "complex": {"vertices": ["v1", "v2"], "maximal_faces": [["v1"], ["v2"]]},
        "components": [
            {"kind": "nim_heap", "size": 1},
            {"kind": "multi_nim", "heaps": [2, 2]}
        ]
    }"#;

    #[test]
    fn well_formed_instances_parse_and_build() {
        let doc = parse_instance(TWO_VERTEX).unwrap();
        assert_eq!(doc.components.len(), 2);
        let inst = doc.build(&Limits::default()).unwrap();
        assert_eq!(inst.start(), vec![1, 8]);
    }

    #[test]
    fn component_count_mismatch_is_rejected() {
        let text = r#"{
            "complex": {"vertices": ["v1", "v2"], "maximal_faces": [["v1", "v2"]]},
            "components": [{"kind": "nim_heap", "size": 1}]
        }"#;
        let doc = parse_instance(text).unwrap();
        assert!(matches!(
            doc.build(&Limits::default()).unwrap_err(),
            EmperorError::ComponentCountMismatch { .. }
        ));
    }

    #[test]
    fn unknown_vertices_in_faces_are_rejected() {
        let text = r#"{
            "complex": {"vertices": ["v1"], "maximal_faces": [["v9"]]},
            "components": [{"kind": "nim_heap", "size": 1}]
        }"#;
        let doc = parse_instance(text).unwrap();
        let err = doc.build(&Limits::default()).unwrap_err();
        assert!(err.to_string().contains("unknown vertex v9"), "{err}");
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(
            parse_instance("{ nope").unwrap_err(),
            InstanceError::Parse(_)
        ));
    }

    #[test]
    fn rendering_round_trips() {
        let doc = parse_instance(TWO_VERTEX).unwrap();
        let text = render_instance(&doc);
        assert_eq!(parse_instance(&text).unwrap(), doc);
    }
}
