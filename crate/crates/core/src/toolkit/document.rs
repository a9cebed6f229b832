//! Canonical JSON documents for ordered complexes.
//!
//! ```json
//! {
//!   "format": "sumplex-ordered-complex/1",
//!   "name": "EDGE",
//!   "description": "",
//!   "composite": false,
//!   "mode": "flag",
//!   "vertices": ["a", "b"],
//!   "edges": [["a", "b"]],
//!   "order": [["a", "b"]]
//! }
//! ```
//!
//! Explicit complexes carry `"simplices"` (the maximal simplices) instead of
//! `"edges"`. Tokens may contain the separator `|` only when `composite` is
//! set. Serialization sorts every list, so equal complexes produce identical
//! bytes.

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, ComplexData, Mode, VertexId};
use crate::error::{Error, Result};
use crate::ordering::{validate_ordering, OrderRelation, OrderedComplex};

pub const FORMAT: &str = "sumplex-ordered-complex/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format: String,
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub composite: bool,
    pub mode: Mode,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplices: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
}

fn token_pair((u, v): &(VertexId, VertexId)) -> [String; 2] {
    [u.to_string(), v.to_string()]
}

impl ComplexDocument {
    /// Canonical document for `oc`.
    pub fn from_ordered(oc: &OrderedComplex, name: &str, description: &str) -> Self {
        let c = oc.complex();
        let (edges, simplices) = match c.maximal_simplices() {
            None => (Some(c.edges().iter().map(token_pair).collect()), None),
            Some(facets) => (
                None,
                Some(
                    facets
                        .iter()
                        .map(|s| s.vertices().iter().map(VertexId::to_string).collect())
                        .collect(),
                ),
            ),
        };
        Self {
            format: FORMAT.to_string(),
            name: name.to_string(),
            description: description.to_string(),
            composite: c.vertices().iter().any(VertexId::is_composite),
            mode: c.mode(),
            vertices: c.vertices().iter().map(VertexId::to_string).collect(),
            edges,
            simplices,
            order: oc.relation().pairs().map(token_pair).collect(),
        }
    }

    fn token(&self, t: &str) -> Result<VertexId> {
        if self.composite {
            VertexId::parse_composite(t)
        } else {
            VertexId::new(t)
        }
    }

    /// The complex and relation described, without checking the axioms.
    pub fn to_parts(&self) -> Result<(Complex, OrderRelation)> {
        let vertices = self
            .vertices
            .iter()
            .map(|t| self.token(t))
            .collect::<Result<Vec<_>>>()?;
        let data = match (self.mode, &self.edges, &self.simplices) {
            (Mode::Flag, Some(edges), None) => ComplexData::Edges(
                edges
                    .iter()
                    .map(|[u, v]| Ok((self.token(u)?, self.token(v)?)))
                    .collect::<Result<_>>()?,
            ),
            (Mode::Explicit, None, Some(simplices)) => ComplexData::Maximal(
                simplices
                    .iter()
                    .map(|s| s.iter().map(|t| self.token(t)).collect::<Result<_>>())
                    .collect::<Result<_>>()?,
            ),
            (Mode::Flag, _, _) => {
                return Err(Error::Syntax("flag documents list \"edges\" and no \"simplices\"".into()))
            }
            (Mode::Explicit, _, _) => {
                return Err(Error::Syntax(
                    "explicit documents list \"simplices\" and no \"edges\"".into(),
                ))
            }
        };
        let complex = Complex::build(vertices, data)?;
        let rel = self
            .order
            .iter()
            .map(|[u, v]| Ok((self.token(u)?, self.token(v)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .collect();
        Ok((complex, rel))
    }

    pub fn to_ordered(&self) -> Result<OrderedComplex> {
        let (complex, rel) = self.to_parts()?;
        validate_ordering(complex, &rel)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }
}

pub fn parse_document(text: &str) -> Result<ComplexDocument> {
    let doc: ComplexDocument =
        serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    if doc.format != FORMAT {
        return Err(Error::Syntax(format!(
            "unsupported format {:?}, expected {FORMAT:?}",
            doc.format
        )));
    }
    Ok(doc)
}

/// Parses and validates. Syntax problems and axiom violations are distinct
/// errors ([`Error::Syntax`] versus [`Error::ValidationFailed`]).
pub fn parse_complex(text: &str) -> Result<OrderedComplex> {
    parse_document(text)?.to_ordered()
}

pub fn serialize_complex(oc: &OrderedComplex) -> String {
    ComplexDocument::from_ordered(oc, "", "").to_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{Axiom, Witness};
    use crate::toolkit::fixtures::{edge, point};

    #[test]
    fn edge_fixture_document() {
        let text = ComplexDocument::from_ordered(&edge(), "EDGE", "").to_text();
        assert_eq!(
            text,
            r#"{
  "format": "sumplex-ordered-complex/1",
  "name": "EDGE",
  "description": "",
  "composite": false,
  "mode": "flag",
  "vertices": [
    "a",
    "b"
  ],
  "edges": [
    [
      "a",
      "b"
    ]
  ],
  "order": [
    [
      "a",
      "b"
    ]
  ]
}
"#
        );
        let oc = parse_complex(&text).unwrap();
        assert_eq!(oc.complex().vertex_count(), 2);
        assert_eq!(oc.complex().edge_count(), 1);
        assert_eq!(oc.pair_count(), 1);
    }

    #[test]
    fn point_round_trip() {
        let text = serialize_complex(&point());
        assert_eq!(parse_complex(&text).unwrap(), point());
        assert_eq!(serialize_complex(&parse_complex(&text).unwrap()), text);
    }

    #[test]
    fn separator_in_atomic_document() {
        let text = r#"{"format":"sumplex-ordered-complex/1","mode":"flag","vertices":["a|b"],"edges":[],"order":[]}"#;
        assert_eq!(parse_complex(text), Err(Error::ReservedCharacter("a|b".into())));
    }

    #[test]
    fn cyclic_triangle_document() {
        let text = r#"{"format":"sumplex-ordered-complex/1","mode":"flag",
            "vertices":["a","b","c"],
            "edges":[["a","b"],["b","c"],["a","c"]],
            "order":[["a","b"],["b","c"],["c","a"]]}"#;
        match parse_complex(text) {
            Err(Error::ValidationFailed(report)) => {
                let w = Witness::Triple(
                    VertexId::new("a").unwrap(),
                    VertexId::new("b").unwrap(),
                    VertexId::new("c").unwrap(),
                );
                assert!(report.contains(Axiom::P3, &w));
            }
            other => panic!("expected validation failure, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_complex("{"), Err(Error::Syntax(_))));
        let wrong_mode = r#"{"format":"sumplex-ordered-complex/1","mode":"explicit","vertices":["a"],"edges":[],"order":[]}"#;
        assert!(matches!(parse_complex(wrong_mode), Err(Error::Syntax(_))));
        let wrong_format = r#"{"format":"other","mode":"flag","vertices":[],"edges":[],"order":[]}"#;
        assert!(matches!(parse_complex(wrong_format), Err(Error::Syntax(_))));
        let unknown = r#"{"format":"sumplex-ordered-complex/1","mode":"flag","vertices":["a"],"edges":[["a","z"]],"order":[]}"#;
        assert_eq!(parse_complex(unknown), Err(Error::UnknownVertex("z".into())));
    }
}
