//! Geometry files.
//!
//! ```json
//! {"elements": ["a", "b"], "closed_sets": [[], ["a"], ["a", "b"]]}
//! {"elements": ["a", "b", "x"], "implications": [{"lhs": ["a", "b"], "rhs": ["x"]}]}
//! ```
//!
//! Exactly one of `closed_sets` and `implications` must be present.

use super::{closure_from_implications, ClosedFamily, GroundSet, Implication};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryFile {
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_sets: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub implications: Option<Vec<ImplicationEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImplicationEntry {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl GeometryFile {
    pub fn from_family(family: &ClosedFamily) -> GeometryFile {
        GeometryFile {
            elements: family.ground().names().to_vec(),
            closed_sets: Some(family.named_sets()),
            implications: None,
        }
    }

    pub fn into_family(self) -> Result<ClosedFamily> {
        let ground = GroundSet::new(self.elements)?;
        match (self.closed_sets, self.implications) {
            (Some(sets), None) => ClosedFamily::from_names(ground, &sets),
            (None, Some(imps)) => {
                let imps = imps
                    .iter()
                    .map(|i| Implication::from_names(&ground, &i.lhs, &i.rhs))
                    .collect::<Result<Vec<_>>>()?;
                Ok(closure_from_implications(ground, &imps)?.into_family())
            }
            (Some(_), Some(_)) => Err(Error::Input("give either `closed_sets` or `implications`, not both".into())),
            (None, None) => Err(Error::Input("missing `closed_sets` or `implications`".into())),
        }
    }
}

pub fn parse_geometry(text: &str) -> Result<ClosedFamily> {
    serde_json::from_str::<GeometryFile>(text)?.into_family()
}

pub fn geometry_to_json(family: &ClosedFamily) -> String {
    serde_json::to_string_pretty(&GeometryFile::from_family(family)).expect("geometry serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::counterexample_geometries;

    #[test]
    fn round_trip() {
        let (_, g) = counterexample_geometries();
        assert_eq!(parse_geometry(&geometry_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn implications_form() {
        let text = r#"{"elements":["a0","a1","a2","x","y"],
            "implications":[{"lhs":["a0","a1","a2"],"rhs":["x","y"]}]}"#;
        assert_eq!(parse_geometry(text).unwrap(), counterexample_geometries().1);
    }

    #[test]
    fn exactly_one_form() {
        let both = r#"{"elements":["a"],"closed_sets":[["a"]],"implications":[]}"#;
        assert!(matches!(parse_geometry(both), Err(Error::Input(_))));
        let neither = r#"{"elements":["a"]}"#;
        assert!(matches!(parse_geometry(neither), Err(Error::Input(_))));
    }

    #[test]
    fn unknown_names_and_bad_json() {
        let text = r#"{"elements":["a"],"closed_sets":[["a"],["q"]]}"#;
        assert!(matches!(parse_geometry(text), Err(Error::UnknownElement(n)) if n == "q"));
        let err = parse_geometry("{\"elements\": [1]}").unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }
}
