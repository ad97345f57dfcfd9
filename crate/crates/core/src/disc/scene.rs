use super::{disc_in_hull, Circle, Point};
use crate::closure::{ClosedFamily, ElementSet, GroundSet, MAX_GROUND};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedCircle {
    pub name: String,
    #[serde(flatten)]
    pub circle: Circle,
}

/// Named circles with a tolerance, optionally inside a triangle.
///
/// ```json
/// {"tolerance": 1e-9,
///  "circles": [{"name": "x", "c": [0.1, 0.2], "r": 0.05}],
///  "triangle": [[0, 0], [0, 1], [1, 0]]}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    pub circles: Vec<NamedCircle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[Point; 3]>,
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

impl Scene {
    pub fn new<S: Into<String>>(circles: impl IntoIterator<Item = (S, Circle)>, tolerance: f64) -> Result<Scene> {
        let scene = Scene {
            tolerance,
            circles: circles.into_iter().map(|(n, c)| NamedCircle { name: n.into(), circle: c }).collect(),
            triangle: None,
        };
        scene.validate()?;
        Ok(scene)
    }

    pub fn with_triangle(mut self, t: [Point; 3]) -> Scene {
        self.triangle = Some(t);
        self
    }

    pub fn from_json(text: &str) -> Result<Scene> {
        let s: Scene = serde_json::from_str(text)?;
        s.validate()?;
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::BadTolerance);
        }
        if self.circles.is_empty() {
            return Err(Error::Input("scene has no circles".into()));
        }
        let mut seen = HashSet::new();
        for c in &self.circles {
            if !seen.insert(c.name.as_str()) {
                return Err(Error::DuplicateName(c.name.clone()));
            }
            if !c.circle.is_valid() {
                return Err(Error::BadCircle(c.name.clone()));
            }
        }
        if let Some(t) = self.triangle {
            if !t.iter().all(|p| p.is_finite()) {
                return Err(Error::Input("triangle has non-finite coordinates".into()));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn ground(&self) -> Result<GroundSet> {
        GroundSet::new(self.circles.iter().map(|c| c.name.clone()))
    }

    pub fn get(&self, name: &str) -> Result<Circle> {
        self.circles
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.circle)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Circle closure on index sets: every circle whose disc lies in the
    /// hull of the discs of `y`. The closure of ∅ is ∅.
    pub fn ch_c_set(&self, y: ElementSet) -> Result<ElementSet> {
        if y.is_empty() {
            return Ok(ElementSet::EMPTY);
        }
        let discs: Vec<Circle> = y.iter().map(|i| self.circles[i].circle).collect();
        let mut out = y;
        for (i, z) in self.circles.iter().enumerate() {
            if !y.contains(i) && disc_in_hull(&z.circle, &discs, self.tolerance)? {
                out = out.with(i);
            }
        }
        Ok(out)
    }

    pub fn ch_c<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<String>> {
        let ground = self.ground()?;
        Ok(ground.names_of(self.ch_c_set(ground.set_of(names)?)?))
    }

    /// The family of `ch_c`-closed sets.
    pub fn alignment(&self) -> Result<ClosedFamily> {
        if self.len() > MAX_GROUND {
            return Err(Error::TooLarge { what: "scene for alignment", limit: MAX_GROUND, got: self.len() });
        }
        let ground = self.ground()?;
        let mut closed = Vec::new();
        for m in 0..(1u32 << self.len()) {
            let y = ElementSet(m as u16);
            if self.ch_c_set(y)? == y {
                closed.push(y);
            }
        }
        ClosedFamily::new(ground, closed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{closure_from_implications, verify_axioms, AxiomMode, Implication};

    #[test]
    fn json_round_trip() {
        let text = r#"{"tolerance":1e-9,"circles":[{"name":"x","c":[0.1,0.2],"r":0.05}],
                       "triangle":[[0,0],[0,1],[1,0]]}"#;
        let s = Scene::from_json(text).unwrap();
        assert_eq!(s.get("x").unwrap(), Circle::at(0.1, 0.2, 0.05));
        assert_eq!(Scene::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn invalid_scenes() {
        let neg = r#"{"circles":[{"name":"x","c":[0,0],"r":-1}]}"#;
        assert!(matches!(Scene::from_json(neg), Err(Error::BadCircle(_))));
        let dup = r#"{"circles":[{"name":"x","c":[0,0],"r":1},{"name":"x","c":[1,0],"r":1}]}"#;
        assert!(matches!(Scene::from_json(dup), Err(Error::DuplicateName(_))));
        let tol = r#"{"tolerance":0,"circles":[{"name":"x","c":[0,0],"r":1}]}"#;
        assert!(matches!(Scene::from_json(tol), Err(Error::BadTolerance)));
        assert!(matches!(Scene::from_json("{\"circles\": 3}"), Err(Error::Json(_))));
    }

    #[test]
    fn closure_examples() {
        let s = Scene::new([("x", Circle::at(0.0, 0.0, 1.0)), ("y", Circle::at(0.2, 0.1, 0.3))], 1e-9).unwrap();
        assert_eq!(s.ch_c::<&str>(&[]).unwrap(), Vec::<String>::new());
        assert_eq!(s.ch_c(&["x"]).unwrap(), vec!["x", "y"]);
        assert_eq!(s.ch_c(&["y"]).unwrap(), vec!["y"]);
        assert_eq!(s.ch_c(&["x", "y"]).unwrap(), vec!["x", "y"]);
    }

    #[test]
    fn small_alignments() {
        let one = Scene::new([("a", Circle::at(0.0, 0.0, 1.0))], 1e-9).unwrap();
        assert_eq!(one.alignment().unwrap().len(), 2);
        let two = Scene::new([("a", Circle::at(0.0, 0.0, 1.0)), ("b", Circle::at(3.0, 0.0, 1.0))], 1e-9).unwrap();
        assert_eq!(two.alignment().unwrap(), ClosedFamily::powerset(two.ground().unwrap()));
    }

    #[test]
    fn two_equal_discs_with_two_small_ones_between() {
        // x above and y below the axis, both inside the hull of a and b
        let s = Scene::new(
            [
                ("a", Circle::at(-3.0, 0.0, 1.0)),
                ("b", Circle::at(3.0, 0.0, 1.0)),
                ("x", Circle::at(0.0, 0.5, 0.45)),
                ("y", Circle::at(0.0, -0.5, 0.45)),
            ],
            1e-9,
        )
        .unwrap();
        let f = s.alignment().unwrap();
        assert!(verify_axioms(&f, AxiomMode::ConvexGeometry).holds);
        let g = s.ground().unwrap();
        let imp = Implication::from_names(&g, &["a", "b"], &["x", "y"]).unwrap();
        assert_eq!(f, closure_from_implications(g, &[imp]).unwrap().into_family());
    }
}
