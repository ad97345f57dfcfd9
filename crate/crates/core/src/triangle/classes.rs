use super::ConfigCode;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// Reference grouping, class `S{i+1}` on row `i`, members in reference order.
const FIXTURE: [&str; 38] = [
    "121 122 112 221 211 212",
    "111 222",
    "123 142 214 231 312 421",
    "124 132 213 241 321 412",
    "113 131 224 242 311 422",
    "114 141 223 232 322 411",
    "125 162 216 251 512 621",
    "126 152 215 261 521 612",
    "115 151 226 262 511 622",
    "116 161 225 252 522 611",
    "133 244 313 331 424 442",
    "134 243 324 341 413 432",
    "143 234 314 342 423 431",
    "144 233 323 332 414 441",
    "135 246 351 462 513 624",
    "136 245 361 452 524 613",
    "145 236 362 451 514 623",
    "146 235 352 461 523 614",
    "163 254 316 425 542 631",
    "164 253 325 416 532 641",
    "153 264 315 426 531 642",
    "154 263 326 415 541 632",
    "165 256 516 562 625 651",
    "166 255 525 552 616 661",
    "155 266 551 515 626 662",
    "156 265 526 561 615 652",
    "333 444",
    "334 343 344 433 434 443",
    "335 353 446 464 533 644",
    "336 363 445 454 544 633",
    "345 364 436 453 534 643",
    "346 354 435 463 543 634",
    "365 456 536 564 645 653",
    "366 455 545 554 663 636",
    "355 466 535 553 646 664",
    "356 465 546 563 635 654",
    "565 556 566 655 656 665",
    "555 666",
];

/// Why a class cannot be realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dismissal {
    /// Projections of y come strictly later than those of x on every side.
    SameOrder,
    /// y nested in x on one side and x nested in y on another.
    NestedBothWays,
    /// y would need points on both sides of x within one tangent wedge.
    SplitWedge,
    /// Two tangent lines would have to cross inside an angle.
    TangentCrossing,
}

const DISMISSED: [(u8, Dismissal); 18] = [
    (2, Dismissal::SameOrder),
    (9, Dismissal::SameOrder),
    (25, Dismissal::SameOrder),
    (38, Dismissal::SameOrder),
    (13, Dismissal::NestedBothWays),
    (5, Dismissal::NestedBothWays),
    (12, Dismissal::NestedBothWays),
    (28, Dismissal::NestedBothWays),
    (31, Dismissal::NestedBothWays),
    (32, Dismissal::NestedBothWays),
    (15, Dismissal::SplitWedge),
    (17, Dismissal::SplitWedge),
    (21, Dismissal::SplitWedge),
    (22, Dismissal::SplitWedge),
    (34, Dismissal::SplitWedge),
    (35, Dismissal::SplitWedge),
    (10, Dismissal::TangentCrossing),
    (6, Dismissal::TangentCrossing),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ClassId(u8);

impl ClassId {
    pub fn new(n: u8) -> Result<ClassId> {
        if (1..=38).contains(&n) {
            Ok(ClassId(n))
        } else {
            Err(Error::UnknownClass(format!("S{n}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = ClassId> {
        (1..=38).map(ClassId)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

impl FromStr for ClassId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ClassId> {
        let n = s.strip_prefix('S').unwrap_or(s);
        n.parse::<u8>().ok().and_then(|n| ClassId::new(n).ok()).ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

impl TryFrom<String> for ClassId {
    type Error = Error;
    fn try_from(s: String) -> Result<ClassId> {
        s.parse()
    }
}

impl From<ClassId> for String {
    fn from(c: ClassId) -> String {
        c.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub id: ClassId,
    pub members: Vec<ConfigCode>,
    pub realizable: bool,
    pub dismissal: Option<Dismissal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTable {
    pub classes: Vec<ClassInfo>,
    #[serde(skip)]
    index: HashMap<ConfigCode, ClassId>,
}

impl ClassTable {
    pub fn class_of(&self, code: ConfigCode) -> ClassId {
        self.index[&code]
    }

    pub fn get(&self, id: ClassId) -> &ClassInfo {
        &self.classes[id.0 as usize - 1]
    }

    pub fn realizable(&self) -> impl Iterator<Item = &ClassInfo> {
        self.classes.iter().filter(|c| c.realizable)
    }

    pub fn dismissed(&self) -> impl Iterator<Item = &ClassInfo> {
        self.classes.iter().filter(|c| !c.realizable)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("class table serializes")
    }
}

/// Orbit of a code under rotation and exchange of the circles.
fn orbit(code: ConfigCode) -> BTreeSet<ConfigCode> {
    let mut out = BTreeSet::new();
    for c in [code, code.swapped()] {
        let mut r = c;
        for _ in 0..3 {
            out.insert(r);
            r = r.rotated();
        }
    }
    out
}

fn build() -> Result<ClassTable> {
    let mut classes = Vec::with_capacity(38);
    let mut index = HashMap::new();
    for (i, row) in FIXTURE.iter().enumerate() {
        let id = ClassId(i as u8 + 1);
        let members = row.split(' ').map(str::parse).collect::<Result<Vec<ConfigCode>>>()?;
        let computed = orbit(members[0]);
        let listed: BTreeSet<ConfigCode> = members.iter().copied().collect();
        if computed != listed || listed.len() != members.len() {
            return Err(Error::TaxonomyMismatch(format!("{id}: orbit {computed:?} vs listed {listed:?}")));
        }
        for &m in &members {
            if index.insert(m, id).is_some() {
                return Err(Error::TaxonomyMismatch(format!("{m} listed twice")));
            }
        }
        let dismissal = DISMISSED.iter().find(|(n, _)| *n == id.0).map(|&(_, d)| d);
        classes.push(ClassInfo { id, members, realizable: dismissal.is_none(), dismissal });
    }
    if index.len() != 216 {
        return Err(Error::TaxonomyMismatch(format!("{} of 216 codes covered", index.len())));
    }
    Ok(ClassTable { classes, index })
}

/// The 38 classes, recomputed as orbits and checked against the reference
/// grouping. A mismatch is an error.
pub fn class_table() -> Result<&'static ClassTable> {
    static TABLE: OnceLock<std::result::Result<ClassTable, String>> = OnceLock::new();
    TABLE
        .get_or_init(|| build().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::TaxonomyMismatch(e.clone()))
}

pub fn class_of(code: ConfigCode) -> ClassId {
    class_table().expect("class table is consistent").class_of(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> ConfigCode {
        s.parse().unwrap()
    }

    #[test]
    fn spot_classes() {
        assert_eq!(class_of(c("C241")).to_string(), "S4");
        assert_eq!(class_of(c("C111")).to_string(), "S2");
        assert_eq!(class_of(c("C546")).to_string(), "S36");
        assert_eq!(class_of(c("C333")).to_string(), "S27");
    }

    #[test]
    fn partition_shape() {
        let t = class_table().unwrap();
        assert_eq!(t.classes.len(), 38);
        assert_eq!(t.classes.iter().map(|c| c.members.len()).sum::<usize>(), 216);
        let sizes: Vec<usize> = t.classes.iter().filter(|c| c.members.len() == 2).map(|c| c.id.0 as usize).collect();
        assert_eq!(sizes, vec![2, 27, 38]);
        assert_eq!(t.realizable().count(), 20);
        assert_eq!(t.dismissed().count(), 18);
    }

    #[test]
    fn every_code_is_in_its_orbit_class() {
        let t = class_table().unwrap();
        for code in ConfigCode::all() {
            let id = t.class_of(code);
            assert_eq!(t.class_of(code.rotated()), id);
            assert_eq!(t.class_of(code.swapped()), id);
        }
    }

    #[test]
    fn realizable_list() {
        let t = class_table().unwrap();
        let ids: Vec<u8> = t.realizable().map(|c| c.id.0).collect();
        assert_eq!(ids, vec![1, 3, 4, 7, 8, 11, 14, 16, 18, 19, 20, 23, 24, 26, 27, 29, 30, 33, 36, 37]);
    }

    #[test]
    fn json_export_keeps_member_order() {
        let t = class_table().unwrap();
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["classes"][0]["members"][1], "C122");
        assert_eq!(v["classes"][1]["dismissal"], "same-order");
        assert_eq!(v["classes"][35]["id"], "S36");
    }

    #[test]
    fn class_id_parsing() {
        assert_eq!("S36".parse::<ClassId>().unwrap().number(), 36);
        assert!("S39".parse::<ClassId>().is_err());
        assert!("x".parse::<ClassId>().is_err());
    }
}
