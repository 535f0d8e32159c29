//! JSON form of group references.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{psl2_group, Group, GroupError, Perm, PermGroup, MAX_PERM_DEGREE};

/// Most generators accepted in a `perm` group.
pub const MAX_WIRE_GENERATORS: usize = 64;
/// Largest n accepted for `Sn` / `An` (cycle-type arithmetic only).
const MAX_SYMMETRIC_DEGREE: u64 = 1 << 40;

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum GroupWire {
    Sn {
        n: u64,
    },
    An {
        n: u64,
    },
    #[serde(rename = "perm")]
    Perm {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    #[serde(rename = "abstract")]
    Abstract {
        name: String,
        class_orders: BTreeMap<String, u64>,
    },
    #[serde(rename = "psl2")]
    Psl2 { p: u64 },
}

impl TryFrom<GroupWire> for Group {
    type Error = GroupError;

    fn try_from(w: GroupWire) -> Result<Self, GroupError> {
        let check_n = |n: u64| {
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                Err(GroupError::OutOfRange(format!("degree {n}")))
            } else {
                Ok(())
            }
        };
        match w {
            GroupWire::Sn { n } => check_n(n).map(|_| Group::Symmetric(n)),
            GroupWire::An { n } => check_n(n).map(|_| Group::Alternating(n)),
            GroupWire::Perm { degree, generators } => {
                if degree == 0 || degree > MAX_PERM_DEGREE {
                    return Err(GroupError::OutOfRange(format!("degree {degree}")));
                }
                if generators.len() > MAX_WIRE_GENERATORS {
                    return Err(GroupError::TooLarge(format!(
                        "{} generators (limit {MAX_WIRE_GENERATORS})",
                        generators.len()
                    )));
                }
                let gens = generators
                    .into_iter()
                    .map(Perm::from_images)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Group::Perm(PermGroup::new(degree, gens)?))
            }
            GroupWire::Abstract { name, class_orders } => {
                if let Some((c, _)) = class_orders.iter().find(|(_, &o)| o == 0) {
                    return Err(GroupError::Invalid(format!("class {c} has order 0")));
                }
                Ok(Group::Abstract { name, class_orders })
            }
            GroupWire::Psl2 { p } => Ok(Group::Psl2 {
                p,
                group: psl2_group(p)?,
            }),
        }
    }
}

impl From<&Group> for GroupWire {
    fn from(g: &Group) -> Self {
        match g {
            Group::Symmetric(n) => GroupWire::Sn { n: *n },
            Group::Alternating(n) => GroupWire::An { n: *n },
            Group::Perm(pg) => GroupWire::Perm {
                degree: pg.degree(),
                generators: pg.generators().iter().map(Perm::images).collect(),
            },
            Group::Abstract { name, class_orders } => GroupWire::Abstract {
                name: name.clone(),
                class_orders: class_orders.clone(),
            },
            Group::Psl2 { p, .. } => GroupWire::Psl2 { p: *p },
        }
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Group {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = GroupWire::deserialize(d)?;
        Group::try_from(w).map_err(serde::de::Error::custom)
    }
}

impl Group {
    pub fn parse_json(s: &str) -> Result<Self, GroupError> {
        serde_json::from_str(s).map_err(|e| GroupError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group serializes")
    }
}
