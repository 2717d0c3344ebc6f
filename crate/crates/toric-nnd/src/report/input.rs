use std::fmt;

use serde::de::{self, DeserializeSeed, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::vector::{DualVector, LatticeVector};
use crate::newton::{ConeData, NewtonData};

/// Per-run settings; command line flags take precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_shell_cap: Option<usize>,
    /// Vertex id of the root node for the diagonal sequence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub json: Option<String>,
}

/// A validated input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub rank: usize,
    pub cone: Vec<Vec<i64>>,
    pub support: Vec<Vec<i64>>,
    pub options: Options,
}

impl InputSpec {
    pub fn newton_data(&self) -> Result<NewtonData> {
        let cone = ConeData::new(self.cone.iter().map(|r| LatticeVector::from_i64(r)).collect())
            .map_err(|e| Error::Input(format!("cone: {e}")))?;
        NewtonData::build(cone, self.support.iter().map(|p| DualVector::from_i64(p)).collect())
            .map_err(|e| Error::Input(format!("support: {e}")))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "rank": self.rank, "cone": self.cone, "support": self.support });
        let opts = serde_json::to_value(&self.options).expect("options serialize");
        if opts.as_object().is_some_and(|o| !o.is_empty()) {
            v["options"] = opts;
        }
        v
    }
}

impl fmt::Display for InputSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(&self.to_json()).map_err(|_| fmt::Error)?)
    }
}

/// Parses and validates an input document. Syntax and shape errors carry
/// the line and column reported by the JSON reader.
pub fn parse_input(text: &str) -> Result<InputSpec> {
    #[derive(Deserialize)]
    struct RankOnly {
        rank: Option<Value>,
    }
    let head: RankOnly = serde_json::from_str(text).map_err(input_error)?;
    let rank = match head.rank {
        Some(Value::Number(n)) if n.as_u64().is_some_and(|r| r == 2 || r == 3) => n.as_u64().unwrap() as usize,
        Some(v) => return Err(Error::Input(format!("rank must be 2 or 3, found {v}"))),
        None => return Err(Error::Input("missing field `rank`".into())),
    };
    let mut de = serde_json::Deserializer::from_str(text);
    let spec = DocSeed { rank }.deserialize(&mut de).map_err(input_error)?;
    de.end().map_err(input_error)?;
    // cone and support checks that need exact arithmetic
    spec.newton_data()?;
    Ok(spec)
}

/// Reads a document from a file.
pub fn read_input(path: &std::path::Path) -> Result<InputSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        e => e,
    })
}

fn input_error(e: serde_json::Error) -> Error {
    Error::Input(e.to_string())
}

struct DocSeed {
    rank: usize,
}

impl<'de> DeserializeSeed<'de> for DocSeed {
    type Value = InputSpec;
    fn deserialize<D: Deserializer<'de>>(self, d: D) -> std::result::Result<InputSpec, D::Error> {
        d.deserialize_map(self)
    }
}

impl<'de> Visitor<'de> for DocSeed {
    type Value = InputSpec;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an object with rank, cone, support and optional options")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<InputSpec, A::Error> {
        let (mut cone, mut support, mut options) = (None, None, None);
        let mut seen_rank = false;
        while let Some(key) = map.next_key::<String>()? {
            let dup = || de::Error::custom(format!("duplicate field `{key}`"));
            match key.as_str() {
                "rank" => {
                    if std::mem::replace(&mut seen_rank, true) {
                        return Err(dup());
                    }
                    map.next_value::<usize>()?;
                }
                "cone" => {
                    if cone.replace(map.next_value_seed(RowsSeed { rank: self.rank, what: "cone" })?).is_some() {
                        return Err(dup());
                    }
                }
                "support" => {
                    if support.replace(map.next_value_seed(RowsSeed { rank: self.rank, what: "support" })?).is_some() {
                        return Err(dup());
                    }
                }
                "options" => {
                    if options.replace(map.next_value::<Options>()?).is_some() {
                        return Err(dup());
                    }
                }
                _ => return Err(de::Error::unknown_field(&key, &["rank", "cone", "support", "options"])),
            }
        }
        let cone: Vec<Vec<i64>> = cone.ok_or_else(|| de::Error::missing_field("cone"))?;
        let support: Vec<Vec<i64>> = support.ok_or_else(|| de::Error::missing_field("support"))?;
        if support.is_empty() {
            return Err(de::Error::custom("support is empty"));
        }
        Ok(InputSpec { rank: self.rank, cone, support, options: options.unwrap_or_default() })
    }
}

struct RowsSeed {
    rank: usize,
    what: &'static str,
}

impl<'de> DeserializeSeed<'de> for RowsSeed {
    type Value = Vec<Vec<i64>>;
    fn deserialize<D: Deserializer<'de>>(self, d: D) -> std::result::Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for RowsSeed {
    type Value = Vec<Vec<i64>>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a list of integer vectors of length {}", self.rank)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
        let mut rows = Vec::new();
        while let Some(row) = seq.next_element::<Vec<i64>>()? {
            if row.len() != self.rank {
                return Err(de::Error::custom(format!(
                    "{}[{}] has length {}, expected {}",
                    self.what,
                    rows.len(),
                    row.len(),
                    self.rank
                )));
            }
            rows.push(row);
        }
        Ok(rows)
    }
}
