//! Generator files.
//!
//! ```json
//! {"generators": [[1,0],[0,1],[1,1]], "mode": "standard", "box_table": {"[1,2]": "3"}}
//! ```
//!
//! Box-table keys are 1-based index sets; values are integers or `"p/q"`
//! strings. Keys left out of the table have value zero.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use ehrhart_core::{default_box_table, BoxValuationTable, IndexSet, Mode, VectorConfiguration, ZonotopeSpec};
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{CliError, ExitKind};
use crate::json;

/// Independent sets are enumerated over all subsets of the generators.
pub const MAX_GENERATORS: usize = 24;

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
pub enum InputMode {
    #[default]
    #[serde(rename = "standard")]
    Standard,
    #[serde(rename = "typeB")]
    TypeB,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    generators: Vec<Vec<i64>>,
    #[serde(default)]
    mode: InputMode,
    #[serde(default)]
    box_table: Option<BTreeMap<String, Value>>,
}

#[derive(Clone, Debug)]
pub struct InputDocument {
    pub spec: ZonotopeSpec,
    /// The table from the file, if one was given.
    pub explicit_table: Option<BoxValuationTable<BigRational>>,
}

impl InputDocument {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage("Io", format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawInput =
            serde_json::from_str(text).map_err(|e| CliError::usage("InvalidInput", format!("malformed input: {e}")))?;
        let dim = raw
            .generators
            .first()
            .map(Vec::len)
            .ok_or_else(|| CliError::usage("InvalidInput", "at least one generator is required"))?;
        if raw.generators.len() > MAX_GENERATORS {
            return Err(CliError::new(
                ExitKind::Resource,
                "TooManyGenerators",
                format!("{} generators, limit {MAX_GENERATORS}", raw.generators.len()),
            ));
        }
        let config = VectorConfiguration::new(dim, raw.generators)?;
        let mode = match raw.mode {
            InputMode::Standard => Mode::Standard,
            InputMode::TypeB => Mode::TypeB,
        };
        let explicit_table = match raw.box_table {
            None => None,
            Some(entries) => {
                let mut table = BoxValuationTable::new();
                let mut seen = BTreeSet::new();
                for (key, value) in &entries {
                    let set = parse_key(key, config.len())?;
                    if !seen.insert(set) {
                        return Err(CliError::usage("InvalidKey", format!("box table key {key:?} names {set} twice")));
                    }
                    table.insert(set, json::parse_rational(value)?);
                }
                table.validate(&config)?;
                Some(table)
            }
        };
        Ok(InputDocument { spec: ZonotopeSpec::new(config, mode), explicit_table })
    }

    pub fn config(&self) -> &VectorConfiguration {
        self.spec.config()
    }

    /// The explicit table, or lattice-point counts of the open boxes.
    pub fn table(&self) -> Result<BoxValuationTable<BigRational>, CliError> {
        match &self.explicit_table {
            Some(t) => Ok(t.clone()),
            None => Ok(default_box_table(self.config())?.map(|b| BigRational::from_integer(b.clone()))),
        }
    }

    pub fn echo(&self) -> Value {
        let mut out = json!({
            "generators": self.config().vectors(),
            "mode": match self.spec.mode() {
                Mode::Standard => "standard",
                Mode::TypeB => "typeB",
            },
        });
        if let Some(t) = &self.explicit_table {
            out["box_table"] = table_json(t);
        }
        out
    }
}

pub fn table_json(t: &BoxValuationTable<BigRational>) -> Value {
    let map: Map<String, Value> = t.iter().map(|(k, v)| (json::set_key(k), json::rational(v))).collect();
    Value::Object(map)
}

/// Reads `"[1,3]"` into the 0-based set `{0, 2}`.
fn parse_key(key: &str, n: usize) -> Result<IndexSet, CliError> {
    let bad = |why: String| CliError::usage("InvalidKey", format!("box table key {key:?}: {why}"));
    let indices: Vec<usize> = serde_json::from_str(key).map_err(|e| bad(format!("expected a list like [1,2] ({e})")))?;
    let mut set = IndexSet::EMPTY;
    for i in indices {
        if i == 0 || i > n {
            return Err(bad(format!("index {i} outside 1..={n}")));
        }
        if set.contains(i - 1) {
            return Err(bad(format!("index {i} repeated")));
        }
        set = set.insert(i - 1);
    }
    Ok(set)
}
