//! Argument values naming JSON documents: `preset:NAME`, inline JSON, or a
//! file path.

use std::fs;

use maslovkit::presets::preset;
use maslovkit::{Error, Result};
use serde_json::Value;

/// When the resolved preset is an object holding `field` (a pair preset
/// passed to `--q0`), that member is returned instead of the whole object.
pub fn resolve(arg: &str, field: Option<&str>) -> Result<Value> {
    let arg = arg.trim();
    if let Some(name) = arg.strip_prefix("preset:") {
        let v = preset(name)?.to_json();
        return Ok(match field.and_then(|f| v.get(f)) {
            Some(inner) => inner.clone(),
            None => v,
        });
    }
    let text = if arg.starts_with('{') || arg.starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
}

pub fn decode<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("not a valid {what}: {e}")))
}

pub fn coefficients(list: &str) -> Result<Vec<f64>> {
    list.split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))
        })
        .collect()
}
