//! Deterministic artifact writing: metadata headers, fixed-precision float
//! formatting, minimal CSV quoting and atomic file replacement.

use std::fmt::Display;
use std::fs;
use std::path::Path;

use crate::errors::CliError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Ordered `key: value` pairs recorded at the top of every artifact.
#[derive(Debug, Clone)]
pub struct Meta {
    pairs: Vec<(String, String)>,
}

impl Meta {
    pub fn new(command: &str) -> Self {
        let mut m = Self { pairs: Vec::new() };
        m.push("tool", format!("sentarc {TOOL_VERSION}"));
        m.push("command", command);
        m
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.pairs.push((key.to_string(), value.to_string()));
    }

    pub fn push_opt(&mut self, key: &str, value: Option<impl Display>) {
        if let Some(v) = value {
            self.push(key, v);
        }
    }

    /// `# key: value` lines.
    pub fn comment_block(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.pairs {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out
    }

    /// XML comment form for SVG artifacts.
    pub fn xml_comment(&self) -> String {
        let mut out = String::from("<!--\n");
        for (k, v) in &self.pairs {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        out.push_str("-->\n");
        out
    }

    /// Sorted-key JSON object for JSON artifacts.
    pub fn json_value(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.pairs {
            map.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        serde_json::Value::Object(map)
    }
}

/// Fixed 6-decimal float formatting used in all CSV artifacts.
pub fn fmt_f(v: f64) -> String {
    format!("{v:.6}")
}

/// RFC-4180 minimal quoting.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Lowercase, non-alphanumeric runs collapsed to `_`.
pub fn slugify(s: &str) -> String {
    let mut out = String::new();
    let mut prev_sep = true;
    for ch in s.chars() {
        if ch.is_alphanumeric() {
            out.extend(ch.to_lowercase());
            prev_sep = false;
        } else if !prev_sep {
            out.push('_');
            prev_sep = true;
        }
    }
    while out.ends_with('_') {
        out.pop();
    }
    if out.is_empty() {
        out.push('x');
    }
    out
}

/// Write via a temp file in the same directory, then rename into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let display = path.display().to_string();
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(|source| CliError::Write {
        path: display.clone(),
        source,
    })?;
    fs::rename(&tmp, path).map_err(|source| CliError::Write {
        path: display,
        source,
    })
}

/// `{"_meta": ..., <key>: <value>}` rendered with a trailing newline.
pub fn json_artifact(meta: &Meta, key: &str, value: serde_json::Value) -> String {
    let mut map = serde_json::Map::new();
    map.insert("_meta".to_string(), meta.json_value());
    map.insert(key.to_string(), value);
    let mut s = serde_json::to_string_pretty(&serde_json::Value::Object(map))
        .expect("serializable artifact");
    s.push('\n');
    s
}
