//! JSON and CSV writers with stable ordering and 12-significant-digit floats.

use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use super::IoError;

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Shortest text that reads back as `round_sig(x)`.
pub fn fmt_float(x: f64) -> String {
    format!("{}", round_sig(x))
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().map(round_sig).and_then(serde_json::Number::from_f64) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String, IoError> {
    let mut v = serde_json::to_value(value)?;
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    let text = to_json_string(value)?;
    fs::write(path, text).map_err(|e| IoError::file(format!("writing {}", path.display()), e))
}

/// A CSV table; the file starts with a `# schema=1` line.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv_string(&self) -> Result<String, IoError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let body = w.into_inner().map_err(|e| IoError::file("csv buffer", e.into_error()))?;
        let mut out = String::from("# schema=1\n");
        out.push_str(&String::from_utf8(body).expect("csv of utf-8 fields is utf-8"));
        Ok(out)
    }

    pub fn write(&self, path: &Path) -> Result<(), IoError> {
        let text = self.to_csv_string()?;
        fs::write(path, text).map_err(|e| IoError::file(format!("writing {}", path.display()), e))
    }
}

/// Reads a table written by [`Table::write`].
pub fn read_csv(path: &Path) -> Result<Table, IoError> {
    let text = fs::read_to_string(path).map_err(|e| IoError::file(format!("reading {}", path.display()), e))?;
    let body = text.strip_prefix("# schema=1\n").ok_or_else(|| {
        IoError::Usage(format!("{} does not start with a schema=1 line", path.display()))
    })?;
    let mut r = csv::Reader::from_reader(body.as_bytes());
    let header = r.headers()?.iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.map(|r| r.iter().map(String::from).collect()))
        .collect::<Result<_, _>>()?;
    Ok(Table { header, rows })
}
