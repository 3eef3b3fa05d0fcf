//! Reading samples from text files or the bundled data sets.

use std::path::Path;

use discrete_teissier::{datasets, Dataset};

use crate::error::{CliError, CliResult};

/// Resolves `spec` as a bundled data set name first, then as a file path.
pub fn load(spec: &str, scale_floor: Option<f64>) -> CliResult<Dataset> {
    if !Path::new(spec).exists() {
        if let Ok(data) = datasets::bundled(spec) {
            if scale_floor.is_some() {
                return Err(CliError::Usage(format!(
                    "--scale-floor does not apply to the bundled data set '{spec}'"
                )));
            }
            return Ok(data);
        }
    }
    let text = std::fs::read_to_string(spec).map_err(|source| CliError::Io {
        path: spec.into(),
        source,
    })?;
    parse(spec, &text, scale_floor)
}

/// One value per line or comma-separated; blank lines and `#` comments are
/// skipped.
pub fn parse(path: &str, text: &str, scale_floor: Option<f64>) -> CliResult<Dataset> {
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = line.split('#').next().unwrap_or("");
        for token in content.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let value: f64 = token
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| CliError::Parse {
                    path: path.to_string(),
                    line: line_no,
                    token: token.to_string(),
                })?;
            if value < 0.0 {
                return Err(CliError::NegativeValue {
                    path: path.to_string(),
                    line: line_no,
                    value,
                });
            }
            if scale_floor.is_none() && (value.fract() != 0.0 || value > 9.0e15) {
                return Err(CliError::NotInteger {
                    path: path.to_string(),
                    line: line_no,
                    value,
                });
            }
            raw.push(value);
        }
    }
    if raw.is_empty() {
        return Err(CliError::Empty { path: path.to_string() });
    }
    let data = match scale_floor {
        Some(d) => Dataset::scale_floor(raw, d)?,
        None => Dataset::new(raw.into_iter().map(|v| v as u64).collect())?,
    };
    Ok(data)
}

/// Inverse of [`parse`] for untransformed data.
pub fn render(values: &[u64]) -> String {
    let mut out = String::with_capacity(values.len() * 4);
    for v in values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}
