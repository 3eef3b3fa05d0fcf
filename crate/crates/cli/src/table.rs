//! Plain tables rendered as CSV or aligned markdown.

use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    #[value(alias = "markdown")]
    Md,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Int(u64),
    Num(f64),
    /// Probability shown as `<0.0001` when below the printed resolution.
    Prob(f64),
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, precision: usize) -> String {
        match format {
            Format::Csv => self.csv(precision),
            Format::Md => self.markdown(precision),
        }
    }

    fn csv(&self, precision: usize) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Text(s) if s.contains([',', '"']) => format!("\"{}\"", s.replace('"', "\"\"")),
                    Cell::Text(s) => s.clone(),
                    Cell::Int(v) => v.to_string(),
                    Cell::Num(v) | Cell::Prob(v) => number(*v, precision),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn markdown(&self, precision: usize) -> String {
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Text(s) => s.clone(),
                        Cell::Int(v) => v.to_string(),
                        Cell::Num(v) => number(*v, precision),
                        Cell::Prob(v) if *v > 0.0 && *v < 0.5 * 10f64.powi(-(precision as i32)) => {
                            format!("<{}", number(10f64.powi(-(precision as i32)), precision))
                        }
                        Cell::Prob(v) => number(*v, precision),
                    })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|j| {
                body.iter()
                    .map(|r| r[j].chars().count())
                    .chain([self.headers[j].chars().count(), 3])
                    .max()
                    .unwrap_or(3)
            })
            .collect();
        let numeric: Vec<bool> = (0..self.headers.len())
            .map(|j| !self.rows.is_empty() && self.rows.iter().all(|r| !matches!(r[j], Cell::Text(_))))
            .collect();

        let mut out = String::new();
        let line = |cells: &[String], out: &mut String| {
            out.push('|');
            for (j, c) in cells.iter().enumerate() {
                let pad = widths[j] - c.chars().count();
                if numeric[j] {
                    let _ = write!(out, " {}{} |", " ".repeat(pad), c);
                } else {
                    let _ = write!(out, " {}{} |", c, " ".repeat(pad));
                }
            }
            out.push('\n');
        };
        line(&self.headers, &mut out);
        out.push('|');
        for (j, w) in widths.iter().enumerate() {
            if numeric[j] {
                let _ = write!(out, " {}: |", "-".repeat(w - 1));
            } else {
                let _ = write!(out, " {} |", "-".repeat(*w));
            }
        }
        out.push('\n');
        for row in &body {
            line(row, &mut out);
        }
        for note in &self.notes {
            out.push('\n');
            out.push_str(note);
            out.push('\n');
        }
        out
    }
}

fn number(v: f64, precision: usize) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        let s = format!("{v:.precision$}");
        // avoid "-0.0000"
        if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
            s[1..].to_string()
        } else {
            s
        }
    }
}
