use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// Rows with a header, rendered as aligned text or CSV.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(header: &[S]) -> Self {
        Table { header: header.iter().map(ToString::to_string).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let w: Vec<usize> = (0..self.header.len())
            .map(|j| {
                self.rows.iter().map(|r| r[j].chars().count()).chain([self.header[j].chars().count()]).max().unwrap()
            })
            .collect();
        let line = |r: &[String]| {
            let cells: Vec<String> =
                r.iter().zip(&w).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            cells.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.header);
        for r in &self.rows {
            out += &line(r);
        }
        out
    }
}

/// One command's result. `text` lines precede the table in text mode only.
#[derive(Debug, Default)]
pub struct Report {
    pub text: Vec<String>,
    pub table: Option<Table>,
    /// The table is the CSV form of something `text` already shows.
    pub csv_only: bool,
    pub json: Value,
    pub exit: u8,
}

impl Report {
    pub fn write(&self, fmt: Format, out: &mut impl Write) -> Result<()> {
        match fmt {
            Format::Text => {
                for l in &self.text {
                    writeln!(out, "{l}")?;
                }
                if let Some(t) = self.table.as_ref().filter(|_| !self.csv_only) {
                    if !self.text.is_empty() {
                        writeln!(out)?;
                    }
                    write!(out, "{}", t.render())?;
                }
            }
            Format::Csv => {
                let t = match &self.table {
                    Some(t) => t.clone(),
                    // key: value lines become a two-column table
                    None => {
                        let mut t = Table::new(&["key", "value"]);
                        for l in &self.text {
                            if let Some((k, v)) = l.split_once(": ") {
                                t.push(vec![k.trim().to_string(), v.to_string()]);
                            }
                        }
                        t
                    }
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&t.header)?;
                for r in &t.rows {
                    w.write_record(r)?;
                }
                out.write_all(&w.into_inner()?)?;
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}
