use std::path::{Path, PathBuf};

use ncomp::C64;

use crate::error::{CliError, CliResult};

/// A CSV file with `# `-prefixed comment lines before the header row.
#[derive(Debug, Clone, Default)]
pub struct Table {
    comments: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(comments: Vec<String>, header: &[&str]) -> Self {
        Self {
            comments,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_bytes(&self) -> CliResult<Vec<u8>> {
        let mut buf = Vec::new();
        for c in &self.comments {
            buf.extend_from_slice(format!("# {c}\n").as_bytes());
        }
        let mut w = csv::Writer::from_writer(buf);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.into_inner().map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn write(&self, dir: &Path, name: &str) -> CliResult<PathBuf> {
        let path = dir.join(name);
        write_file(&path, &self.to_bytes()?)?;
        Ok(path)
    }
}

pub fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Shortest round-trip decimal form.
pub fn num(x: f64) -> String {
    format!("{x}")
}

/// `kind, x, y, r` row.
pub fn point_row(kind: &str, p: C64, r: Option<f64>) -> Vec<String> {
    vec![kind.to_string(), num(p.re), num(p.im), r.map(num).unwrap_or_default()]
}
