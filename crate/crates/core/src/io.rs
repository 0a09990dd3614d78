//! JSON and text formats for matrices, spectra, frames and complex scalars.
//!
//! ```text
//! matrix:   {"n": 2, "entries": [[{"re": 1, "im": 0}, ...], ...]}
//! spectrum: [{"re": 1, "im": 0}, ...]
//! frame:    {"n": 4, "k": 2, "columns": [[{"re": .., "im": ..}, ...], ...]}
//! ```

use serde::{Deserialize, Serialize};

use crate::numkit::{ComplexMatrix, Frame};
use crate::{Error, Result, Spectrum, C64};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexJson {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for C64 {
    fn from(z: ComplexJson) -> Self {
        C64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<ComplexJson>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameJson {
    pub n: usize,
    pub k: usize,
    pub columns: Vec<Vec<ComplexJson>>,
}

/// Either accepted input document.
#[derive(Debug, Clone, PartialEq)]
pub enum InputDoc {
    Matrix(ComplexMatrix),
    Spectrum(Spectrum),
}

fn json_err(e: serde_json::Error) -> Error {
    Error::InvalidInput(e.to_string())
}

fn to_json_vec(v: &[C64]) -> Vec<ComplexJson> {
    v.iter().copied().map(Into::into).collect()
}

fn from_json_vec(v: &[ComplexJson]) -> Vec<C64> {
    v.iter().copied().map(Into::into).collect()
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    let doc = MatrixJson {
        n: m.n(),
        entries: m.rows().iter().map(|r| to_json_vec(r)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("matrix serialises")
}

pub fn matrix_from_json(s: &str) -> Result<ComplexMatrix> {
    let doc: MatrixJson = serde_json::from_str(s).map_err(json_err)?;
    if doc.entries.len() != doc.n {
        return Err(Error::DimensionMismatch {
            expected: doc.n,
            found: doc.entries.len(),
        });
    }
    ComplexMatrix::from_rows(doc.entries.iter().map(|r| from_json_vec(r)).collect())
}

pub fn spectrum_to_json(z: &Spectrum) -> String {
    serde_json::to_string_pretty(&to_json_vec(z.values())).expect("spectrum serialises")
}

pub fn spectrum_from_json(s: &str) -> Result<Spectrum> {
    let doc: Vec<ComplexJson> = serde_json::from_str(s).map_err(json_err)?;
    Spectrum::new(from_json_vec(&doc))
}

pub fn frame_to_json(f: &Frame) -> String {
    let doc = FrameJson {
        n: f.n(),
        k: f.k(),
        columns: f.columns().iter().map(|c| to_json_vec(c)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("frame serialises")
}

pub fn frame_from_json(s: &str) -> Result<Frame> {
    let doc: FrameJson = serde_json::from_str(s).map_err(json_err)?;
    if doc.columns.len() != doc.k {
        return Err(Error::DimensionMismatch {
            expected: doc.k,
            found: doc.columns.len(),
        });
    }
    Frame::new(doc.n, doc.columns.iter().map(|c| from_json_vec(c)).collect())
}

/// A matrix object or a spectrum array.
pub fn input_from_json(s: &str) -> Result<InputDoc> {
    let value: serde_json::Value = serde_json::from_str(s).map_err(json_err)?;
    if value.is_array() {
        spectrum_from_json(s).map(InputDoc::Spectrum)
    } else {
        matrix_from_json(s).map(InputDoc::Matrix)
    }
}

/// `"re,im"`, or a bare real `"re"`.
pub fn parse_complex(s: &str) -> Result<C64> {
    let bad = || Error::InvalidInput(format!("cannot parse complex number {s:?}"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    match parts.as_slice() {
        [re] => Ok(C64::new(num(re)?, 0.0)),
        [re, im] => Ok(C64::new(num(re)?, num(im)?)),
        _ => Err(bad()),
    }
}

/// `"re,im;re,im;..."`.
pub fn parse_spectrum(s: &str) -> Result<Spectrum> {
    let values = s
        .split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(parse_complex)
        .collect::<Result<Vec<_>>>()?;
    Spectrum::new(values)
}
