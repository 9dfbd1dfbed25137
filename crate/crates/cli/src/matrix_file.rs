//! JSON matrix files:
//!
//! ```json
//! {"rows": 2, "cols": 2, "data": [[1, 0], [0, 0], [0, 0], [1, 0]], "dims": [1, 2]}
//! ```
//!
//! `data` is row-major, one `[re, im]` pair per entry; `dims` is an optional
//! bipartite annotation with `m·n = rows = cols`.

use std::fs;
use std::io::Read;
use std::path::Path;

use num_complex::Complex64;
use psdsplit::tensor::BipartiteDims;
use psdsplit::MatrixC;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<[usize; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(m: &MatrixC) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.data().iter().map(|z| [z.re, z.im]).collect(),
            dims: None,
        }
    }

    pub fn with_dims(mut self, dims: Option<BipartiteDims>) -> Self {
        self.dims = dims.map(|d| [d.dim_a, d.dim_b]);
        self
    }

    /// Validates the document and converts it to a matrix.
    pub fn to_matrix(&self) -> Result<MatrixC, CliError> {
        let expected = self.rows * self.cols;
        if self.rows == 0 || self.cols == 0 {
            return Err(CliError::input(format!(
                "matrix shape must be positive, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self.data.len() < expected {
            return Err(CliError::input(format!(
                "data has {} entries but a {}x{} matrix needs {expected}; first missing entry is index {}",
                self.data.len(),
                self.rows,
                self.cols,
                self.data.len()
            )));
        }
        if self.data.len() > expected {
            return Err(CliError::input(format!(
                "data has {} entries but a {}x{} matrix needs {expected}; first extra entry is index {expected}",
                self.data.len(),
                self.rows,
                self.cols
            )));
        }
        if let Some(i) = self
            .data
            .iter()
            .position(|[re, im]| !re.is_finite() || !im.is_finite())
        {
            return Err(CliError::input(format!("data entry {i} is not finite")));
        }
        if let Some([m, n]) = self.dims {
            if m == 0 || n == 0 || m * n != self.rows || self.rows != self.cols {
                return Err(CliError::input(format!(
                    "dims [{m}, {n}] do not match a {}x{} matrix",
                    self.rows, self.cols
                )));
            }
        }
        let data = self
            .data
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        MatrixC::from_vec(self.rows, self.cols, data).map_err(CliError::from)
    }

    pub fn dims(&self) -> Option<BipartiteDims> {
        self.dims.and_then(|[m, n]| BipartiteDims::new(m, n).ok())
    }
}

pub fn parse_matrix_str(text: &str) -> Result<MatrixFile, CliError> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| {
        CliError::input(format!(
            "malformed matrix document at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    file.to_matrix()?;
    Ok(file)
}

/// Reads a matrix document from `path`, or from stdin when `path` is `-`.
pub fn read_matrix_file(path: &Path) -> Result<MatrixFile, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("reading {}: {e}", path.display())))?
    };
    parse_matrix_str(&text).map_err(|e| e.context(&path.display().to_string()))
}

pub fn serialize_matrix(m: &MatrixC) -> String {
    serde_json::to_string(&MatrixFile::from_matrix(m)).expect("matrix serializes")
}

pub fn parse_matrix(text: &str) -> Result<MatrixC, CliError> {
    parse_matrix_str(text)?.to_matrix()
}
