use std::io::Read;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, C64};

/// On-disk matrix: `{"n": 2, "label": "...", "entries": [[re, im], ...]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix, label: Option<String>) -> Self {
        Self { n: m.rows(), label, entries: m.as_slice().iter().map(|z| [z.re, z.im]).collect() }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.entries.len() != self.n * self.n {
            return Err(Error::Parse(format!(
                "expected {} entries for n = {}, found {}",
                self.n * self.n,
                self.n,
                self.entries.len()
            )));
        }
        if let Some(bad) = self.entries.iter().flatten().find(|x| !x.is_finite()) {
            return Err(Error::Parse(format!("non-finite entry {bad}")));
        }
        let data = self.entries.iter().map(|[re, im]| C64::new(*re, *im)).collect();
        ComplexMatrix::from_vec(self.n, self.n, data).map_err(|e| Error::Parse(e.to_string()))
    }

    /// JSON, or the plain form: `n` followed by `n^2` whitespace-separated `re im` pairs.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()));
        }
        let mut tokens = text.split_whitespace().filter(|t| !t.starts_with('#'));
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad dimension: {e}")))?;
        let values: Vec<f64> = tokens
            .map(|t| t.parse::<f64>().map_err(|e| Error::Parse(format!("bad number {t:?}: {e}"))))
            .collect::<Result<_>>()?;
        if values.len() != 2 * n * n {
            return Err(Error::Parse(format!("expected {} numbers after n = {n}, found {}", 2 * n * n, values.len())));
        }
        Ok(Self { n, label: None, entries: values.chunks(2).map(|c| [c[0], c[1]]).collect() })
    }
}

/// Raw bytes of `path`, or of stdin for `-`.
pub fn read_source(path: &str) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    if path == "-" {
        std::io::stdin().read_to_end(&mut buf).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        buf = std::fs::read(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    Ok(buf)
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load(path: &str) -> Result<(MatrixFile, String)> {
    let bytes = read_source(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((MatrixFile::parse(text)?, digest(&bytes)))
}
