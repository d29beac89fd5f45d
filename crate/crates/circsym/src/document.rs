//! JSON document formats exchanged through the CLI: colorings with embedded
//! certificates, produced by `color` and re-checked by `verify`.
//!
//! These documents cross a trust boundary (files on disk), so parsing is
//! followed by explicit validation before anything touches the solvers.
//! Group orders can exceed `u64`, so they are serialized as decimal strings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::Coloring;
use crate::perm::Permutation;
use crate::verification::{Certificate, CheckMethod};

/// `verify` refuses documents above this vertex count; re-certification
/// scans a group of order at least `2n`.
pub const MAX_DOCUMENT_N: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("n = {0} out of range (3..={MAX_DOCUMENT_N})")]
    BadN(u64),
    #[error("k = {k} out of range for n = {n}")]
    BadK { n: u64, k: u64 },
    #[error("colors array has {got} entries, expected {want}")]
    BadLength { got: usize, want: usize },
    #[error("color {0} outside palette 1..={1}")]
    BadColor(u8, u8),
    #[error("palette {0} exceeds the vertex count {1}")]
    BadPalette(u8, u64),
    #[error("witness is not a permutation of the vertices")]
    BadWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub proper: bool,
    pub distinguishing: bool,
    pub witness: Option<Vec<u16>>,
    pub group_order_checked: String,
    pub method: CheckMethod,
}

impl From<&Certificate> for CertificateDocument {
    fn from(cert: &Certificate) -> Self {
        CertificateDocument {
            proper: cert.proper,
            distinguishing: cert.distinguishing,
            witness: cert.witness.as_ref().map(|w| w.images().to_vec()),
            group_order_checked: cert.group_order_checked.to_string(),
            method: cert.method,
        }
    }
}

/// A coloring of `C_n(1,k)`: colors are 1-based, listed in vertex order
/// `v_0..v_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: u64,
    pub k: u64,
    pub palette: u8,
    pub colors: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDocument>,
}

impl ColoringDocument {
    pub fn new(n: usize, k: usize, coloring: &Coloring, certificate: Option<&Certificate>) -> Self {
        ColoringDocument {
            n: n as u64,
            k: k as u64,
            palette: coloring.palette(),
            colors: coloring.colors().to_vec(),
            certificate: certificate.map(CertificateDocument::from),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: ColoringDocument =
            serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    /// Structural validation; does not re-run any solver.
    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.n < 3 || self.n > MAX_DOCUMENT_N as u64 {
            return Err(DocumentError::BadN(self.n));
        }
        if self.k == 0 || self.k > self.n / 2 {
            return Err(DocumentError::BadK {
                n: self.n,
                k: self.k,
            });
        }
        if self.colors.len() as u64 != self.n {
            return Err(DocumentError::BadLength {
                got: self.colors.len(),
                want: self.n as usize,
            });
        }
        if self.palette as u64 > self.n {
            return Err(DocumentError::BadPalette(self.palette, self.n));
        }
        for &c in &self.colors {
            if c == 0 || c > self.palette {
                return Err(DocumentError::BadColor(c, self.palette));
            }
        }
        if let Some(cert) = &self.certificate {
            if let Some(w) = &cert.witness {
                if Permutation::new(w.clone()).is_err() || w.len() as u64 != self.n {
                    return Err(DocumentError::BadWitness);
                }
            }
        }
        Ok(())
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::new(self.colors.clone(), self.palette).expect("validated document")
    }
}
