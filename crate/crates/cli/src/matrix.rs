//! Supermatrix documents:
//!
//! ```json
//! {"m": 1, "n": 1,
//!  "parities": {"a": "even", "d": "even", "b": "odd", "c": "odd"},
//!  "entries": [["a", "b"], ["c", "d"]]}
//! ```
//!
//! Entry (i, j) must be homogeneous of parity ī + j̄ (or zero).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use superimmanant::superimm::SuperMatrix;
use superimmanant::superring::Parity;

use crate::error::CliError;
use crate::expr::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityName {
    Even,
    Odd,
}

impl From<ParityName> for Parity {
    fn from(p: ParityName) -> Parity {
        match p {
            ParityName::Even => Parity::Even,
            ParityName::Odd => Parity::Odd,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub m: usize,
    pub n: usize,
    #[serde(default)]
    pub parities: BTreeMap<String, ParityName>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn build(&self) -> Result<(SuperMatrix, Context), CliError> {
        let ctx = Context::new(self.parities.iter().map(|(k, &p)| (k.as_str(), p.into())))?;
        let d = self.m + self.n;
        if d == 0 {
            return Err(CliError::Input("m + n must be positive".into()));
        }
        if self.entries.len() != d || self.entries.iter().any(|r| r.len() != d) {
            return Err(CliError::Input(format!("entries must form a {d}×{d} grid")));
        }
        let mut rows = Vec::with_capacity(d);
        for (i, row) in self.entries.iter().enumerate() {
            let mut out = Vec::with_capacity(d);
            for (j, src) in row.iter().enumerate() {
                let v = ctx.parse(src)?;
                let want = if (i < self.m) == (j < self.m) { Parity::Even } else { Parity::Odd };
                if !v.is_zero() && v.homogeneous_parity() != Some(want) {
                    return Err(CliError::Input(format!(
                        "entry ({}, {}) = {src:?} must be {} for (m|n) = ({}|{})",
                        i + 1,
                        j + 1,
                        if want == Parity::Even { "even" } else { "odd" },
                        self.m,
                        self.n
                    )));
                }
                out.push(v);
            }
            rows.push(out);
        }
        Ok((SuperMatrix::new(self.m, self.n, rows)?, ctx))
    }
}

pub fn parse_matrix(text: &str, origin: &str) -> Result<(SuperMatrix, Context), CliError> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|source| CliError::Json { path: origin.to_string(), source })?;
    doc.build()
}

pub fn load_matrix(path: &Path) -> Result<(SuperMatrix, Context), CliError> {
    let origin = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: origin.clone(), source })?;
    parse_matrix(&text, &origin)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{"m": 1, "n": 1,
        "parities": {"a": "even", "d": "even", "b": "odd", "c": "odd"},
        "entries": [["a", "b"], ["c", "2*d + a*b*c"]]}"#;

    #[test]
    fn loads_and_validates() {
        let (x, ctx) = parse_matrix(DOC, "doc").unwrap();
        assert_eq!(x.dims(), (1, 1));
        assert_eq!(*x.get(2, 2), ctx.parse("a*b*c + 2*d").unwrap());
        let swapped = DOC.replace(r#"[["a", "b"]"#, r#"[["b", "a"]"#);
        assert!(matches!(parse_matrix(&swapped, "doc"), Err(CliError::Input(_))));
        let mixed = DOC.replace(r#""c", "2*d"#, r#""c + a", "2*d"#);
        assert!(parse_matrix(&mixed, "doc").is_err());
        let zero = DOC.replace(r#"["c","#, r#"["0","#);
        assert!(parse_matrix(&zero, "doc").is_ok());
        assert!(parse_matrix(r#"{"m":1,"n":1,"entries":[["1"]]}"#, "doc").is_err());
        assert!(parse_matrix("{", "doc").is_err());
    }
}
