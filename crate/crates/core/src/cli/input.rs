use serde::Deserialize;

use super::CliError;
use crate::state::SymmetricState;
use crate::Complex64;

/// How the `dicke` list is indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `dicke[l]` multiplies the Dicke state with `l` zeros.
    #[default]
    Zeros,
    /// `dicke[k]` multiplies the Dicke state with `k` ones.
    Excitations,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFileRecord {
    pub n: usize,
    pub dicke: Vec<[f64; 2]>,
    #[serde(default)]
    pub convention: Convention,
    #[serde(default)]
    pub id: Option<String>,
}

impl StateFileRecord {
    /// The normalized state, in zeros indexing.
    pub fn state(&self) -> Result<SymmetricState, String> {
        let coeffs: Vec<Complex64> = self
            .dicke
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        let state = match self.convention {
            Convention::Zeros => SymmetricState::new(self.n, coeffs),
            Convention::Excitations => SymmetricState::from_excitations(self.n, coeffs),
        };
        state.map(|s| s.normalize()).map_err(|e| e.to_string())
    }
}

/// Either one JSON object per non-blank line, or a single JSON array.
/// Every record is validated here, so later failures are math errors.
pub fn parse_records(text: &str) -> Result<Vec<StateFileRecord>, CliError> {
    let trimmed = text.trim_start();
    let mut records = Vec::new();
    if trimmed.starts_with('[') {
        let parsed: Vec<StateFileRecord> =
            serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{e}")))?;
        for (i, r) in parsed.into_iter().enumerate() {
            validate(&r).map_err(|e| CliError::Parse(format!("record {}: {e}", i + 1)))?;
            records.push(r);
        }
    } else {
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let r: StateFileRecord = serde_json::from_str(line)
                .map_err(|e| CliError::Parse(format!("line {}: {e}", i + 1)))?;
            validate(&r).map_err(|e| CliError::Parse(format!("line {}: {e}", i + 1)))?;
            records.push(r);
        }
    }
    Ok(records)
}

fn validate(r: &StateFileRecord) -> Result<(), String> {
    if r.dicke.iter().flatten().any(|x| !x.is_finite()) {
        return Err("non-finite coefficient".to_string());
    }
    r.state().map(|_| ())
}
