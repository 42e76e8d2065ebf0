//! File formats: problem instances, solution specifications and expanded
//! oracle bases. All three are JSON objects whose polynomials are ascending
//! coefficient lists (constant term first).

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use simpade_core::oracle::SolutionSpace;
use simpade_core::{Error as CoreError, Poly, PrimeField, ProblemInstance, SolutionSpec};

#[derive(Debug)]
pub enum FormatError {
    /// Malformed JSON or a missing/mistyped field; the message carries the
    /// field name and line/column.
    Syntax(serde_json::Error),
    /// Well-formed document whose contents do not describe a valid object.
    Invalid { field: String, message: String },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Syntax(e) => write!(f, "syntax error: {e}"),
            FormatError::Invalid { field, message } => write!(f, "invalid field `{field}`: {message}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Invalid {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub p: u64,
    #[serde(rename = "S")]
    pub series: Vec<Vec<u64>>,
    pub g: Vec<Vec<u64>>,
    #[serde(rename = "N")]
    pub bounds: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub lambdas: Vec<Vec<u64>>,
    pub deltas: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance_hash: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleFile {
    pub dim: usize,
    pub basis: Vec<Vec<u64>>,
    pub instance_hash: String,
}

fn check_coeffs(field: &str, lists: &[Vec<u64>], p: u64) -> Result<(), FormatError> {
    for (i, c) in lists.iter().enumerate() {
        if let Some(j) = c.iter().position(|&v| v >= p) {
            return Err(invalid(
                format!("{field}[{i}][{j}]"),
                format!("coefficient {} is not below p = {p}", c[j]),
            ));
        }
    }
    Ok(())
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<InstanceFile, FormatError> {
        serde_json::from_str(text).map_err(FormatError::Syntax)
    }

    pub fn to_instance(&self) -> Result<ProblemInstance, FormatError> {
        let p = self.p;
        PrimeField::new(p).map_err(|e| invalid("p", e.to_string()))?;
        if self.series.is_empty() {
            return Err(invalid("S", "need at least one series"));
        }
        if self.g.len() != self.series.len() {
            return Err(invalid(
                "g",
                format!("{} moduli for {} series", self.g.len(), self.series.len()),
            ));
        }
        if self.bounds.len() != self.series.len() + 1 {
            return Err(invalid(
                "N",
                format!("{} bounds, expected n + 1 = {}", self.bounds.len(), self.series.len() + 1),
            ));
        }
        check_coeffs("S", &self.series, p)?;
        check_coeffs("g", &self.g, p)?;
        ProblemInstance::from_coeffs(p, &self.series, &self.g, &self.bounds).map_err(|e| match e {
            CoreError::InvalidInstance(msg) => invalid("instance", msg),
            other => invalid("instance", other.to_string()),
        })
    }

    pub fn from_instance(inst: &ProblemInstance) -> InstanceFile {
        InstanceFile {
            p: inst.field().modulus(),
            series: inst.series().iter().map(|s| s.coeffs().to_vec()).collect(),
            g: inst.moduli().iter().map(|g| g.coeffs().to_vec()).collect(),
            bounds: inst.bounds().to_vec(),
        }
    }

    pub fn emit(&self) -> String {
        render(&[
            ("p", json(&self.p)),
            ("S", list_of_lists(&self.series)),
            ("g", list_of_lists(&self.g)),
            ("N", flat(&self.bounds)),
        ])
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile, FormatError> {
        serde_json::from_str(text).map_err(FormatError::Syntax)
    }

    pub fn from_spec(spec: &SolutionSpec, inst: &ProblemInstance) -> SpecFile {
        SpecFile {
            lambdas: spec.lambdas.iter().map(|l| l.coeffs().to_vec()).collect(),
            deltas: spec.deltas.clone(),
            instance_hash: Some(instance_hash(inst)),
        }
    }

    /// Converts to a library spec over `field`. Structural invariants
    /// (lengths, signs) are left to the verifier.
    pub fn to_spec(&self, field: PrimeField) -> Result<SolutionSpec, FormatError> {
        check_coeffs("lambdas", &self.lambdas, field.modulus())?;
        Ok(SolutionSpec {
            lambdas: self.lambdas.iter().map(|c| Poly::new(field, c.clone())).collect(),
            deltas: self.deltas.clone(),
        })
    }

    pub fn emit(&self) -> String {
        let mut fields = vec![("lambdas", list_of_lists(&self.lambdas)), ("deltas", flat(&self.deltas))];
        if let Some(h) = &self.instance_hash {
            fields.push(("instance_hash", json(h)));
        }
        render(&fields)
    }
}

impl OracleFile {
    pub fn from_space(space: &SolutionSpace, inst: &ProblemInstance) -> OracleFile {
        OracleFile {
            dim: space.dim,
            basis: space.basis.clone(),
            instance_hash: instance_hash(inst),
        }
    }

    pub fn parse(text: &str) -> Result<OracleFile, FormatError> {
        serde_json::from_str(text).map_err(FormatError::Syntax)
    }

    pub fn emit(&self) -> String {
        render(&[
            ("dim", json(&self.dim)),
            ("basis", list_of_lists(&self.basis)),
            ("instance_hash", json(&self.instance_hash)),
        ])
    }
}

/// Lowercase hex SHA-256 of the compact JSON of the normalized instance
/// (trailing zero coefficients stripped).
pub fn instance_hash(inst: &ProblemInstance) -> String {
    let canonical = serde_json::to_string(&InstanceFile::from_instance(inst)).expect("plain data serializes");
    Sha256::digest(canonical.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn flat<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(", "))
}

// One polynomial per line.
fn list_of_lists(lists: &[Vec<u64>]) -> String {
    if lists.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = lists.iter().map(|l| format!("    {}", flat(l))).collect();
    format!("[\n{}\n  ]", body.join(",\n"))
}

fn render(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}
