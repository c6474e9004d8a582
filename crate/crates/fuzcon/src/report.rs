//! Check results and their serialized forms.
//!
//! Every check in this crate — validations, law checks, theorem
//! verifications — produces a [`CheckResult`]: a verdict, an optional witness
//! that reproduces the violation when re-evaluated, and a snapshot of the
//! tolerances used. Reports serialize to a flat JSON document (schema
//! documented in the guide, versioned via `schema_version`).

use crate::config::NumericConfig;
use serde::Serialize;
use std::fmt;
use std::io::Write as _;
use std::path::Path;

/// Current report schema version.
pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    PreconditionFailed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::PreconditionFailed => "precondition_failed",
        };
        f.write_str(s)
    }
}

/// A concrete input demonstrating a violation, together with the values that
/// witnessed it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Input coordinates, in the order the check quantifies over them.
    pub point: Vec<f64>,
    /// The values that violate the law at `point`.
    pub values: Vec<f64>,
    /// Human-readable account of what went wrong.
    pub detail: String,
}

impl Witness {
    pub fn new(point: Vec<f64>, values: Vec<f64>, detail: impl Into<String>) -> Self {
        Witness {
            point,
            values,
            detail: detail.into(),
        }
    }
}

/// Verdict record for one law, theorem or validation.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    /// Registry identifier of the check (`LEM`, `THM_3_1`,
    /// `valid:conjunction`, ...).
    pub law_id: String,
    pub verdict: Verdict,
    /// Present whenever `verdict` is `Fails`.
    pub witness: Option<Witness>,
    /// Names the hypothesis that could not be established, when the verdict
    /// is `PreconditionFailed`.
    pub missing_hypothesis: Option<String>,
    /// Per-part outcomes for compound checks.
    pub notes: Vec<String>,
    /// Tolerances and grid sizes the verdict was produced with.
    pub tolerances: NumericConfig,
}

impl CheckResult {
    pub fn holds(law_id: impl Into<String>, cfg: &NumericConfig) -> Self {
        CheckResult {
            law_id: law_id.into(),
            verdict: Verdict::Holds,
            witness: None,
            missing_hypothesis: None,
            notes: Vec::new(),
            tolerances: cfg.clone(),
        }
    }

    pub fn fails(law_id: impl Into<String>, witness: Witness, cfg: &NumericConfig) -> Self {
        CheckResult {
            law_id: law_id.into(),
            verdict: Verdict::Fails,
            witness: Some(witness),
            missing_hypothesis: None,
            notes: Vec::new(),
            tolerances: cfg.clone(),
        }
    }

    pub fn precondition_failed(
        law_id: impl Into<String>,
        missing: impl Into<String>,
        cfg: &NumericConfig,
    ) -> Self {
        CheckResult {
            law_id: law_id.into(),
            verdict: Verdict::PreconditionFailed,
            witness: None,
            missing_hypothesis: Some(missing.into()),
            notes: Vec::new(),
            tolerances: cfg.clone(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn holds_verdict(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Flat JSON document for this result.
    pub fn to_json(&self) -> serde_json::Value {
        let w_point: Vec<f64> = self.witness.as_ref().map_or(vec![], |w| w.point.clone());
        let w_values: Vec<f64> = self.witness.as_ref().map_or(vec![], |w| w.values.clone());
        let w_detail = self.witness.as_ref().map(|w| w.detail.clone());
        serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "law_id": self.law_id,
            "verdict": self.verdict,
            "witness_point": w_point,
            "witness_values": w_values,
            "witness_detail": w_detail,
            "missing_hypothesis": self.missing_hypothesis,
            "notes": self.notes,
            "grid_1d": self.tolerances.grid_1d,
            "grid_2d": self.tolerances.grid_2d,
            "bisect_iters": self.tolerances.bisect_iters,
            "eps_eq": self.tolerances.eps_eq,
            "eps_zero": self.tolerances.eps_zero,
            "eps_one": self.tolerances.eps_one,
            "jump_offsets": self.tolerances.jump_offsets,
            "jump_threshold": self.tolerances.jump_threshold,
        })
    }

    /// Pretty-printed JSON, stable across runs for identical inputs.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serialization")
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law_id, self.verdict)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness at {:?}: {})", w.point, w.detail)?;
        }
        if let Some(m) = &self.missing_hypothesis {
            write!(f, " (missing hypothesis: {m})")?;
        }
        Ok(())
    }
}

/// Writes `content` to `path` atomically (temp file + rename).
pub fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp~");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}

/// CSV dump of a sampled unary function, header `x,value`.
pub fn unary_csv(samples: &[(f64, f64)]) -> String {
    let mut out = String::from("x,value\n");
    for (x, v) in samples {
        out.push_str(&format!("{x},{v}\n"));
    }
    out
}

/// CSV dump of a sampled binary map, header `x,y,value`.
pub fn binary_csv(samples: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("x,y,value\n");
    for (x, y, v) in samples {
        out.push_str(&format!("{x},{y},{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_flat_and_versioned() {
        let cfg = NumericConfig::default();
        let r = CheckResult::fails(
            "LEM",
            Witness::new(vec![0.5], vec![0.5], "D(N(0.5), 0.5) = 0.5"),
            &cfg,
        );
        let j = r.to_json();
        assert_eq!(j["schema_version"], 1);
        assert_eq!(j["law_id"], "LEM");
        assert_eq!(j["verdict"], "fails");
        assert_eq!(j["witness_point"][0], 0.5);
        assert_eq!(j["eps_eq"], 1e-9);
    }

    #[test]
    fn serialization_is_byte_stable() {
        let cfg = NumericConfig::default();
        let r = CheckResult::holds("NP", &cfg);
        assert_eq!(r.to_json_string(), r.to_json_string());
    }

    #[test]
    fn csv_headers() {
        assert!(unary_csv(&[(0.0, 1.0)]).starts_with("x,value\n"));
        assert!(binary_csv(&[(0.0, 1.0, 1.0)]).starts_with("x,y,value\n"));
    }
}
