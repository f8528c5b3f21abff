//! Codebook JSON files and redundancy reports.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::alphabet;
use crate::constraints::ConstraintSpec;
use crate::edit_model::{format_eoi, format_quotas, parse_eoi, parse_quotas, EditProfile, ErrorSpec};
use crate::error::{Error, Result};
use crate::generator::{baseline_redundancy, redundancy, Codebook, GenerationMeta};

pub const FORMAT_VERSION: u32 = 1;
pub const ALPHABET: &str = "ACGT";
pub const REPORT_HEADER: &str = "m,n,redundancy,baseline,gap";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EditListText {
    pub eoi: String,
    pub quotas: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodebookFile {
    pub format_version: u32,
    pub alphabet: String,
    /// Correction budget, when the check quotas were derived from one.
    pub correction: Option<EditListText>,
    /// Quotas every pair is checked against.
    pub check: EditListText,
    pub constraint: Option<ConstraintSpec>,
    pub n: usize,
    pub m: usize,
    pub redundancy: f64,
    pub baseline_redundancy: f64,
    pub seed: u64,
    pub steps: usize,
    pub candidates_per_step: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_secs: Option<f64>,
    pub sequences: Vec<String>,
}

impl CodebookFile {
    /// Snapshot of `codebook`; wall time is kept only when `timing` is set,
    /// so that repeated runs serialise identically by default.
    pub fn from_codebook(codebook: &Codebook, timing: bool) -> Self {
        let profile = &codebook.profile;
        CodebookFile {
            format_version: FORMAT_VERSION,
            alphabet: ALPHABET.into(),
            correction: codebook.correction.as_ref().map(|c| EditListText {
                eoi: format_eoi(&c.eoi),
                quotas: format_quotas(&c.targets),
            }),
            check: EditListText {
                eoi: format_eoi(profile.eoi()),
                quotas: format_quotas(profile.quotas()),
            },
            constraint: codebook.constraint,
            n: codebook.seq_len(),
            m: codebook.size(),
            redundancy: codebook.redundancy(),
            baseline_redundancy: codebook.baseline_redundancy(),
            seed: codebook.meta.seed,
            steps: codebook.meta.steps,
            candidates_per_step: codebook.meta.candidates_per_step,
            elapsed_secs: if timing {
                codebook.meta.elapsed.map(|d| d.as_secs_f64())
            } else {
                None
            },
            sequences: codebook
                .sequences
                .iter()
                .map(|s| String::from_utf8_lossy(s).into_owned())
                .collect(),
        }
    }

    /// Rebuilds the codebook, checking alphabet, counts, lengths and
    /// distinctness. Pair losses are not checked here.
    pub fn into_codebook(self) -> Result<Codebook> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::VersionMismatch {
                found: self.format_version,
                expected: FORMAT_VERSION,
            });
        }
        if self.alphabet != ALPHABET {
            return Err(Error::InvariantViolation(format!(
                "alphabet {:?}, expected {ALPHABET:?}",
                self.alphabet
            )));
        }
        if self.sequences.len() != self.m {
            return Err(Error::InvariantViolation(format!(
                "{} sequences listed but m = {}",
                self.sequences.len(),
                self.m
            )));
        }
        let profile = EditProfile::new(parse_eoi(&self.check.eoi)?, parse_quotas(&self.check.quotas)?)?;
        let correction = self
            .correction
            .map(|c| ErrorSpec::new(parse_eoi(&c.eoi)?, parse_quotas(&c.quotas)?))
            .transpose()?;
        if let Some(c) = &self.constraint {
            c.validate()?;
        }
        let sequences: Vec<Vec<u8>> = self.sequences.into_iter().map(String::into_bytes).collect();
        let mut seen = std::collections::HashSet::new();
        for (i, s) in sequences.iter().enumerate() {
            alphabet::validate(s)
                .map_err(|e| Error::InvariantViolation(format!("sequence {i}: {e}")))?;
            if s.len() != self.n {
                return Err(Error::InvariantViolation(format!(
                    "sequence {i} has length {}, expected n = {}",
                    s.len(),
                    self.n
                )));
            }
            if !seen.insert(s.as_slice()) {
                return Err(Error::InvariantViolation(format!("sequence {i} is duplicated")));
            }
        }
        Ok(Codebook {
            sequences,
            profile: Arc::new(profile),
            correction,
            constraint: self.constraint,
            meta: GenerationMeta {
                seed: self.seed,
                steps: self.steps,
                candidates_per_step: self.candidates_per_step,
                elapsed: self.elapsed_secs.map(Duration::from_secs_f64),
            },
        })
    }
}

pub fn to_json(codebook: &Codebook, timing: bool) -> String {
    let mut text = serde_json::to_string_pretty(&CodebookFile::from_codebook(codebook, timing))
        .expect("codebook file serialises");
    text.push('\n');
    text
}

pub fn save(codebook: &Codebook, path: impl AsRef<Path>, timing: bool) -> Result<()> {
    fs::write(path, to_json(codebook, timing))?;
    Ok(())
}

/// Loads a codebook file; with `verify` every pair is re-checked from scratch.
pub fn load(path: impl AsRef<Path>, verify: bool) -> Result<Codebook> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let file: CodebookFile = serde_json::from_str(&text).map_err(|e| Error::MalformedFile {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    let codebook = file.into_codebook()?;
    if verify {
        codebook.verify()?;
    }
    Ok(codebook)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportRow {
    pub m: usize,
    pub n: usize,
    pub redundancy: f64,
    pub baseline: f64,
}

impl ReportRow {
    pub fn new(m: usize, n: usize) -> Self {
        ReportRow {
            m,
            n,
            redundancy: redundancy(n, m),
            baseline: baseline_redundancy(n),
        }
    }

    pub fn gap(&self) -> f64 {
        self.baseline - self.redundancy
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{:.4},{:.4},{:.4}",
            self.m,
            self.n,
            self.redundancy,
            self.baseline,
            self.gap()
        )
    }
}

pub fn report(codebook: &Codebook) -> ReportRow {
    ReportRow::new(codebook.size(), codebook.seq_len())
}

pub fn write_report<W: Write>(rows: &[ReportRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{REPORT_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    Ok(())
}
