use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use serde::Deserialize;

use super::IoError;
use crate::dimers::{Logical, LogicalInputs};

/// Largest depth run without `--allow-large`.
pub const MAX_STEPS: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogicalSpec {
    AllZero,
    AllOne,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub tiling: (u32, u32),
    pub steps: u32,
    pub logical: LogicalSpec,
    /// Boundary site that is reported as site 0.
    pub seed_anchor: usize,
    pub output_dir: PathBuf,
    pub formats: BTreeSet<Format>,
    pub fit_range: Option<(usize, usize)>,
    pub rng_seed: u64,
    pub allow_large: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            tiling: (5, 4),
            steps: 4,
            logical: LogicalSpec::AllZero,
            seed_anchor: 0,
            output_dir: PathBuf::from("out"),
            formats: [Format::Json, Format::Csv, Format::Svg].into(),
            fit_range: None,
            rng_seed: 0,
            allow_large: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), IoError> {
        if self.steps > MAX_STEPS && !self.allow_large {
            return Err(IoError::Usage(format!(
                "--steps {} exceeds {MAX_STEPS}; pass --allow-large to run it anyway",
                self.steps
            )));
        }
        if let Some((lo, hi)) = self.fit_range {
            if lo > hi {
                return Err(IoError::Usage(format!("empty fit range {lo},{hi}")));
            }
        }
        Ok(())
    }

    pub fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }

    pub fn logical_inputs(&self) -> Result<LogicalInputs, IoError> {
        match &self.logical {
            LogicalSpec::AllZero => Ok(LogicalInputs::all(Logical::Zero)),
            LogicalSpec::AllOne => Ok(LogicalInputs::all(Logical::One)),
            LogicalSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| IoError::file(format!("reading {}", path.display()), e))?;
                parse_logical_file(&text)
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LogicalFile {
    List(Vec<u8>),
    Map(BTreeMap<String, u8>),
}

/// A JSON array of 0/1 values by tile id, or an object from tile id to 0/1
/// (unlisted tiles default to 0).
pub fn parse_logical_file(text: &str) -> Result<LogicalInputs, IoError> {
    let parsed: LogicalFile = serde_json::from_str(text)
        .map_err(|e| IoError::Usage(format!("logical file: {e}")))?;
    let bad = |e: crate::dimers::DimerError| IoError::Usage(format!("logical file: {e}"));
    let mut inputs = LogicalInputs::default();
    match parsed {
        LogicalFile::List(values) => {
            for (tile, v) in values.into_iter().enumerate() {
                inputs.overrides.insert(tile, Logical::try_from(v).map_err(bad)?);
            }
        }
        LogicalFile::Map(map) => {
            for (key, v) in map {
                let tile = key
                    .parse()
                    .map_err(|_| IoError::Usage(format!("logical file: tile id {key:?}")))?;
                inputs.overrides.insert(tile, Logical::try_from(v).map_err(bad)?);
            }
        }
    }
    Ok(inputs)
}

pub fn parse_tiling(s: &str) -> Result<(u32, u32), String> {
    let (n, k) = s.split_once(',').ok_or_else(|| format!("expected n,k, got {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad n in {s:?}"))?;
    let k = k.trim().parse().map_err(|_| format!("bad k in {s:?}"))?;
    Ok((n, k))
}

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(',').ok_or_else(|| format!("expected LO,HI, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|_| format!("bad LO in {s:?}"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad HI in {s:?}"))?;
    Ok((lo, hi))
}

pub fn parse_logical(s: &str) -> Result<LogicalSpec, String> {
    match s {
        "all0" => Ok(LogicalSpec::AllZero),
        "all1" => Ok(LogicalSpec::AllOne),
        other => other
            .strip_prefix("file:")
            .map(|p| LogicalSpec::File(PathBuf::from(p)))
            .ok_or_else(|| format!("expected all0, all1 or file:<path>, got {other:?}")),
    }
}

pub fn parse_formats(s: &str) -> Result<BTreeSet<Format>, String> {
    s.split(',')
        .map(|f| match f.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            other => Err(format!("unknown format {other:?}")),
        })
        .collect()
}
