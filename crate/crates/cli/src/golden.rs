//! Golden-file comparison for scenario reports.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use similar::TextDiff;

pub fn default_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))
}

pub fn path_for(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}.json"))
}

/// Canonical text of a report: sorted keys, two-space indent, trailing newline.
pub fn canonical(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// `None` when `actual` matches the stored file, otherwise a unified diff.
pub fn compare(path: &Path, actual: &str) -> Result<Option<String>> {
    let expected = std::fs::read_to_string(path).with_context(|| format!("reading golden file {}", path.display()))?;
    if expected == actual {
        return Ok(None);
    }
    let diff = TextDiff::from_lines(expected.as_str(), actual)
        .unified_diff()
        .header(&path.display().to_string(), "actual")
        .to_string();
    Ok(Some(diff))
}

pub fn bless(path: &Path, actual: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, actual).with_context(|| format!("writing {}", path.display()))
}
