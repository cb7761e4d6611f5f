//! The bundled fixture corpus and its manifest.
//!
//! Each manifest line names a fixture, its `.vmos` file relative to the
//! corpus root, the crossing number of the knot it shows, and optionally the
//! expected surface genus and intersection index polynomial (`-` when not
//! recorded). Lines starting with `#` are comments.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::indexpoly;
use crate::mosaic::Mosaic;
use crate::surface;
use crate::trace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub crossings: usize,
    pub genus: Option<usize>,
    pub poly: Option<String>,
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: &str| Error::Syntax { line: i + 1, message: message.to_string() };
        let words: Vec<&str> = line.split_whitespace().collect();
        let [name, file, crossings, genus, poly] = words[..] else {
            return Err(bad("expected five columns"));
        };
        let optional = |w: &str| (w != "-").then(|| w.to_string());
        out.push(ManifestEntry {
            name: name.to_string(),
            file: file.to_string(),
            crossings: crossings.parse().map_err(|_| bad("crossings is not a number"))?,
            genus: optional(genus).map(|g| g.parse().map_err(|_| bad("genus is not a number"))).transpose()?,
            poly: optional(poly),
        });
    }
    Ok(out)
}

pub fn load_manifest(root: &Path) -> Result<Vec<ManifestEntry>> {
    let path = root.join("manifest.txt");
    let text = std::fs::read_to_string(&path).map_err(|_| Error::FixtureMissing(path.display().to_string()))?;
    parse_manifest(&text)
}

pub fn load_fixture(root: &Path, entry: &ManifestEntry) -> Result<Mosaic> {
    let path: PathBuf = root.join(&entry.file);
    let text = std::fs::read_to_string(&path).map_err(|_| Error::FixtureMissing(path.display().to_string()))?;
    Mosaic::parse(&text).map_err(|e| Error::FixtureMismatch(format!("{}: {e}", entry.name)))
}

/// Checks one fixture against its manifest line, returning every problem.
pub fn check_entry(root: &Path, entry: &ManifestEntry) -> Vec<Error> {
    let m = match load_fixture(root, entry) {
        Ok(m) => m,
        Err(e) => return vec![e],
    };
    let mismatch = |what: String| Error::FixtureMismatch(format!("{}: {what}", entry.name));
    let report = m.validate();
    if !report.is_valid() {
        return vec![mismatch(report.to_string())];
    }
    let mut problems = Vec::new();
    let t = match trace::trace(&m) {
        Ok(t) => t,
        Err(e) => return vec![mismatch(e.to_string())],
    };
    if t.components() != 1 {
        problems.push(mismatch(format!("{} components", t.components())));
    }
    if t.crossing_count() != entry.crossings {
        problems.push(mismatch(format!("{} crossings, expected {}", t.crossing_count(), entry.crossings)));
    }
    if let Some(g) = entry.genus {
        let got = surface::report(&m).genus;
        if got != g {
            problems.push(mismatch(format!("genus {got}, expected {g}")));
        }
    }
    if let Some(p) = &entry.poly {
        match indexpoly::index_polynomial(&m) {
            Ok(got) if got.to_string() == *p => {}
            Ok(got) => problems.push(mismatch(format!("polynomial {got}, expected {p}"))),
            Err(e) => problems.push(mismatch(e.to_string())),
        }
    }
    problems
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub checked: usize,
    pub problems: Vec<Error>,
}

impl FixtureReport {
    pub fn is_ok(&self) -> bool {
        self.problems.is_empty()
    }

    /// `Ok` when every fixture passed, otherwise the itemized mismatches.
    pub fn into_result(self) -> Result<usize> {
        if self.is_ok() {
            return Ok(self.checked);
        }
        let items: Vec<String> = self.problems.iter().map(|p| p.to_string()).collect();
        Err(Error::FixtureMismatch(items.join("; ")))
    }
}

pub fn check_fixtures(root: &Path) -> Result<FixtureReport> {
    let entries = load_manifest(root)?;
    let problems: Vec<Error> = entries.par_iter().flat_map_iter(|e| check_entry(root, e)).collect();
    Ok(FixtureReport { checked: entries.len(), problems })
}

/// The corpus shipped with the repository.
pub fn default_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}
