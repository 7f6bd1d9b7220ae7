//! Lines-of-code comparison between annotated sources, generated code, and
//! hand-written PAPI equivalents.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::RunError;
use crate::catalog::Backend;
use crate::codegen::{generate, FileRole, FileSpec, GenConfig};
use crate::reader::is_pragma_line;

/// Reference ratios reported alongside our own numbers. They depend on how
/// the generator and the comparison programs are written, so they are never
/// used as pass/fail bounds.
pub const REFERENCE_GENERATED_PER_ANNOTATION_STATIC: f64 = 12.69;
pub const REFERENCE_GENERATED_PER_ANNOTATION_DYNAMIC: f64 = 13.15;
pub const REFERENCE_PAPI_LL_PER_ANNOTATION: (f64, f64) = (3.3, 4.3);

pub fn non_blank_lines(text: &str) -> usize {
    text.lines().filter(|l| !l.trim().is_empty()).count()
}

pub fn pragma_lines(text: &str) -> usize {
    text.lines().filter(|l| is_pragma_line(l)).count()
}

/// Replaces every EDPM pragma line with an empty line, keeping numbering.
pub fn strip_pragmas(text: &str) -> String {
    text.split_inclusive('\n')
        .map(|raw| {
            let body = raw.trim_end_matches(['\n', '\r']);
            if is_pragma_line(body) {
                &raw[body.len()..]
            } else {
                raw
            }
        })
        .collect()
}

fn ratio(num: usize, den: usize) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocReport {
    pub file: String,
    pub annotation_loc: usize,
    pub original_loc: usize,
    pub generated_loc: usize,
    pub generated_per_annotation: Option<f64>,
    pub generated_per_original: Option<f64>,
}

pub fn loc_report(file: &str, original_source: &str, generated: &[FileSpec]) -> LocReport {
    let annotation_loc = pragma_lines(original_source);
    let original_loc = non_blank_lines(original_source);
    let generated_loc = generated
        .iter()
        .filter(|f| matches!(f.role, FileRole::Header | FileRole::Source))
        .map(|f| non_blank_lines(&f.content))
        .sum();
    LocReport {
        file: file.to_string(),
        annotation_loc,
        original_loc,
        generated_loc,
        generated_per_annotation: ratio(generated_loc, annotation_loc),
        generated_per_original: ratio(generated_loc, original_loc),
    }
}

/// One configuration (E1..E4) of one sample set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigurationLoc {
    pub configuration: String,
    pub edpm: LocReport,
    /// Instrumentation lines in the PAPI low-level version: its non-blank
    /// lines minus those of the un-annotated program.
    pub papi_low_level_loc: Option<usize>,
    pub papi_high_level_loc: Option<usize>,
    pub papi_low_level_per_annotation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSetLoc {
    pub set: String,
    pub configurations: Vec<ConfigurationLoc>,
    pub annotation_loc_total: usize,
    pub mean_generated_per_annotation: Option<f64>,
    pub mean_papi_low_level_per_annotation: Option<f64>,
    pub reference_generated_per_annotation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusLocReport {
    pub sets: Vec<SampleSetLoc>,
    /// True when every configuration needs the same number of annotation
    /// lines in the static and dynamic sets.
    pub annotation_loc_identical: bool,
    pub reference_papi_low_level_per_annotation: (f64, f64),
    pub note: String,
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let v: Vec<f64> = values.collect();
    (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64)
}

fn read(path: &Path) -> Result<String, RunError> {
    std::fs::read_to_string(path).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn c_files(dir: &Path) -> Result<Vec<PathBuf>, RunError> {
    let entries = std::fs::read_dir(dir).map_err(|source| RunError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "c"))
        .collect();
    files.sort();
    Ok(files)
}

/// Generates code for one annotated file and counts it.
pub fn loc_for_file(path: &Path, backend: Backend) -> Result<LocReport, RunError> {
    let source = read(path)?;
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let (_, analysis) = crate::analysis::analyze_source(&source);
    if !analysis.is_ok() {
        return Err(RunError::diagnostics(path, &analysis.diagnostics));
    }
    let specs = generate(&analysis, &source, &name, &GenConfig::new(backend))?;
    Ok(loc_report(&name, &source, &specs))
}

fn sample_set(corpus: &Path, set: &str, backend: Backend) -> Result<SampleSetLoc, RunError> {
    let mut configurations = Vec::new();
    for path in c_files(&corpus.join(set))? {
        let file_name = path.file_name().unwrap().to_string_lossy().into_owned();
        let configuration = file_name.trim_end_matches(".c").to_string();
        let edpm = loc_for_file(&path, backend)?;
        let baseline = non_blank_lines(&strip_pragmas(&read(&path)?));

        let hand_written = |flavour: &str| -> Result<Option<usize>, RunError> {
            let p = corpus.join(flavour).join(set).join(&file_name);
            if !p.exists() {
                return Ok(None);
            }
            Ok(Some(non_blank_lines(&read(&p)?).saturating_sub(baseline)))
        };
        let papi_low_level_loc = hand_written("papi_ll")?;
        let papi_high_level_loc = hand_written("papi_hl")?;
        configurations.push(ConfigurationLoc {
            configuration,
            papi_low_level_per_annotation: papi_low_level_loc
                .and_then(|ll| ratio(ll, edpm.annotation_loc)),
            edpm,
            papi_low_level_loc,
            papi_high_level_loc,
        });
    }
    Ok(SampleSetLoc {
        set: set.to_string(),
        annotation_loc_total: configurations.iter().map(|c| c.edpm.annotation_loc).sum(),
        mean_generated_per_annotation: mean(
            configurations
                .iter()
                .filter_map(|c| c.edpm.generated_per_annotation),
        ),
        mean_papi_low_level_per_annotation: mean(
            configurations
                .iter()
                .filter_map(|c| c.papi_low_level_per_annotation),
        ),
        reference_generated_per_annotation: if set == "dynamic" {
            REFERENCE_GENERATED_PER_ANNOTATION_DYNAMIC
        } else {
            REFERENCE_GENERATED_PER_ANNOTATION_STATIC
        },
        configurations,
    })
}

/// LOC comparison over a corpus laid out as `static/`, `dynamic/`,
/// `papi_ll/{static,dynamic}/` and `papi_hl/static/`.
pub fn corpus_loc_report(corpus: &Path, backend: Backend) -> Result<CorpusLocReport, RunError> {
    let stat = sample_set(corpus, "static", backend)?;
    let dynamic = sample_set(corpus, "dynamic", backend)?;
    let same_configurations = stat
        .configurations
        .iter()
        .map(|c| &c.configuration)
        .eq(dynamic.configurations.iter().map(|c| &c.configuration));
    let annotation_loc_identical = same_configurations
        && stat
            .configurations
            .iter()
            .zip(&dynamic.configurations)
            .all(|(s, d)| s.edpm.annotation_loc == d.edpm.annotation_loc);
    Ok(CorpusLocReport {
        sets: vec![stat, dynamic],
        annotation_loc_identical,
        reference_papi_low_level_per_annotation: REFERENCE_PAPI_LL_PER_ANNOTATION,
        note: "reference ratios are informational; generated and hand-written LOC depend on \
               code style, so no tolerance is applied"
            .to_string(),
    })
}

fn fmt_ratio(r: Option<f64>) -> String {
    r.map(|v| format!("{v:.2}")).unwrap_or_else(|| "-".into())
}

fn fmt_count(c: Option<usize>) -> String {
    c.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

/// Left-aligned first column, right-aligned numbers.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, w))| {
                if i == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(header.to_vec(), &mut out);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    let _ = writeln!(out, "{}", rule.join("  "));
    for row in rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

impl LocReport {
    pub fn to_table(&self) -> String {
        table(
            &[
                "file",
                "annotation",
                "original",
                "generated",
                "gen/ann",
                "gen/orig",
            ],
            &[vec![
                self.file.clone(),
                self.annotation_loc.to_string(),
                self.original_loc.to_string(),
                self.generated_loc.to_string(),
                fmt_ratio(self.generated_per_annotation),
                fmt_ratio(self.generated_per_original),
            ]],
        )
    }
}

impl CorpusLocReport {
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for set in &self.sets {
            let _ = writeln!(out, "{} set", set.set);
            let rows: Vec<Vec<String>> = set
                .configurations
                .iter()
                .map(|c| {
                    vec![
                        c.configuration.clone(),
                        c.edpm.annotation_loc.to_string(),
                        c.edpm.generated_loc.to_string(),
                        fmt_ratio(c.edpm.generated_per_annotation),
                        fmt_count(c.papi_high_level_loc),
                        fmt_count(c.papi_low_level_loc),
                        fmt_ratio(c.papi_low_level_per_annotation),
                    ]
                })
                .collect();
            out.push_str(&table(
                &[
                    "configuration",
                    "edpm",
                    "generated",
                    "gen/edpm",
                    "papi-hl",
                    "papi-ll",
                    "ll/edpm",
                ],
                &rows,
            ));
            let _ = writeln!(
                out,
                "mean gen/edpm {} (reference {:.2}), mean ll/edpm {}\n",
                fmt_ratio(set.mean_generated_per_annotation),
                set.reference_generated_per_annotation,
                fmt_ratio(set.mean_papi_low_level_per_annotation),
            );
        }
        let (lo, hi) = self.reference_papi_low_level_per_annotation;
        let _ = writeln!(
            out,
            "annotation LOC identical across sets: {}",
            if self.annotation_loc_identical {
                "yes"
            } else {
                "no"
            }
        );
        let _ = writeln!(out, "reference ll/edpm range: {lo:.1}-{hi:.1}");
        let _ = writeln!(out, "note: {}", self.note);
        out
    }
}
