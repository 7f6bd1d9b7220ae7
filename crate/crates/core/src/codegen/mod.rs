//! Lowering of an analysis result into an instrumented C source file, a
//! support header, and a build recipe.

mod header;
mod lower;
mod recipe;
mod render;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::AnalysisResult;
use crate::catalog::{Backend, CatalogError};
use crate::reader::SourcePosition;

pub use header::SOFT_SHIM_API;
pub use lower::lower;
pub use recipe::{BuildRecipe, RecipeError};
pub use render::render;

pub const DEFAULT_JSON_PATH: &str = "edpm_output.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenConfig {
    pub backend: Backend,
    /// Record file written by the instrumented program unless `EDPM_OUTPUT`
    /// is set in its environment.
    pub json_output_path: String,
    /// When false every record is flushed as soon as it is written.
    pub keep_region_records_buffered: bool,
}

impl GenConfig {
    pub fn new(backend: Backend) -> Self {
        GenConfig {
            backend,
            json_output_path: DEFAULT_JSON_PATH.to_string(),
            keep_region_records_buffered: false,
        }
    }
}

/// Generated statements that replace one pragma line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFragment {
    pub position: SourcePosition,
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FileRole {
    Header,
    Source,
    BuildArtifact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FileSpec {
    pub role: FileRole,
    /// Path relative to the output directory.
    pub path: String,
    /// File text; empty for the build artifact, which carries `recipe`.
    pub content: String,
    pub recipe: Option<BuildRecipe>,
}

impl FileSpec {
    /// Bytes to write to disk for this file.
    pub fn text(&self) -> String {
        match &self.recipe {
            Some(r) => r.to_manifest(),
            None => self.content.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodegenError {
    #[error("line {line}: {source}")]
    Unsupported { line: u32, source: CatalogError },
    #[error("line {line}: two fragments claim the same line")]
    PositionCollision { line: u32 },
    #[error("line {line}: fragment position is past the end of the source")]
    PositionOutOfRange { line: u32 },
    #[error("analysis has diagnostics; nothing to generate")]
    InvalidAnalysis,
}

/// Output file names for an input file name: `matmul.c` gives
/// `matmul.edpm.h`, `matmul.edpm.c`, `matmul.edpm.build` and `matmul.edpm`.
pub fn output_names(source_name: &str) -> OutputNames {
    let base = source_name
        .rsplit(['/', '\\'])
        .next()
        .unwrap_or(source_name);
    let stem = match base.rsplit_once('.') {
        Some((s, _)) if !s.is_empty() => s,
        _ => base,
    };
    OutputNames {
        header: format!("{stem}.edpm.h"),
        source: format!("{stem}.edpm.c"),
        build: format!("{stem}.edpm.build"),
        executable: format!("{stem}.edpm"),
        original: base.to_string(),
        stem: stem.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputNames {
    pub header: String,
    pub source: String,
    pub build: String,
    pub executable: String,
    pub original: String,
    pub stem: String,
}

/// Lowers all IR and merges the results into one fragment per pragma line,
/// indented like the pragma it replaces.
pub fn fragments(
    analysis: &AnalysisResult,
    source: &str,
    config: &GenConfig,
) -> Result<Vec<CodeFragment>, CodegenError> {
    let lines: Vec<&str> = source.lines().collect();
    let mut merged: BTreeMap<u32, Vec<String>> = BTreeMap::new();
    for ir in &analysis.ir {
        let frag = lower(ir, analysis, config)?;
        merged
            .entry(frag.position.line)
            .or_default()
            .push(frag.text);
    }
    merged
        .into_iter()
        .map(|(line, parts)| {
            let pragma = lines
                .get(line as usize - 1)
                .ok_or(CodegenError::PositionOutOfRange { line })?;
            let indent: String = pragma.chars().take_while(|c| c.is_whitespace()).collect();
            let text = parts
                .join("\n")
                .lines()
                .map(|l| format!("{indent}{l}"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(CodeFragment {
                position: SourcePosition::new(line),
                text,
            })
        })
        .collect()
}

/// Produces the header, the instrumented source and the build recipe.
pub fn generate(
    analysis: &AnalysisResult,
    original_source: &str,
    source_name: &str,
    config: &GenConfig,
) -> Result<Vec<FileSpec>, CodegenError> {
    if !analysis.is_ok() {
        return Err(CodegenError::InvalidAnalysis);
    }
    let names = output_names(source_name);
    let frags = fragments(analysis, original_source, config)?;
    let body = render(original_source, &frags)?;
    let source = format!(
        "#include \"{}\"\n#line 1 \"{}\"\n{}",
        names.header, names.original, body
    );
    let header = header::render_header(analysis, &names, config);
    let recipe = BuildRecipe::for_backend(config.backend, &names);

    Ok(vec![
        FileSpec {
            role: FileRole::Header,
            path: names.header.clone(),
            content: header,
            recipe: None,
        },
        FileSpec {
            role: FileRole::Source,
            path: names.source.clone(),
            content: source,
            recipe: None,
        },
        FileSpec {
            role: FileRole::BuildArtifact,
            path: names.build.clone(),
            content: String::new(),
            recipe: Some(recipe),
        },
    ])
}
