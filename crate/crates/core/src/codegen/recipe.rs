use std::fmt::Write;

use serde::Serialize;
use thiserror::Error;

use super::OutputNames;
use crate::catalog::Backend;

/// Compile recipe for the instrumented program, stored on disk as a small
/// `key=value` manifest. List values are space separated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuildRecipe {
    pub backend: Backend,
    pub original: String,
    pub sources: Vec<String>,
    pub include_dirs: Vec<String>,
    pub cflags: Vec<String>,
    pub link_libs: Vec<String>,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecipeError {
    #[error("manifest line {0}: expected key=value")]
    Syntax(usize),
    #[error("manifest key `{0}` is missing")]
    MissingKey(&'static str),
    #[error("manifest has unknown backend `{0}`")]
    UnknownBackend(String),
}

impl BuildRecipe {
    pub fn for_backend(backend: Backend, names: &OutputNames) -> Self {
        let link_libs = match backend {
            Backend::Papi => vec!["papi".to_string()],
            Backend::Soft => vec!["edpm_soft".to_string()],
        };
        BuildRecipe {
            backend,
            original: names.original.clone(),
            sources: vec![names.source.clone()],
            include_dirs: vec![".".to_string()],
            cflags: vec!["-O2".to_string()],
            link_libs,
            output: names.executable.clone(),
        }
    }

    pub fn to_manifest(&self) -> String {
        let mut out = String::from("# edpm build recipe\n");
        let _ = writeln!(out, "backend={}", self.backend);
        let _ = writeln!(out, "original={}", self.original);
        let _ = writeln!(out, "sources={}", self.sources.join(" "));
        let _ = writeln!(out, "include_dirs={}", self.include_dirs.join(" "));
        let _ = writeln!(out, "cflags={}", self.cflags.join(" "));
        let _ = writeln!(out, "link_libs={}", self.link_libs.join(" "));
        let _ = writeln!(out, "output={}", self.output);
        out
    }

    pub fn parse(text: &str) -> Result<Self, RecipeError> {
        let mut backend = None;
        let mut original = None;
        let mut sources = None;
        let mut include_dirs = Vec::new();
        let mut cflags = Vec::new();
        let mut link_libs = Vec::new();
        let mut output = None;
        let list = |v: &str| v.split_whitespace().map(str::to_string).collect::<Vec<_>>();

        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(RecipeError::Syntax(i + 1))?;
            let value = value.trim();
            match key.trim() {
                "backend" => {
                    backend = Some(match value {
                        "papi" => Backend::Papi,
                        "soft" => Backend::Soft,
                        other => return Err(RecipeError::UnknownBackend(other.to_string())),
                    })
                }
                "original" => original = Some(value.to_string()),
                "sources" => sources = Some(list(value)),
                "include_dirs" => include_dirs = list(value),
                "cflags" => cflags = list(value),
                "link_libs" => link_libs = list(value),
                "output" => output = Some(value.to_string()),
                // unknown keys are ignored so newer manifests still load
                _ => {}
            }
        }
        Ok(BuildRecipe {
            backend: backend.ok_or(RecipeError::MissingKey("backend"))?,
            original: original.unwrap_or_default(),
            sources: sources.ok_or(RecipeError::MissingKey("sources"))?,
            include_dirs,
            cflags,
            link_libs,
            output: output.ok_or(RecipeError::MissingKey("output"))?,
        })
    }
}
