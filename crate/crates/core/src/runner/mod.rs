//! Orchestration: precompile an annotated file, build it with the system C
//! compiler, run it, and collect the region records it writes.

pub mod loc;
mod records;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{analyze_source, Diagnostic};
use crate::catalog::Backend;
use crate::codegen::{
    generate, output_names, BuildRecipe, CodegenError, FileRole, FileSpec, GenConfig, RecipeError,
    DEFAULT_JSON_PATH,
};

pub use records::{aggregate, parse_records, read_records, RegionRecord, RegionTotals, RunReport};

/// Environment variable naming the record file of an instrumented program.
pub const OUTPUT_ENV: &str = "EDPM_OUTPUT";
/// Environment variable naming the directory holding the soft runtime shim.
pub const SHIM_DIR_ENV: &str = "EDPM_SHIM_DIR";
pub const SHIM_ARCHIVE: &str = "libedpm_soft.a";
pub const SHIM_SOURCE: &str = "edpm_soft.c";

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{}", .0.join("\n"))]
    Diagnostics(Vec<String>),
    #[error(transparent)]
    Codegen(#[from] CodegenError),
    #[error("{path}: {source}")]
    Recipe { path: PathBuf, source: RecipeError },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("C compiler `{0}` not found")]
    CompilerNotFound(String),
    #[error("compilation failed: {message}")]
    CompileFailed { message: String },
    #[error("program exited with {}: {stderr}", code.map_or("a signal".to_string(), |c| format!("status {c}")))]
    ExecFailed { code: Option<i32>, stderr: String },
    #[error("cannot collect records: {0}")]
    CollectFailed(String),
    #[error("no build recipe among the generated files")]
    MissingRecipe,
}

impl RunError {
    pub fn diagnostics(path: &Path, diags: &[Diagnostic]) -> Self {
        RunError::Diagnostics(
            diags
                .iter()
                .map(|d| format!("{}:{}: {}", path.display(), d.line(), strip_line(d)))
                .collect(),
        )
    }

    /// 1 for problems with the input or the program, 2 when the
    /// environment is missing something.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::CompilerNotFound(_) | RunError::Io { .. } => 2,
            _ => 1,
        }
    }
}

fn strip_line(d: &Diagnostic) -> String {
    let text = d.to_string();
    let prefix = format!("line {}: ", d.line());
    text.strip_prefix(&prefix).unwrap_or(&text).to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub input_path: PathBuf,
    pub backend: Backend,
    /// Stop after writing the generated files.
    pub emit_only: bool,
    pub output_dir: PathBuf,
    /// Record file; defaults to `edpm_output.json` in `output_dir`.
    pub json_path: Option<PathBuf>,
    /// Compiler command, split on whitespace; defaults to `cc`.
    pub compiler_command: Option<String>,
    pub repetitions: usize,
    /// Directory with `libedpm_soft.a` or `edpm_soft.c`; falls back to
    /// `EDPM_SHIM_DIR`.
    pub shim_dir: Option<PathBuf>,
    pub keep_region_records_buffered: bool,
}

impl RunConfig {
    pub fn new(input_path: impl Into<PathBuf>, output_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            input_path: input_path.into(),
            backend: Backend::Soft,
            emit_only: false,
            output_dir: output_dir.into(),
            json_path: None,
            compiler_command: None,
            repetitions: 1,
            shim_dir: None,
            keep_region_records_buffered: false,
        }
    }

    pub fn gen_config(&self) -> GenConfig {
        GenConfig {
            backend: self.backend,
            json_output_path: DEFAULT_JSON_PATH.to_string(),
            keep_region_records_buffered: self.keep_region_records_buffered,
        }
    }

    pub fn json_path(&self) -> PathBuf {
        let p = self
            .json_path
            .clone()
            .unwrap_or_else(|| self.output_dir.join(DEFAULT_JSON_PATH));
        std::path::absolute(&p).unwrap_or(p)
    }

    fn compiler(&self) -> Vec<String> {
        let cmd = self.compiler_command.as_deref().unwrap_or("cc");
        let parts: Vec<String> = cmd.split_whitespace().map(str::to_string).collect();
        if parts.is_empty() {
            vec!["cc".to_string()]
        } else {
            parts
        }
    }

    fn shim_dir(&self) -> Option<PathBuf> {
        self.shim_dir
            .clone()
            .or_else(|| std::env::var_os(SHIM_DIR_ENV).map(PathBuf::from))
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> RunError + '_ {
    move |source| RunError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads, analyzes and generates, then writes the generated files into the
/// output directory.
pub fn precompile(config: &RunConfig) -> Result<Vec<FileSpec>, RunError> {
    let source = fs::read_to_string(&config.input_path).map_err(io_err(&config.input_path))?;
    let (_, analysis) = analyze_source(&source);
    if !analysis.is_ok() {
        return Err(RunError::diagnostics(
            &config.input_path,
            &analysis.diagnostics,
        ));
    }
    let name = config
        .input_path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input.c".to_string());
    let specs = generate(&analysis, &source, &name, &config.gen_config())?;
    fs::create_dir_all(&config.output_dir).map_err(io_err(&config.output_dir))?;
    for spec in &specs {
        let path = config.output_dir.join(&spec.path);
        fs::write(&path, spec.text()).map_err(io_err(&path))?;
    }
    Ok(specs)
}

fn run_compiler(compiler: &[String], args: &[String]) -> Result<(), RunError> {
    let output = Command::new(&compiler[0])
        .args(&compiler[1..])
        .args(args)
        .output()
        .map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => RunError::CompilerNotFound(compiler.join(" ")),
            _ => RunError::CompileFailed {
                message: e.to_string(),
            },
        })?;
    if output.status.success() {
        return Ok(());
    }
    Err(RunError::CompileFailed {
        message: format!(
            "{} {}\n{}{}",
            compiler.join(" "),
            args.join(" "),
            String::from_utf8_lossy(&output.stdout),
            String::from_utf8_lossy(&output.stderr)
        ),
    })
}

fn shim_inputs(config: &RunConfig) -> Result<Vec<String>, RunError> {
    let Some(dir) = config.shim_dir() else {
        return Err(RunError::CompileFailed {
            message: format!(
                "soft backend needs the runtime shim ({SHIM_ARCHIVE}); pass --shim-dir or set {SHIM_DIR_ENV}"
            ),
        });
    };
    if dir.join(SHIM_ARCHIVE).is_file() {
        return Ok(vec![
            format!("-L{}", dir.display()),
            "-ledpm_soft".to_string(),
        ]);
    }
    if dir.join(SHIM_SOURCE).is_file() {
        return Ok(vec![dir.join(SHIM_SOURCE).display().to_string()]);
    }
    Err(RunError::CompileFailed {
        message: format!(
            "runtime shim archive {} not found",
            dir.join(SHIM_ARCHIVE).display()
        ),
    })
}

/// Compiles the generated files per their build recipe and returns the
/// executable path.
pub fn build(filespecs: &[FileSpec], config: &RunConfig) -> Result<PathBuf, RunError> {
    let spec = filespecs
        .iter()
        .find(|f| f.role == FileRole::BuildArtifact)
        .ok_or(RunError::MissingRecipe)?;
    let recipe = match &spec.recipe {
        Some(r) => r.clone(),
        None => BuildRecipe::parse(&spec.content).map_err(|source| RunError::Recipe {
            path: config.output_dir.join(&spec.path),
            source,
        })?,
    };
    let dir = &config.output_dir;
    let exe = dir.join(&recipe.output);

    let mut args: Vec<String> = recipe.cflags.clone();
    args.extend(
        recipe
            .include_dirs
            .iter()
            .map(|d| format!("-I{}", dir.join(d).display())),
    );
    args.extend(
        recipe
            .sources
            .iter()
            .map(|s| dir.join(s).display().to_string()),
    );
    args.push("-o".into());
    args.push(exe.display().to_string());
    for lib in &recipe.link_libs {
        if recipe.backend == Backend::Soft && lib == "edpm_soft" {
            args.extend(shim_inputs(config)?);
        } else {
            args.push(format!("-l{lib}"));
        }
    }
    run_compiler(&config.compiler(), &args)?;
    Ok(exe)
}

/// Compiles the annotated source as-is, pragmas and all, with the same
/// flags the instrumented build uses.
pub fn build_uninstrumented(config: &RunConfig) -> Result<PathBuf, RunError> {
    let names = output_names(&config.input_path.to_string_lossy());
    fs::create_dir_all(&config.output_dir).map_err(io_err(&config.output_dir))?;
    let exe = config.output_dir.join(format!("{}.plain", names.stem));
    let args = vec![
        "-O2".to_string(),
        config.input_path.display().to_string(),
        "-o".to_string(),
        exe.display().to_string(),
    ];
    run_compiler(&config.compiler(), &args)?;
    Ok(exe)
}

fn run_once(executable: &Path, config: &RunConfig, json: &Path) -> Result<f64, RunError> {
    let _ = fs::remove_file(json);
    let start = Instant::now();
    let output = Command::new(executable)
        .env(OUTPUT_ENV, json)
        .current_dir(&config.output_dir)
        .output()
        .map_err(io_err(executable))?;
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    if !output.status.success() {
        return Err(RunError::ExecFailed {
            code: output.status.code(),
            stderr: String::from_utf8_lossy(&output.stderr).into_owned(),
        });
    }
    Ok(elapsed)
}

/// Runs the program `repetitions` times and parses the record file after
/// each run. The report keeps the records of the last run.
pub fn run_and_collect(executable: &Path, config: &RunConfig) -> Result<RunReport, RunError> {
    let json = config.json_path();
    let mut report = RunReport::default();
    for _ in 0..config.repetitions.max(1) {
        report.wall_times.push(run_once(executable, config, &json)?);
        report.records = read_records(&json)?;
    }
    report.per_region_totals = aggregate(&report.records);
    Ok(report)
}

/// Wall-clock comparison of the instrumented program against the same
/// source compiled without instrumentation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OverheadReport {
    pub repetitions: usize,
    pub uninstrumented_ms: Vec<f64>,
    pub instrumented_ms: Vec<f64>,
    pub uninstrumented_mean_ms: f64,
    pub instrumented_mean_ms: f64,
    /// instrumented mean / uninstrumented mean
    pub ratio: f64,
}

pub fn bench(config: &RunConfig) -> Result<OverheadReport, RunError> {
    let specs = precompile(config)?;
    let instrumented = build(&specs, config)?;
    let plain = build_uninstrumented(config)?;
    let reps = config.repetitions.max(1);

    let mut uninstrumented_ms = Vec::with_capacity(reps);
    let mut instrumented_ms = Vec::with_capacity(reps);
    let json = config.json_path();
    for _ in 0..reps {
        uninstrumented_ms.push(run_once(&plain, config, &json)?);
        instrumented_ms.push(run_once(&instrumented, config, &json)?);
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let uninstrumented_mean_ms = mean(&uninstrumented_ms);
    let instrumented_mean_ms = mean(&instrumented_ms);
    Ok(OverheadReport {
        repetitions: reps,
        ratio: instrumented_mean_ms / uninstrumented_mean_ms,
        uninstrumented_ms,
        instrumented_ms,
        uninstrumented_mean_ms,
        instrumented_mean_ms,
    })
}
