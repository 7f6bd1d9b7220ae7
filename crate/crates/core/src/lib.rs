//! Precompiler for `#pragma edpm` performance-monitoring annotations.
//!
//! The pipeline is reader → analysis → codegen, followed by the runner which
//! builds and executes the instrumented program and collects its JSON
//! region records.

pub mod analysis;
pub mod catalog;
pub mod codegen;
pub mod reader;
pub mod runner;

pub use analysis::{analyze, analyze_source, AnalysisResult, Diagnostic};
pub use catalog::{Backend, CounterId, CounterType};
pub use codegen::{generate, FileRole, FileSpec, GenConfig};
pub use reader::{scan, Directive, DirectiveKind};
