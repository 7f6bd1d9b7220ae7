//! Semantic analysis: validation, clause normalization, block and region
//! discovery, and lowering to the instrumentation IR.

mod collect;
mod dump;
mod validate;

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexMap;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{self, CatalogError, CounterId};
use crate::reader::{Directive, DirectiveKind, ParseError, SourcePosition};

pub use collect::{collect_blocks, collect_regions};
pub use validate::validate;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind")]
pub enum Diagnostic {
    #[error("line {line}: {error}")]
    Parse { line: u32, error: ParseError },
    #[error("line {line}: duplicate `init` (first at line {first})")]
    DuplicateInit { first: u32, line: u32 },
    #[error("line {line}: no `init` directive in file")]
    MissingInit { line: u32 },
    #[error("line {line}: duplicate `deinit` (first at line {first})")]
    DuplicateDeinit { first: u32, line: u32 },
    #[error("line {line}: no `deinit` directive in file")]
    MissingDeinit { line: u32 },
    #[error("line {line}: region `{name}` already started at line {first}")]
    DuplicateRegionName { name: String, first: u32, line: u32 },
    #[error("line {line}: `{counter}` specified more than once for region `{region}`")]
    DuplicateCounterSpec {
        region: String,
        counter: String,
        line: u32,
    },
    #[error("line {line}: `stop {name}` has no matching start")]
    UnmatchedStop { name: String, line: u32 },
    #[error("line {line}: region `{name}` is never stopped")]
    UnclosedRegion { name: String, line: u32 },
    #[error("line {line}: directive outside the init/deinit span")]
    DirectiveOutsideInitSpan { line: u32 },
    #[error("line {line}: unknown counter type `{counter_type}`")]
    UnknownType { counter_type: String, line: u32 },
    #[error("line {line}: unknown counter `{counter}` for type `{counter_type}`")]
    UnknownCounter {
        counter_type: String,
        counter: String,
        line: u32,
    },
    #[error("line {line}: region `{name}` maps to the same C identifier as `{other}`")]
    BindingCollision {
        name: String,
        other: String,
        line: u32,
    },
}

impl Diagnostic {
    pub fn line(&self) -> u32 {
        match self {
            Diagnostic::Parse { line, .. }
            | Diagnostic::DuplicateInit { line, .. }
            | Diagnostic::MissingInit { line }
            | Diagnostic::DuplicateDeinit { line, .. }
            | Diagnostic::MissingDeinit { line }
            | Diagnostic::DuplicateRegionName { line, .. }
            | Diagnostic::DuplicateCounterSpec { line, .. }
            | Diagnostic::UnmatchedStop { line, .. }
            | Diagnostic::UnclosedRegion { line, .. }
            | Diagnostic::DirectiveOutsideInitSpan { line }
            | Diagnostic::UnknownType { line, .. }
            | Diagnostic::UnknownCounter { line, .. }
            | Diagnostic::BindingCollision { line, .. } => *line,
        }
    }

    /// Variant name, handy for tests and machine-readable output.
    pub fn class(&self) -> &'static str {
        match self {
            Diagnostic::Parse { .. } => "Parse",
            Diagnostic::DuplicateInit { .. } => "DuplicateInit",
            Diagnostic::MissingInit { .. } => "MissingInit",
            Diagnostic::DuplicateDeinit { .. } => "DuplicateDeinit",
            Diagnostic::MissingDeinit { .. } => "MissingDeinit",
            Diagnostic::DuplicateRegionName { .. } => "DuplicateRegionName",
            Diagnostic::DuplicateCounterSpec { .. } => "DuplicateCounterSpec",
            Diagnostic::UnmatchedStop { .. } => "UnmatchedStop",
            Diagnostic::UnclosedRegion { .. } => "UnclosedRegion",
            Diagnostic::DirectiveOutsideInitSpan { .. } => "DirectiveOutsideInitSpan",
            Diagnostic::UnknownType { .. } => "UnknownType",
            Diagnostic::UnknownCounter { .. } => "UnknownCounter",
            Diagnostic::BindingCollision { .. } => "BindingCollision",
        }
    }
}

impl From<ParseError> for Diagnostic {
    fn from(error: ParseError) -> Self {
        Diagnostic::Parse {
            line: error.line,
            error,
        }
    }
}

/// A directive whose clauses have been resolved against the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpandedDirective {
    pub kind: DirectiveKind,
    pub region_name: Option<String>,
    pub counters: BTreeSet<CounterId>,
    pub position: SourcePosition,
}

impl ExpandedDirective {
    pub fn line(&self) -> u32 {
        self.position.line
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Span {
    pub start: SourcePosition,
    pub stop: SourcePosition,
}

/// A maximal run of source lines during which at least one region is active.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub ordinal: usize,
    pub span: Span,
    /// Union of the counters of every region in the block, canonical order.
    pub counters: Vec<CounterId>,
    pub eventset_binding: String,
    pub values_binding: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockIndex {
    pub block_ordinal: usize,
    /// Offsets into the block's values array, one per region counter.
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionInfo {
    pub name: String,
    pub span: Span,
    pub counters: Vec<CounterId>,
    pub block_index: BlockIndex,
    pub values_binding: String,
    pub temporal_binding: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrAction {
    LibInit,
    LibDeinit,
    BlockCreate,
    BlockStart,
    BlockAccumulate,
    BlockPause,
    BlockResume,
    BlockStopDestroy,
    RegionCopyStart,
    RegionComputeEmit,
    RegionBumpTemporal,
}

impl IrAction {
    pub fn name(self) -> &'static str {
        match self {
            IrAction::LibInit => "lib-init",
            IrAction::LibDeinit => "lib-deinit",
            IrAction::BlockCreate => "block-create",
            IrAction::BlockStart => "block-start",
            IrAction::BlockAccumulate => "block-accumulate",
            IrAction::BlockPause => "block-pause",
            IrAction::BlockResume => "block-resume",
            IrAction::BlockStopDestroy => "block-stop-destroy",
            IrAction::RegionCopyStart => "region-copy-start",
            IrAction::RegionComputeEmit => "region-compute-emit",
            IrAction::RegionBumpTemporal => "region-bump-temporal",
        }
    }
}

impl fmt::Display for IrAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IrTarget {
    Library,
    Block(usize),
    Region(String),
}

impl fmt::Display for IrTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrTarget::Library => f.write_str("library"),
            IrTarget::Block(n) => write!(f, "block {n}"),
            IrTarget::Region(name) => write!(f, "region {name}"),
        }
    }
}

/// One instrumentation action, placed at the line of the directive that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrDirective {
    pub action: IrAction,
    pub target: IrTarget,
    pub position: SourcePosition,
}

pub type RegionTable = IndexMap<String, RegionInfo>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AnalysisResult {
    pub blocks: Vec<Block>,
    pub region_table: RegionTable,
    pub ir: Vec<IrDirective>,
    pub diagnostics: Vec<Diagnostic>,
}

impl AnalysisResult {
    pub fn is_ok(&self) -> bool {
        self.diagnostics.is_empty()
    }

    fn failed(diagnostics: Vec<Diagnostic>) -> Self {
        AnalysisResult {
            diagnostics,
            ..Default::default()
        }
    }

    /// IR actions emitted at `line`, in emission order.
    pub fn actions_at(&self, line: u32) -> Vec<IrAction> {
        self.ir
            .iter()
            .filter(|d| d.position.line == line)
            .map(|d| d.action)
            .collect()
    }
}

/// Maps a region name onto a C identifier fragment.
pub fn sanitize(name: &str) -> String {
    name.replace('-', "_")
}

pub fn eventset_binding(block: usize) -> String {
    format!("__edpm_es_{block}")
}

pub fn block_values_binding(block: usize) -> String {
    format!("__edpm_bv_{block}")
}

pub fn region_values_binding(name: &str) -> String {
    format!("__edpm_rv_{}", sanitize(name))
}

pub fn temporal_binding(name: &str) -> String {
    format!("__edpm_tid_{}", sanitize(name))
}

/// Resolves every clause through the catalog. A start without clauses gets
/// the full catalog.
pub fn normalize(directives: &[Directive]) -> Result<Vec<ExpandedDirective>, Vec<Diagnostic>> {
    let mut out = Vec::with_capacity(directives.len());
    let mut errors = Vec::new();
    for d in directives {
        let mut counters = BTreeSet::new();
        if d.kind == DirectiveKind::Start {
            if d.clauses.is_empty() {
                counters = catalog::expand_all();
            }
            for clause in &d.clauses {
                match catalog::resolve_clause(clause) {
                    Ok(set) => counters.extend(set),
                    Err(CatalogError::UnknownType(t)) => errors.push(Diagnostic::UnknownType {
                        counter_type: t,
                        line: d.line(),
                    }),
                    Err(CatalogError::UnknownCounter {
                        counter_type,
                        counter,
                    }) => errors.push(Diagnostic::UnknownCounter {
                        counter_type,
                        counter,
                        line: d.line(),
                    }),
                    Err(e @ CatalogError::UnsupportedCounter { .. }) => {
                        unreachable!("resolve_clause is backend independent: {e}")
                    }
                }
            }
        }
        out.push(ExpandedDirective {
            kind: d.kind,
            region_name: d.region_name.clone(),
            counters,
            position: d.position,
        });
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(errors)
    }
}

/// Runs the full analysis. When any check fails the result carries only
/// diagnostics, never partial IR.
pub fn analyze(directives: &[Directive]) -> AnalysisResult {
    let diagnostics = validate(directives);
    if !diagnostics.is_empty() {
        return AnalysisResult::failed(diagnostics);
    }
    let expanded = match normalize(directives) {
        Ok(e) => e,
        Err(diags) => return AnalysisResult::failed(diags),
    };
    let blocks = collect_blocks(&expanded);
    let (region_table, ir) = collect_regions(&expanded, &blocks);
    AnalysisResult {
        blocks,
        region_table,
        ir,
        diagnostics: Vec::new(),
    }
}

/// Scans and analyzes a source file. Parse errors are folded into the
/// diagnostics.
pub fn analyze_source(source: &str) -> (Vec<Directive>, AnalysisResult) {
    let scanned = crate::reader::scan(source);
    if !scanned.errors.is_empty() {
        let diags = scanned.errors.into_iter().map(Diagnostic::from).collect();
        return (scanned.directives, AnalysisResult::failed(diags));
    }
    let result = analyze(&scanned.directives);
    (scanned.directives, result)
}
