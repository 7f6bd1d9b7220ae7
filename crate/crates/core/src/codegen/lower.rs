use std::fmt::Write;

use super::{CodeFragment, CodegenError, GenConfig};
use crate::analysis::{AnalysisResult, Block, IrAction, IrDirective, IrTarget, RegionInfo};
use crate::catalog::{backend_event, Backend};

fn checked(function: &str, args: &str) -> String {
    format!("__edpm_check({function}({args}), \"{function}\");")
}

/// Quotes `text` as a C string literal.
fn c_str(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for ch in text.chars() {
        match ch {
            '"' | '\\' => {
                out.push('\\');
                out.push(ch);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out.push('"');
    out
}

/// The statements a backend uses for each eventset operation.
struct Api {
    backend: Backend,
}

impl Api {
    fn call(&self, papi: &str, soft: &str, args: &str) -> String {
        let f = match self.backend {
            Backend::Papi => papi,
            Backend::Soft => soft,
        };
        checked(f, args)
    }

    fn start(&self, b: &Block) -> String {
        self.call("PAPI_start", "edpm_soft_start", &b.eventset_binding)
    }

    fn accum(&self, b: &Block) -> String {
        self.call(
            "PAPI_accum",
            "edpm_soft_accum",
            &format!("{}, {}", b.eventset_binding, b.values_binding),
        )
    }

    /// Stops the eventset and throws away whatever it counted since the
    /// last accumulate.
    fn stop_discard(&self, b: &Block) -> String {
        let call = self.call(
            "PAPI_stop",
            "edpm_soft_stop",
            &format!("{}, __edpm_discard", b.eventset_binding),
        );
        format!(
            "{{\n    long long __edpm_discard[{}];\n    {call}\n}}",
            b.counters.len()
        )
    }

    fn pause(&self, b: &Block) -> String {
        match self.backend {
            Backend::Papi => self.stop_discard(b),
            Backend::Soft => checked("edpm_soft_pause", &b.eventset_binding),
        }
    }

    fn resume(&self, b: &Block) -> String {
        match self.backend {
            Backend::Papi => self.start(b),
            Backend::Soft => checked("edpm_soft_resume", &b.eventset_binding),
        }
    }
}

fn block<'a>(analysis: &'a AnalysisResult, ir: &IrDirective) -> &'a Block {
    match &ir.target {
        IrTarget::Block(n) => &analysis.blocks[*n],
        other => panic!("{} expects a block target, got {other}", ir.action),
    }
}

fn region<'a>(analysis: &'a AnalysisResult, ir: &IrDirective) -> &'a RegionInfo {
    match &ir.target {
        IrTarget::Region(name) => &analysis.region_table[name.as_str()],
        other => panic!("{} expects a region target, got {other}", ir.action),
    }
}

fn lib_init(
    analysis: &AnalysisResult,
    config: &GenConfig,
    line: u32,
) -> Result<String, CodegenError> {
    let api = Api {
        backend: config.backend,
    };
    let mut out = String::new();
    match config.backend {
        Backend::Papi => {
            out.push_str("if (PAPI_library_init(PAPI_VER_CURRENT) != PAPI_VER_CURRENT)\n");
            out.push_str("    __edpm_check(-1, \"PAPI_library_init\");\n");
            let _ = writeln!(
                out,
                "__edpm_json_open({});",
                c_str(&config.json_output_path)
            );
        }
        Backend::Soft => {
            let _ = writeln!(
                out,
                "__edpm_check(edpm_shim_init({}), \"edpm_shim_init\");",
                c_str(&config.json_output_path)
            );
        }
    }
    for b in &analysis.blocks {
        let _ = writeln!(
            out,
            "{}",
            api.call(
                "PAPI_create_eventset",
                "edpm_soft_create_eventset",
                &format!("&{}", b.eventset_binding)
            )
        );
        for &c in &b.counters {
            let event = backend_event(config.backend, c)
                .map_err(|source| CodegenError::Unsupported { line, source })?;
            let args = match config.backend {
                Backend::Papi => format!("{}, {event}", b.eventset_binding),
                Backend::Soft => format!("{}, \"{event}\"", b.eventset_binding),
            };
            let _ = writeln!(
                out,
                "{}",
                api.call("PAPI_add_event", "edpm_soft_add_event", &args)
            );
        }
    }
    Ok(out)
}

fn lib_deinit(analysis: &AnalysisResult, config: &GenConfig) -> String {
    let api = Api {
        backend: config.backend,
    };
    let mut out = String::new();
    for b in &analysis.blocks {
        let _ = writeln!(
            out,
            "{}",
            api.call(
                "PAPI_cleanup_eventset",
                "edpm_soft_cleanup_eventset",
                &b.eventset_binding
            )
        );
        let _ = writeln!(
            out,
            "{}",
            api.call(
                "PAPI_destroy_eventset",
                "edpm_soft_destroy_eventset",
                &format!("&{}", b.eventset_binding)
            )
        );
    }
    match config.backend {
        Backend::Papi => out.push_str("__edpm_json_close();\nPAPI_shutdown();\n"),
        Backend::Soft => {
            out.push_str("__edpm_check(edpm_shim_finalize(), \"edpm_shim_finalize\");\n")
        }
    }
    out
}

fn compute_emit(analysis: &AnalysisResult, r: &RegionInfo, config: &GenConfig) -> String {
    let bv = &analysis.blocks[r.block_index.block_ordinal].values_binding;
    let mut out = String::new();
    for (k, idx) in r.block_index.indices.iter().enumerate() {
        let _ = writeln!(
            out,
            "{rv}[{k}] = {bv}[{idx}] - {rv}[{k}];",
            rv = r.values_binding
        );
    }
    let keys = r
        .counters
        .iter()
        .map(|c| format!("\"{c}\""))
        .collect::<Vec<_>>()
        .join(", ");
    let args = format!(
        "\"{}\", {}, {}, (const char *const[]){{{keys}}}, {}",
        r.name,
        r.temporal_binding,
        r.counters.len(),
        r.values_binding
    );
    match config.backend {
        Backend::Papi => {
            let _ = writeln!(out, "__edpm_json_emit({args});");
            if !config.keep_region_records_buffered {
                out.push_str("fflush(__edpm_out);\n");
            }
        }
        Backend::Soft => {
            let _ = writeln!(
                out,
                "__edpm_check(edpm_emit_record({args}), \"edpm_emit_record\");"
            );
            if !config.keep_region_records_buffered {
                out.push_str("__edpm_check(edpm_shim_flush(), \"edpm_shim_flush\");\n");
            }
        }
    }
    out
}

/// Lowers one IR action to backend statements.
pub fn lower(
    ir: &IrDirective,
    analysis: &AnalysisResult,
    config: &GenConfig,
) -> Result<CodeFragment, CodegenError> {
    let api = Api {
        backend: config.backend,
    };
    let text = match ir.action {
        IrAction::LibInit => lib_init(analysis, config, ir.position.line)?,
        IrAction::LibDeinit => lib_deinit(analysis, config),
        IrAction::BlockCreate => {
            let b = block(analysis, ir);
            format!("memset({0}, 0, sizeof {0});", b.values_binding)
        }
        IrAction::BlockStart => api.start(block(analysis, ir)),
        IrAction::BlockAccumulate => api.accum(block(analysis, ir)),
        IrAction::BlockPause => api.pause(block(analysis, ir)),
        IrAction::BlockResume => api.resume(block(analysis, ir)),
        IrAction::BlockStopDestroy => {
            let b = block(analysis, ir);
            format!("{}\n{}", api.accum(b), api.stop_discard(b))
        }
        IrAction::RegionCopyStart => {
            let r = region(analysis, ir);
            let bv = &analysis.blocks[r.block_index.block_ordinal].values_binding;
            r.block_index
                .indices
                .iter()
                .enumerate()
                .map(|(k, idx)| format!("{}[{k}] = {bv}[{idx}];", r.values_binding))
                .collect::<Vec<_>>()
                .join("\n")
        }
        IrAction::RegionComputeEmit => compute_emit(analysis, region(analysis, ir), config),
        IrAction::RegionBumpTemporal => format!("{}++;", region(analysis, ir).temporal_binding),
    };
    Ok(CodeFragment {
        position: ir.position,
        text: text.trim_end().to_string(),
    })
}
