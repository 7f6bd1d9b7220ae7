use std::fmt::Write;

use super::AnalysisResult;

impl AnalysisResult {
    /// Plain-text listing of blocks, regions and IR, used for golden tests
    /// and `edpm precompile --dump`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        if !self.diagnostics.is_empty() {
            out.push_str("diagnostics:\n");
            for d in &self.diagnostics {
                let _ = writeln!(out, "  {d}");
            }
            return out;
        }

        out.push_str("blocks:\n");
        for b in &self.blocks {
            let _ = writeln!(
                out,
                "  block {} lines {}-{} eventset {} values {}[{}]",
                b.ordinal,
                b.span.start,
                b.span.stop,
                b.eventset_binding,
                b.values_binding,
                b.counters.len()
            );
            for (i, c) in b.counters.iter().enumerate() {
                let _ = writeln!(out, "    [{i}] {c}");
            }
        }

        out.push_str("regions:\n");
        for r in self.region_table.values() {
            let _ = writeln!(
                out,
                "  region {} lines {}-{} block {} values {}[{}] temporal {}",
                r.name,
                r.span.start,
                r.span.stop,
                r.block_index.block_ordinal,
                r.values_binding,
                r.counters.len(),
                r.temporal_binding
            );
            for (c, i) in r.counters.iter().zip(&r.block_index.indices) {
                let _ = writeln!(out, "    {c} -> [{i}]");
            }
        }

        out.push_str("ir:\n");
        for d in &self.ir {
            let _ = writeln!(out, "  {:>5}  {:<21} {}", d.position, d.action, d.target);
        }
        out
    }
}
