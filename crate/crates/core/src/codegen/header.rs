use std::fmt::Write;

use super::{GenConfig, OutputNames};
use crate::analysis::AnalysisResult;
use crate::catalog::Backend;

/// C interface of the soft-backend runtime shim. Every function except
/// `edpm_soft_tick` returns 0 on success.
///
/// Eventset calls mirror the PAPI low-level API: `start` zeroes the tallies,
/// `accum` adds them into `values` and zeroes them, `read` and `stop` copy
/// them. While paused, ticks are discarded. `stop` accepts a null `values`.
pub const SOFT_SHIM_API: &str = "\
int edpm_shim_init(const char *output_path);
int edpm_shim_flush(void);
int edpm_shim_finalize(void);
int edpm_soft_create_eventset(int *eventset);
int edpm_soft_add_event(int eventset, const char *counter);
int edpm_soft_start(int eventset);
int edpm_soft_stop(int eventset, long long *values);
int edpm_soft_accum(int eventset, long long *values);
int edpm_soft_read(int eventset, long long *values);
int edpm_soft_pause(int eventset);
int edpm_soft_resume(int eventset);
int edpm_soft_cleanup_eventset(int eventset);
int edpm_soft_destroy_eventset(int *eventset);
void edpm_soft_tick(const char *counter, long long amount);
int edpm_emit_record(const char *name, long long temporal_id, int count,
                     const char *const *counters, const long long *values);
";

const CHECK_HELPER: &str = "\
static inline void __edpm_check(int rc, const char *what)
{
    if (rc != 0) {
        fprintf(stderr, \"edpm: %s failed with code %d\\n\", what, rc);
        exit(1);
    }
}
";

// Record writer for the papi backend; the soft shim carries its own.
const PAPI_JSON_HELPERS: &str = "\
static FILE *__edpm_out;
static long long __edpm_records;

static inline void __edpm_json_open(const char *path)
{
    const char *env = getenv(\"EDPM_OUTPUT\");
    if (env != NULL && env[0] != '\\0')
        path = env;
    __edpm_out = fopen(path, \"w\");
    if (__edpm_out == NULL) {
        fprintf(stderr, \"edpm: cannot open %s\\n\", path);
        exit(2);
    }
    fputc('[', __edpm_out);
}

static inline void __edpm_json_emit(const char *name, long long temporal_id, int count,
                                    const char *const *counters, const long long *values)
{
    int i;
    if (__edpm_records++ > 0)
        fputs(\",\\n\", __edpm_out);
    fprintf(__edpm_out, \"{\\\"name\\\":\\\"%s\\\",\\\"temporal-id\\\":%lld,\\\"counters\\\":{\",
            name, temporal_id);
    for (i = 0; i < count; i++)
        fprintf(__edpm_out, \"%s\\\"%s\\\":%lld\", i > 0 ? \",\" : \"\", counters[i], values[i]);
    fputs(\"}}\", __edpm_out);
}

static inline void __edpm_json_close(void)
{
    if (__edpm_out == NULL)
        return;
    fputs(\"]\\n\", __edpm_out);
    fclose(__edpm_out);
    __edpm_out = NULL;
}
";

fn guard_name(stem: &str) -> String {
    let s: String = stem
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() {
                c.to_ascii_uppercase()
            } else {
                '_'
            }
        })
        .collect();
    format!("EDPM_GENERATED_{s}_H")
}

pub(super) fn render_header(
    analysis: &AnalysisResult,
    names: &OutputNames,
    config: &GenConfig,
) -> String {
    let guard = guard_name(&names.stem);
    let mut h = String::new();
    let _ = writeln!(
        h,
        "/* Generated by edpm from {} ({} backend). Do not edit. */",
        names.original, config.backend
    );
    let _ = writeln!(h, "#ifndef {guard}\n#define {guard}\n");
    h.push_str("#include <stdio.h>\n#include <stdlib.h>\n#include <string.h>\n");
    match config.backend {
        Backend::Papi => {
            h.push_str("#include <papi.h>\n\n#define EDPM_PAPI_BACKEND 1\n\n");
            h.push_str(CHECK_HELPER);
            h.push('\n');
            h.push_str(PAPI_JSON_HELPERS);
        }
        Backend::Soft => {
            h.push_str("\n#define EDPM_SOFT_BACKEND 1\n\n");
            h.push_str(SOFT_SHIM_API);
            h.push('\n');
            h.push_str(CHECK_HELPER);
        }
    }

    for b in &analysis.blocks {
        let names: Vec<String> = b.counters.iter().map(|c| c.dotted()).collect();
        let _ = writeln!(
            h,
            "\n/* block {}, lines {}-{}: {} */",
            b.ordinal,
            b.span.start,
            b.span.stop,
            names.join(" ")
        );
        let _ = writeln!(h, "static int {} = -1;", b.eventset_binding);
        let _ = writeln!(
            h,
            "static long long {}[{}];",
            b.values_binding,
            b.counters.len()
        );
    }

    for r in analysis.region_table.values() {
        let _ = writeln!(
            h,
            "\n/* region {}, lines {}-{}, block {} */",
            r.name, r.span.start, r.span.stop, r.block_index.block_ordinal
        );
        let _ = writeln!(
            h,
            "static long long {}[{}];",
            r.values_binding,
            r.counters.len()
        );
        let _ = writeln!(h, "static long long {};", r.temporal_binding);
    }

    let _ = writeln!(h, "\n#endif /* {guard} */");
    h
}
