use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use edpm::catalog::Backend;
use edpm::runner::loc::{corpus_loc_report, loc_for_file, table};
use edpm::runner::{self, RunConfig, RunError, RunReport};

#[derive(Parser)]
#[command(
    name = "edpm",
    version,
    about = "Precompiler and runner for #pragma edpm annotations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the instrumented source, header and build recipe.
    Precompile {
        #[command(flatten)]
        common: Common,
        /// Print the analysis (blocks, regions, IR) instead of a file list.
        #[arg(long)]
        dump: bool,
    },
    /// Precompile and compile the instrumented program.
    Build {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Precompile, compile, run and aggregate the region records.
    Run {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lines-of-code and record reports.
    Report {
        #[command(subcommand)]
        kind: ReportKind,
    },
    /// Compare wall time of the instrumented and uninstrumented program.
    Bench {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ReportKind {
    /// LOC of one or more annotated files and their generated code.
    Loc {
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Backend::Soft)]
        backend: Backend,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// LOC comparison over a static/dynamic corpus directory.
    Corpus {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Backend::Soft)]
        backend: Backend,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Per-region totals of an existing record file.
    Records {
        json: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Common {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Backend::Soft)]
    backend: Backend,
    #[arg(short, long, default_value = "edpm-out")]
    output_dir: PathBuf,
    /// Record file the program writes (passed through EDPM_OUTPUT).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Let stdio buffer region records instead of flushing each one.
    #[arg(long)]
    buffered: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    emit_only: bool,
    #[arg(long)]
    cc: Option<String>,
    /// Directory holding libedpm_soft.a or edpm_soft.c.
    #[arg(long)]
    shim_dir: Option<PathBuf>,
    /// Keep generated files and executables after `run` and `bench`.
    #[arg(long)]
    keep_generated: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn config(common: &Common, build: Option<&BuildArgs>, reps: usize) -> RunConfig {
    let mut c = RunConfig::new(&common.input, &common.output_dir);
    c.backend = common.backend;
    c.json_path = common.json.clone();
    c.keep_region_records_buffered = common.buffered;
    c.repetitions = reps;
    if let Some(b) = build {
        c.emit_only = b.emit_only;
        c.compiler_command = b.cc.clone();
        c.shim_dir = b.shim_dir.clone();
    }
    c
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn print_run(report: &RunReport, format: Format) {
    if format == Format::Json {
        return print_json(report);
    }
    let mut rows = Vec::new();
    for (region, counters) in &report.per_region_totals {
        let executions = report.records.iter().filter(|r| &r.name == region).count();
        for (counter, total) in counters {
            rows.push(vec![
                region.clone(),
                counter.clone(),
                executions.to_string(),
                total.to_string(),
            ]);
        }
    }
    print!("{}", table(&["region", "counter", "runs", "total"], &rows));
    if let Some(mean) = report.mean_wall_time() {
        println!(
            "wall time: {mean:.2} ms mean over {} run(s)",
            report.wall_times.len()
        );
    }
}

/// Removes the files `run` and `bench` produced, leaving the output
/// directory itself alone.
fn cleanup(c: &RunConfig, keep: bool) {
    if keep {
        return;
    }
    let names = edpm::codegen::output_names(&c.input_path.to_string_lossy());
    let produced = [
        names.header,
        names.source,
        names.build,
        names.executable,
        format!("{}.plain", names.stem),
    ];
    for name in produced {
        let _ = std::fs::remove_file(c.output_dir.join(name));
    }
    if c.json_path.is_none() {
        let _ = std::fs::remove_file(c.json_path());
    }
}

fn run(cli: Cli) -> Result<(), RunError> {
    match cli.command {
        Command::Precompile { common, dump } => {
            let c = config(&common, None, 1);
            if dump {
                let source =
                    std::fs::read_to_string(&c.input_path).map_err(|source| RunError::Io {
                        path: c.input_path.clone(),
                        source,
                    })?;
                let (_, analysis) = edpm::analyze_source(&source);
                print!("{}", analysis.dump());
                if !analysis.is_ok() {
                    return Err(RunError::diagnostics(&c.input_path, &analysis.diagnostics));
                }
            }
            for spec in runner::precompile(&c)? {
                if !dump {
                    println!("{}", c.output_dir.join(&spec.path).display());
                }
            }
        }
        Command::Build { common, build } => {
            let c = config(&common, Some(&build), 1);
            let specs = runner::precompile(&c)?;
            if c.emit_only {
                for spec in &specs {
                    println!("{}", c.output_dir.join(&spec.path).display());
                }
                return Ok(());
            }
            println!("{}", runner::build(&specs, &c)?.display());
        }
        Command::Run {
            common,
            build,
            reps,
            format,
        } => {
            let c = config(&common, Some(&build), reps);
            let specs = runner::precompile(&c)?;
            if c.emit_only {
                return Ok(());
            }
            let exe = runner::build(&specs, &c)?;
            let report = runner::run_and_collect(&exe, &c);
            cleanup(&c, build.keep_generated);
            print_run(&report?, format);
        }
        Command::Bench {
            common,
            build,
            reps,
            format,
        } => {
            let c = config(&common, Some(&build), reps);
            let report = runner::bench(&c);
            cleanup(&c, build.keep_generated);
            let report = report?;
            if format == Format::Json {
                print_json(&report);
            } else {
                print!(
                    "{}",
                    table(
                        &["variant", "mean ms", "runs"],
                        &[
                            vec![
                                "uninstrumented".into(),
                                format!("{:.2}", report.uninstrumented_mean_ms),
                                report.repetitions.to_string()
                            ],
                            vec![
                                "instrumented".into(),
                                format!("{:.2}", report.instrumented_mean_ms),
                                report.repetitions.to_string()
                            ],
                        ]
                    )
                );
                println!("overhead ratio: {:.3}", report.ratio);
            }
        }
        Command::Report { kind } => match kind {
            ReportKind::Loc {
                inputs,
                backend,
                format,
            } => {
                let reports = inputs
                    .iter()
                    .map(|p| loc_for_file(p, backend))
                    .collect::<Result<Vec<_>, _>>()?;
                if format == Format::Json {
                    print_json(&reports);
                } else {
                    for r in &reports {
                        print!("{}", r.to_table());
                    }
                }
            }
            ReportKind::Corpus {
                dir,
                backend,
                format,
            } => {
                let report = corpus_loc_report(&dir, backend)?;
                if format == Format::Json {
                    print_json(&report);
                } else {
                    print!("{}", report.to_table());
                }
            }
            ReportKind::Records { json, format } => {
                let records = runner::read_records(&json)?;
                let report = RunReport {
                    per_region_totals: runner::aggregate(&records),
                    records,
                    wall_times: Vec::new(),
                };
                print_run(&report, format);
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("edpm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
