#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn corpus_dir() -> PathBuf {
    crate_dir().join("corpus")
}

pub fn fixtures_dir() -> PathBuf {
    crate_dir().join("tests").join("fixtures")
}

pub fn shim_dir() -> PathBuf {
    fixtures_dir().join("shim")
}

pub fn program(name: &str) -> PathBuf {
    fixtures_dir().join("programs").join(name)
}

/// The E1-E4 files of both sample sets, as (set, path) pairs.
pub fn corpus_files() -> Vec<(String, PathBuf)> {
    let mut out = Vec::new();
    for set in ["static", "dynamic"] {
        let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir().join(set))
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|e| e == "c"))
            .collect();
        files.sort();
        out.extend(files.into_iter().map(|p| (set.to_string(), p)));
    }
    out
}

pub fn cc_available() -> bool {
    Command::new("cc")
        .arg("--version")
        .output()
        .is_ok_and(|o| o.status.success())
}

/// Counter table rows copied from the language description, one row per
/// type, counters in print order.
pub const COUNTER_TABLE: &[(&str, &str)] = &[
    ("cpu", "cycles, instructions"),
    ("memory", "loads, stores"),
    (
        "floating-point",
        "instructions, operations, multiply, add, divide, sqrt, inverse",
    ),
    ("vector", "single-precision, double-precision"),
    (
        "branch",
        "unconditional, conditional, taken, not-taken, mispredicted, correctly-predicted",
    ),
    (
        "cache",
        "invalidation, l1-data, l2-data, l3-data, l1-instructions, l2-instructions, l3-instructions, l1-loads, l2-loads, l1-stores, l2-stores",
    ),
];

/// Every counter of the table as `type.counter`, in print order.
pub fn printed_counters() -> Vec<String> {
    COUNTER_TABLE
        .iter()
        .flat_map(|(ty, row)| row.split(", ").map(move |c| format!("{ty}.{c}")))
        .collect()
}

fn printed_type(ty: &str) -> Vec<&'static str> {
    COUNTER_TABLE
        .iter()
        .find(|(t, _)| *t == ty)
        .map(|(_, row)| row.split(", ").collect())
        .unwrap()
}

// ---------------------------------------------------------------------------
// Randomized directive sequences and the line-coverage oracle.

#[derive(Debug, Clone)]
pub struct OracleRegion {
    pub name: String,
    pub start: u32,
    pub stop: u32,
    /// Positions in `printed_counters()`.
    pub counters: BTreeSet<usize>,
}

#[derive(Debug, Clone)]
pub struct Case {
    pub seed: u64,
    pub source: String,
    pub regions: Vec<OracleRegion>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBlock {
    /// Half-open: first covered line, one past the last covered line.
    pub start: u32,
    pub stop: u32,
    pub counters: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRegionResult {
    pub name: String,
    pub block: usize,
    pub counters: Vec<String>,
    pub indices: Vec<usize>,
}

fn random_clauses(rng: &mut ChaCha8Rng) -> (String, BTreeSet<usize>) {
    let all = printed_counters();
    let index_of = |ty: &str, c: &str| all.iter().position(|x| *x == format!("{ty}.{c}")).unwrap();
    if rng.random_bool(0.05) {
        return (String::new(), (0..all.len()).collect());
    }
    let mut types: Vec<&str> = COUNTER_TABLE.iter().map(|(t, _)| *t).collect();
    let n_types = rng.random_range(1..=3);
    let mut clauses = Vec::new();
    let mut set = BTreeSet::new();
    for _ in 0..n_types {
        let ty = types.remove(rng.random_range(0..types.len()));
        let counters = printed_type(ty);
        match rng.random_range(0..4) {
            0 => {
                clauses.push(ty.to_string());
                set.extend(counters.iter().map(|c| index_of(ty, c)));
            }
            1 => {
                clauses.push(format!("{ty}()"));
                set.extend(counters.iter().map(|c| index_of(ty, c)));
            }
            _ => {
                let mut pool = counters.clone();
                let k = rng.random_range(1..=pool.len());
                let mut picked = Vec::new();
                for _ in 0..k {
                    picked.push(pool.remove(rng.random_range(0..pool.len())));
                }
                set.extend(picked.iter().map(|c| index_of(ty, c)));
                let sep = if rng.random_bool(0.5) { ", " } else { "," };
                clauses.push(format!("{ty}({})", picked.join(sep)));
            }
        }
    }
    (clauses.join(", "), set)
}

fn filler(rng: &mut ChaCha8Rng, lines: &mut Vec<String>) {
    for _ in 0..rng.random_range(0..3) {
        lines.push(match rng.random_range(0..4) {
            0 => String::new(),
            1 => "    x += 1;".to_string(),
            2 => "    /* #pragma edpm start not-a-directive */".to_string(),
            _ => "#pragma omp parallel for".to_string(),
        });
    }
}

/// A valid annotated file with up to ten regions. Depending on the seed the
/// regions nest, overlap, or form separate blocks.
pub fn gen_case(seed: u64) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=10usize);
    let style = rng.random_range(0..3);
    let prefixes = ["r", "loop-", "k_", "Blk-"];

    let mut events: Vec<(bool, usize)> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut next = 0;
    while next < n || !active.is_empty() {
        let start = next < n && (active.is_empty() || rng.random_bool(0.5));
        if start {
            events.push((true, next));
            active.push(next);
            next += 1;
        } else {
            let i = match style {
                0 => active.len() - 1,
                1 => 0,
                _ => rng.random_range(0..active.len()),
            };
            events.push((false, active.remove(i)));
        }
    }

    let mut regions: Vec<OracleRegion> = (0..n)
        .map(|i| OracleRegion {
            name: format!("{}{i}", prefixes[rng.random_range(0..prefixes.len())]),
            start: 0,
            stop: 0,
            counters: BTreeSet::new(),
        })
        .collect();

    let mut lines = vec!["int main(void)".to_string(), "{".to_string()];
    filler(&mut rng, &mut lines);
    lines.push("#pragma edpm init".into());
    for (is_start, r) in events {
        filler(&mut rng, &mut lines);
        let indent = if rng.random_bool(0.3) { "    " } else { "" };
        let hash = if rng.random_bool(0.2) {
            "#  pragma  edpm"
        } else {
            "#pragma edpm"
        };
        let line_no = lines.len() as u32 + 1;
        if is_start {
            let (clauses, set) = random_clauses(&mut rng);
            regions[r].start = line_no;
            regions[r].counters = set;
            let sep = if clauses.is_empty() { "" } else { " " };
            lines.push(format!(
                "{indent}{hash} start {}{sep}{clauses}",
                regions[r].name
            ));
        } else {
            regions[r].stop = line_no;
            lines.push(format!("{indent}{hash} stop {}", regions[r].name));
        }
    }
    filler(&mut rng, &mut lines);
    lines.push("#pragma edpm deinit".into());
    lines.push("    return x;".into());
    lines.push("}".into());

    Case {
        seed,
        source: lines.join("\n") + "\n",
        regions,
    }
}

fn covering(regions: &[OracleRegion], line: u32) -> Vec<usize> {
    (0..regions.len())
        .filter(|&i| regions[i].start <= line && line < regions[i].stop)
        .collect()
}

/// Brute force: walk every line, mark it covered when some region's
/// half-open `[start, stop)` contains it, and cut blocks at uncovered lines.
pub fn oracle_blocks(regions: &[OracleRegion]) -> Vec<OracleBlock> {
    let names = printed_counters();
    let last = regions.iter().map(|r| r.stop).max().unwrap_or(0);
    let mut blocks = Vec::new();
    let mut run: Option<u32> = None;
    for line in 1..=last + 1 {
        let covered = !covering(regions, line).is_empty();
        match (run, covered) {
            (None, true) => run = Some(line),
            (Some(first), false) => {
                let mut union = BTreeSet::new();
                for r in regions
                    .iter()
                    .filter(|r| r.start >= first && r.start < line)
                {
                    union.extend(r.counters.iter().copied());
                }
                blocks.push(OracleBlock {
                    start: first,
                    stop: line,
                    counters: union.iter().map(|&i| names[i].clone()).collect(),
                });
                run = None;
            }
            _ => {}
        }
    }
    blocks
}

pub fn oracle_regions(regions: &[OracleRegion], blocks: &[OracleBlock]) -> Vec<OracleRegionResult> {
    let names = printed_counters();
    regions
        .iter()
        .map(|r| {
            let block = blocks
                .iter()
                .position(|b| b.start <= r.start && r.start < b.stop)
                .unwrap();
            let counters: Vec<String> = r.counters.iter().map(|&i| names[i].clone()).collect();
            let indices = counters
                .iter()
                .map(|c| blocks[block].counters.iter().position(|x| x == c).unwrap())
                .collect();
            OracleRegionResult {
                name: r.name.clone(),
                block,
                counters,
                indices,
            }
        })
        .collect()
}

/// Number of IR actions expected at a start or stop line: whether any other
/// region is live across that line decides between the short and long form.
pub fn oracle_action_count(regions: &[OracleRegion], line: u32) -> usize {
    let others_live = regions.iter().any(|r| r.start < line && line < r.stop);
    let is_start = regions.iter().any(|r| r.start == line);
    match (is_start, others_live) {
        (true, false) => 3,
        (true, true) => 4,
        (false, false) => 3,
        (false, true) => 5,
    }
}

/// Compares the analyzer against the oracle for one case. Returns a
/// description of the first disagreement.
pub fn check_case(case: &Case) -> Result<(), String> {
    let (_, analysis) = edpm::analyze_source(&case.source);
    let fail = |what: String| Err(format!("seed {}: {what}\n{}", case.seed, case.source));
    if !analysis.is_ok() {
        return fail(format!("diagnostics {:?}", analysis.diagnostics));
    }

    let blocks = oracle_blocks(&case.regions);
    if blocks.len() != analysis.blocks.len() {
        return fail(format!(
            "{} blocks, oracle {}",
            analysis.blocks.len(),
            blocks.len()
        ));
    }
    for (got, want) in analysis.blocks.iter().zip(&blocks) {
        let counters: Vec<String> = got.counters.iter().map(|c| c.dotted()).collect();
        // the analyzer reports the stop directive line, one past the last covered line
        if got.span.start.line != want.start
            || got.span.stop.line != want.stop
            || counters != want.counters
        {
            return fail(format!("block {got:?} vs oracle {want:?}"));
        }
    }

    let regions = oracle_regions(&case.regions, &blocks);
    if regions.len() != analysis.region_table.len() {
        return fail("region count".into());
    }
    for (want, r) in regions.iter().zip(&case.regions) {
        let Some(got) = analysis.region_table.get(&want.name) else {
            return fail(format!("region {} missing", want.name));
        };
        let counters: Vec<String> = got.counters.iter().map(|c| c.dotted()).collect();
        if got.span.start.line != r.start
            || got.span.stop.line != r.stop
            || got.block_index.block_ordinal != want.block
            || counters != want.counters
            || got.block_index.indices != want.indices
        {
            return fail(format!("region {got:?} vs oracle {want:?}"));
        }
    }

    for r in &case.regions {
        for line in [r.start, r.stop] {
            let got = analysis.actions_at(line).len();
            let want = oracle_action_count(&case.regions, line);
            if got != want {
                return fail(format!("line {line}: {got} actions, oracle {want}"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Line diff.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edit {
    Keep,
    Delete(usize),
    Insert(usize),
}

/// Longest-common-subsequence line diff of `a` into `b`.
pub fn line_diff(a: &[&str], b: &[&str]) -> Vec<Edit> {
    let (n, m) = (a.len(), b.len());
    let mut lcs = vec![vec![0u32; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            lcs[i][j] = if a[i] == b[j] {
                lcs[i + 1][j + 1] + 1
            } else {
                lcs[i + 1][j].max(lcs[i][j + 1])
            };
        }
    }
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < n || j < m {
        if i < n && j < m && a[i] == b[j] {
            out.push(Edit::Keep);
            i += 1;
            j += 1;
        } else if j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j]) {
            out.push(Edit::Insert(j));
            j += 1;
        } else {
            out.push(Edit::Delete(i));
            i += 1;
        }
    }
    out
}

fn is_edpm_pragma(line: &str) -> bool {
    let words: Vec<&str> = line
        .trim_start()
        .trim_start_matches('#')
        .split_whitespace()
        .take(2)
        .collect();
    line.trim_start().starts_with('#') && words == ["pragma", "edpm"]
}

/// Checks that `instrumented` differs from `original` only where pragma
/// lines were: every pragma line is replaced, every other line survives in
/// order, and each changed hunk contains a pragma line. The two-line include
/// and `#line` prologue is skipped.
pub fn diff_touches_pragmas_only(original: &str, instrumented: &str) -> Result<(), String> {
    let a: Vec<&str> = original.lines().collect();
    let b: Vec<&str> = instrumented.lines().skip(2).collect();
    let edits = line_diff(&a, &b);
    let mut hunk_has_pragma = false;
    let mut in_hunk = false;
    for e in edits.iter().copied().chain([Edit::Keep]) {
        match e {
            Edit::Keep => {
                if in_hunk && !hunk_has_pragma {
                    return Err("a changed hunk contains no pragma line".into());
                }
                in_hunk = false;
                hunk_has_pragma = false;
            }
            Edit::Delete(i) => {
                if !is_edpm_pragma(a[i]) {
                    return Err(format!("line {} changed: {:?}", i + 1, a[i]));
                }
                in_hunk = true;
                hunk_has_pragma = true;
            }
            Edit::Insert(_) => in_hunk = true,
        }
    }
    let deleted = edits
        .iter()
        .filter(|e| matches!(e, Edit::Delete(_)))
        .count();
    let pragmas = a.iter().filter(|l| is_edpm_pragma(l)).count();
    if deleted != pragmas {
        return Err(format!(
            "{pragmas} pragma lines but {deleted} lines removed"
        ));
    }
    Ok(())
}

/// Blanks every EDPM pragma line, keeping line numbering.
pub fn strip_edpm_pragmas(text: &str) -> String {
    text.lines()
        .map(|l| if is_edpm_pragma(l) { "" } else { l })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

pub fn compile(dir: &Path, file: &str, output: &str, extra: &[&str]) -> Result<(), String> {
    let out = Command::new("cc")
        .current_dir(dir)
        .args(["-O2", file, "-o", output])
        .args(extra)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.success() {
        Ok(())
    } else {
        Err(String::from_utf8_lossy(&out.stderr).into_owned())
    }
}

/// `(class, line)` pairs from the `/* expect: Class line */` comments of an
/// invalid fixture.
pub fn expectations(source: &str) -> Vec<(String, u32)> {
    source
        .lines()
        .filter_map(|l| l.trim().strip_prefix("/* expect:"))
        .map(|rest| {
            let mut words = rest.trim_end_matches("*/").split_whitespace();
            let class = words.next().unwrap().to_string();
            let line = words.next().unwrap().parse().unwrap();
            (class, line)
        })
        .collect()
}

pub fn invalid_fixtures() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixtures_dir().join("invalid"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
}

/// Checks one invalid fixture: the analyzer reports exactly the expected
/// classes at the expected lines.
pub fn check_invalid_fixture(path: &Path) -> Result<Vec<(String, u32)>, String> {
    let source = std::fs::read_to_string(path).unwrap();
    let want = expectations(&source);
    let (_, analysis) = edpm::analyze_source(&source);
    let got: Vec<(String, u32)> = analysis
        .diagnostics
        .iter()
        .map(|d| (d.class().to_string(), d.line()))
        .collect();
    if want.is_empty() || got != want {
        return Err(format!(
            "{}: got {got:?}, expected {want:?}",
            path.display()
        ));
    }
    Ok(got)
}
