mod common;

use edpm::runner::{self, RunConfig, RunError};
use edpm::Diagnostic;

#[test]
fn every_invalid_fixture_reports_its_class_and_line() {
    let fixtures = common::invalid_fixtures();
    let mut classes: Vec<String> = Vec::new();
    for path in &fixtures {
        let got = common::check_invalid_fixture(path).unwrap_or_else(|e| panic!("{e}"));
        classes.extend(got.into_iter().map(|(c, _)| c));
    }
    for class in [
        "DuplicateInit",
        "MissingInit",
        "MissingDeinit",
        "DuplicateRegionName",
        "DuplicateCounterSpec",
        "UnmatchedStop",
        "UnclosedRegion",
        "DirectiveOutsideInitSpan",
        "UnknownType",
        "UnknownCounter",
    ] {
        assert!(classes.iter().any(|c| c == class), "no fixture for {class}");
    }
}

#[test]
fn duplicate_init_names_both_lines() {
    let src =
        std::fs::read_to_string(common::fixtures_dir().join("invalid/duplicate_init.c")).unwrap();
    let (_, analysis) = edpm::analyze_source(&src);
    assert_eq!(
        analysis.diagnostics,
        vec![Diagnostic::DuplicateInit { first: 7, line: 8 }]
    );
    assert_eq!(
        analysis.diagnostics[0].to_string(),
        "line 8: duplicate `init` (first at line 7)"
    );
}

#[test]
fn precompile_lists_every_diagnostic_with_file_prefix() {
    let out = tempfile::tempdir().unwrap();
    let input = common::fixtures_dir().join("invalid/directive_outside_init_span.c");
    let err = runner::precompile(&RunConfig::new(&input, out.path())).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    let RunError::Diagnostics(ref messages) = err else {
        panic!("{err:?}");
    };
    assert_eq!(messages.len(), 2);
    assert!(messages[0]
        .ends_with("directive_outside_init_span.c:11: directive outside the init/deinit span"));
    assert!(messages[1].contains(":13:"));
    // nothing is written for a failed analysis
    assert_eq!(std::fs::read_dir(out.path()).unwrap().count(), 0);
}

#[test]
fn parse_errors_surface_as_diagnostics() {
    let src = "#pragma edpm init\n#pragma edpm begin r\n#pragma edpm start\n#pragma edpm start r cpu(cycles\n#pragma edpm deinit\n";
    let (_, analysis) = edpm::analyze_source(src);
    let lines: Vec<(&str, u32)> = analysis
        .diagnostics
        .iter()
        .map(|d| (d.class(), d.line()))
        .collect();
    assert_eq!(lines, [("Parse", 2), ("Parse", 3), ("Parse", 4)]);
}

#[test]
fn colliding_region_identifiers_are_rejected() {
    let src = "#pragma edpm init\n#pragma edpm start a-b cpu\n#pragma edpm stop a-b\n#pragma edpm start a_b cpu\n#pragma edpm stop a_b\n#pragma edpm deinit\n";
    let (_, analysis) = edpm::analyze_source(src);
    assert_eq!(analysis.diagnostics[0].class(), "BindingCollision");
    assert_eq!(analysis.diagnostics[0].line(), 4);
}
