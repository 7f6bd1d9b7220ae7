use std::collections::{BTreeMap, HashMap};

use super::{sanitize, Diagnostic};
use crate::reader::{Directive, DirectiveKind};

/// Structural checks on the directive list. Returns every problem found,
/// ordered by line; an empty list means the file is well formed.
///
/// A file without any directive is valid and passes through unchanged.
pub fn validate(directives: &[Directive]) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let (Some(first), Some(last)) = (directives.first(), directives.last()) else {
        return diags;
    };

    let inits: Vec<u32> = lines_of(directives, DirectiveKind::Init);
    let deinits: Vec<u32> = lines_of(directives, DirectiveKind::Deinit);

    match inits.split_first() {
        None => diags.push(Diagnostic::MissingInit { line: first.line() }),
        Some((&first_init, rest)) => {
            diags.extend(rest.iter().map(|&line| Diagnostic::DuplicateInit {
                first: first_init,
                line,
            }))
        }
    }
    match deinits.split_first() {
        None => diags.push(Diagnostic::MissingDeinit { line: last.line() }),
        Some((&first_deinit, rest)) => {
            diags.extend(rest.iter().map(|&line| Diagnostic::DuplicateDeinit {
                first: first_deinit,
                line,
            }))
        }
    }

    let init = inits.first().copied();
    let deinit = deinits.first().copied();
    if let (Some(i), Some(d)) = (init, deinit) {
        if d < i {
            diags.push(Diagnostic::DirectiveOutsideInitSpan { line: d });
        }
    }

    let mut first_start: HashMap<&str, u32> = HashMap::new();
    let mut by_identifier: HashMap<String, &str> = HashMap::new();
    let mut open: HashMap<&str, u32> = HashMap::new();

    for d in directives {
        let line = d.line();
        let Some(name) = d.name() else { continue };

        let before_init = init.is_some_and(|i| line < i);
        let after_deinit = deinit.is_some_and(|e| line > e);
        if before_init || after_deinit {
            diags.push(Diagnostic::DirectiveOutsideInitSpan { line });
        }

        match d.kind {
            DirectiveKind::Start => {
                if let Some(&first) = first_start.get(name) {
                    diags.push(Diagnostic::DuplicateRegionName {
                        name: name.to_string(),
                        first,
                        line,
                    });
                } else {
                    first_start.insert(name, line);
                    match by_identifier.get(&sanitize(name)) {
                        Some(&other) => diags.push(Diagnostic::BindingCollision {
                            name: name.to_string(),
                            other: other.to_string(),
                            line,
                        }),
                        None => {
                            by_identifier.insert(sanitize(name), name);
                        }
                    }
                }
                check_counter_specs(d, &mut diags);
                open.entry(name).or_insert(line);
            }
            DirectiveKind::Stop => {
                if open.remove(name).is_none() {
                    diags.push(Diagnostic::UnmatchedStop {
                        name: name.to_string(),
                        line,
                    });
                }
            }
            DirectiveKind::Init | DirectiveKind::Deinit => {}
        }
    }

    let mut unclosed: Vec<_> = open.into_iter().collect();
    unclosed.sort_by_key(|&(_, line)| line);
    diags.extend(
        unclosed
            .into_iter()
            .map(|(name, line)| Diagnostic::UnclosedRegion {
                name: name.to_string(),
                line,
            }),
    );

    diags.sort_by_key(Diagnostic::line);
    diags
}

fn lines_of(directives: &[Directive], kind: DirectiveKind) -> Vec<u32> {
    directives
        .iter()
        .filter(|d| d.kind == kind)
        .map(Directive::line)
        .collect()
}

/// Each type may appear once per start and each counter once per clause.
/// A repeated type is reported by the counters it repeats, or by the type
/// token when the repetitions share no counter name.
fn check_counter_specs(d: &Directive, diags: &mut Vec<Diagnostic>) {
    let region = d.name().unwrap_or_default();
    let mut report = |counter: String| {
        diags.push(Diagnostic::DuplicateCounterSpec {
            region: region.to_string(),
            counter,
            line: d.line(),
        })
    };

    let mut by_type: BTreeMap<&str, Vec<&crate::reader::Clause>> = BTreeMap::new();
    for clause in &d.clauses {
        by_type
            .entry(&clause.counter_type)
            .or_default()
            .push(clause);
    }
    for (ty, clauses) in by_type {
        let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
        for clause in &clauses {
            for c in &clause.counters {
                *seen.entry(c).or_default() += 1;
            }
        }
        let repeated: Vec<&str> = seen
            .iter()
            .filter(|(_, &n)| n > 1)
            .map(|(c, _)| *c)
            .collect();
        if repeated.is_empty() && clauses.len() > 1 {
            report(ty.to_string());
        }
        for c in repeated {
            report(format!("{ty}.{c}"));
        }
    }
}
