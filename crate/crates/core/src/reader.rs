//! Extraction of `#pragma edpm` directives from C source text.
//!
//! The reader knows nothing about C. It looks at one physical line at a time,
//! picks out the lines whose first tokens are `#pragma edpm`, and parses the
//! rest of the line with the grammar below:
//!
//! ```text
//! directive    := "#pragma" "edpm" action
//! action       := "init" | "deinit"
//!               | "start" region-name [ clause-list ]
//!               | "stop"  region-name
//! clause-list  := clause { "," clause }
//! clause       := type-name [ "(" [ counter-list ] ")" ]
//! counter-list := counter-name { "," counter-name }
//! ident        := letter { letter | digit | "-" | "_" }
//! ```

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// 1-based line number of a directive in its source file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SourcePosition {
    pub line: u32,
}

impl SourcePosition {
    pub fn new(line: u32) -> Self {
        assert!(line >= 1, "source lines are 1-based");
        SourcePosition { line }
    }
}

impl fmt::Display for SourcePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.line)
    }
}

/// One `type(counter, ...)` item of a start directive.
///
/// An empty `counters` list means every counter of the type; both `cpu` and
/// `cpu()` parse to that form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub counter_type: String,
    pub counters: Vec<String>,
}

impl Clause {
    pub fn new(counter_type: impl Into<String>, counters: &[&str]) -> Self {
        Clause {
            counter_type: counter_type.into(),
            counters: counters.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.counter_type)?;
        if !self.counters.is_empty() {
            write!(f, "({})", self.counters.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DirectiveKind {
    Init,
    Deinit,
    Start,
    Stop,
}

impl DirectiveKind {
    pub fn keyword(self) -> &'static str {
        match self {
            DirectiveKind::Init => "init",
            DirectiveKind::Deinit => "deinit",
            DirectiveKind::Start => "start",
            DirectiveKind::Stop => "stop",
        }
    }

    fn from_keyword(word: &str) -> Option<Self> {
        Some(match word {
            "init" => DirectiveKind::Init,
            "deinit" => DirectiveKind::Deinit,
            "start" => DirectiveKind::Start,
            "stop" => DirectiveKind::Stop,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Directive {
    pub kind: DirectiveKind,
    /// Present exactly for `start` and `stop`.
    pub region_name: Option<String>,
    /// Only ever non-empty for `start`.
    pub clauses: Vec<Clause>,
    pub position: SourcePosition,
}

impl Directive {
    pub fn init(line: u32) -> Self {
        Directive {
            kind: DirectiveKind::Init,
            region_name: None,
            clauses: Vec::new(),
            position: SourcePosition::new(line),
        }
    }

    pub fn deinit(line: u32) -> Self {
        Directive {
            kind: DirectiveKind::Deinit,
            ..Directive::init(line)
        }
    }

    pub fn start(line: u32, name: impl Into<String>, clauses: Vec<Clause>) -> Self {
        Directive {
            kind: DirectiveKind::Start,
            region_name: Some(name.into()),
            clauses,
            position: SourcePosition::new(line),
        }
    }

    pub fn stop(line: u32, name: impl Into<String>) -> Self {
        Directive {
            kind: DirectiveKind::Stop,
            region_name: Some(name.into()),
            clauses: Vec::new(),
            position: SourcePosition::new(line),
        }
    }

    pub fn line(&self) -> u32 {
        self.position.line
    }

    pub fn name(&self) -> Option<&str> {
        self.region_name.as_deref()
    }

    /// Canonical pragma text, e.g. `#pragma edpm start r1 cpu(cycles), memory`.
    pub fn to_pragma(&self) -> String {
        let mut out = format!("#pragma edpm {}", self.kind.keyword());
        if let Some(name) = &self.region_name {
            out.push(' ');
            out.push_str(name);
        }
        for (i, clause) in self.clauses.iter().enumerate() {
            out.push_str(if i == 0 { " " } else { ", " });
            out.push_str(&clause.to_string());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParseErrorKind {
    UnknownAction,
    MissingRegionName,
    MalformedClause,
    TrailingGarbage,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("line {line}: {kind:?}: {detail}")]
pub struct ParseError {
    pub line: u32,
    pub kind: ParseErrorKind,
    pub detail: String,
}

/// Returns the text after `#pragma edpm` when `line` is an EDPM pragma.
///
/// Whitespace is allowed before `#` and between `#` and `pragma`, as the C
/// preprocessor allows it.
pub fn pragma_body(line: &str) -> Option<&str> {
    let rest = line.trim_start().strip_prefix('#')?;
    let rest = rest.trim_start().strip_prefix("pragma")?;
    if !rest.starts_with(char::is_whitespace) {
        return None;
    }
    let rest = rest.trim_start().strip_prefix("edpm")?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest)
    } else {
        None
    }
}

pub fn is_pragma_line(line: &str) -> bool {
    pragma_body(line).is_some()
}

/// Outcome of scanning one file: every directive that parsed, plus every error.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanResult {
    pub directives: Vec<Directive>,
    pub errors: Vec<ParseError>,
}

impl ScanResult {
    pub fn into_result(self) -> Result<Vec<Directive>, Vec<ParseError>> {
        if self.errors.is_empty() {
            Ok(self.directives)
        } else {
            Err(self.errors)
        }
    }
}

/// Scans a whole file. Parsing continues past bad lines so that all errors
/// are reported at once.
pub fn scan(source: &str) -> ScanResult {
    let mut result = ScanResult::default();
    for (idx, line) in source.lines().enumerate() {
        if !is_pragma_line(line) {
            continue;
        }
        match parse_directive(line, idx as u32 + 1) {
            Ok(d) => result.directives.push(d),
            Err(e) => result.errors.push(e),
        }
    }
    result
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str),
    LParen,
    RParen,
    Comma,
    Other(char),
}

impl fmt::Display for Token<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Comma => f.write_str("`,`"),
            Token::Other(c) => write!(f, "`{c}`"),
        }
    }
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '-' || c == '_'
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((start, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '(' => tokens.push(Token::LParen),
            ')' => tokens.push(Token::RParen),
            ',' => tokens.push(Token::Comma),
            c if c.is_ascii_alphabetic() => {
                let mut end = start + c.len_utf8();
                while let Some(&(i, n)) = chars.peek() {
                    if !is_ident_continue(n) {
                        break;
                    }
                    end = i + n.len_utf8();
                    chars.next();
                }
                tokens.push(Token::Ident(&text[start..end]));
            }
            other => tokens.push(Token::Other(other)),
        }
    }
    tokens
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    line: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error(&self, kind: ParseErrorKind, detail: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            kind,
            detail: detail.into(),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.error(
                ParseErrorKind::TrailingGarbage,
                format!("unexpected {t} after directive"),
            )),
        }
    }

    fn clause(&mut self) -> Result<Clause, ParseError> {
        let counter_type = match self.next() {
            Some(Token::Ident(t)) => t.to_string(),
            Some(t) => {
                return Err(self.error(
                    ParseErrorKind::MalformedClause,
                    format!("expected a counter type, found {t}"),
                ))
            }
            None => {
                return Err(self.error(
                    ParseErrorKind::MalformedClause,
                    "expected a counter type after `,`",
                ))
            }
        };
        let mut counters = Vec::new();
        if self.peek() != Some(&Token::LParen) {
            return Ok(Clause {
                counter_type,
                counters,
            });
        }
        self.next();
        if self.peek() == Some(&Token::RParen) {
            self.next();
            return Ok(Clause {
                counter_type,
                counters,
            });
        }
        loop {
            match self.next() {
                Some(Token::Ident(c)) => counters.push(c.to_string()),
                Some(t) => {
                    return Err(self.error(
                        ParseErrorKind::MalformedClause,
                        format!("expected a counter name in `{counter_type}(...)`, found {t}"),
                    ))
                }
                None => {
                    return Err(self.error(
                        ParseErrorKind::MalformedClause,
                        format!("unbalanced parenthesis in `{counter_type}(...)`"),
                    ))
                }
            }
            match self.next() {
                Some(Token::Comma) => continue,
                Some(Token::RParen) => break,
                Some(t) => {
                    return Err(self.error(
                        ParseErrorKind::MalformedClause,
                        format!("expected `,` or `)` in `{counter_type}(...)`, found {t}"),
                    ))
                }
                None => {
                    return Err(self.error(
                        ParseErrorKind::MalformedClause,
                        format!("unbalanced parenthesis in `{counter_type}(...)`"),
                    ))
                }
            }
        }
        Ok(Clause {
            counter_type,
            counters,
        })
    }
}

/// Parses a single line known to start with `#pragma edpm`.
pub fn parse_directive(line_text: &str, line_number: u32) -> Result<Directive, ParseError> {
    let body = pragma_body(line_text).ok_or_else(|| ParseError {
        line: line_number,
        kind: ParseErrorKind::UnknownAction,
        detail: "not an edpm pragma".into(),
    })?;
    let mut p = Parser {
        tokens: tokenize(body),
        pos: 0,
        line: line_number,
    };
    let kind = match p.next() {
        Some(Token::Ident(word)) => DirectiveKind::from_keyword(word).ok_or_else(|| {
            p.error(
                ParseErrorKind::UnknownAction,
                format!("unknown action `{word}`"),
            )
        })?,
        Some(t) => {
            return Err(p.error(
                ParseErrorKind::UnknownAction,
                format!("expected an action, found {t}"),
            ))
        }
        None => return Err(p.error(ParseErrorKind::UnknownAction, "missing action")),
    };
    let position = SourcePosition::new(line_number);

    if matches!(kind, DirectiveKind::Init | DirectiveKind::Deinit) {
        p.expect_end()?;
        return Ok(Directive {
            kind,
            region_name: None,
            clauses: Vec::new(),
            position,
        });
    }

    let name = match p.next() {
        Some(Token::Ident(n)) => n.to_string(),
        _ => {
            return Err(p.error(
                ParseErrorKind::MissingRegionName,
                format!("`{}` needs a region name", kind.keyword()),
            ))
        }
    };

    let mut clauses = Vec::new();
    if kind == DirectiveKind::Start && p.peek().is_some() {
        loop {
            clauses.push(p.clause()?);
            match p.next() {
                None => break,
                Some(Token::Comma) => continue,
                Some(t @ Token::Ident(_)) => {
                    return Err(p.error(
                        ParseErrorKind::MalformedClause,
                        format!("expected `,` between clauses, found {t}"),
                    ))
                }
                Some(t) => {
                    return Err(p.error(
                        ParseErrorKind::TrailingGarbage,
                        format!("unexpected {t} after clause list"),
                    ))
                }
            }
        }
    }
    p.expect_end()?;

    Ok(Directive {
        kind,
        region_name: Some(name),
        clauses,
        position,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn no_pragmas_yields_nothing() {
        let src = "int main(void) {\n  return 0;\n}\n";
        assert_eq!(scan(src), ScanResult::default());
    }

    #[test]
    fn foreign_pragmas_are_ignored() {
        let src = "#pragma omp parallel for\n#pragma once\n#pragma edpmx init\n";
        assert!(scan(src).directives.is_empty());
        assert!(scan(src).errors.is_empty());
    }

    #[test]
    fn init_keyword() {
        assert_eq!(
            parse_directive("#pragma edpm init", 3).unwrap(),
            Directive::init(3)
        );
        assert_eq!(
            parse_directive("   #  pragma   edpm   deinit  ", 9).unwrap(),
            Directive::deinit(9)
        );
    }

    #[test]
    fn start_with_two_clauses() {
        let d = parse_directive(
            "#pragma edpm start multiply-iterated memory(loads), cache(l2-stores)",
            8,
        )
        .unwrap();
        assert_eq!(
            d,
            Directive::start(
                8,
                "multiply-iterated",
                vec![
                    Clause::new("memory", &["loads"]),
                    Clause::new("cache", &["l2-stores"])
                ]
            )
        );
    }

    #[test]
    fn bare_and_empty_clauses() {
        let d = parse_directive("#pragma edpm start r cpu, branch()", 1).unwrap();
        assert_eq!(
            d.clauses,
            vec![Clause::new("cpu", &[]), Clause::new("branch", &[])]
        );
        let d = parse_directive("#pragma edpm start r", 1).unwrap();
        assert!(d.clauses.is_empty());
    }

    #[test]
    fn unknown_action() {
        let e = parse_directive("#pragma edpm begin r1", 4).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownAction);
        assert_eq!(e.line, 4);
        let e = parse_directive("#pragma edpm", 4).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownAction);
    }

    #[test]
    fn missing_region_name() {
        for text in [
            "#pragma edpm start",
            "#pragma edpm stop",
            "#pragma edpm start (cpu)",
        ] {
            let e = parse_directive(text, 2).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::MissingRegionName, "{text}");
        }
    }

    #[test]
    fn malformed_clauses() {
        for text in [
            "#pragma edpm start r cpu(cycles",
            "#pragma edpm start r cpu(cycles,)",
            "#pragma edpm start r cpu(,cycles)",
            "#pragma edpm start r cpu,",
            "#pragma edpm start r cpu cycles",
            "#pragma edpm start r , cpu",
        ] {
            let e = parse_directive(text, 2).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::MalformedClause, "{text}");
        }
    }

    #[test]
    fn trailing_garbage() {
        for text in [
            "#pragma edpm init now",
            "#pragma edpm stop r cpu",
            "#pragma edpm start r cpu(cycles))",
            "#pragma edpm deinit;",
        ] {
            let e = parse_directive(text, 2).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::TrailingGarbage, "{text}");
        }
    }

    #[test]
    fn scan_reports_every_error_and_keeps_going() {
        let src =
            "#pragma edpm init\n#pragma edpm begin a\n\n#pragma edpm stop\n#pragma edpm deinit\n";
        let r = scan(src);
        assert_eq!(r.directives, vec![Directive::init(1), Directive::deinit(5)]);
        assert_eq!(
            r.errors
                .iter()
                .map(|e| (e.line, e.kind))
                .collect::<Vec<_>>(),
            vec![
                (2, ParseErrorKind::UnknownAction),
                (4, ParseErrorKind::MissingRegionName)
            ]
        );
    }

    #[test]
    fn crlf_lines() {
        let src = "#pragma edpm init\r\nint x;\r\n#pragma edpm deinit\r\n";
        assert_eq!(
            scan(src).directives,
            vec![Directive::init(1), Directive::deinit(3)]
        );
    }

    fn ident() -> impl Strategy<Value = String> {
        "[a-z][a-z0-9_-]{0,8}"
    }

    fn directive() -> impl Strategy<Value = Directive> {
        let clause = (ident(), prop::collection::vec(ident(), 0..3)).prop_map(|(t, cs)| Clause {
            counter_type: t,
            counters: cs,
        });
        prop_oneof![
            (1u32..500).prop_map(Directive::init),
            (1u32..500).prop_map(Directive::deinit),
            (1u32..500, ident()).prop_map(|(l, n)| Directive::stop(l, n)),
            (1u32..500, ident(), prop::collection::vec(clause, 0..4))
                .prop_map(|(l, n, cs)| Directive::start(l, n, cs)),
        ]
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(d in directive()) {
            let text = d.to_pragma();
            prop_assert_eq!(parse_directive(&text, d.line()).unwrap(), d);
        }

        #[test]
        fn non_pragma_lines_do_not_matter(
            ds in prop::collection::vec(directive(), 0..8),
            filler in prop::collection::vec("[ a-z;{}()=0-9]{0,20}", 0..40),
        ) {
            // Interleave directives with arbitrary C-ish lines, then blank the
            // C lines out; both files must scan identically.
            let mut with_code = Vec::new();
            let mut blanked = Vec::new();
            let mut filler = filler.into_iter();
            for d in &ds {
                if let Some(f) = filler.next() {
                    with_code.push(f);
                    blanked.push(String::new());
                }
                with_code.push(d.to_pragma());
                blanked.push(d.to_pragma());
            }
            let a = scan(&with_code.join("\n"));
            let b = scan(&blanked.join("\n"));
            prop_assert_eq!(&a, &b);
            prop_assert!(a.directives.windows(2).all(|w| w[0].line() < w[1].line()));
            prop_assert_eq!(a.directives.len(), ds.len());
        }
    }
}
