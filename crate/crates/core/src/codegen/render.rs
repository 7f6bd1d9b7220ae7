use std::collections::BTreeMap;

use super::{CodeFragment, CodegenError};

/// Splices fragments into the original source, one fragment per pragma line.
///
/// Lines without a fragment are copied byte for byte, line terminators
/// included. A fragment spanning several lines is followed by a `#line`
/// directive so compiler diagnostics still point at the original file.
pub fn render(original: &str, fragments: &[CodeFragment]) -> Result<String, CodegenError> {
    let mut by_line: BTreeMap<u32, &CodeFragment> = BTreeMap::new();
    for f in fragments {
        if by_line.insert(f.position.line, f).is_some() {
            return Err(CodegenError::PositionCollision {
                line: f.position.line,
            });
        }
    }

    let lines: Vec<&str> = original.split_inclusive('\n').collect();
    if let Some((&line, _)) = by_line.iter().next_back() {
        if line as usize > lines.len() {
            return Err(CodegenError::PositionOutOfRange { line });
        }
    }

    let mut out = String::with_capacity(original.len() * 2);
    for (idx, raw) in lines.iter().enumerate() {
        let number = idx as u32 + 1;
        let Some(frag) = by_line.get(&number) else {
            out.push_str(raw);
            continue;
        };
        let newline = if raw.ends_with("\r\n") { "\r\n" } else { "\n" };
        let is_last = idx + 1 == lines.len();
        let frag_lines: Vec<&str> = frag.text.lines().collect();
        for (i, l) in frag_lines.iter().enumerate() {
            out.push_str(l);
            if i + 1 < frag_lines.len() || raw.ends_with('\n') {
                out.push_str(newline);
            }
        }
        if frag_lines.len() > 1 && !is_last {
            out.push_str(&format!("#line {}{newline}", number + 1));
        }
    }
    Ok(out)
}
