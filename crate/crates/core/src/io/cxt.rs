//! Burmeister `.cxt` files.

use thiserror::Error;

use super::ContextDocument;
use crate::classic::ClassicContext;
use crate::relation::{Carrier, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CxtError {
    #[error("line {line}: expected header line \"B\", found {found:?}")]
    Header { line: usize, found: String },
    #[error("line {line}: expected a {what} count, found {found:?}")]
    Count { line: usize, what: &'static str, found: String },
    #[error("line {line}: expected a blank line after the counts")]
    MissingBlank { line: usize },
    #[error("line {line}: file ends early, {missing} more {what} expected")]
    Truncated { line: usize, what: &'static str, missing: usize },
    #[error("line {line}: row has {found} cells, expected {expected}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("line {line}: illegal incidence character {found:?}")]
    IllegalChar { line: usize, found: char },
    #[error("line {line}: duplicate {what} name {name:?}")]
    Duplicate { line: usize, what: &'static str, name: String },
    #[error("line {line}: unexpected content after the incidence rows")]
    Trailing { line: usize },
}

impl CxtError {
    pub fn line(&self) -> usize {
        match *self {
            CxtError::Header { line, .. }
            | CxtError::Count { line, .. }
            | CxtError::MissingBlank { line }
            | CxtError::Truncated { line, .. }
            | CxtError::RowLength { line, .. }
            | CxtError::IllegalChar { line, .. }
            | CxtError::Duplicate { line, .. }
            | CxtError::Trailing { line } => line,
        }
    }
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let lines = if text.is_empty() { Vec::new() } else { body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect() };
        Lines { lines, next: 0 }
    }

    /// The next line with its 1-based number.
    fn take(&mut self) -> Option<(usize, &'a str)> {
        let l = self.lines.get(self.next).copied()?;
        self.next += 1;
        Some((self.next, l))
    }

    fn line(&self) -> usize {
        self.next + 1
    }
}

fn names(lines: &mut Lines<'_>, n: usize, what: &'static str) -> Result<Vec<String>, CxtError> {
    let mut out: Vec<String> = Vec::with_capacity(n);
    for k in 0..n {
        let (line, name) = lines.take().ok_or(CxtError::Truncated { line: lines.line(), what, missing: n - k })?;
        if out.iter().any(|x| x == name) {
            return Err(CxtError::Duplicate { line, what, name: name.to_string() });
        }
        out.push(name.to_string());
    }
    Ok(out)
}

fn count(lines: &mut Lines<'_>, what: &'static str) -> Result<usize, CxtError> {
    let (line, text) = lines.take().ok_or(CxtError::Truncated { line: lines.line(), what: "header lines", missing: 1 })?;
    text.trim().parse().map_err(|_| CxtError::Count { line, what, found: text.to_string() })
}

pub fn parse_cxt(text: &str) -> Result<ContextDocument, CxtError> {
    let mut lines = Lines::new(text);
    match lines.take() {
        Some((_, "B")) => {}
        Some((line, found)) => return Err(CxtError::Header { line, found: found.to_string() }),
        None => return Err(CxtError::Header { line: 1, found: String::new() }),
    }
    let (_, name) = lines.take().ok_or(CxtError::Truncated { line: 2, what: "header lines", missing: 4 })?;
    let n = count(&mut lines, "object")?;
    let m = count(&mut lines, "attribute")?;
    match lines.take() {
        Some((_, "")) => {}
        Some((line, _)) => return Err(CxtError::MissingBlank { line }),
        None => return Err(CxtError::Truncated { line: 5, what: "header lines", missing: 1 }),
    }
    let objects = names(&mut lines, n, "object")?;
    let attributes = names(&mut lines, m, "attribute")?;
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let (line, row) = lines.take().ok_or(CxtError::Truncated { line: lines.line(), what: "incidence rows", missing: n - k })?;
        let cells: Vec<char> = row.chars().collect();
        if let Some(&found) = cells.iter().find(|c| !matches!(c, 'X' | '.')) {
            return Err(CxtError::IllegalChar { line, found });
        }
        if cells.len() != m {
            return Err(CxtError::RowLength { line, expected: m, found: cells.len() });
        }
        rows.push(cells);
    }
    while let Some((line, rest)) = lines.take() {
        if !rest.trim().is_empty() {
            return Err(CxtError::Trailing { line });
        }
    }
    let x0 = Carrier::new("X0", objects).expect("duplicates rejected above");
    let x1 = Carrier::new("X1", attributes).expect("duplicates rejected above");
    let mu = Relation::from_fn(&x0, &x1, |i, j| rows[i][j] == 'X');
    Ok(ContextDocument { name: name.to_string(), context: ClassicContext::new(mu), source: None })
}

/// Canonical form: LF line endings and a trailing newline.
pub fn write_cxt(doc: &ContextDocument) -> String {
    let mu = doc.context.incidence();
    let (x0, x1) = (mu.source(), mu.target());
    let mut out = format!("B\n{}\n{}\n{}\n\n", doc.name, x0.len(), x1.len());
    for e in x0.elements().iter().chain(x1.elements()) {
        out.push_str(e);
        out.push('\n');
    }
    for i in 0..x0.len() {
        out.extend((0..x1.len()).map(|j| if mu.get(i, j) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}
