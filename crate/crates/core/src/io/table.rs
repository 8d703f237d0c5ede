//! CSV cross tables: a header row of attributes, then one row per entity
//! with its name first and `X` (any case) in the cells it has.

use super::ContextDocument;
use crate::classic::ClassicContext;
use crate::relation::{Carrier, Relation};

pub fn parse_csv(name: &str, text: &str) -> Result<ContextDocument, String> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r.map_err(|e| e.to_string())?,
        None => return Err("empty cross table".into()),
    };
    let attributes: Vec<String> = header.iter().skip(1).map(|s| s.trim().to_string()).collect();
    let mut entities = Vec::new();
    let mut rows = Vec::new();
    for (k, record) in records.enumerate() {
        let record = record.map_err(|e| e.to_string())?;
        let line = k + 2;
        let cells: Vec<&str> = record.iter().collect();
        if cells.iter().all(|c| c.trim().is_empty()) {
            continue;
        }
        if cells.len() > attributes.len() + 1 {
            return Err(format!("line {line}: {} cells, expected at most {}", cells.len(), attributes.len() + 1));
        }
        let mut row = vec![false; attributes.len()];
        for (j, c) in cells.iter().skip(1).enumerate() {
            row[j] = match c.trim() {
                "" | "." => false,
                "X" | "x" => true,
                other => return Err(format!("line {line}: illegal cell {other:?}")),
            };
        }
        entities.push(cells[0].trim().to_string());
        rows.push(row);
    }
    let x0 = Carrier::new("X0", entities).map_err(|e| e.to_string())?;
    let x1 = Carrier::new("X1", attributes).map_err(|e| e.to_string())?;
    let mu = Relation::from_fn(&x0, &x1, |i, j| rows[i][j]);
    Ok(ContextDocument { name: name.to_string(), context: ClassicContext::new(mu), source: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::cxt::{parse_cxt, write_cxt};

    #[test]
    fn matches_cxt() {
        let csv = ",p,q\na,X,x\nb,,X\n";
        let doc = parse_csv("t2", csv).unwrap();
        let cxt = parse_cxt("B\nt2\n2\n2\n\na\nb\np\nq\nXX\n.X\n").unwrap();
        assert_eq!(doc, cxt);
        assert_eq!(write_cxt(&doc), write_cxt(&cxt));
    }

    #[test]
    fn rejects_bad_cells() {
        assert!(parse_csv("t", ",p\na,yes\n").unwrap_err().contains("line 2"));
        assert!(parse_csv("t", ",p\na,X\na,X\n").unwrap_err().contains("twice"));
    }
}
