//! Corpus file format and the bundled regression tables.
//!
//! A corpus file is a sequence of records separated by blank lines. Each
//! record is a header line `id <label> n <n>` with an optional
//! `labels <n names>` tail, followed by n rows of n space-separated
//! 0-based element ids. Labels default to e0..e(n-1) and feed polynomial
//! variable names.

use crate::semigroup::{MulTable, TableError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("record {record} (line {line}): {msg}")]
    Syntax { record: String, line: usize, msg: String },
    #[error("record {record} (line {line}): {source}")]
    BadTable { record: String, line: usize, source: TableError },
    #[error("record {record} (line {line}): duplicate id")]
    DuplicateId { record: String, line: usize },
}

#[derive(Debug, Clone)]
pub struct CorpusRecord {
    pub id: String,
    pub table: MulTable,
    /// Free text noting where the record came from.
    pub origin: String,
}

/// Raw text of the regression tables bundled with the crate.
pub const REFERENCE_CORPUS: &str = include_str!("../data/reference.corpus");

/// Parse a corpus stream. Errors carry the record id (or its ordinal when
/// the header itself is broken) and the 1-based line number.
pub fn parse_corpus(input: &str) -> Result<Vec<CorpusRecord>, CorpusError> {
    let mut records: Vec<CorpusRecord> = Vec::new();
    let mut lines = input.lines().enumerate().peekable();
    while let Some(&(_, peek)) = lines.peek() {
        if peek.trim().is_empty() {
            lines.next();
            continue;
        }
        let (header_idx, header) = lines.next().expect("peeked");
        let line_no = header_idx + 1;
        let ordinal = format!("#{}", records.len() + 1);
        let toks: Vec<&str> = header.split_whitespace().collect();
        let syntax = |msg: &str| CorpusError::Syntax {
            record: ordinal.clone(),
            line: line_no,
            msg: msg.to_string(),
        };
        if toks.len() < 4 || toks[0] != "id" || toks[2] != "n" {
            return Err(syntax("expected header `id <label> n <n> [labels ...]`"));
        }
        let id = toks[1].to_string();
        let n: usize = toks[3]
            .parse()
            .map_err(|_| syntax("element count is not a number"))?;
        let labels: Option<Vec<String>> = match toks.get(4) {
            None => None,
            Some(&"labels") => {
                if toks.len() != 5 + n {
                    return Err(CorpusError::Syntax {
                        record: id.clone(),
                        line: line_no,
                        msg: format!("expected {n} labels, got {}", toks.len() - 5),
                    });
                }
                Some(toks[5..].iter().map(|s| s.to_string()).collect())
            }
            Some(_) => return Err(syntax("unexpected tokens after element count")),
        };

        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let Some((row_idx, row_line)) = lines.next() else {
                return Err(CorpusError::Syntax {
                    record: id.clone(),
                    line: line_no,
                    msg: format!("expected {n} rows, found {r}"),
                });
            };
            if row_line.trim().is_empty() {
                return Err(CorpusError::Syntax {
                    record: id.clone(),
                    line: row_idx + 1,
                    msg: format!("expected {n} rows, found {r}"),
                });
            }
            let row: Vec<usize> = row_line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| CorpusError::Syntax {
                    record: id.clone(),
                    line: row_idx + 1,
                    msg: "row entry is not a number".to_string(),
                })?;
            if row.len() != n {
                return Err(CorpusError::Syntax {
                    record: id.clone(),
                    line: row_idx + 1,
                    msg: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            rows.push(row);
        }

        let table = match labels {
            Some(l) => MulTable::new(l, &rows),
            None => MulTable::from_rows(&rows),
        }
        .map_err(|source| CorpusError::BadTable { record: id.clone(), line: line_no, source })?;

        if records.iter().any(|r| r.id == id) {
            return Err(CorpusError::DuplicateId { record: id, line: line_no });
        }
        records.push(CorpusRecord {
            id,
            table,
            origin: format!("corpus record at line {line_no}"),
        });
    }
    Ok(records)
}

/// Serialize records back to the corpus format. Labels are written whenever
/// they differ from the e0.. defaults.
pub fn write_corpus(records: &[CorpusRecord]) -> String {
    let mut out = String::new();
    for (k, rec) in records.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let n = rec.table.n();
        let default_labels = (0..n).all(|i| rec.table.label(i) == format!("e{i}"));
        out.push_str(&format!("id {} n {}", rec.id, n));
        if !default_labels {
            out.push_str(" labels");
            for i in 0..n {
                out.push(' ');
                out.push_str(rec.table.label(i));
            }
        }
        out.push('\n');
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| rec.table.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

/// The bundled regression records.
pub fn reference() -> Vec<CorpusRecord> {
    parse_corpus(REFERENCE_CORPUS).expect("bundled corpus parses")
}

/// Fetch one bundled table by id. Panics on unknown ids; this is a fixture
/// accessor for tests and the self-test suite.
pub fn reference_table(id: &str) -> MulTable {
    reference()
        .into_iter()
        .find(|r| r.id == id)
        .unwrap_or_else(|| panic!("no bundled table named {id}"))
        .table
}
