//! Line-oriented `.tbl` tables.
//!
//! `#table <name>` opens a table, the next non-comment line is a tab-separated
//! header, following lines are rows. `%` starts a comment. Files are read from
//! `$F4V_DATA_DIR` when set, otherwise the copies compiled into the crate are used.

use std::collections::HashMap;
use std::path::PathBuf;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Row {
    pub file: String,
    pub line: usize,
    pub fields: Vec<String>,
    cols: std::sync::Arc<HashMap<String, usize>>,
}

impl Row {
    pub fn get(&self, col: &str) -> Result<&str> {
        let i = *self.cols.get(col).ok_or_else(|| self.err(&format!("no column {}", col)))?;
        Ok(self.fields.get(i).map(|s| s.as_str()).unwrap_or(""))
    }

    pub fn parse<T: std::str::FromStr>(&self, col: &str) -> Result<T> {
        let s = self.get(col)?;
        s.trim().parse().map_err(|_| self.err(&format!("bad {} value {:?}", col, s)))
    }

    pub fn err(&self, msg: &str) -> Error {
        Error::Data { file: self.file.clone(), line: self.line, msg: msg.to_string() }
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Row>,
}

const EMBEDDED: &[(&str, &str)] = &[
    ("blocks_2f42.tbl", include_str!("../../../data/blocks_2f42.tbl")),
    ("blocks_3.tbl", include_str!("../../../data/blocks_3.tbl")),
    ("blocks_big.tbl", include_str!("../../../data/blocks_big.tbl")),
    ("blocks_e346.tbl", include_str!("../../../data/blocks_e346.tbl")),
    ("cc.tbl", include_str!("../../../data/cc.tbl")),
    ("ct.tbl", include_str!("../../../data/ct.tbl")),
    ("lifts.tbl", include_str!("../../../data/lifts.tbl")),
    ("radical3.tbl", include_str!("../../../data/radical3.tbl")),
    ("sigma.tbl", include_str!("../../../data/sigma.tbl")),
    ("sylow.tbl", include_str!("../../../data/sylow.tbl")),
    ("table23.tbl", include_str!("../../../data/table23.tbl")),
];

pub fn parse(file: &str, text: &str) -> Result<Vec<Table>> {
    let mut tables: Vec<Table> = Vec::new();
    let mut cols = std::sync::Arc::new(HashMap::new());
    let mut want_header = false;
    for (n, raw) in text.lines().enumerate() {
        let line = match raw.find('%') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let data_err = |msg: &str| Error::Data { file: file.to_string(), line: n + 1, msg: msg.to_string() };
        if let Some(name) = line.strip_prefix("#table") {
            let name = name.trim();
            if name.is_empty() {
                return Err(data_err("table without name"));
            }
            tables.push(Table { name: name.to_string(), header: Vec::new(), rows: Vec::new() });
            want_header = true;
            continue;
        }
        let Some(t) = tables.last_mut() else {
            return Err(data_err("row before #table"));
        };
        let fields: Vec<String> = line.split('\t').map(|s| s.trim().to_string()).collect();
        if want_header {
            cols = std::sync::Arc::new(fields.iter().enumerate().map(|(i, h)| (h.clone(), i)).collect());
            t.header = fields;
            want_header = false;
            continue;
        }
        if fields.len() > t.header.len() {
            return Err(data_err(&format!("{} fields, header has {}", fields.len(), t.header.len())));
        }
        t.rows.push(Row { file: file.to_string(), line: n + 1, fields, cols: cols.clone() });
    }
    Ok(tables)
}

fn source(file: &str) -> Result<String> {
    if let Ok(dir) = std::env::var("F4V_DATA_DIR") {
        let p = PathBuf::from(dir).join(file);
        return std::fs::read_to_string(&p).map_err(|e| Error::Data { file: p.display().to_string(), line: 0, msg: e.to_string() });
    }
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == file)
        .map(|(_, t)| t.to_string())
        .ok_or_else(|| Error::Data { file: file.to_string(), line: 0, msg: "no such data file".into() })
}

pub fn load(file: &str) -> Result<Vec<Table>> {
    parse(file, &source(file)?)
}

/// The single table `name` of `file`.
pub fn load_table(file: &str, name: &str) -> Result<Table> {
    load(file)?
        .into_iter()
        .find(|t| t.name == name)
        .ok_or_else(|| Error::Data { file: file.to_string(), line: 0, msg: format!("no table {}", name) })
}

/// Comma list of integers, `-` meaning empty.
pub fn int_list(row: &Row, col: &str) -> Result<Vec<i64>> {
    let s = row.get(col)?.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| row.err(&format!("bad integer {:?} in {}", x, col)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_header() {
        let t = parse("x", "% c\n#table a\nx\ty\n1\t2 % tail\n\n3\t4\n").unwrap();
        assert_eq!(t[0].rows.len(), 2);
        assert_eq!(t[0].rows[1].get("y").unwrap(), "4");
        assert_eq!(t[0].rows[0].line, 4);
    }

    #[test]
    fn too_many_fields_is_an_error() {
        assert!(parse("x", "#table a\nx\n1\t2\n").is_err());
    }
}
