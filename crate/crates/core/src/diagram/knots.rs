//! Named knots shipped with the crate, one per line:
//! `name | crossing records separated by ';' | determinant`.

use std::sync::OnceLock;

use serde::Serialize;

use super::{parse_pd, DiagramError, SemiarcDiagram};

const BUILTIN: &str = include_str!("../../data/knots.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    pub name: String,
    pub diagram: SemiarcDiagram,
    pub determinant: Option<u64>,
}

#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
}

impl KnotTable {
    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.iter().map(|r| r.name.as_str())
    }
}

pub fn parse_knot_table(text: &str) -> Result<KnotTable, DiagramError> {
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let bad = |msg: String| DiagramError::Parse { line: line_no, msg };
        if !(2..=3).contains(&fields.len()) || fields[0].is_empty() {
            return Err(bad("expected `name | crossings | determinant`".into()));
        }
        let pd = fields[1].replace(';', "\n");
        let diagram = parse_pd(&pd).map_err(|e| bad(format!("{}: {e}", fields[0])))?;
        let determinant = match fields.get(2).filter(|f| !f.is_empty()) {
            Some(f) => Some(
                f.parse::<u64>()
                    .ok()
                    .filter(|&d| d > 0)
                    .ok_or_else(|| bad(format!("determinant must be a positive integer, found {f:?}")))?,
            ),
            None => None,
        };
        if records.iter().any(|r: &KnotRecord| r.name == fields[0]) {
            return Err(bad(format!("duplicate knot name {}", fields[0])));
        }
        records.push(KnotRecord { name: fields[0].to_string(), diagram, determinant });
    }
    Ok(KnotTable { records })
}

/// The shipped table, parsed once.
pub fn builtin_knots() -> &'static KnotTable {
    static TABLE: OnceLock<KnotTable> = OnceLock::new();
    TABLE.get_or_init(|| parse_knot_table(BUILTIN).expect("shipped knot table parses"))
}
