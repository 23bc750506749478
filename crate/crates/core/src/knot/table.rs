//! Knot tables: CSV files with header `name,format,code`.

use std::collections::HashMap;
use std::io::Read;

use super::{Format, KnotCode};
use crate::error::Error;

const BUNDLED: &str = include_str!("../../data/knots.csv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTableEntry {
    pub name: String,
    pub format: Format,
    pub code: KnotCode,
}

#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    entries: Vec<KnotTableEntry>,
    by_name: HashMap<String, usize>,
}

impl KnotTable {
    /// unknot (kink), trefoil, figure-eight, 5_1 and 5_2.
    pub fn bundled() -> Self {
        Self::from_reader(BUNDLED.as_bytes()).expect("bundled knot table is valid")
    }

    pub fn from_path(path: impl AsRef<std::path::Path>) -> Result<Self, Error> {
        let f = std::fs::File::open(path)?;
        Self::from_reader(f)
    }

    /// Reads a table; the first row must be the header. Errors carry the
    /// 1-based line number of the offending record.
    pub fn from_reader<R: Read>(r: R) -> Result<Self, Error> {
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(r);
        let headers = rdr.headers()?.clone();
        let expect = ["name", "format", "code"];
        if headers.len() != 3 || headers.iter().zip(expect).any(|(h, e)| h != e) {
            return Err(Error::Table(format!(
                "expected header 'name,format,code', found '{}'",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut table = Self::default();
        for rec in rdr.records() {
            let rec = rec?;
            let line = rec.position().map_or(0, |p| p.line());
            let at = |msg: String| Error::Table(format!("line {line}: {msg}"));
            if rec.len() != 3 {
                return Err(at(format!("expected 3 fields, found {}", rec.len())));
            }
            let name = rec[0].to_string();
            if name.is_empty() {
                return Err(at("empty knot name".into()));
            }
            let format: Format = rec[1].parse().map_err(|e: Error| at(e.to_string()))?;
            let code = KnotCode::parse(format, &rec[2]).map_err(|e| at(e.to_string()))?;
            table
                .push(KnotTableEntry { name, format, code })
                .map_err(|e| at(e.to_string()))?;
        }
        Ok(table)
    }

    pub fn push(&mut self, entry: KnotTableEntry) -> Result<(), Error> {
        if self.by_name.contains_key(&entry.name) {
            return Err(Error::Table(format!("duplicate knot name '{}'", entry.name)));
        }
        self.by_name.insert(entry.name.clone(), self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&KnotTableEntry> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    pub fn entries(&self) -> &[KnotTableEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
