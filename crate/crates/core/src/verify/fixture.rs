//! The reference coefficient table, embedded as CSV (`k,j,printed,note`).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactalg::QPoly;

const TABLE_CSV: &str = include_str!("../../fixtures/coefficient_table.csv");

/// Largest `k` with reference coefficients.
pub const FIXTURE_K_MAX: u32 = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedCell {
    pub j: usize,
    pub value: QPoly,
    pub note: String,
}

#[derive(Deserialize)]
struct Record {
    k: u32,
    j: usize,
    printed: String,
    note: String,
}

fn parse(text: &str) -> Result<BTreeMap<u32, Vec<PrintedCell>>> {
    let mut table: BTreeMap<u32, Vec<PrintedCell>> = BTreeMap::new();
    for rec in csv::Reader::from_reader(text.as_bytes()).deserialize::<Record>() {
        let rec = rec.map_err(|e| Error::InvalidArgument(format!("coefficient table: {e}")))?;
        table.entry(rec.k).or_default().push(PrintedCell {
            j: rec.j,
            value: rec.printed.parse()?,
            note: rec.note,
        });
    }
    for (k, cells) in table.iter_mut() {
        cells.sort_by_key(|c| c.j);
        if cells.iter().enumerate().any(|(i, c)| c.j != i + 1) {
            return Err(Error::InvalidArgument(format!(
                "coefficient table: gap in row k={k}"
            )));
        }
    }
    Ok(table)
}

/// Printed rows keyed by `k`, with cells ordered by `j`.
pub fn printed_table() -> &'static BTreeMap<u32, Vec<PrintedCell>> {
    static TABLE: OnceLock<BTreeMap<u32, Vec<PrintedCell>>> = OnceLock::new();
    TABLE.get_or_init(|| parse(TABLE_CSV).expect("embedded coefficient table is well formed"))
}

/// Printed `c_1, ..., c_d` for `k`, if tabulated.
pub fn printed_row(k: u32) -> Option<Vec<QPoly>> {
    printed_table()
        .get(&k)
        .map(|cells| cells.iter().map(|c| c.value.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_every_k() {
        let t = printed_table();
        assert_eq!(
            t.keys().copied().collect::<Vec<_>>(),
            (0..=FIXTURE_K_MAX).collect::<Vec<_>>()
        );
        assert_eq!(printed_row(6).unwrap()[3], QPoly::linear(404, -62));
        assert_eq!(
            printed_row(10).unwrap()[6..],
            [QPoly::constant(814), QPoly::constant(4)]
        );
    }

    #[test]
    fn rejects_gaps() {
        assert!(parse("k,j,printed,note\n2,1,q,x\n2,3,1,x\n").is_err());
    }
}
