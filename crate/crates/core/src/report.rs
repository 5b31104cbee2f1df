//! Machine-readable run reports and recomputation of the split-place tables.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::make_field;
use crate::good::{count_split_places_with, s5_quintic_window, SplitMethod};
use crate::poly::Poly;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Outcome of one command. `results` is reproducible byte-for-byte from
/// `parameters`; `seconds` is not.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Value,
    pub results: Value,
    pub seconds: f64,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str, parameters: Value, results: Value, started: Instant) -> RunReport {
        RunReport {
            command: command.to_string(),
            parameters,
            results,
            seconds: started.elapsed().as_secs_f64(),
            version: VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// One of the three split-place tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    A,
    B,
    C,
}

impl Table {
    pub fn parse_selection(which: &str) -> Result<Vec<Table>> {
        match which.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(vec![Table::A]),
            "b" => Ok(vec![Table::B]),
            "c" => Ok(vec![Table::C]),
            "all" => Ok(vec![Table::A, Table::B, Table::C]),
            other => Err(Error::Parse(format!("unknown table {other:?}; expected a, b, c or all"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Table::A => "a",
            Table::B => "b",
            Table::C => "c",
        }
    }

    /// Coefficients of the quintic, constant term first.
    pub fn poly_coeffs(self) -> [i64; 6] {
        match self {
            Table::A => [0, 0, 1, 1, 0, 1],
            Table::B => [0, 0, 1, -1, 0, 1],
            Table::C => [0, 0, 3, 1, 0, 1],
        }
    }

    /// Fields as (p, m).
    pub fn fields(self) -> Vec<(u64, u32)> {
        match self {
            Table::A => vec![(2, 13), (2, 15), (2, 17), (2, 19)],
            Table::B => vec![(3, 7), (3, 9), (3, 11), (3, 13)],
            Table::C => [19583, 19597, 19687, 19753, 19793, 19913, 19927, 19963, 19993, 19997]
                .iter()
                .map(|&p| (p, 1))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub table: &'static str,
    pub field: String,
    pub q: u64,
    pub modulus: Option<Vec<u32>>,
    pub poly: String,
    pub count: u64,
    /// `floor(q/120)`, the heuristic density of totally split places.
    pub q_over_120: u64,
    /// S_5 quintic window with genus constant 36.
    pub lower: i64,
    pub upper: i64,
}

pub fn table_rows(tables: &[Table], threads: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for &table in tables {
        for (p, m) in table.fields() {
            let field = make_field(p, m, None)?;
            let f = Poly::from_ints(&field, &table.poly_coeffs());
            let q = field.order() as u64;
            let count = count_split_places_with(&f, SplitMethod::FiberTally, threads)?;
            let window = s5_quintic_window(q);
            rows.push(TableRow {
                table: table.label(),
                field: field.spec(),
                q,
                modulus: field.modulus().map(<[u32]>::to_vec),
                poly: f.to_string(),
                count,
                q_over_120: q / 120,
                lower: window.lower,
                upper: window.upper,
            });
        }
    }
    Ok(rows)
}

pub fn tables_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("table,field,q,modulus,poly,count,q_over_120,lower,upper\n");
    for r in rows {
        let modulus = r
            .modulus
            .as_ref()
            .map(|m| m.iter().map(u32::to_string).collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.table, r.field, r.q, modulus, r.poly, r.count, r.q_over_120, r.lower, r.upper
        ));
    }
    out
}

pub fn cmd_tables(which: &str, threads: usize) -> Result<RunReport> {
    let started = Instant::now();
    let tables = Table::parse_selection(which)?;
    let rows = table_rows(&tables, threads)?;
    Ok(RunReport::new("tables", json!({ "which": which }), json!({ "rows": rows }), started))
}
