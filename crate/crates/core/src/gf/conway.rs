use std::sync::OnceLock;

use serde::Deserialize;

const TABLE: &str = include_str!("../../../../data/conway.json");

#[derive(Deserialize)]
struct Entry {
    p: u64,
    k: u32,
    poly: Vec<u64>,
}

#[derive(Deserialize)]
struct Table {
    entries: Vec<Entry>,
}

fn table() -> &'static Table {
    static CELL: OnceLock<Table> = OnceLock::new();
    CELL.get_or_init(|| serde_json::from_str(TABLE).expect("shipped Conway table parses"))
}

/// Shipped Conway polynomial of GF(p^k), coefficients low to high.
pub fn conway_polynomial(p: u64, k: u32) -> Option<Vec<u64>> {
    table().entries.iter().find(|e| e.p == p && e.k == k).map(|e| e.poly.clone())
}

/// All `(p, k)` pairs in the shipped table.
pub fn conway_entries() -> Vec<(u64, u32)> {
    table().entries.iter().map(|e| (e.p, e.k)).collect()
}
