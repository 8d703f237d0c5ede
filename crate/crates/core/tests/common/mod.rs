#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use conceptkit::io::{read_context, ContextDocument};
use conceptkit::relation::{Relation, Subset};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn planets() -> ContextDocument {
    read_context(&data("planets.cxt")).unwrap()
}

pub const ENTITIES: [&str; 9] = ["Me", "V", "E", "Ma", "J", "S", "U", "N", "P"];
pub const ATTRIBUTES: [&str; 7] = ["ss", "sm", "sl", "dn", "df", "my", "mn"];

pub fn names(s: &Subset) -> BTreeSet<String> {
    s.names().into_iter().map(str::to_string).collect()
}

pub fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Rows of X/. characters, checked cell by cell against `r`.
pub fn matches_cross(r: &Relation, rows: &[&str]) -> Result<(), String> {
    if rows.len() != r.source().len() {
        return Err(format!("{} rows, expected {}", r.source().len(), rows.len()));
    }
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<bool> = row.chars().filter(|c| !c.is_whitespace()).map(|c| c == 'X').collect();
        if cells.len() != r.target().len() {
            return Err(format!("row {i}: {} columns, expected {}", r.target().len(), cells.len()));
        }
        for (j, &want) in cells.iter().enumerate() {
            if r.get(i, j) != want {
                return Err(format!("cell ({}, {}) is {}, expected {want}", r.source().element(i), r.target().element(j), r.get(i, j)));
            }
        }
    }
    Ok(())
}

pub const SOURCE_ORDER: [&str; 9] = [
    "XX.......",
    "XX.......",
    "..XX.....",
    "..XX.....",
    "....XX...",
    "....XX...",
    "......XX.",
    "......XX.",
    "........X",
];

pub const TARGET_ORDER: [&str; 7] = ["X......", ".X..XX.", "..X.XX.", "X..X...", "....XX.", ".....X.", "X..X..X"];

pub const SUM: [&str; 16] = [
    "XX....... X..X..X",
    "XX....... X..X..X",
    "..XX..... X..X.X.",
    "..XX..... X..X.X.",
    "....XX... ..X.XX.",
    "....XX... ..X.XX.",
    "......XX. .X..XX.",
    "......XX. .X..XX.",
    "........X X...XX.",
    ".........  X......",
    "......XX. .X..XX.",
    "....XX... ..X.XX.",
    "......... X..X...",
    "......... ....XX.",
    "......... .....X.",
    "XX....... X..X..X",
];

pub const NEGATION: [(&str, &str); 6] = [("sm", "U"), ("sm", "N"), ("sl", "J"), ("sl", "S"), ("mn", "Me"), ("mn", "V")];

const X0: &[&str] = &ENTITIES;
const X1: &[&str] = &ATTRIBUTES;

/// Extent and intent per row, in table order.
pub const CONCEPTS: [(&[&str], &[&str]); 12] = [
    (X0, &[]),
    (&["E", "Ma", "J", "S", "U", "N", "P"], &["my"]),
    (&["Me", "V", "E", "Ma", "P"], &["ss"]),
    (&["E", "Ma", "P"], &["ss", "my"]),
    (&["J", "S", "U", "N", "P"], &["df", "my"]),
    (&["Me", "V", "E", "Ma"], &["ss", "dn"]),
    (&["P"], &["ss", "df", "my"]),
    (&["U", "N"], &["sm", "df", "my"]),
    (&["J", "S"], &["sl", "df", "my"]),
    (&["E", "Ma"], &["ss", "dn", "my"]),
    (&["Me", "V"], &["ss", "dn", "mn"]),
    (&[], X1),
];

/// φ₀, φ₁, ψ₀, ψ₁ per row, in table order.
pub const QUADS: [[&[&str]; 4]; 12] = [
    [X0, X1, &[], &[]],
    [&["E", "Ma", "J", "S", "U", "N", "P"], &["sm", "sl", "df", "my"], &[], &["my"]],
    [&["Me", "V", "E", "Ma", "P"], &["ss", "dn", "mn"], &[], &["ss"]],
    [&["E", "Ma", "P"], &[], &[], &["ss", "my"]],
    [&["J", "S", "U", "N", "P"], &["sm", "sl", "df"], &[], &["df", "my"]],
    [&["Me", "V", "E", "Ma"], &["dn", "mn"], &[], &["ss", "dn"]],
    [&["P"], &[], &["P"], &["ss", "df", "my"]],
    [&["U", "N"], &["sm"], &["U", "N"], &["sm", "df", "my"]],
    [&["J", "S"], &["sl"], &["J", "S"], &["sl", "df", "my"]],
    [&["E", "Ma"], &[], &["E", "Ma"], &["ss", "dn", "my"]],
    [&["Me", "V"], &["mn"], &["Me", "V"], &["ss", "dn", "mn"]],
    [&[], &[], X0, X1],
];

/// Covers of the inclusion order on `extents`, by brute force over triples.
pub fn transitive_reduction(extents: &[BTreeSet<String>]) -> BTreeSet<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && extents[a].is_subset(&extents[b]);
    let n = extents.len();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.insert((a, b));
            }
        }
    }
    out
}
