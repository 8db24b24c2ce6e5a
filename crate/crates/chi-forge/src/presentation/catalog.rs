//! Built-in presentations of small groups with declared order and Schur
//! multiplier invariants. Orders are confirmed by enumeration tests; the
//! multiplier data is checked against the computed `W/R` quotients.

use thiserror::Error;

use super::Presentation;
use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog group `{0}`")]
    UnknownName(String),
}

/// One catalog row: presentation plus independently derived reference data.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub order: u64,
    /// Schur multiplier as prime-power invariants, ascending.
    pub multiplier: &'static [u64],
    gens: &'static [&'static str],
    relators: &'static [&'static [i32]],
}

impl CatalogEntry {
    pub fn presentation(&self) -> Presentation {
        let relators = self
            .relators
            .iter()
            .map(|r| Word::from_letters(r.iter().copied()))
            .collect();
        Presentation::new(
            self.name.to_owned(),
            self.gens.iter().map(|g| (*g).to_owned()).collect(),
            relators,
        )
        .expect("catalog entries are valid presentations")
    }
}

const A: i32 = 1;
const B: i32 = 2;
const C: i32 = 3;

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "C2",
        order: 2,
        multiplier: &[],
        gens: &["a"],
        relators: &[&[A, A]],
    },
    CatalogEntry {
        name: "C3",
        order: 3,
        multiplier: &[],
        gens: &["a"],
        relators: &[&[A, A, A]],
    },
    CatalogEntry {
        name: "C4",
        order: 4,
        multiplier: &[],
        gens: &["a"],
        relators: &[&[A, A, A, A]],
    },
    CatalogEntry {
        name: "C5",
        order: 5,
        multiplier: &[],
        gens: &["a"],
        relators: &[&[A, A, A, A, A]],
    },
    CatalogEntry {
        name: "C6",
        order: 6,
        multiplier: &[],
        gens: &["a"],
        relators: &[&[A, A, A, A, A, A]],
    },
    CatalogEntry {
        name: "C8",
        order: 8,
        multiplier: &[],
        gens: &["a"],
        relators: &[&[A, A, A, A, A, A, A, A]],
    },
    CatalogEntry {
        name: "C2xC2",
        order: 4,
        multiplier: &[2],
        gens: &["a", "b"],
        relators: &[&[A, A], &[B, B], &[-A, -B, A, B]],
    },
    CatalogEntry {
        name: "C2xC4",
        order: 8,
        multiplier: &[2],
        gens: &["a", "b"],
        relators: &[&[A, A], &[B, B, B, B], &[-A, -B, A, B]],
    },
    CatalogEntry {
        name: "C2xC2xC2",
        order: 8,
        multiplier: &[2, 2, 2],
        gens: &["a", "b", "c"],
        relators: &[
            &[A, A],
            &[B, B],
            &[C, C],
            &[-A, -B, A, B],
            &[-A, -C, A, C],
            &[-B, -C, B, C],
        ],
    },
    CatalogEntry {
        name: "S3",
        order: 6,
        multiplier: &[],
        gens: &["a", "b"],
        relators: &[&[A, A], &[B, B, B], &[A, B, A, B]],
    },
    CatalogEntry {
        name: "D4",
        order: 8,
        multiplier: &[2],
        gens: &["a", "b"],
        relators: &[&[A, A], &[B, B, B, B], &[A, B, A, B]],
    },
    CatalogEntry {
        name: "Q8",
        order: 8,
        multiplier: &[],
        gens: &["a", "b"],
        relators: &[&[A, A, A, A], &[A, A, -B, -B], &[-B, A, B, A]],
    },
    CatalogEntry {
        name: "C3xC3",
        order: 9,
        multiplier: &[3],
        gens: &["a", "b"],
        relators: &[&[A, A, A], &[B, B, B], &[-A, -B, A, B]],
    },
    CatalogEntry {
        name: "D5",
        order: 10,
        multiplier: &[],
        gens: &["a", "b"],
        relators: &[&[A, A], &[B, B, B, B, B], &[A, B, A, B]],
    },
    CatalogEntry {
        name: "A4",
        order: 12,
        multiplier: &[2],
        gens: &["a", "b"],
        relators: &[&[A, A], &[B, B, B], &[A, B, A, B, A, B]],
    },
    CatalogEntry {
        name: "D6",
        order: 12,
        multiplier: &[2],
        gens: &["a", "b"],
        relators: &[&[A, A], &[B, B, B, B, B, B], &[A, B, A, B]],
    },
];

/// All entries, ascending by (order, name) — the survey row order.
pub fn catalog_entries() -> Vec<&'static CatalogEntry> {
    let mut entries: Vec<&'static CatalogEntry> = ENTRIES.iter().collect();
    entries.sort_by_key(|e| (e.order, e.name));
    entries
}

pub fn catalog_lookup(name: &str) -> Result<Presentation, CatalogError> {
    catalog_entry(name).map(CatalogEntry::presentation)
}

pub fn catalog_entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_owned()))
}
