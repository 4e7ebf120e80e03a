//! Named fixtures: generator matrices, expected image matrices and map tables.
//!
//! The payloads are data files under `fixtures/`, embedded at compile time
//! and parsed on access. Map tables here are transcriptions, kept apart
//! from the formulas in [`crate::graymaps`] so the two can be compared.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::format::{self, MapTable};
use crate::ring::{RingMatrix, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    GeneratorMatrix,
    ExpectedMatrix,
    MapTable,
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureKind::GeneratorMatrix => "generator_matrix",
            FixtureKind::ExpectedMatrix => "expected_matrix",
            FixtureKind::MapTable => "map_table",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Matrix(RingMatrix),
    Table(MapTable),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedFixture {
    pub name: &'static str,
    pub kind: FixtureKind,
    /// The matrix ring, or the domain ring of a map table.
    pub ring: RingSpec,
    pub payload: Payload,
    pub provenance: &'static str,
    pub note: Option<&'static str>,
    /// The embedded file text.
    pub source: &'static str,
}

impl NamedFixture {
    pub fn matrix(&self) -> Option<&RingMatrix> {
        match &self.payload {
            Payload::Matrix(m) => Some(m),
            Payload::Table(_) => None,
        }
    }

    pub fn table(&self) -> Option<&MapTable> {
        match &self.payload {
            Payload::Table(t) => Some(t),
            Payload::Matrix(_) => None,
        }
    }

    /// Re-serializes the payload in the file format.
    pub fn serialize(&self) -> String {
        match &self.payload {
            Payload::Matrix(m) => format::write_matrix(m),
            Payload::Table(t) => format::write_table(t),
        }
    }
}

/// Label mismatch carried by the Octocode fixtures.
pub const OCTOCODE_LABEL_NOTE: &str = "the printed image matrix is labelled as the eta^3 image of G_8, \
but its entries are reproduced only by the permuted map xi^3 with split layout; eta^3 gives a different matrix";

struct Entry {
    name: &'static str,
    kind: FixtureKind,
    provenance: &'static str,
    note: Option<&'static str>,
    source: &'static str,
}

macro_rules! fixture {
    ($name:literal, $kind:expr, $prov:literal) => {
        fixture!($name, $kind, $prov, None)
    };
    ($name:literal, $kind:expr, $prov:literal, $note:expr) => {
        Entry {
            name: $name,
            kind: $kind,
            provenance: $prov,
            note: $note,
            source: include_str!(concat!("../fixtures/", $name, ".txt")),
        }
    };
}

// Sorted by name.
const REGISTRY: &[Entry] = &[
    fixture!("eta_table_s2", FixtureKind::MapTable, "modular Gray map table Z_4 -> Z_2^2"),
    fixture!("eta_table_s3", FixtureKind::MapTable, "modular Gray map table Z_8 -> Z_4^2"),
    fixture!("eta_table_s4", FixtureKind::MapTable, "modular Gray map table Z_16 -> Z_8^2"),
    fixture!("gray_classical", FixtureKind::MapTable, "classical Gray map Z_4 -> Z_2^2"),
    fixture!(
        "octocode_image_expected",
        FixtureKind::ExpectedMatrix,
        "printed 4x16 image of the Octocode generator over Z_4 (first components | second components)",
        Some(OCTOCODE_LABEL_NOTE)
    ),
    fixture!(
        "octocode_z8",
        FixtureKind::GeneratorMatrix,
        "generator matrix G_8 of the Octocode over Z_8",
        Some(OCTOCODE_LABEL_NOTE)
    ),
    fixture!(
        "rm_1_2_z4",
        FixtureKind::GeneratorMatrix,
        "first-order Reed-Muller generator [[1,1],[0,2^(s-2)]] of length 2 at s=3, over Z_4"
    ),
    fixture!("xi_table_s2", FixtureKind::MapTable, "permuted modular Gray map table Z_4 -> Z_2^2"),
    fixture!("xi_table_s3", FixtureKind::MapTable, "permuted modular Gray map table Z_8 -> Z_4^2"),
    fixture!("xi_table_s4", FixtureKind::MapTable, "permuted modular Gray map table Z_16 -> Z_8^2"),
];

fn load(e: &Entry) -> NamedFixture {
    let (ring, payload) = match e.kind {
        FixtureKind::MapTable => {
            let t = format::parse_table(e.source).unwrap_or_else(|err| panic!("fixture {}: {err}", e.name));
            (t.domain(), Payload::Table(t))
        }
        _ => {
            let m = format::parse_matrix(e.source).unwrap_or_else(|err| panic!("fixture {}: {err}", e.name));
            (m.spec(), Payload::Matrix(m))
        }
    };
    NamedFixture { name: e.name, kind: e.kind, ring, payload, provenance: e.provenance, note: e.note, source: e.source }
}

fn all() -> &'static [NamedFixture] {
    static CACHE: OnceLock<Vec<NamedFixture>> = OnceLock::new();
    CACHE.get_or_init(|| REGISTRY.iter().map(load).collect())
}

pub fn list_fixtures() -> Vec<&'static str> {
    all().iter().map(|f| f.name).collect()
}

pub fn get_fixture(name: &str) -> Result<&'static NamedFixture> {
    all().iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

/// The tabulated permuted map for `s` in `{2, 3, 4}`.
pub fn xi_table(s: u32) -> Result<&'static MapTable> {
    let name = match s {
        2 => "xi_table_s2",
        3 => "xi_table_s3",
        4 => "xi_table_s4",
        _ => return Err(Error::XiUndefined(s)),
    };
    Ok(get_fixture(name)?.table().expect("xi fixtures are tables"))
}
