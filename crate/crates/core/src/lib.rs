//! Linear codes over the chain rings `Z_{p^s}` and Gray maps between them.
//!
//! - [`ring`]: residue arithmetic, p-adic digits, vectors and matrices.
//! - [`weights`]: Hamming, Lee, Euclidean, Chinese-Euclidean and homogeneous weights.
//! - [`codes`]: standard forms, p-bases, enumeration, duals.
//! - [`graymaps`]: the modular Gray map `eta^s`, its permuted variant `xi^s`,
//!   the generalized map of Carlet, compositions, and exhaustive verifiers.
//! - [`catalog`]: named fixtures (the Octocode, Reed-Muller generators, map tables).
//! - [`format`]: the text file formats for matrices and map tables.

pub mod catalog;
pub mod codes;
pub mod error;
pub mod format;
pub mod graymaps;
pub mod ring;
pub mod weights;

pub use codes::{LinearCode, PBasis, StandardForm, DEFAULT_CAP};
pub use error::{Error, Result};
pub use format::MapTable;
pub use graymaps::{CarletMap, ComposedMap, ElementMap, IsometryReport, Layout, ModularGrayMap, Variant};
pub use ring::{RingElement, RingMatrix, RingSpec, RingVector};
pub use weights::{WeightKind, WeightValue};
