//! Gray maps from `Z_{2^s}` (and `Z_{p^s}`) onto tuples over smaller rings,
//! their coordinate-wise extensions, and exhaustive verifiers.

mod carlet;
mod modular;
mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use carlet::CarletMap;
pub use modular::{compose_modular, eta, vega_map, xi, ComposedMap, ModularGrayMap, Variant};
pub use verify::{
    compare_tables, image_is_rm2, verify_composition_against, verify_composition_theorem, verify_isometry,
    verify_mapped_basis_independence, CompositionReport, IsometryReport, TableMatch, Violation,
};

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::format::MapTable;
use crate::ring::{RingMatrix, RingSpec, RingVector};

/// A total map from a ring to fixed-width tuples over another ring.
pub trait ElementMap {
    fn domain(&self) -> RingSpec;
    fn codomain(&self) -> RingSpec;
    /// Number of codomain symbols per domain symbol.
    fn width(&self) -> usize;
    /// Appends the image of `u` to `out`.
    fn write_image(&self, u: u64, out: &mut Vec<u64>) -> Result<()>;
    fn label(&self) -> String;

    fn image(&self, u: u64) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.width());
        self.write_image(u, &mut out)?;
        Ok(out)
    }

    fn table(&self) -> Result<MapTable> {
        let images = (0..self.domain().modulus()).map(|u| self.image(u)).collect::<Result<Vec<_>>>()?;
        MapTable::new(self.domain(), self.codomain(), images)
    }
}

impl ElementMap for MapTable {
    fn domain(&self) -> RingSpec {
        MapTable::domain(self)
    }

    fn codomain(&self) -> RingSpec {
        MapTable::codomain(self)
    }

    fn width(&self) -> usize {
        MapTable::width(self)
    }

    fn write_image(&self, u: u64, out: &mut Vec<u64>) -> Result<()> {
        self.domain().check(u)?;
        out.extend_from_slice(MapTable::image(self, u));
        Ok(())
    }

    fn label(&self) -> String {
        format!("table({} -> {}^{})", self.domain(), self.codomain(), self.width())
    }

    fn table(&self) -> Result<MapTable> {
        Ok(self.clone())
    }
}

/// How per-coordinate images are assembled into one vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Layout {
    /// `(a_1, b_1, a_2, b_2, ...)`: each coordinate's image stays contiguous.
    #[default]
    Blockwise,
    /// `(a_1, ..., a_n, b_1, ..., b_n)`: component-major.
    Split,
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layout::Blockwise => "blockwise",
            Layout::Split => "split",
        })
    }
}

impl FromStr for Layout {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "blockwise" => Ok(Layout::Blockwise),
            "split" => Ok(Layout::Split),
            other => Err(format!("unknown layout `{other}` (expected blockwise or split)")),
        }
    }
}

/// Places per-coordinate images (each of length `width`) according to `layout`.
pub(crate) fn assemble(images: &[u64], width: usize, layout: Layout) -> Vec<u64> {
    match layout {
        Layout::Blockwise => images.to_vec(),
        Layout::Split => {
            let n = images.len().checked_div(width).unwrap_or(0);
            let mut out = vec![0; images.len()];
            for (i, img) in images.chunks(width).enumerate() {
                for (c, &x) in img.iter().enumerate() {
                    out[c * n + i] = x;
                }
            }
            out
        }
    }
}

/// Coordinate-wise extension of `map` to vectors.
pub fn extend<M: ElementMap + ?Sized>(map: &M, layout: Layout, v: &RingVector) -> Result<RingVector> {
    if v.spec() != map.domain() {
        return Err(Error::RingMismatch { left: map.domain(), right: v.spec() });
    }
    let mut images = Vec::with_capacity(v.len() * map.width());
    for &u in v.entries() {
        map.write_image(u, &mut images)?;
    }
    RingVector::from_residues(map.codomain(), assemble(&images, map.width(), layout))
}

/// Applies the extension to each generator row.
///
/// For a nonlinear map the result generally spans a different code than the
/// image of the codeword set; see [`map_codeword_set`].
pub fn map_generator_rows<M: ElementMap + ?Sized>(map: &M, layout: Layout, gen: &RingMatrix) -> Result<RingMatrix> {
    let rows = gen.row_vectors().map(|r| extend(map, layout, &r)).collect::<Result<Vec<_>>>()?;
    RingMatrix::from_vectors(map.codomain(), gen.ncols() * map.width(), rows)
}

/// The image of every codeword.
pub fn map_codeword_set<M: ElementMap + ?Sized>(
    map: &M,
    layout: Layout,
    code: &LinearCode,
    cap: u64,
) -> Result<BTreeSet<RingVector>> {
    if code.spec() != map.domain() {
        return Err(Error::RingMismatch { left: map.domain(), right: code.spec() });
    }
    let table = map.table()?;
    let width = table.width();
    let codomain = table.codomain();
    let mut out = BTreeSet::new();
    let mut buf = Vec::new();
    code.for_each_codeword(cap, |w| {
        buf.clear();
        for &u in w {
            buf.extend_from_slice(table.image(u));
        }
        out.insert(RingVector::from_reduced(codomain, assemble(&buf, width, layout)));
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::codes::DEFAULT_CAP;

    fn z(s: u32) -> RingSpec {
        RingSpec::binary(s).unwrap()
    }

    #[test]
    fn extension_layouts() {
        let e3 = ModularGrayMap::eta(3).unwrap();
        let v = RingVector::new(z(3), [5i64, 7]);
        assert_eq!(extend(&e3, Layout::Blockwise, &v).unwrap().entries(), &[3, 3, 3, 1]);
        // first components (3, 3), second components (3, 1)
        assert_eq!(extend(&e3, Layout::Split, &v).unwrap().entries(), &[3, 3, 3, 1]);
        let w = RingVector::new(z(3), [2i64, 7]);
        assert_eq!(extend(&e3, Layout::Blockwise, &w).unwrap().entries(), &[0, 2, 3, 1]);
        assert_eq!(extend(&e3, Layout::Split, &w).unwrap().entries(), &[0, 3, 2, 1]);
        for layout in [Layout::Blockwise, Layout::Split] {
            assert!(extend(&e3, layout, &RingVector::zero(z(3), 0)).unwrap().is_empty());
        }
        assert!(matches!(
            extend(&e3, Layout::Split, &RingVector::zero(z(2), 1)),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn generator_rows() {
        let e2 = ModularGrayMap::eta(2).unwrap();
        let g = RingMatrix::new(z(2), 1, &[vec![1i64]]).unwrap();
        assert_eq!(map_generator_rows(&e2, Layout::Blockwise, &g).unwrap().rows(), &[vec![0, 1]]);
        let zero = RingMatrix::zeros(z(3), 2, 3);
        let e3 = ModularGrayMap::eta(3).unwrap();
        let img = map_generator_rows(&e3, Layout::Split, &zero).unwrap();
        assert!(img.is_zero());
        assert_eq!((img.nrows(), img.ncols()), (2, 6));
    }

    #[test]
    fn octocode_image_needs_xi_and_split() {
        let g8 = catalog::get_fixture("octocode_z8").unwrap().matrix().unwrap();
        let expected = catalog::get_fixture("octocode_image_expected").unwrap().matrix().unwrap();
        let xi3 = ModularGrayMap::xi(3).unwrap();
        let eta3 = ModularGrayMap::eta(3).unwrap();
        assert_eq!(&map_generator_rows(&xi3, Layout::Split, g8).unwrap(), expected);
        assert_ne!(&map_generator_rows(&xi3, Layout::Blockwise, g8).unwrap(), expected);
        assert_ne!(&map_generator_rows(&eta3, Layout::Split, g8).unwrap(), expected);
        assert_ne!(&map_generator_rows(&eta3, Layout::Blockwise, g8).unwrap(), expected);
    }

    #[test]
    fn codeword_images() {
        let e3 = ModularGrayMap::eta(3).unwrap();
        let full = LinearCode::full(z(3), 1);
        let img = map_codeword_set(&e3, Layout::Blockwise, &full, DEFAULT_CAP).unwrap();
        let table = catalog::get_fixture("eta_table_s3").unwrap().table().unwrap();
        let expected: BTreeSet<_> =
            table.images().iter().map(|p| RingVector::from_residues(z(2), p.clone()).unwrap()).collect();
        assert_eq!(img, expected);

        let four = LinearCode::new(RingMatrix::new(z(3), 1, &[vec![4i64]]).unwrap());
        let img = map_codeword_set(&e3, Layout::Blockwise, &four, DEFAULT_CAP).unwrap();
        let expected: BTreeSet<_> = [[0i64, 0], [2, 2]].iter().map(|p| RingVector::new(z(2), p.iter().copied())).collect();
        assert_eq!(img, expected);

        let zero = LinearCode::zero(z(3), 3);
        let img = map_codeword_set(&e3, Layout::Split, &zero, DEFAULT_CAP).unwrap();
        assert_eq!(img.into_iter().collect::<Vec<_>>(), vec![RingVector::zero(z(2), 6)]);
    }

    #[test]
    fn tables_act_as_maps() {
        let t = catalog::get_fixture("eta_table_s4").unwrap().table().unwrap();
        let v = RingVector::new(z(4), [15i64, 12]);
        assert_eq!(extend(t, Layout::Blockwise, &v).unwrap().entries(), &[7, 3, 4, 0]);
    }
}
