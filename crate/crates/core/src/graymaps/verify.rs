//! Exhaustive checks of distance preservation, the composition identity,
//! the Reed-Muller image and independence of mapped p-basis rows.

use std::collections::{BTreeSet, HashMap};

use crate::codes::{is_p_linearly_independent, LinearCode};
use crate::error::{Error, Result};
use crate::format::MapTable;
use crate::graymaps::{assemble, compose_modular, extend, CarletMap, ElementMap, Layout, ModularGrayMap};
use crate::ring::{RingMatrix, RingVector};
use crate::weights::{weight_of, WeightKind, WeightValue};

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub u: RingVector,
    pub v: RingVector,
    /// Distance between `u` and `v` in the domain.
    pub source: WeightValue,
    /// Distance between their images.
    pub target: WeightValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsometryReport {
    pub checked_pairs: u64,
    pub violations: Vec<Violation>,
    pub verdict: bool,
}

impl IsometryReport {
    pub fn merge(mut self, other: IsometryReport) -> IsometryReport {
        self.checked_pairs += other.checked_pairs;
        self.violations.extend(other.violations);
        self.verdict = self.verdict && other.verdict;
        self
    }
}

/// Checks `d_src(u, v) == d_dst(map(u), map(v))` for every ordered pair of
/// length-`n` vectors over the map's domain.
pub fn verify_isometry<M: ElementMap + ?Sized>(
    map: &M,
    layout: Layout,
    src: WeightKind,
    dst: WeightKind,
    n: usize,
    cap: u64,
) -> Result<IsometryReport> {
    let domain = map.domain();
    let codomain = map.codomain();
    let m = domain.modulus() as u128;
    let words = m.checked_pow(n as u32).unwrap_or(u128::MAX);
    let pairs = words.saturating_mul(words);
    if pairs > cap as u128 {
        return Err(Error::CapExceeded { needed: pairs, cap });
    }
    let table = map.table()?;
    let width = table.width();

    let mut vectors = Vec::with_capacity(words as usize);
    let mut images = Vec::with_capacity(words as usize);
    let mut cur = vec![0u64; n];
    let mut buf = Vec::with_capacity(n * width);
    for _ in 0..words {
        buf.clear();
        for &u in &cur {
            buf.extend_from_slice(table.image(u));
        }
        vectors.push(cur.clone());
        images.push(assemble(&buf, width, layout));
        for x in cur.iter_mut() {
            *x += 1;
            if (*x as u128) < m {
                break;
            }
            *x = 0;
        }
    }

    let mut violations = Vec::new();
    let mut diff = vec![0u64; n];
    let mut img_diff = vec![0u64; n * width];
    for (a, ia) in vectors.iter().zip(&images) {
        for (b, ib) in vectors.iter().zip(&images) {
            for ((d, &x), &y) in diff.iter_mut().zip(a).zip(b) {
                *d = domain.sub(x, y);
            }
            for ((d, &x), &y) in img_diff.iter_mut().zip(ia).zip(ib) {
                *d = codomain.sub(x, y);
            }
            let source = weight_of(domain, &diff, src);
            let target = weight_of(codomain, &img_diff, dst);
            if source != target {
                violations.push(Violation {
                    u: RingVector::from_reduced(domain, a.clone()),
                    v: RingVector::from_reduced(domain, b.clone()),
                    source,
                    target,
                });
            }
        }
    }
    Ok(IsometryReport { checked_pairs: pairs as u64, verdict: violations.is_empty(), violations })
}

/// How two element-map tables relate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableMatch {
    Exact,
    /// `left.image(u)[perm[j]] == right.image(u)[j]` for all `u`, `j`.
    Permuted(Vec<usize>),
    Unequal,
}

pub fn compare_tables(left: &MapTable, right: &MapTable) -> TableMatch {
    if left.domain() != right.domain() || left.codomain() != right.codomain() || left.width() != right.width() {
        return TableMatch::Unequal;
    }
    if left == right {
        return TableMatch::Exact;
    }
    let column = |t: &MapTable, j: usize| t.images().iter().map(|img| img[j]).collect::<Vec<_>>();
    let mut by_column: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for j in (0..left.width()).rev() {
        by_column.entry(column(left, j)).or_default().push(j);
    }
    let mut perm = Vec::with_capacity(right.width());
    for j in 0..right.width() {
        match by_column.get_mut(&column(right, j)).and_then(Vec::pop) {
            Some(i) => perm.push(i),
            None => return TableMatch::Unequal,
        }
    }
    TableMatch::Permuted(perm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionReport {
    pub s: u32,
    pub verdict: TableMatch,
    /// `eta^s . ... . eta^2`, one row per element of `Z_{2^s}`.
    pub composed: MapTable,
    pub carlet: MapTable,
}

impl CompositionReport {
    pub fn is_exact(&self) -> bool {
        self.verdict == TableMatch::Exact
    }
}

/// Compares the full chain of modular Gray maps with the generalized map
/// under its default point order.
pub fn verify_composition_theorem(s: u32) -> Result<CompositionReport> {
    verify_composition_against(s, &CarletMap::new(2, s)?)
}

pub fn verify_composition_against(s: u32, carlet: &CarletMap) -> Result<CompositionReport> {
    if !(2..=12).contains(&s) {
        return Err(Error::UnsupportedMap(format!("composition check supports 2 <= s <= 12, got s={s}")));
    }
    if carlet.domain().p() != 2 || carlet.domain().s() != s {
        return Err(Error::RingMismatch { left: carlet.domain(), right: crate::ring::RingSpec::binary(s)? });
    }
    let composed = compose_modular(s)?.table()?;
    let carlet = carlet.table()?;
    Ok(CompositionReport { s, verdict: compare_tables(&composed, &carlet), composed, carlet })
}

/// Whether `{eta^s(u)}` is exactly the code over `Z_{2^{s-1}}` spanned by
/// `(1, 1)` and `(0, 2^{s-2})`.
pub fn image_is_rm2(s: u32) -> Result<bool> {
    let map = ModularGrayMap::eta(s)?;
    let target = map.codomain();
    let images: BTreeSet<RingVector> = (0..map.domain().modulus())
        .map(|u| RingVector::from_residues(target, map.image(u)?))
        .collect::<Result<_>>()?;
    let rm = LinearCode::new(RingMatrix::new(target, 2, &[vec![1i128, 1], vec![0, 1i128 << (s - 2)]])?);
    Ok(images == rm.codeword_set(u64::MAX)?)
}

/// Maps the p-basis rows of `code`'s standard form under `eta^s` and tests
/// them for 2-linear independence over `Z_{2^{s-1}}`.
pub fn verify_mapped_basis_independence(code: &LinearCode, layout: Layout, cap: u64) -> Result<bool> {
    let spec = code.spec();
    if spec.p() != 2 {
        return Err(Error::UnsupportedMap(format!("the modular Gray map acts on Z_(2^s), not {spec}")));
    }
    let map = ModularGrayMap::eta(spec.s())?;
    let basis = code.standard_form().p_basis();
    let images = basis.rows().row_vectors().map(|r| extend(&map, layout, &r)).collect::<Result<Vec<_>>>()?;
    is_p_linearly_independent(&images, map.codomain(), cap)
}
