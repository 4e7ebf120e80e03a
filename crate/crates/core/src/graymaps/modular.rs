use std::fmt;
use std::str::FromStr;

use crate::catalog;
use crate::error::{Error, Result};
use crate::format::MapTable;
use crate::graymaps::ElementMap;
use crate::ring::RingSpec;

/// The modular Gray map `eta^s : Z_{2^s} -> Z_{2^{s-1}}^2`.
///
/// `Z_{2^s}` is cut into four consecutive quarters `A_1..A_4` of size
/// `q = 2^{s-2}`, and `i` maps to `(i, i)`, `(i - q, i)`, `(i - q, i - q)`
/// or `(i - 2q, i - 3q)` on the respective quarter.
pub fn eta(s: u32, u: u64) -> Result<(u64, u64)> {
    let domain = check_level(s)?;
    domain.check(u)?;
    let q = 1u64 << (s - 2);
    Ok(match u / q {
        0 => (u, u),
        1 => (u - q, u),
        2 => (u - q, u - q),
        _ => (u - 2 * q, u - 3 * q),
    })
}

/// The permuted modular Gray map, defined by table for `s` in `{2, 3, 4}` only.
pub fn xi(s: u32, u: u64) -> Result<(u64, u64)> {
    let table = catalog::xi_table(s)?;
    table.domain().check(u)?;
    let img = table.image(u);
    Ok((img[0], img[1]))
}

fn check_level(s: u32) -> Result<RingSpec> {
    if s < 2 {
        return Err(Error::UnsupportedMap(format!("modular Gray maps need s >= 2, got s={s}")));
    }
    RingSpec::binary(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Eta,
    Xi,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Eta => "eta",
            Variant::Xi => "xi",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eta" => Ok(Variant::Eta),
            "xi" => Ok(Variant::Xi),
            other => Err(format!("unknown Gray map variant `{other}`")),
        }
    }
}

/// `eta^s` or `xi^s` as an [`ElementMap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularGrayMap {
    s: u32,
    variant: Variant,
    domain: RingSpec,
    codomain: RingSpec,
}

impl ModularGrayMap {
    pub fn new(s: u32, variant: Variant) -> Result<Self> {
        let domain = check_level(s)?;
        if variant == Variant::Xi && !(2..=4).contains(&s) {
            return Err(Error::XiUndefined(s));
        }
        Ok(Self { s, variant, domain, codomain: RingSpec::binary(s - 1)? })
    }

    pub fn eta(s: u32) -> Result<Self> {
        Self::new(s, Variant::Eta)
    }

    pub fn xi(s: u32) -> Result<Self> {
        Self::new(s, Variant::Xi)
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn pair(&self, u: u64) -> Result<(u64, u64)> {
        match self.variant {
            Variant::Eta => eta(self.s, u),
            Variant::Xi => xi(self.s, u),
        }
    }
}

impl ElementMap for ModularGrayMap {
    fn domain(&self) -> RingSpec {
        self.domain
    }

    fn codomain(&self) -> RingSpec {
        self.codomain
    }

    fn width(&self) -> usize {
        2
    }

    fn write_image(&self, u: u64, out: &mut Vec<u64>) -> Result<()> {
        let (a, b) = self.pair(u)?;
        out.push(a);
        out.push(b);
        Ok(())
    }

    fn label(&self) -> String {
        format!("{}^{}", self.variant, self.s)
    }
}

/// A chain of modular Gray maps `Z_{2^s} -> Z_{2^{s-1}}^2 -> ... -> Z_{2^t}^{2^{s-t}}`,
/// each stage applied coordinate-wise with image pairs kept adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedMap {
    stages: Vec<ModularGrayMap>,
}

impl ComposedMap {
    /// Stages must be listed from the top ring down, with consecutive levels.
    pub fn new(stages: Vec<ModularGrayMap>) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::UnsupportedMap("a composed map needs at least one stage".into()));
        }
        for w in stages.windows(2) {
            if w[1].s + 1 != w[0].s {
                return Err(Error::UnsupportedMap(format!(
                    "stage {} cannot follow stage {}",
                    w[1].label(),
                    w[0].label()
                )));
            }
        }
        Ok(Self { stages })
    }

    /// Stages `variants[0]^s`, `variants[1]^{s-1}`, ... for as many variants as given.
    pub fn chain(s: u32, variants: &[Variant]) -> Result<Self> {
        if variants.len() as u32 >= s {
            return Err(Error::UnsupportedMap(format!("at most {} stages start from s={s}", s.saturating_sub(1))));
        }
        let stages = variants
            .iter()
            .enumerate()
            .map(|(i, &v)| ModularGrayMap::new(s - i as u32, v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(stages)
    }

    pub fn stages(&self) -> &[ModularGrayMap] {
        &self.stages
    }

    /// Builds the table by composing per-stage tables, without evaluating
    /// any stage on a vector.
    pub fn table_by_lookup(&self) -> Result<MapTable> {
        let stage_tables = self.stages.iter().map(|st| st.table()).collect::<Result<Vec<_>>>()?;
        let mut images: Vec<Vec<u64>> = (0..self.domain().modulus()).map(|u| vec![u]).collect();
        for t in &stage_tables {
            for img in images.iter_mut() {
                *img = img.iter().flat_map(|&x| t.image(x).iter().copied()).collect();
            }
        }
        MapTable::new(self.domain(), self.codomain(), images)
    }
}

impl ElementMap for ComposedMap {
    fn domain(&self) -> RingSpec {
        self.stages[0].domain
    }

    fn codomain(&self) -> RingSpec {
        self.stages[self.stages.len() - 1].codomain
    }

    fn width(&self) -> usize {
        1 << self.stages.len()
    }

    fn write_image(&self, u: u64, out: &mut Vec<u64>) -> Result<()> {
        let mut cur = vec![u];
        for st in &self.stages {
            let mut next = Vec::with_capacity(cur.len() * 2);
            for &x in &cur {
                st.write_image(x, &mut next)?;
            }
            cur = next;
        }
        out.extend(cur);
        Ok(())
    }

    fn label(&self) -> String {
        self.stages.iter().map(ElementMap::label).collect::<Vec<_>>().join(" . ")
    }
}

/// `eta^s` followed by `eta^{s-1}`, ..., `eta^2`: `Z_{2^s} -> Z_2^{2^{s-1}}`.
pub fn compose_modular(s: u32) -> Result<ComposedMap> {
    if s < 2 {
        return Err(Error::UnsupportedMap(format!("composition needs s >= 2, got s={s}")));
    }
    ComposedMap::chain(s, &vec![Variant::Eta; s as usize - 1])
}

/// `eta^s` followed by `eta^{s-1}`, ..., `eta^3`: `Z_{2^s} -> Z_4^{2^{s-2}}`.
pub fn vega_map(s: u32) -> Result<ComposedMap> {
    if s < 3 {
        return Err(Error::UnsupportedMap(format!("the map onto Z_4 needs s >= 3, got s={s}")));
    }
    ComposedMap::chain(s, &vec![Variant::Eta; s as usize - 2])
}
