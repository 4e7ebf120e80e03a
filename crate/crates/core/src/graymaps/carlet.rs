use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graymaps::ElementMap;
use crate::ring::RingSpec;

/// Largest number of evaluation points a [`CarletMap`] will hold.
pub const MAX_POINTS: u64 = 1 << 20;

/// Generalized Gray map `Z_{p^s} -> Z_p^{p^{s-1}}`.
///
/// `u = u_1 + p u_2 + ... + p^{s-1} u_s` maps to the evaluation vector of
/// the affine function `y -> u_s + sum_{i<s} u_i y_i` over the points
/// `y in Z_p^{s-1}`, listed in `point_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarletMap {
    domain: RingSpec,
    codomain: RingSpec,
    points: Vec<Vec<u64>>,
}

impl CarletMap {
    /// Points indexed by `j in [0, p^{s-1})` with `y_i` the `i`-th base-`p`
    /// digit of `j`, so `y_1` varies fastest.
    pub fn new(p: u64, s: u32) -> Result<Self> {
        let (domain, count) = Self::check(p, s)?;
        let points = (0..count)
            .map(|mut j| {
                (0..s - 1)
                    .map(|_| {
                        let d = j % p;
                        j /= p;
                        d
                    })
                    .collect()
            })
            .collect();
        Ok(Self { domain, codomain: RingSpec::new(p, 1)?, points })
    }

    /// Uses an explicit evaluation order, which must list every point of
    /// `Z_p^{s-1}` exactly once.
    pub fn with_point_order(p: u64, s: u32, points: Vec<Vec<u64>>) -> Result<Self> {
        let (domain, count) = Self::check(p, s)?;
        if points.len() as u64 != count {
            return Err(Error::UnsupportedMap(format!("expected {count} points, got {}", points.len())));
        }
        let mut seen = BTreeSet::new();
        for y in &points {
            if y.len() != s as usize - 1 || y.iter().any(|&c| c >= p) {
                return Err(Error::UnsupportedMap(format!("{y:?} is not a point of Z_{p}^{}", s - 1)));
            }
            if !seen.insert(y.clone()) {
                return Err(Error::UnsupportedMap(format!("point {y:?} listed twice")));
            }
        }
        Ok(Self { domain, codomain: RingSpec::new(p, 1)?, points })
    }

    fn check(p: u64, s: u32) -> Result<(RingSpec, u64)> {
        if s < 2 {
            return Err(Error::UnsupportedMap(format!("the generalized Gray map needs s >= 2, got s={s}")));
        }
        let domain = RingSpec::new(p, s)?;
        let count = domain.modulus() / p;
        if count > MAX_POINTS {
            return Err(Error::UnsupportedMap(format!("{count} evaluation points exceed {MAX_POINTS}")));
        }
        Ok((domain, count))
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }
}

impl ElementMap for CarletMap {
    fn domain(&self) -> RingSpec {
        self.domain
    }

    fn codomain(&self) -> RingSpec {
        self.codomain
    }

    fn width(&self) -> usize {
        self.points.len()
    }

    fn write_image(&self, u: u64, out: &mut Vec<u64>) -> Result<()> {
        self.domain.check(u)?;
        let p = self.domain.p();
        let digits = self.domain.digits(u);
        let (low, top) = digits.split_at(digits.len() - 1);
        out.extend(self.points.iter().map(|y| (top[0] + low.iter().zip(y).map(|(a, b)| a * b).sum::<u64>()) % p));
        Ok(())
    }

    fn label(&self) -> String {
        format!("carlet(p={}, s={})", self.domain.p(), self.domain.s())
    }
}
