//! Hamming, Lee, Euclidean, Chinese-Euclidean and homogeneous weights on
//! `Z_{p^s}^n`, their distances, and enumerator/minimum helpers.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{RingSpec, RingVector};

/// Tolerance used when comparing real-valued weights.
pub const REAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightKind {
    Hamming,
    Lee,
    Euclidean,
    ChineseEuclidean,
    Homogeneous,
}

impl WeightKind {
    pub const ALL: [WeightKind; 5] = [
        WeightKind::Hamming,
        WeightKind::Lee,
        WeightKind::Euclidean,
        WeightKind::ChineseEuclidean,
        WeightKind::Homogeneous,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Lee => "lee",
            WeightKind::Euclidean => "euclidean",
            WeightKind::ChineseEuclidean => "chinese-euclidean",
            WeightKind::Homogeneous => "homogeneous",
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hamming" | "h" => Ok(WeightKind::Hamming),
            "lee" | "l" => Ok(WeightKind::Lee),
            "euclidean" | "e" => Ok(WeightKind::Euclidean),
            "chinese-euclidean" | "chinese_euclidean" | "ce" => Ok(WeightKind::ChineseEuclidean),
            "homogeneous" | "hw" => Ok(WeightKind::Homogeneous),
            other => Err(format!("unknown weight kind `{other}`")),
        }
    }
}

/// A weight or distance value. Integral weights stay exact; the
/// Chinese-Euclidean weight is real.
#[derive(Debug, Clone, Copy)]
pub enum WeightValue {
    Exact(u64),
    Real(f64),
}

impl WeightValue {
    pub fn as_f64(&self) -> f64 {
        match *self {
            WeightValue::Exact(v) => v as f64,
            WeightValue::Real(v) => v,
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match *self {
            WeightValue::Exact(v) => Some(v),
            WeightValue::Real(_) => None,
        }
    }

    fn bucket(&self) -> Bucket {
        match *self {
            WeightValue::Exact(v) => Bucket::Exact(v),
            WeightValue::Real(v) => Bucket::Nanos((v * 1e9).round() as i64),
        }
    }
}

impl PartialEq for WeightValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (WeightValue::Exact(a), WeightValue::Exact(b)) => a == b,
            _ => (self.as_f64() - other.as_f64()).abs() <= REAL_TOLERANCE,
        }
    }
}

impl PartialOrd for WeightValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (WeightValue::Exact(a), WeightValue::Exact(b)) => a.partial_cmp(b),
            _ if self == other => Some(Ordering::Equal),
            _ => self.as_f64().partial_cmp(&other.as_f64()),
        }
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightValue::Exact(v) => write!(f, "{v}"),
            WeightValue::Real(v) => write!(f, "{v:.9}"),
        }
    }
}

fn lee_coord(m: u64, u: u64) -> u64 {
    u.min(m - u)
}

fn homogeneous_coord(spec: RingSpec, u: u64) -> u64 {
    if u == 0 {
        return 0;
    }
    let top = spec.p_pow(spec.s() - 1);
    // Checked first so that s = 1 never reaches the p^{s-2} branch.
    if u.is_multiple_of(top) {
        top
    } else {
        spec.p_pow(spec.s() - 2) * (spec.p() - 1)
    }
}

fn chinese_euclidean_coord(m: u64, u: u64) -> f64 {
    2.0 - 2.0 * (2.0 * PI * u as f64 / m as f64).cos()
}

pub fn hamming_weight(x: &RingVector) -> u64 {
    x.entries().iter().filter(|&&u| u != 0).count() as u64
}

pub fn lee_weight(x: &RingVector) -> u64 {
    let m = x.spec().modulus();
    x.entries().iter().map(|&u| lee_coord(m, u)).sum()
}

pub fn euclidean_weight(x: &RingVector) -> u64 {
    let m = x.spec().modulus();
    x.entries().iter().map(|&u| lee_coord(m, u).pow(2)).sum()
}

pub fn chinese_euclidean_weight(x: &RingVector) -> f64 {
    let m = x.spec().modulus();
    x.entries().iter().map(|&u| chinese_euclidean_coord(m, u)).sum()
}

/// Homogeneous weight. Always integral: `p^{s-1}` on `p^{s-1} Z_{p^s} \ {0}`,
/// `p^{s-2}(p-1)` on the remaining nonzero elements (which only exist for `s >= 2`).
pub fn homogeneous_weight(x: &RingVector) -> WeightValue {
    WeightValue::Exact(homogeneous_raw(x.spec(), x.entries()))
}

fn homogeneous_raw(spec: RingSpec, entries: &[u64]) -> u64 {
    entries.iter().map(|&u| homogeneous_coord(spec, u)).sum()
}

/// Weight of a raw residue slice; used on hot paths that avoid allocating vectors.
pub fn weight_of(spec: RingSpec, entries: &[u64], kind: WeightKind) -> WeightValue {
    let m = spec.modulus();
    match kind {
        WeightKind::Hamming => WeightValue::Exact(entries.iter().filter(|&&u| u != 0).count() as u64),
        WeightKind::Lee => WeightValue::Exact(entries.iter().map(|&u| lee_coord(m, u)).sum()),
        WeightKind::Euclidean => WeightValue::Exact(entries.iter().map(|&u| lee_coord(m, u).pow(2)).sum()),
        WeightKind::ChineseEuclidean => {
            WeightValue::Real(entries.iter().map(|&u| chinese_euclidean_coord(m, u)).sum())
        }
        WeightKind::Homogeneous => WeightValue::Exact(homogeneous_raw(spec, entries)),
    }
}

pub fn weight(x: &RingVector, kind: WeightKind) -> WeightValue {
    weight_of(x.spec(), x.entries(), kind)
}

pub fn distance(x: &RingVector, y: &RingVector, kind: WeightKind) -> Result<WeightValue> {
    Ok(weight(&x.try_sub(y)?, kind))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Bucket {
    Exact(u64),
    Nanos(i64),
}

/// Weight distribution of a finite set of words: weight -> count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightEnumerator {
    buckets: BTreeMap<Bucket, u64>,
}

impl WeightEnumerator {
    pub fn record(&mut self, w: WeightValue) {
        *self.buckets.entry(w.bucket()).or_default() += 1;
    }

    pub fn merge(&mut self, other: &WeightEnumerator) {
        for (k, v) in &other.buckets {
            *self.buckets.entry(*k).or_default() += v;
        }
    }

    pub fn total(&self) -> u64 {
        self.buckets.values().sum()
    }

    /// Count for an exact weight.
    pub fn count(&self, w: WeightValue) -> u64 {
        self.buckets.get(&w.bucket()).copied().unwrap_or(0)
    }

    /// `(weight, count)` pairs in increasing weight order.
    pub fn entries(&self) -> Vec<(WeightValue, u64)> {
        self.buckets
            .iter()
            .map(|(k, &c)| match *k {
                Bucket::Exact(v) => (WeightValue::Exact(v), c),
                Bucket::Nanos(n) => (WeightValue::Real(n as f64 / 1e9), c),
            })
            .collect()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.entries() {
            writeln!(f, "{w}: {c}")?;
        }
        Ok(())
    }
}

pub fn weight_enumerator<I>(codewords: I, kind: WeightKind) -> WeightEnumerator
where
    I: IntoIterator,
    I::Item: Borrow<RingVector>,
{
    let mut e = WeightEnumerator::default();
    for c in codewords {
        e.record(weight(c.borrow(), kind));
    }
    e
}

/// Running minimum over nonzero words.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinTracker {
    best: Option<WeightValue>,
}

impl MinTracker {
    pub fn observe(&mut self, spec: RingSpec, entries: &[u64], kind: WeightKind) {
        if entries.iter().all(|&u| u == 0) {
            return;
        }
        let w = weight_of(spec, entries, kind);
        if self.best.is_none_or(|b| w < b) {
            self.best = Some(w);
        }
    }

    pub fn merge(&mut self, other: MinTracker) {
        if let Some(w) = other.best {
            if self.best.is_none_or(|b| w < b) {
                self.best = Some(w);
            }
        }
    }

    pub fn finish(self) -> Result<WeightValue> {
        self.best.ok_or(Error::TrivialCode)
    }
}

/// Smallest weight among the nonzero words.
pub fn min_weight<I>(codewords: I, kind: WeightKind) -> Result<WeightValue>
where
    I: IntoIterator,
    I::Item: Borrow<RingVector>,
{
    let mut t = MinTracker::default();
    for c in codewords {
        let c = c.borrow();
        t.observe(c.spec(), c.entries(), kind);
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: u64, s: u32) -> RingSpec {
        RingSpec::new(p, s).unwrap()
    }

    fn v(spec: RingSpec, xs: &[i64]) -> RingVector {
        RingVector::new(spec, xs.iter().copied())
    }

    fn rep_code_z4() -> Vec<RingVector> {
        let r = z(2, 2);
        (0..4).map(|a| v(r, &[a, a])).collect()
    }

    #[test]
    fn hamming() {
        assert_eq!(hamming_weight(&v(z(2, 3), &[0, 0, 0])), 0);
        assert_eq!(hamming_weight(&v(z(2, 3), &[5, 0, 7])), 2);
        assert_eq!(hamming_weight(&v(z(2, 2), &[1, 2, 3, 0])), 3);
    }

    #[test]
    fn lee_and_euclidean() {
        let r = z(2, 3);
        assert_eq!(lee_weight(&v(r, &[7])), 1);
        assert_eq!(lee_weight(&v(r, &[5, 7])), 4);
        assert_eq!(lee_weight(&RingVector::zero(r, 4)), 0);
        assert_eq!(euclidean_weight(&v(r, &[5])), 9);
        assert_eq!(euclidean_weight(&v(r, &[7])), 1);
        assert_eq!(euclidean_weight(&RingVector::zero(r, 3)), 0);
    }

    #[test]
    fn chinese_euclidean() {
        let r = z(2, 2);
        assert!((chinese_euclidean_weight(&v(r, &[2])) - 4.0).abs() < 1e-12);
        assert!((chinese_euclidean_weight(&v(r, &[1])) - 2.0).abs() < 1e-12);
        assert!(chinese_euclidean_weight(&RingVector::zero(r, 2)).abs() < 1e-12);
        let z8 = z(2, 3);
        let expected = 2.0 - 2.0_f64.sqrt();
        assert!((chinese_euclidean_weight(&v(z8, &[1])) - expected).abs() < 1e-12);
    }

    #[test]
    fn homogeneous() {
        let r = z(2, 3);
        assert_eq!(homogeneous_weight(&v(r, &[4])), WeightValue::Exact(4));
        assert_eq!(homogeneous_weight(&v(r, &[1])), WeightValue::Exact(2));
        assert_eq!(homogeneous_weight(&v(r, &[6])), WeightValue::Exact(2));
        assert_eq!(homogeneous_weight(&v(r, &[0])), WeightValue::Exact(0));
        // Z_9: 3 and 6 lie in 3Z_9 -> 3; units -> 3^0 * 2 = 2.
        let z9 = z(3, 2);
        assert_eq!(homogeneous_weight(&v(z9, &[3, 6, 1])), WeightValue::Exact(3 + 3 + 2));
    }

    #[test]
    fn distances() {
        let r = z(2, 3);
        assert_eq!(distance(&v(r, &[1]), &v(r, &[2]), WeightKind::Homogeneous).unwrap(), WeightValue::Exact(2));
        let z4 = z(2, 2);
        assert_eq!(distance(&v(z4, &[0]), &v(z4, &[3]), WeightKind::Lee).unwrap(), WeightValue::Exact(1));
        let x = v(r, &[3, 5, 7]);
        for kind in WeightKind::ALL {
            assert_eq!(distance(&x, &x, kind).unwrap(), WeightValue::Exact(0));
        }
        assert!(distance(&v(r, &[1]), &v(z4, &[1]), WeightKind::Lee).is_err());
        assert!(distance(&v(r, &[1]), &v(r, &[1, 2]), WeightKind::Lee).is_err());
    }

    #[test]
    fn enumerators() {
        let code = rep_code_z4();
        let lee = weight_enumerator(&code, WeightKind::Lee);
        assert_eq!(
            lee.entries().iter().map(|(w, c)| (w.exact().unwrap(), *c)).collect::<Vec<_>>(),
            vec![(0, 1), (2, 2), (4, 1)]
        );
        let ham = weight_enumerator(&code, WeightKind::Hamming);
        assert_eq!(
            ham.entries().iter().map(|(w, c)| (w.exact().unwrap(), *c)).collect::<Vec<_>>(),
            vec![(0, 1), (2, 3)]
        );
        let trivial = vec![RingVector::zero(z(2, 2), 3)];
        let e = weight_enumerator(&trivial, WeightKind::Lee);
        assert_eq!(e.total(), 1);
        assert_eq!(e.count(WeightValue::Exact(0)), 1);
    }

    #[test]
    fn real_buckets_round_to_nine_decimals() {
        let mut e = WeightEnumerator::default();
        e.record(WeightValue::Real(0.5));
        e.record(WeightValue::Real(0.5 + 1e-12));
        e.record(WeightValue::Real(0.6));
        assert_eq!(e.entries().len(), 2);
        assert_eq!(e.count(WeightValue::Real(0.5)), 2);
    }

    #[test]
    fn minimum_weights() {
        let code = rep_code_z4();
        assert_eq!(min_weight(&code, WeightKind::Lee).unwrap(), WeightValue::Exact(2));
        assert_eq!(min_weight(&code, WeightKind::Homogeneous).unwrap(), WeightValue::Exact(2));
        assert_eq!(min_weight(&code, WeightKind::Hamming).unwrap(), WeightValue::Exact(2));
        let trivial = vec![RingVector::zero(z(2, 2), 2)];
        assert_eq!(min_weight(&trivial, WeightKind::Lee), Err(Error::TrivialCode));
    }

    #[test]
    fn parse_kinds() {
        for k in WeightKind::ALL {
            assert_eq!(k.name().parse::<WeightKind>().unwrap(), k);
        }
        assert!("taxicab".parse::<WeightKind>().is_err());
    }
}
