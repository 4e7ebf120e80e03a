//! Residue arithmetic in `Z_{p^s}`.
//!
//! Residues are stored fully reduced as `u64` values in `[0, p^s)`. The
//! plain `u64` helpers on [`RingSpec`] assume reduced inputs; the wrapper
//! types ([`RingElement`], [`RingVector`], [`RingMatrix`]) carry their ring
//! and refuse to combine with values from a different ring.

use std::fmt;

use crate::error::{Error, Result};

/// Largest prime accepted as the residue characteristic.
pub const MAX_PRIME: u64 = 97;

/// The ring `Z_{p^s}` for a prime `p` and exponent `s >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    p: u64,
    s: u32,
    m: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn new(p: u64, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidRing(format!("prime {p} exceeds {MAX_PRIME}")));
        }
        if s == 0 {
            return Err(Error::InvalidRing("exponent s must be at least 1".into()));
        }
        let m = p
            .checked_pow(s)
            .ok_or_else(|| Error::InvalidRing(format!("{p}^{s} does not fit in 64 bits")))?;
        Ok(Self { p, s, m })
    }

    /// `Z_{2^s}`, the ring the modular Gray maps act on.
    pub fn binary(s: u32) -> Result<Self> {
        Self::new(2, s)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// The modulus `p^s`.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// `p^t`, for `t <= s`.
    pub fn p_pow(&self, t: u32) -> u64 {
        debug_assert!(t <= self.s);
        self.p.pow(t)
    }

    /// Reduces an arbitrary signed integer to its canonical residue.
    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.m as i128) as u64
    }

    pub fn check(&self, u: u64) -> Result<u64> {
        if u < self.m {
            Ok(u)
        } else {
            Err(Error::OutOfRange { value: u, modulus: self.m })
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.m as u128) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.m - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.m - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.m as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, u: u64) -> bool {
        !u.is_multiple_of(self.p)
    }

    /// Multiplicative inverse of a unit, via `u^(phi(m) - 1)`.
    pub fn inverse(&self, u: u64) -> Option<u64> {
        if !self.is_unit(u) {
            return None;
        }
        let phi = self.m / self.p * (self.p - 1);
        Some(self.pow(u, phi - 1))
    }

    /// Largest `t` with `p^t | u`; zero has valuation `s`.
    pub fn valuation(&self, u: u64) -> u32 {
        let mut u = u % self.m;
        if u == 0 {
            return self.s;
        }
        let mut t = 0;
        while u.is_multiple_of(self.p) {
            u /= self.p;
            t += 1;
        }
        t
    }

    /// Base-`p` digits `(u_1, ..., u_s)`, least significant first.
    pub fn digits(&self, u: u64) -> Vec<u64> {
        let mut u = u % self.m;
        (0..self.s)
            .map(|_| {
                let d = u % self.p;
                u /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<u64> {
        if digits.len() != self.s as usize {
            return Err(Error::InvalidDigits(format!(
                "expected {} digits, got {}",
                self.s,
                digits.len()
            )));
        }
        let mut value = 0u64;
        for (i, &d) in digits.iter().enumerate().rev() {
            if d >= self.p {
                return Err(Error::InvalidDigits(format!(
                    "digit {d} at position {} is not below p={}",
                    i + 1,
                    self.p
                )));
            }
            value = value * self.p + d;
        }
        Ok(value)
    }

    pub fn element(&self, value: u64) -> Result<RingElement> {
        Ok(RingElement { value: self.check(value)?, spec: *self })
    }

    fn ensure_same(&self, other: &RingSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: *self, right: *other })
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    value: u64,
    spec: RingSpec,
}

impl RingElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        self.spec.ensure_same(&rhs.spec)?;
        Ok(Self { value: self.spec.add(self.value, rhs.value), spec: self.spec })
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        self.spec.ensure_same(&rhs.spec)?;
        Ok(Self { value: self.spec.sub(self.value, rhs.value), spec: self.spec })
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self> {
        self.spec.ensure_same(&rhs.spec)?;
        Ok(Self { value: self.spec.mul(self.value, rhs.value), spec: self.spec })
    }

    pub fn digits(&self) -> Vec<u64> {
        self.spec.digits(self.value)
    }

    pub fn valuation(&self) -> u32 {
        self.spec.valuation(self.value)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A vector over `Z_{p^s}` with reduced entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingVector {
    spec: RingSpec,
    entries: Vec<u64>,
}

impl RingVector {
    /// Builds a vector, reducing every entry mod `p^s`.
    pub fn new<I, T>(spec: RingSpec, entries: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<i128>,
    {
        let entries = entries.into_iter().map(|x| spec.reduce(x.into())).collect();
        Self { spec, entries }
    }

    /// Builds a vector from residues that must already lie in `[0, p^s)`.
    pub fn from_residues(spec: RingSpec, entries: Vec<u64>) -> Result<Self> {
        for &e in &entries {
            spec.check(e)?;
        }
        Ok(Self { spec, entries })
    }

    pub(crate) fn from_reduced(spec: RingSpec, entries: Vec<u64>) -> Self {
        debug_assert!(entries.iter().all(|&e| e < spec.modulus()));
        Self { spec, entries }
    }

    pub fn zero(spec: RingSpec, n: usize) -> Self {
        Self { spec, entries: vec![0; n] }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.spec.ensure_same(&other.spec)?;
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let spec = self.spec;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| spec.add(a, b)).collect();
        Ok(Self { spec, entries })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let spec = self.spec;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| spec.sub(a, b)).collect();
        Ok(Self { spec, entries })
    }

    /// Pointwise (Hadamard) product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let spec = self.spec;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| spec.mul(a, b)).collect();
        Ok(Self { spec, entries })
    }

    pub fn scale(&self, c: u64) -> Self {
        let spec = self.spec;
        let c = c % spec.modulus();
        Self { spec, entries: self.entries.iter().map(|&a| spec.mul(a, c)).collect() }
    }

    /// Standard inner product mod `p^s`.
    pub fn dot(&self, other: &Self) -> Result<u64> {
        self.check_compatible(other)?;
        Ok(dot(self.spec, &self.entries, &other.entries))
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.entries)
    }
}

pub(crate) fn dot(spec: RingSpec, a: &[u64], b: &[u64]) -> u64 {
    let m = spec.modulus() as u128;
    let acc = a.iter().zip(b).fold(0u128, |acc, (&x, &y)| (acc + x as u128 * y as u128) % m);
    acc as u64
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[u64]) -> fmt::Result {
    for (i, x) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A rectangular matrix over `Z_{p^s}`. Row count may be zero, in which
/// case the column count is still tracked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    spec: RingSpec,
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

impl RingMatrix {
    /// Builds a matrix from signed rows, reducing entries mod `p^s`.
    pub fn new<T: Into<i128> + Copy>(spec: RingSpec, ncols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != ncols {
                return Err(Error::LengthMismatch { left: ncols, right: row.len() });
            }
            out.push(row.iter().map(|&x| spec.reduce(x.into())).collect());
        }
        Ok(Self { spec, ncols, rows: out })
    }

    pub fn from_vectors(spec: RingSpec, ncols: usize, rows: Vec<RingVector>) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            spec.ensure_same(&row.spec)?;
            if row.len() != ncols {
                return Err(Error::LengthMismatch { left: ncols, right: row.len() });
            }
            out.push(row.entries);
        }
        Ok(Self { spec, ncols, rows: out })
    }

    pub(crate) fn from_reduced(spec: RingSpec, ncols: usize, rows: Vec<Vec<u64>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Self { spec, ncols, rows }
    }

    pub fn zeros(spec: RingSpec, nrows: usize, ncols: usize) -> Self {
        Self { spec, ncols, rows: vec![vec![0; ncols]; nrows] }
    }

    pub fn identity(spec: RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.rows[i][i] = 1 % spec.modulus();
        }
        m
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> RingVector {
        RingVector { spec: self.spec, entries: self.rows[i].clone() }
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = RingVector> + '_ {
        (0..self.nrows()).map(move |i| self.row(i))
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols).map(|j| self.rows.iter().map(|r| r[j]).collect()).collect();
        Self { spec: self.spec, ncols: self.nrows(), rows }
    }

    /// Permutes columns so that column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.ncols);
        let rows = self.rows.iter().map(|r| perm.iter().map(|&j| r[j]).collect()).collect();
        Self { spec: self.spec, ncols: self.ncols, rows }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        self.spec.ensure_same(&other.spec)?;
        if self.nrows() != other.nrows() {
            return Err(Error::LengthMismatch { left: self.nrows(), right: other.nrows() });
        }
        if self.ncols != other.ncols {
            return Err(Error::LengthMismatch { left: self.ncols, right: other.ncols });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        self.check_same_shape(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect())
            .collect();
        Ok(Self { spec: self.spec, ncols: self.ncols, rows })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let spec = self.spec;
        self.zip_with(other, |x, y| spec.add(x, y))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let spec = self.spec;
        self.zip_with(other, |x, y| spec.sub(x, y))
    }

    /// Pointwise product.
    pub fn try_mul_pointwise(&self, other: &Self) -> Result<Self> {
        let spec = self.spec;
        self.zip_with(other, |x, y| spec.mul(x, y))
    }

    /// Matrix product `self * other`.
    pub fn try_matmul(&self, other: &Self) -> Result<Self> {
        self.spec.ensure_same(&other.spec)?;
        if self.ncols != other.nrows() {
            return Err(Error::LengthMismatch { left: self.ncols, right: other.nrows() });
        }
        let t = other.transpose();
        let rows = self.rows.iter().map(|r| t.rows.iter().map(|c| dot(self.spec, r, c)).collect()).collect();
        Ok(Self { spec: self.spec, ncols: other.ncols, rows })
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            write_row(f, row)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: u64, s: u32) -> RingSpec {
        RingSpec::new(p, s).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(z(2, 3).modulus(), 8);
        assert_eq!(z(3, 2).modulus(), 9);
        assert!(RingSpec::new(4, 2).is_err());
        assert!(RingSpec::new(1, 2).is_err());
        assert!(RingSpec::new(101, 1).is_err());
        assert!(RingSpec::new(2, 0).is_err());
        assert!(RingSpec::new(2, 64).is_err());
        assert_eq!(RingSpec::new(2, 63).unwrap().modulus(), 1 << 63);
    }

    #[test]
    fn element_arithmetic() {
        let r = z(2, 3);
        let five = r.element(5).unwrap();
        assert_eq!(five.try_add(r.element(7).unwrap()).unwrap().value(), 4);
        assert_eq!(five.try_mul(r.element(6).unwrap()).unwrap().value(), 6);
        assert_eq!(five.try_sub(r.element(7).unwrap()).unwrap().value(), 6);
        let z4 = z(2, 2);
        for x in 0..4 {
            assert_eq!(z4.element(0).unwrap().try_add(z4.element(x).unwrap()).unwrap().value(), x);
        }
        assert!(matches!(
            five.try_add(z4.element(1).unwrap()),
            Err(Error::RingMismatch { .. })
        ));
        assert!(r.element(8).is_err());
    }

    #[test]
    fn digits_and_back() {
        let r = z(2, 3);
        assert_eq!(r.digits(6), vec![0, 1, 1]);
        assert_eq!(r.digits(0), vec![0, 0, 0]);
        assert_eq!(z(3, 2).digits(5), vec![2, 1]);
        assert_eq!(r.from_digits(&[1, 1, 0]).unwrap(), 3);
        assert_eq!(r.from_digits(&[0, 0, 0]).unwrap(), 0);
        assert!(r.from_digits(&[1, 2, 0]).is_err());
        assert!(r.from_digits(&[1, 1]).is_err());
        let r16 = z(2, 4);
        for u in 0..16 {
            assert_eq!(r16.from_digits(&r16.digits(u)).unwrap(), u);
        }
    }

    #[test]
    fn valuation() {
        let r = z(2, 3);
        assert_eq!(r.valuation(4), 2);
        assert_eq!(r.valuation(6), 1);
        assert_eq!(r.valuation(0), 3);
        assert_eq!(r.valuation(5), 0);
        assert_eq!(z(3, 3).valuation(18), 2);
    }

    #[test]
    fn inverses() {
        for r in [z(2, 3), z(3, 2), z(5, 2), z(2, 6)] {
            for u in 0..r.modulus() {
                match r.inverse(u) {
                    Some(v) => assert_eq!(r.mul(u, v), 1),
                    None => assert!(!r.is_unit(u)),
                }
            }
        }
    }

    #[test]
    fn negative_inputs_reduce() {
        let r = z(2, 3);
        let v = RingVector::new(r, [-1i64, 9, -8]);
        assert_eq!(v.entries(), &[7, 1, 0]);
        assert!(RingVector::from_residues(r, vec![8]).is_err());
    }

    #[test]
    fn vector_ops() {
        let r = z(2, 2);
        let a = RingVector::new(r, [1i64, 2, 3]);
        let b = RingVector::new(r, [3i64, 3, 3]);
        assert_eq!(a.try_add(&b).unwrap().entries(), &[0, 1, 2]);
        assert_eq!(a.try_sub(&b).unwrap().entries(), &[2, 3, 0]);
        assert_eq!(a.try_mul(&b).unwrap().entries(), &[3, 2, 1]);
        assert_eq!(a.dot(&b).unwrap(), 2);
        let short = RingVector::new(r, [1i64]);
        assert!(matches!(a.try_add(&short), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn matrix_ops() {
        let r = z(2, 3);
        let a = RingMatrix::new(r, 2, &[vec![1i64, 2], vec![3, 4]]).unwrap();
        let i = RingMatrix::identity(r, 2);
        assert_eq!(a.try_matmul(&i).unwrap(), a);
        let sq = a.try_matmul(&a).unwrap();
        assert_eq!(sq.rows(), &[vec![7, 2], vec![7, 6]]);
        assert_eq!(a.transpose().rows(), &[vec![1, 3], vec![2, 4]]);
        assert_eq!(a.permute_columns(&[1, 0]).rows(), &[vec![2, 1], vec![4, 3]]);
        assert_eq!(a.try_add(&a).unwrap().rows(), &[vec![2, 4], vec![6, 0]]);
        assert!(RingMatrix::new(r, 2, &[vec![1i64]]).is_err());
    }
}
