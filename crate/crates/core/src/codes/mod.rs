//! Linear codes over `Z_{p^s}`.

mod dual;
mod standard_form;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

pub use standard_form::{PBasis, StandardForm};

use crate::error::{Error, Result};
use crate::ring::{RingMatrix, RingSpec, RingVector};
use crate::weights::{MinTracker, WeightEnumerator, WeightKind, WeightValue, weight_of};

/// Default upper bound on the number of words any enumeration may visit.
pub const DEFAULT_CAP: u64 = 1 << 26;

/// An additive subgroup of `Z_{p^s}^n`, given by generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: RingMatrix,
}

impl LinearCode {
    pub fn new(gen: RingMatrix) -> Self {
        Self { gen }
    }

    pub fn zero(spec: RingSpec, n: usize) -> Self {
        Self { gen: RingMatrix::zeros(spec, 0, n) }
    }

    /// The whole space `Z_{p^s}^n`.
    pub fn full(spec: RingSpec, n: usize) -> Self {
        Self { gen: RingMatrix::identity(spec, n) }
    }

    pub fn spec(&self) -> RingSpec {
        self.gen.spec()
    }

    pub fn len(&self) -> usize {
        self.gen.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.gen.ncols() == 0
    }

    pub fn generator(&self) -> &RingMatrix {
        &self.gen
    }

    pub fn standard_form(&self) -> StandardForm {
        StandardForm::reduce(&self.gen)
    }

    /// A p-basis in the code's own coordinates.
    pub fn p_basis(&self) -> PBasis {
        let sf = self.standard_form();
        sf.p_basis().unpermuted(sf.permutation())
    }

    pub fn p_dimension(&self) -> usize {
        self.standard_form().p_dimension()
    }

    pub fn cardinality(&self) -> Option<u128> {
        self.standard_form().cardinality()
    }

    /// Visits every codeword exactly once.
    pub fn for_each_codeword(&self, cap: u64, mut f: impl FnMut(&[u64])) -> Result<()> {
        let basis = self.p_basis();
        p_span_try_for_each::<()>(basis.rows(), cap, |w| {
            f(w);
            ControlFlow::Continue(())
        })?;
        Ok(())
    }

    pub fn codewords(&self, cap: u64) -> Result<Vec<RingVector>> {
        let spec = self.spec();
        let mut out = Vec::new();
        self.for_each_codeword(cap, |w| out.push(RingVector::from_reduced(spec, w.to_vec())))?;
        Ok(out)
    }

    pub fn codeword_set(&self, cap: u64) -> Result<BTreeSet<RingVector>> {
        Ok(self.codewords(cap)?.into_iter().collect())
    }

    pub fn weight_enumerator(&self, kind: WeightKind, cap: u64) -> Result<WeightEnumerator> {
        let spec = self.spec();
        let mut e = WeightEnumerator::default();
        self.for_each_codeword(cap, |w| e.record(weight_of(spec, w, kind)))?;
        Ok(e)
    }

    /// Minimum weight over the nonzero codewords.
    pub fn min_weight(&self, kind: WeightKind, cap: u64) -> Result<WeightValue> {
        let spec = self.spec();
        let mut t = MinTracker::default();
        self.for_each_codeword(cap, |w| t.observe(spec, w, kind))?;
        t.finish()
    }

    /// Minimum weights for several kinds in a single pass.
    pub fn min_weights(&self, kinds: &[WeightKind], cap: u64) -> Result<Vec<(WeightKind, WeightValue)>> {
        let spec = self.spec();
        let mut ts = vec![MinTracker::default(); kinds.len()];
        self.for_each_codeword(cap, |w| {
            for (t, &k) in ts.iter_mut().zip(kinds) {
                t.observe(spec, w, k);
            }
        })?;
        kinds.iter().zip(ts).map(|(&k, t)| Ok((k, t.finish()?))).collect()
    }

    /// `{x : x . c = 0 for all c in C}`.
    pub fn dual(&self) -> LinearCode {
        LinearCode { gen: dual::kernel_generators(&self.gen) }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let spec = self.spec();
        let rows = self.gen.rows();
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| crate::ring::dot(spec, a, b) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        self.is_self_orthogonal() && 2 * self.p_dimension() == self.spec().s() as usize * self.len()
    }
}

fn required(p: u64, k: usize) -> u128 {
    (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// Runs `f` over every `Z_p`-combination `sum lambda_i rows_i`, starting with
/// the all-zero combination. Consecutive combinations differ in one
/// coefficient, so each step costs one row update.
pub(crate) fn p_span_try_for_each<B>(
    rows: &RingMatrix,
    cap: u64,
    mut f: impl FnMut(&[u64]) -> ControlFlow<B>,
) -> Result<Option<B>> {
    let spec = rows.spec();
    let p = spec.p();
    let k = rows.nrows();
    let needed = required(p, k);
    if needed > cap as u128 {
        return Err(Error::CapExceeded { needed, cap });
    }
    let mut cur = vec![0u64; rows.ncols()];
    let mut lambda = vec![0u64; k];
    loop {
        if let ControlFlow::Break(b) = f(&cur) {
            return Ok(Some(b));
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(None);
            }
            let row = &rows.rows()[i];
            lambda[i] += 1;
            if lambda[i] < p {
                for (x, &y) in cur.iter_mut().zip(row) {
                    *x = spec.add(*x, y);
                }
                break;
            }
            lambda[i] = 0;
            let back = p - 1;
            for (x, &y) in cur.iter_mut().zip(row) {
                *x = spec.sub(*x, spec.mul(back, y));
            }
            i += 1;
        }
    }
}

/// True iff no nonzero coefficient tuple in `Z_p^k` sends the vectors to zero.
///
/// Decided by exhaustive search over the `p^k` combinations, which must not
/// exceed `cap`.
pub fn is_p_linearly_independent(vectors: &[RingVector], spec: RingSpec, cap: u64) -> Result<bool> {
    let n = vectors.first().map_or(0, RingVector::len);
    let rows = RingMatrix::from_vectors(spec, n, vectors.to_vec())?;
    let mut first = true;
    let found = p_span_try_for_each(&rows, cap, |w| {
        if first {
            first = false;
            return ControlFlow::Continue(());
        }
        if w.iter().all(|&x| x == 0) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found.is_none())
}

/// Outcome of an additive-closure check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    Closed,
    MissingZero,
    /// `a + b` is not in the set.
    NotClosed { a: RingVector, b: RingVector },
}

impl Closure {
    pub fn is_closed(&self) -> bool {
        matches!(self, Closure::Closed)
    }
}

pub fn check_additive_closure(words: &BTreeSet<RingVector>) -> Result<Closure> {
    let Some(first) = words.iter().next() else {
        return Ok(Closure::MissingZero);
    };
    if !words.contains(&RingVector::zero(first.spec(), first.len())) {
        return Ok(Closure::MissingZero);
    }
    for a in words {
        for b in words.range(a..) {
            if !words.contains(&a.try_add(b)?) {
                return Ok(Closure::NotClosed { a: a.clone(), b: b.clone() });
            }
        }
    }
    Ok(Closure::Closed)
}

pub fn is_additively_closed(words: &BTreeSet<RingVector>) -> bool {
    check_additive_closure(words).map(|c| c.is_closed()).unwrap_or(false)
}
