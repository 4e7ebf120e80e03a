use std::fmt;

use crate::ring::{RingMatrix, RingSpec};

/// A column-permuted generator matrix in block upper-triangular form.
///
/// Block row `i` has `k_i` rows, every entry divisible by `p^i`, zeros to
/// the left of its diagonal block and `p^i * I_{k_i}` on it. The profile
/// `(k_0, ..., k_s)` records the block sizes; `k_s` counts the columns with
/// no pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    permutation: Vec<usize>,
    matrix: RingMatrix,
    profile: Vec<usize>,
}

/// A p-basis: rows whose `Z_p`-combinations enumerate the code exactly once each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PBasis {
    rows: RingMatrix,
}

impl StandardForm {
    /// Reduces a generator matrix.
    ///
    /// Pivots are taken stage by stage: at stage `t` the leftmost remaining
    /// column holding an entry of valuation `t` is chosen (smallest row index
    /// on ties) and swapped into the next pivot position. Entries above a
    /// pivot `p^t` are reduced mod `p^t`, so rows of the same block are zero
    /// off their own pivot.
    pub fn reduce(gen: &RingMatrix) -> Self {
        let spec = gen.spec();
        let s = spec.s();
        let n = gen.ncols();
        let mut work: Vec<Vec<u64>> = gen.rows().iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
        let mut done: Vec<Vec<u64>> = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut profile = vec![0usize; s as usize + 1];
        let mut col = 0;

        for t in 0..s {
            let pt = spec.p_pow(t);
            while let Some((c, r)) = find_pivot(spec, &work, col, t) {
                if c != col {
                    for row in work.iter_mut().chain(done.iter_mut()) {
                        row.swap(col, c);
                    }
                    perm.swap(col, c);
                }
                let mut pivot = work.remove(r);
                let unit = pivot[col] / pt;
                let inv = spec.inverse(unit).expect("pivot unit part is invertible");
                for x in pivot.iter_mut() {
                    *x = spec.mul(*x, inv);
                }
                debug_assert_eq!(pivot[col], pt);

                for row in work.iter_mut() {
                    let f = row[col] / pt;
                    if f != 0 {
                        sub_multiple(spec, row, &pivot, f);
                    }
                }
                for row in done.iter_mut() {
                    let f = row[col] / pt;
                    if f != 0 {
                        sub_multiple(spec, row, &pivot, f);
                    }
                }
                work.retain(|row| row.iter().any(|&x| x != 0));
                done.push(pivot);
                profile[t as usize] += 1;
                col += 1;
            }
        }
        debug_assert!(work.is_empty());
        profile[s as usize] = n - col;

        StandardForm { permutation: perm, matrix: RingMatrix::from_reduced(spec, n, done), profile }
    }

    pub fn spec(&self) -> RingSpec {
        self.matrix.spec()
    }

    /// `permutation()[j]` is the original column placed at position `j`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    /// `(k_0, k_1, ..., k_s)`.
    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    /// Row indices of block `i` in [`Self::matrix`].
    pub fn block_rows(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.profile[..i].iter().sum();
        start..start + self.profile[i]
    }

    /// The p-dimension `k = sum_i (s - i) k_i`.
    pub fn p_dimension(&self) -> usize {
        let s = self.spec().s() as usize;
        self.profile[..s].iter().enumerate().map(|(i, &k)| (s - i) * k).sum()
    }

    /// `|C| = p^k`, or `None` if it overflows `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        (self.spec().p() as u128).checked_pow(self.p_dimension() as u32)
    }

    /// The generator matrix back in the original column order.
    pub fn unpermuted(&self) -> RingMatrix {
        unpermute(&self.matrix, &self.permutation)
    }

    /// Rows `p^j * (block i row)` for `j < s - i`, grouped by block then by `j`.
    pub fn p_basis(&self) -> PBasis {
        let spec = self.spec();
        let s = spec.s() as usize;
        let mut rows = Vec::with_capacity(self.p_dimension());
        for i in 0..s {
            let block = self.block_rows(i);
            for j in 0..(s - i) {
                let f = spec.p_pow(j as u32);
                for r in block.clone() {
                    rows.push(self.matrix.rows()[r].iter().map(|&x| spec.mul(x, f)).collect());
                }
            }
        }
        PBasis { rows: RingMatrix::from_reduced(spec, self.matrix.ncols(), rows) }
    }
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

impl PBasis {
    pub fn rows(&self) -> &RingMatrix {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.nrows()
    }

    pub fn unpermuted(&self, perm: &[usize]) -> PBasis {
        PBasis { rows: unpermute(&self.rows, perm) }
    }

    pub fn into_rows(self) -> RingMatrix {
        self.rows
    }
}

fn find_pivot(spec: RingSpec, work: &[Vec<u64>], from_col: usize, t: u32) -> Option<(usize, usize)> {
    let n = work.first().map_or(0, Vec::len);
    (from_col..n).find_map(|c| work.iter().position(|row| row[c] != 0 && spec.valuation(row[c]) == t).map(|r| (c, r)))
}

pub(crate) fn sub_multiple(spec: RingSpec, row: &mut [u64], pivot: &[u64], f: u64) {
    for (x, &y) in row.iter_mut().zip(pivot) {
        *x = spec.sub(*x, spec.mul(f, y));
    }
}

fn unpermute(m: &RingMatrix, perm: &[usize]) -> RingMatrix {
    let rows = m
        .rows()
        .iter()
        .map(|row| {
            let mut out = vec![0; row.len()];
            for (j, &x) in row.iter().enumerate() {
                out[perm[j]] = x;
            }
            out
        })
        .collect();
    RingMatrix::from_reduced(m.spec(), m.ncols(), rows)
}
