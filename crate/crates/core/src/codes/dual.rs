//! Kernel of `x -> G x^T` over `Z_{p^s}` by diagonal reduction.

use crate::codes::standard_form::sub_multiple;
use crate::ring::{RingMatrix, RingSpec};

/// Generators of `{x : g . x = 0 for every row g of gen}`.
///
/// Reduces `gen` to diagonal form `L * gen * U = diag(p^{v_0}, ..., p^{v_{d-1}}, 0, ...)`
/// with `L`, `U` invertible, tracking `U`. With `x = U y` the kernel condition
/// becomes `p^{v_i} y_i = 0`, so the kernel is spanned by `p^{s-v_i} U_{:,i}`
/// for the pivot columns and by the free columns `U_{:,j}`, `j >= d`.
pub(crate) fn kernel_generators(gen: &RingMatrix) -> RingMatrix {
    let spec = gen.spec();
    let s = spec.s();
    let n = gen.ncols();
    let mut a: Vec<Vec<u64>> = gen.rows().to_vec();
    // Columns of U are stored as rows of `u` so column operations are row operations here.
    let mut u: Vec<Vec<u64>> = RingMatrix::identity(spec, n).rows().to_vec();
    let mut vals = Vec::new();
    let mut d = 0;

    while let Some((i, j, v)) = min_valuation_entry(spec, &a, d) {
        a.swap(i, d);
        if j != d {
            for row in a.iter_mut() {
                row.swap(j, d);
            }
            u.swap(j, d);
        }
        let pv = spec.p_pow(v);
        let inv = spec.inverse(a[d][d] / pv).expect("unit part is invertible");
        for x in a[d].iter_mut() {
            *x = spec.mul(*x, inv);
        }

        let pivot_row = a[d].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != d && row[d] != 0 {
                let f = row[d] / pv;
                sub_multiple(spec, row, &pivot_row, f);
            }
        }
        for c in d + 1..n {
            let f = a[d][c] / pv;
            if f == 0 {
                continue;
            }
            for row in a.iter_mut() {
                let x = spec.mul(f, row[d]);
                row[c] = spec.sub(row[c], x);
            }
            let (head, tail) = u.split_at_mut(c);
            sub_multiple(spec, &mut tail[0], &head[d], f);
        }
        vals.push(v);
        d += 1;
    }

    let mut gens: Vec<Vec<u64>> = Vec::new();
    for (i, &v) in vals.iter().enumerate() {
        if v > 0 {
            let f = spec.p_pow(s - v);
            gens.push(u[i].iter().map(|&x| spec.mul(x, f)).collect());
        }
    }
    gens.extend(u.into_iter().skip(d));
    RingMatrix::from_reduced(spec, n, gens)
}

fn min_valuation_entry(spec: RingSpec, a: &[Vec<u64>], d: usize) -> Option<(usize, usize, u32)> {
    let mut best: Option<(usize, usize, u32)> = None;
    for (i, row) in a.iter().enumerate().skip(d) {
        for (j, &x) in row.iter().enumerate().skip(d) {
            if x == 0 {
                continue;
            }
            let v = spec.valuation(x);
            if best.is_none_or(|(_, _, bv)| v < bv) {
                best = Some((i, j, v));
                if v == 0 {
                    return best;
                }
            }
        }
    }
    best
}
