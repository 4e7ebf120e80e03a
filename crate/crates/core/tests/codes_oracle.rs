//! Standard forms, enumeration and duals checked against brute-force oracles
//! that never touch the elimination code.

use std::collections::BTreeSet;

use proptest::prelude::*;
use ringcode_core::catalog::get_fixture;
use ringcode_core::codes::{LinearCode, DEFAULT_CAP};
use ringcode_core::ring::{RingMatrix, RingSpec, RingVector};

/// Additive closure of the generator rows, grown until stable.
fn span_oracle(gen: &RingMatrix) -> BTreeSet<Vec<u64>> {
    let spec = gen.spec();
    let n = gen.ncols();
    let mut set: BTreeSet<Vec<u64>> = BTreeSet::from([vec![0; n]]);
    let mut frontier: Vec<Vec<u64>> = set.iter().cloned().collect();
    while let Some(w) = frontier.pop() {
        for row in gen.rows() {
            let next: Vec<u64> = w.iter().zip(row).map(|(&a, &b)| spec.add(a, b)).collect();
            if set.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    set
}

/// Every vector of `Z_m^n` orthogonal to all generator rows.
fn dual_oracle(gen: &RingMatrix) -> BTreeSet<Vec<u64>> {
    let spec = gen.spec();
    let m = spec.modulus();
    let n = gen.ncols();
    let total = m.pow(n as u32);
    let mut out = BTreeSet::new();
    for idx in 0..total {
        let mut x = idx;
        let v: Vec<u64> = (0..n)
            .map(|_| {
                let d = x % m;
                x /= m;
                d
            })
            .collect();
        let ok = gen.rows().iter().all(|r| r.iter().zip(&v).map(|(&a, &b)| a * b).sum::<u64>() % m == 0);
        if ok {
            out.insert(v);
        }
    }
    out
}

fn as_sets(words: Vec<RingVector>) -> BTreeSet<Vec<u64>> {
    words.into_iter().map(RingVector::into_entries).collect()
}

/// Random codes with `n <= max_n` and ambient space `|Z_m^n| <= max_space`.
fn code_strategy(max_n: usize, max_rows: usize, max_space: u64) -> impl Strategy<Value = LinearCode> {
    (prop_oneof![Just(2u64), Just(3u64)], 1u32..=3, 1usize..=max_n, 0usize..=max_rows)
        .prop_flat_map(move |(p, s, n, r)| {
            let m = p.pow(s);
            let mut n = n;
            while n > 1 && m.pow(n as u32) > max_space {
                n -= 1;
            }
            (Just(p), Just(s), Just(n), prop::collection::vec(prop::collection::vec(0..m, n), r))
        })
        .prop_map(|(p, s, n, rows)| {
            let spec = RingSpec::new(p, s).unwrap();
            let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect();
            LinearCode::new(RingMatrix::new(spec, n, &rows).unwrap())
        })
}

fn check_block_shape(code: &LinearCode) {
    let sf = code.standard_form();
    let spec = code.spec();
    let s = spec.s() as usize;
    let profile = sf.profile();
    assert_eq!(profile.len(), s + 1);
    assert_eq!(profile.iter().sum::<usize>(), code.len());
    assert_eq!(sf.matrix().nrows(), profile[..s].iter().sum::<usize>());
    let mut col_start = 0;
    for (i, &width) in profile[..s].iter().enumerate() {
        let pi = spec.p_pow(i as u32);
        for (local, r) in sf.block_rows(i).enumerate() {
            let row = &sf.matrix().rows()[r];
            assert!(row.iter().all(|&x| x % pi == 0), "block {i} divisibility");
            assert!(row[..col_start].iter().all(|&x| x == 0), "zeros left of block {i}");
            for j in 0..width {
                let expect = if j == local { pi } else { 0 };
                assert_eq!(row[col_start + j], expect, "diagonal block {i}");
            }
        }
        col_start += width;
    }
    let mut perm = sf.permutation().to_vec();
    perm.sort();
    assert_eq!(perm, (0..code.len()).collect::<Vec<_>>());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, .. ProptestConfig::default() })]

    #[test]
    fn enumeration_matches_span_oracle(code in code_strategy(5, 4, 1 << 20)) {
        let oracle = span_oracle(code.generator());
        let words = code.codewords(DEFAULT_CAP).unwrap();
        // exactly once each
        prop_assert_eq!(words.len(), oracle.len());
        prop_assert_eq!(as_sets(words), oracle.clone());
        prop_assert_eq!(code.cardinality().unwrap(), oracle.len() as u128);
        let sf = code.standard_form();
        prop_assert_eq!(sf.p_basis().k(), sf.p_dimension());
        // re-spanning the un-permuted standard form gives the same code
        prop_assert_eq!(span_oracle(&sf.unpermuted()), oracle);
    }

    #[test]
    fn standard_form_block_shape(code in code_strategy(6, 5, u64::MAX)) {
        check_block_shape(&code);
    }

    #[test]
    fn standard_form_is_deterministic(code in code_strategy(5, 4, u64::MAX)) {
        prop_assert_eq!(code.standard_form(), code.standard_form());
    }

    #[test]
    fn dual_matches_kernel_oracle(code in code_strategy(4, 3, 1 << 14)) {
        let dual = code.dual();
        let expected = dual_oracle(code.generator());
        prop_assert_eq!(as_sets(dual.codewords(DEFAULT_CAP).unwrap()), expected);
    }

    #[test]
    fn duality_laws(code in code_strategy(5, 4, 1 << 16)) {
        let spec = code.spec();
        let dual = code.dual();
        let c = code.cardinality().unwrap();
        let d = dual.cardinality().unwrap();
        prop_assert_eq!(c * d, (spec.modulus() as u128).pow(code.len() as u32));
        let cw = code.codewords(DEFAULT_CAP).unwrap();
        let dw = dual.codewords(DEFAULT_CAP).unwrap();
        for x in cw.iter().take(64) {
            for y in &dw {
                prop_assert_eq!(x.dot(y).unwrap(), 0);
            }
        }
        // double dual
        prop_assert_eq!(dual.dual().codeword_set(DEFAULT_CAP).unwrap(), code.codeword_set(DEFAULT_CAP).unwrap());
        // block profile of the dual is the reversed profile
        let mut rev = code.standard_form().profile().to_vec();
        rev.reverse();
        prop_assert_eq!(dual.standard_form().profile().to_vec(), rev);
    }

    #[test]
    fn self_orthogonality_matches_set_inclusion(code in code_strategy(4, 3, 1 << 16)) {
        let dual: BTreeSet<_> = code.dual().codeword_set(DEFAULT_CAP).unwrap();
        let own = code.codeword_set(DEFAULT_CAP).unwrap();
        prop_assert_eq!(code.is_self_orthogonal(), own.is_subset(&dual));
        prop_assert_eq!(code.is_self_dual(), own == dual);
    }
}

#[test]
fn standard_form_column_swap_example() {
    let spec = RingSpec::new(2, 2).unwrap();
    let code = LinearCode::new(RingMatrix::new(spec, 2, &[vec![2i64, 0], vec![0, 1]]).unwrap());
    let sf = code.standard_form();
    assert_eq!(sf.matrix().rows(), &[vec![1, 0], vec![0, 2]]);
    assert_eq!(span_oracle(&sf.unpermuted()), span_oracle(code.generator()));
    assert_eq!(span_oracle(code.generator()).len(), 8);
}

#[test]
fn octocode_cardinality_by_brute_force() {
    let g8 = get_fixture("octocode_z8").unwrap().matrix().unwrap().clone();
    let spec = g8.spec();
    // all 8^4 combinations of the four rows, deduplicated
    let mut seen = BTreeSet::new();
    for idx in 0..8u64.pow(4) {
        let coeffs = [idx % 8, idx / 8 % 8, idx / 64 % 8, idx / 512];
        let word: Vec<u64> = (0..8)
            .map(|j| coeffs.iter().zip(g8.rows()).fold(0, |acc, (&c, r)| spec.add(acc, spec.mul(c, r[j]))))
            .collect();
        seen.insert(word);
    }
    assert_eq!(seen.len(), 4096);
    let code = LinearCode::new(g8);
    let sf = code.standard_form();
    assert_eq!(sf.profile(), &[4, 0, 0, 4]);
    assert_eq!(sf.cardinality(), Some(4096));
    assert_eq!(as_sets(code.codewords(DEFAULT_CAP).unwrap()), seen);
    let dual = code.dual();
    assert_eq!(dual.cardinality(), Some(4096));
}

#[test]
fn rm_generator_over_z8_spans_32_words() {
    let spec = RingSpec::new(2, 3).unwrap();
    let gen = RingMatrix::new(spec, 2, &[vec![1i64, 1], vec![0, 2]]).unwrap();
    let code = LinearCode::new(gen.clone());
    assert_eq!(as_sets(code.codewords(DEFAULT_CAP).unwrap()), span_oracle(&gen));
    assert_eq!(code.p_basis().k(), 5);
}
