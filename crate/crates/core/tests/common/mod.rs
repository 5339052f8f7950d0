//! Test-only oracles and fixtures, independent of the library's fast paths.
#![allow(dead_code)]

use codeloop::{BooleanMap, LinearCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random map on `F_2^m` with `P(0) = 0` that is not identically zero.
pub fn random_nonzero_map(rng: &mut ChaCha8Rng, m: usize) -> BooleanMap {
    loop {
        let table: Vec<bool> = (0..1usize << m).map(|x| x != 0 && rng.gen()).collect();
        if table.iter().any(|&b| b) {
            return BooleanMap::new(m, table).unwrap();
        }
    }
}

pub fn random_pointed_map(rng: &mut ChaCha8Rng, m: usize) -> BooleanMap {
    BooleanMap::new(m, (0..1usize << m).map(|x| x != 0 && rng.gen()).collect()).unwrap()
}

/// Derived-form degree straight from the definition, for up to 64 maps at
/// once (bit `j` of each word belongs to map `j`).
///
/// For each order `s = 1..=m+1` every multiset of `s` points is visited (the
/// definition sums over subsets of an unordered argument list, so ordered
/// tuples repeat the same value) and `Σ_J P(ΣJ)` is accumulated over all
/// `2^s` index subsets. Returns, per map, the largest `s` with `P_s` not
/// identically zero, and asserts that order `m + 1` vanishes.
pub fn definitional_degrees(maps: &[BooleanMap]) -> Vec<usize> {
    assert!(!maps.is_empty() && maps.len() <= 64);
    let m = maps[0].dim();
    let n = 1usize << m;
    let words: Vec<u64> = (0..n)
        .map(|x| {
            maps.iter()
                .enumerate()
                .fold(0u64, |acc, (j, p)| acc | (u64::from(p.eval(x)) << j))
        })
        .collect();
    assert!(words[0] == 0, "definition requires P(0) = 0");

    let mut nonzero_at = vec![0u64; m + 2];
    for s in 1..=m + 1 {
        let mut args = vec![0usize; s];
        let mut any = 0u64;
        multisets(n, s, 0, 0, &mut args, &mut |args| {
            let mut acc = 0u64;
            for subset in 1usize..(1 << s) {
                let mut point = 0;
                for (i, &a) in args.iter().enumerate() {
                    if subset >> i & 1 == 1 {
                        point ^= a;
                    }
                }
                acc ^= words[point];
            }
            any |= acc;
        });
        nonzero_at[s] = any;
    }
    assert_eq!(nonzero_at[m + 1], 0, "derived form of order m+1 must vanish");
    (0..maps.len())
        .map(|j| (1..=m).rev().find(|&s| nonzero_at[s] >> j & 1 == 1).unwrap_or(0))
        .collect()
}

fn multisets(
    n: usize,
    s: usize,
    pos: usize,
    start: usize,
    args: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if pos == s {
        f(args);
        return;
    }
    for x in start..n {
        args[pos] = x;
        multisets(n, s, pos + 1, x, args, f);
    }
}

pub fn definitional_degree(p: &BooleanMap) -> usize {
    definitional_degrees(std::slice::from_ref(p))[0]
}

/// `P_s` by ordered-subset expansion, without the library's Gray-code walk.
pub fn derived_form_oracle(p: &BooleanMap, args: &[usize]) -> bool {
    let mut acc = false;
    for subset in 0usize..(1 << args.len()) {
        let point = args
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .fold(0, |acc, (_, &a)| acc ^ a);
        acc ^= p.eval(point);
    }
    acc
}

/// Codes used by the loop and inverse-map suites, with their levels.
pub fn code_catalog() -> Vec<(&'static str, LinearCode)> {
    let from = |rows: &[&str]| LinearCode::from_strs(rows).unwrap();
    vec![
        ("trivial", LinearCode::new(8, vec![]).unwrap()),
        ("odd [2,1]", from(&["10"])),
        ("even [4,2]", from(&["1100", "0110"])),
        ("repetition 4", from(&["1111"])),
        ("repetition 8", from(&["11111111"])),
        ("doubly even [8,2]", from(&["11110000", "00111100"])),
        (
            "extended Hamming [8,4]",
            from(&["11111111", "11110000", "11001100", "10101010"]),
        ),
        (
            "Reed-Muller [16,4] subcode",
            from(&[
                "1111111111111111",
                "1111111100000000",
                "1111000011110000",
                "1100110011001100",
            ]),
        ),
        (
            "synthesized x1x2x3",
            codeloop::synthesize(&BooleanMap::from_fn(3, |x| x == 0b111).unwrap())
                .unwrap()
                .code,
        ),
        (
            "synthesized x1x2x3 + x2x3x4",
            codeloop::synthesize(
                &BooleanMap::from_fn(4, |x| (x & 0b0111 == 0b0111) ^ (x & 0b1110 == 0b1110)).unwrap(),
            )
            .unwrap()
            .code,
        ),
    ]
}

pub fn doubly_even_catalog() -> Vec<(&'static str, LinearCode)> {
    code_catalog()
        .into_iter()
        .filter(|(_, c)| c.level().is_doubly_even())
        .collect()
}
