//! Acceptance criteria, one test per criterion. Each prints a single
//! `[PASS]` or `[FAIL]` line; run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use codeloop::gf2::check_weight_identities;
use codeloop::loops::check_cubic_axioms;
use codeloop::synthesis::{ckey_gadget, synthesize_audited, verify_code_against_map_with, VerifyOptions};
use codeloop::{
    build_loop, check_moufang, extract_cubic_data, inverse_map, solve_factor_set, weight_forms,
    BitVector, BooleanMap, CodeLevel, LinearCode,
};
use rand::Rng;

const SEED: u64 = 0x5eed_2024;

fn report(id: u32, name: &str, failures: &[String], elapsed: Duration, limit: Option<Duration>) {
    let late = limit.is_some_and(|l| elapsed > l);
    let ok = failures.is_empty() && !late;
    let limit_text = limit.map_or(String::new(), |l| format!(" (limit {:.0?})", l));
    println!(
        "[{}] C{id:02} {name}: {} failure(s), {:.2?}{limit_text}",
        if ok { "PASS" } else { "FAIL" },
        failures.len(),
        elapsed
    );
    assert!(failures.is_empty(), "C{id:02} failures: {:#?}", &failures[..failures.len().min(10)]);
    assert!(!late, "C{id:02} exceeded time limit: {elapsed:.2?}");
}

fn exhaustive_m3_maps() -> Vec<BooleanMap> {
    (1u64..128)
        .map(|b| BooleanMap::from_table_bits(3, b << 1).unwrap())
        .collect()
}

fn random_maps() -> Vec<BooleanMap> {
    let mut rng = common::rng(SEED);
    let mut maps: Vec<BooleanMap> = (0..500).map(|_| common::random_nonzero_map(&mut rng, 4)).collect();
    maps.extend((0..100).map(|_| common::random_nonzero_map(&mut rng, 5)));
    maps
}

fn mask_args(mask: usize, m: usize) -> Vec<usize> {
    (0..m).filter(|j| mask >> j & 1 == 1).map(|j| 1 << j).collect()
}

/// Degrees from the definition, batched 64 maps at a time.
fn oracle_degrees(maps: &[BooleanMap]) -> Vec<usize> {
    let mut out = Vec::with_capacity(maps.len());
    let mut start = 0;
    while start < maps.len() {
        let m = maps[start].dim();
        let end = (start..maps.len())
            .take(64)
            .take_while(|&i| maps[i].dim() == m)
            .last()
            .unwrap()
            + 1;
        out.extend(common::definitional_degrees(&maps[start..end]));
        start = end;
    }
    out
}

fn realisation_failures(maps: &[BooleanMap]) -> Vec<String> {
    maps.iter()
        .zip(oracle_degrees(maps))
        .filter_map(|(p, d)| realisation_checks(p, d))
        .collect()
}

/// Checks dimension, exact level, `P(c) = |c|/2^r mod 2` and the length formula.
fn realisation_checks(p: &BooleanMap, degree: usize) -> Option<String> {
    let fail = |msg: String| Some(format!("{p:?}: {msg}"));
    let out = match codeloop::synthesize(p) {
        Ok(out) => out,
        Err(e) => return fail(e.to_string()),
    };
    let m = p.dim();
    let r = degree - 1;
    if out.code.dimension() != m {
        return fail(format!("dimension {}", out.code.dimension()));
    }
    if out.code.level() != CodeLevel::Finite(r as u32) {
        return fail(format!("level {} expected {r}", out.code.level()));
    }
    for (b, w) in out.code.weights().iter().enumerate() {
        if w % (1 << r) != 0 || ((w >> r) & 1 == 1) != p.eval(b) {
            return fail(format!("codeword {b} weight {w}"));
        }
    }
    let n1 = (1usize..1 << m)
        .filter(|i| i.count_ones() > 1 && common::derived_form_oracle(p, &mask_args(*i, m)))
        .count();
    let expected = m * (1 << (r + 1)) + n1 * (1 << (r + 2));
    if out.code.length() != expected {
        return fail(format!("length {} expected {expected}", out.code.length()));
    }
    None
}

#[test]
fn criterion_01_all_maps_on_three_points() {
    let start = Instant::now();
    let maps = exhaustive_m3_maps();
    assert_eq!(maps.len(), 127);
    let failures = realisation_failures(&maps);
    report(1, "all 127 maps at m=3 realised", &failures, start.elapsed(), Some(Duration::from_secs(10)));
}

#[test]
fn criterion_02_random_maps_on_four_and_five_points() {
    let start = Instant::now();
    let failures = realisation_failures(&random_maps());
    report(
        2,
        "500 maps at m=4 and 100 at m=5 realised with exact length",
        &failures,
        start.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_03_golden_construction() {
    let start = Instant::now();
    let p = BooleanMap::from_fn(2, |x| x != 0).unwrap();
    let out = codeloop::synthesize(&p).unwrap();
    let mut failures = Vec::new();
    let rows: Vec<String> = out.code.rows().iter().map(|r| r.to_string()).collect();
    if rows != ["1100000000001111", "0000110011101000"] {
        failures.push(format!("rows {rows:?}"));
    }
    let mut weights = out.code.weights();
    weights.sort_unstable();
    if weights != [0, 6, 6, 10] {
        failures.push(format!("weights {weights:?}"));
    }
    if out.code.level() != CodeLevel::Finite(1) || out.level != 1 {
        failures.push(format!("level {}", out.code.level()));
    }
    report(3, "golden m=2 code is bit-exact", &failures, start.elapsed(), None);
}

/// Weight of the coordinatewise product of `vs`, computed bit by bit.
fn product_weight(vs: &[&BitVector], len: usize) -> usize {
    (0..len).filter(|&j| vs.iter().all(|v| v.get(j))).count()
}

fn independent(vs: &[BitVector]) -> bool {
    let mut rows: Vec<Vec<bool>> = vs.iter().map(|v| v.iter().collect()).collect();
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i][c]) {
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row[c] {
                    row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
                }
            }
            rank += 1;
        }
    }
    rank == vs.len()
}

#[test]
fn criterion_04_gadgets() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for k in 2..=10usize {
        for l in 0..k - 1 {
            cases += 1;
            let g = ckey_gadget(l, k).unwrap();
            failures.extend(g.violations().into_iter().map(|v| format!("({l},{k}) {v}")));
            let vs = g.vectors();
            let len = vs[0].len();
            let n = l + 1;
            for mask in 1usize..1 << n {
                let sel: Vec<&BitVector> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &vs[i]).collect();
                let expected = if sel.len() == n { 1 << (k - l - 2) } else { 1 << (k - sel.len()) };
                let got = product_weight(&sel, len);
                if got != expected {
                    failures.push(format!("({l},{k}) subset {mask:b}: weight {got} expected {expected}"));
                }
            }
            if !independent(vs) {
                failures.push(format!("({l},{k}) dependent"));
            }
        }
    }
    assert_eq!(cases, 45);
    report(4, "45 gadgets with 0<l+1<k<=10", &failures, start.elapsed(), Some(Duration::from_secs(10)));
}

#[test]
fn criterion_05_equivalence_of_conditions() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let opts = VerifyOptions { seed: SEED, random_multisets: 100 };
    for p in exhaustive_m3_maps().iter().chain(random_maps().iter()) {
        let code = codeloop::synthesize(p).unwrap().code;
        let rep = verify_code_against_map_with(p, &code, opts).unwrap();
        let eq = &rep.equivalence;
        if eq.random_multisets != 100 || eq.basis_subsets != 1 << p.dim() {
            failures.push(format!("{p:?}: sample sizes {} {}", eq.basis_subsets, eq.random_multisets));
        }
        if eq.disagreements != 0 || !eq.agrees() || !eq.sum_condition_all() {
            failures.push(format!("{p:?}: {eq:?}"));
        }
    }
    report(5, "conditions (i) and (ii) agree on 727 codes", &failures, start.elapsed(), None);
}

#[test]
fn criterion_06_identities() {
    let start = Instant::now();
    let mut rng = common::rng(SEED ^ 6);
    let mut failures = Vec::new();
    const N: usize = 10_000;
    for t in 0..N {
        let m = rng.gen_range(1..=5);
        let p = common::random_pointed_map(&mut rng, m);
        let s = rng.gen_range(1..=5);
        let pts: Vec<usize> = (0..s).map(|_| rng.gen_range(0..1 << m)).collect();

        // inductive identity for P_{s+1}
        let u = rng.gen_range(0..1 << m);
        let with = |first: usize| {
            let mut a = vec![first];
            a.extend_from_slice(&pts[1..]);
            a
        };
        let mut big = vec![u, pts[0]];
        big.extend_from_slice(&pts[1..]);
        let lhs = p.derived_form(&big).unwrap();
        let rhs = p.derived_form(&with(u)).unwrap()
            ^ p.derived_form(&with(pts[0])).unwrap()
            ^ p.derived_form(&with(u ^ pts[0])).unwrap();
        if lhs != rhs || lhs != common::derived_form_oracle(&p, &big) {
            failures.push(format!("inductive #{t}"));
        }

        // reverse formula
        let total = pts.iter().fold(0, |a, &x| a ^ x);
        let expanded = (1usize..1 << s).fold(false, |acc, mask| {
            let sub: Vec<usize> = (0..s).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]).collect();
            acc ^ common::derived_form_oracle(&p, &sub)
        });
        if !p.verify_reverse_formula(&pts).unwrap() || p.eval(total) != expanded {
            failures.push(format!("reverse #{t}"));
        }

        // weight identities, right-hand sides summed coordinate by coordinate
        let len = rng.gen_range(0..=64);
        let s = rng.gen_range(1..=5);
        let bits: Vec<Vec<bool>> = (0..s).map(|_| (0..len).map(|_| rng.gen()).collect()).collect();
        let items: Vec<BitVector> = bits.iter().map(|b| BitVector::from_bits(b.iter().copied())).collect();
        let (mut sum_rhs, mut prod_rhs) = (0i128, 0i128);
        for mask in 1usize..1 << s {
            let size = mask.count_ones();
            let sign = if size % 2 == 1 { 1 } else { -1 };
            for j in 0..len {
                let sel = (0..s).filter(|i| mask >> i & 1 == 1);
                let and = sel.clone().all(|i| bits[i][j]);
                let xor = sel.fold(false, |a, i| a ^ bits[i][j]);
                sum_rhs += sign * (i128::from(and) << (size - 1));
                prod_rhs += sign * i128::from(xor);
            }
        }
        let sum_lhs = (0..len).filter(|&j| (0..s).fold(false, |a, i| a ^ bits[i][j])).count() as i128;
        let prod_lhs = ((0..len).filter(|&j| (0..s).all(|i| bits[i][j])).count() as i128) << (s - 1);
        let r = check_weight_identities(len, &items).unwrap();
        if sum_lhs != sum_rhs || r.sum_lhs != sum_lhs || r.sum_rhs != sum_rhs || !r.sum_holds() {
            failures.push(format!("sum identity #{t}"));
        }
        if prod_lhs != prod_rhs || r.product_sides != Some((prod_lhs, prod_rhs)) || !r.product_holds() {
            failures.push(format!("product identity #{t}"));
        }
    }
    report(6, "10^4 instances of each identity", &failures, start.elapsed(), None);
}

#[test]
fn criterion_07_degree_oracle() {
    let start = Instant::now();
    let maps: Vec<BooleanMap> = (0u64..1 << 15)
        .map(|b| BooleanMap::from_table_bits(4, b << 1).unwrap())
        .collect();
    let mut failures = Vec::new();
    for chunk in maps.chunks(64) {
        let defs = common::definitional_degrees(chunk);
        for (p, d) in chunk.iter().zip(defs) {
            let anf = p.combinatorial_degree().unwrap();
            if anf != d || anf > 4 {
                failures.push(format!("{p:?}: anf {anf} definition {d}"));
            }
        }
    }
    report(
        7,
        "ANF degree equals definition on all 32768 maps at m=4",
        &failures,
        start.elapsed(),
        Some(Duration::from_secs(120)),
    );
}

#[test]
fn criterion_08_loop_suite() {
    let start = Instant::now();
    let catalog: Vec<(&str, LinearCode)> = common::doubly_even_catalog()
        .into_iter()
        .filter(|(_, c)| c.dimension() <= 4)
        .collect();
    let names: Vec<&str> = catalog.iter().map(|(n, _)| *n).collect();
    for required in ["trivial", "repetition 4", "extended Hamming [8,4]"] {
        assert!(names.contains(&required), "catalog lacks {required}");
    }
    let mut failures = Vec::new();
    for (name, code) in &catalog {
        let mut fail = |msg: String| failures.push(format!("{name}: {msg}"));
        let fs = match solve_factor_set(code) {
            Ok(fs) => fs,
            Err(e) => {
                fail(e.to_string());
                continue;
            }
        };
        if let Err(e) = fs.check(code) {
            fail(e.to_string());
        }
        let lp = match build_loop(code, &fs) {
            Ok(lp) => lp,
            Err(e) => {
                fail(e.to_string());
                continue;
            }
        };
        let moufang = check_moufang(lp.table(), true);
        if !moufang.holds() || moufang.triples_checked == 0 {
            fail(format!("{moufang:?}"));
        }
        let forms = weight_forms(code).unwrap();
        match extract_cubic_data(&lp) {
            Ok(data) if data == forms => {}
            Ok(_) => fail("loop data differs from weight forms".into()),
            Err(e) => fail(e.to_string()),
        }
        let axioms = check_cubic_axioms(&forms);
        if !axioms.holds() {
            fail(format!("{:?}", axioms.violations));
        }
        if code.dimension() > 0 {
            let sigma = forms.sigma_map().unwrap();
            let n = code.size();
            for c in 0..n {
                for d in 0..n {
                    if forms.chi(c, d) != common::derived_form_oracle(&sigma, &[c, d]) {
                        fail(format!("chi({c},{d})"));
                    }
                    for e in 0..n {
                        if forms.alpha(c, d, e) != common::derived_form_oracle(&sigma, &[c, d, e]) {
                            fail(format!("alpha({c},{d},{e})"));
                        }
                    }
                }
            }
        }
    }
    report(
        8,
        &format!("loop suite on {} doubly even codes", catalog.len()),
        &failures,
        start.elapsed(),
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn criterion_09_inverse_direction() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut levels = Vec::new();
    for (name, code) in common::code_catalog() {
        let r = match code.level() {
            CodeLevel::Finite(r) if r <= 3 && (1..=4).contains(&code.dimension()) => r as usize,
            _ => continue,
        };
        levels.push(r);
        let p = inverse_map(&code).unwrap();
        let d = p.combinatorial_degree().unwrap();
        if d > r + 1 || d != common::definitional_degree(&p) {
            failures.push(format!("{name}: level {r}, degree {d}"));
        }
    }
    for r in 0..=3 {
        assert!(levels.contains(&r), "catalog lacks a level {r} code");
    }
    report(
        9,
        &format!("inverse maps of {} codes have degree <= level+1", levels.len()),
        &failures,
        start.elapsed(),
        None,
    );
}

#[test]
fn criterion_10_construction_audit() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let (mut products, mut conditions) = (0, 0);
    for p in exhaustive_m3_maps().iter().chain(random_maps().iter()) {
        let (_, audit) = synthesize_audited(p).unwrap();
        products += audit.product_checks;
        conditions += audit.condition_checks;
        failures.extend(audit.violations.iter().map(|v| format!("{p:?}: {v}")));
    }
    assert!(products > 0 && conditions > 0);
    report(
        10,
        &format!("audit of 727 constructions ({products} product, {conditions} condition checks)"),
        &failures,
        start.elapsed(),
        None,
    );
}
