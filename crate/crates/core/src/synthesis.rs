//! Construction of a level-`r` code realising a Boolean map of combinatorial
//! degree `r + 1`, together with the checks that certify the result.
//!
//! Generator rows are built column block by column block, one step per
//! nonempty subset of `{1..m}`. Step `{i}` introduces row `i`; step `I` with
//! `|I| > 1` and `P(I) = 1` appends a [`CKeyGadget`] block to the rows in `I`
//! and zeros to every other row.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolean_map::BooleanMap;
use crate::error::{Error, Result};
use crate::gf2::{rank, BitVector, CodeLevel, LinearCode};

pub const DEFAULT_SEED: u64 = 0x00c0_de10;
pub const DEFAULT_RANDOM_MULTISETS: usize = 100;
/// Gadgets have length `2^k`.
pub const MAX_GADGET_K: usize = 24;

/// A construction step, identified by a nonempty subset of `{1..m}` stored as
/// a bitmask (bit `i - 1` for member `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepLabel(usize);

impl StepLabel {
    pub fn new(mask: usize) -> Option<Self> {
        (mask != 0).then_some(Self(mask))
    }

    pub fn from_members(members: &[usize]) -> Option<Self> {
        let mask = members
            .iter()
            .filter(|&&i| i >= 1 && i <= usize::BITS as usize)
            .fold(0usize, |acc, &i| acc | 1 << (i - 1));
        Self::new(mask)
    }

    pub fn mask(self) -> usize {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_singleton(self) -> bool {
        self.len() == 1
    }

    /// 1-based members in increasing order.
    pub fn members(self) -> Vec<usize> {
        (0..usize::BITS as usize)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    /// Compares the members written in decreasing order, lexicographically.
    ///
    /// Agrees with the derived `Ord` on masks.
    pub fn cmp_lexicographic(self, other: Self) -> Ordering {
        let mut a = self.members();
        let mut b = other.members();
        a.reverse();
        b.reverse();
        a.cmp(&b)
    }
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut members = self.members();
        members.reverse();
        let parts: Vec<String> = members.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All `2^m - 1` steps in construction order.
pub fn step_order(m: usize) -> Vec<StepLabel> {
    assert!(m >= 1 && m < usize::BITS as usize);
    let mut steps: Vec<StepLabel> = (1..1usize << m).map(StepLabel).collect();
    steps.sort_by(|a, b| a.cmp_lexicographic(*b));
    steps
}

/// Vectors `w_0, ..., w_l` of length `2^k` whose proper star products have
/// weight `2^{k-|A|}` while the full product has weight `2^{k-l-2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CKeyGadget {
    l: usize,
    k: usize,
    vectors: Vec<BitVector>,
}

impl CKeyGadget {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vectors(&self) -> &[BitVector] {
        &self.vectors
    }

    /// Checks every weight claim and linear independence; returns the
    /// failures found.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.vectors.len();
        let len = 1usize << self.k;
        for subset in 1usize..(1 << n) {
            let size = subset.count_ones() as usize;
            let mut prod = BitVector::ones(len);
            for (i, w) in self.vectors.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    prod.and_assign(w).expect("gadget vectors share a length");
                }
            }
            let expected = if size == n {
                1usize << (self.k - self.l - 2)
            } else {
                1usize << (self.k - size)
            };
            if prod.weight() != expected {
                out.push(format!(
                    "subset {subset:#b}: weight {} != {expected}",
                    prod.weight()
                ));
            }
        }
        if rank(&self.vectors) != n {
            out.push("vectors are linearly dependent".to_string());
        }
        out
    }
}

/// Builds the gadget block by block: entry `j` of `u_i` (`i < l`) is bit `i`
/// of `j`, and entry `j` of `u_l` is `1/4` or `3/4` according to the parity of
/// the number of zero bits of `j`. Each entry becomes `2^{k-l}` coordinates,
/// ones first.
pub fn ckey_gadget(l: usize, k: usize) -> Result<CKeyGadget> {
    if l + 1 >= k || k > MAX_GADGET_K {
        return Err(Error::GadgetParameters { l, k });
    }
    let block = 1usize << (k - l);
    let mut vectors = vec![BitVector::zeros(0); l + 1];
    for j in 0usize..(1 << l) {
        for (i, w) in vectors.iter_mut().enumerate().take(l) {
            let ones = if j >> i & 1 == 1 { block } else { 0 };
            w.push_run(true, ones);
            w.push_run(false, block - ones);
        }
        let zeros_in_j = l - j.count_ones() as usize;
        let ones = if zeros_in_j % 2 == 1 { 3 * block / 4 } else { block / 4 };
        vectors[l].push_run(true, ones);
        vectors[l].push_run(false, block - ones);
    }
    Ok(CKeyGadget { l, k, vectors })
}

/// One line of the construction trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub label: StepLabel,
    /// `P(v_i)` for singleton steps, `P_{|I|}` on the basis of `I` otherwise.
    pub value: bool,
    pub appended: usize,
    pub length: usize,
    /// `(l, k)` when a gadget block was appended.
    pub gadget: Option<(usize, usize)>,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "STEP {} P={} appended={} length={}",
            self.label.mask(),
            u8::from(self.value),
            self.appended,
            self.length
        )
    }
}

#[derive(Debug, Clone)]
pub struct SynthesisResult {
    pub code: LinearCode,
    /// Target level, `comdeg(P) - 1`.
    pub level: u32,
    pub trace: Vec<StepRecord>,
}

/// Per-step checks gathered by [`synthesize_audited`].
#[derive(Debug, Clone, Default)]
pub struct AuditReport {
    pub product_checks: usize,
    pub condition_checks: usize,
    pub level_checks: usize,
    pub violations: Vec<String>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Realises `P` as a code of level `comdeg(P) - 1`.
pub fn synthesize(p: &BooleanMap) -> Result<SynthesisResult> {
    run_synthesis(p, None)
}

/// As [`synthesize`], additionally checking after each step `I` that every
/// condition `(J)` with `J <= I` holds and that the rows introduced so far
/// span a code of level at least `r`.
pub fn synthesize_audited(p: &BooleanMap) -> Result<(SynthesisResult, AuditReport)> {
    let mut audit = AuditReport::default();
    let result = run_synthesis(p, Some(&mut audit))?;
    Ok((result, audit))
}

fn run_synthesis(p: &BooleanMap, mut audit: Option<&mut AuditReport>) -> Result<SynthesisResult> {
    p.ensure_pointed()?;
    let degree = p.combinatorial_degree()?;
    if degree == 0 {
        return Err(Error::DegenerateMap);
    }
    let r = degree - 1;
    if r + 2 > MAX_GADGET_K {
        return Err(Error::CapExceeded {
            what: "target level",
            value: r,
            cap: MAX_GADGET_K - 2,
        });
    }
    let m = p.dim();
    let basis: Vec<usize> = (0..m).map(|i| 1 << i).collect();
    // rows not yet introduced stay zero, which matches introducing them later
    // with zeros on every earlier coordinate
    let mut rows = vec![BitVector::zeros(0); m];
    let mut length = 0usize;
    let mut trace = Vec::with_capacity((1 << m) - 1);

    for label in step_order(m) {
        let members: Vec<usize> = label.members().iter().map(|i| i - 1).collect();
        let args: Vec<usize> = members.iter().map(|&i| basis[i]).collect();
        let value = p.derived_form_unchecked(&args);
        let mut gadget = None;
        let appended = if label.is_singleton() {
            let i = members[0];
            let block = 1usize << (r + 1);
            for (j, row) in rows.iter_mut().enumerate() {
                if j == i {
                    let ones = if value { block / 2 } else { block };
                    row.push_run(true, ones);
                    row.push_run(false, block - ones);
                } else {
                    row.push_run(false, block);
                }
            }
            block
        } else {
            let product = star_rows(&rows, label.mask(), length);
            if let Some(a) = audit.as_deref_mut() {
                a.product_checks += 1;
            }
            if !product.is_zero() {
                return Err(Error::Internal(format!(
                    "product of rows in {label} nonzero before its step"
                )));
            }
            if value {
                let g = ckey_gadget(members.len() - 1, r + 2)?;
                gadget = Some((g.l(), g.k()));
                let block = 1usize << (r + 2);
                let mut next = g.vectors().iter();
                for (j, row) in rows.iter_mut().enumerate() {
                    if label.mask() >> j & 1 == 1 {
                        row.extend_from(next.next().expect("one gadget vector per member"));
                    } else {
                        row.push_run(false, block);
                    }
                }
                block
            } else {
                0
            }
        };
        length += appended;
        trace.push(StepRecord {
            label,
            value,
            appended,
            length,
            gadget,
        });

        if let Some(a) = audit.as_deref_mut() {
            audit_step(p, &rows, label, r as u32, length, a);
        }
    }

    let code = LinearCode::new(length, rows)
        .map_err(|e| Error::Internal(format!("constructed rows rejected: {e}")))?;
    Ok(SynthesisResult {
        code,
        level: r as u32,
        trace,
    })
}

fn audit_step(
    p: &BooleanMap,
    rows: &[BitVector],
    label: StepLabel,
    r: u32,
    length: usize,
    audit: &mut AuditReport,
) {
    for mask in 1..=label.mask() {
        audit.condition_checks += 1;
        if !condition_holds(p, rows, mask, r, length) {
            audit
                .violations
                .push(format!("after step {label}: condition ({mask:#b}) fails"));
        }
    }
    let introduced = usize::BITS - label.mask().leading_zeros();
    let mut span = vec![BitVector::zeros(length)];
    for row in &rows[..introduced as usize] {
        let extra: Vec<BitVector> = span.iter().map(|w| w.sum(row).expect("equal lengths")).collect();
        span.extend(extra);
    }
    audit.level_checks += 1;
    if crate::gf2::level_of_weights(span.iter().map(BitVector::weight)) < CodeLevel::Finite(r) {
        audit
            .violations
            .push(format!("after step {label}: level below {r}"));
    }
}

fn star_rows(rows: &[BitVector], mask: usize, length: usize) -> BitVector {
    let mut acc = BitVector::ones(length);
    for (j, row) in rows.iter().enumerate() {
        if mask >> j & 1 == 1 {
            acc.and_assign(row).expect("rows share the current length");
        }
    }
    acc
}

/// `2^e` with `e = r - s + 2`; `None` when `e <= 0`.
fn condition_modulus(r: u32, s: usize) -> Option<u32> {
    let e = i64::from(r) - s as i64 + 2;
    (e > 0).then_some(e as u32)
}

/// `2^{e-1} v ≡ w (mod 2^e)`, vacuously true for `e <= 0`.
fn congruent(value: bool, weight: usize, r: u32, s: usize) -> bool {
    match condition_modulus(r, s) {
        None => true,
        Some(e) => {
            let modulus = 1u128 << e;
            let lhs = if value { 1u128 << (e - 1) } else { 0 };
            (lhs + modulus - weight as u128 % modulus) % modulus == 0
        }
    }
}

fn condition_holds(p: &BooleanMap, rows: &[BitVector], mask: usize, r: u32, length: usize) -> bool {
    let args: Vec<usize> = (0..rows.len()).filter(|j| mask >> j & 1 == 1).map(|j| 1 << j).collect();
    let value = p.derived_form_unchecked(&args);
    let weight = star_rows(rows, mask, length).weight();
    congruent(value, weight, r, args.len())
}

/// Condition `(I)` for a subset of basis rows given by 1-based `members`:
/// `2^{r-|I|+1} P(I) ≡ |Π_{i∈I} c_i| (mod 2^{r-|I|+2})`.
pub fn check_condition(p: &BooleanMap, code: &LinearCode, members: &[usize], r: u32) -> Result<bool> {
    p.ensure_pointed()?;
    let m = code.dimension();
    if p.dim() != m {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: m,
        });
    }
    for &i in members {
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange { index: i, max: m });
        }
    }
    let label = StepLabel::from_members(members).ok_or(Error::IndexOutOfRange { index: 0, max: m })?;
    Ok(condition_holds(p, code.rows(), label.mask(), r, code.length()))
}

/// Outcome of checking one code against one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub r: u32,
    pub codewords_checked: usize,
    /// Index of the first codeword with `P(c) != |c|/2^r mod 2`.
    pub map_mismatch: Option<usize>,
    pub level: CodeLevel,
    pub equivalence: EquivalenceSample,
}

impl VerificationReport {
    pub fn map_ok(&self) -> bool {
        self.map_mismatch.is_none()
    }

    pub fn level_ok(&self) -> bool {
        self.level == CodeLevel::Finite(self.r)
    }

    pub fn passed(&self) -> bool {
        self.map_ok() && self.level_ok() && self.equivalence.agrees()
    }
}

/// Conditions (i) and (ii) evaluated on a sample of multisets of points.
///
/// The sample is every subset of the basis plus seeded random multisets of
/// size at most `m + 2`; it is not an exhaustive quantification.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EquivalenceSample {
    pub basis_subsets: usize,
    pub random_multisets: usize,
    pub sum_condition_holds: usize,
    pub product_condition_holds: usize,
    /// Multisets where exactly one of the two conditions holds.
    pub disagreements: usize,
}

impl EquivalenceSample {
    pub fn tested(&self) -> usize {
        self.basis_subsets + self.random_multisets
    }

    pub fn sum_condition_all(&self) -> bool {
        self.sum_condition_holds == self.tested()
    }

    pub fn product_condition_all(&self) -> bool {
        self.product_condition_holds == self.tested()
    }

    /// Both conditions hold on the whole sample, or both fail somewhere.
    pub fn agrees(&self) -> bool {
        self.sum_condition_all() == self.product_condition_all()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub random_multisets: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            random_multisets: DEFAULT_RANDOM_MULTISETS,
        }
    }
}

pub fn verify_code_against_map(p: &BooleanMap, code: &LinearCode) -> Result<VerificationReport> {
    verify_code_against_map_with(p, code, VerifyOptions::default())
}

pub fn verify_code_against_map_with(
    p: &BooleanMap,
    code: &LinearCode,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    if code.dimension() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: code.dimension(),
        });
    }
    let degree = p.combinatorial_degree()?;
    if degree == 0 {
        return Err(Error::DegenerateMap);
    }
    let r = (degree - 1) as u32;
    let words = code.codewords();
    let map_mismatch =
        (0..words.len()).find(|&b| weight_parity(words[b].weight(), r) != Some(p.eval(b)));

    let m = p.dim();
    let mut sample = EquivalenceSample::default();
    let tally = |items: &[usize], sample: &mut EquivalenceSample| {
        let i_ok = sum_condition(p, &words, items, r);
        let ii_ok = product_condition(p, &words, items, r, code.length());
        sample.sum_condition_holds += usize::from(i_ok);
        sample.product_condition_holds += usize::from(ii_ok);
        sample.disagreements += usize::from(i_ok != ii_ok);
    };
    for mask in 0usize..(1 << m) {
        let items: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| 1 << i).collect();
        tally(&items, &mut sample);
        sample.basis_subsets += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_multisets {
        let size = rng.gen_range(0..=m + 2);
        let items: Vec<usize> = (0..size).map(|_| rng.gen_range(0..1usize << m)).collect();
        tally(&items, &mut sample);
        sample.random_multisets += 1;
    }

    Ok(VerificationReport {
        r,
        codewords_checked: words.len(),
        map_mismatch,
        level: code.level(),
        equivalence: sample,
    })
}

/// `|c| / 2^r mod 2`, or `None` when `2^r` does not divide the weight.
pub(crate) fn weight_parity(weight: usize, r: u32) -> Option<bool> {
    (weight % (1 << r) == 0).then_some((weight >> r) & 1 == 1)
}

/// `2^r P(ΣI) ≡ |ΣI| (mod 2^{r+1})`.
fn sum_condition(p: &BooleanMap, words: &[BitVector], items: &[usize], r: u32) -> bool {
    let point = items.iter().fold(0, |acc, &x| acc ^ x);
    let modulus = 1u128 << (r + 1);
    let lhs = if p.eval(point) { 1u128 << r } else { 0 };
    let w = words[point].weight() as u128 % modulus;
    (lhs + modulus - w) % modulus == 0
}

/// `2^{r-|I|+1} P(I) ≡ |ΠI| (mod 2^{r-|I|+2})` on codewords of the points.
fn product_condition(p: &BooleanMap, words: &[BitVector], items: &[usize], r: u32, length: usize) -> bool {
    let value = p.derived_form_unchecked(items);
    let weight = if items.is_empty() {
        0
    } else {
        let mut acc = BitVector::ones(length);
        for &x in items {
            acc.and_assign(&words[x]).expect("codewords share a length");
        }
        acc.weight()
    };
    congruent(value, weight, r, items.len())
}
