//! Vectors and linear codes over the two-element field.
//!
//! Coordinates are numbered from 1 in text form (leftmost character) and from
//! 0 internally. Codewords of a [`LinearCode`] are indexed little-endian:
//! bit `i` of an index selects generator row `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A vector in F_2^n, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut v = Self::zeros(0);
        for b in bits {
            v.push(b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn push(&mut self, value: bool) {
        if self.len % WORD == 0 {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, value);
    }

    /// Appends `count` copies of `value`.
    pub fn push_run(&mut self, value: bool, count: usize) {
        for _ in 0..count {
            self.push(value);
        }
    }

    pub fn extend_from(&mut self, other: &BitVector) {
        for b in other.iter() {
            self.push(b);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Number of coordinates equal to 1.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    fn first_one_from(&self, start_word: usize) -> Option<usize> {
        self.words[start_word..]
            .iter()
            .position(|&w| w != 0)
            .map(|p| (start_word + p) * WORD + self.words[start_word + p].trailing_zeros() as usize)
    }

    fn check_len(&self, other: &BitVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    pub fn xor_assign(&mut self, other: &BitVector) -> Result<()> {
        self.check_len(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn and_assign(&mut self, other: &BitVector) -> Result<()> {
        self.check_len(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        Ok(())
    }

    /// Coordinatewise sum `v + w`.
    pub fn sum(&self, other: &BitVector) -> Result<BitVector> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    /// Star product `v * w`: coordinatewise AND.
    pub fn star(&self, other: &BitVector) -> Result<BitVector> {
        let mut out = self.clone();
        out.and_assign(other)?;
        Ok(out)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 0,
                    msg: format!("non-binary character {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitVector::from_bits)
    }
}

/// Weight of a vector.
pub fn weight(v: &BitVector) -> usize {
    v.weight()
}

fn common_length(len: usize, items: &[BitVector]) -> Result<()> {
    for v in items {
        if v.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// Sum of a multiset of vectors of length `len`; the empty sum is zero.
pub fn sum_of(len: usize, items: &[BitVector]) -> Result<BitVector> {
    common_length(len, items)?;
    let mut acc = BitVector::zeros(len);
    for v in items {
        acc.xor_assign(v)?;
    }
    Ok(acc)
}

/// Star product of a multiset of vectors of length `len`.
///
/// The empty product is the zero vector, not the all-ones vector.
pub fn product_of(len: usize, items: &[BitVector]) -> Result<BitVector> {
    common_length(len, items)?;
    let Some((first, rest)) = items.split_first() else {
        return Ok(BitVector::zeros(len));
    };
    let mut acc = first.clone();
    for v in rest {
        acc.and_assign(v)?;
    }
    Ok(acc)
}

/// Rank of a set of vectors of common length.
pub fn rank(rows: &[BitVector]) -> usize {
    // each stored row is zero at the pivots of the rows stored before it
    let mut basis: Vec<(usize, BitVector)> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        for (pivot, b) in &basis {
            if r.get(*pivot) {
                r.xor_assign(b).expect("equal lengths");
            }
        }
        if let Some(p) = r.first_one() {
            basis.push((p, r));
        }
    }
    basis.len()
}

/// Level of a linear code: the exponent of the largest power of two dividing
/// every codeword weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CodeLevel {
    Finite(u32),
    Infinite,
}

impl CodeLevel {
    pub fn finite(self) -> Option<u32> {
        match self {
            CodeLevel::Finite(r) => Some(r),
            CodeLevel::Infinite => None,
        }
    }

    /// Level at least 2.
    pub fn is_doubly_even(self) -> bool {
        self >= CodeLevel::Finite(2)
    }
}

impl fmt::Display for CodeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeLevel::Finite(r) => write!(f, "{r}"),
            CodeLevel::Infinite => f.write_str("infinite"),
        }
    }
}

/// A binary linear code given by an ordered, independent generator basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    length: usize,
    rows: Vec<BitVector>,
}

impl LinearCode {
    /// Builds a code, rejecting ragged or dependent rows.
    pub fn new(length: usize, rows: Vec<BitVector>) -> Result<Self> {
        common_length(length, &rows)?;
        if rank(&rows) != rows.len() {
            return Err(Error::DependentRows);
        }
        Ok(Self { length, rows })
    }

    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BitVector>>>()?;
        let length = rows.first().map_or(0, BitVector::len);
        Self::new(length, rows)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    /// Number of codewords, `2^dimension`.
    pub fn size(&self) -> usize {
        1usize << self.rows.len()
    }

    /// The codeword with little-endian index `index`.
    pub fn codeword(&self, index: usize) -> BitVector {
        assert!(index < self.size(), "codeword index {index} out of range");
        let mut acc = BitVector::zeros(self.length);
        for (i, row) in self.rows.iter().enumerate() {
            if index >> i & 1 == 1 {
                acc.xor_assign(row).expect("rows share the ambient length");
            }
        }
        acc
    }

    /// All `2^dimension` codewords in index order.
    pub fn codewords(&self) -> Vec<BitVector> {
        let mut words = Vec::with_capacity(self.size());
        words.push(BitVector::zeros(self.length));
        for b in 1..self.size() {
            let mut w = words[b & (b - 1)].clone();
            w.xor_assign(&self.rows[b.trailing_zeros() as usize])
                .expect("rows share the ambient length");
            words.push(w);
        }
        words
    }

    pub fn weights(&self) -> Vec<usize> {
        self.codewords().iter().map(BitVector::weight).collect()
    }

    pub fn level(&self) -> CodeLevel {
        level_of_weights(self.weights())
    }
}

/// Enumerates the span of `code` in index order.
pub fn enumerate_codewords(code: &LinearCode) -> Vec<BitVector> {
    code.codewords()
}

pub fn code_level(code: &LinearCode) -> CodeLevel {
    code.level()
}

pub(crate) fn level_of_weights<I: IntoIterator<Item = usize>>(weights: I) -> CodeLevel {
    weights
        .into_iter()
        .filter(|&w| w != 0)
        .map(|w| w.trailing_zeros())
        .min()
        .map_or(CodeLevel::Infinite, CodeLevel::Finite)
}

/// Both sides of the sum-to-product and product-to-sum weight identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightIdentityReport {
    pub sum_lhs: i128,
    pub sum_rhs: i128,
    /// `None` for the empty multiset.
    pub product_sides: Option<(i128, i128)>,
}

impl WeightIdentityReport {
    pub fn sum_holds(&self) -> bool {
        self.sum_lhs == self.sum_rhs
    }

    pub fn product_holds(&self) -> bool {
        self.product_sides.is_none_or(|(l, r)| l == r)
    }
}

/// Evaluates
/// `|ΣI| = Σ_{J⊆I} (-2)^{|J|-1} |ΠJ|` and
/// `2^{s-1} |ΠI| = Σ_{J⊆I} (-1)^{|J|-1} |ΣJ|`
/// over all index subsets `J`. The empty `J` contributes zero to both.
pub fn check_weight_identities(len: usize, items: &[BitVector]) -> Result<WeightIdentityReport> {
    common_length(len, items)?;
    let s = items.len();
    assert!(s < 64, "multiset too large for subset enumeration");
    let mut sum_rhs = 0i128;
    let mut prod_rhs = 0i128;
    for mask in 1u64..(1u64 << s) {
        let members: Vec<BitVector> = (0..s)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| items[i].clone())
            .collect();
        let size = members.len() as u32;
        let sign: i128 = if size % 2 == 1 { 1 } else { -1 };
        let prod_w = product_of(len, &members)?.weight() as i128;
        let sum_w = sum_of(len, &members)?.weight() as i128;
        sum_rhs += sign * (1i128 << (size - 1)) * prod_w;
        prod_rhs += sign * sum_w;
    }
    let sum_lhs = sum_of(len, items)?.weight() as i128;
    let product_sides = (s >= 1).then(|| {
        let lhs = (1i128 << (s - 1)) * product_of(len, items).expect("lengths checked").weight() as i128;
        (lhs, prod_rhs)
    });
    Ok(WeightIdentityReport {
        sum_lhs,
        sum_rhs,
        product_sides,
    })
}

/// An affine system `A x = b` over F_2, reduced incrementally.
///
/// Each stored row has its pivot at its lowest set column; pivots are
/// assigned on first arrival so the result depends only on equation order.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    vars: usize,
    pivots: Vec<Option<(BitVector, bool)>>,
}

impl LinearSystem {
    pub fn new(vars: usize) -> Self {
        Self {
            vars,
            pivots: vec![None; vars],
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.iter().filter(|p| p.is_some()).count()
    }

    /// Adds `Σ x_v = rhs` over the listed variables (repeats cancel).
    ///
    /// Returns `false` if the equation contradicts those already added.
    pub fn add_equation(&mut self, vars: &[usize], rhs: bool) -> bool {
        let mut row = BitVector::zeros(self.vars);
        for &v in vars {
            row.toggle(v);
        }
        self.add_row(row, rhs)
    }

    pub fn add_row(&mut self, mut row: BitVector, mut rhs: bool) -> bool {
        assert_eq!(row.len(), self.vars);
        let mut word = 0;
        while let Some(p) = row.first_one_from(word) {
            word = p / WORD;
            match &self.pivots[p] {
                Some((prow, prhs)) => {
                    row.xor_assign(prow).expect("equal lengths");
                    rhs ^= prhs;
                }
                None => {
                    self.pivots[p] = Some((row, rhs));
                    return true;
                }
            }
        }
        !rhs
    }

    /// The solution with every free variable set to 0.
    pub fn solve(&self) -> Vec<bool> {
        let mut x = vec![false; self.vars];
        for p in (0..self.vars).rev() {
            if let Some((row, rhs)) = &self.pivots[p] {
                let mut value = *rhs;
                for j in (p + 1)..self.vars {
                    if row.get(j) && x[j] {
                        value ^= true;
                    }
                }
                x[p] = value;
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(bv("0000").weight(), 0);
        assert_eq!(bv("1011").weight(), 3);
        assert_eq!(weight(&bv("11110000")), 4);
    }

    #[test]
    fn sums_and_products() {
        let items = [bv("1100"), bv("0110")];
        assert_eq!(sum_of(4, &items).unwrap(), bv("1010"));
        assert_eq!(product_of(4, &items).unwrap(), bv("0100"));
        assert_eq!(sum_of(4, &[]).unwrap(), bv("0000"));
        assert_eq!(product_of(4, &[]).unwrap(), bv("0000"));
        let v = bv("1101");
        assert!(sum_of(4, &[v.clone(), v.clone()]).unwrap().is_zero());
        assert_eq!(product_of(4, &[v.clone()]).unwrap(), v);
        assert!(matches!(
            sum_of(4, &[bv("11")]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(bv("11").star(&bv("111")).is_err());
    }

    #[test]
    fn push_across_word_boundary() {
        let mut v = BitVector::zeros(63);
        v.push(true);
        v.push(true);
        assert_eq!(v.len(), 65);
        assert_eq!(v.weight(), 2);
        assert_eq!(v.first_one(), Some(63));
        assert_eq!(BitVector::ones(130).weight(), 130);
    }

    #[test]
    fn enumeration() {
        let c = LinearCode::from_strs(&["1100", "0110"]).unwrap();
        let words: Vec<String> = c.codewords().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["0000", "1100", "0110", "1010"]);
        for (b, w) in c.codewords().iter().enumerate() {
            assert_eq!(&c.codeword(b), w);
        }
        let trivial = LinearCode::new(4, vec![]).unwrap();
        assert_eq!(enumerate_codewords(&trivial), vec![bv("0000")]);
        assert_eq!(
            LinearCode::from_strs(&["11", "11"]),
            Err(Error::DependentRows)
        );
    }

    #[test]
    fn levels() {
        assert_eq!(LinearCode::from_strs(&["1111"]).unwrap().level(), CodeLevel::Finite(2));
        assert_eq!(LinearCode::from_strs(&["10"]).unwrap().level(), CodeLevel::Finite(0));
        assert_eq!(
            code_level(&LinearCode::from_strs(&["1100", "0110"]).unwrap()),
            CodeLevel::Finite(1)
        );
        assert_eq!(LinearCode::new(4, vec![]).unwrap().level(), CodeLevel::Infinite);
        assert!(CodeLevel::Infinite.is_doubly_even());
        assert!(!CodeLevel::Finite(1).is_doubly_even());
    }

    #[test]
    fn weight_identity_examples() {
        let r = check_weight_identities(4, &[bv("1100"), bv("0110")]).unwrap();
        assert_eq!((r.sum_lhs, r.sum_rhs), (2, 2));
        assert_eq!(r.product_sides, Some((2, 2)));
        let r = check_weight_identities(4, &[bv("1011")]).unwrap();
        assert_eq!((r.sum_lhs, r.sum_rhs), (3, 3));
        let r = check_weight_identities(4, &[]).unwrap();
        assert!(r.sum_holds() && r.product_holds());
        assert_eq!(r.product_sides, None);
    }

    #[test]
    fn linear_system_solves() {
        // x0 + x1 = 1, x1 + x2 = 0, x2 = 1
        let mut sys = LinearSystem::new(3);
        assert!(sys.add_equation(&[0, 1], true));
        assert!(sys.add_equation(&[1, 2], false));
        assert!(sys.add_equation(&[2], true));
        assert!(sys.add_equation(&[0, 2], true)); // redundant
        assert_eq!(sys.solve(), vec![false, true, true]);
        assert!(!sys.add_equation(&[0], true));
        // free variable defaults to zero
        let mut sys = LinearSystem::new(2);
        sys.add_equation(&[0, 1], true);
        assert_eq!(sys.solve(), vec![true, false]);
        assert_eq!(sys.rank(), 1);
    }
}
