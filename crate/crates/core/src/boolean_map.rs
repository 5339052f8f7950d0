//! Boolean maps `P: F_2^m -> F_2` stored as truth tables, with their derived
//! forms and combinatorial degree.
//!
//! A point of `F_2^m` is a `usize` whose bit `i` is coordinate `i + 1`, the
//! same little-endian convention used for codeword indices.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported dimension; truth tables hold `2^m` entries.
pub const MAX_DIM: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanMap {
    m: usize,
    table: Vec<bool>,
}

impl BooleanMap {
    pub fn new(m: usize, table: Vec<bool>) -> Result<Self> {
        if m == 0 || m > MAX_DIM {
            return Err(Error::CapExceeded {
                what: "map dimension (must be positive)",
                value: m,
                cap: MAX_DIM,
            });
        }
        if table.len() != 1 << m {
            return Err(Error::LengthMismatch {
                expected: 1 << m,
                found: table.len(),
            });
        }
        Ok(Self { m, table })
    }

    pub fn from_fn(m: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        Self::new(m, (0..1usize << m).map(f).collect())
    }

    /// Map whose truth table is the low `2^m` bits of `bits`.
    pub fn from_table_bits(m: usize, bits: u64) -> Result<Self> {
        assert!(m <= 6, "table does not fit in 64 bits");
        Self::from_fn(m, |x| bits >> x & 1 == 1)
    }

    pub fn zero(m: usize) -> Result<Self> {
        Self::from_fn(m, |_| false)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn eval(&self, x: usize) -> bool {
        self.table[x]
    }

    pub fn set(&mut self, x: usize, value: bool) {
        self.table[x] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&b| !b)
    }

    /// Rejects maps with `P(0) = 1`.
    pub fn ensure_pointed(&self) -> Result<()> {
        if self.table[0] {
            Err(Error::InvalidMap)
        } else {
            Ok(())
        }
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.size() {
            return Err(Error::PointOutOfRange {
                point: x,
                dim: self.m,
            });
        }
        Ok(())
    }

    /// `P_s(v_1, ..., v_s) = Σ_{J ⊆ {1..s}} P(Σ_{j∈J} v_j)`.
    ///
    /// Subsets are taken over argument positions, so repeated arguments
    /// count with multiplicity. The empty subset contributes `P(0) = 0`.
    pub fn derived_form(&self, args: &[usize]) -> Result<bool> {
        self.ensure_pointed()?;
        for &a in args {
            self.check_point(a)?;
        }
        Ok(self.derived_form_unchecked(args))
    }

    /// Walks the subsets in Gray-code order, so consecutive subset sums
    /// differ by one argument.
    pub(crate) fn derived_form_unchecked(&self, args: &[usize]) -> bool {
        assert!(args.len() < 64);
        let mut acc = false;
        let mut point = 0usize;
        for step in 1u64..(1u64 << args.len()) {
            point ^= args[step.trailing_zeros() as usize];
            acc ^= self.table[point];
        }
        acc
    }

    /// Checks `P(ΣI) = Σ_{J⊆I} P_{|J|}(J)` with the empty term equal to 0.
    pub fn verify_reverse_formula(&self, items: &[usize]) -> Result<bool> {
        self.ensure_pointed()?;
        for &a in items {
            self.check_point(a)?;
        }
        let total = items.iter().fold(0, |acc, &x| acc ^ x);
        let mut rhs = false;
        let mut sub = Vec::with_capacity(items.len());
        for mask in 1u64..(1u64 << items.len()) {
            sub.clear();
            sub.extend((0..items.len()).filter(|i| mask >> i & 1 == 1).map(|i| items[i]));
            rhs ^= self.derived_form_unchecked(&sub);
        }
        Ok(self.table[total] == rhs)
    }

    pub fn anf(&self) -> AlgebraicNormalForm {
        anf(self)
    }

    pub fn combinatorial_degree(&self) -> Result<usize> {
        combinatorial_degree(self)
    }
}

impl fmt::Debug for BooleanMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = self.table.iter().map(|&b| if b { '1' } else { '0' }).collect();
        write!(f, "BooleanMap(m={}, {bits})", self.m)
    }
}

/// Multilinear polynomial over F_2; each monomial is a bitmask of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicNormalForm {
    m: usize,
    monomials: Vec<usize>,
}

impl AlgebraicNormalForm {
    pub fn dim(&self) -> usize {
        self.m
    }

    /// Monomial masks in increasing order.
    pub fn monomials(&self) -> &[usize] {
        &self.monomials
    }

    /// Monomials as sorted lists of 1-based variable indices.
    pub fn monomial_sets(&self) -> Vec<Vec<usize>> {
        self.monomials
            .iter()
            .map(|&mono| (0..self.m).filter(|i| mono >> i & 1 == 1).map(|i| i + 1).collect())
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.monomials
            .iter()
            .map(|mono| mono.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: usize) -> bool {
        self.monomials
            .iter()
            .filter(|&&mono| mono & x == mono)
            .count()
            % 2
            == 1
    }
}

impl fmt::Display for AlgebraicNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .monomial_sets()
            .iter()
            .map(|vars| {
                if vars.is_empty() {
                    "1".to_string()
                } else {
                    vars.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Subset Möbius transform of the truth table.
pub fn anf(p: &BooleanMap) -> AlgebraicNormalForm {
    let mut coeffs = p.table.clone();
    for i in 0..p.m {
        let bit = 1 << i;
        for x in 0..coeffs.len() {
            if x & bit != 0 {
                coeffs[x] ^= coeffs[x ^ bit];
            }
        }
    }
    AlgebraicNormalForm {
        m: p.m,
        monomials: (0..coeffs.len()).filter(|&x| coeffs[x]).collect(),
    }
}

/// Smallest `r` with every derived form of order above `r` identically zero,
/// computed as the ANF degree.
pub fn combinatorial_degree(p: &BooleanMap) -> Result<usize> {
    p.ensure_pointed()?;
    Ok(anf(p).degree())
}
