//! Code loops of doubly even codes.
//!
//! A factor set `φ` on a doubly even code `C` is any table satisfying
//!
//! ```text
//! φ(c, c)                               = |c|/4     (mod 2)
//! φ(c, d) + φ(d, c)                     = |c*d|/2   (mod 2)
//! φ(c, d) + φ(c, d+e) + φ(d, e) + φ(c+d, e) = |c*d*e| (mod 2)
//! ```
//!
//! and the code loop is `F_2 × C` with `(a, c)(b, d) = (a + b + φ(c, d), c + d)`.
//! Loop elements are numbered `sign · 2^k + codeword index`.

use std::fmt;

use crate::boolean_map::BooleanMap;
use crate::error::{Error, Result};
use crate::gf2::{BitVector, CodeLevel, LinearCode, LinearSystem};

/// Default cap on the code dimension for the factor-set solver
/// (`4^6 = 4096` unknowns).
pub const DEFAULT_MAX_SOLVER_DIM: usize = 6;
/// Default cap on the code dimension for exhaustive Moufang checks.
pub const DEFAULT_MAX_MOUFANG_DIM: usize = 5;

#[derive(Clone, PartialEq, Eq)]
pub struct FactorSet {
    dim: usize,
    table: Vec<bool>,
}

impl FactorSet {
    pub fn new(dim: usize, table: Vec<bool>) -> Result<Self> {
        let n = 1usize << dim;
        if table.len() != n * n {
            return Err(Error::LengthMismatch {
                expected: n * n,
                found: table.len(),
            });
        }
        Ok(Self { dim, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        1 << self.dim
    }

    pub fn get(&self, c: usize, d: usize) -> bool {
        self.table[c * self.size() + d]
    }

    pub fn set(&mut self, c: usize, d: usize, value: bool) {
        let n = self.size();
        self.table[c * n + d] = value;
    }

    /// Substitutes every codeword pair and triple into the three defining
    /// conditions.
    pub fn check(&self, code: &LinearCode) -> Result<()> {
        if code.dimension() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: code.dimension(),
            });
        }
        let forms = WeightTables::new(code)?;
        let n = self.size();
        for c in 0..n {
            if self.get(c, c) != forms.quarter(c) {
                return Err(Error::FactorSetViolation {
                    condition: "φ(c,c) = |c|/4",
                    witness: vec![c],
                });
            }
        }
        for c in 0..n {
            for d in 0..n {
                if self.get(c, d) ^ self.get(d, c) != forms.half_pair(c, d) {
                    return Err(Error::FactorSetViolation {
                        condition: "φ(c,d) + φ(d,c) = |c*d|/2",
                        witness: vec![c, d],
                    });
                }
            }
        }
        for c in 0..n {
            for d in 0..n {
                for e in 0..n {
                    let lhs = self.get(c, d) ^ self.get(c, d ^ e) ^ self.get(d, e) ^ self.get(c ^ d, e);
                    if lhs != forms.triple(c, d, e) {
                        return Err(Error::FactorSetViolation {
                            condition: "φ(c,d) + φ(c,d+e) + φ(d,e) + φ(c+d,e) = |c*d*e|",
                            witness: vec![c, d, e],
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactorSet(dim={})", self.dim)
    }
}

/// Weight data of a doubly even code, indexed by codeword.
struct WeightTables {
    words: Vec<BitVector>,
}

impl WeightTables {
    fn new(code: &LinearCode) -> Result<Self> {
        let level = code.level();
        if !level.is_doubly_even() {
            return Err(Error::NotDoublyEven {
                level: level.to_string(),
            });
        }
        Ok(Self {
            words: code.codewords(),
        })
    }

    fn quarter(&self, c: usize) -> bool {
        self.words[c].weight() / 4 % 2 == 1
    }

    fn pair_weight(&self, c: usize, d: usize) -> usize {
        self.words[c].star(&self.words[d]).expect("equal lengths").weight()
    }

    /// `|c*d|` is even in a doubly even code.
    fn half_pair(&self, c: usize, d: usize) -> bool {
        self.pair_weight(c, d) / 2 % 2 == 1
    }

    fn triple(&self, c: usize, d: usize, e: usize) -> bool {
        let mut v = self.words[c].star(&self.words[d]).expect("equal lengths");
        v.and_assign(&self.words[e]).expect("equal lengths");
        v.weight() % 2 == 1
    }
}

pub fn solve_factor_set(code: &LinearCode) -> Result<FactorSet> {
    solve_factor_set_capped(code, DEFAULT_MAX_SOLVER_DIM)
}

/// Solves the defining conditions as an affine system in the `4^k` unknowns
/// `φ(c, d)`. Equations are added diagonal first, then pairs, then triples;
/// free unknowns are fixed to 0.
pub fn solve_factor_set_capped(code: &LinearCode, max_dim: usize) -> Result<FactorSet> {
    let k = code.dimension();
    if k > max_dim {
        return Err(Error::CapExceeded {
            what: "factor-set solver dimension",
            value: k,
            cap: max_dim,
        });
    }
    let forms = WeightTables::new(code)?;
    let n = 1usize << k;
    let var = |c: usize, d: usize| c * n + d;
    let mut system = LinearSystem::new(n * n);
    let inconsistent = || Error::Internal("factor-set system is inconsistent".to_string());

    for c in 0..n {
        if !system.add_equation(&[var(c, c)], forms.quarter(c)) {
            return Err(inconsistent());
        }
    }
    for c in 0..n {
        for d in 0..n {
            if !system.add_equation(&[var(c, d), var(d, c)], forms.half_pair(c, d)) {
                return Err(inconsistent());
            }
        }
    }
    for c in 0..n {
        for d in 0..n {
            for e in 0..n {
                let vars = [var(c, d), var(c, d ^ e), var(d, e), var(c ^ d, e)];
                if !system.add_equation(&vars, forms.triple(c, d, e)) {
                    return Err(inconsistent());
                }
            }
        }
    }

    let fs = FactorSet::new(k, system.solve())?;
    fs.check(code)
        .map_err(|e| Error::Internal(format!("solver output rejected: {e}")))?;
    Ok(fs)
}

/// A finite magma given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<u32>,
}

impl CayleyTable {
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::LengthMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e as usize >= n) {
            return Err(Error::InvalidLoop(format!("entry {bad} out of range")));
        }
        Ok(Self { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let entries = (0..n * n).map(|i| f(i / n, i % n) as u32).collect();
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.n + y] as usize
    }

    /// Swaps two entries; used to build corrupted tables.
    pub fn swap_entries(&mut self, a: (usize, usize), b: (usize, usize)) {
        self.entries.swap(a.0 * self.n + a.1, b.0 * self.n + b.1);
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        for x in 0..n {
            seen.fill(false);
            for y in 0..n {
                seen[self.mul(x, y)] = true;
            }
            if seen.iter().any(|s| !s) {
                return false;
            }
            seen.fill(false);
            for y in 0..n {
                seen[self.mul(y, x)] = true;
            }
            if seen.iter().any(|s| !s) {
                return false;
            }
        }
        true
    }

    pub fn is_identity(&self, e: usize) -> bool {
        (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
    }

    /// The unique `t` with `a t = b`, if the row of `a` hits `b` exactly once.
    pub fn left_div(&self, a: usize, b: usize) -> Option<usize> {
        let mut hits = (0..self.n).filter(|&t| self.mul(a, t) == b);
        let t = hits.next()?;
        hits.next().is_none().then_some(t)
    }

    /// The unique `t` with `t a = b`.
    pub fn right_div(&self, b: usize, a: usize) -> Option<usize> {
        let mut hits = (0..self.n).filter(|&t| self.mul(t, a) == b);
        let t = hits.next()?;
        hits.next().is_none().then_some(t)
    }

    /// Commutes and associates with every pair of elements.
    pub fn is_central(&self, z: usize) -> bool {
        let n = self.n;
        (0..n).all(|x| self.mul(z, x) == self.mul(x, z))
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    let m = |a, b| self.mul(a, b);
                    m(m(z, x), y) == m(z, m(x, y))
                        && m(m(x, z), y) == m(x, m(z, y))
                        && m(m(x, y), z) == m(x, m(y, z))
                })
            })
    }

    /// Rows of space-separated element indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for x in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|y| self.mul(x, y).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable(order={})", self.n)
    }
}

/// The four classical Moufang identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoufangIdentity {
    /// `(xy)(zx) = (x(yz))x`
    Middle,
    /// `z(x(zy)) = ((zx)z)y`
    Left,
    /// `x(z(yz)) = ((xz)y)z`
    Right,
    /// `(zx)(yz) = (z(xy))z`
    Flexible,
}

impl MoufangIdentity {
    pub const ALL: [MoufangIdentity; 4] = [
        MoufangIdentity::Middle,
        MoufangIdentity::Left,
        MoufangIdentity::Right,
        MoufangIdentity::Flexible,
    ];

    fn holds(self, t: &CayleyTable, x: usize, y: usize, z: usize) -> bool {
        let m = |a, b| t.mul(a, b);
        match self {
            MoufangIdentity::Middle => m(m(x, y), m(z, x)) == m(m(x, m(y, z)), x),
            MoufangIdentity::Left => m(z, m(x, m(z, y))) == m(m(m(z, x), z), y),
            MoufangIdentity::Right => m(x, m(z, m(y, z))) == m(m(m(x, z), y), z),
            MoufangIdentity::Flexible => m(m(z, x), m(y, z)) == m(m(z, m(x, y)), z),
        }
    }
}

impl fmt::Display for MoufangIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoufangIdentity::Middle => "(xy)(zx) = (x(yz))x",
            MoufangIdentity::Left => "z(x(zy)) = ((zx)z)y",
            MoufangIdentity::Right => "x(z(yz)) = ((xz)y)z",
            MoufangIdentity::Flexible => "(zx)(yz) = (z(xy))z",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoufangReport {
    pub triples_checked: usize,
    pub counterexample: Option<(MoufangIdentity, [usize; 3])>,
}

impl MoufangReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Exhaustive check of `(xy)(zx) = (x(yz))x`, or all four identities when
/// `strict` is set. Stops at the first counterexample.
pub fn check_moufang(table: &CayleyTable, strict: bool) -> MoufangReport {
    let identities: &[MoufangIdentity] = if strict {
        &MoufangIdentity::ALL
    } else {
        &MoufangIdentity::ALL[..1]
    };
    let n = table.order();
    let mut checked = 0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                checked += 1;
                for &id in identities {
                    if !id.holds(table, x, y, z) {
                        return MoufangReport {
                            triples_checked: checked,
                            counterexample: Some((id, [x, y, z])),
                        };
                    }
                }
            }
        }
    }
    MoufangReport {
        triples_checked: checked,
        counterexample: None,
    }
}

/// An element `(sign, codeword index)` of a code loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LoopElement {
    pub sign: bool,
    pub word: usize,
}

#[derive(Debug, Clone)]
pub struct CodeLoop {
    code: LinearCode,
    factor_set: FactorSet,
    table: CayleyTable,
}

impl CodeLoop {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn factor_set(&self) -> &FactorSet {
        &self.factor_set
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.code.dimension()
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn index(&self, e: LoopElement) -> usize {
        (usize::from(e.sign) << self.dim()) | e.word
    }

    pub fn element(&self, index: usize) -> LoopElement {
        LoopElement {
            sign: index >> self.dim() & 1 == 1,
            word: index & (self.code.size() - 1),
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// The nonidentity element of the central subgroup `Z`.
    pub fn minus_one(&self) -> usize {
        self.code.size()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.mul(x, y)
    }
}

/// Builds the code loop and checks identity, Latin square, centrality of
/// `Z = {(0,0), (1,0)}` and the quotient map onto the code.
pub fn build_loop(code: &LinearCode, fs: &FactorSet) -> Result<CodeLoop> {
    fs.check(code)?;
    let k = code.dimension();
    let n = 1usize << k;
    let table = CayleyTable::from_fn(2 * n, |x, y| {
        let (a, c) = (x >> k, x & (n - 1));
        let (b, d) = (y >> k, y & (n - 1));
        let sign = a ^ b ^ usize::from(fs.get(c, d));
        sign << k | (c ^ d)
    });
    let lp = CodeLoop {
        code: code.clone(),
        factor_set: fs.clone(),
        table,
    };
    if !lp.table.is_identity(0) {
        return Err(Error::InvalidLoop("(0,0) is not a two-sided identity".into()));
    }
    if !lp.table.is_latin_square() {
        return Err(Error::InvalidLoop("table is not a Latin square".into()));
    }
    if !lp.table.is_central(lp.minus_one()) {
        return Err(Error::InvalidLoop("(1,0) is not central".into()));
    }
    for x in 0..2 * n {
        for y in 0..2 * n {
            if lp.element(lp.mul(x, y)).word != lp.element(x).word ^ lp.element(y).word {
                return Err(Error::InvalidLoop("quotient map is not a homomorphism".into()));
            }
        }
    }
    Ok(lp)
}

/// Commutator and associator.
///
/// `[x,y]` is the `t` with `xy = (yx)t`; `[x,y,z]` is the `t` with
/// `(xy)z = (x(yz))t`.
pub fn brackets(table: &CayleyTable, x: usize, y: usize, z: usize) -> Result<(usize, usize)> {
    let m = |a, b| table.mul(a, b);
    let comm = table
        .left_div(m(y, x), m(x, y))
        .ok_or_else(|| Error::InvalidLoop("commutator not unique".into()))?;
    let assoc = table
        .left_div(m(x, m(y, z)), m(m(x, y), z))
        .ok_or_else(|| Error::InvalidLoop("associator not unique".into()))?;
    Ok((comm, assoc))
}

/// Squaring, commutator and associator data on `F_2^m`, each valued in
/// `F_2`. Points are little-endian indices.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicSpaceData {
    m: usize,
    sigma: Vec<bool>,
    chi: Vec<bool>,
    alpha: Vec<bool>,
}

impl CubicSpaceData {
    pub fn zero(m: usize) -> Self {
        let n = 1usize << m;
        Self {
            m,
            sigma: vec![false; n],
            chi: vec![false; n * n],
            alpha: vec![false; n * n * n],
        }
    }

    pub fn from_fns(
        m: usize,
        sigma: impl Fn(usize) -> bool,
        chi: impl Fn(usize, usize) -> bool,
        alpha: impl Fn(usize, usize, usize) -> bool,
    ) -> Self {
        let n = 1usize << m;
        Self {
            m,
            sigma: (0..n).map(sigma).collect(),
            chi: (0..n * n).map(|i| chi(i / n, i % n)).collect(),
            alpha: (0..n * n * n)
                .map(|i| alpha(i / (n * n), i / n % n, i % n))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        1 << self.m
    }

    pub fn sigma(&self, c: usize) -> bool {
        self.sigma[c]
    }

    pub fn chi(&self, c: usize, d: usize) -> bool {
        self.chi[c * self.size() + d]
    }

    pub fn alpha(&self, c: usize, d: usize, e: usize) -> bool {
        let n = self.size();
        self.alpha[(c * n + d) * n + e]
    }

    pub fn set_sigma(&mut self, c: usize, v: bool) {
        self.sigma[c] = v;
    }

    pub fn set_chi(&mut self, c: usize, d: usize, v: bool) {
        let n = self.size();
        self.chi[c * n + d] = v;
    }

    pub fn set_alpha(&mut self, c: usize, d: usize, e: usize, v: bool) {
        let n = self.size();
        self.alpha[(c * n + d) * n + e] = v;
    }

    /// `σ` as a Boolean map on `F_2^m`.
    pub fn sigma_map(&self) -> Result<BooleanMap> {
        BooleanMap::new(self.m, self.sigma.clone())
    }
}

impl fmt::Debug for CubicSpaceData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicSpaceData(m={})", self.m)
    }
}

/// Reads `σ(c) = γ²`, `χ(c,d) = [γ,δ]`, `α(c,d,e) = [γ,δ,ε]` off the loop,
/// checking that every choice of preimages gives the same central value.
pub fn extract_cubic_data(lp: &CodeLoop) -> Result<CubicSpaceData> {
    let k = lp.dim();
    let n = 1usize << k;
    let t = lp.table();
    let z_bit = |v: usize, what: &'static str, witness: Vec<usize>| -> Result<bool> {
        match v {
            0 => Ok(false),
            v if v == n => Ok(true),
            _ => Err(Error::IllDefined { what, witness }),
        }
    };
    let lifts = |c: usize| [c, c | n];
    let mut data = CubicSpaceData::zero(k);

    for c in 0..n {
        let values = lifts(c)
            .map(|g| z_bit(t.mul(g, g), "σ", vec![c]))
            .into_iter()
            .collect::<Result<Vec<bool>>>()?;
        if values.iter().any(|&v| v != values[0]) {
            return Err(Error::IllDefined {
                what: "σ",
                witness: vec![c],
            });
        }
        data.set_sigma(c, values[0]);
    }
    for c in 0..n {
        for d in 0..n {
            let mut seen = None;
            for g in lifts(c) {
                for h in lifts(d) {
                    let (comm, _) = brackets(t, g, h, 0)?;
                    let v = z_bit(comm, "χ", vec![c, d])?;
                    if *seen.get_or_insert(v) != v {
                        return Err(Error::IllDefined {
                            what: "χ",
                            witness: vec![c, d],
                        });
                    }
                }
            }
            data.set_chi(c, d, seen.expect("two lifts"));
        }
    }
    for c in 0..n {
        for d in 0..n {
            for e in 0..n {
                let mut seen = None;
                for g in lifts(c) {
                    for h in lifts(d) {
                        for i in lifts(e) {
                            let (_, assoc) = brackets(t, g, h, i)?;
                            let v = z_bit(assoc, "α", vec![c, d, e])?;
                            if *seen.get_or_insert(v) != v {
                                return Err(Error::IllDefined {
                                    what: "α",
                                    witness: vec![c, d, e],
                                });
                            }
                        }
                    }
                }
                data.set_alpha(c, d, e, seen.expect("two lifts"));
            }
        }
    }
    Ok(data)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub args: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CubicAxiomReport {
    pub checks: usize,
    pub violation_count: usize,
    /// The first violations found, at most [`CubicAxiomReport::KEPT`].
    pub violations: Vec<AxiomViolation>,
}

impl CubicAxiomReport {
    pub const KEPT: usize = 32;

    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }

    pub fn violated(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn record(&mut self, ok: bool, axiom: &'static str, args: &[usize]) {
        self.checks += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < Self::KEPT {
                self.violations.push(AxiomViolation {
                    axiom,
                    args: args.to_vec(),
                });
            }
        }
    }
}

/// Checks every symplectic cubic space axiom over all tuples. Integer
/// scalars act by parity and range over `0..4`; signs are trivial in `F_2`.
pub fn check_cubic_axioms(data: &CubicSpaceData) -> CubicAxiomReport {
    let n = data.size();
    let mut rep = CubicAxiomReport::default();
    let scale = |s: usize, c: usize| if s % 2 == 1 { c } else { 0 };
    let times = |s: usize, v: bool| s % 2 == 1 && v;

    for c in 0..n {
        for s in 0..4 {
            rep.record(
                data.sigma(scale(s, c)) == times(s, data.sigma(c)),
                "σ(nc)=nσ(c)",
                &[s, c],
            );
        }
        rep.record(!data.chi(c, c), "χ(c,c)=0", &[c]);
    }
    for c in 0..n {
        for d in 0..n {
            rep.record(
                data.sigma(c ^ d) == data.sigma(c) ^ data.sigma(d) ^ data.chi(c, d),
                "σ(c+d)=σ(c)+σ(d)+χ(c,d)",
                &[c, d],
            );
            rep.record(data.chi(c, d) == data.chi(d, c), "χ(c,d)=-χ(d,c)", &[c, d]);
            for s in 0..4 {
                rep.record(
                    data.chi(scale(s, c), d) == times(s, data.chi(c, d)),
                    "χ(nc,d)=nχ(c,d)",
                    &[s, c, d],
                );
            }
            rep.record(!data.alpha(c, d, d), "α(c,d,d)=0", &[c, d]);
            rep.record(!data.alpha(d, c, c), "α(d,c,c)=0", &[c, d]);
            rep.record(!data.alpha(d, d, c), "α(d,d,c)=0", &[c, d]);
        }
    }
    for c in 0..n {
        for d in 0..n {
            for e in 0..n {
                rep.record(
                    data.chi(c ^ d, e) == data.chi(c, e) ^ data.chi(d, e) ^ data.alpha(c, d, e),
                    "χ(c+d,e)=χ(c,e)+χ(d,e)+α(c,d,e)",
                    &[c, d, e],
                );
                rep.record(
                    data.alpha(c, d, e) == data.alpha(d, c, e),
                    "α(c,d,e)=-α(d,c,e)",
                    &[c, d, e],
                );
                rep.record(
                    data.alpha(c, d, e) == data.alpha(d, e, c),
                    "α(c,d,e)=α(d,e,c)",
                    &[c, d, e],
                );
                for s in 0..4 {
                    rep.record(
                        data.alpha(scale(s, c), d, e) == times(s, data.alpha(c, d, e)),
                        "α(nc,d,e)=nα(c,d,e)",
                        &[s, c, d, e],
                    );
                }
                for f in 0..n {
                    rep.record(
                        data.alpha(c ^ d, e, f) == data.alpha(c, e, f) ^ data.alpha(d, e, f),
                        "α(c+d,e,f)=α(c,e,f)+α(d,e,f)",
                        &[c, d, e, f],
                    );
                }
            }
        }
    }
    rep
}

/// `σ'(c) = |c|/4`, `χ'(c,d) = |c*d|/2`, `α'(c,d,e) = |c*d*e|`, all mod 2.
///
/// Also confirms that `χ'` and `α'` are the second and third derived forms
/// of `σ'`.
pub fn weight_forms(code: &LinearCode) -> Result<CubicSpaceData> {
    let w = WeightTables::new(code)?;
    let data = CubicSpaceData::from_fns(
        code.dimension(),
        |c| w.quarter(c),
        |c, d| w.half_pair(c, d),
        |c, d, e| w.triple(c, d, e),
    );
    if code.dimension() > 0 {
        let sigma = data.sigma_map()?;
        let n = code.size();
        for c in 0..n {
            for d in 0..n {
                if sigma.derived_form(&[c, d])? != data.chi(c, d) {
                    return Err(Error::Internal(format!("χ' differs from σ'_2 at ({c},{d})")));
                }
                for e in 0..n {
                    if sigma.derived_form(&[c, d, e])? != data.alpha(c, d, e) {
                        return Err(Error::Internal(format!(
                            "α' differs from σ'_3 at ({c},{d},{e})"
                        )));
                    }
                }
            }
        }
    }
    Ok(data)
}

/// The map `c -> |c|/2^r mod 2` for a code of level `r`.
pub fn inverse_map(code: &LinearCode) -> Result<BooleanMap> {
    let r = match code.level() {
        CodeLevel::Finite(r) => r,
        CodeLevel::Infinite => return Err(Error::InfiniteLevel),
    };
    let weights = code.weights();
    BooleanMap::from_fn(code.dimension(), |b| (weights[b] >> r) & 1 == 1)
}
