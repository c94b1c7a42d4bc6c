//! The subring of symmetric functions generated by the `q_k`: pair functions
//! `Q_(a,b)`, Pfaffian `Q_lambda`, expansion in the `Q_lambda` basis, and the
//! `sqrt(2)`-normalized class dictionaries.
//!
//! Polynomials live in exactly `n_vars` variables; symmetric functions of
//! degree `d` are faithful for `n_vars >= d`.

use crate::scalars::{QSqrt2, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A strict partition (strictly decreasing positive parts).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: &[u32]) -> Option<Self> {
        for w in parts.windows(2) {
            if w[0] <= w[1] {
                return None;
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return None;
        }
        Some(StrictPartition {
            parts: parts.to_vec(),
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parity of `|lambda| - l(lambda)`.
    pub fn eps(&self) -> u8 {
        ((self.size() as usize + self.len()) % 2) as u8
    }

    /// Whether the associated simple object carries an odd involution:
    /// true iff `|lambda| - l(lambda)` is odd.
    pub fn queer_flag(&self) -> bool {
        self.eps() == 1
    }

    pub fn label(&self) -> String {
        format!(
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All strict partitions of `d`, in lexicographically decreasing order.
pub fn strict_partitions(d: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if rem == 0 {
            out.push(StrictPartition { parts: cur.clone() });
            return;
        }
        let hi = rem.min(max);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(rem - p, p.saturating_sub(1), cur, out);
            cur.pop();
        }
    }
    rec(d, d, &mut cur, &mut out);
    out
}

/// A polynomial in `n_vars` variables with `Q(sqrt(2))` coefficients,
/// stored as a map from exponent vectors. Exponent vectors are packed into
/// a `u64` key (5 bits per variable), which keeps products cheap: the key
/// of a product monomial is the sum of the factor keys.
#[derive(Clone, PartialEq, Debug)]
pub struct SymFun {
    pub n_vars: usize,
    terms: BTreeMap<u64, QSqrt2>,
}

pub const MAX_VARS: usize = 12;
const BITS: u32 = 5;
const FIELD: u64 = (1 << BITS) - 1;

fn pack(expo: &[u16]) -> u64 {
    debug_assert!(expo.len() <= MAX_VARS);
    let mut key = 0u64;
    for (i, &e) in expo.iter().enumerate() {
        debug_assert!((e as u64) <= FIELD);
        key |= (e as u64) << (BITS * i as u32);
    }
    key
}

fn unpack(key: u64, n_vars: usize) -> Vec<u16> {
    (0..n_vars)
        .map(|i| ((key >> (BITS * i as u32)) & FIELD) as u16)
        .collect()
}

impl SymFun {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars <= MAX_VARS, "at most {} variables", MAX_VARS);
        SymFun {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: QSqrt2) -> Self {
        let mut f = Self::zero(n_vars);
        if !c.is_zero() {
            f.terms.insert(0, c);
        }
        f
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, QSqrt2::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<u16>, &QSqrt2)> + '_ {
        self.terms.iter().map(|(k, c)| (unpack(*k, self.n_vars), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, expo: Vec<u16>, c: &QSqrt2) {
        self.add_key(pack(&expo), c);
    }

    fn add_key(&mut self, key: u64, c: &QSqrt2) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(QSqrt2::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_key(*e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scaled(&(-QSqrt2::one())))
    }

    pub fn scaled(&self, c: &QSqrt2) -> Self {
        let mut out = Self::zero(self.n_vars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in self.terms.iter() {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = Self::zero(self.n_vars);
        // exponents stay below 32 at the degrees this artifact sweeps, so
        // packed keys add without carries
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_key(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Invariance under all adjacent variable transpositions.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n_vars.saturating_sub(1) {
            for (k, c) in self.terms.iter() {
                let mut e = unpack(*k, self.n_vars);
                e.swap(i, i + 1);
                match self.terms.get(&pack(&e)) {
                    Some(v) if v == c => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Total degree of each monomial; `None` for 0.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|k| unpack(*k, self.n_vars).iter().map(|&x| x as u32).sum())
            .max()
    }

    /// Canonical rendering, used for table hashes.
    pub fn canonical_string(&self) -> String {
        let mut s = String::new();
        for (k, c) in self.terms.iter() {
            s.push_str(&format!("{:?}:{};", unpack(*k, self.n_vars), c));
        }
        s
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            let e = unpack(*k, self.n_vars);
            for (i, &p) in e.iter().enumerate() {
                if p == 1 {
                    write!(f, "*x{}", i + 1)?;
                } else if p > 1 {
                    write!(f, "*x{}^{}", i + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

/// The generating-series coefficients `q_0, ..., q_max` of
/// `prod_i (1 + x_i t)/(1 - x_i t)`, exact in `n_vars` variables.
/// Cached per `(max, n_vars)`.
pub fn q_family(max: usize, n_vars: usize) -> Vec<SymFun> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(usize, usize), Vec<SymFun>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(max, n_vars)) {
        return v.clone();
    }
    let out = q_family_uncached(max, n_vars);
    cache
        .lock()
        .unwrap()
        .insert((max, n_vars), out.clone());
    out
}

fn q_family_uncached(max: usize, n_vars: usize) -> Vec<SymFun> {
    // per-variable factor: 1 + 2 x t + 2 x^2 t^2 + ...
    let mut series: Vec<SymFun> = (0..=max)
        .map(|k| {
            if k == 0 {
                SymFun::one(n_vars)
            } else {
                SymFun::zero(n_vars)
            }
        })
        .collect();
    for v in 0..n_vars {
        let mut next: Vec<SymFun> = vec![SymFun::zero(n_vars); max + 1];
        for d in 0..=max {
            // contribution j = 0
            next[d] = next[d].add(&series[d]);
            for j in 1..=d {
                let mut expo = vec![0u16; n_vars];
                expo[v] = j as u16;
                let mut mono = SymFun::zero(n_vars);
                mono.add_term(expo, &QSqrt2::from_int(2));
                next[d] = next[d].add(&series[d - j].mul(&mono));
            }
        }
        series = next;
    }
    series
}

pub fn q_poly(k: usize, n_vars: usize) -> SymFun {
    q_family(k, n_vars).pop().unwrap()
}

/// `Q_(a,b) = q_a q_b + 2 sum_(i=1..b) (-1)^i q_(a+i) q_(b-i)`.
pub fn q_pair(a: usize, b: usize, n_vars: usize) -> SymFun {
    let qs = q_family(a + b, n_vars);
    q_pair_from(&qs, a, b)
}

fn q_pair_from(qs: &[SymFun], a: usize, b: usize) -> SymFun {
    let n_vars = qs[0].n_vars;
    let mut out = qs[a].mul(&qs[b]);
    for i in 1..=b {
        let term = qs[a + i].mul(&qs[b - i]).scaled(&QSqrt2::from_int(2));
        if i % 2 == 1 {
            out = out.sub(&term);
        } else {
            out = out.add(&term);
        }
    }
    let _ = n_vars;
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QsymError {
    NotSkew,
    OddSize,
    NotInSpan,
}

impl fmt::Display for QsymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QsymError::NotSkew => write!(f, "matrix is not skew-symmetric"),
            QsymError::OddSize => write!(f, "Pfaffian needs even size"),
            QsymError::NotInSpan => write!(f, "polynomial is not in the Q-span"),
        }
    }
}

impl std::error::Error for QsymError {}

/// Pfaffian by first-row expansion with memoized minors.
pub fn pfaffian(m: &[Vec<SymFun>]) -> Result<SymFun, QsymError> {
    let n = m.len();
    if n % 2 != 0 {
        return Err(QsymError::OddSize);
    }
    if n == 0 {
        return Ok(SymFun::one(1));
    }
    let n_vars = m[0][0].n_vars;
    for i in 0..n {
        for j in 0..n {
            if m[i][j] != m[j][i].scaled(&(-QSqrt2::one())) {
                return Err(QsymError::NotSkew);
            }
        }
    }
    let mut memo: BTreeMap<u64, SymFun> = BTreeMap::new();
    Ok(pf_rec(m, ((1u64 << n) - 1) as u64, n_vars, &mut memo))
}

fn pf_rec(m: &[Vec<SymFun>], mask: u64, n_vars: usize, memo: &mut BTreeMap<u64, SymFun>) -> SymFun {
    if mask == 0 {
        return SymFun::one(n_vars);
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let idx: Vec<usize> = (0..64).filter(|&i| mask & (1 << i) != 0).collect();
    let first = idx[0];
    let mut acc = SymFun::zero(n_vars);
    for (k, &j) in idx.iter().enumerate().skip(1) {
        let sub = mask & !(1 << first) & !(1 << j);
        let minor = pf_rec(m, sub, n_vars, memo);
        let term = m[first][j].mul(&minor);
        if k % 2 == 1 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    memo.insert(mask, acc.clone());
    acc
}

/// `Q_lambda` as the Pfaffian of the pair matrix, zero-padding `lambda` to
/// even length; the diagonal is zero by skew construction.
pub fn q_lambda(lambda: &StrictPartition, n_vars: usize) -> SymFun {
    if lambda.is_empty() {
        return SymFun::one(n_vars);
    }
    let mut parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let r = parts.len();
    let qs = q_family(lambda.size() as usize, n_vars);
    let mut m = vec![vec![SymFun::zero(n_vars); r]; r];
    for i in 0..r {
        for j in (i + 1)..r {
            let v = q_pair_from(&qs, parts[i], parts[j]);
            m[j][i] = v.scaled(&(-QSqrt2::one()));
            m[i][j] = v;
        }
    }
    pfaffian(&m).expect("pair matrix is skew by construction")
}

/// Solve an exact linear system over `Q(sqrt(2))` given as columns;
/// `None` when inconsistent.
fn solve_qsqrt2(cols: &[Vec<QSqrt2>], rhs: &[QSqrt2]) -> Option<Vec<QSqrt2>> {
    let rows = rhs.len();
    let n = cols.len();
    let mut aug: Vec<Vec<QSqrt2>> = (0..rows)
        .map(|i| {
            let mut row: Vec<QSqrt2> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..=n {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        if col == n {
            return None; // pivot in the rhs column: inconsistent
        }
        aug.swap(row, p);
        let inv = aug[row][col].inv().expect("nonzero pivot");
        for k in 0..=n {
            aug[row][k] = &aug[row][k] * &inv;
        }
        for r in 0..rows {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for k in 0..=n {
                    let s = &aug[row][k] * &f;
                    aug[r][k] = &aug[r][k] - &s;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut out = vec![QSqrt2::zero(); n];
    for (prow, &pc) in pivots.iter().enumerate() {
        out[pc] = aug[prow][n].clone();
    }
    Some(out)
}

/// Expand a polynomial in the `Q_lambda` basis (degree by degree); errors if
/// the polynomial does not lie in the span.
pub fn expand_in_q_basis(
    f: &SymFun,
) -> Result<BTreeMap<StrictPartition, QSqrt2>, QsymError> {
    let mut out = BTreeMap::new();
    if f.is_zero() {
        return Ok(out);
    }
    // split by total degree
    let mut by_degree: BTreeMap<u32, SymFun> = BTreeMap::new();
    for (e, c) in f.terms() {
        let d: u32 = e.iter().map(|&x| x as u32).sum();
        by_degree
            .entry(d)
            .or_insert_with(|| SymFun::zero(f.n_vars))
            .add_term(e, c);
    }
    for (d, comp) in by_degree {
        let lambdas = strict_partitions(d);
        let basis: Vec<SymFun> = lambdas.iter().map(|l| q_lambda(l, f.n_vars)).collect();
        // coordinates over the union of monomial keys
        let mut mono_set: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
        for b in basis.iter().chain(std::iter::once(&comp)) {
            mono_set.extend(b.terms.keys().copied());
        }
        let monos: Vec<u64> = mono_set.into_iter().collect();
        let col = |g: &SymFun| -> Vec<QSqrt2> {
            monos
                .iter()
                .map(|e| g.terms.get(e).cloned().unwrap_or_else(QSqrt2::zero))
                .collect()
        };
        let cols: Vec<Vec<QSqrt2>> = basis.iter().map(col).collect();
        let rhs = col(&comp);
        let x = solve_qsqrt2(&cols, &rhs).ok_or(QsymError::NotInSpan)?;
        // confirm the solve: the system may be underdetermined only if the
        // Q_lambda were dependent, which would break the expansion
        let mut recon = SymFun::zero(f.n_vars);
        for (c, b) in x.iter().zip(basis.iter()) {
            recon = recon.add(&b.scaled(c));
        }
        if recon != comp {
            return Err(QsymError::NotInSpan);
        }
        for (l, c) in lambdas.into_iter().zip(x.into_iter()) {
            if !c.is_zero() {
                out.insert(l, c);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DictionaryFlavor {
    /// Classes against the simple objects of the everted side:
    /// `2^(-floor(l/2)) Q_lambda`.
    L,
    /// Classes against the simple objects of the plain side:
    /// `2^((eps - l)/2) Q_lambda`.
    N,
}

/// The `sqrt(2)`-normalized coefficient of `Q_lambda` in the class of the
/// simple object indexed by `lambda`.
pub fn class_dictionary(lambda: &StrictPartition, flavor: DictionaryFlavor) -> QSqrt2 {
    let l = lambda.len() as i64;
    match flavor {
        DictionaryFlavor::L => QSqrt2::two_pow_half(-2 * (l / 2)),
        DictionaryFlavor::N => QSqrt2::two_pow_half(lambda.eps() as i64 - l),
    }
}

/// Is the coefficient an integer (no sqrt(2) part, denominator 1)?
pub fn is_integer(c: &QSqrt2) -> bool {
    c.b.is_zero() && c.a.denom().is_one()
}

/// FNV-1a hash of the canonical rendering, for stable table fingerprints.
pub fn stable_hash(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Integer-coefficient polynomials on the same packed keys; the `q_k` and
/// their pair products have integer coefficients, and the large exhaustive
/// sweeps run here with overflow-checked arithmetic.
#[derive(Clone, PartialEq, Debug)]
pub struct IntPoly {
    pub n_vars: usize,
    terms: BTreeMap<u64, i64>,
}

impl IntPoly {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars <= MAX_VARS);
        IntPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut p = Self::zero(n_vars);
        p.terms.insert(0, 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_key(&mut self, key: u64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(key).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn mul_into(&self, rhs: &Self, sign: i64, acc: &mut Self) {
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                let c = c1
                    .checked_mul(*c2)
                    .and_then(|v| v.checked_mul(sign))
                    .expect("coefficient overflow");
                acc.add_key(e1 + e2, c);
            }
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.n_vars);
        self.mul_into(rhs, 1, &mut out);
        out
    }

    pub fn int_terms(&self) -> impl Iterator<Item = (&u64, &i64)> {
        self.terms.iter()
    }

    /// Exact widening into the rational representation.
    pub fn to_symfun(&self) -> SymFun {
        let mut out = SymFun::zero(self.n_vars);
        for (k, c) in self.terms.iter() {
            out.add_key(*k, &QSqrt2::from_int(*c));
        }
        out
    }
}

/// Integer form of the generating-series coefficients, cached.
pub fn int_q_family(max: usize, n_vars: usize) -> Vec<IntPoly> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(usize, usize), Vec<IntPoly>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(max, n_vars)) {
        return v.clone();
    }
    let mut series: Vec<IntPoly> = (0..=max)
        .map(|k| {
            if k == 0 {
                IntPoly::one(n_vars)
            } else {
                IntPoly::zero(n_vars)
            }
        })
        .collect();
    for v in 0..n_vars {
        let mut next: Vec<IntPoly> = vec![IntPoly::zero(n_vars); max + 1];
        for d in 0..=max {
            next[d] = next[d].clone();
            for (k, c) in series[d].terms.iter() {
                next[d].add_key(*k, *c);
            }
            for j in 1..=d {
                let key = (j as u64) << (5 * v as u32);
                for (k, c) in series[d - j].terms.iter() {
                    next[d].add_key(k + key, 2 * c);
                }
            }
        }
        series = next;
    }
    cache
        .lock()
        .unwrap()
        .insert((max, n_vars), series.clone());
    series
}

/// `sum_i (-1)^i q_i q_(n-i) = 0` for all `1 <= n <= n_max`; returns the
/// first failing `n`.
pub fn q_relation_sweep(n_max: usize, n_vars: usize) -> Option<usize> {
    let qs = int_q_family(n_max, n_vars);
    for n in 1..=n_max {
        let mut acc = IntPoly::zero(n_vars);
        for i in 0..=n {
            let sign = if i % 2 == 1 { -1 } else { 1 };
            qs[i].mul_into(&qs[n - i], sign, &mut acc);
        }
        if !acc.is_zero() {
            return Some(n);
        }
    }
    None
}

/// Integer form of the pair function.
pub fn int_q_pair(a: usize, b: usize, n_vars: usize) -> IntPoly {
    let qs = int_q_family(a + b, n_vars);
    let mut out = qs[a].mul(&qs[b]);
    for i in 1..=b {
        let sign = if i % 2 == 1 { -2 } else { 2 };
        qs[a + i].mul_into(&qs[b - i], sign, &mut out);
    }
    out
}

/// `Q_(b,a) = -Q_(a,b)` over `a + b <= cap`, `(a, b) != (0, 0)`; returns the
/// first failing pair. The excluded pair has `Q_(0,0) = q_0^2 = 1` by the
/// defining sum.
pub fn pair_antisymmetry_sweep(cap: usize, n_vars: usize) -> Option<(usize, usize)> {
    for a in 0..=cap {
        for b in 0..=(cap - a) {
            if a == 0 && b == 0 {
                continue;
            }
            let mut acc = int_q_pair(b, a, n_vars);
            for (k, c) in int_q_pair(a, b, n_vars).terms.iter() {
                acc.add_key(*k, *c);
            }
            if !acc.is_zero() {
                return Some((a, b));
            }
        }
    }
    None
}

impl SymFun {
    /// Exact narrowing when every coefficient is an integer fitting `i64`.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        let mut out = IntPoly::zero(self.n_vars);
        for (k, c) in self.terms.iter() {
            if !is_integer(c) {
                return None;
            }
            let v: i64 = c.a.numer().try_into().ok()?;
            out.add_key(*k, v);
        }
        Some(out)
    }
}

/// Exact determinant (used as the Pfaffian oracle on rational matrices).
pub fn rational_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        det *= &a[col][col];
        let inv = Rat::one() / &a[col][col];
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for k in col..n {
                let s = &a[col][k] * &f;
                a[r][k] = &a[r][k] - &s;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn q_values() {
        let qs = q_family(4, 3);
        assert_eq!(qs[0], SymFun::one(3));
        // q_1 = 2(x1 + x2 + x3)
        let mut expect = SymFun::zero(3);
        for v in 0..3 {
            let mut e = vec![0u16; 3];
            e[v] = 1;
            expect.add_term(e, &QSqrt2::from_int(2));
        }
        assert_eq!(qs[1], expect);
        for q in &qs {
            assert!(q.is_symmetric());
        }
    }

    #[test]
    fn q_relation() {
        // sum_(i=0..n) (-1)^i q_i q_(n-i) = 0 for n = 1..6 at 6 vars
        let n_vars = 6;
        let qs = q_family(6, n_vars);
        for n in 1..=6usize {
            let mut acc = SymFun::zero(n_vars);
            for i in 0..=n {
                let t = qs[i].mul(&qs[n - i]);
                if i % 2 == 1 {
                    acc = acc.sub(&t);
                } else {
                    acc = acc.add(&t);
                }
            }
            assert!(acc.is_zero(), "relation fails at n = {}", n);
        }
    }

    #[test]
    fn q_pair_values() {
        let n_vars = 4;
        let qs = q_family(4, n_vars);
        // Q_(a,0) = q_a
        for a in 0..=3usize {
            assert_eq!(q_pair(a, 0, n_vars), qs[a]);
        }
        // Q_(2,1) = q2 q1 - 2 q3
        let expect = qs[2]
            .mul(&qs[1])
            .sub(&qs[3].scaled(&QSqrt2::from_int(2)));
        assert_eq!(q_pair(2, 1, n_vars), expect);
        // antisymmetry
        assert_eq!(
            q_pair(1, 2, n_vars),
            q_pair(2, 1, n_vars).scaled(&(-QSqrt2::one()))
        );
        // Q_(1,1) = 0 via the q-relation
        assert!(q_pair(1, 1, n_vars).is_zero());
    }

    #[test]
    fn pfaffian_small() {
        let n_vars = 1;
        let a = SymFun::constant(n_vars, QSqrt2::from_int(5));
        let z = SymFun::zero(n_vars);
        let m = vec![
            vec![z.clone(), a.clone()],
            vec![a.scaled(&(-QSqrt2::one())), z.clone()],
        ];
        assert_eq!(pfaffian(&m).unwrap(), a);
        // block diagonal of two 2x2 blocks multiplies
        let b = SymFun::constant(n_vars, QSqrt2::from_int(7));
        let mut m4 = vec![vec![z.clone(); 4]; 4];
        m4[0][1] = a.clone();
        m4[1][0] = a.scaled(&(-QSqrt2::one()));
        m4[2][3] = b.clone();
        m4[3][2] = b.scaled(&(-QSqrt2::one()));
        assert_eq!(pfaffian(&m4).unwrap(), a.mul(&b));
        // odd size and non-skew rejected
        assert_eq!(pfaffian(&vec![vec![z.clone()]]).unwrap_err(), QsymError::OddSize);
        let bad = vec![vec![z.clone(), a.clone()], vec![a.clone(), z.clone()]];
        assert_eq!(pfaffian(&bad).unwrap_err(), QsymError::NotSkew);
    }

    #[test]
    fn pf_squared_is_det_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let n = 4;
            let mut vals = vec![vec![Rat::zero(); n]; n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
                    vals[i][j] = v.clone();
                    vals[j][i] = -v;
                }
            }
            let m: Vec<Vec<SymFun>> = vals
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| SymFun::constant(1, QSqrt2::from_rat(v.clone())))
                        .collect()
                })
                .collect();
            let pf = pfaffian(&m).unwrap();
            let pf_val = pf
                .terms()
                .next()
                .map(|(_, c)| c.a.clone())
                .unwrap_or_else(Rat::zero);
            assert_eq!(&pf_val * &pf_val, rational_det(&vals));
        }
    }

    #[test]
    fn q_lambda_values() {
        let n_vars = 4;
        let l1 = StrictPartition::new(&[1]).unwrap();
        assert_eq!(q_lambda(&l1, n_vars), q_poly(1, n_vars));
        let l21 = StrictPartition::new(&[2, 1]).unwrap();
        assert_eq!(q_lambda(&l21, n_vars), q_pair(2, 1, n_vars));
        // integrality of monomial coefficients for (3,2,1)
        let l321 = StrictPartition::new(&[3, 2, 1]).unwrap();
        let f = q_lambda(&l321, 6);
        assert!(!f.is_zero());
        for (_, c) in f.terms() {
            assert!(is_integer(c));
        }
        assert!(f.is_symmetric());
    }

    #[test]
    fn expansion_in_q_basis() {
        let n_vars = 4;
        let l3 = StrictPartition::new(&[3]).unwrap();
        let exp = expand_in_q_basis(&q_lambda(&l3, n_vars)).unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp[&l3], QSqrt2::one());

        // q1 q2 expands integrally over Q_(3), Q_(2,1)
        let f = q_poly(1, n_vars).mul(&q_poly(2, n_vars));
        let exp = expand_in_q_basis(&f).unwrap();
        for (_, c) in &exp {
            assert!(is_integer(c), "non-integer coefficient {:?}", c);
        }
        assert!(!exp.is_empty());

        // a non-member is rejected: a single non-symmetric monomial
        let mut bad = SymFun::zero(n_vars);
        bad.add_term(vec![1, 0, 0, 0], &QSqrt2::one());
        assert_eq!(expand_in_q_basis(&bad).unwrap_err(), QsymError::NotInSpan);
    }

    #[test]
    fn structure_constants_integral_small() {
        let n_vars = 6;
        for (l, m) in [([2u32, 1], [1u32, 0]), ([3, 0], [2, 1])] {
            let lp: Vec<u32> = l.iter().cloned().filter(|&x| x > 0).collect();
            let mp: Vec<u32> = m.iter().cloned().filter(|&x| x > 0).collect();
            let a = StrictPartition::new(&lp).unwrap();
            let b = StrictPartition::new(&mp).unwrap();
            let prod = q_lambda(&a, n_vars).mul(&q_lambda(&b, n_vars));
            let exp = expand_in_q_basis(&prod).unwrap();
            for (_, c) in &exp {
                assert!(is_integer(c));
            }
        }
    }

    #[test]
    fn dictionary_scalars() {
        let l1 = StrictPartition::new(&[1]).unwrap();
        assert_eq!(class_dictionary(&l1, DictionaryFlavor::L), QSqrt2::one());
        assert_eq!(
            class_dictionary(&l1, DictionaryFlavor::N),
            QSqrt2::two_pow_half(-1)
        );
        let l21 = StrictPartition::new(&[2, 1]).unwrap();
        assert_eq!(
            class_dictionary(&l21, DictionaryFlavor::L),
            QSqrt2::from_rat(ratio(1, 2))
        );
        assert_eq!(
            class_dictionary(&l21, DictionaryFlavor::N),
            QSqrt2::two_pow_half(-1)
        );
    }

    #[test]
    fn dictionary_parity_law() {
        // ratio L/N is 1 when |l| even, 1/sqrt2 (l even) or sqrt2 (l odd)
        // when |l| is odd
        for d in 1..=7u32 {
            for l in strict_partitions(d) {
                let lv = class_dictionary(&l, DictionaryFlavor::L);
                let nv = class_dictionary(&l, DictionaryFlavor::N);
                let ratio = &lv * &nv.inv().unwrap();
                let expect = if d % 2 == 0 {
                    QSqrt2::one()
                } else if l.len() % 2 == 0 {
                    QSqrt2::two_pow_half(-1)
                } else {
                    QSqrt2::two_pow_half(1)
                };
                assert_eq!(ratio, expect, "lambda = {}", l.label());
            }
        }
    }

    #[test]
    fn int_route_matches_rational_route() {
        // the integer fast path computes the same polynomials
        for n_vars in [3usize, 5] {
            let fam_i = int_q_family(5, n_vars);
            let fam_r = q_family(5, n_vars);
            for (a, b) in fam_i.iter().zip(fam_r.iter()) {
                assert_eq!(a.to_symfun(), *b);
            }
        }
        assert_eq!(
            int_q_pair(2, 1, 4).to_symfun(),
            q_pair(2, 1, 4)
        );
        assert_eq!(q_relation_sweep(6, 6), None);
        assert_eq!(pair_antisymmetry_sweep(5, 5), None);
    }

    #[test]
    fn strict_partition_enumeration() {
        assert_eq!(strict_partitions(0).len(), 1);
        // 6 = 6, 5+1, 4+2, 3+2+1
        assert_eq!(strict_partitions(6).len(), 4);
        assert!(StrictPartition::new(&[2, 2]).is_none());
        assert!(StrictPartition::new(&[1, 0]).is_none());
    }
}
