//! The Clifford algebras `Cl_n` with `a_i^2 = 2` and `a_i a_j = -a_j a_i`,
//! the spin-group embedding, explicit rank-2 and rank-8 matrix isomorphisms,
//! and the Morita data `(U_p, eps_p)`.

use crate::linalg::{sparse_rank, Mat};
use crate::scalars::{rat, ratio, zeta4, CycNumber, Rat};
use crate::supervec::{tensor_map, SuperMap, SuperSpace};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliffordError {
    RankMismatch { left: usize, right: usize },
    IndexOutOfRange { index: usize, rank: usize },
}

impl fmt::Display for CliffordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {} vs {}", left, right)
            }
            CliffordError::IndexOutOfRange { index, rank } => {
                write!(f, "generator index {} out of range for Cl_{}", index, rank)
            }
        }
    }
}

impl std::error::Error for CliffordError {}

/// An element of `Cl_n`, stored as a map from subset bitmasks `S` of
/// `{1..n}` to coefficients; `S` denotes the increasing product `a_S`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElement {
    pub n: usize,
    terms: BTreeMap<u64, CycNumber>,
}

/// Sign exponent for moving `a_T` left through `a_S`, counting the pairs
/// `(s, t)` with `s > t`.
fn reorder_sign(s: u64, t: u64) -> u8 {
    let mut count = 0u32;
    let mut tt = t;
    while tt != 0 {
        let bit = tt & tt.wrapping_neg();
        let pos = bit.trailing_zeros();
        count += (s >> (pos + 1)).count_ones();
        tt ^= bit;
    }
    (count & 1) as u8
}

impl CliffordElement {
    pub fn zero(n: usize) -> Self {
        CliffordElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, CycNumber::one())
    }

    pub fn monomial(n: usize, mask: u64, coeff: CycNumber) -> Self {
        assert!(mask < (1u64 << n), "subset out of range");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mask, coeff);
        }
        CliffordElement { n, terms }
    }

    /// The generator `a_i`, 1-based.
    pub fn generator(n: usize, i: usize) -> Result<Self, CliffordError> {
        if i == 0 || i > n {
            return Err(CliffordError::IndexOutOfRange { index: i, rank: n });
        }
        Ok(Self::monomial(n, 1 << (i - 1), CycNumber::one()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u64, &CycNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mask: u64) -> CycNumber {
        self.terms.get(&mask).cloned().unwrap_or_else(CycNumber::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mask: u64, coeff: &CycNumber) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(CycNumber::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CliffordError> {
        if self.n != rhs.n {
            return Err(CliffordError::RankMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, CliffordError> {
        self.add(&rhs.scaled(&(-CycNumber::one())))
    }

    pub fn scaled(&self, c: &CycNumber) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (m, v) in self.terms.iter() {
            out.terms.insert(*m, v * c);
        }
        out
    }

    /// Parity `|S| mod 2` when all stored monomials agree on it.
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for m in self.terms.keys() {
            let q = (m.count_ones() & 1) as u8;
            match p {
                None => p = Some(q),
                Some(r) if r != q => return None,
                _ => {}
            }
        }
        p
    }

    /// Re-index into `Cl_m` by applying `f` to each 1-based generator index.
    /// `f` must be strictly increasing on each monomial's support.
    pub fn reindexed(&self, m: usize, f: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero(m);
        for (mask, c) in self.terms.iter() {
            let mut new_mask = 0u64;
            let mut prev = 0usize;
            let mut mm = *mask;
            while mm != 0 {
                let bit = mm & mm.wrapping_neg();
                let i = bit.trailing_zeros() as usize + 1;
                let fi = f(i);
                assert!(fi > prev, "reindexing must preserve order");
                prev = fi;
                new_mask |= 1 << (fi - 1);
                mm ^= bit;
            }
            out.add_term(new_mask, c);
        }
        out
    }
}

/// Exact product in `Cl_n`.
pub fn cl_mul(x: &CliffordElement, y: &CliffordElement) -> Result<CliffordElement, CliffordError> {
    if x.n != y.n {
        return Err(CliffordError::RankMismatch {
            left: x.n,
            right: y.n,
        });
    }
    let mut out = CliffordElement::zero(x.n);
    for (s, cs) in x.terms.iter() {
        for (t, ct) in y.terms.iter() {
            let sign = reorder_sign(*s, *t);
            let overlap = (s & t).count_ones();
            let mut c = cs * ct;
            if sign == 1 {
                c = -c;
            }
            if overlap > 0 {
                c = c.scaled(&Rat::from_integer(num_bigint::BigInt::from(2).pow(overlap)));
            }
            out.add_term(s ^ t, &c);
        }
    }
    Ok(out)
}

/// Evaluate a word of 1-based generator indices by repeated `cl_mul`.
pub fn cl_from_word(n: usize, word: &[usize]) -> Result<CliffordElement, CliffordError> {
    let mut acc = CliffordElement::one(n);
    for &i in word {
        let g = CliffordElement::generator(n, i)?;
        acc = cl_mul(&acc, &g)?;
    }
    Ok(acc)
}

/// The spin-group generator image `(a_(i+1) - a_i)/2` in `Cl_n`.
pub fn spin_image(n: usize, i: usize) -> Result<CliffordElement, CliffordError> {
    if i == 0 || i + 1 > n {
        return Err(CliffordError::IndexOutOfRange { index: i, rank: n });
    }
    let hi = CliffordElement::monomial(n, 1 << i, CycNumber::from_rat(ratio(1, 2)));
    let lo = CliffordElement::monomial(n, 1 << (i - 1), CycNumber::from_rat(ratio(1, 2)));
    hi.sub(&lo)
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mask, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if *mask != 0 {
                let idxs: Vec<String> = (0..self.n)
                    .filter(|k| mask & (1 << k) != 0)
                    .map(|k| (k + 1).to_string())
                    .collect();
                write!(f, "*a{{{}}}", idxs.join(","))?;
            }
        }
        Ok(())
    }
}

/// The fixed images of `a_1, a_2` on `k^(1|1)` realizing `Cl_2 = End(k^(1|1))`:
/// `a_1: e0 -> e1, e1 -> 2 e0` and `a_2 = zeta_4 (e0 -> e1, e1 -> -2 e0)`.
pub fn cl2_matrix_iso() -> (SuperMap, SuperMap) {
    let sp = SuperSpace::standard(1, 1);
    let mut m1 = Mat::zero(2, 2);
    m1.m[1][0] = CycNumber::one();
    m1.m[0][1] = CycNumber::from_int(2);
    let x1 = SuperMap::new(sp.clone(), sp.clone(), 1, m1).unwrap();
    let mut m2 = Mat::zero(2, 2);
    m2.m[1][0] = zeta4();
    m2.m[0][1] = zeta4().scaled(&rat(-2));
    let x2 = SuperMap::new(sp.clone(), sp, 1, m2).unwrap();
    (x1, x2)
}

/// Images of all `2^n` monomials `a_S` under given generator images.
pub fn monomial_images(gens: &[SuperMap]) -> Vec<SuperMap> {
    let n = gens.len();
    assert!(n >= 1);
    let id = SuperMap::identity(&gens[0].source);
    let mut out = Vec::with_capacity(1 << n);
    out.push(id);
    for mask in 1..(1u64 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        // a_S = a_low . a_rest with low the smallest index
        let img = gens[low].compose(&out[rest as usize]);
        out.push(img);
    }
    out
}

/// Generator images on `(k^(1|1))^(x4)` realizing `Cl_8` as a matrix
/// superalgebra, built as the fourfold graded tensor power of the rank-2
/// isomorphism.
pub fn cl8_matrix_iso() -> Vec<SuperMap> {
    let (x1, x2) = cl2_matrix_iso();
    let line = x1.source.clone();
    let id = SuperMap::identity(&line);
    let mut gens = Vec::new();
    for slot in 0..4 {
        for x in [&x1, &x2] {
            let mut factors: Vec<&SuperMap> = vec![&id; 4];
            factors[slot] = x;
            let mut acc = factors[0].clone();
            for f in &factors[1..] {
                acc = tensor_map(&acc, f);
            }
            gens.push(acc);
        }
    }
    gens
}

/// Flatten an endomorphism matrix into a sparse coordinate row.
fn flatten(map: &SuperMap) -> Vec<(usize, CycNumber)> {
    let cols = map.mat.cols;
    let mut row = Vec::new();
    for i in 0..map.mat.rows {
        for j in 0..cols {
            if !map.mat.m[i][j].is_zero() {
                row.push((i * cols + j, map.mat.m[i][j].clone()));
            }
        }
    }
    row
}

/// Check the Clifford relations for a family of candidate generator images.
pub fn satisfies_clifford_relations(gens: &[SuperMap]) -> bool {
    let space = &gens[0].source;
    let two_id = SuperMap::identity(space).scaled(&CycNumber::from_int(2));
    for (i, a) in gens.iter().enumerate() {
        if a.parity != 1 || a.compose(a) != two_id {
            return false;
        }
        for b in gens.iter().skip(i + 1) {
            let anti = a.compose(b).add(&b.compose(a));
            if !anti.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Rank of the span of all monomial images.
pub fn monomial_image_rank(gens: &[SuperMap]) -> usize {
    let rows: Vec<Vec<(usize, CycNumber)>> =
        monomial_images(gens).iter().map(flatten).collect();
    sparse_rank(&rows)
}

/// Quaternions over the scalar field, concentrated in even degree.
#[derive(Clone, PartialEq, Debug)]
pub struct QuaternionElement {
    /// coefficients of (1, i, j, ij)
    pub c: [CycNumber; 4],
}

/// Quaternion basis product table: i^2 = j^2 = -1, ij = -ji = k, k^2 = -1,
/// ik = -j, ki = j, jk = i, kj = -i.
const QUAT_TBL: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

impl QuaternionElement {
    pub fn zero() -> Self {
        QuaternionElement {
            c: Default::default(),
        }
    }

    pub fn basis(k: usize) -> Self {
        let mut q = Self::zero();
        q.c[k] = CycNumber::one();
        q
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for a in 0..4 {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..4 {
                if rhs.c[b].is_zero() {
                    continue;
                }
                let (sgn, k) = QUAT_TBL[a][b];
                let mut v = &self.c[a] * &rhs.c[b];
                if sgn < 0 {
                    v = -v;
                }
                out.c[k] += &v;
            }
        }
        out
    }
}

/// Elements of `H (x) End(k^(1|1))`; basis `(1,i,j,ij) (x) (E00,E01,E10,E11)`.
/// `H` is purely even, so the multiplication carries no Koszul signs.
#[derive(Clone, PartialEq, Debug)]
struct HEnd {
    c: [[CycNumber; 4]; 4],
}

impl HEnd {
    fn zero() -> Self {
        HEnd {
            c: Default::default(),
        }
    }

    /// `h (x) e` for a quaternion and a 2x2 matrix (`E_ab` index `a*2 + b`,
    /// `a` = target row, `b` = source column).
    fn from_parts(h: &QuaternionElement, e: &Mat) -> Self {
        let mut out = Self::zero();
        for hh in 0..4 {
            if h.c[hh].is_zero() {
                continue;
            }
            for a in 0..2 {
                for b in 0..2 {
                    if e.m[a][b].is_zero() {
                        continue;
                    }
                    out.c[hh][a * 2 + b] = &h.c[hh] * &e.m[a][b];
                }
            }
        }
        out
    }

    fn add_assign(&mut self, rhs: &Self) {
        for h in 0..4 {
            for e in 0..4 {
                self.c[h][e] += &rhs.c[h][e];
            }
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for a in 0..4 {
            for x in 0..4 {
                if self.c[a][x].is_zero() {
                    continue;
                }
                let (xr, xc) = (x / 2, x % 2);
                for b in 0..4 {
                    for y in 0..4 {
                        if rhs.c[b][y].is_zero() {
                            continue;
                        }
                        let (yr, yc) = (y / 2, y % 2);
                        if xc != yr {
                            continue;
                        }
                        let (hs, hk) = QUAT_TBL[a][b];
                        let mut v = &self.c[a][x] * &rhs.c[b][y];
                        if hs < 0 {
                            v = -v;
                        }
                        out.c[hk][xr * 2 + yc] += &v;
                    }
                }
            }
        }
        out
    }

    fn flat(&self) -> Vec<CycNumber> {
        let mut v = Vec::with_capacity(16);
        for h in 0..4 {
            for e in 0..4 {
                v.push(self.c[h][e].clone());
            }
        }
        v
    }

    /// The op-twist: `i, j -> -i, -j` on `H` and
    /// `E01 -> E10, E10 -> -E01` on `End(k^(1|1))`, diagonal units fixed.
    fn op_twist(&self) -> Self {
        let mut out = Self::zero();
        for h in 0..4 {
            let hsign: i8 = if h == 0 { 1 } else { -1 };
            for e in 0..4 {
                if self.c[h][e].is_zero() {
                    continue;
                }
                let (te, esign): (usize, i8) = match e {
                    0 => (0, 1),
                    1 => (2, 1),
                    2 => (1, -1),
                    3 => (3, 1),
                    _ => unreachable!(),
                };
                // ij -> (-i)._op(-j) = ji = -ij, so the k basis flips too;
                // that flip is the h != 0 case of hsign.
                let mut v = self.c[h][e].clone();
                if hsign * esign < 0 {
                    v = -v;
                }
                out.c[h][te] += &v;
            }
        }
        out
    }
}

/// Result of verifying one of the explicit small-rank isomorphisms.
#[derive(Debug, Clone)]
pub struct IsoReport {
    pub which: &'static str,
    pub relations_ok: bool,
    pub bijective: bool,
    pub detail: String,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.relations_ok && self.bijective
    }
}

/// `Cl_1 (x) Cl_1^op = End(k^(1|1))` via
/// `a (x) 1 -> (e0 -> e1, e1 -> 2 e0)` and `1 (x) a -> (e0 -> e1, e1 -> -2 e0)`.
pub fn verify_cliff1() -> IsoReport {
    let sp = SuperSpace::standard(1, 1);
    let mut am = Mat::zero(2, 2);
    am.m[1][0] = CycNumber::one();
    am.m[0][1] = CycNumber::from_int(2);
    let a = SuperMap::new(sp.clone(), sp.clone(), 1, am).unwrap();
    let mut bm = Mat::zero(2, 2);
    bm.m[1][0] = CycNumber::one();
    bm.m[0][1] = CycNumber::from_int(-2);
    let b = SuperMap::new(sp.clone(), sp.clone(), 1, bm).unwrap();

    let id2 = SuperMap::identity(&sp);
    let rel1 = a.compose(&a) == id2.scaled(&CycNumber::from_int(2));
    // (1 (x) a)^2 = 1 (x) (a ._op a) = -2
    let rel2 = b.compose(&b) == id2.scaled(&CycNumber::from_int(-2));
    let rel3 = a.compose(&b).add(&b.compose(&a)).is_zero();
    let ab = a.compose(&b);
    let rows: Vec<Vec<(usize, CycNumber)>> =
        [&id2, &a, &b, &ab].iter().map(|m| flatten(m)).collect();
    let rank = sparse_rank(&rows);
    IsoReport {
        which: "cliff1",
        relations_ok: rel1 && rel2 && rel3,
        bijective: rank == 4,
        detail: format!("monomial image rank {}/4", rank),
    }
}

/// The images of the `H (x) Cl_1^op` basis in `Cl_3` under
/// `i (x) 1 -> a1 a2 / 2`, `j (x) 1 -> a1 a3 / 2`, `1 (x) a -> a1 a2 a3 / 2`.
/// Basis order `(1, i, j, ij) (x) (1, a)`, index `h*2 + x`.
fn cliff2_basis_images() -> Vec<CliffordElement> {
    let n = 3;
    let half = CycNumber::from_rat(ratio(1, 2));
    let ii = cl_from_word(n, &[1, 2]).unwrap().scaled(&half);
    let jj = cl_from_word(n, &[1, 3]).unwrap().scaled(&half);
    let aa = cl_from_word(n, &[1, 2, 3]).unwrap().scaled(&half);
    let kk = cl_mul(&ii, &jj).unwrap();
    let one = CliffordElement::one(n);
    let h_imgs = [one, ii, jj, kk];
    let mut out = Vec::with_capacity(8);
    for h in &h_imgs {
        out.push(h.clone());
        out.push(cl_mul(h, &aa).unwrap());
    }
    out
}

/// `Cl_3 = H (x) Cl_1^op` through the explicit generator images.
pub fn verify_cliff2() -> IsoReport {
    let imgs = cliff2_basis_images();
    let img = |h: usize, x: usize| imgs[h * 2 + x].clone();
    let neg_one = CliffordElement::one(3).scaled(&(-CycNumber::one()));
    let mut ok = true;
    // i^2 = j^2 = k^2 = -1
    for h in 1..4 {
        ok &= cl_mul(&img(h, 0), &img(h, 0)).unwrap() == neg_one;
    }
    // ij = k, ji = -k
    ok &= cl_mul(&img(1, 0), &img(2, 0)).unwrap() == img(3, 0);
    ok &= cl_mul(&img(2, 0), &img(1, 0)).unwrap() == img(3, 0).scaled(&(-CycNumber::one()));
    // (1 (x) a)^2 = -2 and centrality against the even H part
    ok &= cl_mul(&img(0, 1), &img(0, 1)).unwrap()
        == CliffordElement::one(3).scaled(&CycNumber::from_int(-2));
    for h in 1..4 {
        ok &= cl_mul(&img(h, 0), &img(0, 1)).unwrap()
            == cl_mul(&img(0, 1), &img(h, 0)).unwrap();
    }
    let rows: Vec<Vec<(usize, CycNumber)>> = imgs
        .iter()
        .map(|e| {
            e.terms()
                .map(|(m, c)| (*m as usize, c.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let rank = sparse_rank(&rows);
    IsoReport {
        which: "cliff2",
        relations_ok: ok,
        bijective: rank == 8,
        detail: format!("basis image rank {}/8", rank),
    }
}

/// The 16x16 matrix of the isomorphism `Cl_4 -> H (x) End(k^(1|1))`
/// (columns indexed by subset masks, rows by the `HEnd` basis).
fn cl4_to_hend() -> Mat {
    // Invert the cliff2 basis-image matrix to express Cl_3 monomials in
    // H (x) Cl_1^op coordinates.
    let imgs = cliff2_basis_images();
    let mut m = Mat::zero(8, 8);
    for (col, e) in imgs.iter().enumerate() {
        for (mask, c) in e.terms() {
            m.m[*mask as usize][col] = c.clone();
        }
    }
    let minv = m.inverse().expect("cliff2 images independent");

    // Images of the Cl_1^op (x) Cl_1 generators in End(k^(1|1)).
    let mut bmat = Mat::zero(2, 2); // a (x) 1, squares to -2
    bmat.m[1][0] = CycNumber::one();
    bmat.m[0][1] = CycNumber::from_int(-2);
    let mut amat = Mat::zero(2, 2); // 1 (x) a, squares to 2
    amat.m[1][0] = CycNumber::one();
    amat.m[0][1] = CycNumber::from_int(2);
    let eye = Mat::identity(2);

    // Generators of Cl_4 in HEnd: a_i (i <= 3) through
    // Cl_3 -> H (x) Cl_1^op, the op generator realized by bmat;
    // a_4 -> 1_H (x) amat.
    let mut gens: Vec<HEnd> = Vec::new();
    for i in 0..3 {
        let col = 1usize << i;
        let mut acc = HEnd::zero();
        for row in 0..8 {
            let v = &minv.m[row][col];
            if v.is_zero() {
                continue;
            }
            let (h, x) = (row / 2, row % 2);
            let mut q = QuaternionElement::zero();
            q.c[h] = v.clone();
            let part = HEnd::from_parts(&q, if x == 0 { &eye } else { &bmat });
            acc.add_assign(&part);
        }
        gens.push(acc);
    }
    gens.push(HEnd::from_parts(&QuaternionElement::basis(0), &amat));

    let mut cols: Vec<HEnd> = Vec::with_capacity(16);
    cols.push(HEnd::from_parts(&QuaternionElement::basis(0), &eye));
    for mask in 1u64..16 {
        let low = mask.trailing_zeros() as usize;
        let rest = (mask & (mask - 1)) as usize;
        let img = gens[low].mul(&cols[rest]);
        cols.push(img);
    }
    let mut out = Mat::zero(16, 16);
    for (c, img) in cols.iter().enumerate() {
        for (r, v) in img.flat().into_iter().enumerate() {
            out.m[r][c] = v;
        }
    }
    out
}

/// `Cl_4 = Cl_4^op` via the composite through `H (x) End(k^(1|1))` and the
/// explicit op-twists on each factor.
pub fn verify_cliff3() -> IsoReport {
    let psi = cl4_to_hend();
    let psi_inv = match psi.inverse() {
        Some(m) => m,
        None => {
            return IsoReport {
                which: "cliff3",
                relations_ok: false,
                bijective: false,
                detail: "rank-4 presentation not invertible".into(),
            }
        }
    };
    let mut twist = Mat::zero(16, 16);
    for h in 0..4 {
        for e in 0..4 {
            let mut u = HEnd::zero();
            u.c[h][e] = CycNumber::one();
            let t = u.op_twist();
            for hh in 0..4 {
                for ee in 0..4 {
                    twist.m[hh * 4 + ee][h * 4 + e] = t.c[hh][ee].clone();
                }
            }
        }
    }
    let f = psi_inv.mul(&twist.mul(&psi));

    // F is an algebra map into the opposite algebra:
    // F(x y) = (-1)^(|x||y|) F(y) F(x) on all 256 monomial pairs.
    let apply = |mat: &Mat, x: &CliffordElement| -> CliffordElement {
        let mut out = CliffordElement::zero(4);
        for (mask, c) in x.terms() {
            for r in 0..16 {
                if !mat.m[r][*mask as usize].is_zero() {
                    let v = &mat.m[r][*mask as usize] * c;
                    out.add_term(r as u64, &v);
                }
            }
        }
        out
    };
    let mut relations_ok = true;
    for s in 0..16u64 {
        for t in 0..16u64 {
            let x = CliffordElement::monomial(4, s, CycNumber::one());
            let y = CliffordElement::monomial(4, t, CycNumber::one());
            let lhs = apply(&f, &cl_mul(&x, &y).unwrap());
            let mut rhs = cl_mul(&apply(&f, &y), &apply(&f, &x)).unwrap();
            if (s.count_ones() & t.count_ones() & 1) == 1 {
                rhs = rhs.scaled(&(-CycNumber::one()));
            }
            if lhs != rhs {
                relations_ok = false;
            }
        }
    }
    let bijective = f.rank() == 16;
    IsoReport {
        which: "cliff3",
        relations_ok,
        bijective,
        detail: format!("op-map rank {}/16", f.rank()),
    }
}

pub fn small_rank_iso_verify(which: &str) -> IsoReport {
    match which {
        "cliff1" => verify_cliff1(),
        "cliff2" => verify_cliff2(),
        "cliff3" => verify_cliff3(),
        other => IsoReport {
            which: "unknown",
            relations_ok: false,
            bijective: false,
            detail: format!("unknown isomorphism {:?}", other),
        },
    }
}

/// Morita data for the matrix-superalgebra ranks.
pub struct PeriodicityData {
    pub p: usize,
    pub module_space: SuperSpace,
    pub actions: Vec<SuperMap>,
    pub idempotent: CliffordElement,
}

/// Solve for the preimage of the even matrix unit `e_00` under the monomial
/// images of the given generators.
fn e00_preimage(gens: &[SuperMap]) -> CliffordElement {
    let n = gens.len();
    let imgs = monomial_images(gens);
    let dim = gens[0].source.total();
    let mut a = Mat::zero(dim * dim, 1 << n);
    for (c, img) in imgs.iter().enumerate() {
        for i in 0..dim {
            for j in 0..dim {
                a.m[i * dim + j][c] = img.mat.m[i][j].clone();
            }
        }
    }
    let mut rhs = Mat::zero(dim * dim, 1);
    rhs.m[0][0] = CycNumber::one();
    let x = a.solve(&rhs).expect("e00 lies in the image");
    let mut out = CliffordElement::zero(n);
    for mask in 0..(1u64 << n) {
        out.add_term(mask, &x.m[mask as usize][0]);
    }
    out
}

pub fn periodicity_data(p: usize) -> PeriodicityData {
    match p {
        2 => {
            let (x1, x2) = cl2_matrix_iso();
            let space = x1.source.clone();
            let idempotent = e00_preimage(&[x1.clone(), x2.clone()]);
            PeriodicityData {
                p,
                module_space: space,
                actions: vec![x1, x2],
                idempotent,
            }
        }
        8 => {
            let gens = cl8_matrix_iso();
            let space = gens[0].source.clone();
            // eps_8 = product of the rank-2 idempotents embedded per slot;
            // its image is the projection onto e0^(x4), the first even basis
            // vector of the row-major tensor basis.
            let (x1, x2) = cl2_matrix_iso();
            let eps2 = e00_preimage(&[x1, x2]);
            let mut acc = CliffordElement::one(8);
            for slot in 0..4 {
                let embedded = eps2.reindexed(8, |i| i + 2 * slot);
                acc = cl_mul(&acc, &embedded).unwrap();
            }
            PeriodicityData {
                p,
                module_space: space,
                actions: gens,
                idempotent: acc,
            }
        }
        _ => panic!("periodicity rank must be 2 or 8"),
    }
}

/// Graded dimension of the slice `eps . Cl_n`.
pub fn idempotent_slice_dims(eps: &CliffordElement) -> (usize, usize) {
    let n = eps.n;
    let mut even_rows = Vec::new();
    let mut odd_rows = Vec::new();
    for mask in 0..(1u64 << n) {
        let m = CliffordElement::monomial(n, mask, CycNumber::one());
        let prod = cl_mul(eps, &m).unwrap();
        let row: Vec<(usize, CycNumber)> = prod
            .terms()
            .map(|(k, c)| (*k as usize, c.clone()))
            .collect();
        if mask.count_ones() % 2 == 0 {
            even_rows.push(row);
        } else {
            odd_rows.push(row);
        }
    }
    (sparse_rank(&even_rows), sparse_rank(&odd_rows))
}
