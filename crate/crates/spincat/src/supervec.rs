//! Super vector spaces over `Q(zeta_16)`, parity-homogeneous linear maps,
//! Koszul sign rules, Pi-structures, and exact eigenspace extraction.

use crate::linalg::Mat;
use crate::scalars::CycNumber;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// A finite dimensional `Z/2`-graded vector space, recorded as the parity of
/// each basis index. Directly constructed spaces put even indices first;
/// tensor products keep row-major pair order, so mixed orders occur.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperSpace {
    parities: Vec<u8>,
}

impl SuperSpace {
    /// `k^(e|o)` with basis indices `0..e` even and the rest odd.
    pub fn standard(dim_even: usize, dim_odd: usize) -> Self {
        let mut parities = vec![0u8; dim_even];
        parities.extend(std::iter::repeat(1).take(dim_odd));
        SuperSpace { parities }
    }

    pub fn from_parities(parities: Vec<u8>) -> Self {
        assert!(parities.iter().all(|&p| p < 2));
        SuperSpace { parities }
    }

    pub fn total(&self) -> usize {
        self.parities.len()
    }

    pub fn dim_even(&self) -> usize {
        self.parities.iter().filter(|&&p| p == 0).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.parities.iter().filter(|&&p| p == 1).count()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parities[i]
    }

    /// Same space with all parities flipped (the neutral `Pi`).
    pub fn flipped(&self) -> Self {
        SuperSpace {
            parities: self.parities.iter().map(|p| p ^ 1).collect(),
        }
    }

    pub fn flipped_n(&self, n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            self.clone()
        } else {
            self.flipped()
        }
    }

    /// Tensor product; basis is row-major over index pairs, which makes the
    /// iterated product strictly associative.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut parities = Vec::with_capacity(self.total() * other.total());
        for &p in &self.parities {
            for &q in &other.parities {
                parities.push(p ^ q);
            }
        }
        SuperSpace { parities }
    }

    /// Position of `v_i (x) w_j` in the tensor basis.
    pub fn pair_index(&self, other: &SuperSpace, i: usize, j: usize) -> usize {
        i * other.total() + j
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.dim_even(), self.dim_odd())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuperError {
    NotHomogeneous,
    ShapeMismatch,
    NotEven,
}

impl fmt::Display for SuperError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperError::NotHomogeneous => write!(f, "map is not parity-homogeneous"),
            SuperError::ShapeMismatch => write!(f, "source/target mismatch"),
            SuperError::NotEven => write!(f, "operation requires an even map"),
        }
    }
}

impl std::error::Error for SuperError {}

/// A parity-homogeneous linear map between super spaces.
#[derive(Clone, PartialEq, Debug)]
pub struct SuperMap {
    pub source: SuperSpace,
    pub target: SuperSpace,
    pub parity: u8,
    pub mat: Mat,
}

impl SuperMap {
    pub fn new(
        source: SuperSpace,
        target: SuperSpace,
        parity: u8,
        mat: Mat,
    ) -> Result<Self, SuperError> {
        if mat.rows != target.total() || mat.cols != source.total() {
            return Err(SuperError::ShapeMismatch);
        }
        for i in 0..mat.rows {
            for j in 0..mat.cols {
                if !mat.m[i][j].is_zero()
                    && (target.parity(i) ^ source.parity(j)) != parity
                {
                    return Err(SuperError::NotHomogeneous);
                }
            }
        }
        Ok(SuperMap {
            source,
            target,
            parity,
            mat,
        })
    }

    pub fn identity(space: &SuperSpace) -> Self {
        SuperMap {
            source: space.clone(),
            target: space.clone(),
            parity: 0,
            mat: Mat::identity(space.total()),
        }
    }

    pub fn zero(source: &SuperSpace, target: &SuperSpace, parity: u8) -> Self {
        SuperMap {
            source: source.clone(),
            target: target.clone(),
            parity,
            mat: Mat::zero(target.total(), source.total()),
        }
    }

    /// `self` after `rhs` (matrix product; no sign: Koszul signs live in the
    /// tensor structure, not in composition).
    pub fn compose(&self, rhs: &SuperMap) -> SuperMap {
        assert_eq!(
            self.source, rhs.target,
            "compose: inner spaces must match"
        );
        SuperMap {
            source: rhs.source.clone(),
            target: self.target.clone(),
            parity: self.parity ^ rhs.parity,
            mat: self.mat.mul(&rhs.mat),
        }
    }

    pub fn add(&self, rhs: &SuperMap) -> SuperMap {
        assert_eq!(self.source, rhs.source);
        assert_eq!(self.target, rhs.target);
        assert_eq!(self.parity, rhs.parity);
        SuperMap {
            source: self.source.clone(),
            target: self.target.clone(),
            parity: self.parity,
            mat: self.mat.add(&rhs.mat),
        }
    }

    pub fn scaled(&self, c: &CycNumber) -> SuperMap {
        SuperMap {
            source: self.source.clone(),
            target: self.target.clone(),
            parity: self.parity,
            mat: self.mat.scaled(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn inverse(&self) -> Option<SuperMap> {
        let inv = self.mat.inverse()?;
        Some(SuperMap {
            source: self.target.clone(),
            target: self.source.clone(),
            parity: self.parity,
            mat: inv,
        })
    }

    /// Neutral-Pi transport: `Pi(f) = (-1)^(|f|) xi_Y f xi_X^(-1)`, which on
    /// matrices is a sign flip for odd maps plus flipped gradings.
    pub fn pi_map(&self) -> SuperMap {
        let mat = if self.parity == 1 {
            self.mat.scaled(&(-CycNumber::one()))
        } else {
            self.mat.clone()
        };
        SuperMap {
            source: self.source.flipped(),
            target: self.target.flipped(),
            parity: self.parity,
            mat,
        }
    }
}

/// Graded tensor product of maps: `(f (x) g)(v (x) w) = (-1)^(|v||g|) f(v) (x) g(w)`.
pub fn tensor_map(f: &SuperMap, g: &SuperMap) -> SuperMap {
    let source = f.source.tensor(&g.source);
    let target = f.target.tensor(&g.target);
    let mut mat = Mat::zero(target.total(), source.total());
    let (gs, gt) = (g.source.total(), g.target.total());
    for i in 0..f.mat.rows {
        for j in 0..f.mat.cols {
            if f.mat.m[i][j].is_zero() {
                continue;
            }
            let koszul = f.source.parity(j) & g.parity;
            for k in 0..g.mat.rows {
                for l in 0..g.mat.cols {
                    if g.mat.m[k][l].is_zero() {
                        continue;
                    }
                    let mut v = &f.mat.m[i][j] * &g.mat.m[k][l];
                    if koszul == 1 {
                        v = -v;
                    }
                    mat.m[i * gt + k][j * gs + l] = v;
                }
            }
        }
    }
    SuperMap {
        source,
        target,
        parity: f.parity ^ g.parity,
        mat,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SwapKind {
    /// Plain swap with no sign.
    Sigma,
    /// Koszul swap with sign `(-1)^(|v||w|)`.
    Tau,
}

/// The symmetry `V (x) W -> W (x) V`, either plain or with Koszul signs.
pub fn symmetry(kind: SwapKind, v: &SuperSpace, w: &SuperSpace) -> SuperMap {
    let source = v.tensor(w);
    let target = w.tensor(v);
    let mut mat = Mat::zero(target.total(), source.total());
    for i in 0..v.total() {
        for j in 0..w.total() {
            let from = i * w.total() + j;
            let to = j * v.total() + i;
            let mut c = CycNumber::one();
            if kind == SwapKind::Tau && v.parity(i) & w.parity(j) == 1 {
                c = -c;
            }
            mat.m[to][from] = c;
        }
    }
    SuperMap {
        source,
        target,
        parity: 0,
        mat,
    }
}

/// The canonical map `Pi^n(V) -> Pi^m(V)` for the neutral Pi-structure:
/// the identity matrix with parity `m - n`.
pub fn xi_power(n: i64, m: i64, v: &SuperSpace) -> SuperMap {
    SuperMap {
        source: v.flipped_n(n),
        target: v.flipped_n(m),
        parity: ((m - n).rem_euclid(2)) as u8,
        mat: Mat::identity(v.total()),
    }
}

/// The right Pi-structure `Pi_r(V) = V (x) k[1]` together with the odd
/// isomorphism `xi_r(v) = (-1)^(|v|) v (x) pi`.
pub fn pi_right(v: &SuperSpace) -> (SuperSpace, SuperMap) {
    let pi_line = SuperSpace::standard(0, 1);
    let space = v.tensor(&pi_line);
    let mut mat = Mat::zero(space.total(), v.total());
    for i in 0..v.total() {
        mat.m[i][i] = if v.parity(i) == 1 {
            -CycNumber::one()
        } else {
            CycNumber::one()
        };
    }
    let map = SuperMap {
        source: v.clone(),
        target: space.clone(),
        parity: 1,
        mat,
    };
    (space, map)
}

/// Exact `lambda`-eigenspace of an even endomorphism. Returns the eigenspace
/// (even basis vectors first) and its inclusion.
pub fn eigenspace(f: &SuperMap, lambda: &CycNumber) -> Result<(SuperSpace, SuperMap), SuperError> {
    if f.parity != 0 {
        return Err(SuperError::NotEven);
    }
    if f.source != f.target {
        return Err(SuperError::ShapeMismatch);
    }
    let n = f.source.total();
    let mut shifted = f.mat.clone();
    for i in 0..n {
        shifted.m[i][i] = &shifted.m[i][i] - lambda;
    }
    let ker = shifted.kernel();
    // Each kernel column is parity-homogeneous because the shifted matrix
    // respects the grading; sort columns even-first for a standard space.
    let mut evens = Vec::new();
    let mut odds = Vec::new();
    for c in 0..ker.cols {
        let mut par = None;
        for r in 0..n {
            if !ker.m[r][c].is_zero() {
                let p = f.source.parity(r);
                assert!(par.is_none() || par == Some(p), "kernel vector not homogeneous");
                par = Some(p);
            }
        }
        match par {
            Some(1) => odds.push(c),
            _ => evens.push(c),
        }
    }
    let space = SuperSpace::standard(evens.len(), odds.len());
    let mut mat = Mat::zero(n, evens.len() + odds.len());
    for (k, &c) in evens.iter().chain(odds.iter()).enumerate() {
        for r in 0..n {
            mat.m[r][k] = ker.m[r][c].clone();
        }
    }
    Ok((
        space.clone(),
        SuperMap {
            source: space,
            target: f.source.clone(),
            parity: 0,
            mat,
        },
    ))
}

/// Seeded random homogeneous map with small rational entries.
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    source: &SuperSpace,
    target: &SuperSpace,
    parity: u8,
) -> SuperMap {
    let mut mat = Mat::zero(target.total(), source.total());
    for i in 0..target.total() {
        for j in 0..source.total() {
            if target.parity(i) ^ source.parity(j) == parity {
                mat.m[i][j] = CycNumber::from_int(rng.gen_range(-3..=3));
            }
        }
    }
    SuperMap {
        source: source.clone(),
        target: target.clone(),
        parity,
        mat,
    }
}

/// Seeded random even automorphism (invertible by construction: retries).
pub fn random_even_automorphism(rng: &mut ChaCha8Rng, space: &SuperSpace) -> SuperMap {
    loop {
        let f = random_homogeneous(rng, space, space, 0);
        if f.mat.inverse().is_some() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{zeta4, CycNumber};
    use rand::SeedableRng;

    #[test]
    fn tensor_dims() {
        let a = SuperSpace::standard(1, 0);
        assert_eq!(a.tensor(&a), SuperSpace::standard(1, 0));
        let b = SuperSpace::standard(1, 1);
        let bb = b.tensor(&b);
        assert_eq!((bb.dim_even(), bb.dim_odd()), (2, 2));
        let c = SuperSpace::standard(2, 1).tensor(&SuperSpace::standard(1, 2));
        // enumerate basis pairs: 2*1 + 1*2 even = 4, 2*2 + 1*1 odd = 5
        assert_eq!((c.dim_even(), c.dim_odd()), (4, 5));
    }

    #[test]
    fn tensor_map_signs() {
        let b = SuperSpace::standard(1, 1);
        let id = SuperMap::identity(&b);
        assert_eq!(tensor_map(&id, &id), SuperMap::identity(&b.tensor(&b)));

        // odd xi on k^(1|1): e -> o, o -> 2e
        let mut m = Mat::zero(2, 2);
        m.m[1][0] = CycNumber::one();
        m.m[0][1] = CycNumber::from_int(2);
        let xi = SuperMap::new(b.clone(), b.clone(), 1, m).unwrap();
        // (xi (x) xi) squared = -(xi^2 (x) xi^2) by the interchange law
        let t = tensor_map(&xi, &xi);
        let lhs = t.compose(&t);
        let sq = xi.compose(&xi);
        let rhs = tensor_map(&sq, &sq).scaled(&(-CycNumber::one()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_parity_rejected() {
        let b = SuperSpace::standard(1, 1);
        let mut m = Mat::zero(2, 2);
        m.m[0][0] = CycNumber::one();
        m.m[1][0] = CycNumber::one();
        assert_eq!(
            SuperMap::new(b.clone(), b, 0, m).unwrap_err(),
            SuperError::NotHomogeneous
        );
    }

    #[test]
    fn symmetry_signs_and_involution() {
        let v = SuperSpace::standard(1, 0);
        let t = symmetry(SwapKind::Tau, &v, &v);
        assert_eq!(t.mat, Mat::identity(1));

        let o = SuperSpace::standard(0, 1);
        let t = symmetry(SwapKind::Tau, &o, &o);
        assert_eq!(t.mat.m[0][0], -CycNumber::one());
        let s = symmetry(SwapKind::Sigma, &o, &o);
        assert_eq!(s.mat.m[0][0], CycNumber::one());

        let b = SuperSpace::standard(1, 1);
        let t1 = symmetry(SwapKind::Tau, &b, &b);
        let t2 = symmetry(SwapKind::Tau, &b, &b);
        assert_eq!(t2.compose(&t1), SuperMap::identity(&b.tensor(&b)));
    }

    #[test]
    fn xi_power_laws() {
        let v = SuperSpace::standard(2, 1);
        assert_eq!(xi_power(3, 3, &v), SuperMap::identity(&v.flipped()));
        let x02 = xi_power(0, 2, &v);
        assert_eq!(x02.parity, 0);
        // Pi applied to xi^(0,1) is -xi^(1,2)
        assert_eq!(xi_power(0, 1, &v).pi_map(), xi_power(1, 2, &v).scaled(&(-CycNumber::one())));
        // composition law
        let x01 = xi_power(0, 1, &v);
        let x12 = xi_power(1, 2, &v);
        assert_eq!(x12.compose(&x01), x02);
    }

    #[test]
    fn pi_right_signs() {
        let v = SuperSpace::standard(1, 1);
        let (pv, xi) = pi_right(&v);
        assert_eq!((pv.dim_even(), pv.dim_odd()), (1, 1));
        assert_eq!(xi.mat.m[0][0], CycNumber::one());
        assert_eq!(xi.mat.m[1][1], -CycNumber::one());
        let inv = xi.inverse().unwrap();
        assert_eq!(xi.compose(&inv), SuperMap::identity(&pv));
    }

    #[test]
    fn eigenspace_basics() {
        let v = SuperSpace::standard(2, 1);
        let id = SuperMap::identity(&v);
        let (s, _) = eigenspace(&id, &CycNumber::one()).unwrap();
        assert_eq!(s, v);
        let (s, _) = eigenspace(&id, &CycNumber::from_int(2)).unwrap();
        assert_eq!(s.total(), 0);
    }

    #[test]
    fn eigenspace_of_swap_tensor() {
        // mu (x) nu for the standard swap queer structure on k^(1|1)
        let b = SuperSpace::standard(1, 1);
        let mut m = Mat::zero(2, 2);
        m.m[1][0] = CycNumber::one();
        m.m[0][1] = CycNumber::one();
        let nu = SuperMap::new(b.clone(), b.clone(), 1, m).unwrap();
        let t = tensor_map(&nu, &nu);
        // squares to -1
        assert_eq!(
            t.compose(&t),
            SuperMap::identity(&b.tensor(&b)).scaled(&(-CycNumber::one()))
        );
        let (s, inc) = eigenspace(&t, &zeta4()).unwrap();
        assert_eq!((s.dim_even(), s.dim_odd()), (1, 1));
        // f . inc = zeta4 . inc
        assert_eq!(t.compose(&inc).mat, inc.mat.scaled(&zeta4()));
        // an even involution-like f with f^2 = -1 splits evenly
        let (s2, _) = eigenspace(&t, &(-zeta4())).unwrap();
        assert_eq!(s2.total(), 2);
    }

    #[test]
    fn interchange_law_exhaustive_small() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let spaces = [
            SuperSpace::standard(1, 0),
            SuperSpace::standard(0, 1),
            SuperSpace::standard(1, 1),
            SuperSpace::standard(2, 1),
        ];
        for a in &spaces {
            for b in &spaces {
                if a.total() + b.total() > 3 {
                    continue;
                }
                for (p1, p2, q1, q2) in [(0, 0, 0, 0), (1, 0, 0, 1), (1, 1, 1, 1), (0, 1, 1, 0)] {
                    let f1 = random_homogeneous(&mut rng, a, b, p1);
                    let f2 = random_homogeneous(&mut rng, b, a, p2);
                    let g1 = random_homogeneous(&mut rng, b, a, q1);
                    let g2 = random_homogeneous(&mut rng, a, b, q2);
                    let lhs = tensor_map(&f2, &g2).compose(&tensor_map(&f1, &g1));
                    let mut rhs = tensor_map(&f2.compose(&f1), &g2.compose(&g1));
                    if p1 & q2 == 1 {
                        rhs = rhs.scaled(&(-CycNumber::one()));
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn tau_naturality_sign() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let a = SuperSpace::standard(1, 1);
        let b = SuperSpace::standard(1, 1);
        for pf in 0..2u8 {
            for pg in 0..2u8 {
                let f = random_homogeneous(&mut rng, &a, &a, pf);
                let g = random_homogeneous(&mut rng, &b, &b, pg);
                let tau = symmetry(SwapKind::Tau, &a, &b);
                let lhs = tau.compose(&tensor_map(&f, &g));
                let mut rhs = tensor_map(&g, &f).compose(&tau);
                if pf & pg == 1 {
                    rhs = rhs.scaled(&(-CycNumber::one()));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}
