//! Clifford modules in a graded super-vector-space instance, the everted
//! tensor product and braiding twist, the rank-1 double-functor
//! isomorphisms, and the `K_+` ring map with its `1/sqrt(2)` normalization.

use crate::axioms::{BraidKind, Category, CheckRecord};
use crate::clifford::cl2_matrix_iso;
use crate::factor_systems::{FactorExpr, FactorName};
use crate::linalg::Mat;
use crate::scalars::{zeta4, CycNumber, QSqrt2, Rat};
use crate::spin_group::{group_inv, j_embed, tau_tilde, SpinFlavor, SpinGroupElement};
use crate::supervec::{
    random_even_automorphism, symmetry, tensor_map, SuperMap, SuperSpace, SwapKind,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A Clifford-module object of the everted instance: a graded base space,
/// a degree in `Z/4` (congruent to the rank mod 4 for shipped objects),
/// and anticommuting odd actions squaring to 2.
#[derive(Clone, PartialEq, Debug)]
pub struct EvertObj {
    pub base: SuperSpace,
    pub degree: i64,
    pub actions: Vec<SuperMap>,
}

impl EvertObj {
    pub fn new(base: SuperSpace, degree: i64, actions: Vec<SuperMap>) -> Option<Self> {
        let obj = EvertObj {
            base,
            degree: degree.rem_euclid(4),
            actions,
        };
        if obj.validate() {
            Some(obj)
        } else {
            None
        }
    }

    pub fn rank(&self) -> usize {
        self.actions.len()
    }

    fn validate(&self) -> bool {
        let two = SuperMap::identity(&self.base).scaled(&CycNumber::from_int(2));
        for (i, a) in self.actions.iter().enumerate() {
            if a.parity != 1 || a.source != self.base || a.target != self.base {
                return false;
            }
            if a.compose(a) != two {
                return false;
            }
            for b in self.actions.iter().skip(i + 1) {
                if !a.compose(b).add(&b.compose(a)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Plain degree-0 object.
    pub fn plain(base: SuperSpace) -> Self {
        EvertObj {
            base,
            degree: 0,
            actions: Vec::new(),
        }
    }

    /// The rank-1 module `(k^(1|1), xi)` with `xi: e0 -> e1, e1 -> 2 e0`.
    pub fn standard_rank1() -> Self {
        let base = SuperSpace::standard(1, 1);
        let mut m = Mat::zero(2, 2);
        m.m[1][0] = CycNumber::one();
        m.m[0][1] = CycNumber::from_int(2);
        EvertObj {
            base: base.clone(),
            degree: 1,
            actions: vec![SuperMap::new(base.clone(), base, 1, m).unwrap()],
        }
    }

    /// The rank-2 module `U_2 = (k^(1|1), a_1, a_2)`.
    pub fn standard_rank2() -> Self {
        let (x1, x2) = cl2_matrix_iso();
        EvertObj {
            base: x1.source.clone(),
            degree: 2,
            actions: vec![x1, x2],
        }
    }

    /// Conjugate every action by a random even automorphism, and pad the
    /// base by tensoring with a plain space on the left.
    pub fn randomized(&self, rng: &mut ChaCha8Rng, pad_even: usize, pad_odd: usize) -> Self {
        let pad = SuperSpace::standard(pad_even, pad_odd);
        let base = pad.tensor(&self.base);
        let actions: Vec<SuperMap> = self
            .actions
            .iter()
            .map(|a| tensor_map(&SuperMap::identity(&pad), a))
            .collect();
        let q = random_even_automorphism(rng, &base);
        let qinv = q.inverse().unwrap();
        let conj: Vec<SuperMap> = actions
            .iter()
            .map(|a| q.compose(a).compose(&qinv))
            .collect();
        EvertObj::new(base, self.degree, conj).expect("conjugation preserves the relations")
    }
}

/// Evaluate a spin-group element through a list of Clifford actions via
/// `s~_i -> (A_(i+1) - A_i)/2`.
fn spin_action(actions: &[SuperMap], space: &SuperSpace, g: &SpinGroupElement) -> SuperMap {
    let mut acc = SuperMap::identity(space);
    let half = CycNumber::from_rat(crate::scalars::ratio(1, 2));
    for i in g.perm.canonical_word() {
        let gen = actions[i]
            .add(&actions[i - 1].scaled(&(-CycNumber::one())))
            .scaled(&half);
        acc = acc.compose(&gen);
    }
    if g.sign == 1 {
        acc = acc.scaled(&(-CycNumber::one()));
    }
    acc
}

/// The everted `Z/4`-graded instance over super vector spaces with the
/// Koszul symmetry and trivial factor system; everting shifts the factor
/// system to `D A`.
pub struct EvertedSVec;

impl EvertedSVec {
    fn combined_actions_on(
        &self,
        first: &EvertObj,
        second: &EvertObj,
    ) -> (SuperSpace, Vec<SuperMap>) {
        let space = first.base.tensor(&second.base);
        let mut actions = Vec::new();
        for a in &first.actions {
            actions.push(tensor_map(a, &SuperMap::identity(&second.base)));
        }
        for b in &second.actions {
            actions.push(tensor_map(&SuperMap::identity(&first.base), b));
        }
        (space, actions)
    }
}

impl Category for EvertedSVec {
    type Obj = EvertObj;
    type Mor = SuperMap;

    fn name(&self) -> String {
        "everted-svec(q=4)".into()
    }

    fn q_modulus(&self) -> Option<usize> {
        Some(4)
    }

    fn degree(&self, x: &EvertObj) -> i64 {
        x.degree
    }

    fn size(&self, x: &EvertObj) -> usize {
        x.rank().max(1) * x.base.total()
    }

    fn obj_label(&self, x: &EvertObj) -> String {
        format!("Cl{}@{}{}", x.rank(), x.degree, x.base)
    }

    fn unit(&self) -> EvertObj {
        EvertObj::plain(SuperSpace::standard(1, 0))
    }

    fn tensor_obj(&self, x: &EvertObj, y: &EvertObj) -> EvertObj {
        let (base, actions) = self.combined_actions_on(x, y);
        EvertObj {
            base,
            degree: (x.degree + y.degree).rem_euclid(4),
            actions,
        }
    }

    fn id_mor(&self, x: &EvertObj) -> SuperMap {
        SuperMap::identity(&x.base)
    }

    fn compose(&self, f: &SuperMap, g: &SuperMap) -> SuperMap {
        f.compose(g)
    }

    fn tensor_mor(&self, f: &SuperMap, g: &SuperMap) -> SuperMap {
        tensor_map(f, g)
    }

    fn scale(&self, c: &CycNumber, f: &SuperMap) -> SuperMap {
        f.scaled(c)
    }

    fn mor_eq(&self, f: &SuperMap, g: &SuperMap) -> bool {
        f == g
    }

    fn mor_parity(&self, f: &SuperMap) -> Option<u8> {
        Some(f.parity)
    }

    fn associator(&self, x: &EvertObj, y: &EvertObj, z: &EvertObj) -> SuperMap {
        SuperMap::identity(&x.base.tensor(&y.base).tensor(&z.base))
    }

    fn associator_inv(&self, x: &EvertObj, y: &EvertObj, z: &EvertObj) -> SuperMap {
        self.associator(x, y, z)
    }

    fn lambda_unitor(&self, x: &EvertObj) -> SuperMap {
        SuperMap::identity(&x.base)
    }

    fn rho_unitor(&self, x: &EvertObj) -> SuperMap {
        SuperMap::identity(&x.base)
    }

    /// `b'(M, N) = tau~(r,s)^-1 . tau(M, N)`: the Koszul swap followed by
    /// the block-reordering spin element acting through the combined
    /// Clifford structure on `N (x) M`.
    fn braiding(&self, x: &EvertObj, y: &EvertObj) -> SuperMap {
        let tau = symmetry(SwapKind::Tau, &x.base, &y.base);
        let (r, s) = (x.rank(), y.rank());
        if r + s == 0 {
            return tau;
        }
        // after the swap, x's actions live on the right slot
        let (space, actions) = self.combined_actions_on(y, x);
        let mut reordered = Vec::with_capacity(r + s);
        for a in &actions[s..] {
            reordered.push(a.clone());
        }
        for b in &actions[..s] {
            reordered.push(b.clone());
        }
        let twist = spin_action(&reordered, &space, &group_inv(&tau_tilde(r, s)));
        twist.compose(&tau)
    }

    fn braiding_kind(&self) -> BraidKind {
        BraidKind::TypeII
    }

    fn factor(&self) -> FactorExpr {
        FactorExpr::product(&[FactorName::D, FactorName::A])
    }

    /// A basis of the homogeneous supercommutant of the module structure.
    fn generators(&self, x: &EvertObj) -> Vec<(SuperMap, u8)> {
        let n = x.base.total();
        let mut out = Vec::new();
        for parity in 0..2u8 {
            // unknowns: entries (i, j) with parity(i) ^ parity(j) = parity
            let mut slots = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if x.base.parity(i) ^ x.base.parity(j) == parity {
                        slots.push((i, j));
                    }
                }
            }
            if slots.is_empty() {
                continue;
            }
            // constraints: f a = (-1)^parity a f for each action a
            let mut rows = Vec::new();
            for a in &x.actions {
                for i in 0..n {
                    for j in 0..n {
                        // entry (i, j) of f a - (-1)^p a f
                        let mut row = vec![CycNumber::zero(); slots.len()];
                        let mut nonzero = false;
                        for (k, &(fi, fj)) in slots.iter().enumerate() {
                            let mut c = CycNumber::zero();
                            if fi == i {
                                c += &a.mat.m[fj][j];
                            }
                            if fj == j {
                                let v = &a.mat.m[i][fi];
                                if parity == 1 {
                                    c += v;
                                } else {
                                    c = &c - v;
                                }
                            }
                            if !c.is_zero() {
                                nonzero = true;
                            }
                            row[k] = c;
                        }
                        if nonzero {
                            rows.push(row);
                        }
                    }
                }
            }
            let mut mat = Mat::zero(rows.len().max(1), slots.len());
            for (r, row) in rows.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    mat.m[r][c] = v.clone();
                }
            }
            let ker = mat.kernel();
            for col in 0..ker.cols {
                let mut fm = Mat::zero(n, n);
                for (k, &(fi, fj)) in slots.iter().enumerate() {
                    fm.m[fi][fj] = ker.m[k][col].clone();
                }
                let f = SuperMap::new(x.base.clone(), x.base.clone(), parity, fm)
                    .expect("kernel vectors are homogeneous by construction");
                if !f.is_zero() {
                    out.push((f, parity));
                }
            }
        }
        // keep the sweep small
        out.truncate(4);
        out
    }
}

/// Verify the rank-1 double-functor identities on one module `(M, alpha)`:
/// `2 - xi alpha` is an even module isomorphism from the `alpha (x) 1`
/// structure to the `1 (x) xi` structure, and both composites split as
/// `id + parity flip`.
pub fn cl1_double_check(module: &EvertObj) -> Vec<CheckRecord> {
    assert_eq!(module.rank(), 1);
    let alpha = &module.actions[0];
    let line = EvertObj::standard_rank1();
    let big = module.base.tensor(&line.base);
    let a_ext = tensor_map(alpha, &SuperMap::identity(&line.base));
    let xi_ext = tensor_map(&SuperMap::identity(&module.base), &line.actions[0]);
    // `xi alpha` composes left to right (apply xi, then alpha)
    let t = SuperMap::identity(&big)
        .scaled(&CycNumber::from_int(2))
        .add(&a_ext.compose(&xi_ext).scaled(&(-CycNumber::one())));
    let mut out = Vec::new();
    let invertible = t.inverse().is_some();
    out.push(CheckRecord::from_flag(
        "eversion.cl1.iso-invertible".into(),
        "2 - xi alpha has an exact inverse",
        if invertible { None } else { Some("singular".into()) },
    ));
    let intertwine = t.compose(&a_ext) == xi_ext.compose(&t);
    out.push(CheckRecord::from_flag(
        "eversion.cl1.intertwine".into(),
        "(2 - xi alpha) . alpha = xi . (2 - xi alpha)",
        if intertwine { None } else { Some("mismatch".into()) },
    ));
    // G(F(M)) = M (x) k^(1|1) splits as M + parity-flipped M on the nose
    let ge = big.total() == 2 * module.base.total()
        && (0..module.base.total()).all(|i| {
            big.parity(2 * i) == module.base.parity(i)
                && big.parity(2 * i + 1) == module.base.parity(i) ^ 1
        });
    out.push(CheckRecord::from_flag(
        "eversion.cl1.gf-split".into(),
        "G(F(M)) = M + Pi(M) by the e0/e1 basis split",
        if ge { None } else { Some("basis split failed".into()) },
    ));
    // F(G(M, alpha)) = (M (x) k^(1|1), xi) = (M (x) k^(1|1), alpha) via t,
    // and the alpha (x) 1 structure is block diagonal over the split
    let mut blocks_ok = true;
    let n = module.base.total();
    for i in 0..n {
        for j in 0..n {
            // entries crossing the e0/e1 split must vanish for a (x) 1
            if !a_ext.mat.m[2 * i][2 * j + 1].is_zero()
                || !a_ext.mat.m[2 * i + 1][2 * j].is_zero()
            {
                blocks_ok = false;
            }
            if a_ext.mat.m[2 * i][2 * j] != alpha.mat.m[i][j]
                || a_ext.mat.m[2 * i + 1][2 * j + 1] != alpha.mat.m[i][j]
            {
                blocks_ok = false;
            }
        }
    }
    out.push(CheckRecord::from_flag(
        "eversion.cl1.fg-split".into(),
        "F(G(M,a)) = (M,a) + Pi(M,a): the transported structure is block diagonal",
        if blocks_ok { None } else { Some("blocks".into()) },
    ));
    out
}

/// The class of an object in `K_+` after inverting `sqrt(2)`: total
/// dimension for even degree, total dimension over `sqrt(2)` for rank-1
/// (odd) objects.
#[derive(Clone, PartialEq, Debug)]
pub struct KPlusElement {
    pub value: QSqrt2,
}

impl KPlusElement {
    pub fn of(obj: &EvertObj) -> Self {
        let dim = QSqrt2::from_int(obj.base.total() as i64);
        match obj.rank() % 2 {
            0 => KPlusElement { value: dim },
            _ => KPlusElement {
                value: &dim * &QSqrt2::two_pow_half(-1),
            },
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        KPlusElement {
            value: &self.value * &rhs.value,
        }
    }
}

/// The `K_+` multiplicativity checks on seeded rank-1 module pairs: the
/// `2 zeta_4`-eigenspace of the combined odd operator has half the product
/// dimension, `alpha (x) 1` swaps the two eigenspaces, and the class map is
/// multiplicative with the `1/sqrt(2)` normalization.
pub fn kplus_checks(samples: usize, seed: u64) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cat = EvertedSVec;
    let mut wit_dim = None;
    let mut wit_swap = None;
    let mut wit_ring = None;
    use rand::Rng;
    for t in 0..samples {
        let (pe1, po1) = (rng.gen_range(1..=2), rng.gen_range(0..=1));
        let m1 = EvertObj::standard_rank1().randomized(&mut rng, pe1, po1);
        let (pe2, po2) = (rng.gen_range(1..=2), rng.gen_range(0..=1));
        let m2 = EvertObj::standard_rank1().randomized(&mut rng, pe2, po2);
        let prod = cat.tensor_obj(&m1, &m2);
        // the combined operator a . a' squares to -4; its eigenvalues are
        // +-2 zeta_4 under the alpha^2 = 2 normalization
        let op = prod.actions[0].compose(&prod.actions[1]);
        let lam = zeta4().scaled(&Rat::from_integer(2.into()));
        let (plus, inc_p) = crate::supervec::eigenspace(&op, &lam).unwrap();
        let (minus, inc_m) = crate::supervec::eigenspace(&op, &(-lam)).unwrap();
        let total = prod.base.total();
        if 2 * plus.total() != total || 2 * minus.total() != total {
            wit_dim.get_or_insert(format!("sample {}", t));
        }
        // alpha (x) 1 interchanges the eigenspaces
        let image = prod.actions[0].compose(&inc_p);
        if inc_m.mat.solve(&image.mat).is_none() || image.mat.rank() != plus.total() {
            wit_swap.get_or_insert(format!("sample {}", t));
        }
        // ring map: i([M][M']) = dim(N) = i([M]) i([M'])
        let lhs = QSqrt2::from_int(plus.total() as i64);
        let rhs = KPlusElement::of(&m1).mul(&KPlusElement::of(&m2)).value;
        if lhs != rhs {
            wit_ring.get_or_insert(format!("sample {}", t));
        }
    }
    // degree-0 cases are plain dimension counts
    let a = EvertObj::plain(SuperSpace::standard(2, 1));
    let m = EvertObj::standard_rank1();
    let cat_prod = cat.tensor_obj(&a, &m);
    let deg0_ok = KPlusElement::of(&cat_prod).value
        == KPlusElement::of(&a).mul(&KPlusElement::of(&m)).value;
    vec![
        CheckRecord::from_flag(
            format!("eversion.kplus.halving[{} samples]", samples),
            "dim of the 2 zeta4-eigenspace of a a' = dim(M) dim(M')/2",
            wit_dim,
        ),
        CheckRecord::from_flag(
            format!("eversion.kplus.eigenswap[{} samples]", samples),
            "alpha (x) 1 interchanges the two eigenspaces",
            wit_swap,
        ),
        CheckRecord::from_flag(
            format!("eversion.kplus.ring[{} samples]", samples),
            "i([M][M']) = i([M]) i([M']) with deg-1 classes scaled by 1/sqrt(2)",
            wit_ring,
        ),
        CheckRecord::from_flag(
            "eversion.kplus.deg0".into(),
            "i is multiplicative on degree-0 by plain dimensions",
            if deg0_ok { None } else { Some("deg0".into()) },
        ),
    ]
}

/// Seeded periodicity check: every rank-2 module is isomorphic to
/// `B (x) U_2` via `b (x) e0 -> b`, `b (x) e1 -> (-1)^(|b|) a_1 b`, where
/// `B` is the image of the idempotent `1/2 - (zeta4/4) a_1 a_2`.
pub fn periodicity_checks(samples: usize, seed: u64) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    use rand::Rng;
    for t in 0..samples {
        let (pe, po) = (rng.gen_range(1..=2), rng.gen_range(0..=1));
        let m = EvertObj::standard_rank2().randomized(&mut rng, pe, po);
        if !rank2_splits_off_u2(&m) {
            witness.get_or_insert(format!("sample {}", t));
        }
    }
    vec![CheckRecord::from_flag(
        format!("eversion.periodicity[{} samples]", samples),
        "rank-2 modules are B (x) U_2 via an explicit even isomorphism",
        witness,
    )]
}

fn rank2_splits_off_u2(m: &EvertObj) -> bool {
    let a1 = &m.actions[0];
    let a2 = &m.actions[1];
    // idempotent e = 1/2 - (zeta4/4) a1 a2
    let quarter = zeta4().scaled(&crate::scalars::ratio(-1, 4));
    let e = SuperMap::identity(&m.base)
        .scaled(&CycNumber::from_rat(crate::scalars::ratio(1, 2)))
        .add(&a1.compose(a2).scaled(&quarter));
    if e.compose(&e) != e {
        return false;
    }
    // basis of the image of e
    let basis = e.mat.column_basis();
    let bdim = basis.cols;
    if bdim * 2 != m.base.total() {
        return false;
    }
    let b_parities: Vec<u8> = (0..bdim)
        .map(|c| {
            let mut p = None;
            for r in 0..m.base.total() {
                if !basis.m[r][c].is_zero() {
                    let q = m.base.parity(r);
                    if let Some(pp) = p {
                        if pp != q {
                            return 2;
                        }
                    }
                    p = Some(q);
                }
            }
            p.unwrap_or(0)
        })
        .collect();
    if b_parities.iter().any(|&p| p > 1) {
        return false;
    }
    // phi: B (x) k^(1|1) -> M, b (x) e0 -> b, b (x) e1 -> (-1)^(|b|) a1 b
    let u2 = EvertObj::standard_rank2();
    let bs = SuperSpace::from_parities(b_parities.clone());
    let src = bs.tensor(&u2.base);
    let mut phi = Mat::zero(m.base.total(), src.total());
    for c in 0..bdim {
        for r in 0..m.base.total() {
            phi.m[r][c * 2] = basis.m[r][c].clone();
        }
        let mut col = Mat::zero(m.base.total(), 1);
        for r in 0..m.base.total() {
            col.m[r][0] = basis.m[r][c].clone();
        }
        let image = a1.mat.mul(&col);
        for r in 0..m.base.total() {
            let mut v = image.m[r][0].clone();
            if b_parities[c] == 1 {
                v = -v;
            }
            phi.m[r][c * 2 + 1] = v;
        }
    }
    let phi = match SuperMap::new(src, m.base.clone(), 0, phi) {
        Ok(f) => f,
        Err(_) => return false,
    };
    if phi.inverse().is_none() {
        return false;
    }
    // intertwining with both actions, where B (x) U_2 carries 1 (x) x_i
    let idb = SuperMap::new(
        bs.clone(),
        bs.clone(),
        0,
        Mat::identity(bdim),
    )
    .unwrap();
    for (mu, target) in [(&u2.actions[0], a1), (&u2.actions[1], a2)] {
        let module_side = tensor_map(&idb, mu);
        if phi.compose(&module_side) != target.compose(&phi) {
            return false;
        }
    }
    true
}

/// Parity of the reordering element used for bifunctoriality: the block
/// embedding of `tau~(p, s)` is even since `p = 2` is even.
pub fn reordering_parity_check(max_s: usize) -> bool {
    for r in 0..=2usize {
        for s in 0..=max_s {
            let j = j_embed(
                &SpinGroupElement::identity(r, SpinFlavor::SPIN),
                &tau_tilde(2, s),
            )
            .unwrap();
            if j.parity() != 0 {
                return false;
            }
        }
    }
    true
}

/// The default object stock: degrees 0, 1, 2 with rank = degree.
pub fn default_objects(rng: &mut ChaCha8Rng) -> Vec<EvertObj> {
    vec![
        EvertObj::plain(SuperSpace::standard(1, 0)),
        EvertObj::plain(SuperSpace::standard(1, 1)),
        EvertObj::standard_rank1(),
        EvertObj::standard_rank1().randomized(rng, 1, 0),
        EvertObj::standard_rank2(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{all_pass, mutation_sensitivity, run_axioms_suite};

    #[test]
    fn evert_tensor_relations() {
        let cat = EvertedSVec;
        let m = EvertObj::standard_rank1();
        let n = EvertObj::standard_rank2();
        // rank 0 (x) rank 0 is the plain tensor
        let a = EvertObj::plain(SuperSpace::standard(1, 1));
        let t = cat.tensor_obj(&a, &a);
        assert_eq!(t.rank(), 0);
        assert_eq!(t.base.total(), 4);
        // rank 1 (x) rank 1: both actions square to 2 and anticommute
        let t = cat.tensor_obj(&m, &m);
        assert_eq!(t.rank(), 2);
        assert!(t.validate());
        // rank 2 (x) rank 1: relations hold on all pairs
        let t = cat.tensor_obj(&n, &m);
        assert_eq!(t.rank(), 3);
        assert!(t.validate());
    }

    #[test]
    fn braiding_basics() {
        let cat = EvertedSVec;
        // rank 0 pairs: the braiding is the Koszul swap
        let a = EvertObj::plain(SuperSpace::standard(1, 1));
        let b = EvertObj::plain(SuperSpace::standard(2, 0));
        let beta = cat.braiding(&a, &b);
        assert_eq!(beta, symmetry(SwapKind::Tau, &a.base, &b.base));
        // rank 1 pair: double braiding is -1 = (DA)#(1,1)
        let m = EvertObj::standard_rank1();
        let b1 = cat.braiding(&m, &m);
        let double = b1.compose(&b1);
        let expect =
            SuperMap::identity(&m.base.tensor(&m.base)).scaled(&(-CycNumber::one()));
        assert_eq!(double, expect);
    }

    #[test]
    fn axioms_suite_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let objs = default_objects(&mut rng);
        let recs = run_axioms_suite(&EvertedSVec, &objs, 10);
        for r in &recs {
            assert!(r.pass, "{} at {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn mutations_detected() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let objs = default_objects(&mut rng);
        let recs = mutation_sensitivity(&EvertedSVec, &objs, 10, 6, 2);
        assert!(all_pass(&recs), "{:?}", recs[0].witness);
    }

    #[test]
    fn cl1_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..4 {
            let m = EvertObj::standard_rank1().randomized(&mut rng, 2, 1);
            for r in cl1_double_check(&m) {
                assert!(r.pass, "{}", r.id);
            }
        }
    }

    #[test]
    fn kplus_and_periodicity() {
        for r in kplus_checks(10, 0) {
            assert!(r.pass, "{} {:?}", r.id, r.witness);
        }
        for r in periodicity_checks(10, 0) {
            assert!(r.pass, "{} {:?}", r.id, r.witness);
        }
        assert!(reordering_parity_check(4));
    }
}
