//! Linear spin species at small rank: representations of the spin symmetric
//! groups with `c` acting as `-1`, the induction tensor product over shuffle
//! transversals, the explicit type Ia supersymmetry, its type II form, and
//! the queer-algebra commutant check on tensor powers of `k^(n|n)`.

use crate::clifford::{cl_mul, CliffordElement};
use crate::linalg::Mat;
use crate::scalars::{cyc_root, CycNumber};
use crate::spin_group::{
    group_inv, group_mul, j_embed, tau_tilde, Perm, SpinFlavor, SpinGroupElement,
};
use crate::supervec::{symmetry, tensor_map, SuperMap, SuperSpace, SwapKind};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpeciesError {
    RelationViolation { rank: usize, detail: String },
    ParityViolation { rank: usize, generator: usize },
}

impl fmt::Display for SpeciesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpeciesError::RelationViolation { rank, detail } => {
                write!(f, "rank {} actions violate {}", rank, detail)
            }
            SpeciesError::ParityViolation { rank, generator } => {
                write!(f, "rank {} generator {} is not odd", rank, generator)
            }
        }
    }
}

impl std::error::Error for SpeciesError {}

/// An s-representation of the rank-`n` spin symmetric group: odd generator
/// actions satisfying the braid, far-anticommutation, and square relations
/// with the central element acting as `-1`.
#[derive(Clone, PartialEq, Debug)]
pub struct SRep {
    pub n: usize,
    pub space: SuperSpace,
    pub gens: Vec<SuperMap>,
}

impl SRep {
    /// Validates the defining relations before accepting the data.
    pub fn new(n: usize, space: SuperSpace, gens: Vec<SuperMap>) -> Result<Self, SpeciesError> {
        assert_eq!(gens.len(), n.saturating_sub(1));
        for (k, g) in gens.iter().enumerate() {
            if g.parity != 1 || g.source != space || g.target != space {
                return Err(SpeciesError::ParityViolation {
                    rank: n,
                    generator: k + 1,
                });
            }
        }
        let id = SuperMap::identity(&space);
        for (i, a) in gens.iter().enumerate() {
            if a.compose(a) != id {
                return Err(SpeciesError::RelationViolation {
                    rank: n,
                    detail: format!("square of generator {}", i + 1),
                });
            }
            for (j, b) in gens.iter().enumerate().skip(i + 1) {
                if j - i >= 2 {
                    if !a.compose(b).add(&b.compose(a)).is_zero() {
                        return Err(SpeciesError::RelationViolation {
                            rank: n,
                            detail: format!("far pair ({}, {})", i + 1, j + 1),
                        });
                    }
                } else {
                    let lhs = a.compose(b).compose(a);
                    let rhs = b.compose(a).compose(b);
                    if lhs != rhs {
                        return Err(SpeciesError::RelationViolation {
                            rank: n,
                            detail: format!("braid pair ({}, {})", i + 1, j + 1),
                        });
                    }
                }
            }
        }
        Ok(SRep { n, space, gens })
    }

    /// The one-dimensional even representation of the (trivial) rank-0 or
    /// rank-1 group.
    pub fn trivial(n: usize) -> Self {
        assert!(n <= 1);
        SRep {
            n,
            space: SuperSpace::standard(1, 0),
            gens: Vec::new(),
        }
    }

    /// The left regular representation of `k[S~_n]/(c+1)` on canonical lifts
    /// (basis ordered lexicographically by one-line notation).
    pub fn regular(n: usize) -> Self {
        let perms = all_perms(n);
        let space =
            SuperSpace::from_parities(perms.iter().map(|w| w.parity()).collect());
        let mut gens = Vec::new();
        for i in 1..n {
            let s = SpinGroupElement::generator(n, SpinFlavor::SPIN, i).unwrap();
            let mut m = Mat::zero(perms.len(), perms.len());
            for (col, w) in perms.iter().enumerate() {
                let prod = group_mul(
                    &s,
                    &SpinGroupElement::canonical_lift(w.clone(), SpinFlavor::SPIN),
                )
                .unwrap();
                let row = perms.binary_search(&prod.perm).unwrap();
                m.m[row][col] = if prod.sign == 1 {
                    -CycNumber::one()
                } else {
                    CycNumber::one()
                };
            }
            gens.push(SuperMap::new(space.clone(), space.clone(), 1, m).unwrap());
        }
        SRep::new(n, space, gens).expect("regular representation satisfies the relations")
    }

    /// The basic spin representation: `Cl_n` acting on itself on the left,
    /// with `s~_i` acting through `(a_(i+1) - a_i)/2`.
    pub fn basic_spin(n: usize) -> Self {
        let dim = 1usize << n;
        let space = SuperSpace::from_parities(
            (0..dim as u64).map(|m| (m.count_ones() % 2) as u8).collect(),
        );
        let mut gens = Vec::new();
        for i in 1..n {
            let phi = crate::clifford::spin_image(n, i).unwrap();
            let mut m = Mat::zero(dim, dim);
            for col in 0..dim as u64 {
                let x = CliffordElement::monomial(n, col, CycNumber::one());
                let prod = cl_mul(&phi, &x).unwrap();
                for (mask, c) in prod.terms() {
                    m.m[*mask as usize][col as usize] = c.clone();
                }
            }
            gens.push(SuperMap::new(space.clone(), space.clone(), 1, m).unwrap());
        }
        SRep::new(n, space, gens).expect("spin embedding satisfies the relations")
    }

    /// Action of a group element in normal form.
    pub fn action_of(&self, g: &SpinGroupElement) -> SuperMap {
        assert_eq!(g.n(), self.n);
        let mut acc = SuperMap::identity(&self.space);
        for i in g.perm.canonical_word() {
            acc = acc.compose(&self.gens[i - 1]);
        }
        if g.sign == 1 {
            acc = acc.scaled(&(-CycNumber::one()));
        }
        acc
    }

    /// Same matrices on the parity-flipped space: `Pi_r^k`.
    pub fn pi_flip(&self, k: usize) -> SRep {
        if k % 2 == 0 {
            return self.clone();
        }
        let space = self.space.flipped();
        let gens = self
            .gens
            .iter()
            .map(|g| SuperMap::new(space.clone(), space.clone(), 1, g.mat.clone()).unwrap())
            .collect();
        SRep {
            n: self.n,
            space,
            gens,
        }
    }
}

fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(v: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
        if k == v.len() {
            out.push(Perm::from_one_line(v));
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            rec(v, k + 1, out);
            v.swap(k, i);
        }
    }
    let mut idx: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    rec(&mut idx, 0, &mut out);
    out.sort();
    out
}

/// The minimal-length `(i, j)`-shuffle transversal of the Young subgroup,
/// ordered lexicographically: permutations increasing on both blocks.
pub fn shuffles(i: usize, j: usize) -> Vec<Perm> {
    let n = i + j;
    let mut out = Vec::new();
    // choose the image set of the first block
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        need: usize,
        n: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<Perm>,
        i: usize,
    ) {
        if subset.len() == need {
            let mut line = vec![0usize; n];
            let mut rest: Vec<usize> = (1..=n).filter(|v| !subset.contains(v)).collect();
            rest.sort();
            for (k, &v) in subset.iter().enumerate() {
                line[k] = v;
            }
            for (k, &v) in rest.iter().enumerate() {
                line[i + k] = v;
            }
            out.push(Perm::from_one_line(&line));
            return;
        }
        for v in start..=n {
            subset.push(v);
            rec(v + 1, need, n, subset, out, i);
            subset.pop();
        }
    }
    rec(1, i, n, &mut subset, &mut out, i);
    out.sort();
    out
}

/// Factor a normal form `x` as `c^e lift(sh) j(u1, u2)` against the
/// `(i, j)`-Young subgroup, with `sh` the block-increasing coset
/// representative.
pub fn young_factor(
    x: &SpinGroupElement,
    i: usize,
) -> (Perm, SpinGroupElement, SpinGroupElement, u8) {
    let n = x.n();
    let _j = n - i;
    // shuffle part: sort the images of each block
    let mut first: Vec<usize> = (1..=i).map(|k| x.perm.apply(k)).collect();
    first.sort();
    let mut second: Vec<usize> = ((i + 1)..=n).map(|k| x.perm.apply(k)).collect();
    second.sort();
    let mut line = first;
    line.extend(second);
    let sh = Perm::from_one_line(&line);
    let sh_lift = SpinGroupElement::canonical_lift(sh.clone(), x.flavor);
    let a = group_mul(&group_inv(&sh_lift), x).unwrap();
    // a.perm lies in the Young subgroup; split it
    let u1_line: Vec<usize> = (1..=i).map(|k| a.perm.apply(k)).collect();
    let u2_line: Vec<usize> = ((i + 1)..=n).map(|k| a.perm.apply(k) - i).collect();
    let u1 = SpinGroupElement::canonical_lift(Perm::from_one_line(&u1_line), x.flavor);
    let u2 = SpinGroupElement::canonical_lift(Perm::from_one_line(&u2_line), x.flavor);
    let b = j_embed(&u1, &u2).unwrap();
    debug_assert_eq!(b.perm, a.perm);
    let e = a.sign ^ b.sign;
    (sh, u1, u2, e)
}

/// The induction tensor product: the rank-`(i+j)` representation on the
/// shuffle basis `(sh, v, w)`, basis index `((s * dimV) + p) * dimW + q`,
/// parity `|sh| + |v| + |w|`.
pub fn induce_product(v: &SRep, w: &SRep) -> SRep {
    let (i, j) = (v.n, w.n);
    let n = i + j;
    let shs = shuffles(i, j);
    let dv = v.space.total();
    let dw = w.space.total();
    let mut parities = Vec::with_capacity(shs.len() * dv * dw);
    for sh in &shs {
        for p in 0..dv {
            for q in 0..dw {
                parities.push(sh.parity() ^ v.space.parity(p) ^ w.space.parity(q));
            }
        }
    }
    let space = SuperSpace::from_parities(parities);
    let dim = space.total();
    let inner = v.space.tensor(&w.space);
    let mut gens = Vec::new();
    for k in 1..n {
        let s = SpinGroupElement::generator(n, SpinFlavor::SPIN, k).unwrap();
        let mut m = Mat::zero(dim, dim);
        for (sidx, sh) in shs.iter().enumerate() {
            let x = group_mul(
                &s,
                &SpinGroupElement::canonical_lift(sh.clone(), SpinFlavor::SPIN),
            )
            .unwrap();
            let (sh2, u1, u2, e) = young_factor(&x, i);
            let s2 = shs.binary_search(&sh2).unwrap();
            // (u1, u2) acts on v (x) w with the Koszul sign carried by
            // tensor_map: (g,h)(v (x) w) = (-1)^(|v||h|) gv (x) hw
            let act = tensor_map(&v.action_of(&u1), &w.action_of(&u2));
            for col_in in 0..(dv * dw) {
                for row_in in 0..(dv * dw) {
                    if act.mat.m[row_in][col_in].is_zero() {
                        continue;
                    }
                    let mut c = act.mat.m[row_in][col_in].clone();
                    if e == 1 {
                        c = -c;
                    }
                    m.m[s2 * dv * dw + row_in][sidx * dv * dw + col_in] = c;
                }
            }
        }
        let _ = &inner;
        gens.push(SuperMap::new(space.clone(), space.clone(), 1, m).unwrap());
    }
    SRep::new(n, space, gens).expect("induced actions satisfy the relations")
}

/// The supersymmetry `b(V, W): V (x) W -> Pi_r^(nm)(W (x) V)`,
/// `g (x) v (x) w -> (-1)^(nm(|v|+|w|) + |v||w|) g tau~(n,m)^-1 (x) w (x) v (x) pi^(nm)`.
pub fn species_symmetry(v: &SRep, w: &SRep) -> SuperMap {
    let (n, m) = (v.n, w.n);
    let k = n * m;
    let source = induce_product(v, w);
    let target = induce_product(w, v).pi_flip(k);
    let shs_vw = shuffles(n, m);
    let shs_wv = shuffles(m, n);
    let (dv, dw) = (v.space.total(), w.space.total());
    let tau_inv = group_inv(&tau_tilde(n, m));
    let mut mat = Mat::zero(target.space.total(), source.space.total());
    for (sidx, sh) in shs_vw.iter().enumerate() {
        let x = group_mul(
            &SpinGroupElement::canonical_lift(sh.clone(), SpinFlavor::SPIN),
            &tau_inv,
        )
        .unwrap();
        let (sh2, u1, u2, e) = young_factor(&x, m);
        let s2 = shs_wv.binary_search(&sh2).unwrap();
        // (u1, u2) acts on w (x) v
        let act = tensor_map(&w.action_of(&u1), &v.action_of(&u2));
        for p in 0..dv {
            for q in 0..dw {
                let col = (sidx * dv + p) * dw + q;
                // sign (-1)^(nm(|v|+|w|) + |v||w|)
                let pv = v.space.parity(p) as usize;
                let pw = w.space.parity(q) as usize;
                let mut sign = (k * (pv + pw) + pv * pw) % 2;
                if e == 1 {
                    sign ^= 1;
                }
                // route through the action on (w_q (x) v_p)
                let col_in = q * dv + p;
                for row_in in 0..(dv * dw) {
                    if act.mat.m[row_in][col_in].is_zero() {
                        continue;
                    }
                    let mut c = act.mat.m[row_in][col_in].clone();
                    if sign == 1 {
                        c = -c;
                    }
                    mat.m[s2 * dv * dw + row_in][col] = c;
                }
            }
        }
    }
    SuperMap::new(source.space, target.space.clone(), 0, mat)
        .expect("the braiding is even on the flipped target")
}

/// The associator `U (x) (V (x) W) -> (U (x) V) (x) W` between the two
/// iterated shuffle bases.
pub fn species_associator(u: &SRep, v: &SRep, w: &SRep) -> SuperMap {
    let (i, j, k) = (u.n, v.n, w.n);
    let n = i + j + k;
    let right = induce_product(u, &induce_product(v, w));
    let left = induce_product(&induce_product(u, v), w);
    let shs_outer_r = shuffles(i, j + k);
    let shs_inner_r = shuffles(j, k);
    let shs_outer_l = shuffles(i + j, k);
    let shs_inner_l = shuffles(i, j);
    let (du, dv, dw) = (u.space.total(), v.space.total(), w.space.total());
    let mut mat = Mat::zero(left.space.total(), right.space.total());
    for (so, sh_o) in shs_outer_r.iter().enumerate() {
        for (si, sh_i) in shs_inner_r.iter().enumerate() {
            // X = lift(sh_o) . j(1, lift(sh_i)) in rank n
            let inner_lift = SpinGroupElement::canonical_lift(sh_i.clone(), SpinFlavor::SPIN);
            let embedded = j_embed(
                &SpinGroupElement::identity(i, SpinFlavor::SPIN),
                &inner_lift,
            )
            .unwrap();
            let x = group_mul(
                &SpinGroupElement::canonical_lift(sh_o.clone(), SpinFlavor::SPIN),
                &embedded,
            )
            .unwrap();
            // factor against (i+j, k), then the i+j part against (i, j)
            let (sh_a, b12, c3, e1) = young_factor(&x, i + j);
            let (sh_t, u1, u2, e2) = young_factor(&b12, i);
            let sa = shs_outer_l.binary_search(&sh_a).unwrap();
            let st = shs_inner_l.binary_search(&sh_t).unwrap();
            // Young action of (u1, u2, c3) on u (x) v (x) w
            let act = tensor_map(
                &tensor_map(&u.action_of(&u1), &v.action_of(&u2)),
                &w.action_of(&c3),
            );
            let e = e1 ^ e2;
            for col_in in 0..(du * dv * dw) {
                // right-iterated basis column: (so, p, (si, q, r))
                let p = col_in / (dv * dw);
                let q = (col_in / dw) % dv;
                let r = col_in % dw;
                let col = ((so * du + p) * shs_inner_r.len() + si) * dv * dw + q * dw + r;
                // pulling the inner coset lift out of the second fiber slot
                // passes the U-vector: Koszul sign (-1)^(|u_p| |sh_i|)
                let pull = u.space.parity(p) & sh_i.parity();
                for row_in in 0..(du * dv * dw) {
                    if act.mat.m[row_in][col_in].is_zero() {
                        continue;
                    }
                    // left-iterated basis row: (sa, (st, p', q'), r')
                    let p2 = row_in / (dv * dw);
                    let q2 = (row_in / dw) % dv;
                    let r2 = row_in % dw;
                    let row = ((sa * shs_inner_l.len() + st) * du + p2) * dv * dw
                        + q2 * dw
                        + r2;
                    let mut c = act.mat.m[row_in][col_in].clone();
                    if e ^ pull == 1 {
                        c = -c;
                    }
                    mat.m[row][col] = c;
                }
            }
        }
    }
    let _ = n;
    SuperMap::new(right.space, left.space, 0, mat).expect("associator is even")
}

/// Induced morphism `Ind(f (x) g)` on the product of `v` and `w`:
/// block-diagonal over shuffles with sign `(-1)^((|f|+|g>)|sh|)`.
pub fn induced_morphism(v: &SRep, w: &SRep, f: &SuperMap, g: &SuperMap) -> SuperMap {
    let shs = shuffles(v.n, w.n);
    let inner = tensor_map(f, g);
    let p = inner.parity;
    let src = induce_product_space_with(v, w, &f.source, &g.source);
    let tgt = induce_product_space_with(v, w, &f.target, &g.target);
    let d_in = inner.source.total();
    let d_out = inner.target.total();
    let mut mat = Mat::zero(tgt.total(), src.total());
    for (s, sh) in shs.iter().enumerate() {
        let sign = p & sh.parity();
        for col in 0..d_in {
            for row in 0..d_out {
                if inner.mat.m[row][col].is_zero() {
                    continue;
                }
                let mut c = inner.mat.m[row][col].clone();
                if sign == 1 {
                    c = -c;
                }
                mat.m[s * d_out + row][s * d_in + col] = c;
            }
        }
    }
    SuperMap::new(src, tgt, p, mat).expect("induced morphism is homogeneous")
}

/// The shuffle-graded space over arbitrary fiber spaces (used when the fiber
/// carries flipped parities).
fn induce_product_space_with(
    v: &SRep,
    w: &SRep,
    fib_v: &SuperSpace,
    fib_w: &SuperSpace,
) -> SuperSpace {
    let shs = shuffles(v.n, w.n);
    let mut parities = Vec::new();
    for sh in &shs {
        for p in 0..fib_v.total() {
            for q in 0..fib_w.total() {
                parities.push(sh.parity() ^ fib_v.parity(p) ^ fib_w.parity(q));
            }
        }
    }
    SuperSpace::from_parities(parities)
}

/// `Ind(Pi^k(M) (x) W) -> Pi^k(Ind(M (x) W))`: float the parity line past
/// the right fiber, with sign `(-1)^(k |w|)`.
pub fn float_pi_out(m_rep: &SRep, w: &SRep, k: usize) -> SuperMap {
    let shs = shuffles(m_rep.n, w.n);
    let src = induce_product_space_with(m_rep, w, &m_rep.space.flipped_n(k as i64), &w.space);
    let tgt = induce_product(m_rep, w).space.flipped_n(k as i64);
    let (dm, dw) = (m_rep.space.total(), w.space.total());
    let mut mat = Mat::zero(tgt.total(), src.total());
    for s in 0..shs.len() {
        for p in 0..dm {
            for q in 0..dw {
                let idx = (s * dm + p) * dw + q;
                let mut c = CycNumber::one();
                if k % 2 == 1 && w.space.parity(q) == 1 {
                    c = -c;
                }
                mat.m[idx][idx] = c;
            }
        }
    }
    SuperMap::new(src, tgt, 0, mat).expect("float is even")
}

/// The iterated `xi_r^(0,k)`: `v -> (-1)^(C(k,2)) (-1)^(k|v|) v (x) pi^k`.
pub fn xi_r_power(space: &SuperSpace, k: usize) -> SuperMap {
    let global = (k * (k.saturating_sub(1)) / 2) % 2;
    let mut out = parity_line_strip(space, k);
    if global == 1 {
        out = out.scaled(&(-CycNumber::one()));
    }
    out
}

/// Attach `k` parity lines simultaneously: `v -> (-1)^(k|v|) v (x) pi^k`.
/// This is the normalization under which the type I and type II braidings
/// correspond (each line costs the sign of crossing `v` once).
pub fn parity_line_strip(space: &SuperSpace, k: usize) -> SuperMap {
    let mut mat = Mat::zero(space.total(), space.total());
    for i in 0..space.total() {
        let mut c = CycNumber::one();
        if k % 2 == 1 && space.parity(i) == 1 {
            c = -c;
        }
        mat.m[i][i] = c;
    }
    SuperMap::new(
        space.clone(),
        space.flipped_n(k as i64),
        (k % 2) as u8,
        mat,
    )
    .unwrap()
}

/// The type II form of the species braiding, stripped of its parity lines.
pub fn species_symmetry_type_ii(v: &SRep, w: &SRep) -> SuperMap {
    let k = v.n * w.n;
    let beta = species_symmetry(v, w);
    let wv = induce_product(w, v);
    let strip = parity_line_strip(&wv.space, k).inverse().unwrap();
    strip.compose(&beta)
}

/// The direct formula for the type II braiding:
/// `g (x) v (x) w -> (-1)^(|v||w| + nm|g| + nm) g tau~^-1 (x) w (x) v`.
pub fn species_symmetry_type_ii_direct(v: &SRep, w: &SRep) -> SuperMap {
    let (n, m) = (v.n, w.n);
    let k = n * m;
    let source = induce_product(v, w);
    let target = induce_product(w, v);
    let shs_vw = shuffles(n, m);
    let shs_wv = shuffles(m, n);
    let (dv, dw) = (v.space.total(), w.space.total());
    let tau_inv = group_inv(&tau_tilde(n, m));
    let mut mat = Mat::zero(target.space.total(), source.space.total());
    for (sidx, sh) in shs_vw.iter().enumerate() {
        let x = group_mul(
            &SpinGroupElement::canonical_lift(sh.clone(), SpinFlavor::SPIN),
            &tau_inv,
        )
        .unwrap();
        let (sh2, u1, u2, e) = young_factor(&x, m);
        let s2 = shs_wv.binary_search(&sh2).unwrap();
        let act = tensor_map(&w.action_of(&u1), &v.action_of(&u2));
        for p in 0..dv {
            for q in 0..dw {
                let col = (sidx * dv + p) * dw + q;
                let pv = v.space.parity(p) as usize;
                let pw = w.space.parity(q) as usize;
                let mut sign = (pv * pw + k * (sh.parity() as usize) + k) % 2;
                if e == 1 {
                    sign ^= 1;
                }
                let col_in = q * dv + p;
                for row_in in 0..(dv * dw) {
                    if act.mat.m[row_in][col_in].is_zero() {
                        continue;
                    }
                    let mut c = act.mat.m[row_in][col_in].clone();
                    if sign == 1 {
                        c = -c;
                    }
                    mat.m[s2 * dv * dw + row_in][col] = c;
                }
            }
        }
    }
    SuperMap::new(
        source.space,
        target.space,
        (k % 2) as u8,
        mat,
    )
    .expect("type II braiding is homogeneous of degree nm")
}

/// `b*(V,W) = (-1)^(C(nm,2)) zeta_4^(nm) b_II(V,W)`, a type II supersymmetry
/// for the factor system A.
pub fn beta_star(v: &SRep, w: &SRep) -> SuperMap {
    let k = (v.n * w.n) as i64;
    let mut c = cyc_root(4, k).unwrap();
    if (k * (k - 1) / 2).rem_euclid(2) == 1 {
        c = -c;
    }
    species_symmetry_type_ii_direct(v, w).scaled(&c)
}

/// Intertwining check: `f . rho_1(s~_i) = rho_2(s~_i) . f` for an even map.
pub fn intertwines(r1: &SRep, r2: &SRep, f: &SuperMap) -> bool {
    assert_eq!(r1.n, r2.n);
    for (g1, g2) in r1.gens.iter().zip(r2.gens.iter()) {
        if f.compose(g1) != g2.compose(f) {
            return false;
        }
    }
    true
}

/// Diagnostic variant returning (exactly equal, equal up to -1).
pub fn hexagon_h1_compare(u: &SRep, v: &SRep, w: &SRep) -> (bool, bool) {
    let (upper, lower) = hexagon_h1_paths(u, v, w);
    (
        upper.mat == lower.mat,
        upper.mat == lower.mat.scaled(&(-CycNumber::one())),
    )
}

/// The hexagon H1' for the type Ia supersymmetry, following the two
/// composition chains through the iterated shuffle bases.
pub fn species_hexagon_h1(u: &SRep, v: &SRep, w: &SRep) -> bool {
    let (upper, lower) = hexagon_h1_paths(u, v, w);
    upper.mat == lower.mat
}


/// Test-support accessor for the two hexagon composition chains.
pub fn hexagon_h1_paths_pub(u: &SRep, v: &SRep, w: &SRep) -> (SuperMap, SuperMap) {
    hexagon_h1_paths(u, v, w)
}

fn hexagon_h1_paths(u: &SRep, v: &SRep, w: &SRep) -> (SuperMap, SuperMap) {
    let (m, n, p) = (u.n, v.n, w.n);
    let vw = induce_product(v, w);
    let uv = induce_product(u, v);
    let wu = induce_product(w, u);

    // upper: a^-1, then b(U, VW), then Pi^(m(n+p))(a^-1(V,W,U))
    let a_uvw_inv = species_associator(u, v, w).inverse().unwrap();
    let b_u_vw = species_symmetry(u, &vw);
    let a_vwu_inv = species_associator(v, w, u).inverse().unwrap();
    let k_total = m * (n + p);
    let a_vwu_inv_flipped = pi_transport(&a_vwu_inv, k_total);
    let upper = a_vwu_inv_flipped.compose(&b_u_vw).compose(&a_uvw_inv);

    // lower: Ind(b(U,V) x 1), float, Pi^(mn)(a^-1(V,U,W)),
    // Pi^(mn)(Ind(1 x b(U,W))), inner float is the identity relabel
    let b_uv = species_symmetry(u, &v.clone());
    let id_w = SuperMap::identity(&w.space);
    let l1 = induced_morphism(&uv, w, &b_uv, &id_w);
    let vu_flip = induce_product(v, u).pi_flip(m * n);
    let l2 = float_pi_out(&vu_flip_base(v, u), w, m * n);
    let _ = vu_flip;
    let a_vuw_inv = species_associator(v, u, w).inverse().unwrap();
    let l3 = pi_transport(&a_vuw_inv, m * n);
    let id_v = SuperMap::identity(&v.space);
    let b_uw = species_symmetry(u, &w.clone());
    let l4_core = induced_morphism_right(v, &induce_product(u, w), &id_v, &b_uw);
    let l4 = pi_transport(&l4_core, m * n);
    let lower = l4.compose(&l3).compose(&l2).compose(&l1);

    // both paths end at Pi^(m(n+p))(Ind(V (x) Ind(W (x) U))) up to the
    // final identity relabel of nested parity lines
    let _ = &wu;
    (upper, lower)
}

fn vu_flip_base(v: &SRep, u: &SRep) -> SRep {
    induce_product(v, u)
}

/// Same matrix viewed between `Pi^k`-flipped spaces.
fn pi_transport(f: &SuperMap, k: usize) -> SuperMap {
    SuperMap::new(
        f.source.flipped_n(k as i64),
        f.target.flipped_n(k as i64),
        f.parity,
        f.mat.clone(),
    )
    .expect("parity transport preserves homogeneity")
}

/// Induced morphism on `Ind(V (x) N)` acting on the right fiber.
fn induced_morphism_right(v: &SRep, n_rep: &SRep, f: &SuperMap, g: &SuperMap) -> SuperMap {
    induced_morphism(v, n_rep, f, g)
}

/// The type I symmetry condition: `Pi^k(b(W,V)) . b(V,W)` is the scalar
/// `(-1)^(C(n,2) C(m,2))` times the identity relabeling `V(x)W = Pi^(2k)(V(x)W)`.
pub fn species_double_braiding_scalar_ok(v: &SRep, w: &SRep) -> bool {
    let k = v.n * w.n;
    let b1 = species_symmetry(v, w);
    let b2 = pi_transport(&species_symmetry(w, v), k);
    let composite = b2.compose(&b1);
    let mut expect = Mat::identity(composite.mat.rows);
    let e = crate::factor_systems::binom2(v.n as i64) & crate::factor_systems::binom2(w.n as i64);
    if e == 1 {
        expect = expect.scaled(&(-CycNumber::one()));
    }
    composite.mat == expect
}

/// Naturality of the type I braiding: for homogeneous `f`, `g`,
/// `Pi^k(Ind(g x f)) . b = (-1)^(|f||g|) b . Ind(f x g)`.
pub fn species_naturality_ok(v: &SRep, w: &SRep, f: &SuperMap, g: &SuperMap) -> bool {
    let k = v.n * w.n;
    let beta = species_symmetry(v, w);
    let lhs = beta.compose(&induced_morphism(v, w, f, g));
    let rhs_core = pi_transport(&induced_morphism(w, v, g, f), k).compose(&beta);
    let mut rhs = rhs_core;
    if f.parity & g.parity == 1 {
        rhs = rhs.scaled(&(-CycNumber::one()));
    }
    lhs.mat == rhs.mat
}

/// Signed right multiplication by a canonical lift: a morphism of the left
/// regular representation of parity `|h|`.
pub fn regular_right_multiplication(n: usize, h: &SpinGroupElement) -> SuperMap {
    let perms = all_perms(n);
    let space = SuperSpace::from_parities(perms.iter().map(|x| x.parity()).collect());
    let mut m = Mat::zero(perms.len(), perms.len());
    for (col, x) in perms.iter().enumerate() {
        let lift = SpinGroupElement::canonical_lift(x.clone(), SpinFlavor::SPIN);
        let prod = group_mul(&lift, h).unwrap();
        let row = perms.binary_search(&prod.perm).unwrap();
        let mut c = if prod.sign == 1 {
            -CycNumber::one()
        } else {
            CycNumber::one()
        };
        // the sign (-1)^(|h||x|) makes right multiplication a morphism
        if h.parity() & x.parity() == 1 {
            c = -c;
        }
        m.m[row][col] = c;
    }
    SuperMap::new(space.clone(), space, h.parity(), m).unwrap()
}

// ---------------------------------------------------------------------------
// Queer-algebra commutant on tensor powers of k^(n|n)
// ---------------------------------------------------------------------------

/// Basis data for `k^(n|n)` with the odd map `xi(u_i) = ubar_i`,
/// `xi(ubar_i) = 2 u_i`.
pub struct QueerSetup {
    pub n: usize,
    pub space: SuperSpace,
    pub xi: SuperMap,
}

pub fn queer_setup(n: usize) -> QueerSetup {
    let space = SuperSpace::standard(n, n);
    let mut m = Mat::zero(2 * n, 2 * n);
    for i in 0..n {
        m.m[n + i][i] = CycNumber::one();
        m.m[i][n + i] = CycNumber::from_int(2);
    }
    QueerSetup {
        n,
        space: space.clone(),
        xi: SuperMap::new(space.clone(), space, 1, m).unwrap(),
    }
}

/// Basis of the supercommutant of `xi` in `gl(n|n)`:
/// even `diag(A, A)` and odd `[[0, -2B], [B, 0]]`.
pub fn queer_algebra_basis(setup: &QueerSetup) -> Vec<SuperMap> {
    let n = setup.n;
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut m = Mat::zero(2 * n, 2 * n);
            m.m[a][b] = CycNumber::one();
            m.m[n + a][n + b] = CycNumber::one();
            out.push(SuperMap::new(setup.space.clone(), setup.space.clone(), 0, m).unwrap());
        }
    }
    for a in 0..n {
        for b in 0..n {
            let mut m = Mat::zero(2 * n, 2 * n);
            m.m[n + a][b] = CycNumber::one();
            m.m[a][n + b] = CycNumber::from_int(-2);
            out.push(SuperMap::new(setup.space.clone(), setup.space.clone(), 1, m).unwrap());
        }
    }
    out
}

/// Left Leibniz action of a homogeneous `x` on the `d`-th tensor power.
pub fn leibniz_action(setup: &QueerSetup, x: &SuperMap, d: usize) -> SuperMap {
    let mut total: Option<SuperMap> = None;
    for slot in 0..d {
        let mut term: Option<SuperMap> = None;
        for i in 0..d {
            let f = if i == slot {
                x.clone()
            } else {
                SuperMap::identity(&setup.space)
            };
            term = Some(match term {
                None => f,
                Some(t) => tensor_map(&t, &f),
            });
        }
        let t = term.unwrap();
        total = Some(match total {
            None => t,
            Some(acc) => acc.add(&t),
        });
    }
    total.unwrap()
}

/// Right action of the `i`-th odd generator on the `d`-th tensor power:
/// `xi` applied in slot `i` with the graded crossing signs on the leading
/// factors, `(v_1 (x) ... (x) v_d) a_i = (-1)^(|v_1| + ... + |v_(i-1)|)
/// v_1 (x) ... xi(v_i) ... (x) v_d`. This is the odd slot operator the
/// Koszul tensor of maps produces; it generates a right Clifford action
/// that supercommutes with the left Leibniz action.
pub fn right_alpha_action(setup: &QueerSetup, i: usize, d: usize) -> SuperMap {
    let mut acc: Option<SuperMap> = None;
    for slot in 1..=d {
        let f = if slot == i {
            setup.xi.clone()
        } else {
            SuperMap::identity(&setup.space)
        };
        acc = Some(match acc {
            None => f,
            Some(t) => tensor_map(&t, &f),
        });
    }
    acc.unwrap()
}

/// Right action of the adjacent transposition: the Koszul swap of slots
/// `i, i+1`.
pub fn right_swap_action(setup: &QueerSetup, i: usize, d: usize) -> SuperMap {
    let mut acc: Option<SuperMap> = None;
    let mut slot = 0;
    while slot < d {
        let f = if slot == i - 1 {
            slot += 2;
            symmetry(SwapKind::Tau, &setup.space, &setup.space)
        } else {
            slot += 1;
            SuperMap::identity(&setup.space)
        };
        acc = Some(match acc {
            None => f,
            Some(t) => tensor_map(&t, &f),
        });
    }
    acc.unwrap()
}

/// Supercommutation of the left queer action with the right Hecke-Clifford
/// generators on `(k^(n|n))^(x d)`.
pub fn sergeev_commutant_check(n: usize, d: usize) -> bool {
    let setup = queer_setup(n);
    let qbasis = queer_algebra_basis(&setup);
    let mut rights: Vec<(SuperMap, u8)> = Vec::new();
    for i in 1..d {
        rights.push((right_swap_action(&setup, i, d), 0));
    }
    for i in 1..=d {
        rights.push((right_alpha_action(&setup, i, d), 1));
    }
    for x in &qbasis {
        let lx = leibniz_action(&setup, x, d);
        for (r, pr) in &rights {
            // (X v) h = (-1)^(|X||h|) X (v h)
            let lhs = r.compose(&lx);
            let mut rhs = lx.compose(r);
            if x.parity & pr == 1 {
                rhs = rhs.scaled(&(-CycNumber::one()));
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::zeta4;

    #[test]
    fn srep_validation() {
        // n = 2, space (1|1), odd involution: a valid s-representation
        let space = SuperSpace::standard(1, 1);
        let mut m = Mat::zero(2, 2);
        m.m[1][0] = CycNumber::one();
        m.m[0][1] = CycNumber::one();
        let nu = SuperMap::new(space.clone(), space.clone(), 1, m).unwrap();
        assert!(SRep::new(2, space.clone(), vec![nu]).is_ok());
        // an even candidate is rejected
        let id = SuperMap::identity(&space);
        assert!(matches!(
            SRep::new(2, space, vec![id]),
            Err(SpeciesError::ParityViolation { .. })
        ));
    }

    #[test]
    fn regular_and_basic_spin_are_valid() {
        for n in 1..=4 {
            let r = SRep::regular(n);
            assert_eq!(r.space.total(), (1..=n).product::<usize>());
        }
        let b = SRep::basic_spin(3);
        assert_eq!(b.space.total(), 8);
    }

    #[test]
    fn induced_dimension() {
        let v = SRep::regular(1);
        let w = SRep::regular(2);
        let ind = induce_product(&v, &w);
        // C(3,1) * 1 * 2 = 6
        assert_eq!(ind.space.total(), 6);
        let two = induce_product(&SRep::trivial(1), &SRep::trivial(1));
        assert_eq!(two.space.total(), 2);
        assert_eq!(two.gens[0].parity, 1);
    }

    #[test]
    fn associator_is_even_iso_and_intertwines() {
        for (i, j, k) in [(1usize, 2usize, 1usize), (2, 1, 1), (1, 1, 2), (2, 2, 1)] {
            let u = SRep::regular(i);
            let v = SRep::regular(j);
            let w = SRep::regular(k);
            let a = species_associator(&u, &v, &w);
            assert_eq!(a.parity, 0);
            assert!(a.inverse().is_some());
            let right = induce_product(&u, &induce_product(&v, &w));
            let left = induce_product(&induce_product(&u, &v), &w);
            assert!(intertwines(&right, &left, &a), "({},{},{})", i, j, k);
        }
    }

    #[test]
    fn symmetry_is_even_iso_of_sreps() {
        for (n, m) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
            let v = SRep::regular(n);
            let w = SRep::regular(m);
            let b = species_symmetry(&v, &w);
            assert_eq!(b.parity, 0, "({}, {})", n, m);
            assert!(b.inverse().is_some());
            let src = induce_product(&v, &w);
            let tgt = induce_product(&w, &v).pi_flip(n * m);
            assert!(intertwines(&src, &tgt, &b), "({}, {})", n, m);
        }
    }

    #[test]
    fn rank_zero_symmetry_is_plain_swap() {
        let v = SRep::trivial(0);
        let w = SRep::regular(2);
        let b = species_symmetry(&v, &w);
        // with an empty factor the braiding is a permutation relabeling
        assert_eq!(b.mat.rank(), b.mat.rows);
        assert_eq!(b.parity, 0);
    }

    #[test]
    fn one_dim_braiding_squares_to_plus_one() {
        let v = SRep::trivial(1);
        let b = species_symmetry(&v, &v.clone());
        assert!(species_double_braiding_scalar_ok(&v, &v.clone()));
        // b itself swaps the two shuffle lines with +1 coefficients
        assert_eq!(b.mat.m[0][1], CycNumber::one());
        assert_eq!(b.mat.m[1][0], CycNumber::one());
    }

    #[test]
    fn double_braiding_scalar_small() {
        for (n, m) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2), (3, 1)] {
            let v = SRep::regular(n);
            let w = SRep::regular(m);
            assert!(species_double_braiding_scalar_ok(&v, &w), "({}, {})", n, m);
        }
    }

    #[test]
    fn hexagon_h1_small() {
        let reps: Vec<SRep> = vec![SRep::regular(1), SRep::regular(2)];
        for u in &reps {
            for v in &reps {
                for w in &reps {
                    if u.n + v.n + w.n > 4 {
                        continue;
                    }
                    assert!(
                        species_hexagon_h1(u, v, w),
                        "hexagon fails at ({}, {}, {})",
                        u.n,
                        v.n,
                        w.n
                    );
                }
            }
        }
    }

    #[test]
    fn naturality_signed() {
        let n = 2;
        let v = SRep::regular(n);
        let w = SRep::regular(n);
        // signed right multiplications of each parity
        let h_odd = SpinGroupElement::generator(n, SpinFlavor::SPIN, 1).unwrap();
        let f_odd = regular_right_multiplication(n, &h_odd);
        let f_even = regular_right_multiplication(
            n,
            &SpinGroupElement::identity(n, SpinFlavor::SPIN).times_c(1),
        );
        for (f, g) in [
            (&f_even, &f_even),
            (&f_odd, &f_even),
            (&f_even, &f_odd),
            (&f_odd, &f_odd),
        ] {
            assert!(species_naturality_ok(&v, &w, f, g));
        }
    }

    #[test]
    fn type_ii_conversion_matches_direct_formula() {
        for (n, m) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
            let v = SRep::regular(n);
            let w = SRep::regular(m);
            let converted = species_symmetry_type_ii(&v, &w);
            let direct = species_symmetry_type_ii_direct(&v, &w);
            assert_eq!(converted.mat, direct.mat, "({}, {})", n, m);
            // round trip back to type I
            let wv = induce_product(&w, &v);
            let back = parity_line_strip(&wv.space, n * m).compose(&direct);
            assert_eq!(back.mat, species_symmetry(&v, &w).mat);
        }
        // rank-0 pair: conversion leaves the braiding untouched
        let v0 = SRep::trivial(0);
        let w = SRep::regular(2);
        assert_eq!(
            species_symmetry_type_ii(&v0, &w).mat,
            species_symmetry(&v0, &w).mat
        );
    }

    #[test]
    fn beta_star_coefficient_and_double_braiding() {
        let v = SRep::trivial(1);
        // m = n = 1: coefficient zeta_4
        let bs = beta_star(&v, &v.clone());
        let bii = species_symmetry_type_ii_direct(&v, &v.clone());
        assert_eq!(bs.mat, bii.mat.scaled(&zeta4()));
        // double braiding with beta* gives the sharp values of A
        for (n, m) in [(1usize, 1usize), (1, 2), (2, 2)] {
            let a = SRep::regular(n);
            let b = SRep::regular(m);
            let b1 = beta_star(&a, &b);
            let b2 = beta_star(&b, &a);
            let composite = b2.compose(&b1);
            let e = crate::factor_systems::binom2(n as i64)
                & crate::factor_systems::binom2(m as i64);
            let mut expect = Mat::identity(composite.mat.rows);
            if e == 1 {
                expect = expect.scaled(&(-CycNumber::one()));
            }
            assert_eq!(composite.mat, expect, "({}, {})", n, m);
        }
    }

    #[test]
    fn sergeev_small() {
        assert!(sergeev_commutant_check(1, 1));
        assert!(sergeev_commutant_check(1, 2));
        assert!(sergeev_commutant_check(2, 2));
    }

    #[test]
    fn right_module_hecke_relation() {
        // v.(s_j a_i) = v.(a_(s_j(i)) s_j): the right actions satisfy the
        // defining semidirect relation
        let setup = queer_setup(1);
        let d = 3;
        for j in 1..d {
            let rs = right_swap_action(&setup, j, d);
            for i in 1..=d {
                let si = if i == j {
                    j + 1
                } else if i == j + 1 {
                    j
                } else {
                    i
                };
                let lhs = right_alpha_action(&setup, i, d).compose(&rs);
                let rhs = rs.compose(&right_alpha_action(&setup, si, d));
                assert_eq!(lhs, rhs, "j={} i={}", j, i);
            }
        }
        // and the right Clifford relations hold
        let a1 = right_alpha_action(&setup, 1, d);
        let a2 = right_alpha_action(&setup, 2, d);
        let id2 = SuperMap::identity(&a1.source).scaled(&CycNumber::from_int(2));
        assert_eq!(a1.compose(&a1), id2);
        assert!(a1.compose(&a2).add(&a2.compose(&a1)).is_zero());
    }

    #[test]
    fn sergeev_even_part_commutes_plainly() {
        // permutation operators are even, so the S_d part commutes with no
        // signs against all of q(n)
        let setup = queer_setup(2);
        let d = 2;
        let swap = right_swap_action(&setup, 1, d);
        for x in queer_algebra_basis(&setup) {
            let lx = leibniz_action(&setup, &x, d);
            assert_eq!(swap.compose(&lx), lx.compose(&swap));
        }
    }
}
