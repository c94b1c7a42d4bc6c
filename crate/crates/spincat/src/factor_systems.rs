//! B- and S-factor systems over `Z/q`: the named examples, coboundaries,
//! the graded group structure, and exhaustive verification of the six
//! defining conditions.

use crate::scalars::{cyc_root, zeta4, zeta8, CycNumber};
use std::fmt;

/// `C(n,2) mod 2` from the least nonnegative representative.
pub fn binom2(n: i64) -> u8 {
    let n = n.rem_euclid(1 << 20);
    ((n * (n - 1) / 2) % 2) as u8
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorError {
    OddModulus(usize),
    NeedsDivisibility { name: &'static str, needs: usize, q: usize },
    ZeroValue,
    ModulusMismatch,
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::OddModulus(q) => write!(f, "modulus {} must be even", q),
            FactorError::NeedsDivisibility { name, needs, q } => {
                write!(f, "system {} needs {} | q, got q = {}", name, needs, q)
            }
            FactorError::ZeroValue => write!(f, "factor-system values must be nonzero"),
            FactorError::ModulusMismatch => write!(f, "moduli differ"),
        }
    }
}

impl std::error::Error for FactorError {}

/// The named closed-form systems. `Trivial`, `C`, `D` are even; `A`, `B`
/// are odd. `A` needs `4 | q` to make `n -> C(n,2)` well defined.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorName {
    Trivial,
    A,
    B,
    C,
    D,
}

impl FactorName {
    pub fn parity(&self) -> u8 {
        match self {
            FactorName::A | FactorName::B => 1,
            _ => 0,
        }
    }

    pub fn omega1(&self, a: i64, b: i64, c: i64) -> CycNumber {
        match self {
            FactorName::Trivial | FactorName::A | FactorName::B => CycNumber::one(),
            FactorName::C | FactorName::D => sign(a * b * c),
        }
    }

    pub fn omega2(&self, a: i64, b: i64, c: i64) -> CycNumber {
        match self {
            FactorName::Trivial => CycNumber::one(),
            FactorName::A => sign_pow(binom2(c) as i64 * a * b),
            FactorName::B => {
                if odd(a) && odd(b) && odd(c) {
                    zeta4()
                } else {
                    CycNumber::one()
                }
            }
            FactorName::C | FactorName::D => sign(a * b * c),
        }
    }

    pub fn sharp(&self, a: i64, b: i64) -> CycNumber {
        match self {
            FactorName::Trivial | FactorName::C => CycNumber::one(),
            FactorName::A => sign_pow((binom2(a) & binom2(b)) as i64),
            FactorName::B => {
                if odd(a) && odd(b) {
                    zeta8()
                } else {
                    CycNumber::one()
                }
            }
            FactorName::D => sign(a * b),
        }
    }
}

fn odd(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

fn sign(e: i64) -> CycNumber {
    if odd(e) {
        -CycNumber::one()
    } else {
        CycNumber::one()
    }
}

fn sign_pow(e: i64) -> CycNumber {
    sign(e)
}

/// A formal product of named systems, evaluated on integer degrees; used by
/// the coherence checker for both `Z/q` and `Z`-graded instances.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorExpr {
    pub atoms: Vec<FactorName>,
}

impl FactorExpr {
    pub fn named(n: FactorName) -> Self {
        FactorExpr { atoms: vec![n] }
    }

    pub fn product(atoms: &[FactorName]) -> Self {
        FactorExpr {
            atoms: atoms.to_vec(),
        }
    }

    pub fn parity(&self) -> u8 {
        self.atoms.iter().map(|a| a.parity()).sum::<u8>() & 1
    }

    pub fn omega1(&self, a: i64, b: i64, c: i64) -> CycNumber {
        self.atoms
            .iter()
            .fold(CycNumber::one(), |acc, f| &acc * &f.omega1(a, b, c))
    }

    pub fn omega2(&self, a: i64, b: i64, c: i64) -> CycNumber {
        self.atoms
            .iter()
            .fold(CycNumber::one(), |acc, f| &acc * &f.omega2(a, b, c))
    }

    pub fn sharp(&self, a: i64, b: i64) -> CycNumber {
        self.atoms
            .iter()
            .fold(CycNumber::one(), |acc, f| &acc * &f.sharp(a, b))
    }

    pub fn label(&self) -> String {
        if self.atoms.is_empty() {
            return "1".into();
        }
        self.atoms
            .iter()
            .map(|a| format!("{:?}", a))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A dense factor system over `Z/q`: tables `omega1, omega2 : (Z/q)^3 -> k^x`
/// and optionally `sharp : (Z/q)^2 -> k^x`, with a declared parity.
#[derive(Clone, PartialEq, Debug)]
pub struct FactorSystem {
    pub q: usize,
    pub parity: u8,
    omega1: Vec<CycNumber>,
    omega2: Vec<CycNumber>,
    sharp: Option<Vec<CycNumber>>,
}

impl FactorSystem {
    fn idx3(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.q + b) * self.q + c
    }

    fn idx2(&self, a: usize, b: usize) -> usize {
        a * self.q + b
    }

    pub fn omega1(&self, a: usize, b: usize, c: usize) -> &CycNumber {
        &self.omega1[self.idx3(a % self.q, b % self.q, c % self.q)]
    }

    pub fn omega2(&self, a: usize, b: usize, c: usize) -> &CycNumber {
        &self.omega2[self.idx3(a % self.q, b % self.q, c % self.q)]
    }

    pub fn sharp(&self, a: usize, b: usize) -> Option<&CycNumber> {
        self.sharp
            .as_ref()
            .map(|t| &t[self.idx2(a % self.q, b % self.q)])
    }

    pub fn has_sharp(&self) -> bool {
        self.sharp.is_some()
    }

    /// Same tables under a different claimed parity.
    pub fn with_parity(&self, parity: u8) -> Self {
        let mut out = self.clone();
        out.parity = parity & 1;
        out
    }

    /// Drop the sharp table (view as a B-factor system).
    pub fn b_level(&self) -> Self {
        let mut out = self.clone();
        out.sharp = None;
        out
    }

    fn from_fns(
        q: usize,
        parity: u8,
        f1: impl Fn(i64, i64, i64) -> CycNumber,
        f2: impl Fn(i64, i64, i64) -> CycNumber,
        fs: Option<&dyn Fn(i64, i64) -> CycNumber>,
    ) -> Result<Self, FactorError> {
        if q == 0 || q % 2 != 0 {
            return Err(FactorError::OddModulus(q));
        }
        let mut omega1 = Vec::with_capacity(q * q * q);
        let mut omega2 = Vec::with_capacity(q * q * q);
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    let v1 = f1(a as i64, b as i64, c as i64);
                    let v2 = f2(a as i64, b as i64, c as i64);
                    if v1.is_zero() || v2.is_zero() {
                        return Err(FactorError::ZeroValue);
                    }
                    omega1.push(v1);
                    omega2.push(v2);
                }
            }
        }
        let sharp = match fs {
            None => None,
            Some(f) => {
                let mut t = Vec::with_capacity(q * q);
                for a in 0..q {
                    for b in 0..q {
                        let v = f(a as i64, b as i64);
                        if v.is_zero() {
                            return Err(FactorError::ZeroValue);
                        }
                        t.push(v);
                    }
                }
                Some(t)
            }
        };
        Ok(FactorSystem {
            q,
            parity: parity & 1,
            omega1,
            omega2,
            sharp,
        })
    }

    pub fn builtin(name: FactorName, q: usize) -> Result<Self, FactorError> {
        if name == FactorName::A && q % 4 != 0 {
            return Err(FactorError::NeedsDivisibility {
                name: "A",
                needs: 4,
                q,
            });
        }
        Self::from_fns(
            q,
            name.parity(),
            |a, b, c| name.omega1(a, b, c),
            |a, b, c| name.omega2(a, b, c),
            Some(&|a, b| name.sharp(a, b)),
        )
    }

    /// The coboundary of an arbitrary nonzero function `phi`:
    /// an even symmetric S-factor system with
    /// `omega1(r; s, t) = phi(r,s) phi(r,t) / phi(r,s+t)`,
    /// `omega2(r, s; t) = phi(r,t) phi(s,t) / phi(r+s,t)`,
    /// `sharp(r, s) = phi(r,s) phi(s,r)`.
    pub fn coboundary(
        q: usize,
        phi: impl Fn(i64, i64) -> CycNumber,
    ) -> Result<Self, FactorError> {
        let qq = q as i64;
        let get = |x: i64, y: i64| phi(x.rem_euclid(qq), y.rem_euclid(qq));
        for a in 0..qq {
            for b in 0..qq {
                if get(a, b).is_zero() {
                    return Err(FactorError::ZeroValue);
                }
            }
        }
        Self::from_fns(
            q,
            0,
            |r, s, t| {
                (&get(r, s) * &get(r, t))
                    .div(&get(r, s + t))
                    .expect("nonzero phi")
            },
            |r, s, t| {
                (&get(r, t) * &get(s, t))
                    .div(&get(r + s, t))
                    .expect("nonzero phi")
            },
            Some(&|r, s| &get(r, s) * &get(s, r)),
        )
    }

    /// Pointwise product; parity adds mod 2; sharp present when both are.
    pub fn mul(&self, rhs: &Self) -> Result<Self, FactorError> {
        if self.q != rhs.q {
            return Err(FactorError::ModulusMismatch);
        }
        let omega1 = self
            .omega1
            .iter()
            .zip(rhs.omega1.iter())
            .map(|(a, b)| a * b)
            .collect();
        let omega2 = self
            .omega2
            .iter()
            .zip(rhs.omega2.iter())
            .map(|(a, b)| a * b)
            .collect();
        let sharp = match (&self.sharp, &rhs.sharp) {
            (Some(x), Some(y)) => Some(x.iter().zip(y.iter()).map(|(a, b)| a * b).collect()),
            _ => None,
        };
        Ok(FactorSystem {
            q: self.q,
            parity: (self.parity + rhs.parity) & 1,
            omega1,
            omega2,
            sharp,
        })
    }

    pub fn inv(&self) -> Self {
        let inv_all = |v: &Vec<CycNumber>| v.iter().map(|c| c.inv().expect("nonzero")).collect();
        FactorSystem {
            q: self.q,
            parity: self.parity,
            omega1: inv_all(&self.omega1),
            omega2: inv_all(&self.omega2),
            sharp: self.sharp.as_ref().map(inv_all),
        }
    }

    pub fn eq_b_level(&self, rhs: &Self) -> bool {
        self.q == rhs.q && self.omega1 == rhs.omega1 && self.omega2 == rhs.omega2
    }

    pub fn eq_s_level(&self, rhs: &Self) -> bool {
        self.eq_b_level(rhs) && self.sharp == rhs.sharp
    }

    pub fn is_trivial(&self) -> bool {
        self.omega1.iter().all(|c| c.is_one())
            && self.omega2.iter().all(|c| c.is_one())
            && self
                .sharp
                .as_ref()
                .map_or(true, |t| t.iter().all(|c| c.is_one()))
    }
}

/// One violated condition together with its first witness tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsViolation {
    pub condition: u8,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FsCheckReport {
    pub q: usize,
    pub parity: u8,
    pub violations: Vec<FsViolation>,
}

impl FsCheckReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustively verify conditions (1)-(4) over `(Z/q)^4` and, when the sharp
/// table is present, (5)-(6) over `(Z/q)^3` plus symmetry of sharp.
/// Records the first witness for each violated condition.
pub fn check(fs: &FactorSystem) -> FsCheckReport {
    let q = fs.q;
    let mut violations: Vec<FsViolation> = Vec::new();
    let mut seen = [false; 8];
    let mut record = |cond: u8, witness: Vec<usize>, seen: &mut [bool; 8]| {
        if !seen[cond as usize] {
            seen[cond as usize] = true;
            violations.push(FsViolation { condition: cond, witness });
        }
    };
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    // (1) w1(a;b,c) w1(a;b+c,d) = w1(a;b,c+d) w1(a;c,d)
                    let lhs = fs.omega1(a, b, c) * fs.omega1(a, b + c, d);
                    let rhs = fs.omega1(a, b, c + d) * fs.omega1(a, c, d);
                    if lhs != rhs {
                        record(1, vec![a, b, c, d], &mut seen);
                    }
                    // (2) w2(a+b,c;d) w2(a,b;d) = w2(b,c;d) w2(a,b+c;d)
                    let lhs = fs.omega2(a + b, c, d) * fs.omega2(a, b, d);
                    let rhs = fs.omega2(b, c, d) * fs.omega2(a, b + c, d);
                    if lhs != rhs {
                        record(2, vec![a, b, c, d], &mut seen);
                    }
                    // (3) w1(b;c,d) w1(a;c,d) w2(a,b;c+d)
                    //     = (-1)^(abcd p) w2(a,b;c) w2(a,b;d) w1(a+b;c,d)
                    let lhs = &(fs.omega1(b, c, d) * fs.omega1(a, c, d))
                        * fs.omega2(a, b, c + d);
                    let mut rhs = &(fs.omega2(a, b, c) * fs.omega2(a, b, d))
                        * fs.omega1(a + b, c, d);
                    if fs.parity == 1 && a % 2 == 1 && b % 2 == 1 && c % 2 == 1 && d % 2 == 1 {
                        rhs = -rhs;
                    }
                    if lhs != rhs {
                        record(3, vec![a, b, c, d], &mut seen);
                    }
                    if d == 0 {
                        // (4) w1(a;b,c) w2(a,b;c) = w2(b,a;c) w1(a;c,b)
                        let lhs = fs.omega1(a, b, c) * fs.omega2(a, b, c);
                        let rhs = fs.omega2(b, a, c) * fs.omega1(a, c, b);
                        if lhs != rhs {
                            record(4, vec![a, b, c], &mut seen);
                        }
                        if fs.has_sharp() {
                            // (5) w1(a;b,c) w2(b,c;a) sharp(a,b+c)
                            //     = sharp(a,b) sharp(a,c)
                            let lhs = &(fs.omega1(a, b, c) * fs.omega2(b, c, a))
                                * fs.sharp(a, b + c).unwrap();
                            let rhs = fs.sharp(a, b).unwrap() * fs.sharp(a, c).unwrap();
                            if lhs != rhs {
                                record(5, vec![a, b, c], &mut seen);
                            }
                            // (6) w1(c;a,b) w2(a,b;c) sharp(a+b,c)
                            //     = sharp(a,c) sharp(b,c)
                            let lhs = &(fs.omega1(c, a, b) * fs.omega2(a, b, c))
                                * fs.sharp(a + b, c).unwrap();
                            let rhs = fs.sharp(a, c).unwrap() * fs.sharp(b, c).unwrap();
                            if lhs != rhs {
                                record(6, vec![a, b, c], &mut seen);
                            }
                            if c == 0 && fs.sharp(a, b) != fs.sharp(b, a) {
                                record(7, vec![a, b], &mut seen);
                            }
                        }
                    }
                }
            }
        }
    }
    violations.sort_by_key(|v| v.condition);
    FsCheckReport {
        q,
        parity: fs.parity,
        violations,
    }
}

/// `eps(n) = -1` iff `n = 3 mod 4`.
fn eps(n: i64) -> CycNumber {
    if n.rem_euclid(4) == 3 {
        -CycNumber::one()
    } else {
        CycNumber::one()
    }
}

/// `a(n, m) = eps(n)^m zeta_4^(-C(n,2) m)`.
pub fn rescale_a(n: i64, m: i64) -> CycNumber {
    let mut v = cyc_root(4, -(binom2_int(n) * m)).unwrap();
    if m.rem_euclid(2) == 1 {
        v = &v * &eps(n);
    }
    v
}

/// `a'(n, m) = a(n, m) zeta_16^(n m)`.
pub fn rescale_a_prime(n: i64, m: i64) -> CycNumber {
    &rescale_a(n, m) * &cyc_root(16, n * m).unwrap()
}

fn binom2_int(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub q: usize,
    pub checks: Vec<(String, bool)>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// The coboundary relations between the named systems:
/// `B = A . d(a)` as B-factor systems (8 | q),
/// `B = A . d(a')` as S-factor systems (16 | q),
/// `C = d(c)` (4 | q), `D = d(d)` (any even q), and `C D = d(zeta_4^(xy))`
/// (4 | q). Exact table equality throughout.
pub fn relation_suite(q: usize) -> Result<RelationReport, FactorError> {
    if q == 0 || q % 2 != 0 {
        return Err(FactorError::OddModulus(q));
    }
    let mut checks = Vec::new();

    let d_sys = FactorSystem::builtin(FactorName::D, q)?;
    let d_cob = FactorSystem::coboundary(q, |x, y| {
        if x.rem_euclid(2) == 1 && y.rem_euclid(2) == 1 {
            zeta4()
        } else {
            CycNumber::one()
        }
    })?;
    checks.push((format!("D = d(d) at q={}", q), d_sys.eq_s_level(&d_cob)));

    if q % 4 == 0 {
        let c_sys = FactorSystem::builtin(FactorName::C, q)?;
        let c_cob = FactorSystem::coboundary(q, |r, s| {
            if binom2(r * s) == 1 {
                -CycNumber::one()
            } else {
                CycNumber::one()
            }
        })?;
        checks.push((format!("C = d(c) at q={}", q), c_sys.eq_s_level(&c_cob)));

        let cd = c_sys.mul(&d_sys)?;
        let cd_cob = FactorSystem::coboundary(q, |x, y| cyc_root(4, x * y).unwrap())?;
        checks.push((
            format!("C*D = d(zeta4^xy) at q={}", q),
            cd.eq_s_level(&cd_cob),
        ));
    }

    if q % 8 == 0 {
        let a = FactorSystem::builtin(FactorName::A, q)?;
        let b = FactorSystem::builtin(FactorName::B, q)?;
        let da = FactorSystem::coboundary(q, rescale_a)?;
        checks.push((
            format!("B = A*d(a) as B-factor systems at q={}", q),
            a.mul(&da)?.eq_b_level(&b),
        ));
        if q % 16 == 0 {
            let da2 = FactorSystem::coboundary(q, rescale_a_prime)?;
            checks.push((
                format!("B = A*d(a') as S-factor systems at q={}", q),
                a.mul(&da2)?.eq_s_level(&b),
            ));
        }
    }

    Ok(RelationReport { q, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn builtin_table_values() {
        let a = FactorSystem::builtin(FactorName::A, 4).unwrap();
        // C(2,2 choose ... (c=2): C(2,2)=1, so w2(1,1;2) = -1
        assert_eq!(*a.omega2(1, 1, 2), -CycNumber::one());
        let b = FactorSystem::builtin(FactorName::B, 2).unwrap();
        assert_eq!(*b.omega2(1, 1, 1), zeta4());
        let d = FactorSystem::builtin(FactorName::D, 2).unwrap();
        assert_eq!(*d.sharp(1, 1).unwrap(), -CycNumber::one());
        assert!(FactorSystem::builtin(FactorName::A, 2).is_err());
    }

    #[test]
    fn builtins_pass_their_checks() {
        for q in [2usize, 4, 8, 16] {
            for name in [
                FactorName::Trivial,
                FactorName::A,
                FactorName::B,
                FactorName::C,
                FactorName::D,
            ] {
                if name == FactorName::A && q % 4 != 0 {
                    continue;
                }
                let fs = FactorSystem::builtin(name, q).unwrap();
                let rep = check(&fs);
                assert!(rep.pass(), "{:?} at q={} violates {:?}", name, q, rep.violations);
            }
        }
    }

    #[test]
    fn a_at_wrong_parity_fails_with_witness() {
        let a = FactorSystem::builtin(FactorName::A, 4).unwrap().with_parity(0);
        let rep = check(&a);
        assert!(!rep.pass());
        let v3 = rep.violations.iter().find(|v| v.condition == 3).unwrap();
        assert_eq!(v3.witness, vec![1, 1, 1, 1]);
    }

    #[test]
    fn mixed_parity_product_fails() {
        let a = FactorSystem::builtin(FactorName::A, 4).unwrap();
        let t = FactorSystem::builtin(FactorName::Trivial, 4).unwrap();
        let prod = a.mul(&t).unwrap();
        assert_eq!(prod.parity, 1);
        // the tables are A's, so claiming even parity breaks condition (3)
        assert!(!check(&prod.with_parity(0)).pass());
        assert!(check(&prod).pass());
    }

    #[test]
    fn group_structure() {
        let b = FactorSystem::builtin(FactorName::B, 4).unwrap();
        assert!(b.mul(&b.inv()).unwrap().is_trivial());
        // C = D as B-factor systems
        let c = FactorSystem::builtin(FactorName::C, 4).unwrap();
        let d = FactorSystem::builtin(FactorName::D, 4).unwrap();
        assert!(c.eq_b_level(&d));
        assert!(!c.eq_s_level(&d));
        // parity of A*B is 0
        let a = FactorSystem::builtin(FactorName::A, 4).unwrap();
        assert_eq!(a.mul(&b).unwrap().parity, 0);
    }

    #[test]
    fn trivial_coboundary() {
        let fs = FactorSystem::coboundary(4, |_, _| CycNumber::one()).unwrap();
        assert!(fs.is_trivial());
    }

    #[test]
    fn seeded_random_coboundaries_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let units = [
            CycNumber::one(),
            -CycNumber::one(),
            zeta4(),
            -zeta4(),
            zeta8(),
            -zeta8(),
        ];
        for _ in 0..100 {
            let mut table = vec![CycNumber::one(); 16];
            for v in table.iter_mut() {
                *v = units[rng.gen_range(0..units.len())].clone();
            }
            let fs =
                FactorSystem::coboundary(4, |x, y| table[(x * 4 + y) as usize].clone()).unwrap();
            assert_eq!(fs.parity, 0);
            let rep = check(&fs);
            assert!(rep.pass(), "coboundary violates {:?}", rep.violations);
        }
    }

    #[test]
    fn binom2_well_defined_mod_q_when_4_divides() {
        for q in [4i64, 8, 16] {
            for n in 0..q {
                assert_eq!(binom2(n), binom2(n + q), "q={} n={}", q, n);
            }
        }
        // and genuinely ill-defined at q = 2
        assert_ne!(binom2(1), binom2(3));
    }

    #[test]
    fn relation_suite_values() {
        let r = relation_suite(8).unwrap();
        assert!(r.pass(), "{:?}", r.checks);
        let r = relation_suite(16).unwrap();
        assert!(r.pass(), "{:?}", r.checks);
        assert!(r.checks.iter().any(|(n, _)| n.contains("S-factor")));
        let r = relation_suite(4).unwrap();
        assert!(r.pass(), "{:?}", r.checks);
        let r = relation_suite(2).unwrap();
        assert!(r.pass(), "{:?}", r.checks);
        assert!(relation_suite(3).is_err());
    }
}
