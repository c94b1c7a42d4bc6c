//! Exact arithmetic in the cyclotomic field `Q(zeta_16)` and the quadratic
//! subfield `Q(sqrt(2))`.
//!
//! Elements of `Q(zeta_16)` are stored on the power basis
//! `1, z, z^2, ..., z^7` with `z = zeta_16` and the reduction `z^8 = -1`
//! (minimal polynomial `x^8 + 1`). The representation is a canonical normal
//! form: two values are equal iff their coefficient vectors are equal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub type Rat = BigRational;

/// Convenience: rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience: rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    BadRootOrder(u64),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "inverse of zero"),
            ScalarError::BadRootOrder(n) => {
                write!(f, "root order {} does not divide 16", n)
            }
        }
    }
}

impl std::error::Error for ScalarError {}

/// An element of `Q(zeta_16)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNumber {
    coeffs: [Rat; 8],
}

impl CycNumber {
    pub fn zero() -> Self {
        CycNumber {
            coeffs: Default::default(),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    /// `c * z^k` for the basis monomial `z^k`, any integer `k` (reduced by
    /// `z^16 = 1`, `z^8 = -1`).
    pub fn monomial(c: Rat, k: i64) -> Self {
        let mut out = Self::zero();
        let k = k.rem_euclid(16) as usize;
        if k < 8 {
            out.coeffs[k] = c;
        } else {
            out.coeffs[k - 8] = -c;
        }
        out
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True if the value lies in `Q` (only the constant coefficient nonzero).
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scaled(&self, r: &Rat) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= r;
        }
        out
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // Solve M x = e_0 over Q, where M is the 8x8 matrix of
        // multiplication by `self` on the power basis.
        let mut m = vec![vec![Rat::zero(); 9]; 8];
        for j in 0..8 {
            let col = self * &CycNumber::monomial(Rat::one(), j as i64);
            for i in 0..8 {
                m[i][j] = col.coeffs[i].clone();
            }
        }
        m[0][8] = Rat::one();
        // Gaussian elimination with exact pivoting.
        let mut row = 0;
        for col in 0..8 {
            let Some(p) = (row..8).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let piv = m[row][col].clone();
            for k in col..9 {
                m[row][k] = &m[row][k] / &piv;
            }
            for r in 0..8 {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..9 {
                        let s = &m[row][k] * &f;
                        m[r][k] = &m[r][k] - &s;
                    }
                }
            }
            row += 1;
        }
        // The field has no zero divisors, so the system is always solvable.
        let mut out = Self::zero();
        for (i, r) in m.iter().enumerate() {
            out.coeffs[i] = r[8].clone();
        }
        debug_assert!((self * &out).is_one());
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }
}

impl Default for CycNumber {
    fn default() -> Self {
        Self::zero()
    }
}

/// `zeta_order ^ exponent` for `order` dividing 16.
pub fn cyc_root(order: u64, exponent: i64) -> Result<CycNumber, ScalarError> {
    if order == 0 || 16 % order != 0 {
        return Err(ScalarError::BadRootOrder(order));
    }
    let step = (16 / order) as i64;
    Ok(CycNumber::monomial(Rat::one(), step * exponent))
}

pub fn zeta16() -> CycNumber {
    cyc_root(16, 1).unwrap()
}

pub fn zeta8() -> CycNumber {
    cyc_root(8, 1).unwrap()
}

pub fn zeta4() -> CycNumber {
    cyc_root(4, 1).unwrap()
}

/// `sqrt(2) = zeta_8 (1 - zeta_4) = z^2 - z^6`.
pub fn sqrt2() -> CycNumber {
    &zeta8() * &(&CycNumber::one() - &zeta4())
}

/// `(-1)^e` as a field element.
pub fn sign_pow(e: i64) -> CycNumber {
    if e.rem_euclid(2) == 0 {
        CycNumber::one()
    } else {
        -CycNumber::one()
    }
}

impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
        out
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
        out
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(mut self) -> CycNumber {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -self.clone()
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        let mut out = CycNumber::zero();
        for i in 0..8 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let p = &self.coeffs[i] * &rhs.coeffs[j];
                let k = i + j;
                if k < 8 {
                    out.coeffs[k] += p;
                } else {
                    out.coeffs[k - 8] -= p;
                }
            }
        }
        out
    }
}

impl Add for CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: CycNumber) -> CycNumber {
        &self + &rhs
    }
}

impl Sub for CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: CycNumber) -> CycNumber {
        &self - &rhs
    }
}

impl Mul for CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: CycNumber) -> CycNumber {
        &self * &rhs
    }
}

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

fn fmt_rat(r: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNumber {
    /// Renders as `c0 + c1*z + ... + c7*z^7` with zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " ")?;
                if c.is_negative() {
                    write!(f, "- ")?;
                } else {
                    write!(f, "+ ")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => fmt_rat(&a, f)?,
                1 => {
                    fmt_rat(&a, f)?;
                    write!(f, "*z")?;
                }
                _ => {
                    fmt_rat(&a, f)?;
                    write!(f, "*z^{}", i)?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({})", self)
    }
}

/// An element `a + b*sqrt(2)` of `Q(sqrt(2))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSqrt2 {
    pub a: Rat,
    pub b: Rat,
}

impl QSqrt2 {
    pub fn new(a: Rat, b: Rat) -> Self {
        QSqrt2 { a, b }
    }

    pub fn zero() -> Self {
        QSqrt2::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        QSqrt2::new(Rat::one(), Rat::zero())
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt2::new(rat(n), Rat::zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        QSqrt2::new(r, Rat::zero())
    }

    pub fn sqrt2() -> Self {
        QSqrt2::new(Rat::zero(), Rat::one())
    }

    /// `2^(k/2)` for any integer `k` (half-integer powers of 2 pick up sqrt(2)).
    pub fn two_pow_half(k: i64) -> Self {
        let whole = k.div_euclid(2);
        let frac = k.rem_euclid(2);
        let base = if whole >= 0 {
            Rat::from_integer(BigInt::from(2).pow(whole as u32))
        } else {
            Rat::new(BigInt::one(), BigInt::from(2).pow((-whole) as u32))
        };
        if frac == 0 {
            QSqrt2::new(base, Rat::zero())
        } else {
            QSqrt2::new(Rat::zero(), base)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        // (a + b s)^-1 = (a - b s)/(a^2 - 2 b^2)
        let n = &self.a * &self.a - rat(2) * &self.b * &self.b;
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QSqrt2::new(&self.a / &n, -(&self.b / &n)))
    }
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(
            &self.a * &rhs.a + rat(2) * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a, -self.b)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return fmt_rat(&self.a, f);
        }
        if !self.a.is_zero() {
            fmt_rat(&self.a, f)?;
            if self.b.is_negative() {
                write!(f, " - ")?;
                fmt_rat(&self.b.abs(), f)?;
            } else {
                write!(f, " + ")?;
                fmt_rat(&self.b, f)?;
            }
        } else {
            fmt_rat(&self.b, f)?;
        }
        write!(f, "*sqrt(2)")
    }
}

/// Ring embedding `Q(sqrt(2)) -> Q(zeta_16)` sending `sqrt(2)` to
/// `zeta_8 (1 - zeta_4)`.
pub fn embed_qsqrt2(x: &QSqrt2) -> CycNumber {
    &CycNumber::from_rat(x.a.clone()) + &sqrt2().scaled(&x.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_cyc(rng: &mut ChaCha8Rng) -> CycNumber {
        let mut c = CycNumber::zero();
        for i in 0..8 {
            c.coeffs[i] = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        }
        c
    }

    #[test]
    fn root_orders() {
        // zeta_16^8 * zeta_16^8 = 1
        let z8 = CycNumber::monomial(Rat::one(), 8);
        assert!((&z8 * &z8).is_one());
        // zeta_8^2 = zeta_4
        assert_eq!(&zeta8() * &zeta8(), zeta4());
        // zeta_4^2 = -1
        assert_eq!(&zeta4() * &zeta4(), -CycNumber::one());
        // compatibility chain: zeta_16^2 = zeta_8
        assert_eq!(&zeta16() * &zeta16(), zeta8());
    }

    #[test]
    fn multiplicative_order_of_zeta16_is_16() {
        let z = zeta16();
        let mut p = CycNumber::one();
        for k in 1..=16u32 {
            p = &p * &z;
            if k < 16 {
                assert!(!p.is_one(), "zeta_16^{} must not be 1", k);
            }
        }
        assert!(p.is_one());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(&sqrt2() * &sqrt2(), CycNumber::from_int(2));
    }

    #[test]
    fn cyc_root_values() {
        assert_eq!(cyc_root(2, 1).unwrap(), -CycNumber::one());
        assert_eq!(cyc_root(4, 1).unwrap(), CycNumber::monomial(Rat::one(), 4));
        assert!(cyc_root(16, 16).unwrap().is_one());
        assert!(cyc_root(3, 1).is_err());
        assert!(cyc_root(0, 1).is_err());
    }

    #[test]
    fn inverses() {
        assert!(CycNumber::one().inv().unwrap().is_one());
        assert_eq!(zeta4().inv().unwrap(), -zeta4());
        assert_eq!(
            CycNumber::from_int(2).inv().unwrap(),
            CycNumber::from_rat(ratio(1, 2))
        );
        assert!(CycNumber::zero().inv().is_err());
    }

    #[test]
    fn field_axioms_on_seeded_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..1000 {
            let a = random_cyc(&mut rng);
            let b = random_cyc(&mut rng);
            let c = random_cyc(&mut rng);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn embed_is_injective_on_seeded_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(embed_qsqrt2(&QSqrt2::one()).is_one());
        assert_eq!(embed_qsqrt2(&QSqrt2::sqrt2()), sqrt2());
        // 1/sqrt(2) squares to 1/2
        let half_rt = QSqrt2::new(Rat::zero(), ratio(1, 2));
        let e = embed_qsqrt2(&half_rt);
        assert_eq!(&e * &e, CycNumber::from_rat(ratio(1, 2)));
        for _ in 0..200 {
            let x = QSqrt2::new(
                ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
                ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
            );
            let y = QSqrt2::new(
                ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
                ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
            );
            assert_eq!(embed_qsqrt2(&x).is_zero(), x.is_zero());
            // homomorphism
            assert_eq!(embed_qsqrt2(&(&x * &y)), &embed_qsqrt2(&x) * &embed_qsqrt2(&y));
            assert_eq!(embed_qsqrt2(&(&x + &y)), &embed_qsqrt2(&x) + &embed_qsqrt2(&y));
        }
    }

    mod properties {
        use super::super::*;
        use proptest::prelude::*;

        fn arb_cyc() -> impl Strategy<Value = CycNumber> {
            proptest::collection::vec((-6i64..=6, 1i64..=4), 8).prop_map(|v| {
                let mut c = CycNumber::zero();
                for (i, (p, q)) in v.into_iter().enumerate() {
                    c.coeffs[i] = ratio(p, q);
                }
                c
            })
        }

        proptest! {
            #[test]
            fn mul_commutes(a in arb_cyc(), b in arb_cyc()) {
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn inverse_round_trip(a in arb_cyc()) {
                if !a.is_zero() {
                    prop_assert!((&a * &a.inv().unwrap()).is_one());
                }
            }

            #[test]
            fn monomial_mul_adds_exponents(i in 0i64..16, j in 0i64..16) {
                let a = CycNumber::monomial(Rat::one(), i);
                let b = CycNumber::monomial(Rat::one(), j);
                prop_assert_eq!(&a * &b, CycNumber::monomial(Rat::one(), i + j));
            }
        }
    }

    #[test]
    fn two_pow_half_values() {
        assert_eq!(QSqrt2::two_pow_half(0), QSqrt2::one());
        assert_eq!(QSqrt2::two_pow_half(2), QSqrt2::from_int(2));
        assert_eq!(QSqrt2::two_pow_half(1), QSqrt2::sqrt2());
        assert_eq!(
            QSqrt2::two_pow_half(-1),
            QSqrt2::new(Rat::zero(), ratio(1, 2))
        );
        // 2^(-1/2) squared is 1/2
        let h = QSqrt2::two_pow_half(-1);
        assert_eq!(&h * &h, QSqrt2::from_rat(ratio(1, 2)));
    }
}
