use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinAlgError;

/// Ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, LinAlgError> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(LinAlgError::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(Rat::Small(Ratio::from_integer(n))),
            FieldSpec::PrimeField(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// `num / den`, rejecting a zero denominator.
    pub fn from_frac(&self, num: i64, den: i64) -> Result<Scalar, LinAlgError> {
        if den == 0 {
            return Err(LinAlgError::ZeroDenominator);
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Q(Rat::from_ratio(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))),
            FieldSpec::PrimeField(_) => {
                let d = self.from_i64(den);
                let inv = d.inv().ok_or(LinAlgError::ZeroDenominator)?;
                Ok(&self.from_i64(num) * &inv)
            }
        }
    }

    /// Parses `"p"` or `"p/q"`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, LinAlgError> {
        let s = s.trim();
        let bad = || LinAlgError::ParseScalar(s.to_string());
        match *self {
            FieldSpec::Rationals => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (
                        n.trim().parse::<BigInt>().map_err(|_| bad())?,
                        d.trim().parse::<BigInt>().map_err(|_| bad())?,
                    ),
                    None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
                };
                if d.is_zero() {
                    return Err(LinAlgError::ZeroDenominator);
                }
                Ok(Scalar::Q(Rat::from_ratio(BigRational::new(n, d))))
            }
            FieldSpec::PrimeField(_) => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (
                        n.trim().parse::<i64>().map_err(|_| bad())?,
                        d.trim().parse::<i64>().map_err(|_| bad())?,
                    ),
                    None => (s.parse::<i64>().map_err(|_| bad())?, 1),
                };
                self.from_frac(n, d)
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::PrimeField(p) => format!("F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact rational: machine-word fast path, promoted to big integers on overflow.
/// Always kept in canonical form (`Small` whenever it fits).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rat {
    fn from_ratio(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Rat::Small(Ratio::new_raw(n, d)),
            _ => Rat::Big(r),
        }
    }

    fn big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(b) => b.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(b) => b.is_zero(),
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_one(),
            Rat::Big(b) => b.is_one(),
        }
    }

    fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            if let Some(r) = checked_ratio(a, b, |x, y| x.checked_add(y)) {
                return r;
            }
        }
        Rat::from_ratio(self.big() + o.big())
    }

    fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    fn neg(&self) -> Rat {
        match self {
            Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(-*r),
            _ => Rat::from_ratio(-self.big()),
        }
    }

    fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, o) {
            let g1 = num_integer::gcd(*a.numer(), *b.denom());
            let g2 = num_integer::gcd(*b.numer(), *a.denom());
            if g1 != 0 && g2 != 0 {
                let n = (a.numer() / g1).checked_mul(b.numer() / g2);
                let d = (a.denom() / g2).checked_mul(b.denom() / g1);
                if let (Some(n), Some(d)) = (n, d) {
                    if n != i64::MIN && d != i64::MIN {
                        return Rat::Small(Ratio::new_raw(n, d));
                    }
                }
            } else {
                return Rat::Small(Ratio::from_integer(0));
            }
        }
        Rat::from_ratio(self.big() * o.big())
    }

    fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        Some(Rat::from_ratio(self.big().recip()))
    }
}

fn checked_ratio(
    a: &Ratio<i64>,
    b: &Ratio<i64>,
    op: impl Fn(i64, i64) -> Option<i64>,
) -> Option<Rat> {
    let l = num_integer::lcm(*a.denom(), *b.denom());
    let fa = a.numer().checked_mul(l / a.denom())?;
    let fb = b.numer().checked_mul(l / b.denom())?;
    let n = op(fa, fb)?;
    if n == i64::MIN {
        return None;
    }
    Some(Rat::Small(Ratio::new(n, l)))
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.big();
        if b.denom().is_one() {
            write!(f, "{}", b.numer())
        } else {
            write!(f, "{}/{}", b.numer(), b.denom())
        }
    }
}

/// A field element tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::Fp { v, p } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar::Fp { v: pow_mod(*v, p - 2, *p), p: *p })
                }
            }
        }
    }

    /// Numerator/denominator pair when both fit in `i64`.
    pub fn as_i64_frac(&self) -> Option<(i64, i64)> {
        match self {
            Scalar::Q(Rat::Small(r)) => Some((*r.numer(), *r.denom())),
            Scalar::Q(Rat::Big(_)) => None,
            Scalar::Fp { v, .. } => Some((*v as i64, 1)),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(r) => r.big().is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    fn mismatch(a: &Scalar, b: &Scalar) -> ! {
        panic!("mixed-field arithmetic: {:?} vs {:?}", a.field(), b.field())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: (a + b) % p, p: *p }
            }
            _ => Scalar::mismatch(self, o),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.sub(b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: (a + p - b) % p, p: *p }
            }
            _ => Scalar::mismatch(self, o),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                Scalar::Fp { v: a * b % p, p: *p }
            }
            _ => Scalar::mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_overflow_promotes() {
        let q = FieldSpec::Rationals;
        let big = q.from_i64(i64::MAX);
        let s = &big + &big;
        assert!(matches!(s, Scalar::Q(Rat::Big(_))));
        let back = &s - &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Q(Rat::Small(_))));
    }

    #[test]
    fn parse_and_print() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse_scalar("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse_scalar("-2").unwrap().to_string(), "-2");
        assert!(q.parse_scalar("1/0").is_err());
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_i64(3));
    }

    #[test]
    fn prime_inverse() {
        let f7 = FieldSpec::prime(7).unwrap();
        for n in 1..7 {
            let x = f7.from_i64(n);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(FieldSpec::prime(9).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_field_panics() {
        let _ = &FieldSpec::Rationals.one() + &FieldSpec::PrimeField(5).one();
    }
}
