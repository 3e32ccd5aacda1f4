//! Arbitrary-precision rationals with an inline fast path for word-sized values.
//!
//! Almost every coefficient that shows up in this crate is a small integer, so
//! values that fit in `i64/i64` are kept unboxed and only promoted to
//! `BigRational` when an operation overflows. A value is stored as `Big` only
//! when it does not fit the small representation, which keeps derived equality
//! and hashing structural.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

#[derive(Clone)]
enum Repr {
    /// numerator, denominator; denominator > 0 and gcd = 1
    Small(i64, i64),
    Big(BigRational),
}

/// A reduced fraction `n/d` with `d > 0`.
#[derive(Clone)]
pub struct BigRat(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl BigRat {
    pub fn zero() -> Self {
        BigRat(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        BigRat(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        BigRat(Repr::Small(n, 1))
    }

    /// Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_i128(n as i128, d as i128)
    }

    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => BigRat(Repr::Small(n, d)),
            _ => BigRat(Repr::Big(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))),
        }
    }

    /// Normalizes a big rational, demoting it to the inline form when it fits.
    pub fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return BigRat(Repr::Small(n, d));
        }
        BigRat(Repr::Big(r))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => {
                if r.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `None` on zero.
    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Some(Self::from_big(r.recip())),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.recip().expect("zero to a negative power").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = BigRat::one();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Default for BigRat {
    fn default() -> Self {
        BigRat::zero()
    }
}

impl From<i64> for BigRat {
    fn from(n: i64) -> Self {
        BigRat::from_int(n)
    }
}

impl From<BigInt> for BigRat {
    fn from(n: BigInt) -> Self {
        BigRat::from_bigint(n)
    }
}

impl PartialEq for BigRat {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for BigRat {}

impl Hash for BigRat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for BigRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

fn add_impl(a: &BigRat, b: &BigRat) -> BigRat {
    match (&a.0, &b.0) {
        (Repr::Small(0, _), _) => b.clone(),
        (_, Repr::Small(0, _)) => a.clone(),
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            if d1 == d2 {
                return BigRat::from_i128(*n1 as i128 + *n2 as i128, *d1 as i128);
            }
            let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
            match n1
                .checked_mul(d2)
                .and_then(|x| n2.checked_mul(d1).and_then(|y| x.checked_add(y)))
                .zip(d1.checked_mul(d2))
            {
                Some((n, d)) => BigRat::from_i128(n, d),
                None => BigRat::from_big(a.to_big() + b.to_big()),
            }
        }
        _ => BigRat::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_impl(a: &BigRat, b: &BigRat) -> BigRat {
    match (&a.0, &b.0) {
        (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => BigRat::zero(),
        (Repr::Small(1, 1), _) => b.clone(),
        (_, Repr::Small(1, 1)) => a.clone(),
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            let n = *n1 as i128 * *n2 as i128;
            let d = *d1 as i128 * *d2 as i128;
            BigRat::from_i128(n, d)
        }
        _ => BigRat::from_big(a.to_big() * b.to_big()),
    }
}

fn neg_impl(a: &BigRat) -> BigRat {
    match &a.0 {
        Repr::Small(n, d) => match n.checked_neg() {
            Some(m) => BigRat(Repr::Small(m, *d)),
            None => BigRat::from_big(-a.to_big()),
        },
        Repr::Big(r) => BigRat::from_big(-r.clone()),
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        neg_impl(self)
    }
}

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        neg_impl(&self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&BigRat> for &BigRat {
            type Output = BigRat;
            fn $m(self, rhs: &BigRat) -> BigRat {
                $body(self, rhs)
            }
        }
        impl $tr<BigRat> for BigRat {
            type Output = BigRat;
            fn $m(self, rhs: BigRat) -> BigRat {
                $body(&self, &rhs)
            }
        }
        impl $tr<&BigRat> for BigRat {
            type Output = BigRat;
            fn $m(self, rhs: &BigRat) -> BigRat {
                $body(&self, rhs)
            }
        }
        impl $tr<BigRat> for &BigRat {
            type Output = BigRat;
            fn $m(self, rhs: BigRat) -> BigRat {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Sub, sub, |a: &BigRat, b: &BigRat| add_impl(a, &neg_impl(b)));
forward_binop!(Div, div, |a: &BigRat, b: &BigRat| mul_impl(
    a,
    &b.recip().expect("division by zero rational")
));

impl AddAssign<&BigRat> for BigRat {
    fn add_assign(&mut self, rhs: &BigRat) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&BigRat> for BigRat {
    fn sub_assign(&mut self, rhs: &BigRat) {
        *self = add_impl(self, &neg_impl(rhs));
    }
}

impl MulAssign<&BigRat> for BigRat {
    fn mul_assign(&mut self, rhs: &BigRat) {
        *self = mul_impl(self, rhs);
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Least common multiple of the denominators of `it`.
pub fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    let mut l = BigInt::one();
    for c in it {
        let d = c.denom();
        if !d.is_one() {
            l = l.lcm(&d);
        }
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(BigRat::new(6, -4), BigRat::new(-3, 2));
        assert_eq!(BigRat::new(0, -7), BigRat::zero());
    }

    #[test]
    fn overflow_promotes_then_demotes() {
        let big = BigRat::from_int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
    }

    #[test]
    fn neg_of_min_does_not_wrap() {
        let m = BigRat::from_int(i64::MIN);
        let n = -&m;
        assert_eq!(n.numer(), -BigInt::from(i64::MIN));
        assert_eq!(-n, m);
    }

    #[test]
    fn pow_and_recip() {
        let x = BigRat::new(2, 3);
        assert_eq!(x.pow(3), BigRat::new(8, 27));
        assert_eq!(x.pow(-2), BigRat::new(9, 4));
        assert!(BigRat::zero().recip().is_none());
    }
}
