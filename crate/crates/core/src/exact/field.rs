//! Scalar fields and grounds.
//!
//! Every algebraic module is generic over a [`Ground`], which fixes the
//! scalar type and how the two parameters are realized. [`Exact`] works in
//! `Q(t1,t2)`; [`Sampled`] evaluates the parameters at a random rational point.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::bigrat::BigRat;
use super::laurent::Mono;
use super::ratfun::RatFun2;
use crate::Error;

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(c: BigRat) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self, Error>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(BigRat::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self.clone() * &rhs.inv()?)
    }

    fn powi(&self, e: i32) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc *= &base;
        }
        Ok(acc)
    }

    /// Canonical text with the given parameter names.
    fn render(&self, names: [&str; 2]) -> String;
}

impl Field for RatFun2 {
    fn zero() -> Self {
        RatFun2::zero()
    }
    fn one() -> Self {
        RatFun2::one()
    }
    fn from_rat(c: BigRat) -> Self {
        RatFun2::from_rat(c)
    }
    fn is_zero(&self) -> bool {
        RatFun2::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFun2::is_one(self)
    }
    fn inv(&self) -> Result<Self, Error> {
        self.recip()
    }
    fn powi(&self, e: i32) -> Result<Self, Error> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(e))
    }
    fn render(&self, names: [&str; 2]) -> String {
        self.to_string_with(names)
    }
}

impl Field for BigRat {
    fn zero() -> Self {
        BigRat::zero()
    }
    fn one() -> Self {
        BigRat::one()
    }
    fn from_rat(c: BigRat) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        BigRat::is_zero(self)
    }
    fn inv(&self) -> Result<Self, Error> {
        self.recip().ok_or(Error::DivisionByZero)
    }
    fn powi(&self, e: i32) -> Result<Self, Error> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(e))
    }
    fn render(&self, _names: [&str; 2]) -> String {
        self.to_string()
    }
}

/// Whether the parameters are read as `(t1, t2)` or as Macdonald `(q, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Params {
    T1T2,
    QT,
}

pub trait Ground: Clone + Debug + Send + Sync + 'static {
    type F: Field;

    /// `t1^a t2^b`, or `q^a t^b` in the Macdonald ground.
    fn mono(&self, a: i32, b: i32) -> Self::F;

    fn params(&self) -> Params;

    /// The same ground with the parameters read as `(q, t)`.
    fn qt(&self) -> Self;

    /// Substitutes `q -> t1`, `t -> 1/t2` into a value of the `(q, t)` ground.
    fn specialize_qt(&self, x: &Self::F) -> Self::F;

    fn names(&self) -> [&'static str; 2] {
        match self.params() {
            Params::T1T2 => ["t1", "t2"],
            Params::QT => ["q", "t"],
        }
    }

    fn render(&self, x: &Self::F) -> String {
        x.render(self.names())
    }

    fn int(&self, n: i64) -> Self::F {
        Self::F::from_int(n)
    }

    fn zero(&self) -> Self::F {
        Self::F::zero()
    }

    fn one(&self) -> Self::F {
        Self::F::one()
    }

    /// `1 - t1^a t2^b`.
    fn one_minus(&self, a: i32, b: i32) -> Self::F {
        Self::F::one() - self.mono(a, b)
    }

    /// `1 / ((1 - t1)(1 - t2))`, the recurring normalization of a single box.
    fn box_weight(&self) -> Self::F {
        (self.one_minus(1, 0) * self.one_minus(0, 1))
            .inv()
            .expect("1-t1 and 1-t2 are nonzero")
    }
}

/// Symbolic parameters: scalars are exact rational functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exact {
    params: Params,
}

impl Exact {
    pub fn new() -> Self {
        Exact {
            params: Params::T1T2,
        }
    }
}

impl Default for Exact {
    fn default() -> Self {
        Self::new()
    }
}

impl Ground for Exact {
    type F = RatFun2;

    fn mono(&self, a: i32, b: i32) -> RatFun2 {
        RatFun2::monomial(a, b)
    }

    fn params(&self) -> Params {
        self.params
    }

    fn qt(&self) -> Self {
        Exact { params: Params::QT }
    }

    fn specialize_qt(&self, x: &RatFun2) -> RatFun2 {
        x.map_exponents(|m| Mono::new(m.a, -m.b))
    }
}

/// Parameters evaluated at `t1 = p1/p2`, `t2 = p3/p4` for distinct primes
/// drawn from the seed, so that no nontrivial monomial equals one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sampled {
    t1: BigRat,
    t2: BigRat,
    params: Params,
}

const SAMPLE_PRIMES: [i64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

impl Sampled {
    pub fn from_seed(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p: Vec<i64> = SAMPLE_PRIMES
            .choose_multiple(&mut rng, 4)
            .copied()
            .collect();
        Sampled {
            t1: BigRat::new(p[0], p[1]),
            t2: BigRat::new(p[2], p[3]),
            params: Params::T1T2,
        }
    }

    pub fn point(&self) -> (&BigRat, &BigRat) {
        (&self.t1, &self.t2)
    }
}

impl Ground for Sampled {
    type F = BigRat;

    fn mono(&self, a: i32, b: i32) -> BigRat {
        let b = match self.params {
            Params::T1T2 => b,
            Params::QT => -b,
        };
        self.t1.pow(a) * self.t2.pow(b)
    }

    fn params(&self) -> Params {
        self.params
    }

    fn qt(&self) -> Self {
        Sampled {
            params: Params::QT,
            ..self.clone()
        }
    }

    fn specialize_qt(&self, x: &BigRat) -> BigRat {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialization_inverts_t() {
        let g = Exact::new();
        let qt = g.qt();
        let x = qt.one_minus(1, 0).try_div(&qt.one_minus(0, 1)).unwrap();
        let y = g.specialize_qt(&x);
        let expect = (g.mono(0, 1) * g.one_minus(1, 0))
            .try_div(&(g.one_minus(0, 1)))
            .unwrap();
        assert_eq!(y, -expect);
        assert_eq!(g.specialize_qt(&qt.one()), g.one());
    }

    #[test]
    fn sampled_is_deterministic_and_consistent() {
        let a = Sampled::from_seed(7);
        let b = Sampled::from_seed(7);
        assert_eq!(a, b);
        let qt = a.qt();
        // q = t1 and t = 1/t2 numerically, so specialization is the identity
        assert_eq!(qt.mono(1, 0), a.mono(1, 0));
        assert_eq!(qt.mono(0, 1), a.mono(0, -1));
        assert_ne!(a.mono(1, 0), BigRat::one());
    }
}
