//! Rational functions in `t1, t2` over the rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::bigrat::BigRat;
use super::gcd::{gcd, primitive_split};
use super::laurent::{LaurentPoly2, Mono};
use crate::Error;

/// `num / den` in canonical form.
///
/// The denominator is a genuine polynomial with no monomial content, primitive
/// integer coefficients and a positive leading coefficient (grlex, `t1 > t2`);
/// all monomial and scalar factors live in the numerator, and the two parts
/// share no nontrivial common factor.
///
/// Equality is decided by cross-multiplication and therefore does not rely on
/// the GCD reduction being complete.
#[derive(Clone, Default)]
pub struct RatFun2 {
    num: LaurentPoly2,
    den: LaurentPoly2,
}

impl RatFun2 {
    pub fn zero() -> Self {
        RatFun2 {
            num: LaurentPoly2::zero(),
            den: LaurentPoly2::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly2::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly2::from_int(n))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(LaurentPoly2::constant(c))
    }

    /// `t1^a * t2^b`.
    pub fn monomial(a: i32, b: i32) -> Self {
        Self::from_poly(LaurentPoly2::monomial(a, b))
    }

    /// A Laurent polynomial is already canonical over the unit denominator.
    pub fn from_poly(p: LaurentPoly2) -> Self {
        RatFun2 {
            num: p,
            den: LaurentPoly2::one(),
        }
    }

    /// Builds `num / den` and reduces it to canonical form.
    pub fn new(num: LaurentPoly2, den: LaurentPoly2) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (dn, scale, m) = primitive_split(&den);
        let num = num.mul_term(&scale.recip().unwrap(), m.inv());
        Ok(Self::reduce(num, dn))
    }

    /// `den` must already be normalized (primitive, no monomial content).
    fn reduce(num: LaurentPoly2, den: LaurentPoly2) -> Self {
        if den.is_one() || num.is_zero() {
            return if num.is_zero() {
                Self::zero()
            } else {
                Self::from_poly(num)
            };
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return RatFun2 { num, den };
        }
        RatFun2 {
            num: num.div_exact(&g).expect("gcd divides numerator"),
            den: den.div_exact(&g).expect("gcd divides denominator"),
        }
    }

    pub fn num(&self) -> &LaurentPoly2 {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly2 {
        &self.den
    }

    /// Recovers the Laurent polynomial when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly2> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // den is already coprime to num, only renormalization is needed
        let (dn, scale, m) = primitive_split(&self.num);
        let num = self.den.mul_term(&scale.recip().unwrap(), m.inv());
        Ok(RatFun2 { num, den: dn })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.recip().expect("zero to a negative power").pow(-e);
        }
        let e = e as u32;
        RatFun2 {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        RatFun2 {
            num: self.num.scale(c),
            den: if c.is_zero() {
                LaurentPoly2::one()
            } else {
                self.den.clone()
            },
        }
    }

    /// Rewrites every monomial through `f` and renormalizes.
    pub fn map_exponents(&self, f: impl Fn(Mono) -> Mono + Copy) -> Self {
        Self::new(self.num.map_exponents(f), self.den.map_exponents(f))
            .expect("monomial substitution keeps the denominator nonzero")
    }

    /// Evaluates at a rational point; errors if the denominator vanishes there.
    pub fn eval(&self, t1: &BigRat, t2: &BigRat) -> Result<BigRat, Error> {
        let d = self.den.eval(t1, t2);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(t1, t2) / d)
    }

    pub fn to_string_with(&self, names: [&str; 2]) -> String {
        if self.den.is_one() {
            return self.num.to_string_with(names);
        }
        format!(
            "({}) / ({})",
            self.num.to_string_with(names),
            self.den.to_string_with(names)
        )
    }

    fn add_impl(&self, o: &Self, negate: bool) -> Self {
        let c = if negate { -&o.num } else { o.num.clone() };
        if self.num.is_zero() {
            return RatFun2 {
                num: c,
                den: o.den.clone(),
            };
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = &self.num + &c;
            return Self::reduce(n, self.den.clone());
        }
        // a/b + c/d with b or d trivial never needs a gcd.
        if self.den.is_one() {
            return RatFun2 {
                num: &(&self.num * &o.den) + &c,
                den: o.den.clone(),
            };
        }
        if o.den.is_one() {
            return RatFun2 {
                num: &self.num + &(&c * &self.den),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            return RatFun2 {
                num: &(&self.num * &o.den) + &(&c * &self.den),
                den: &self.den * &o.den,
            };
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        let n = &(&self.num * &d1) + &(&c * &b1);
        if n.is_zero() {
            return Self::zero();
        }
        let h = gcd(&n, &g);
        let (n, g) = if h.is_one() {
            (n, g)
        } else {
            (n.div_exact(&h).unwrap(), g.div_exact(&h).unwrap())
        };
        RatFun2 {
            num: n,
            den: &(&b1 * &d1) * &g,
        }
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(&self.num * &o.num);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (
                self.num.div_exact(&g1).unwrap(),
                o.den.div_exact(&g1).unwrap(),
            )
        };
        let (c, b) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (
                o.num.div_exact(&g2).unwrap(),
                self.den.div_exact(&g2).unwrap(),
            )
        };
        RatFun2 {
            num: &a * &c,
            den: &b * &d,
        }
    }
}

impl PartialEq for RatFun2 {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFun2 {}

impl From<LaurentPoly2> for RatFun2 {
    fn from(p: LaurentPoly2) -> Self {
        RatFun2::from_poly(p)
    }
}

impl From<i64> for RatFun2 {
    fn from(n: i64) -> Self {
        RatFun2::from_int(n)
    }
}

impl fmt::Display for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(["t1", "t2"]))
    }
}

impl fmt::Debug for RatFun2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! ratfun_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFun2> for &RatFun2 {
            type Output = RatFun2;
            fn $m(self, rhs: &RatFun2) -> RatFun2 {
                $body(self, rhs)
            }
        }
        impl $tr<RatFun2> for RatFun2 {
            type Output = RatFun2;
            fn $m(self, rhs: RatFun2) -> RatFun2 {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RatFun2> for RatFun2 {
            type Output = RatFun2;
            fn $m(self, rhs: &RatFun2) -> RatFun2 {
                $body(&self, rhs)
            }
        }
    };
}

ratfun_binop!(Add, add, |a: &RatFun2, b: &RatFun2| a.add_impl(b, false));
ratfun_binop!(Sub, sub, |a: &RatFun2, b: &RatFun2| a.add_impl(b, true));
ratfun_binop!(Mul, mul, |a: &RatFun2, b: &RatFun2| a.mul_impl(b));
ratfun_binop!(Div, div, |a: &RatFun2, b: &RatFun2| a
    .checked_div(b)
    .expect("division by zero rational function"));

impl AddAssign<&RatFun2> for RatFun2 {
    fn add_assign(&mut self, rhs: &RatFun2) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&RatFun2> for RatFun2 {
    fn sub_assign(&mut self, rhs: &RatFun2) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&RatFun2> for RatFun2 {
    fn mul_assign(&mut self, rhs: &RatFun2) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &RatFun2 {
    type Output = RatFun2;
    fn neg(self) -> RatFun2 {
        RatFun2 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun2 {
    type Output = RatFun2;
    fn neg(self) -> RatFun2 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> RatFun2 {
        RatFun2::monomial(1, 0)
    }
    fn t2() -> RatFun2 {
        RatFun2::monomial(0, 1)
    }
    fn one() -> RatFun2 {
        RatFun2::one()
    }

    #[test]
    fn additive_inverse() {
        let a = &one() - &t1();
        let b = &t1() - &one();
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn cancellation() {
        let a = (&one() - &(&t1() * &t2())) / (&one() - &t1());
        let b = (&one() - &t1()) / (&one() - &t2());
        let prod = &a * &b;
        let expect = (&one() - &(&t1() * &t2())) / (&one() - &t2());
        assert_eq!(prod, expect);
        // canonical form is literally the reduced fraction
        assert_eq!(prod.num(), expect.num());
        assert_eq!(prod.den(), expect.den());
    }

    #[test]
    fn sum_of_geometric_prefactors() {
        // hand oracle: cross-multiplication
        let a = one() / (&one() - &t1());
        let b = one() / (&one() - &t2());
        let lhs = &a + &b;
        let num = &(&RatFun2::from_int(2) - &t1()) - &t2();
        let den = &(&one() - &t1()) * &(&one() - &t2());
        assert_eq!(lhs, num / den);
    }

    #[test]
    fn equality_examples() {
        let a = (&t1().pow(2) - &t2().pow(2)) / (&t1() - &t2());
        assert_eq!(a, &t1() + &t2());
        let z = RatFun2::zero() / (&one() - &t1());
        assert_eq!(z, RatFun2::zero());
        let p = (&one() - &t1()) / (&one() - &t2());
        let q = (&one() - &t2()) / (&one() - &t1());
        assert_ne!(p, q);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            one().checked_div(&RatFun2::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            RatFun2::new(LaurentPoly2::one(), LaurentPoly2::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_display() {
        let x = t2().scale(&BigRat::from_int(-1)) / (&t1() - &t1().pow(2));
        // monomial content of the denominator moves into the numerator
        assert_eq!(x.to_string(), "(t1^-1*t2) / (t1-1)");
        assert_eq!(RatFun2::from_int(1).to_string(), "1");
    }
}
