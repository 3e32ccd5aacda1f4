//! Sparse Laurent polynomials in two variables over `BigRat`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::bigrat::BigRat;

/// Exponent pair `t1^a * t2^b`, ordered graded-lexicographically with `t1 > t2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    pub a: i32,
    pub b: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { a: 0, b: 0 };

    pub fn new(a: i32, b: i32) -> Self {
        Mono { a, b }
    }

    pub fn degree(self) -> i64 {
        self.a as i64 + self.b as i64
    }

    /// Exponent overflow is a hard error.
    pub fn times(self, o: Mono) -> Mono {
        Mono {
            a: self.a.checked_add(o.a).expect("t1 exponent overflow"),
            b: self.b.checked_add(o.b).expect("t2 exponent overflow"),
        }
    }

    pub fn over(self, o: Mono) -> Mono {
        Mono {
            a: self.a.checked_sub(o.a).expect("t1 exponent overflow"),
            b: self.b.checked_sub(o.b).expect("t2 exponent overflow"),
        }
    }

    pub fn pow(self, e: i32) -> Mono {
        Mono {
            a: self.a.checked_mul(e).expect("t1 exponent overflow"),
            b: self.b.checked_mul(e).expect("t2 exponent overflow"),
        }
    }

    pub fn inv(self) -> Mono {
        Mono::ONE.over(self)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.a.cmp(&other.a))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial `sum c * t1^a * t2^b`.
///
/// Terms are kept sorted in strictly decreasing monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: Vec<(Mono, BigRat)>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRat::from_int(n))
    }

    pub fn monomial(a: i32, b: i32) -> Self {
        Self::term(BigRat::one(), Mono::new(a, b))
    }

    pub fn term(c: BigRat, m: Mono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly2 {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(it: impl IntoIterator<Item = (Mono, BigRat)>) -> Self {
        let mut v: Vec<(Mono, BigRat)> = it.into_iter().collect();
        Self::from_unsorted(&mut v)
    }

    fn from_unsorted(v: &mut Vec<(Mono, BigRat)>) -> Self {
        v.sort_by_key(|x| std::cmp::Reverse(x.0));
        let mut out: Vec<(Mono, BigRat)> = Vec::with_capacity(v.len());
        for (m, c) in v.drain(..) {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly2 { terms: out }
    }

    /// `1 - c * t1^a * t2^b`, the factor shape that appears everywhere.
    pub fn one_minus(a: i32, b: i32) -> Self {
        Self::one() - Self::monomial(a, b)
    }

    pub fn terms(&self) -> &[(Mono, BigRat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    /// A single term (including constants).
    pub fn as_term(&self) -> Option<(Mono, &BigRat)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Mono, BigRat)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: Mono) -> BigRat {
        self.terms
            .iter()
            .find(|(x, _)| *x == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Componentwise minimum exponents; `(0, 0)` for zero.
    pub fn min_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((m0, _)) = it.next() else {
            return Mono::ONE;
        };
        let (mut a, mut b) = (m0.a, m0.b);
        for (m, _) in it {
            a = a.min(m.a);
            b = b.min(m.b);
        }
        Mono::new(a, b)
    }

    pub fn max_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((m0, _)) = it.next() else {
            return Mono::ONE;
        };
        let (mut a, mut b) = (m0.a, m0.b);
        for (m, _) in it {
            a = a.max(m.a);
            b = b.max(m.b);
        }
        Mono::new(a, b)
    }

    /// Multiplies by the monomial `m`; order is preserved.
    pub fn shift(&self, m: Mono) -> Self {
        if m == Mono::ONE {
            return self.clone();
        }
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.times(m), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly2 {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &BigRat, m: Mono) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self.terms.iter().map(|(x, y)| (x.times(m), y * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
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

    /// Applies an exponent map to every monomial (e.g. `t2 -> t2^-1`).
    pub fn map_exponents(&self, f: impl Fn(Mono) -> Mono) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    pub fn eval(&self, t1: &BigRat, t2: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            acc += &(c * &t1.pow(m.a) * t2.pow(m.b));
        }
        acc
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() || j < y.len() {
            let ord = if i == x.len() {
                Ordering::Less
            } else if j == y.len() {
                Ordering::Greater
            } else {
                x[i].0.cmp(&y[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&y[j].1 } else { y[j].1.clone() };
                    out.push((y[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &x[i].1 - &y[j].1
                    } else {
                        &x[i].1 + &y[j].1
                    };
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly2 { terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = other.as_term() {
            return self.mul_term(c, m);
        }
        if let Some((m, c)) = self.as_term() {
            return other.mul_term(c, m);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                v.push((m1.times(*m2), c1 * c2));
            }
        }
        Self::from_unsorted(&mut v)
    }

    /// Exact division in the Laurent ring. `None` when `q` does not divide `self`.
    pub fn div_exact(&self, q: &Self) -> Option<Self> {
        assert!(!q.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = q.as_term() {
            return Some(self.mul_term(&c.recip().unwrap(), m.inv()));
        }
        // Shift both into the polynomial ring; q keeps no monomial content so
        // divisibility is unaffected by the shift of the dividend.
        let qm = q.min_exponents();
        let q = q.shift(qm.inv());
        let pm = self.min_exponents();
        let mut rem: BTreeMap<Mono, BigRat> = self
            .terms
            .iter()
            .map(|(m, c)| (m.over(pm), c.clone()))
            .collect();
        let (lq, lc) = q.terms[0].clone();
        let lc_inv = lc.recip().unwrap();
        let mut quot = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            if m.a < lq.a || m.b < lq.b {
                return None;
            }
            let qm_ = m.over(lq);
            let qc = c * &lc_inv;
            for (tm, tc) in &q.terms {
                let key = tm.times(qm_);
                let delta = tc * &qc;
                let e = rem.entry(key).or_insert_with(BigRat::zero);
                *e -= &delta;
                if e.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm_, qc));
        }
        let shift = pm.over(qm);
        Some(Self::from_terms(
            quot.into_iter().map(|(m, c)| (m.times(shift), c)),
        ))
    }

    /// Writes the polynomial with the given variable names.
    pub fn write_with(&self, f: &mut impl fmt::Write, names: [&str; 2]) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_char('-')?;
                }
            } else {
                f.write_char(if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Mono::ONE {
                factors.push(abs.to_string());
            }
            for (e, name) in [(m.a, names[0]), (m.b, names[1])] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }

    pub fn to_string_with(&self, names: [&str; 2]) -> String {
        let mut s = String::new();
        self.write_with(&mut s, names).unwrap();
        s
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(["t1", "t2"]))
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.merge(rhs, false)
    }
}

impl Sub<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.merge(rhs, true)
    }
}

impl Mul<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.mul_impl(rhs)
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self.merge(&rhs, false)
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self.merge(&rhs, true)
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self.mul_impl(&rhs)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> LaurentPoly2 {
        LaurentPoly2::monomial(1, 0)
    }
    fn t2() -> LaurentPoly2 {
        LaurentPoly2::monomial(0, 1)
    }

    #[test]
    fn grlex_order_puts_t1_first() {
        let p = &(&t2() + &t1()) + &LaurentPoly2::one();
        assert_eq!(p.to_string(), "t1+t2+1");
        let q = &t1().pow(2) - &(&t1() * &t2()).scale(&BigRat::from_int(3));
        assert_eq!(q.to_string(), "t1^2-3*t1*t2");
    }

    #[test]
    fn negative_exponents_render() {
        let p = LaurentPoly2::term(BigRat::new(-1, 2), Mono::new(-1, 2));
        assert_eq!(p.to_string(), "-1/2*t1^-1*t2^2");
    }

    #[test]
    fn exact_division() {
        let x = t1();
        let y = t2();
        let p = &(&x * &x) - &(&y * &y);
        let q = &x - &y;
        assert_eq!(p.div_exact(&q).unwrap(), &x + &y);
        let cube = &x.pow(3) - &y.pow(3);
        assert!(cube.div_exact(&q.pow(2)).is_none());
        // Laurent dividend
        let lp = p.shift(Mono::new(-3, 1));
        assert_eq!(lp.div_exact(&q).unwrap(), (&x + &y).shift(Mono::new(-3, 1)));
    }

    #[test]
    fn cancellation_to_zero() {
        let p = &LaurentPoly2::one_minus(1, 0) + &(&t1() - &LaurentPoly2::one());
        assert!(p.is_zero());
    }
}
