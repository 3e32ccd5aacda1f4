//! Sparse Laurent polynomials in `x1..xn` with scalar coefficients.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::field::Field;
use crate::Error;

/// Hard ceiling on the number of variables.
pub const MAX_VARS: usize = 8;

pub type Exps = [i32; MAX_VARS];

/// Terms keyed by exponent vectors; lexicographic key order, so the last
/// entry is the lex-leading term with `x1 > x2 > ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<F> {
    nvars: usize,
    terms: BTreeMap<Exps, F>,
}

fn add_into<F: Field>(map: &mut BTreeMap<Exps, F>, e: Exps, c: F) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&e) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                map.remove(&e);
            }
        }
        None => {
            map.insert(e, c);
        }
    }
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut out = [0; MAX_VARS];
    for k in 0..MAX_VARS {
        out[k] = a[k].checked_add(b[k]).expect("exponent overflow");
    }
    out
}

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        add_into(&mut p.terms, [0; MAX_VARS], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn monomial(nvars: usize, exps: &[i32], c: F) -> Self {
        assert!(exps.len() <= nvars);
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        let mut p = Self::zero(nvars);
        add_into(&mut p.terms, e, c);
        p
    }

    /// `x_i^p` (0-based index).
    pub fn var_pow(nvars: usize, i: usize, p: i32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = p;
        Self::monomial(nvars, &e, F::one())
    }

    /// `x_i - c x_j` (0-based indices).
    pub fn linear(nvars: usize, i: usize, j: usize, c: &F) -> Self {
        let mut p = Self::var_pow(nvars, i, 1);
        let mut e = [0; MAX_VARS];
        e[j] = 1;
        add_into(&mut p.terms, e, -c.clone());
        p
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Exps, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            debug_assert!(e[nvars..].iter().all(|&x| x == 0));
            add_into(&mut p.terms, e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &F)> {
        self.terms.iter()
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

    pub fn coeff(&self, exps: &[i32]) -> F {
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_scaled(o, &F::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_scaled(o, &-F::one())
    }

    /// `self + c * o`.
    pub fn add_scaled(&self, o: &Self, c: &F) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.terms.clone();
        for (e, v) in &o.terms {
            add_into(&mut out, *e, v.clone() * c);
        }
        MPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                add_into(&mut out, add_exps(ea, eb), ca.clone() * cb);
            }
        }
        MPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    /// Multiplies by `x_i - c x_j` without building the factor.
    pub fn mul_linear(&self, i: usize, j: usize, c: &F) -> Self {
        let mut out = BTreeMap::new();
        for (e, v) in &self.terms {
            let mut ei = *e;
            ei[i] += 1;
            add_into(&mut out, ei, v.clone());
            let mut ej = *e;
            ej[j] += 1;
            add_into(&mut out, ej, -(v.clone() * c));
        }
        MPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    /// Renames `x_k -> x_{sig[k]}`.
    pub fn permute(&self, sig: &[usize]) -> Self {
        assert_eq!(sig.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| {
                let mut ne = [0; MAX_VARS];
                for (k, &x) in e[..self.nvars].iter().enumerate() {
                    ne[sig[k]] += x;
                }
                (ne, v.clone())
            })
            .collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Re-indexes into `nvars` variables, shifting every index by `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= nvars && nvars <= MAX_VARS);
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| {
                let mut ne = [0; MAX_VARS];
                ne[offset..offset + self.nvars].copy_from_slice(&e[..self.nvars]);
                (ne, v.clone())
            })
            .collect();
        MPoly { nvars, terms }
    }

    /// Rewrites each term through `f`, which returns the new exponents and a
    /// scalar factor; like terms are collected.
    pub fn map_terms(&self, nvars: usize, f: impl Fn(&Exps) -> (Exps, F)) -> Self {
        let mut out = BTreeMap::new();
        for (e, v) in &self.terms {
            let (ne, s) = f(e);
            add_into(&mut out, ne, v.clone() * &s);
        }
        MPoly { nvars, terms: out }
    }

    /// Symmetric under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|k| {
            let mut sig: Vec<usize> = (0..self.nvars).collect();
            sig.swap(k, k + 1);
            self.permute(&sig) == *self
        })
    }

    pub fn eval(&self, point: &[F]) -> Result<F, Error> {
        assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (e, v) in &self.terms {
            let mut t = v.clone();
            for k in 0..self.nvars {
                if e[k] != 0 {
                    t *= &point[k].powi(e[k])?;
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Exact quotient by `x_i - x_j`.
    ///
    /// Within each binary form in `(x_i, x_j)` the quotient coefficients are
    /// the tail sums of the dividend's coefficients, and the full sum must
    /// vanish.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<Self, Error> {
        assert!(i != j && i < self.nvars && j < self.nvars);
        let mut groups: BTreeMap<(Exps, i32), Vec<(i32, F)>> = BTreeMap::new();
        for (e, v) in &self.terms {
            let mut key = *e;
            key[i] = 0;
            key[j] = 0;
            groups
                .entry((key, e[i] + e[j]))
                .or_default()
                .push((e[i], v.clone()));
        }
        let mut out = BTreeMap::new();
        for ((key, d), mut list) in groups {
            list.sort_by_key(|a| std::cmp::Reverse(a.0));
            let kmin = list.last().unwrap().0;
            let mut tail = F::zero();
            let mut it = list.into_iter().peekable();
            let mut k = it.peek().unwrap().0;
            while k > kmin {
                if let Some((_, c)) = it.next_if(|(kk, _)| *kk == k) {
                    tail += &c;
                }
                // quotient coefficient of x_i^{k-1} x_j^{d-k}
                if !tail.is_zero() {
                    let mut e = key;
                    e[i] = k - 1;
                    e[j] = d - k;
                    out.insert(e, tail.clone());
                }
                k -= 1;
            }
            let (_, c) = it.next().unwrap();
            tail += &c;
            if !tail.is_zero() {
                return Err(Error::NotDivisible);
            }
        }
        Ok(MPoly {
            nvars: self.nvars,
            terms: out,
        })
    }

    fn min_exps(&self) -> Exps {
        let mut m = [0; MAX_VARS];
        let mut first = true;
        for e in self.terms.keys() {
            for k in 0..self.nvars {
                m[k] = if first { e[k] } else { m[k].min(e[k]) };
            }
            first = false;
        }
        m
    }

    fn shifted(&self, s: &Exps, sign: i32) -> Self {
        self.map_terms(self.nvars, |e| {
            let mut ne = *e;
            for k in 0..MAX_VARS {
                ne[k] += sign * s[k];
            }
            (ne, F::one())
        })
    }

    /// Exact quotient `self / q`, up to Laurent monomials.
    ///
    /// Both operands are shifted into the polynomial ring and divided
    /// lexicographically; a nonzero remainder means `q` does not divide.
    pub fn divide_exact(&self, q: &Self) -> Result<Self, Error> {
        assert_eq!(self.nvars, q.nvars);
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let sp = self.min_exps();
        let sq = q.min_exps();
        let mut rem = self.shifted(&sp, -1).terms;
        let q0 = q.shifted(&sq, -1);
        let (lq, lc) = q0.terms.iter().next_back().unwrap();
        let lc_inv = lc.inv()?;
        let mut quot = BTreeMap::new();
        while let Some((lp, cp)) = rem.iter().next_back() {
            let mut e = [0; MAX_VARS];
            for k in 0..MAX_VARS {
                e[k] = lp[k] - lq[k];
                if e[k] < 0 {
                    return Err(Error::NotDivisible);
                }
            }
            let c = cp.clone() * &lc_inv;
            for (eq, vq) in &q0.terms {
                add_into(&mut rem, add_exps(&e, eq), -(c.clone() * vq));
            }
            quot.insert(e, c);
        }
        let mut shift = [0; MAX_VARS];
        for k in 0..MAX_VARS {
            shift[k] = sp[k] - sq[k];
        }
        Ok(MPoly {
            nvars: self.nvars,
            terms: quot,
        }
        .shifted(&shift, 1))
    }

    /// Text with variables `x1..xn`, terms in descending lex order.
    pub fn to_string_with(&self, names: [&str; 2]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (e, v)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for (k, &ek) in e.iter().enumerate().take(self.nvars) {
                if ek == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if ek == 1 {
                    let _ = write!(mono, "x{}", k + 1);
                } else {
                    let _ = write!(mono, "x{}^{}", k + 1, ek);
                }
            }
            let c = v.render(names);
            let compound = c[1..].contains(['+', '-', '/']) || c.contains(' ');
            let c = if compound { format!("({c})") } else { c };
            if idx > 0 {
                s.push_str(" + ");
            }
            match (mono.is_empty(), c.as_str()) {
                (true, _) => s.push_str(&c),
                (false, "1") => s.push_str(&mono),
                (false, "-1") => {
                    s.push('-');
                    s.push_str(&mono)
                }
                (false, _) => {
                    s.push_str(&c);
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat::BigRat;

    type P = MPoly<BigRat>;

    fn x(i: usize, p: i32) -> P {
        P::var_pow(2, i, p)
    }

    #[test]
    fn divide_difference_of_squares() {
        let p = x(0, 2).sub(&x(1, 2));
        let d = P::linear(2, 0, 1, &BigRat::one());
        let q = p.divide_exact(&d).unwrap();
        assert_eq!(q, x(0, 1).add(&x(1, 1)));
        assert_eq!(p.divide_by_difference(0, 1).unwrap(), q);
    }

    #[test]
    fn cube_not_divisible_by_square() {
        let p = x(0, 3).sub(&x(1, 3));
        let d = P::linear(2, 0, 1, &BigRat::one());
        assert!(matches!(
            p.divide_exact(&d.mul(&d)),
            Err(Error::NotDivisible)
        ));
        let q = p.divide_by_difference(0, 1).unwrap();
        assert!(matches!(
            q.divide_by_difference(0, 1),
            Err(Error::NotDivisible)
        ));
    }

    #[test]
    fn laurent_division() {
        // (x1^-1 - x2^-1) = -(x1 - x2) / (x1 x2)
        let p = x(0, -1).sub(&x(1, -1));
        let q = p.divide_by_difference(0, 1).unwrap();
        let expect = P::monomial(2, &[-1, -1], BigRat::from_int(-1));
        assert_eq!(q, expect);
        let d = P::linear(2, 0, 1, &BigRat::one());
        assert_eq!(p.divide_exact(&d).unwrap(), expect);
    }

    #[test]
    fn symmetry_and_permutation() {
        let p = x(0, 2).add(&x(1, 2));
        assert!(p.is_symmetric());
        let a = x(0, 2).add(&x(1, 1));
        assert!(!a.is_symmetric());
        assert_eq!(a.permute(&[1, 0]), x(1, 2).add(&x(0, 1)));
    }

    #[test]
    fn rendering() {
        let p = P::linear(2, 0, 1, &BigRat::new(1, 2)).mul(&x(0, 1));
        assert_eq!(p.to_string_with(["t1", "t2"]), "x1^2 + (-1/2)*x1*x2");
        assert_eq!(P::zero(2).to_string_with(["t1", "t2"]), "0");
    }
}
