//! Symmetric functions over `Q(q, t)`: monomial, power-sum and elementary
//! bases, the Macdonald inner product, Macdonald polynomials and the Pieri rule.
//!
//! Scalars come from a ground in `(q, t)` mode, so `g.mono(a, b)` is `q^a t^b`.

pub mod bases;
pub mod macdonald;

use std::collections::BTreeMap;

use serde_json::{json, Value};

pub use bases::{newton_e_from_p, newton_recursion, z_factor, RatVec};
pub use macdonald::{pieri_coeff, pieri_single_box, MacdonaldTable};

use crate::exact::{Field, Ground};
use crate::partitions::{partitions_of, Partition};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Monomial,
    Power,
    Elementary,
    Macdonald,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Power => "p",
            Basis::Elementary => "e",
            Basis::Macdonald => "P",
        }
    }
}

/// A symmetric function as a sparse combination of one basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFun<F> {
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, F>,
}

impl<F: Field> SymFun<F> {
    pub fn zero(basis: Basis) -> Self {
        SymFun {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, p: Partition, c: F) -> Self {
        let mut s = Self::zero(basis);
        s.add_term(p, c);
        s
    }

    pub fn add_term(&mut self, p: Partition, c: F) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(p.clone()).or_insert_with(F::zero);
        *e += &c;
        if e.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn coeff(&self, p: &Partition) -> F {
        self.coeffs.get(p).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rat(basis: Basis, v: &RatVec) -> Self {
        let mut s = Self::zero(basis);
        for (p, c) in v {
            s.add_term(p.clone(), F::from_rat(c.clone()));
        }
        s
    }

    /// Replaces each basis element by a rational combination of another basis.
    fn substitute(&self, to: Basis, table: &BTreeMap<Partition, RatVec>) -> Self {
        let mut out = Self::zero(to);
        for (p, c) in &self.coeffs {
            for (q, x) in &table[p] {
                out.add_term(q.clone(), c.clone() * &F::from_rat(x.clone()));
            }
        }
        out
    }

    pub fn to_json<G: Ground<F = F>>(&self, g: &G) -> Value {
        let coeffs: serde_json::Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(p, c)| (p.to_string(), json!(g.render(c))))
            .collect();
        json!({ "basis": self.basis.tag(), "coeffs": coeffs })
    }
}

/// Change-of-basis tables among `m`, `p` and `e` up to a degree bound.
#[derive(Clone, Debug)]
pub struct BasisTables {
    degree: usize,
    p_in_m: BTreeMap<Partition, RatVec>,
    m_in_p: BTreeMap<Partition, RatVec>,
    e_in_p: BTreeMap<Partition, RatVec>,
    p_in_e: BTreeMap<Partition, RatVec>,
}

impl BasisTables {
    pub fn new(degree: usize) -> Self {
        let singles = newton_recursion(degree);
        let mut t = BasisTables {
            degree,
            p_in_m: BTreeMap::new(),
            m_in_p: BTreeMap::new(),
            e_in_p: BTreeMap::new(),
            p_in_e: BTreeMap::new(),
        };
        for n in 0..=degree {
            let pm: BTreeMap<Partition, RatVec> = partitions_of(n)
                .into_iter()
                .map(|l| {
                    let v = bases::power_in_monomial(&l);
                    (l, v)
                })
                .collect();
            let ep: BTreeMap<Partition, RatVec> = partitions_of(n)
                .into_iter()
                .map(|l| {
                    let v = bases::elementary_in_power(&l, &singles);
                    (l, v)
                })
                .collect();
            t.m_in_p.extend(bases::invert(&pm));
            t.p_in_e.extend(bases::invert(&ep));
            t.p_in_m.extend(pm);
            t.e_in_p.extend(ep);
        }
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn check_degree<F: Field>(&self, f: &SymFun<F>) -> Result<(), Error> {
        match f.coeffs.keys().find(|p| p.size() > self.degree) {
            Some(p) => Err(Error::InvalidArgument(format!(
                "{p} exceeds the table degree {}",
                self.degree
            ))),
            None => Ok(()),
        }
    }

    /// Conversion among `m`, `p` and `e`; Macdonald conversions go through
    /// [`MacdonaldTable`].
    pub fn convert<F: Field>(&self, f: &SymFun<F>, to: Basis) -> Result<SymFun<F>, Error> {
        self.check_degree(f)?;
        if f.basis == to {
            return Ok(f.clone());
        }
        let in_p = match f.basis {
            Basis::Power => f.clone(),
            Basis::Monomial => f.substitute(Basis::Power, &self.m_in_p),
            Basis::Elementary => f.substitute(Basis::Power, &self.e_in_p),
            Basis::Macdonald => {
                return Err(Error::InvalidArgument(
                    "Macdonald coefficients need a MacdonaldTable".into(),
                ))
            }
        };
        match to {
            Basis::Power => Ok(in_p),
            Basis::Monomial => Ok(in_p.substitute(Basis::Monomial, &self.p_in_m)),
            Basis::Elementary => Ok(in_p.substitute(Basis::Elementary, &self.p_in_e)),
            Basis::Macdonald => Err(Error::InvalidArgument(
                "Macdonald coefficients need a MacdonaldTable".into(),
            )),
        }
    }

    /// `e_λ` in the monomial basis, counted directly.
    pub fn elementary_monomial<F: Field>(lam: &Partition) -> SymFun<F> {
        SymFun::from_rat(Basis::Monomial, &bases::elementary_in_monomial(lam))
    }

    /// Product, computed in the power-sum basis and returned there.
    pub fn mul<F: Field>(&self, a: &SymFun<F>, b: &SymFun<F>) -> Result<SymFun<F>, Error> {
        let (a, b) = (
            self.convert(a, Basis::Power)?,
            self.convert(b, Basis::Power)?,
        );
        let mut out = SymFun::zero(Basis::Power);
        for (p, x) in &a.coeffs {
            for (q, y) in &b.coeffs {
                out.add_term(bases::union(p, q), x.clone() * y);
            }
        }
        Ok(out)
    }

    /// The Macdonald inner product `(p_λ, p_μ) = δ z_λ ∏ (1 - q^λi)/(1 - t^λi)`.
    pub fn inner_product<G: Ground>(
        &self,
        g: &G,
        a: &SymFun<G::F>,
        b: &SymFun<G::F>,
    ) -> Result<G::F, Error> {
        let (a, b) = (
            self.convert(a, Basis::Power)?,
            self.convert(b, Basis::Power)?,
        );
        let mut acc = g.zero();
        for (p, x) in &a.coeffs {
            if let Some(y) = b.coeffs.get(p) {
                acc += &(x.clone() * y * &power_norm(g, p));
            }
        }
        Ok(acc)
    }
}

/// `(p_λ, p_λ)`.
pub fn power_norm<G: Ground>(g: &G, lam: &Partition) -> G::F {
    let mut v = G::F::from_rat(z_factor(lam));
    for &r in lam.parts() {
        let r = r as i32;
        v *= &g
            .one_minus(r, 0)
            .try_div(&g.one_minus(0, r))
            .expect("1 - t^r is nonzero");
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;

    #[test]
    fn inner_products_of_power_sums() {
        let g = Exact::new().qt();
        let t = BasisTables::new(2);
        let p = |x: &[usize]| SymFun::single(Basis::Power, Partition::from(x), g.one());
        let ip = |a, b| t.inner_product(&g, &a, &b).unwrap();
        assert_eq!(
            ip(p(&[1]), p(&[1])),
            g.one_minus(1, 0).try_div(&g.one_minus(0, 1)).unwrap()
        );
        assert!(ip(p(&[2]), p(&[1, 1])).is_zero());
        assert_eq!(
            ip(p(&[2]), p(&[2])),
            g.int(2) * g.one_minus(2, 0).try_div(&g.one_minus(0, 2)).unwrap()
        );
    }

    #[test]
    fn conversions_round_trip() {
        let g = Exact::new().qt();
        let t = BasisTables::new(4);
        for lam in partitions_of(4) {
            for basis in [Basis::Monomial, Basis::Power, Basis::Elementary] {
                let f = SymFun::single(basis, lam.clone(), g.one());
                for to in [Basis::Monomial, Basis::Power, Basis::Elementary] {
                    let back = t.convert(&t.convert(&f, to).unwrap(), basis).unwrap();
                    assert_eq!(back, f);
                }
            }
            let direct = BasisTables::elementary_monomial(&lam);
            let via_p = t
                .convert(
                    &SymFun::single(Basis::Elementary, lam.clone(), g.one()),
                    Basis::Monomial,
                )
                .unwrap();
            assert_eq!(direct, via_p);
        }
    }
}
