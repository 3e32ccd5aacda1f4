//! Eigenvalues of the diagonal currents `ψ±(z)` on fixed points.

use std::collections::BTreeMap;

use crate::exact::series::zpoly_mul;
use crate::exact::{expand_series, Direction, Field, Ground, TruncSeries, ZPoly};
use crate::partitions::{chi, Partition};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// Expansion at `z = ∞`.
    Plus,
    /// Expansion at `z = 0`.
    Minus,
}

impl Sign {
    pub fn direction(self) -> Direction {
        match self {
            Sign::Plus => Direction::AtInfinity,
            Sign::Minus => Direction::AtZero,
        }
    }
}

/// `q1, q2, q3 = t1, t2, 1/(t1 t2)`.
pub fn q_params<G: Ground>(g: &G) -> [G::F; 3] {
    [g.mono(1, 0), g.mono(0, 1), g.mono(-1, -1)]
}

/// Elementary symmetric functions of `q1, q2, q3`.
pub fn sigmas<G: Ground>(g: &G) -> [G::F; 3] {
    let [q1, q2, q3] = q_params(g);
    let s1 = q1.clone() + &q2 + &q3;
    let s2 = q1.clone() * &q2 + &(q1.clone() * &q3) + &(q2.clone() * &q3);
    let s3 = q1 * &q2 * &q3;
    [s1, s2, s3]
}

/// `(1 - q1)(1 - q2)(1 - q3)`.
pub fn d_const<G: Ground>(g: &G) -> G::F {
    g.one_minus(1, 0) * g.one_minus(0, 1) * g.one_minus(-1, -1)
}

/// `1 - c z^-1`.
fn linear<F: Field>(c: F) -> ZPoly<F> {
    BTreeMap::from([(0, F::one()), (-1, -c)])
}

/// Numerator and denominator in `z` of the eigenvalue of `ψ±(z)` on `[λ]`.
///
/// The vacuum factor is `-(1 - q3 z^-1)/(1 - z^-1)`; each box contributes
/// `∏_c (1 - c χ z^-1) / ∏_d (1 - d χ z^-1)` with `c ∈ {1/t1, 1/t2, t1 t2}`
/// and `d ∈ {t1, t2, 1/(t1 t2)}`.
pub fn psi_rational<G: Ground>(g: &G, lam: &Partition) -> (ZPoly<G::F>, ZPoly<G::F>) {
    let mut num: ZPoly<G::F> = BTreeMap::from([(0, g.int(-1)), (-1, g.mono(-1, -1))]);
    let mut den = linear(g.one());
    let ups = [g.mono(-1, 0), g.mono(0, -1), g.mono(1, 1)];
    let downs = q_params(g);
    for cell in lam.cells() {
        let x = chi(g, cell);
        for c in &ups {
            num = zpoly_mul(&num, &linear(c.clone() * &x));
        }
        for d in &downs {
            den = zpoly_mul(&den, &linear(d.clone() * &x));
        }
    }
    (num, den)
}

pub fn psi_eigenvalue<G: Ground>(
    g: &G,
    lam: &Partition,
    sign: Sign,
    order: usize,
) -> Result<TruncSeries<G::F>, Error> {
    let (num, den) = psi_rational(g, lam);
    expand_series(&num, &den, sign.direction(), order)
}

/// Expansion of the one-box ratio `ψ(z)|_{λ+□} / ψ(z)|_λ` for a box of character `x`.
pub fn psi_edge_ratio<G: Ground>(
    g: &G,
    x: &G::F,
    sign: Sign,
    order: usize,
) -> Result<TruncSeries<G::F>, Error> {
    let mut num: ZPoly<G::F> = BTreeMap::from([(0, g.one())]);
    let mut den = num.clone();
    for c in [g.mono(-1, 0), g.mono(0, -1), g.mono(1, 1)] {
        num = zpoly_mul(&num, &linear(c * x));
    }
    for d in q_params(g) {
        den = zpoly_mul(&den, &linear(d * x));
    }
    expand_series(&num, &den, sign.direction(), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;

    #[test]
    fn vacuum_constant_terms() {
        let g = Exact::new();
        let e = Partition::empty();
        let p = psi_eigenvalue(&g, &e, Sign::Plus, 0).unwrap();
        assert_eq!(p.coeffs(), &[g.int(-1)]);
        let m = psi_eigenvalue(&g, &e, Sign::Minus, 0).unwrap();
        assert_eq!(m.coeffs(), &[-g.mono(-1, -1)]);
    }

    #[test]
    fn one_box_recursion() {
        let g = Exact::new();
        let one = Partition::from([1]);
        for sign in [Sign::Plus, Sign::Minus] {
            let a = psi_eigenvalue(&g, &one, sign, 8).unwrap();
            let b = psi_eigenvalue(&g, &Partition::empty(), sign, 8).unwrap();
            let r = psi_edge_ratio(&g, &g.one(), sign, 8).unwrap();
            assert_eq!(a, b.mul(&r));
        }
    }

    #[test]
    fn sigma_values() {
        let g = Exact::new();
        let [s1, s2, s3] = sigmas(&g);
        assert_eq!(s1, g.mono(1, 0) + g.mono(0, 1) + g.mono(-1, -1));
        assert_eq!(s2, g.mono(1, 1) + g.mono(-1, 0) + g.mono(0, -1));
        assert_eq!(s3, g.one());
    }
}
