//! Truncated expansions of rational functions in an auxiliary variable `z`.

use std::collections::BTreeMap;

use super::field::Field;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Powers of `z^-1`.
    AtInfinity,
    /// Powers of `z`.
    AtZero,
}

/// Coefficients `0..=order` of an expansion; `coeffs[k]` multiplies
/// `z^-k` at infinity and `z^k` at zero.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<F> {
    direction: Direction,
    coeffs: Vec<F>,
}

impl<F: Field> TruncSeries<F> {
    pub fn new(direction: Direction, coeffs: Vec<F>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least the constant term"
        );
        TruncSeries { direction, coeffs }
    }

    pub fn constant(direction: Direction, c: F, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        coeffs[0] = c;
        TruncSeries { direction, coeffs }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    /// Truncated product; both factors must share a direction.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.direction, other.direction);
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = F::zero();
                for i in 0..=k {
                    if !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero() {
                        acc += &(self.coeffs[i].clone() * &other.coeffs[k - i]);
                    }
                }
                acc
            })
            .collect();
        TruncSeries {
            direction: self.direction,
            coeffs,
        }
    }
}

/// A Laurent polynomial in `z`: exponent to coefficient, zeros allowed.
pub type ZPoly<F> = BTreeMap<i32, F>;

/// Multiplies two Laurent polynomials in `z`.
pub fn zpoly_mul<F: Field>(a: &ZPoly<F>, b: &ZPoly<F>) -> ZPoly<F> {
    let mut out: ZPoly<F> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.checked_add(*eb).expect("z-exponent overflow");
            let p = ca.clone() * cb;
            match out.get_mut(&e) {
                Some(v) => *v += &p,
                None => {
                    out.insert(e, p);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Expands `num / den` to `order` terms in the given direction.
///
/// Fails if `den` vanishes identically, or if the quotient has a pole at the
/// expansion point.
pub fn expand_series<F: Field>(
    num: &ZPoly<F>,
    den: &ZPoly<F>,
    direction: Direction,
    order: usize,
) -> Result<TruncSeries<F>, Error> {
    let flip = |e: i32| match direction {
        Direction::AtInfinity => -e,
        Direction::AtZero => e,
    };
    let to_u = |p: &ZPoly<F>| -> BTreeMap<i32, F> {
        p.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (flip(*e), c.clone()))
            .collect()
    };
    let num = to_u(num);
    let den = to_u(den);
    let (&shift, lead) = den
        .iter()
        .next()
        .ok_or_else(|| Error::NonInvertible("denominator vanishes identically".into()))?;
    let lead_inv = lead.inv()?;
    let width = order + 1;
    let d: Vec<F> = (0..width)
        .map(|k| {
            den.get(&(shift + k as i32))
                .cloned()
                .unwrap_or_else(F::zero)
        })
        .collect();
    // inverse of the normalized denominator by the standard recursion
    let mut inv = Vec::with_capacity(width);
    inv.push(lead_inv.clone());
    for k in 1..width {
        let mut acc = F::zero();
        for i in 1..=k {
            if !d[i].is_zero() {
                acc += &(d[i].clone() * &inv[k - i]);
            }
        }
        inv.push(-(acc * &lead_inv));
    }
    let mut coeffs = vec![F::zero(); width];
    for (e, c) in &num {
        let s = e - shift;
        if s < 0 {
            return Err(Error::NonInvertible(format!(
                "pole of order {} at the expansion point",
                -s
            )));
        }
        let s = s as usize;
        for k in s..width {
            coeffs[k] += &(c.clone() * &inv[k - s]);
        }
    }
    Ok(TruncSeries { direction, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{Exact, Ground};
    use crate::exact::ratfun::RatFun2;

    fn zp(terms: &[(i32, RatFun2)]) -> ZPoly<RatFun2> {
        terms.iter().cloned().collect()
    }

    fn vacuum(g: &Exact) -> (ZPoly<RatFun2>, ZPoly<RatFun2>) {
        // -(1 - t1^-1 t2^-1 z^-1) / (1 - z^-1)
        let num = zp(&[(0, g.int(-1)), (-1, g.mono(-1, -1))]);
        let den = zp(&[(0, g.one()), (-1, g.int(-1))]);
        (num, den)
    }

    #[test]
    fn vacuum_expansions() {
        let g = Exact::new();
        let (num, den) = vacuum(&g);
        let s = expand_series(&num, &den, Direction::AtInfinity, 1).unwrap();
        assert_eq!(s.coeffs(), &[g.int(-1), g.mono(-1, -1) - g.one()]);
        let s = expand_series(&num, &den, Direction::AtZero, 0).unwrap();
        assert_eq!(s.coeffs(), &[-g.mono(-1, -1)]);
    }

    #[test]
    fn constant_expansion() {
        let g = Exact::new();
        let one = zp(&[(0, g.one())]);
        for dir in [Direction::AtInfinity, Direction::AtZero] {
            let s = expand_series(&one, &one, dir, 4).unwrap();
            assert_eq!(s, TruncSeries::constant(dir, g.one(), 4));
        }
    }

    #[test]
    fn errors() {
        let g = Exact::new();
        let one = zp(&[(0, g.one())]);
        let zero = zp(&[(0, g.zero())]);
        assert!(matches!(
            expand_series(&one, &zero, Direction::AtZero, 2),
            Err(Error::NonInvertible(_))
        ));
        // 1 / z has a pole at zero
        let z = zp(&[(1, g.one())]);
        assert!(expand_series(&one, &z, Direction::AtZero, 2).is_err());
        assert!(expand_series(&one, &z, Direction::AtInfinity, 2).is_ok());
    }

    #[test]
    fn product_of_expansions() {
        let g = Exact::new();
        let a_num = zp(&[(0, g.one()), (1, g.mono(1, 0))]);
        let a_den = zp(&[(0, g.one()), (1, -g.mono(0, 1))]);
        let b_num = zp(&[(0, g.one())]);
        let b_den = zp(&[(0, g.one()), (2, -g.mono(1, 1)), (-1, g.mono(0, 2))]);
        for dir in [Direction::AtInfinity, Direction::AtZero] {
            let a = expand_series(&a_num, &a_den, dir, 6).unwrap();
            let b = expand_series(&b_num, &b_den, dir, 6).unwrap();
            let ab = expand_series(
                &zpoly_mul(&a_num, &b_num),
                &zpoly_mul(&a_den, &b_den),
                dir,
                6,
            )
            .unwrap();
            assert_eq!(a.mul(&b), ab);
        }
    }
}
