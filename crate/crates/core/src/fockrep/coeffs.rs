//! Matrix coefficients of `e_r` and `f_r` in the fixed-point basis.
//!
//! Two independent formulas are provided for each: a product over the boxes
//! to the left of and above the moving box, with arms and legs read in the
//! larger of the two diagrams, and a product over rows.

use crate::exact::{Field, Ground};
use crate::partitions::{Cell, Partition, Side};
use crate::Error;

fn ratio<G: Ground>(g: &G, num: (i32, i32), den: (i32, i32)) -> G::F {
    g.one_minus(num.0, num.1)
        .try_div(&g.one_minus(den.0, den.1))
        .expect("box factors never vanish")
}

fn leg_arm(p: &Partition, c: Cell) -> (i32, i32) {
    (p.leg(c).unwrap() as i32, p.arm(c).unwrap() as i32)
}

/// Coefficient of `[λ+k]` in `e_r [λ]`.
pub fn e_coeff<G: Ground>(g: &G, lam: &Partition, k: usize, r: i32) -> Result<G::F, Error> {
    let big = lam.add_box(k)?;
    let col = lam.row(k) + 1;
    let mut v = g.box_weight() * g.mono(lam.row(k) as i32, k as i32 - 1).powi(r)?;
    for s in lam.sigma_boxes(k, col, Side::Left) {
        let (l, a) = leg_arm(&big, s);
        v *= &ratio(g, (1 - l, a + 1), (-l, a + 1));
    }
    for s in lam.sigma_boxes(k, col, Side::Above) {
        let (l, a) = leg_arm(&big, s);
        v *= &ratio(g, (l + 1, 1 - a), (l + 1, -a));
    }
    Ok(v)
}

/// Coefficient of `[λ-k]` in `f_r [λ]`.
pub fn f_coeff<G: Ground>(g: &G, lam: &Partition, k: usize, r: i32) -> Result<G::F, Error> {
    if !lam.is_removable(k) {
        return Err(Error::InvalidRow(k, "removable"));
    }
    let col = lam.row(k);
    let mut v = g.mono(col as i32 - 1, k as i32 - 1).powi(r - 1)?;
    for s in lam.sigma_boxes(k, col, Side::Left) {
        let (l, a) = leg_arm(lam, s);
        v *= &ratio(g, (l + 1, -a), (l, -a));
    }
    for s in lam.sigma_boxes(k, col, Side::Above) {
        let (l, a) = leg_arm(lam, s);
        v *= &ratio(g, (-l, a + 1), (-l, a));
    }
    Ok(v)
}

fn row_i32(p: &Partition, i: usize) -> i32 {
    p.row(i) as i32
}

/// Row-product form of the coefficient of `[big]` in `e_r [big - i]`.
///
/// The product over all rows `j` stabilizes: every factor with
/// `j > len(big) + 1` equals one.
pub fn e_coeff_alt<G: Ground>(g: &G, big: &Partition, i: usize, r: i32) -> Result<G::F, Error> {
    if !big.is_removable(i) {
        return Err(Error::InvalidRow(i, "removable"));
    }
    let li = row_i32(big, i);
    let ii = i as i32;
    let mut num = g.mono(li - 1, ii - 1).powi(r)?;
    let mut den = g.one_minus(row_i32(big, 1) - li + 1, 1 - ii) * g.one_minus(1, 1);
    for j in 1..=big.len() + 1 {
        let jj = j as i32;
        num *= &g.one_minus(row_i32(big, j) - li + 1, jj - ii + 1);
        den *= &g.one_minus(row_i32(big, j + 1) - li + 1, jj - ii + 1);
    }
    num.try_div(&den)
}

/// Row-product form of the coefficient of `[small]` in `f_r [small + i]`.
pub fn f_coeff_alt<G: Ground>(g: &G, small: &Partition, i: usize, r: i32) -> Result<G::F, Error> {
    if !small.is_addable(i) {
        return Err(Error::InvalidRow(i, "addable"));
    }
    let li = row_i32(small, i);
    let ii = i as i32;
    let mut num = g.mono(li, ii - 1).powi(r - 1)? * g.one_minus(li - row_i32(small, 1) + 1, ii);
    let mut den = g.one_minus(1, 1);
    for j in 1..=small.len() + 1 {
        let jj = j as i32;
        num *= &g.one_minus(li - row_i32(small, j + 1) + 1, ii - jj);
        den *= &g.one_minus(li - row_i32(small, j) + 1, ii - jj);
    }
    num.try_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Exact, RatFun2};
    use crate::partitions::partitions_of;

    fn p<const N: usize>(x: [usize; N]) -> Partition {
        Partition::from(x)
    }

    #[test]
    fn single_box_values() {
        let g = Exact::new();
        let e = e_coeff(&g, &Partition::empty(), 1, 0).unwrap();
        assert_eq!(e, g.box_weight());
        assert_eq!(e_coeff_alt(&g, &p([1]), 1, 0).unwrap(), e);
        assert_eq!(f_coeff(&g, &p([1]), 1, 1).unwrap(), g.one());
        assert_eq!(f_coeff(&g, &p([1]), 1, 0).unwrap(), g.one());
        assert_eq!(f_coeff_alt(&g, &Partition::empty(), 1, 1).unwrap(), g.one());
    }

    #[test]
    fn second_box_in_first_row() {
        // arms and legs of the left neighbour are read in [2]: leg 1, arm 0
        let g = Exact::new();
        let expect = (g.one_minus(1, 0) * g.one_minus(-1, 1)).inv().unwrap();
        assert_eq!(e_coeff(&g, &p([1]), 1, 0).unwrap(), expect);
    }

    #[test]
    fn invalid_rows_are_errors() {
        let g = Exact::new();
        assert!(e_coeff(&g, &p([2, 2]), 2, 0).is_err());
        assert!(f_coeff(&g, &p([2, 2]), 1, 0).is_err());
        assert!(e_coeff_alt(&g, &p([2, 2]), 1, 0).is_err());
        assert!(f_coeff_alt(&g, &p([2, 2]), 2, 0).is_err());
    }

    #[test]
    fn both_forms_agree_small() {
        let g = Exact::new();
        for n in 0..=4 {
            for lam in partitions_of(n) {
                for r in -2..=2 {
                    for k in lam.addable_rows() {
                        let big = lam.add_box(k).unwrap();
                        let a: RatFun2 = e_coeff(&g, &lam, k, r).unwrap();
                        assert_eq!(a, e_coeff_alt(&g, &big, k, r).unwrap(), "e {lam} {k} {r}");
                    }
                    for k in lam.removable_rows() {
                        let small = lam.remove_box(k).unwrap();
                        let a = f_coeff(&g, &lam, k, r).unwrap();
                        assert_eq!(a, f_coeff_alt(&g, &small, k, r).unwrap(), "f {lam} {k} {r}");
                    }
                }
            }
        }
    }
}
