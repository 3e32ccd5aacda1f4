//! Eigenvalues `γ_s` of `[e_0, f_s]` on fixed points, by two formulas.

use crate::exact::{Field, Ground};
use crate::partitions::{chi, Cell, Partition, Side};
use crate::Error;

/// The per-box factor of a corner or hole: products over the boxes to the
/// left and above, arms and legs read in `diagram`.
fn box_product<G: Ground>(g: &G, diagram: &Partition, row: usize, col: usize) -> G::F {
    let r = |n: (i32, i32), d: (i32, i32)| {
        g.one_minus(n.0, n.1)
            .try_div(&g.one_minus(d.0, d.1))
            .expect("box factors never vanish")
    };
    let mut v = g.one();
    for s in diagram.sigma_boxes(row, col, Side::Left) {
        let (l, a) = (
            diagram.leg(s).unwrap() as i32,
            diagram.arm(s).unwrap() as i32,
        );
        v *= &r((l + 1, -a), (l, -a));
        v *= &r((1 - l, a + 1), (-l, a + 1));
    }
    for s in diagram.sigma_boxes(row, col, Side::Above) {
        let (l, a) = (
            diagram.leg(s).unwrap() as i32,
            diagram.arm(s).unwrap() as i32,
        );
        v *= &r((-l, a + 1), (-l, a));
        v *= &r((l + 1, 1 - a), (l + 1, -a));
    }
    v
}

/// Sum over corners minus sum over holes, each weighted by `χ^(s-1)`.
pub fn gamma_corner_hole<G: Ground>(g: &G, lam: &Partition, s: i32) -> G::F {
    let mut acc = g.zero();
    for k in lam.removable_rows() {
        let c = Cell::new(k, lam.row(k));
        let w = chi(g, c).powi(s - 1).unwrap();
        acc += &(box_product(g, lam, c.row, c.col) * &w);
    }
    for k in lam.addable_rows() {
        let big = lam.add_box(k).unwrap();
        let c = Cell::new(k, lam.row(k) + 1);
        let w = chi(g, c).powi(s - 1).unwrap();
        acc -= &(box_product(g, &big, c.row, c.col) * &w);
    }
    acc * &g.box_weight()
}

/// Closed form in the row characters `χ_i = t1^(λ_i - 1) t2^(i-1)`, with the
/// infinite tail of empty rows already summed.
pub fn gamma_row_product<G: Ground>(g: &G, lam: &Partition, s: i32) -> G::F {
    let k = lam.len() as i32 + 2;
    let rows = (k - 1) as usize;
    let x: Vec<G::F> = (1..=rows)
        .map(|i| g.mono(lam.row(i) as i32 - 1, i as i32 - 1))
        .collect();
    let t1 = g.mono(1, 0);
    let t2 = g.mono(0, 1);
    let t1t2 = g.mono(1, 1);
    let div = |a: G::F, b: G::F| a.try_div(&b).expect("row factors never vanish");
    let mut a_sum = g.zero();
    let mut b_sum = g.zero();
    for i in 0..rows {
        let xi = &x[i];
        let mut a = xi.powi(s).unwrap()
            * &div(
                g.one() - &(g.mono(1, 2 - k) * xi),
                xi.clone() - &g.mono(0, k - 1),
            );
        let mut b = (t1.clone() * xi).powi(s - 1).unwrap()
            * xi
            * &div(
                g.one() - &(g.mono(2, 2 - k) * xi),
                xi.clone() - &g.mono(-1, k - 1),
            );
        for (j, xj) in x.iter().enumerate() {
            if j == i {
                continue;
            }
            a *= &div(
                (xj.clone() - &(t2.clone() * xi)) * (xi.clone() - &(t1t2.clone() * xj)),
                (xj.clone() - xi) * (xi.clone() - &(t1.clone() * xj)),
            );
            b *= &div(
                (xi.clone() - &(t2.clone() * xj)) * (xj.clone() - &(t1t2.clone() * xi)),
                (xi.clone() - xj) * (xj.clone() - &(t1.clone() * xi)),
            );
        }
        a_sum += &a;
        b_sum += &b;
    }
    let pre = g.one_minus(1, 0).powi(-2).unwrap();
    (a_sum - b_sum) * &pre
}

/// `γ_s` on `[λ]`; fails with a witness if the two formulas disagree.
pub fn gamma<G: Ground>(g: &G, lam: &Partition, s: i32) -> Result<G::F, Error> {
    let a = gamma_corner_hole(g, lam, s);
    let b = gamma_row_product(g, lam, s);
    if a != b {
        return Err(Error::Consistency(format!(
            "gamma_{s} on {lam}: corner/hole {} vs row product {}",
            g.render(&a),
            g.render(&b)
        )));
    }
    Ok(a)
}

/// `-1/((1-t1)(1-t2)) + Σ_{□∈λ} χ(□)`.
pub fn gamma_one_closed<G: Ground>(g: &G, lam: &Partition) -> G::F {
    let mut v = -g.box_weight();
    for c in lam.cells() {
        v += &chi(g, c);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;
    use crate::partitions::partitions_of;

    #[test]
    fn constant_and_linear_terms() {
        let g = Exact::new();
        for n in 0..=4 {
            for lam in partitions_of(n) {
                assert_eq!(gamma(&g, &lam, 0).unwrap(), -g.box_weight(), "{lam}");
                assert_eq!(
                    gamma(&g, &lam, 1).unwrap(),
                    gamma_one_closed(&g, &lam),
                    "{lam}"
                );
            }
        }
        assert_eq!(
            gamma(&g, &Partition::from([1]), 1).unwrap(),
            g.one() - &g.box_weight()
        );
    }
}
