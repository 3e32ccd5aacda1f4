//! Values fixed by hand or by independent evaluation.

use kfock::exact::{Exact, Field, Ground, RatFun2};
use kfock::fockrep::{e_coeff, f_coeff, gamma};
use kfock::partitions::{partitions_of, Partition};
use kfock::symfun::{pieri_coeff, pieri_single_box, z_factor};
use kfock::theta::{c_norm, c_ratio_closed, d_factor, k_tilde, Normalization};

fn p(x: &[usize]) -> Partition {
    Partition::from(x)
}

fn ratio(g: &Exact, n: (i32, i32), d: (i32, i32)) -> RatFun2 {
    g.one_minus(n.0, n.1)
        .try_div(&g.one_minus(d.0, d.1))
        .unwrap()
}

#[test]
fn single_box_from_the_vacuum() {
    let g = Exact::new();
    assert_eq!(
        e_coeff(&g, &Partition::empty(), 1, 0).unwrap(),
        g.box_weight()
    );
    assert!(f_coeff(&g, &p(&[1]), 1, 1).unwrap().is_one());
}

#[test]
fn e_coefficient_onto_a_row_of_two() {
    // arms and legs read in the target (2)
    let g = Exact::new();
    let expect = (g.one_minus(1, 0) * g.one_minus(-1, 1)).inv().unwrap();
    assert_eq!(e_coeff(&g, &p(&[1]), 1, 0).unwrap(), expect);
}

#[test]
fn gamma_zero_is_constant() {
    let g = Exact::new();
    for n in 0..=4 {
        for lam in partitions_of(n) {
            assert_eq!(gamma(&g, &lam, 0).unwrap(), -g.box_weight());
        }
    }
}

#[test]
fn normalization_constants() {
    let g = Exact::new();
    assert!(c_norm(&g, &Partition::empty()).is_one());
    assert!(c_norm(&g, &p(&[1])).is_one());
    let two = -(g.mono(1, 0) * g.one_minus(0, 1))
        .try_div(&(g.mono(0, 1) - g.mono(1, 0)))
        .unwrap();
    assert_eq!(c_norm(&g, &p(&[2])), two);
    let c = Normalization::new(&g, 3);
    assert!(c.get(&p(&[1, 1, 1, 1])).is_err());
    for (lam, j) in [(p(&[2, 1]), 2), (p(&[1]), 1), (Partition::empty(), 1)] {
        let big = lam.add_box(j).unwrap();
        let direct = c_norm(&g, &big).try_div(&c_norm(&g, &lam)).unwrap();
        assert_eq!(c_ratio_closed(&g, &lam, j).unwrap(), direct);
    }
}

#[test]
fn d_factors_and_first_entry() {
    let g = Exact::new();
    let base = g.one_minus(1, 0) * g.one_minus(0, 1);
    assert_eq!(d_factor(&g, 1) * &base, g.one());
    assert_eq!(d_factor(&g, 2) * &base, -g.mono(1, 0));
    let c = Normalization::new(&g, 1);
    let k1 = k_tilde(&g, 1, 0, &c).unwrap();
    assert!(k1.op.entry(&p(&[1]), &Partition::empty()).is_one());
}

#[test]
fn specialization_of_a_ratio() {
    let g = Exact::new();
    let x = ratio(&g, (1, 0), (0, 1));
    let expect = -(g.mono(0, 1) * g.one_minus(1, 0))
        .try_div(&g.one_minus(0, 1))
        .unwrap();
    assert_eq!(g.specialize_qt(&x), expect);
    assert!(g.specialize_qt(&g.one()).is_one());
}

#[test]
fn pieri_on_small_strips() {
    let g = Exact::new().qt();
    assert!(pieri_coeff(&g, &p(&[1]), &Partition::empty()).is_one());
    // a single box is always a vertical strip
    assert!(pieri_coeff(&g, &p(&[2]), &p(&[1])).is_one());
    assert!(pieri_coeff(&g, &p(&[2]), &Partition::empty()).is_zero());
    let expect = ratio(&g, (1, 0), (1, 1)) * ratio(&g, (0, 2), (0, 1));
    assert_eq!(pieri_single_box(&g, &p(&[1]), 2).unwrap(), expect);
    assert_eq!(pieri_coeff(&g, &p(&[1, 1]), &p(&[1])), expect);
}

#[test]
fn z_factors() {
    assert_eq!(z_factor(&p(&[2, 2])), kfock::exact::BigRat::from_int(8));
    assert_eq!(z_factor(&p(&[3, 1, 1])), kfock::exact::BigRat::from_int(6));
}
