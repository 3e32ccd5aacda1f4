//! The action of shuffle elements on the fixed-point basis.
//!
//! A matrix element is `F(χ) / ∏_{a<b} λ(χ_a, χ_b)` times the chain of `e_0`
//! coefficients along the added boxes. Some kernel factors `χ_a - q χ_b`
//! vanish on diagrams containing a 2x2 square; there the value is the limit
//! along `χ_k -> χ_k (1 + ε v_k)` for fixed distinct weights `v_k`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{star_product, ShuffleElement};
use crate::exact::mpoly::MAX_VARS;
use crate::exact::{BigRat, Field, Ground};
use crate::fockrep::{e_coeff, q_params, FockVector, GradedOperator};
use crate::partitions::{chi, partitions_of, partitions_up_to, Cell, Partition};
use crate::report::Check;
use crate::Error;

const WEIGHTS: [i64; MAX_VARS] = [2, 3, 5, 7, 11, 13, 17, 19];

pub const HOMOMORPHISM: &str = "shuffle action is an anti-homomorphism: F(G(v)) = (G*F)(v)";
pub const ORDER_INDEPENDENCE: &str = "shuffle matrix element independent of box order";
pub const K_COMMUTE_ELEMENT: &str = "K_m * K_n = K_n * K_m in the shuffle algebra";
pub const GENERATOR_ACTION: &str = "degree-one shuffle generator x^r acts as e_r";
pub const K_COMMUTE_OPERATOR: &str = "K_m K_n = K_n K_m acting on the Fock space";

/// Power series in `ε` truncated after `ε^len-1`.
fn ser_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len();
    (0..n)
        .map(|k| {
            let mut acc = F::zero();
            for i in 0..=k {
                if !a[i].is_zero() && !b[k - i].is_zero() {
                    acc += &(a[i].clone() * &b[k - i]);
                }
            }
            acc
        })
        .collect()
}

/// `(1 + v ε)^e` to `len` terms.
fn binomial_series(e: i32, v: i64, len: usize) -> Vec<BigRat> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigRat::one();
    let v = BigRat::from_int(v);
    for t in 0..len {
        out.push(c.clone());
        c = c * BigRat::new(i64::from(e) - t as i64, t as i64 + 1) * &v;
    }
    out
}

/// `x - y`, `x' - y'` as a linear series in `ε`.
fn linear_series<F: Field>(x: &F, xv: &F, y: &F, yv: &F, len: usize) -> Vec<F> {
    let mut s = vec![F::zero(); len];
    s[0] = x.clone() - y;
    if len > 1 {
        s[1] = xv.clone() - yv;
    }
    s
}

/// The matrix element from `[λ]` to the diagram grown by adding `order`
/// one box at a time; every prefix must be a diagram.
pub fn matrix_element_in_order<G: Ground>(
    g: &G,
    f: &ShuffleElement<G::F>,
    lam: &Partition,
    order: &[Cell],
) -> Result<G::F, Error> {
    let n = f.arity();
    if order.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} boxes for an element of arity {n}",
            order.len()
        )));
    }
    let mut chain = g.one();
    let mut cur = lam.clone();
    for c in order {
        if cur.row(c.row) + 1 != c.col || !cur.is_addable(c.row) {
            return Err(Error::InvalidArgument(format!(
                "box ({},{}) cannot be added to {cur}",
                c.row, c.col
            )));
        }
        chain *= &e_coeff(g, &cur, c.row, 0)?;
        cur = cur.add_box(c.row)?;
    }
    let chis: Vec<G::F> = order.iter().map(|&c| chi(g, c)).collect();
    let weights: Vec<G::F> = (0..n).map(|k| g.int(WEIGHTS[k])).collect();
    let scaled: Vec<G::F> = chis
        .iter()
        .zip(&weights)
        .map(|(x, v)| x.clone() * v)
        .collect();
    let qs = q_params(g);
    let mut kernel = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for q in &qs {
                kernel.push((a, b, q.clone()));
            }
        }
    }
    let vanishing = kernel
        .iter()
        .filter(|(a, b, q)| (chis[*a].clone() - &(q.clone() * &chis[*b])).is_zero())
        .count();
    let len = vanishing + 1;

    let mut den = vec![G::F::zero(); len];
    den[0] = g.one();
    for (a, b, q) in &kernel {
        let s = linear_series(
            &chis[*a],
            &scaled[*a],
            &(q.clone() * &chis[*b]),
            &(q.clone() * &scaled[*b]),
            len,
        );
        den = ser_mul(&den, &s);
    }

    let exps: Vec<(i32, i32)> = order.iter().map(|c| (c.chi().a, c.chi().b)).collect();
    let mut binomials: BTreeMap<(usize, i32), Vec<G::F>> = BTreeMap::new();
    let mut num = vec![G::F::zero(); len];
    for (e, c) in f.numer().terms() {
        let (mut ta, mut tb) = (0, 0);
        for k in 0..n {
            ta += e[k] * exps[k].0;
            tb += e[k] * exps[k].1;
        }
        let mut s = vec![G::F::zero(); len];
        s[0] = c.clone() * &g.mono(ta, tb);
        for k in 0..n {
            if e[k] == 0 || len == 1 {
                continue;
            }
            let bs = binomials.entry((k, e[k])).or_insert_with(|| {
                binomial_series(e[k], WEIGHTS[k], len)
                    .into_iter()
                    .map(G::F::from_rat)
                    .collect()
            });
            s = ser_mul(&s, bs);
        }
        for (x, y) in num.iter_mut().zip(s) {
            *x += &y;
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            num = ser_mul(
                &num,
                &linear_series(&chis[a], &scaled[a], &chis[b], &scaled[b], len),
            );
        }
    }
    if let Some(t) = (0..vanishing).find(|&t| !num[t].is_zero()) {
        return Err(Error::KernelPole(format!(
            "order {t} term survives a {vanishing}-fold kernel zero from {lam} along {order:?}"
        )));
    }
    Ok(num[vanishing].try_div(&den[vanishing])? * &chain)
}

/// The coefficient of `[big]` in `F [λ]`; boxes are added in row-major order.
pub fn shuffle_matrix_element<G: Ground>(
    g: &G,
    f: &ShuffleElement<G::F>,
    lam: &Partition,
    big: &Partition,
) -> Result<G::F, Error> {
    if big.size() != lam.size() + f.arity() {
        return Ok(g.zero());
    }
    match big.skew_cells(lam) {
        Some(cells) => matrix_element_in_order(g, f, lam, &cells),
        None => Ok(g.zero()),
    }
}

/// Every order of adding the boxes of `big / lam` through valid diagrams.
pub fn growth_orders(lam: &Partition, big: &Partition) -> Vec<Vec<Cell>> {
    fn grow(cur: &Partition, big: &Partition, path: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
        if cur == big {
            out.push(path.clone());
            return;
        }
        for k in cur.addable_rows() {
            if cur.row(k) < big.row(k) {
                let next = cur.add_box(k).expect("addable row");
                path.push(Cell::new(k, cur.row(k) + 1));
                grow(&next, big, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if big.contains(lam) {
        grow(lam, big, &mut Vec::new(), &mut out);
    }
    out
}

fn column<G: Ground>(
    g: &G,
    f: &ShuffleElement<G::F>,
    lam: &Partition,
) -> Result<FockVector<G::F>, Error> {
    let mut out = FockVector::zero();
    for big in partitions_of(lam.size() + f.arity()) {
        if big.contains(lam) {
            out.add_term(big.clone(), shuffle_matrix_element(g, f, lam, &big)?);
        }
    }
    Ok(out)
}

pub fn act_shuffle<G: Ground>(
    g: &G,
    f: &ShuffleElement<G::F>,
    v: &FockVector<G::F>,
) -> Result<FockVector<G::F>, Error> {
    let mut out = FockVector::zero();
    for (lam, c) in v.iter() {
        out.add_scaled(&column(g, f, lam)?, c);
    }
    Ok(out)
}

/// The action of `F` materialized on source degrees `0..=max_source`.
pub fn shuffle_operator<G: Ground>(
    g: &G,
    f: &ShuffleElement<G::F>,
    max_source: usize,
) -> Result<GradedOperator<G::F>, Error> {
    GradedOperator::from_columns(f.arity() as i32, 0..=max_source, |lam| column(g, f, lam))
}

fn first_difference<G: Ground>(
    g: &G,
    a: &GradedOperator<G::F>,
    b: &GradedOperator<G::F>,
    n_max: usize,
) -> Result<(), String> {
    if !(0..=n_max).all(|n| a.has_degree(n) && b.has_degree(n)) {
        return Err("operator not materialized on every degree".into());
    }
    match a.sub(b).entries().next() {
        None => Ok(()),
        Some((row, col, x)) => Err(format!("difference at [{row}, {col}] = {}", g.render(x))),
    }
}

/// `x^r ∈ S_1` acts as `e_r` on source diagrams of size `<= n_max`.
pub fn verify_generator_action<G: Ground>(g: &G, r: i32, n_max: usize) -> Check {
    Check::run(
        format!("generator-action[r={r},n<={n_max}]"),
        GENERATOR_ACTION,
        || {
            let err = |e: Error| e.to_string();
            let s = shuffle_operator(g, &super::generator(r), n_max).map_err(err)?;
            let e = crate::fockrep::e_operator(g, r, n_max).map_err(err)?;
            first_difference(g, &s, &e, n_max)
        },
    )
}

/// `F ∘ G = G * F` on source diagrams of size `<= n_max`.
pub fn verify_homomorphism<G: Ground>(
    g: &G,
    (f_name, f): (&str, &ShuffleElement<G::F>),
    (h_name, h): (&str, &ShuffleElement<G::F>),
    n_max: usize,
) -> Check {
    Check::run(
        format!("shuffle-hom[F={f_name},G={h_name},n<={n_max}]"),
        HOMOMORPHISM,
        || {
            let err = |e: Error| e.to_string();
            let product = star_product(g, h, f).map_err(err)?;
            let hop = shuffle_operator(g, h, n_max).map_err(err)?;
            let fop = shuffle_operator(g, f, n_max + h.arity()).map_err(err)?;
            let pop = shuffle_operator(g, &product, n_max).map_err(err)?;
            first_difference(g, &fop.compose(&hop), &pop, n_max)
        },
    )
}

/// Every valid order of adding the boxes gives the same matrix element.
pub fn verify_order_independence<G: Ground>(
    g: &G,
    (name, f): (&str, &ShuffleElement<G::F>),
    n_max: usize,
) -> Check {
    Check::run(
        format!("shuffle-order[F={name},n<={n_max}]"),
        ORDER_INDEPENDENCE,
        || {
            let pairs: Vec<(Partition, Partition)> = partitions_up_to(n_max)
                .into_iter()
                .flat_map(|lam| {
                    partitions_of(lam.size() + f.arity())
                        .into_iter()
                        .filter(|big| big.contains(&lam))
                        .map(|big| (lam.clone(), big))
                        .collect::<Vec<_>>()
                })
                .collect();
            pairs.par_iter().try_for_each(|(lam, big)| {
                let orders = growth_orders(lam, big);
                let first =
                    matrix_element_in_order(g, f, lam, &orders[0]).map_err(|e| e.to_string())?;
                for o in &orders[1..] {
                    let v = matrix_element_in_order(g, f, lam, o).map_err(|e| e.to_string())?;
                    if v != first {
                        return Err(format!(
                            "{lam} -> {big}: {} along {:?} but {} along {o:?}",
                            g.render(&first),
                            orders[0],
                            g.render(&v)
                        ));
                    }
                }
                Ok(())
            })
        },
    )
}

/// `K_m * K_n = K_n * K_m` as elements and `K_m K_n = K_n K_m` as operators
/// on source diagrams of size `<= n_max`.
pub fn verify_k_commute<G: Ground>(g: &G, m: usize, n: usize, n_max: usize) -> Vec<Check> {
    let ks = (super::k_element(g, m), super::k_element(g, n));
    let element = Check::run(
        format!("k-commute-element[m={m},n={n}]"),
        K_COMMUTE_ELEMENT,
        || {
            let (km, kn) = (
                ks.0.clone().map_err(|e| e.to_string())?,
                ks.1.clone().map_err(|e| e.to_string())?,
            );
            let a = star_product(g, &km, &kn).map_err(|e| e.to_string())?;
            let b = star_product(g, &kn, &km).map_err(|e| e.to_string())?;
            if a == b {
                Ok(())
            } else {
                Err(format!(
                    "numerators differ: {} vs {}",
                    a.to_string_with(g.names()),
                    b.to_string_with(g.names())
                ))
            }
        },
    );
    let operator = Check::run(
        format!("k-commute-operator[m={m},n={n},n<={n_max}]"),
        K_COMMUTE_OPERATOR,
        || {
            let err = |e: Error| e.to_string();
            let (km, kn) = (ks.0.clone().map_err(err)?, ks.1.clone().map_err(err)?);
            let om = shuffle_operator(g, &km, n_max + n).map_err(err)?;
            let on = shuffle_operator(g, &kn, n_max + m).map_err(err)?;
            first_difference(g, &om.compose(&on), &on.compose(&om), n_max)
        },
    );
    vec![element, operator]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;
    use crate::fockrep::apply_e;
    use crate::shufflealg::{generator, k_element};

    #[test]
    fn degree_one_generators_act_as_e() {
        let g = Exact::new();
        for r in -1..=1 {
            for lam in partitions_up_to(3) {
                let v = FockVector::basis(lam);
                assert_eq!(
                    act_shuffle(&g, &generator(r), &v).unwrap(),
                    apply_e(&g, r, &v).unwrap()
                );
            }
        }
    }

    #[test]
    fn k2_from_vacuum_to_column() {
        let g = Exact::new();
        let k2 = k_element(&g, 2).unwrap();
        let col = Partition::from([1, 1]);
        let v = shuffle_matrix_element(&g, &k2, &Partition::empty(), &col).unwrap();
        let (x1, x2) = (g.one(), g.mono(0, 1));
        let t1 = g.mono(1, 0);
        let f = (x1.clone() - &(t1.clone() * &x2)) * (x2.clone() - &(t1 * &x1));
        let mut kernel = g.one();
        for q in q_params(&g) {
            kernel *= &(x1.clone() - &(q * &x2));
        }
        let chain = e_coeff(&g, &Partition::empty(), 1, 0).unwrap()
            * e_coeff(&g, &Partition::from([1]), 2, 0).unwrap();
        let expect = (f * &(x1 - &x2)).try_div(&kernel).unwrap() * &chain;
        assert_eq!(v, expect);
    }

    #[test]
    fn invalid_order_is_rejected() {
        let g = Exact::new();
        let k2 = k_element(&g, 2).unwrap();
        let bad = [Cell::new(1, 2), Cell::new(1, 1)];
        assert!(matrix_element_in_order(&g, &k2, &Partition::empty(), &bad).is_err());
    }

    #[test]
    fn right_neighbour_kills_kernel_factor() {
        let g = Exact::new();
        let q1 = g.mono(1, 0);
        for lam in partitions_up_to(4) {
            for c in lam.cells() {
                let right = Cell::new(c.row, c.col + 1);
                assert!((chi(&g, right) - &(q1.clone() * &chi(&g, c))).is_zero());
            }
        }
    }

    #[test]
    fn growth_orders_of_a_square() {
        let sq = Partition::from([2, 2]);
        assert_eq!(growth_orders(&Partition::empty(), &sq).len(), 2);
        assert_eq!(
            growth_orders(&Partition::from([1]), &Partition::from([3])).len(),
            1
        );
    }
}
