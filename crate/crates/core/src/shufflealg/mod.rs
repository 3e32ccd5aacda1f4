//! The shuffle algebra: symmetric numerators over the squared Vandermonde,
//! the kernel star product, the commuting family `K_n` and the wheel test.

pub mod action;

use rayon::prelude::*;

pub use action::{
    act_shuffle, growth_orders, matrix_element_in_order, shuffle_matrix_element, shuffle_operator,
    verify_generator_action, verify_homomorphism, verify_k_commute, verify_order_independence,
};

use crate::exact::mpoly::MAX_VARS;
use crate::exact::{Field, Ground, MPoly};
use crate::fockrep::q_params;
use crate::report::Check;
use crate::Error;

pub const ASSOCIATIVITY: &str = "associativity of the shuffle product";
pub const WHEEL: &str = "wheel condition on products of degree-one generators";

/// An element `f / ∏_{i<j} (x_i - x_j)^2` of arity `n`, stored by its
/// symmetric numerator `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShuffleElement<F> {
    numer: MPoly<F>,
}

impl<F: Field> ShuffleElement<F> {
    pub fn new(numer: MPoly<F>) -> Result<Self, Error> {
        if !numer.is_symmetric() {
            return Err(Error::Consistency(
                "shuffle numerator is not symmetric".into(),
            ));
        }
        Ok(ShuffleElement { numer })
    }

    /// The unit of the algebra, in arity zero.
    pub fn unit() -> Self {
        ShuffleElement {
            numer: MPoly::one(0),
        }
    }

    pub fn arity(&self) -> usize {
        self.numer.nvars()
    }

    pub fn numer(&self) -> &MPoly<F> {
        &self.numer
    }

    pub fn to_string_with(&self, names: [&str; 2]) -> String {
        format!(
            "arity {}: {}",
            self.arity(),
            self.numer.to_string_with(names)
        )
    }
}

/// The degree-one generator `x^r`.
pub fn generator<F: Field>(r: i32) -> ShuffleElement<F> {
    ShuffleElement {
        numer: MPoly::var_pow(1, 0, r),
    }
}

/// `K_n`, with numerator `∏_{i<j} (z_i - t1 z_j)(z_j - t1 z_i)`.
pub fn k_element<G: Ground>(g: &G, n: usize) -> Result<ShuffleElement<G::F>, Error> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::InvalidArgument(format!(
            "K_n needs 1 <= n <= {MAX_VARS}, got {n}"
        )));
    }
    let q1 = g.mono(1, 0);
    let mut p = MPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            p = p.mul_linear(i, j, &q1).mul_linear(j, i, &q1);
        }
    }
    ShuffleElement::new(p)
}

fn vandermonde<F: Field>(nvars: usize, lo: usize, hi: usize) -> MPoly<F> {
    let mut p = MPoly::one(nvars);
    for i in lo..hi {
        for j in i + 1..hi {
            p = p.mul_linear(i, j, &F::one());
        }
    }
    p
}

/// The `(m, n)`-shuffles as permutations `k -> sig[k]`: the first `m`
/// variables go to the chosen positions, the rest to the others in order.
fn shuffles(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn choose(
        start: usize,
        total: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            let mut sig = cur.clone();
            sig.extend((0..total).filter(|k| !cur.contains(k)));
            out.push(sig);
            return;
        }
        for k in start..=total - left {
            cur.push(k);
            choose(k + 1, total, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    choose(0, m + n, m, &mut Vec::new(), &mut out);
    out
}

fn parity(sig: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..sig.len() {
        for j in i + 1..sig.len() {
            if sig[i] > sig[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// `F * G`: the sum over shuffles of `F(x') G(x'') ∏ λ(x'_i, x''_j)`.
///
/// Over the common denominator `∏ (x_i - x_j)^3` the summand numerators
/// alternate, so the new numerator is their signed sum divided by one
/// Vandermonde factor.
pub fn star_product<G: Ground>(
    g: &G,
    f: &ShuffleElement<G::F>,
    h: &ShuffleElement<G::F>,
) -> Result<ShuffleElement<G::F>, Error> {
    let (m, n) = (f.arity(), h.arity());
    if m == 0 {
        return Ok(h.scaled(&f.numer.coeff(&[])));
    }
    if n == 0 {
        return Ok(f.scaled(&h.numer.coeff(&[])));
    }
    let total = m + n;
    if total > MAX_VARS {
        return Err(Error::InvalidArgument(format!(
            "arity {total} exceeds {MAX_VARS}"
        )));
    }
    let mut p = f
        .numer
        .embed(total, 0)
        .mul(&h.numer.embed(total, m))
        .mul(&vandermonde(total, 0, m))
        .mul(&vandermonde(total, m, total));
    let qs = q_params(g);
    for i in 0..m {
        for j in m..total {
            for q in &qs {
                p = p.mul_linear(i, j, q);
            }
        }
    }
    let mut sum = shuffles(m, n)
        .par_iter()
        .map(|sig| {
            let t = p.permute(sig);
            if parity(sig) {
                t.neg()
            } else {
                t
            }
        })
        .reduce(|| MPoly::zero(total), |a, b| a.add(&b));
    for i in 0..total {
        for j in i + 1..total {
            sum = sum.divide_by_difference(i, j).map_err(|_| {
                Error::Consistency(format!(
                    "alternating sum not divisible by x{} - x{}",
                    i + 1,
                    j + 1
                ))
            })?;
        }
    }
    ShuffleElement::new(sum)
}

impl<F: Field> ShuffleElement<F> {
    fn scaled(&self, c: &F) -> Self {
        ShuffleElement {
            numer: self.numer.scale(c),
        }
    }
}

/// Whether the numerator vanishes on `(x1, x2, x3) = (q1 qj s, qj s, s)` for
/// `j = 2, 3`, with `s` and the remaining variables free.
pub fn wheel_check<G: Ground>(g: &G, f: &ShuffleElement<G::F>) -> Result<bool, Error> {
    let n = f.arity();
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "the wheel condition needs arity >= 3, got {n}"
        )));
    }
    for qj in [(0, 1), (-1, -1)] {
        let sub = f.numer.map_terms(n - 2, |e| {
            let mut ne = [0; MAX_VARS];
            ne[0] = e[0] + e[1] + e[2];
            ne[1..n - 2].copy_from_slice(&e[3..n]);
            let a = e[0] + (e[0] + e[1]) * qj.0;
            let b = (e[0] + e[1]) * qj.1;
            (ne, g.mono(a, b))
        });
        if !sub.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(a * b) * c = a * (b * c)` for every ordered triple of `gens`.
pub fn verify_associativity<G: Ground>(
    g: &G,
    gens: &[(String, ShuffleElement<G::F>)],
) -> Vec<Check> {
    let mut triples = Vec::new();
    for a in gens {
        for b in gens {
            for c in gens {
                triples.push((a, b, c));
            }
        }
    }
    triples
        .par_iter()
        .map(|((na, a), (nb, b), (nc, c))| {
            Check::run(
                format!("associativity[{na},{nb},{nc}]"),
                ASSOCIATIVITY,
                || {
                    let err = |e: Error| e.to_string();
                    let left =
                        star_product(g, &star_product(g, a, b).map_err(err)?, c).map_err(err)?;
                    let right =
                        star_product(g, a, &star_product(g, b, c).map_err(err)?).map_err(err)?;
                    if left == right {
                        Ok(())
                    } else {
                        Err(format!(
                            "{} vs {}",
                            left.to_string_with(g.names()),
                            right.to_string_with(g.names())
                        ))
                    }
                },
            )
        })
        .collect()
}

/// The wheel condition for `x^a * x^b * x^c` over all ordered triples of exponents.
pub fn verify_wheel<G: Ground>(g: &G, exps: &[i32]) -> Vec<Check> {
    let mut triples = Vec::new();
    for &a in exps {
        for &b in exps {
            for &c in exps {
                triples.push((a, b, c));
            }
        }
    }
    triples
        .par_iter()
        .map(|&(a, b, c)| {
            Check::run(format!("wheel[x^{a}*x^{b}*x^{c}]"), WHEEL, || {
                let err = |e: Error| e.to_string();
                let ab = star_product(g, &generator(a), &generator(b)).map_err(err)?;
                let abc = star_product(g, &ab, &generator(c)).map_err(err)?;
                match wheel_check(g, &abc).map_err(err)? {
                    true => Ok(()),
                    false => Err("numerator does not vanish on the wheel".into()),
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;
    use crate::fockrep::sigmas;

    #[test]
    fn product_of_two_units() {
        let g = Exact::new();
        let one = generator(0);
        let p = star_product(&g, &one, &one).unwrap();
        let [s1, s2, _] = sigmas(&g);
        let expect = MPoly::from_terms(
            2,
            [
                ([2, 0, 0, 0, 0, 0, 0, 0], g.int(2)),
                ([0, 2, 0, 0, 0, 0, 0, 0], g.int(2)),
                ([1, 1, 0, 0, 0, 0, 0, 0], g.int(2) - &s1 - &s2),
            ],
        );
        assert_eq!(p.numer(), &expect);
    }

    #[test]
    fn unit_is_neutral() {
        let g = Exact::new();
        let k2 = k_element(&g, 2).unwrap();
        let u = ShuffleElement::unit();
        assert_eq!(star_product(&g, &u, &k2).unwrap(), k2);
        assert_eq!(star_product(&g, &k2, &u).unwrap(), k2);
    }

    #[test]
    fn small_k_elements() {
        let g = Exact::new();
        assert_eq!(k_element(&g, 1).unwrap().numer(), &MPoly::one(1));
        let t1 = g.mono(1, 0);
        let k2 = MPoly::linear(2, 0, 1, &t1).mul(&MPoly::linear(2, 1, 0, &t1));
        assert_eq!(k_element(&g, 2).unwrap().numer(), &k2);
        assert!(k_element(&g, 0).is_err());
    }

    #[test]
    fn asymmetric_numerator_rejected() {
        let p = MPoly::<crate::exact::RatFun2>::var_pow(2, 0, 1);
        assert!(ShuffleElement::new(p).is_err());
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(2, 3).len(), 10);
        assert_eq!(shuffles(1, 1), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn wheel_on_generated_and_constant() {
        let g = Exact::new();
        let one = generator(0);
        let two = star_product(&g, &one, &one).unwrap();
        let three = star_product(&g, &two, &one).unwrap();
        assert!(wheel_check(&g, &three).unwrap());
        let constant =
            ShuffleElement::new(vandermonde(3, 0, 3).mul(&vandermonde(3, 0, 3))).unwrap();
        assert!(!wheel_check(&g, &constant).unwrap());
    }
}
