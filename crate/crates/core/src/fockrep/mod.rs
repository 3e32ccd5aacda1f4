//! The Ding-Iohara algebra acting on the fixed-point basis `[λ]`.

pub mod coeffs;
pub mod gamma;
pub mod operator;
pub mod oracles;
pub mod psi;
pub mod relations;

use std::collections::BTreeMap;

use serde_json::{json, Value};

pub use coeffs::{e_coeff, e_coeff_alt, f_coeff, f_coeff_alt};
pub use gamma::{gamma, gamma_corner_hole, gamma_one_closed, gamma_row_product};
pub use operator::{FockVector, GradedOperator};
pub use oracles::{verify_coefficient_oracles, verify_gamma};
pub use psi::{d_const, psi_eigenvalue, q_params, sigmas, Sign};

use crate::exact::{Field, Ground, TruncSeries};
use crate::partitions::{partitions_up_to, Partition};
use crate::Error;

pub fn apply_e<G: Ground>(g: &G, r: i32, v: &FockVector<G::F>) -> Result<FockVector<G::F>, Error> {
    let mut out = FockVector::zero();
    for (lam, c) in v.iter() {
        for k in lam.addable_rows() {
            out.add_term(lam.add_box(k)?, e_coeff(g, lam, k, r)? * c);
        }
    }
    Ok(out)
}

pub fn apply_f<G: Ground>(g: &G, r: i32, v: &FockVector<G::F>) -> Result<FockVector<G::F>, Error> {
    let mut out = FockVector::zero();
    for (lam, c) in v.iter() {
        for k in lam.removable_rows() {
            out.add_term(lam.remove_box(k)?, f_coeff(g, lam, k, r)? * c);
        }
    }
    Ok(out)
}

/// `e_r` materialized on source degrees `0..=max_source`.
pub fn e_operator<G: Ground>(
    g: &G,
    r: i32,
    max_source: usize,
) -> Result<GradedOperator<G::F>, Error> {
    GradedOperator::from_columns(1, 0..=max_source, |lam| {
        apply_e(g, r, &FockVector::basis(lam.clone()))
    })
}

/// `f_r` materialized on source degrees `0..=max_source`.
pub fn f_operator<G: Ground>(
    g: &G,
    r: i32,
    max_source: usize,
) -> Result<GradedOperator<G::F>, Error> {
    GradedOperator::from_columns(-1, 0..=max_source, |lam| {
        apply_f(g, r, &FockVector::basis(lam.clone()))
    })
}

/// The diagonal action of `ψ±(z)`, one truncated series per diagram.
#[derive(Clone, Debug)]
pub struct DiagSeriesOperator<F> {
    pub sign: Sign,
    pub eigen: BTreeMap<Partition, TruncSeries<F>>,
}

pub fn psi_operator<G: Ground>(
    g: &G,
    sign: Sign,
    order: usize,
    max_size: usize,
) -> Result<DiagSeriesOperator<G::F>, Error> {
    let eigen = partitions_up_to(max_size)
        .into_iter()
        .map(|p| psi_eigenvalue(g, &p, sign, order).map(|s| (p, s)))
        .collect::<Result<_, _>>()?;
    Ok(DiagSeriesOperator { sign, eigen })
}

impl<F: Field> DiagSeriesOperator<F> {
    pub fn to_json<G: Ground<F = F>>(&self, g: &G) -> Value {
        let eigen: serde_json::Map<String, Value> = self
            .eigen
            .iter()
            .map(|(p, s)| {
                let cs: Vec<String> = s.coeffs().iter().map(|c| g.render(c)).collect();
                (p.to_string(), json!(cs))
            })
            .collect();
        json!({
            "sign": match self.sign { Sign::Plus => "+", Sign::Minus => "-" },
            "eigen": eigen,
        })
    }
}

/// The value `[e_a, f_b]` must take on `[λ]`, read off the `ψ±` series.
pub fn expected_commutator<G: Ground>(g: &G, lam: &Partition, s: i32) -> Result<G::F, Error> {
    let d = d_const(g);
    let n = s.unsigned_abs() as usize;
    let plus = psi_eigenvalue(g, lam, Sign::Plus, n)?;
    let minus = psi_eigenvalue(g, lam, Sign::Minus, n)?;
    let v = match s.signum() {
        1 => plus.coeff(n).clone(),
        -1 => -minus.coeff(n).clone(),
        _ => plus.coeff(0).clone() - minus.coeff(0),
    };
    v.try_div(&d)
}

/// Outcome of a blockwise commutator computation.
#[derive(Clone, Debug)]
pub struct CommutatorResult<F> {
    pub eigen: BTreeMap<Partition, F>,
    /// First off-diagonal entry or eigenvalue mismatch, if any.
    pub witness: Option<String>,
}

/// `[e_a, f_b] = e_a f_b - f_b e_a` on every source degree `<= n_max`.
pub fn commutator_ef<G: Ground>(
    g: &G,
    a: i32,
    b: i32,
    n_max: usize,
) -> Result<CommutatorResult<G::F>, Error> {
    let e = e_operator(g, a, n_max)?;
    let f = f_operator(g, b, n_max + 1)?;
    commutator_from(g, &e, &f, a + b, n_max)
}

pub(crate) fn commutator_from<G: Ground>(
    g: &G,
    e: &GradedOperator<G::F>,
    f: &GradedOperator<G::F>,
    s: i32,
    n_max: usize,
) -> Result<CommutatorResult<G::F>, Error> {
    let c = e.compose(f).sub(&f.compose(e));
    let mut eigen = BTreeMap::new();
    let mut witness = None;
    for lam in partitions_up_to(n_max) {
        let col = c
            .column(&lam)
            .ok_or_else(|| Error::InvalidArgument(format!("commutator missing on {lam}")))?;
        for (row, x) in col.iter() {
            if *row != lam && witness.is_none() {
                witness = Some(format!(
                    "off-diagonal entry [{row}, {lam}] = {}",
                    g.render(x)
                ));
            }
        }
        let ev = col.coeff(&lam);
        let expect = expected_commutator(g, &lam, s)?;
        if ev != expect && witness.is_none() {
            witness = Some(format!(
                "eigenvalue on {lam}: {} but the series gives {}",
                g.render(&ev),
                g.render(&expect)
            ));
        }
        eigen.insert(lam, ev);
    }
    Ok(CommutatorResult { eigen, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;

    #[test]
    fn vector_actions() {
        let g = Exact::new();
        let vac = FockVector::basis(Partition::empty());
        let v = apply_e(&g, 0, &vac).unwrap();
        assert_eq!(v, FockVector::single(Partition::from([1]), g.box_weight()));
        let w = apply_f(&g, 1, &FockVector::basis(Partition::from([1]))).unwrap();
        assert_eq!(w, vac);
        assert!(apply_f(&g, 0, &vac).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_commutators() {
        let g = Exact::new();
        let r = commutator_ef(&g, 0, 0, 3).unwrap();
        assert!(r.witness.is_none(), "{:?}", r.witness);
        for ev in r.eigen.values() {
            assert_eq!(*ev, -g.box_weight());
        }
        let r = commutator_ef(&g, 0, 1, 3).unwrap();
        assert!(r.witness.is_none(), "{:?}", r.witness);
        for (lam, ev) in &r.eigen {
            assert_eq!(*ev, gamma_one_closed(&g, lam));
        }
        let r = commutator_ef(&g, 1, -1, 3).unwrap();
        assert!(r.witness.is_none(), "{:?}", r.witness);
    }

    #[test]
    fn block_json_shape() {
        let g = Exact::new();
        let e = e_operator(&g, 0, 2).unwrap();
        let b = e.block_json(&g, 2).unwrap();
        assert_eq!(b["rows"].as_array().unwrap().len(), 3);
        assert_eq!(b["cols"].as_array().unwrap().len(), 2);
        assert_eq!(b["matrix"][2][0], "0");
    }
}
