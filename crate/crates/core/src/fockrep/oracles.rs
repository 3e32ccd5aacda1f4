//! Cross-checks between the independent formulas for matrix coefficients
//! and for the eigenvalues `γ_s`.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::coeffs::{e_coeff, e_coeff_alt, f_coeff, f_coeff_alt};
use super::commutator_ef;
use super::gamma::{gamma_corner_hole, gamma_row_product};
use crate::exact::Ground;
use crate::partitions::partitions_up_to;
use crate::report::{ensure, Check};
use crate::Error;

pub const COEFFICIENT_ORACLES: &str = "box-product and row-product matrix coefficients agree";
pub const GAMMA: &str =
    "corner/hole and row-product eigenvalues of [e_0, f_s] agree with the action";

fn show<G: Ground>(g: &G, x: &Result<G::F, Error>) -> String {
    match x {
        Ok(v) => g.render(v),
        Err(e) => e.to_string(),
    }
}

/// Both formulas for the `e_r` and `f_r` coefficients on every edge whose
/// larger diagram has size `<= n_max`, one check per `r`.
pub fn verify_coefficient_oracles<G: Ground>(
    g: &G,
    n_max: usize,
    r_range: RangeInclusive<i32>,
) -> Vec<Check> {
    r_range
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&r| {
            Check::run(
                format!("coefficient-oracles[r={r},n<={n_max}]"),
                COEFFICIENT_ORACLES,
                || {
                    let err = |e: Error| e.to_string();
                    for lam in partitions_up_to(n_max.saturating_sub(1)) {
                        for k in lam.addable_rows() {
                            let big = lam.add_box(k).map_err(err)?;
                            let (a, b) = (e_coeff(g, &lam, k, r), e_coeff_alt(g, &big, k, r));
                            ensure(a == b, || {
                                format!(
                                    "e_{r} on {lam}, row {k}: {} vs {}",
                                    show(g, &a),
                                    show(g, &b)
                                )
                            })?;
                            let (a, b) = (f_coeff(g, &big, k, r), f_coeff_alt(g, &lam, k, r));
                            ensure(a == b, || {
                                format!(
                                    "f_{r} on {big}, row {k}: {} vs {}",
                                    show(g, &a),
                                    show(g, &b)
                                )
                            })?;
                        }
                    }
                    Ok(())
                },
            )
        })
        .collect()
}

/// `γ_s` by both closed formulas against the eigenvalue of `[e_0, f_s]` on
/// every diagram of size `<= n_max`.
pub fn verify_gamma<G: Ground>(g: &G, s: i32, n_max: usize) -> Check {
    Check::run(format!("gamma[s={s},n<={n_max}]"), GAMMA, || {
        let comm = commutator_ef(g, 0, s, n_max).map_err(|e| e.to_string())?;
        if let Some(w) = comm.witness {
            return Err(w);
        }
        for lam in partitions_up_to(n_max) {
            let a = gamma_corner_hole(g, &lam, s);
            let b = gamma_row_product(g, &lam, s);
            let c = &comm.eigen[&lam];
            ensure(a == b && a == *c, || {
                format!(
                    "{lam}: corner/hole {}, row product {}, action {}",
                    g.render(&a),
                    g.render(&b),
                    g.render(c)
                )
            })?;
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;
    use crate::report::all_passed;

    #[test]
    fn small_oracles() {
        let g = Exact::new();
        assert!(all_passed(&verify_coefficient_oracles(&g, 3, -1..=1)));
        assert!(verify_gamma(&g, 2, 3).passed());
    }
}
