//! Exhaustive checks of the defining relations on truncated Fock space.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::operator::GradedOperator;
use super::psi::{psi_eigenvalue, sigmas, Sign};
use super::{commutator_from, e_operator, f_operator};
use crate::exact::{Field, Ground, TruncSeries};
use crate::partitions::{chi, partitions_up_to, Cell, Partition};
use crate::report::Check;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// Cubic exchange relation among the `e_i`.
    EE,
    /// Cubic exchange relation among the `f_i`.
    FF,
    /// `[e_a, f_b]` against the `ψ±` coefficients.
    EF,
    /// `ψ±` against `e`, edge by edge.
    PsiE,
    /// `ψ±` against `f`, edge by edge.
    PsiF,
}

impl Relation {
    pub const ALL: [Relation; 5] = [
        Relation::EE,
        Relation::FF,
        Relation::EF,
        Relation::PsiE,
        Relation::PsiF,
    ];

    pub fn from_number(n: u8) -> Result<Self, Error> {
        match n {
            1 => Ok(Relation::EE),
            2 => Ok(Relation::FF),
            3 => Ok(Relation::EF),
            4 => Ok(Relation::PsiE),
            5 => Ok(Relation::PsiF),
            _ => Err(Error::InvalidArgument(format!(
                "no relation {n}; expected 1..5"
            ))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Relation::EE => 1,
            Relation::FF => 2,
            Relation::EF => 3,
            Relation::PsiE => 4,
            Relation::PsiF => 5,
        }
    }

    pub fn anchor(self) -> &'static str {
        match self {
            Relation::EE => "cubic exchange relation e(z)e(w)",
            Relation::FF => "cubic exchange relation f(z)f(w)",
            Relation::EF => "commutator [e(z),f(w)] as delta times psi+ - psi-",
            Relation::PsiE => "exchange relation psi(z)e(w), edge-local form",
            Relation::PsiF => "exchange relation psi(z)f(w), edge-local form",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelationParams {
    pub i_range: RangeInclusive<i32>,
    pub j_range: RangeInclusive<i32>,
    /// Largest source diagram for the operator relations; largest target
    /// diagram of an edge for the edge-local ones.
    pub n_max: usize,
    pub series_order: usize,
}

type OpCache<F> = BTreeMap<i32, GradedOperator<F>>;

fn build_ops<G: Ground>(
    g: &G,
    modes: &BTreeSet<i32>,
    raising: bool,
    max_source: usize,
) -> Result<OpCache<G::F>, Error> {
    modes
        .par_iter()
        .map(|&r| {
            let op = if raising {
                e_operator(g, r, max_source)
            } else {
                f_operator(g, r, max_source)
            }?;
            Ok((r, op))
        })
        .collect()
}

fn first_nonzero<G: Ground>(g: &G, op: &GradedOperator<G::F>) -> Option<String> {
    op.entries()
        .next()
        .map(|(row, col, x)| format!("[{row}, {col}] = {}", g.render(x)))
}

/// Builds `Σ c · X_a X_b` from the cached compositions.
fn combine<F: Field>(
    comps: &BTreeMap<(i32, i32), GradedOperator<F>>,
    terms: &[(F, (i32, i32))],
) -> GradedOperator<F> {
    let refs: Vec<(F, &GradedOperator<F>)> =
        terms.iter().map(|(c, k)| (c.clone(), &comps[k])).collect();
    GradedOperator::linear_combination(&refs)
}

/// Terms of `LHS - RHS` of the cubic exchange relation as `(coeff, (a, b))`,
/// where `(a, b)` stands for the composition `X_a X_b` (apply `X_b` first).
fn exchange_terms<F: Field>(s: &[F; 3], rel: Relation, i: i32, j: i32) -> Vec<(F, (i32, i32))> {
    let [s1, s2, s3] = s.clone();
    let one = F::one();
    match rel {
        Relation::EE => vec![
            (one.clone(), (i + 3, j)),
            (-s1.clone(), (i + 2, j + 1)),
            (s2.clone(), (i + 1, j + 2)),
            (-s3.clone(), (i, j + 3)),
            (-s3, (j, i + 3)),
            (s2, (j + 1, i + 2)),
            (-s1, (j + 2, i + 1)),
            (one, (j + 3, i)),
        ],
        Relation::FF => vec![
            (one.clone(), (i, j + 3)),
            (-s1.clone(), (i + 1, j + 2)),
            (s2.clone(), (i + 2, j + 1)),
            (-s3.clone(), (i + 3, j)),
            (-s3, (j + 3, i)),
            (s2, (j + 2, i + 1)),
            (-s1, (j + 1, i + 2)),
            (one, (j, i + 3)),
        ],
        _ => unreachable!(),
    }
}

fn verify_exchange<G: Ground>(
    g: &G,
    rel: Relation,
    p: &RelationParams,
) -> Result<Vec<Check>, Error> {
    let s = sigmas(g);
    let pairs: Vec<(i32, i32)> = p
        .i_range
        .clone()
        .flat_map(|i| p.j_range.clone().map(move |j| (i, j)))
        .collect();
    let mut comps_needed = BTreeSet::new();
    for &(i, j) in &pairs {
        for (_, k) in exchange_terms(&s, rel, i, j) {
            comps_needed.insert(k);
        }
    }
    let modes: BTreeSet<i32> = comps_needed.iter().flat_map(|&(a, b)| [a, b]).collect();
    let raising = rel == Relation::EE;
    let max_source = if raising { p.n_max + 1 } else { p.n_max };
    let ops = build_ops(g, &modes, raising, max_source)?;
    let comps: BTreeMap<(i32, i32), GradedOperator<G::F>> = comps_needed
        .par_iter()
        .map(|&(a, b)| ((a, b), ops[&a].compose(&ops[&b])))
        .collect();
    Ok(pairs
        .par_iter()
        .map(|&(i, j)| {
            Check::run(
                format!("relation{}[i={i},j={j},n<={}]", rel.number(), p.n_max),
                rel.anchor(),
                || {
                    let diff = combine(&comps, &exchange_terms(&s, rel, i, j));
                    let covered = (0..=p.n_max).all(|n| diff.has_degree(n));
                    if !covered {
                        return Err("composition not materialized on every degree".into());
                    }
                    match first_nonzero(g, &diff) {
                        None => Ok(()),
                        Some(w) => Err(format!("LHS-RHS nonzero at {w}")),
                    }
                },
            )
        })
        .collect())
}

fn verify_commutators<G: Ground>(g: &G, p: &RelationParams) -> Result<Vec<Check>, Error> {
    let a_modes: BTreeSet<i32> = p.i_range.clone().collect();
    let b_modes: BTreeSet<i32> = p.j_range.clone().collect();
    let es = build_ops(g, &a_modes, true, p.n_max)?;
    let fs = build_ops(g, &b_modes, false, p.n_max + 1)?;
    let pairs: Vec<(i32, i32)> = a_modes
        .iter()
        .flat_map(|&a| b_modes.iter().map(move |&b| (a, b)))
        .collect();
    Ok(pairs
        .par_iter()
        .map(|&(a, b)| {
            Check::run(
                format!("relation3[a={a},b={b},n<={}]", p.n_max),
                Relation::EF.anchor(),
                || {
                    let r = commutator_from(g, &es[&a], &fs[&b], a + b, p.n_max)
                        .map_err(|e| e.to_string())?;
                    match r.witness {
                        None => Ok(()),
                        Some(w) => Err(w),
                    }
                },
            )
        })
        .collect())
}

/// `φ_k`: the `ψ+` coefficient of `z^-k` (zero for `k < 0`), or the `ψ-`
/// coefficient of `z^-k` (zero for `k > 0`).
fn phi<F: Field>(s: &TruncSeries<F>, sign: Sign, k: i32) -> F {
    let idx = match sign {
        Sign::Plus => k,
        Sign::Minus => -k,
    };
    if idx < 0 {
        F::zero()
    } else {
        s.coeff(idx as usize).clone()
    }
}

/// All edges `λ -> λ + k` with `|λ + k| <= n_max`, with the added box.
pub fn edges(n_max: usize) -> Vec<(Partition, Partition, Cell)> {
    let mut out = Vec::new();
    for lam in partitions_up_to(n_max.saturating_sub(1)) {
        for k in lam.addable_rows() {
            let big = lam.add_box(k).unwrap();
            out.push((lam.clone(), big, Cell::new(k, lam.row(k) + 1)));
        }
    }
    out
}

fn verify_edge_local<G: Ground>(
    g: &G,
    rel: Relation,
    p: &RelationParams,
) -> Result<Vec<Check>, Error> {
    let n = p.series_order;
    let order = n + 3;
    let [s1, s2, s3] = sigmas(g);
    let series: BTreeMap<(Partition, Sign), TruncSeries<G::F>> = partitions_up_to(p.n_max)
        .into_par_iter()
        .flat_map_iter(|lam| [(lam.clone(), Sign::Plus), (lam, Sign::Minus)])
        .map(|(lam, sign)| psi_eigenvalue(g, &lam, sign, order).map(|s| ((lam, sign), s)))
        .collect::<Result<_, _>>()?;
    let es = edges(p.n_max);
    let checks = [Sign::Plus, Sign::Minus]
        .par_iter()
        .map(|&sign| {
            let tag = match sign {
                Sign::Plus => "+",
                Sign::Minus => "-",
            };
            let range: Vec<i32> = match sign {
                Sign::Plus => (-3..=n as i32).collect(),
                Sign::Minus => (-(n as i32) - 3..=0).collect(),
            };
            Check::run(
                format!(
                    "relation{}[psi{tag},edges<={},order={n}]",
                    rel.number(),
                    p.n_max
                ),
                rel.anchor(),
                || {
                    for (lam, big, cell) in &es {
                        let x = chi(g, *cell);
                        let x2 = x.clone() * &x;
                        let x3 = x2.clone() * &x;
                        let small = &series[&(lam.clone(), sign)];
                        let large = &series[&(big.clone(), sign)];
                        for &i in &range {
                            let (lhs, rhs) = match rel {
                                Relation::PsiE => {
                                    let f = |k| phi(large, sign, k);
                                    let h = |k| phi(small, sign, k);
                                    (
                                        f(i + 3) - &(s1.clone() * &x * &f(i + 2))
                                            + &(s2.clone() * &x2 * &f(i + 1))
                                            - &(s3.clone() * &x3 * &f(i)),
                                        s3.clone() * &h(i + 3) - &(s2.clone() * &x * &h(i + 2))
                                            + &(s1.clone() * &x2 * &h(i + 1))
                                            - &(x3.clone() * &h(i)),
                                    )
                                }
                                _ => {
                                    let f = |k| phi(small, sign, k);
                                    let h = |k| phi(large, sign, k);
                                    (
                                        x3.clone() * &f(i) - &(s1.clone() * &x2 * &f(i + 1))
                                            + &(s2.clone() * &x * &f(i + 2))
                                            - &(s3.clone() * &f(i + 3)),
                                        -(h(i + 3) - &(s1.clone() * &x * &h(i + 2))
                                            + &(s2.clone() * &x2 * &h(i + 1))
                                            - &(s3.clone() * &x3 * &h(i))),
                                    )
                                }
                            };
                            if lhs != rhs {
                                return Err(format!(
                                    "edge {lam} -> {big}, index {i}: {} vs {}",
                                    g.render(&lhs),
                                    g.render(&rhs)
                                ));
                            }
                        }
                    }
                    Ok(())
                },
            )
        })
        .collect();
    Ok(checks)
}

/// Checks `ψ(z)|_{λ+□} = ψ(z)|_λ · R(χ(□) z^-1)` as truncated series.
pub fn verify_psi_recursion<G: Ground>(g: &G, n_max: usize, order: usize) -> Vec<Check> {
    [Sign::Plus, Sign::Minus]
        .par_iter()
        .map(|&sign| {
            let tag = match sign {
                Sign::Plus => "+",
                Sign::Minus => "-",
            };
            Check::run(
                format!("psi-edge-ratio[psi{tag},edges<={n_max},order={order}]"),
                "one-box ratio of psi eigenvalues",
                || {
                    for (lam, big, cell) in edges(n_max) {
                        let e = |x: Error| x.to_string();
                        let a = psi_eigenvalue(g, &big, sign, order).map_err(e)?;
                        let b = psi_eigenvalue(g, &lam, sign, order).map_err(e)?;
                        let r =
                            super::psi::psi_edge_ratio(g, &chi(g, cell), sign, order).map_err(e)?;
                        if a != b.mul(&r) {
                            return Err(format!("edge {lam} -> {big}"));
                        }
                    }
                    Ok(())
                },
            )
        })
        .collect()
}

pub fn verify_relation<G: Ground>(
    g: &G,
    rel: Relation,
    p: &RelationParams,
) -> Result<Vec<Check>, Error> {
    match rel {
        Relation::EE | Relation::FF => verify_exchange(g, rel, p),
        Relation::EF => verify_commutators(g, p),
        Relation::PsiE | Relation::PsiF => verify_edge_local(g, rel, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;
    use crate::report::all_passed;

    fn params(n_max: usize) -> RelationParams {
        RelationParams {
            i_range: 0..=0,
            j_range: 0..=0,
            n_max,
            series_order: 8,
        }
    }

    #[test]
    fn small_instances() {
        let g = Exact::new();
        for rel in Relation::ALL {
            let checks = verify_relation(&g, rel, &params(3)).unwrap();
            assert!(all_passed(&checks), "{rel:?}: {:?}", checks);
        }
    }

    #[test]
    fn ratio_recursion_on_first_edge() {
        let g = Exact::new();
        assert!(all_passed(&verify_psi_recursion(&g, 1, 8)));
    }

    #[test]
    fn relation_numbers_round_trip() {
        for rel in Relation::ALL {
            assert_eq!(Relation::from_number(rel.number()).unwrap(), rel);
        }
        assert!(Relation::from_number(6).is_err());
    }
}
