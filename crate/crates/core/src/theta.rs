//! The bridge to Macdonald polynomials: the normalized fixed-point basis
//! `<λ> = c_λ [λ]`, the renormalized family `K̃_n`, and the positive half of
//! the Heisenberg algebra.
//!
//! Operators live over a ground in `(t1, t2)` mode; symmetric functions over
//! its `(q, t)` twin, compared after `q -> t1`, `t -> 1/t2`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::exact::{Field, Ground};
use crate::fockrep::{e_coeff, FockVector, GradedOperator};
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::report::{ensure, Check};
use crate::shufflealg::{k_element, shuffle_operator};
use crate::symfun::{pieri_coeff, pieri_single_box, Basis, BasisTables, MacdonaldTable, SymFun};
use crate::Error;

pub const C_RATIO: &str = "ratio of normalization constants across an edge";
pub const SINGLE_BOX: &str = "(1-t1)(1-t2) K_1 on an edge equals the single-box Pieri coefficient";
pub const STRIP: &str = "renormalized K_n equals the vertical-strip Pieri coefficient";
pub const HEISENBERG_COMMUTE: &str = "Heisenberg generators commute";
pub const INTERTWINING: &str = "Heisenberg generators act as power-sum multiplication";

/// `c_λ` for every diagram up to a size bound.
#[derive(Clone, Debug)]
pub struct Normalization<F> {
    values: BTreeMap<Partition, F>,
}

impl<F: Field> Normalization<F> {
    pub fn new<G: Ground<F = F>>(g: &G, max_size: usize) -> Self {
        let values = partitions_up_to(max_size)
            .into_par_iter()
            .map(|lam| {
                let c = c_norm(g, &lam);
                (lam, c)
            })
            .collect();
        Normalization { values }
    }

    pub fn get(&self, lam: &Partition) -> Result<&F, Error> {
        self.values
            .get(lam)
            .ok_or_else(|| Error::InvalidArgument(format!("no normalization stored for {lam}")))
    }
}

/// `c_λ = (-t2/(1-t2))^(-|λ|) t1^(Σ λ_i(λ_i-1)/2) ∏_□ (1 - t1^l t2^(-a-1))^(-1)`.
pub fn c_norm<G: Ground>(g: &G, lam: &Partition) -> G::F {
    let step = -(g
        .one_minus(0, 1)
        .try_div(&g.mono(0, 1))
        .expect("t2 is nonzero"));
    let mut v = step.powi(lam.size() as i32).expect("nonzero base");
    v *= &g.mono(lam.n_conj() as i32, 0);
    for c in lam.cells() {
        let l = lam.leg(c).expect("cell of lam") as i32;
        let a = lam.arm(c).expect("cell of lam") as i32;
        v = v
            .try_div(&g.one_minus(l, -a - 1))
            .expect("box factors never vanish");
    }
    v
}

/// The closed form of `c_{λ+j} / c_λ`: `(1-t2)` times a product over the
/// rows below `j` and one over the rows above it. The rows below telescope
/// once they are empty.
pub fn c_ratio_closed<G: Ground>(g: &G, lam: &Partition, j: usize) -> Result<G::F, Error> {
    if !lam.is_addable(j) {
        return Err(Error::InvalidRow(j, "addable"));
    }
    let lj = lam.row(j) as i32;
    let mut v = g.one_minus(0, 1);
    let stop = lam.len().max(j) + 1;
    for i in j + 1..stop {
        let a = lam.row(i) as i32 - lj;
        let d = (i - j) as i32;
        v *= &g.one_minus(a, d + 1).try_div(&g.one_minus(a, d))?;
    }
    v = v.try_div(&g.one_minus(-lj, (stop - j) as i32))?;
    for i in 1..j {
        let a = lam.row(i) as i32 - lj - 1;
        let d = i as i32 - j as i32;
        v *= &g.one_minus(a, d).try_div(&g.one_minus(a, d - 1))?;
    }
    Ok(v)
}

/// `d_n = (-t1)^(n-1) / ((1-t1)(1-t2))`.
pub fn d_factor<G: Ground>(g: &G, n: usize) -> G::F {
    let sign = if n % 2 == 1 { g.one() } else { -g.one() };
    (sign * g.mono(n as i32 - 1, 0))
        .try_div(&(g.one_minus(1, 0) * g.one_minus(0, 1)))
        .expect("nonzero denominator")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisTag {
    FixedPoint,
    Normalized,
}

/// A graded operator together with the basis its matrix is written in.
#[derive(Clone, Debug)]
pub struct NormalizedOperator<F> {
    pub basis: BasisTag,
    pub op: GradedOperator<F>,
}

impl<F: Field> NormalizedOperator<F> {
    /// Rewrites a fixed-point matrix in the normalized basis:
    /// `O<μ,λ> = O[μ,λ] c_source / c_target`.
    pub fn from_fixed_point(op: &GradedOperator<F>, c: &Normalization<F>) -> Result<Self, Error> {
        for (row, col, _) in op.entries() {
            c.get(row)?;
            c.get(col)?;
        }
        let op = op.map_entries(|row, col, x| {
            (x.clone() * &c.values[col])
                .try_div(&c.values[row])
                .expect("normalizations never vanish")
        });
        Ok(NormalizedOperator {
            basis: BasisTag::Normalized,
            op,
        })
    }
}

/// `K̃_n = K_n / (d_1 ... d_n)` in the normalized basis, on source diagrams
/// of size `<= max_source`.
pub fn k_tilde<G: Ground>(
    g: &G,
    n: usize,
    max_source: usize,
    c: &Normalization<G::F>,
) -> Result<NormalizedOperator<G::F>, Error> {
    let k = shuffle_operator(g, &k_element(g, n)?, max_source)?;
    let mut scale = g.one();
    for i in 1..=n {
        scale = scale.try_div(&d_factor(g, i))?;
    }
    let mut out = NormalizedOperator::from_fixed_point(&k, c)?;
    out.op = out.op.map_entries(|_, _, x| x.clone() * &scale);
    Ok(out)
}

/// `𝔥_1, ..., 𝔥_i` from `log(1 + Σ K̃_n z^n)` through Newton's identities
/// `𝔥_k = Σ_{n<k} (-1)^(n-1) K̃_n 𝔥_{k-n} + (-1)^(k-1) k K̃_k`, each on source
/// diagrams of size `<= max_source`.
pub fn heisenberg_plus<G: Ground>(
    g: &G,
    i: usize,
    max_source: usize,
) -> Result<Vec<NormalizedOperator<G::F>>, Error> {
    if i == 0 {
        return Err(Error::InvalidArgument(
            "Heisenberg index starts at 1".into(),
        ));
    }
    let c = Normalization::new(g, max_source + i);
    // K̃_n is needed on sources up to max_source + i - n
    let ks: Vec<GradedOperator<G::F>> = (1..=i)
        .map(|n| k_tilde(g, n, max_source + i - n, &c).map(|o| o.op))
        .collect::<Result<_, _>>()?;
    let mut hs: Vec<GradedOperator<G::F>> = Vec::new();
    for k in 1..=i {
        let sign = |n: usize| if n % 2 == 1 { g.one() } else { -g.one() };
        let mut terms: Vec<(G::F, GradedOperator<G::F>)> = (1..k)
            .map(|n| (sign(n), ks[n - 1].compose(&hs[k - n - 1])))
            .collect();
        terms.push((sign(k) * g.int(k as i64), ks[k - 1].clone()));
        let refs: Vec<(G::F, &GradedOperator<G::F>)> =
            terms.iter().map(|(x, o)| (x.clone(), o)).collect();
        hs.push(GradedOperator::linear_combination(&refs));
    }
    Ok(hs
        .into_iter()
        .map(|op| NormalizedOperator {
            basis: BasisTag::Normalized,
            op: restrict(&op, max_source),
        })
        .collect())
}

fn restrict<F: Field>(op: &GradedOperator<F>, max_source: usize) -> GradedOperator<F> {
    GradedOperator::from_columns(op.shift(), op.degrees().filter(|&n| n <= max_source), |p| {
        Ok(op.column(p).cloned().unwrap_or_default())
    })
    .expect("columns are copied")
}

/// `c_{λ+j} / c_λ` against its closed form on every edge with `|λ| < max_size`.
pub fn verify_c_ratio<G: Ground>(g: &G, max_size: usize) -> Check {
    Check::run(format!("c-ratio[n<={max_size}]"), C_RATIO, || {
        let c = Normalization::new(g, max_size);
        for lam in partitions_up_to(max_size.saturating_sub(1)) {
            for j in lam.addable_rows() {
                let big = lam.add_box(j).map_err(|e| e.to_string())?;
                let ratio = c.get(&big).unwrap().try_div(c.get(&lam).unwrap());
                let closed = c_ratio_closed(g, &lam, j).map_err(|e| e.to_string())?;
                ensure(ratio.as_ref() == Ok(&closed), || {
                    format!(
                        "lambda={lam}, j={j}: {} vs {}",
                        ratio.map(|r| g.render(&r)).unwrap_or_default(),
                        g.render(&closed)
                    )
                })?;
            }
        }
        Ok(())
    })
}

/// `(1-t1)(1-t2) K_1<λ,λ+j>` against the specialized single-box Pieri
/// coefficient on every edge ending in a diagram of size `<= max_size`.
pub fn verify_single_box<G: Ground>(g: &G, max_size: usize) -> Check {
    Check::run(format!("single-box[n<={max_size}]"), SINGLE_BOX, || {
        let gq = g.qt();
        let c = Normalization::new(g, max_size);
        let scale = g.one_minus(1, 0) * g.one_minus(0, 1);
        for lam in partitions_up_to(max_size.saturating_sub(1)) {
            for j in lam.addable_rows() {
                let err = |e: Error| e.to_string();
                let big = lam.add_box(j).map_err(err)?;
                let fixed = e_coeff(g, &lam, j, 0).map_err(err)?;
                let lhs = (scale.clone() * fixed * c.get(&lam).unwrap())
                    .try_div(c.get(&big).unwrap())
                    .map_err(err)?;
                let rhs = g.specialize_qt(&pieri_single_box(&gq, &lam, j).map_err(err)?);
                ensure(lhs == rhs, || {
                    format!(
                        "lambda={lam}, j={j}: {} vs {}",
                        g.render(&lhs),
                        g.render(&rhs)
                    )
                })?;
            }
        }
        Ok(())
    })
}

/// Every matrix element `K̃_n<μ,λ>` with `|λ| <= max_size` against the
/// specialized `ψ_{λ/μ}`, which also fixes the zero pattern.
pub fn verify_theta<G: Ground>(g: &G, n: usize, max_size: usize) -> Check {
    Check::run(format!("strip[n={n},size<={max_size}]"), STRIP, || {
        let err = |e: Error| e.to_string();
        ensure(n >= 1 && n <= max_size, || {
            format!("need 1 <= n <= {max_size}")
        })?;
        let gq = g.qt();
        let c = Normalization::new(g, max_size);
        let k = k_tilde(g, n, max_size - n, &c).map_err(err)?;
        let pairs: Vec<(Partition, Partition)> = partitions_up_to(max_size - n)
            .into_iter()
            .flat_map(|mu| {
                partitions_of(mu.size() + n)
                    .into_iter()
                    .map(move |lam| (mu.clone(), lam))
            })
            .collect();
        pairs.par_iter().try_for_each(|(mu, lam)| {
            let lhs = k.op.entry(lam, mu);
            let rhs = g.specialize_qt(&pieri_coeff(&gq, lam, mu));
            ensure(lhs == rhs, || {
                format!(
                    "mu={mu}, lambda={lam}: {} vs {}",
                    g.render(&lhs),
                    g.render(&rhs)
                )
            })
        })
    })
}

/// `[𝔥_i, 𝔥_j] = 0` for `1 <= i < j <= i_max` on sources of size `<= max_source`.
pub fn verify_heisenberg_commute<G: Ground>(g: &G, i_max: usize, max_source: usize) -> Vec<Check> {
    let hs = match heisenberg_plus(g, i_max, max_source + i_max) {
        Ok(hs) => hs,
        Err(e) => {
            return vec![Check::run(
                format!("heisenberg-commute[i<={i_max},n<={max_source}]"),
                HEISENBERG_COMMUTE,
                || Err(e.to_string()),
            )]
        }
    };
    let mut pairs = Vec::new();
    for i in 1..=i_max {
        for j in i + 1..=i_max {
            pairs.push((i, j));
        }
    }
    pairs
        .par_iter()
        .map(|&(i, j)| {
            Check::run(
                format!("heisenberg-commute[{i},{j},n<={max_source}]"),
                HEISENBERG_COMMUTE,
                || {
                    let (a, b) = (&hs[i - 1].op, &hs[j - 1].op);
                    let diff = restrict(&a.compose(b).sub(&b.compose(a)), max_source);
                    for n in 0..=max_source {
                        ensure(diff.has_degree(n), || {
                            format!("degree {n} not materialized")
                        })?;
                    }
                    let bad = diff
                        .entries()
                        .find(|(_, _, x)| !x.is_zero())
                        .map(|(row, col, x)| format!("entry [{row}, {col}] = {}", g.render(x)));
                    bad.map_or(Ok(()), Err)
                },
            )
        })
        .collect()
}

/// The matrix of `p_i ·` in the Macdonald basis, on sources of size
/// `<= table.degree() - i`.
pub fn power_multiplication<G: Ground>(
    gq: &G,
    tables: &BasisTables,
    table: &MacdonaldTable<G::F>,
    i: usize,
) -> Result<BTreeMap<Partition, SymFun<G::F>>, Error> {
    let top = table.degree().checked_sub(i).ok_or_else(|| {
        Error::InvalidArgument(format!("p_{i} exceeds the table degree {}", table.degree()))
    })?;
    let pi = SymFun::single(Basis::Power, Partition::from([i]), gq.one());
    partitions_up_to(top)
        .into_par_iter()
        .map(|lam| {
            let prod = tables.mul(&pi, &table.poly(&lam)?)?;
            let m = tables.convert(&prod, Basis::Monomial)?;
            Ok((lam, table.to_macdonald(&m)?))
        })
        .collect()
}

/// `𝔥_i<μ,λ> = s · ψ` against the specialized `p_i`-multiplication matrix on
/// every pair with `|μ| + i <= table.degree()`, for one common scalar `s`,
/// which is reported.
pub fn verify_intertwining<G: Ground>(
    g: &G,
    tables: &BasisTables,
    table: &MacdonaldTable<G::F>,
    i: usize,
) -> Check {
    let degree = table.degree();
    let mut scalar: Option<G::F> = None;
    let check = Check::run(
        format!("intertwining[i={i},size<={degree}]"),
        INTERTWINING,
        || {
            let err = |e: Error| e.to_string();
            let top = degree
                .checked_sub(i)
                .ok_or("index exceeds the table degree")?;
            let gq = g.qt();
            let h = heisenberg_plus(g, i, top).map_err(err)?.pop().unwrap().op;
            let mult = power_multiplication(&gq, tables, table, i).map_err(err)?;
            for (mu, image) in &mult {
                let col = h.column(mu).cloned().unwrap_or_else(FockVector::zero);
                for lam in partitions_of(mu.size() + i) {
                    let lhs = col.coeff(&lam);
                    let rhs = g.specialize_qt(&image.coeff(&lam));
                    if lhs.is_zero() || rhs.is_zero() {
                        ensure(lhs.is_zero() && rhs.is_zero(), || {
                            format!(
                                "mu={mu}, lambda={lam}: {} vs {}",
                                g.render(&lhs),
                                g.render(&rhs)
                            )
                        })?;
                        continue;
                    }
                    let s = lhs.try_div(&rhs).map_err(err)?;
                    match &scalar {
                        None => scalar = Some(s),
                        Some(s0) => ensure(*s0 == s, || {
                            format!(
                                "mu={mu}, lambda={lam}: ratio {} differs from {}",
                                g.render(&s),
                                g.render(s0)
                            )
                        })?,
                    }
                }
            }
            ensure(scalar.is_some(), || "no nonzero entries compared".into())
        },
    );
    match &scalar {
        Some(s) if check.passed() => {
            let note = format!("scalar={}", g.render(s));
            check.with_note(note)
        }
        _ => check,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;

    fn p(x: &[usize]) -> Partition {
        Partition::from(x)
    }

    #[test]
    fn small_normalizations() {
        let g = Exact::new();
        assert!(c_norm(&g, &Partition::empty()).is_one());
        assert!(c_norm(&g, &p(&[1])).is_one());
        let expect = -(g.mono(1, 0) * g.one_minus(0, 1))
            .try_div(&(g.mono(0, 1) - g.mono(1, 0)))
            .unwrap();
        assert_eq!(c_norm(&g, &p(&[2])), expect);
    }

    #[test]
    fn closed_ratio_examples() {
        let g = Exact::new();
        assert!(c_ratio_closed(&g, &Partition::empty(), 1).unwrap().is_one());
        for (lam, j) in [(p(&[1]), 1), (p(&[1]), 2), (p(&[2, 1]), 2), (p(&[2, 1]), 3)] {
            let big = lam.add_box(j).unwrap();
            let direct = c_norm(&g, &big).try_div(&c_norm(&g, &lam)).unwrap();
            assert_eq!(c_ratio_closed(&g, &lam, j).unwrap(), direct);
        }
        assert!(c_ratio_closed(&g, &p(&[1]), 3).is_err());
    }

    #[test]
    fn d_factors() {
        let g = Exact::new();
        let base = g.one_minus(1, 0) * g.one_minus(0, 1);
        assert_eq!(d_factor(&g, 1), g.one().try_div(&base).unwrap());
        assert_eq!(d_factor(&g, 2), (-g.mono(1, 0)).try_div(&base).unwrap());
    }

    #[test]
    fn first_k_tilde_entry() {
        let g = Exact::new();
        let c = Normalization::new(&g, 2);
        let k = k_tilde(&g, 1, 1, &c).unwrap();
        assert!(k.op.entry(&p(&[1]), &Partition::empty()).is_one());
    }

    #[test]
    fn specialization_example() {
        let g = Exact::new();
        let x = g.one_minus(1, 0).try_div(&g.one_minus(0, 1)).unwrap();
        let expect = -(g.mono(0, 1) * g.one_minus(1, 0))
            .try_div(&g.one_minus(0, 1))
            .unwrap();
        assert_eq!(g.specialize_qt(&x), expect);
    }

    #[test]
    fn low_heisenberg_generators() {
        let g = Exact::new();
        let c = Normalization::new(&g, 6);
        let hs = heisenberg_plus(&g, 2, 2).unwrap();
        let k1 = k_tilde(&g, 1, 3, &c).unwrap().op;
        let k2 = k_tilde(&g, 2, 2, &c).unwrap().op;
        let two = g.int(2);
        let expect =
            GradedOperator::linear_combination(&[(g.one(), &k1.compose(&k1)), (-two, &k2)]);
        let diff = restrict(&hs[1].op.sub(&expect), 2);
        assert!(diff.entries().all(|(_, _, x)| x.is_zero()));
        assert!(diff.has_degree(2));
    }
}
