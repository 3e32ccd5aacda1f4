//! Macdonald polynomials by Gram-Schmidt and the Pieri rule for `e_r`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{power_norm, Basis, BasisTables, SymFun};
use crate::exact::{Field, Ground};
use crate::partitions::{dominance_order, partitions_of, partitions_up_to, Partition, TieBreak};
use crate::report::{ensure, Check};
use crate::Error;

pub const ORTHOGONALITY: &str = "Macdonald polynomials: unitriangular and orthogonal";
pub const TIE_BREAK: &str = "Macdonald polynomials independent of the dominance refinement";
pub const PIERI: &str = "Pieri rule P_mu e_r = sum over vertical strips";
pub const PIERI_SINGLE: &str = "Pieri coefficient for a single box, row product form";
pub const NEWTON: &str = "generating function of e_i as exp of power sums";
pub const BASES: &str = "change of basis among m, p, e";

/// `P_λ` in the monomial basis for every `|λ| <= degree`.
#[derive(Clone, Debug)]
pub struct MacdonaldTable<F> {
    degree: usize,
    polys: BTreeMap<Partition, BTreeMap<Partition, F>>,
    /// Partitions of each degree, dominance-largest first.
    orders: Vec<Vec<Partition>>,
}

impl<F: Field> MacdonaldTable<F> {
    pub fn build<G: Ground<F = F>>(
        g: &G,
        tables: &BasisTables,
        degree: usize,
        tie: TieBreak,
    ) -> Result<Self, Error> {
        if degree > tables.degree() {
            return Err(Error::InvalidArgument(format!(
                "degree {degree} exceeds the basis tables ({})",
                tables.degree()
            )));
        }
        let orders: Vec<Vec<Partition>> = (0..=degree).map(|n| dominance_order(n, tie)).collect();
        let per_degree: Vec<BTreeMap<Partition, BTreeMap<Partition, F>>> = orders
            .par_iter()
            .map(|order| gram_schmidt(g, tables, order))
            .collect();
        Ok(MacdonaldTable {
            degree,
            polys: per_degree.into_iter().flatten().collect(),
            orders,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `P_λ` in the monomial basis.
    pub fn poly(&self, lam: &Partition) -> Result<SymFun<F>, Error> {
        let coeffs = self.polys.get(lam).ok_or_else(|| {
            Error::InvalidArgument(format!("{lam} exceeds the table degree {}", self.degree))
        })?;
        Ok(SymFun {
            basis: Basis::Monomial,
            coeffs: coeffs.clone(),
        })
    }

    /// Re-expands a monomial-basis function in the `P_λ`, peeling off the
    /// dominance-largest term each time.
    pub fn to_macdonald(&self, f: &SymFun<F>) -> Result<SymFun<F>, Error> {
        if f.basis != Basis::Monomial {
            return Err(Error::InvalidArgument("expected the monomial basis".into()));
        }
        let mut rest = f.clone();
        let mut out = SymFun::zero(Basis::Macdonald);
        for order in &self.orders {
            for lam in order {
                let c = rest.coeff(lam);
                if c.is_zero() {
                    continue;
                }
                for (mu, x) in &self.polys[lam] {
                    rest.add_term(mu.clone(), -(c.clone() * x));
                }
                out.add_term(lam.clone(), c);
            }
        }
        match rest.coeffs.keys().next() {
            None => Ok(out),
            Some(p) => Err(Error::InvalidArgument(format!(
                "{p} exceeds the table degree {}",
                self.degree
            ))),
        }
    }

    pub fn from_macdonald(&self, f: &SymFun<F>) -> Result<SymFun<F>, Error> {
        let mut out = SymFun::zero(Basis::Monomial);
        for (lam, c) in &f.coeffs {
            for (mu, x) in &self.poly(lam)?.coeffs {
                out.add_term(mu.clone(), c.clone() * x);
            }
        }
        Ok(out)
    }
}

/// Gram-Schmidt of the monomials of one degree, smallest first.
fn gram_schmidt<G: Ground>(
    g: &G,
    tables: &BasisTables,
    order: &[Partition],
) -> BTreeMap<Partition, BTreeMap<Partition, G::F>> {
    let m_in_p: Vec<SymFun<G::F>> = order
        .iter()
        .map(|l| {
            tables
                .convert(
                    &SymFun::single(Basis::Monomial, l.clone(), g.one()),
                    Basis::Power,
                )
                .expect("degree within tables")
        })
        .collect();
    let n = order.len();
    let mut gram = vec![vec![g.zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut acc = g.zero();
            for (p, x) in &m_in_p[i].coeffs {
                if let Some(y) = m_in_p[j].coeffs.get(p) {
                    acc += &(x.clone() * y * &power_norm(g, p));
                }
            }
            gram[i][j] = acc.clone();
            gram[j][i] = acc;
        }
    }
    // coefficient vectors over the monomials, indexed like `order`
    let mut ps: Vec<(Vec<G::F>, G::F)> = Vec::with_capacity(n);
    let mut out = BTreeMap::new();
    for i in (0..n).rev() {
        let mut v = vec![g.zero(); n];
        v[i] = g.one();
        for (pv, norm) in &ps {
            // (m_i, P) = Σ_k P_k (m_i, m_k)
            let mut ip = g.zero();
            for (k, c) in pv.iter().enumerate() {
                if !c.is_zero() {
                    ip += &(c.clone() * &gram[i][k]);
                }
            }
            if ip.is_zero() {
                continue;
            }
            let f = ip.try_div(norm).expect("nonzero norm");
            for (k, c) in pv.iter().enumerate() {
                if !c.is_zero() {
                    v[k] -= &(f.clone() * c);
                }
            }
        }
        let mut norm = g.zero();
        for a in 0..n {
            if v[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if !v[b].is_zero() {
                    norm += &(v[a].clone() * &v[b] * &gram[a][b]);
                }
            }
        }
        let coeffs: BTreeMap<Partition, G::F> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (order[k].clone(), c.clone()))
            .collect();
        out.insert(order[i].clone(), coeffs);
        ps.push((v, norm));
    }
    out
}

/// `ψ_{λ/μ}` of the Pieri rule for `e_r`: zero unless `λ/μ` is a vertical
/// strip, else a product over pairs of rows `i < j` with `λ_i = μ_i` and
/// `λ_j = μ_j + 1`.
pub fn pieri_coeff<G: Ground>(g: &G, lam: &Partition, mu: &Partition) -> G::F {
    let Some(rows) = lam.vertical_strip_rows(mu) else {
        return g.zero();
    };
    let mut v = g.one();
    for j in rows {
        for i in 1..j {
            if lam.row(i) != mu.row(i) {
                continue;
            }
            let a = (mu.row(i) - mu.row(j)) as i32;
            let b = (lam.row(i) - lam.row(j)) as i32;
            let d = (j - i) as i32;
            let num = g.one_minus(a, d - 1) * g.one_minus(b, d + 1);
            let den = g.one_minus(a, d) * g.one_minus(b, d);
            v *= &num.try_div(&den).expect("Pieri factors never vanish");
        }
    }
    v
}

/// `ψ_{μ+j/μ}` for adding one box in row `j`, as a product over the rows above.
pub fn pieri_single_box<G: Ground>(g: &G, mu: &Partition, j: usize) -> Result<G::F, Error> {
    if !mu.is_addable(j) {
        return Err(Error::InvalidRow(j, "addable"));
    }
    let mut v = g.one();
    for i in 1..j {
        let a = (mu.row(i) - mu.row(j)) as i32;
        let d = (j - i) as i32;
        let num = g.one_minus(a, d - 1) * g.one_minus(a - 1, d + 1);
        let den = g.one_minus(a, d) * g.one_minus(a - 1, d);
        v *= &num.try_div(&den)?;
    }
    Ok(v)
}

/// Unitriangularity and pairwise orthogonality, one check per degree.
pub fn verify_orthogonality<G: Ground>(
    g: &G,
    tables: &BasisTables,
    table: &MacdonaldTable<G::F>,
) -> Vec<Check> {
    (0..=table.degree())
        .into_par_iter()
        .map(|n| {
            Check::run(
                format!("macdonald-orthogonal[n={n}]"),
                ORTHOGONALITY,
                || {
                    let ps = partitions_of(n);
                    for lam in &ps {
                        let p = table.poly(lam).map_err(|e| e.to_string())?;
                        ensure(p.coeff(lam).is_one(), || format!("P{lam} is not monic"))?;
                        for mu in p.coeffs.keys() {
                            ensure(lam.dominates(mu), || {
                                format!("m{mu} appears in P{lam} but is not dominated")
                            })?;
                        }
                    }
                    for (i, a) in ps.iter().enumerate() {
                        for b in &ps[i + 1..] {
                            let pa = table.poly(a).map_err(|e| e.to_string())?;
                            let pb = table.poly(b).map_err(|e| e.to_string())?;
                            let ip = tables
                                .inner_product(g, &pa, &pb)
                                .map_err(|e| e.to_string())?;
                            ensure(ip.is_zero(), || format!("(P{a}, P{b}) = {}", g.render(&ip)))?;
                        }
                    }
                    Ok(())
                },
            )
        })
        .collect()
}

/// Rebuilds the table with the other refinement of dominance and compares.
pub fn verify_tie_break<G: Ground>(
    g: &G,
    tables: &BasisTables,
    table: &MacdonaldTable<G::F>,
) -> Check {
    Check::run(
        format!("macdonald-tie-break[n<={}]", table.degree()),
        TIE_BREAK,
        || {
            let other = MacdonaldTable::build(g, tables, table.degree(), TieBreak::Conjugate)
                .map_err(|e| e.to_string())?;
            for lam in partitions_up_to(table.degree()) {
                let (a, b) = (table.poly(&lam).unwrap(), other.poly(&lam).unwrap());
                ensure(a == b, || format!("P{lam} depends on the tie-break"))?;
            }
            Ok(())
        },
    )
}

/// `P_μ e_r` re-expanded in the `P_λ`, against [`pieri_coeff`], for all
/// `|μ| + r <= degree`.
pub fn verify_pieri<G: Ground>(
    g: &G,
    tables: &BasisTables,
    table: &MacdonaldTable<G::F>,
) -> Vec<Check> {
    let d = table.degree();
    let cases: Vec<(Partition, usize)> = partitions_up_to(d.saturating_sub(1))
        .into_iter()
        .flat_map(|mu| (1..=d - mu.size()).map(move |r| (mu.clone(), r)))
        .collect();
    cases
        .par_iter()
        .map(|(mu, r)| {
            Check::run(format!("pieri[mu={mu},r={r}]"), PIERI, || {
                let err = |e: Error| e.to_string();
                let pm = table.poly(mu).map_err(err)?;
                let er = SymFun::single(Basis::Elementary, Partition::from([*r]), g.one());
                let prod = tables.mul(&pm, &er).map_err(err)?;
                let prod = tables.convert(&prod, Basis::Monomial).map_err(err)?;
                let expansion = table.to_macdonald(&prod).map_err(err)?;
                for lam in partitions_of(mu.size() + r) {
                    let got = expansion.coeff(&lam);
                    let want = pieri_coeff(g, &lam, mu);
                    ensure(got == want, || {
                        format!(
                            "coefficient of P{lam}: {} but the rule gives {}",
                            g.render(&got),
                            g.render(&want)
                        )
                    })?;
                }
                Ok(())
            })
        })
        .collect()
}

/// The strip formula restricted to one box equals the row product, for all
/// `|μ + j| <= degree`.
pub fn verify_pieri_single<G: Ground>(g: &G, degree: usize) -> Check {
    Check::run(
        format!("pieri-single-box[n<={degree}]"),
        PIERI_SINGLE,
        || {
            for mu in partitions_up_to(degree.saturating_sub(1)) {
                for j in mu.addable_rows() {
                    let lam = mu.add_box(j).unwrap();
                    let a = pieri_coeff(g, &lam, &mu);
                    let b = pieri_single_box(g, &mu, j).map_err(|e| e.to_string())?;
                    ensure(a == b, || {
                        format!("{mu} + row {j}: {} vs {}", g.render(&a), g.render(&b))
                    })?;
                }
            }
            Ok(())
        },
    )
}

/// The exponential generating function against Newton's recursion.
pub fn verify_newton(degree: usize) -> Check {
    Check::run(format!("newton[n<={degree}]"), NEWTON, || {
        let a = super::newton_e_from_p(degree);
        let b = super::newton_recursion(degree);
        for (k, (x, y)) in a.iter().zip(&b).enumerate() {
            ensure(x == y, || format!("e_{} differs: {x:?} vs {y:?}", k + 1))?;
        }
        Ok(())
    })
}

/// `m`, `p` and `e` conversions compose to the identity, and `e_λ` via
/// power sums matches the direct 0-1 matrix count.
pub fn verify_bases<G: Ground>(g: &G, tables: &BasisTables) -> Check {
    Check::run(format!("bases[n<={}]", tables.degree()), BASES, || {
        let all = [Basis::Monomial, Basis::Power, Basis::Elementary];
        for lam in partitions_up_to(tables.degree()) {
            for from in all {
                let f = SymFun::single(from, lam.clone(), g.one());
                for to in all {
                    let back = tables
                        .convert(&tables.convert(&f, to).unwrap(), from)
                        .unwrap();
                    ensure(back == f, || {
                        format!("{}{lam} -> {} -> back differs", from.tag(), to.tag())
                    })?;
                }
            }
            let direct = BasisTables::elementary_monomial::<G::F>(&lam);
            let e = SymFun::single(Basis::Elementary, lam.clone(), g.one());
            let via = tables.convert(&e, Basis::Monomial).unwrap();
            ensure(direct == via, || format!("e{lam} in monomials disagrees"))?;
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Exact;

    #[test]
    fn low_degree_polynomials() {
        let g = Exact::new().qt();
        let tables = BasisTables::new(3);
        let t = MacdonaldTable::build(&g, &tables, 3, TieBreak::ReverseLex).unwrap();
        let m = |x: &[usize]| Partition::from(x);
        assert_eq!(t.poly(&m(&[1])).unwrap().coeffs.len(), 1);
        assert_eq!(t.poly(&m(&[1, 1])).unwrap().coeffs.len(), 1);
        let p2 = t.poly(&m(&[2])).unwrap();
        let c = (g.one_minus(0, 1) * (g.one() + g.mono(1, 0)))
            .try_div(&g.one_minus(1, 1))
            .unwrap();
        assert_eq!(p2.coeff(&m(&[1, 1])), c);
        assert!(p2.coeff(&m(&[2])).is_one());
    }

    #[test]
    fn pieri_examples() {
        let g = Exact::new().qt();
        let p = |x: &[usize]| Partition::from(x);
        assert!(pieri_coeff(&g, &p(&[1]), &Partition::empty()).is_one());
        let want = (g.one_minus(1, 0) * g.one_minus(0, 2))
            .try_div(&(g.one_minus(1, 1) * g.one_minus(0, 1)))
            .unwrap();
        assert_eq!(pieri_coeff(&g, &p(&[1, 1]), &p(&[1])), want);
        assert!(pieri_coeff(&g, &p(&[2]), &p(&[1])).is_one());
        assert!(pieri_coeff(&g, &p(&[3]), &p(&[1])).is_zero());
    }
}
