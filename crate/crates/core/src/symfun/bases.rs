//! Rational change-of-basis tables among monomial, power-sum and elementary
//! symmetric functions.

use std::collections::BTreeMap;

use crate::exact::BigRat;
use crate::partitions::{partitions_of, Partition};

/// A combination of basis elements with rational coefficients.
pub type RatVec = BTreeMap<Partition, BigRat>;

fn add_into(v: &mut RatVec, p: Partition, c: BigRat) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(p.clone()).or_insert_with(BigRat::zero);
    *e += &c;
    if e.is_zero() {
        v.remove(&p);
    }
}

/// Ways to pour the parts of `lam` into bins of sizes `mu` exactly.
fn count_fillings(parts: &[usize], room: &mut [usize]) -> u64 {
    let Some((&first, rest)) = parts.split_first() else {
        return u64::from(room.iter().all(|&r| r == 0));
    };
    let mut total = 0;
    for j in 0..room.len() {
        if room[j] >= first {
            room[j] -= first;
            total += count_fillings(rest, room);
            room[j] += first;
        }
    }
    total
}

/// `p_λ` in the monomial basis.
pub fn power_in_monomial(lam: &Partition) -> RatVec {
    let mut out = RatVec::new();
    for mu in partitions_of(lam.size()) {
        let mut room = mu.parts().to_vec();
        let c = count_fillings(lam.parts(), &mut room);
        if c > 0 {
            out.insert(mu, BigRat::from_int(c as i64));
        }
    }
    out
}

/// 0-1 matrices with row sums `rows` and column sums `room`.
fn count_01(rows: &[usize], room: &mut [usize], start: usize, left: usize) -> u64 {
    if left == 0 {
        return match rows.split_first() {
            None => u64::from(room.iter().all(|&r| r == 0)),
            Some((&next, rest)) => count_01(rest, room, 0, next),
        };
    }
    let mut total = 0;
    for j in start..room.len() {
        if room[j] > 0 {
            room[j] -= 1;
            total += count_01(rows, room, j + 1, left - 1);
            room[j] += 1;
        }
    }
    total
}

/// `e_λ` in the monomial basis, by counting 0-1 matrices.
pub fn elementary_in_monomial(lam: &Partition) -> RatVec {
    let mut out = RatVec::new();
    for mu in partitions_of(lam.size()) {
        let mut room = mu.parts().to_vec();
        let c = match lam.parts().split_first() {
            None => 1,
            Some((&first, rest)) => count_01(rest, &mut room, 0, first),
        };
        if c > 0 {
            out.insert(mu, BigRat::from_int(c as i64));
        }
    }
    out
}

fn mul_power(a: &RatVec, b: &RatVec) -> RatVec {
    let mut out = RatVec::new();
    for (p, x) in a {
        for (q, y) in b {
            out.entry(union(p, q))
                .and_modify(|c| *c += &(x.clone() * y))
                .or_insert_with(|| x.clone() * y);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The partition with the parts of both.
pub fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted parts")
}

/// `e_1, ..., e_n` in the power-sum basis from Newton's identities
/// `k e_k = Σ_{i=1}^k (-1)^(i-1) e_{k-i} p_i`.
pub fn newton_recursion(n: usize) -> Vec<RatVec> {
    let mut es: Vec<RatVec> = vec![RatVec::from([(Partition::empty(), BigRat::one())])];
    for k in 1..=n {
        let mut acc = RatVec::new();
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let pi = RatVec::from([(Partition::from([i]), BigRat::from_int(sign))]);
            for (p, c) in mul_power(&es[k - i], &pi) {
                add_into(&mut acc, p, c);
            }
        }
        let inv = BigRat::new(1, k as i64);
        es.push(acc.into_iter().map(|(p, c)| (p, c * &inv)).collect());
    }
    es.remove(0);
    es
}

/// `e_1, ..., e_n` in the power-sum basis by expanding
/// `exp(Σ_i (-1)^(i-1) p_i z^i / i)` as a truncated series in `z`.
pub fn newton_e_from_p(n: usize) -> Vec<RatVec> {
    // series[k] is the coefficient of z^k
    let mut s: Vec<RatVec> = vec![RatVec::new(); n + 1];
    for (i, slot) in s.iter_mut().enumerate().skip(1) {
        let c = BigRat::new(if i % 2 == 1 { 1 } else { -1 }, i as i64);
        slot.insert(Partition::from([i]), c);
    }
    let mut total: Vec<RatVec> = vec![RatVec::new(); n + 1];
    total[0].insert(Partition::empty(), BigRat::one());
    let mut power = total.clone();
    for k in 1..=n {
        let mut next: Vec<RatVec> = vec![RatVec::new(); n + 1];
        for a in 0..=n {
            for b in 1..=n - a {
                if power[a].is_empty() || s[b].is_empty() {
                    continue;
                }
                for (p, c) in mul_power(&power[a], &s[b]) {
                    add_into(&mut next[a + b], p, c);
                }
            }
        }
        let inv = BigRat::new(1, k as i64);
        power = next
            .into_iter()
            .map(|v| v.into_iter().map(|(p, c)| (p, c * &inv)).collect())
            .collect();
        for (t, v) in total.iter_mut().zip(&power) {
            for (p, c) in v {
                add_into(t, p.clone(), c.clone());
            }
        }
    }
    total.remove(0);
    total
}

/// `e_λ` in the power-sum basis, as a product of single `e_r`.
pub fn elementary_in_power(lam: &Partition, singles: &[RatVec]) -> RatVec {
    let mut acc = RatVec::from([(Partition::empty(), BigRat::one())]);
    for &r in lam.parts() {
        acc = mul_power(&acc, &singles[r - 1]);
    }
    acc
}

/// Inverse of a square change-of-basis table by Gauss-Jordan elimination:
/// given `b_λ = Σ_μ T[λ][μ] a_μ`, returns `a_μ` in terms of the `b_λ`.
pub fn invert(table: &BTreeMap<Partition, RatVec>) -> BTreeMap<Partition, RatVec> {
    let keys: Vec<Partition> = table.keys().cloned().collect();
    let n = keys.len();
    let idx: BTreeMap<&Partition, usize> = keys.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // rows: b_i = Σ_j A[i][j] a_j; augment with the identity and solve for a
    let mut a = vec![vec![BigRat::zero(); 2 * n]; n];
    for (i, k) in keys.iter().enumerate() {
        for (p, c) in &table[k] {
            a[i][idx[p]] = c.clone();
        }
        a[i][n + i] = BigRat::one();
    }
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("change of basis is invertible");
        a.swap(col, piv);
        let inv = a[col][col].recip().unwrap();
        for x in a[col].iter_mut() {
            *x = x.clone() * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot) {
                    *x -= &(p.clone() * &f);
                }
            }
        }
    }
    // now a_j = Σ_i a[j][n + i] b_i
    keys.iter()
        .enumerate()
        .map(|(j, k)| {
            let row: RatVec = (0..n)
                .filter(|&i| !a[j][n + i].is_zero())
                .map(|i| (keys[i].clone(), a[j][n + i].clone()))
                .collect();
            (k.clone(), row)
        })
        .collect()
}

/// `z_λ = ∏_r r^(m_r) m_r!`, with `m_r` the multiplicity of `r` in `λ`.
pub fn z_factor(lam: &Partition) -> BigRat {
    let mut mult: BTreeMap<usize, i64> = BTreeMap::new();
    for &r in lam.parts() {
        *mult.entry(r).or_default() += 1;
    }
    let mut z = BigRat::one();
    for (r, m) in mult {
        for k in 1..=m {
            z = z * BigRat::from_int(r as i64 * k);
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(terms: &[(&[usize], i64, i64)]) -> RatVec {
        terms
            .iter()
            .map(|&(p, n, d)| (Partition::from(p), BigRat::new(n, d)))
            .collect()
    }

    #[test]
    fn small_power_sums() {
        assert_eq!(
            power_in_monomial(&Partition::from([1, 1])),
            v(&[(&[2], 1, 1), (&[1, 1], 2, 1)])
        );
        assert_eq!(
            power_in_monomial(&Partition::from([2, 1])),
            v(&[(&[3], 1, 1), (&[2, 1], 1, 1)])
        );
    }

    #[test]
    fn classical_newton() {
        let es = newton_e_from_p(2);
        assert_eq!(es[0], v(&[(&[1], 1, 1)]));
        assert_eq!(es[1], v(&[(&[1, 1], 1, 2), (&[2], -1, 2)]));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_factor(&Partition::from([1])), BigRat::one());
        assert_eq!(z_factor(&Partition::from([2])), BigRat::from_int(2));
        assert_eq!(z_factor(&Partition::from([1, 1])), BigRat::from_int(2));
        assert_eq!(z_factor(&Partition::from([2, 2, 1])), BigRat::from_int(8));
    }

    #[test]
    fn e2_in_monomials() {
        assert_eq!(
            elementary_in_monomial(&Partition::from([2])),
            v(&[(&[1, 1], 1, 1)])
        );
        assert_eq!(
            elementary_in_monomial(&Partition::from([1, 1])),
            v(&[(&[2], 1, 1), (&[1, 1], 2, 1)])
        );
    }
}
