//! Bivariate polynomial GCD over the integers by primitive polynomial
//! remainder sequences.
//!
//! Polynomials are handled recursively as elements of `Z[t2][t1]`: a dense
//! vector (indexed by the `t1` degree) of dense univariate integer
//! polynomials in `t2`. The same primitive PRS is used one level down for the
//! contents in `Z[t2]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bigrat::{denominator_lcm, BigRat};
use super::laurent::{LaurentPoly2, Mono};

/// Dense polynomial in one variable, lowest degree first, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Dense polynomial in `t1` with `UPoly` coefficients, no trailing zeros.
type BPoly = Vec<UPoly>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_deg(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(&mut out);
    out
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_int(p: &UPoly, c: &BigInt) -> UPoly {
    p.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
fn u_primitive(p: &UPoly) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_int(p, &c)
}

/// Pseudo-remainder of `a` by `b` (both nonzero).
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = u_deg(b);
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_empty() && u_deg(&r) >= db {
        let dr = u_deg(&r);
        let lr = r.last().unwrap().clone();
        let mut next: UPoly = r.iter().map(|x| x * &lb).collect();
        for (i, y) in b.iter().enumerate() {
            next[i + dr - db] -= &lr * y;
        }
        u_trim(&mut next);
        r = next;
    }
    r
}

/// GCD in `Z[x]`, normalized to positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive_keep_content(b);
    }
    if b.is_empty() {
        return u_primitive_keep_content(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if u_deg(&x) < u_deg(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if u_deg(&y) == 0 {
            return vec![c];
        }
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    x.iter().map(|v| v * &c).collect()
}

fn u_primitive_keep_content(p: &UPoly) -> UPoly {
    if p.last().is_some_and(|c| c.is_negative()) {
        p.iter().map(|x| -x).collect()
    } else {
        p.clone()
    }
}

/// Exact division in `Z[x]`; panics if not exact (callers divide by a known factor).
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let db = u_deg(b);
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        let dr = u_deg(&r);
        assert!(dr >= db, "inexact univariate division");
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "inexact univariate division");
        for (i, y) in b.iter().enumerate() {
            r[i + dr - db] -= &qc * y;
        }
        q[dr - db] = qc;
        u_trim(&mut r);
    }
    u_trim(&mut q);
    q
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn b_deg(p: &BPoly) -> usize {
    p.len().saturating_sub(1)
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_u(p: &BPoly, c: &UPoly) -> BPoly {
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    p.iter().map(|x| u_div_exact(x, c)).collect()
}

/// Primitive part over `Z[t2]`, sign-normalized.
fn b_primitive(p: &BPoly) -> BPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = b_content(p);
    if p.last().unwrap().last().unwrap().is_negative() {
        c = c.iter().map(|x| -x).collect();
    }
    b_div_u(p, &c)
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b_deg(b);
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_empty() && b_deg(&r) >= db {
        let dr = b_deg(&r);
        let lr = r.last().unwrap().clone();
        let mut next: BPoly = r.iter().map(|x| u_mul(x, &lb)).collect();
        for (i, y) in b.iter().enumerate() {
            let t = u_mul(&lr, y);
            next[i + dr - db] = u_sub(&next[i + dr - db], &t);
        }
        b_trim(&mut next);
        r = next;
    }
    r
}

fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    let ca = b_content(a);
    let cb = b_content(b);
    let c = u_gcd(&ca, &cb);
    let (mut x, mut y) = (b_div_u(a, &ca), b_div_u(b, &cb));
    if b_deg(&x) < b_deg(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if b_deg(&y) == 0 {
            return vec![c];
        }
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive(&r);
    }
    x.iter().map(|u| u_mul(u, &c)).collect()
}

fn sym_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn u_norm(p: &UPoly) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn u_eval(p: &UPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn b_eval(p: &BPoly, x: &BigInt) -> UPoly {
    let mut acc: UPoly = Vec::new();
    for c in p.iter().rev() {
        let n = acc.len().max(c.len());
        acc.resize(n, BigInt::zero());
        for v in acc.iter_mut() {
            *v *= x;
        }
        for (v, y) in acc.iter_mut().zip(c) {
            *v += y;
        }
        u_trim(&mut acc);
    }
    acc
}

/// Balanced `xi`-adic digits of an integer, lowest first.
fn int_interp(mut h: BigInt, xi: &BigInt) -> UPoly {
    let mut out = Vec::new();
    while !h.is_zero() {
        let c = sym_mod(&h, xi);
        h = (h - &c) / xi;
        out.push(c);
    }
    out
}

fn u_interp(mut h: UPoly, xi: &BigInt) -> BPoly {
    let mut out = Vec::new();
    while !h.is_empty() {
        let mut c: UPoly = h.iter().map(|x| sym_mod(x, xi)).collect();
        for (x, y) in h.iter_mut().zip(&c) {
            *x = (&*x - y) / xi;
        }
        u_trim(&mut h);
        u_trim(&mut c);
        out.push(c);
    }
    out
}

fn u_try_div(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    let db = u_deg(b);
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        let dr = u_deg(&r);
        if dr < db {
            return None;
        }
        let (qc, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            r[i + dr - db] -= &qc * y;
        }
        q[dr - db] = qc;
        u_trim(&mut r);
    }
    u_trim(&mut q);
    Some(q)
}

fn b_try_div(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    let db = b_deg(b);
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![Vec::new(); a.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        let dr = b_deg(&r);
        if dr < db {
            return None;
        }
        let qc = u_try_div(r.last().unwrap(), lb)?;
        for (i, y) in b.iter().enumerate() {
            r[i + dr - db] = u_sub(&r[i + dr - db], &u_mul(&qc, y));
        }
        q[dr - db] = qc;
        b_trim(&mut r);
    }
    b_trim(&mut q);
    Some(q)
}

fn heu_start(na: &BigInt, nb: &BigInt) -> BigInt {
    na.min(nb) * 2 + 29
}

fn heu_next(xi: &BigInt) -> BigInt {
    xi * 73794 / 27011
}

const HEU_TRIES: usize = 6;

/// Heuristic GCD in `Z[x]`: integer gcd of values at a large point, read
/// back in balanced `xi`-adic digits and confirmed by exact division.
fn u_heu(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let (ca, cb) = (u_content(a), u_content(b));
    let c = ca.gcd(&cb);
    let a = u_div_int(a, &ca);
    let b = u_div_int(b, &cb);
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![c]);
    }
    let mut xi = heu_start(&u_norm(&a), &u_norm(&b));
    for _ in 0..HEU_TRIES {
        let (va, vb) = (u_eval(&a, &xi), u_eval(&b, &xi));
        if !va.is_zero() && !vb.is_zero() {
            let h = u_primitive(&int_interp(va.gcd(&vb), &xi));
            if !h.is_empty() && u_try_div(&a, &h).is_some() && u_try_div(&b, &h).is_some() {
                return Some(h.iter().map(|x| x * &c).collect());
            }
        }
        xi = heu_next(&xi);
    }
    None
}

/// The bivariate analogue: evaluate `t1` at a large point, take the
/// univariate gcd in `t2`, and interpolate back.
fn b_heu(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    let int_content = |p: &BPoly| {
        let mut g = BigInt::zero();
        for c in p.iter().flatten() {
            g = g.gcd(c);
        }
        g
    };
    let norm = |p: &BPoly| p.iter().map(u_norm).max().unwrap_or_default();
    let (ca, cb) = (int_content(a), int_content(b));
    let c = ca.gcd(&cb);
    let a: BPoly = a.iter().map(|u| u_div_int(u, &ca)).collect();
    let b: BPoly = b.iter().map(|u| u_div_int(u, &cb)).collect();
    let mut xi = heu_start(&norm(&a), &norm(&b));
    for _ in 0..HEU_TRIES {
        let (va, vb) = (b_eval(&a, &xi), b_eval(&b, &xi));
        if !va.is_empty() && !vb.is_empty() {
            let h = u_interp(u_heu(&va, &vb)?, &xi);
            if !h.is_empty() {
                let hc = int_content(&h);
                let hc = if h.last().unwrap().last().unwrap().is_negative() {
                    -hc
                } else {
                    hc
                };
                let h: BPoly = h.iter().map(|u| u_div_int(u, &hc)).collect();
                if b_try_div(&a, &h).is_some() && b_try_div(&b, &h).is_some() {
                    return Some(
                        h.iter()
                            .map(|u| u.iter().map(|x| x * &c).collect())
                            .collect(),
                    );
                }
            }
        }
        xi = heu_next(&xi);
    }
    None
}

/// Integer-scaled copy of a polynomial (no negative exponents) in recursive form.
fn to_bpoly(p: &LaurentPoly2) -> BPoly {
    let l = denominator_lcm(p.terms().iter().map(|(_, c)| c));
    let mx = p.max_exponents();
    let mut out: BPoly = vec![vec![BigInt::zero(); mx.b as usize + 1]; mx.a as usize + 1];
    for (m, c) in p.terms() {
        debug_assert!(m.a >= 0 && m.b >= 0);
        out[m.a as usize][m.b as usize] = c.numer() * (&l / c.denom());
    }
    for u in out.iter_mut() {
        u_trim(u);
    }
    b_trim(&mut out);
    out
}

fn from_bpoly(p: &BPoly) -> LaurentPoly2 {
    let mut terms = Vec::new();
    for (a, u) in p.iter().enumerate() {
        for (b, c) in u.iter().enumerate() {
            if !c.is_zero() {
                terms.push((
                    Mono::new(a as i32, b as i32),
                    BigRat::from_bigint(c.clone()),
                ));
            }
        }
    }
    LaurentPoly2::from_terms(terms)
}

/// Greatest common divisor of two Laurent polynomials, ignoring monomial
/// factors (which are units in the Laurent ring).
///
/// The result is a genuine polynomial with no monomial content, primitive
/// integer coefficients and positive leading coefficient in grlex order.
/// `gcd(0, 0)` is `1` by convention here.
pub fn gcd(p: &LaurentPoly2, q: &LaurentPoly2) -> LaurentPoly2 {
    if p.is_zero() && q.is_zero() {
        return LaurentPoly2::one();
    }
    if p.is_zero() {
        return normalize_content(q);
    }
    if q.is_zero() {
        return normalize_content(p);
    }
    if p.len() == 1 || q.len() == 1 {
        return LaurentPoly2::one();
    }
    let ps = p.shift(p.min_exponents().inv());
    let qs = q.shift(q.min_exponents().inv());
    if ps == qs {
        return normalize_content(&ps);
    }
    let (a, b) = (to_bpoly(&ps), to_bpoly(&qs));
    let g = b_heu(&a, &b).unwrap_or_else(|| b_gcd(&a, &b));
    normalize_content(&from_bpoly(&g))
}

/// Strips monomial content and scales to a primitive integer polynomial with
/// positive leading coefficient. Returns `(normalized, factor)` with
/// `p = factor * normalized`, where `factor` is a rational times a monomial.
pub fn primitive_split(p: &LaurentPoly2) -> (LaurentPoly2, BigRat, Mono) {
    assert!(!p.is_zero());
    let m = p.min_exponents();
    let shifted = p.shift(m.inv());
    let l = denominator_lcm(shifted.terms().iter().map(|(_, c)| c));
    let mut g = BigInt::zero();
    for (_, c) in shifted.terms() {
        g = g.gcd(&(c.numer() * (&l / c.denom())));
    }
    let mut scale = BigRat::from_bigint(g) / BigRat::from_bigint(l);
    if shifted.leading().unwrap().1.is_negative() {
        scale = -scale;
    }
    let norm = shifted.scale(&scale.recip().unwrap());
    (norm, scale, m)
}

fn normalize_content(p: &LaurentPoly2) -> LaurentPoly2 {
    primitive_split(p).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(
            terms
                .iter()
                .map(|&(c, a, b)| (Mono::new(a, b), BigRat::from_int(c))),
        )
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let f = p(&[(1, 0, 0), (-1, 1, 1)]); // 1 - t1 t2
        let g = p(&[(1, 0, 0), (-1, 1, 0)]); // 1 - t1
        let h = p(&[(2, 0, 2), (3, 1, 0)]); // 2 t2^2 + 3 t1
        let a = &(&f * &g) * &g;
        let b = &(&f * &g) * &h;
        let d = gcd(&a, &b);
        let expect = normalize_content(&(&f * &g));
        assert_eq!(d, expect);
    }

    #[test]
    fn coprime_is_one() {
        let a = p(&[(1, 0, 0), (-1, 1, 0)]);
        let b = p(&[(1, 0, 0), (-1, 0, 1)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn monomial_content_ignored() {
        let f = p(&[(1, 0, 0), (-1, 1, 0)]);
        let a = f.shift(Mono::new(-2, 3));
        let b = f.shift(Mono::new(5, 0)).scale(&BigRat::new(-3, 7));
        assert_eq!(gcd(&a, &b), normalize_content(&f));
    }

    #[test]
    fn integer_content_in_t2() {
        // (t2^2 - 1)(t1 + 1) and (t2 - 1)(t1 - 2)
        let a = &p(&[(1, 0, 2), (-1, 0, 0)]) * &p(&[(1, 1, 0), (1, 0, 0)]);
        let b = &p(&[(1, 0, 1), (-1, 0, 0)]) * &p(&[(1, 1, 0), (-2, 0, 0)]);
        assert_eq!(gcd(&a, &b), p(&[(1, 0, 1), (-1, 0, 0)]));
    }

    #[test]
    fn heuristic_matches_remainder_sequence() {
        let f = p(&[(1, 0, 0), (-1, 2, 1)]);
        let g = p(&[(3, 0, 0), (-1, 1, 0), (5, 0, 3)]);
        let h = p(&[(1, 0, 0), (-1, 0, 1)]);
        let k = p(&[(-7, 1, 1), (2, 3, 0), (1, 0, 0)]);
        let a = to_bpoly(&(&(&f * &g) * &(&h * &h)));
        let b = to_bpoly(&(&(&f * &k) * &(&h * &g)));
        let heu = b_heu(&a, &b).expect("heuristic succeeds");
        assert_eq!(from_bpoly(&heu), from_bpoly(&b_gcd(&a, &b)));
        assert_eq!(
            normalize_content(&from_bpoly(&heu)),
            normalize_content(&(&(&f * &g) * &h))
        );
    }
}
